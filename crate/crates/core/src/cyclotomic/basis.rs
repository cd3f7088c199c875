//! The distinguished residue set, the integral basis of `Z[alpha_1]` it
//! induces, and expansion of cyclotomic elements in that basis.

use std::collections::{BTreeMap, HashMap};

use super::elt::{BasisLabel, CycElt, RealElt};
use super::modulus::Modulus;
use crate::arith::{abs_rep, centered_rep, modn, moebius};
use crate::error::{Error, Result};

/// `(gamma_n(x), gamma_bar_n(x))`.
pub fn gammas(m: &Modulus, x: i64) -> (u64, u64) {
    let mut g = 1;
    let mut gb = 1;
    for &(p, v) in m.factors() {
        let np = p.pow(v);
        let a = abs_rep(x, np);
        // compare |x : n_p| with n_p / (2p) without division
        let lhs = 2 * p * a;
        if lhs < np {
            g *= p;
            gb *= p;
        } else if lhs == np {
            gb *= p;
        }
    }
    (g, gb)
}

/// `kappa_x^{(n)}`: 2 when `x = 0` or `x = n/2` modulo `n`, else 1.
pub fn kappa(n: u64, x: i64) -> i64 {
    let r = modn(x, n);
    if r == 0 || (n % 2 == 0 && r == n / 2) {
        2
    } else {
        1
    }
}

/// `x ~_n y`, i.e. `x = ±y (mod n)`.
pub fn similar(n: u64, x: i64, y: i64) -> bool {
    modn(x - y, n) == 0 || modn(x + y, n) == 0
}

/// `delta_{x,y}^{(n)}`.
pub fn delta(n: u64, x: i64, y: i64) -> i64 {
    similar(n, x, y) as i64
}

/// The canonical representative `min(|x : n|)` of the class of `x` in `Gamma_n`.
pub fn gamma_rep(n: u64, x: i64) -> u64 {
    abs_rep(x, n)
}

/// `beta_{b,x}^{(n)}`.
pub fn beta(m: &Modulus, b: i64, x: i64) -> i64 {
    if m.is_two_power() {
        return 1;
    }
    let n2 = m.part(2);
    if 4 * abs_rep(x, n2) != n2 {
        return 1;
    }
    let p0 = m.smallest_odd_prime().expect("n is not a power of two");
    let np0 = m.part(p0);
    if centered_rep(x, n2) * centered_rep(b, np0) < 0 {
        -1
    } else {
        1
    }
}

fn in_bb(m: &Modulus, x: i64) -> bool {
    let two_power = m.is_two_power();
    let p0_part = m.smallest_odd_prime().map(|p| m.part(p));
    let ok = m.factors().iter().all(|&(p, v)| {
        let np = p.pow(v);
        let a = abs_rep(x, np);
        if 2 * p * a > np {
            return true;
        }
        if p == 2 && !two_power && 4 * a == np {
            let np0 = p0_part.unwrap();
            return modn(x, np0) != 0 && centered_rep(x, np) * centered_rep(x, np0) > 0;
        }
        false
    });
    // n = n_2: the class of n/2 is dropped (alpha_{n/2} = -2 duplicates the constant)
    ok && !(two_power && modn(x, m.n()) == m.n() / 2)
}

/// The residue set, folded into basis labels, for a fixed modulus `n >= 3`.
#[derive(Debug, Clone)]
pub struct RealBasis {
    modulus: Modulus,
    residues: Vec<u64>,
    labels: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
}

impl RealBasis {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegenerateModulus(n));
        }
        let modulus = Modulus::new(n);
        let residues: Vec<u64> = (0..n).filter(|&x| in_bb(&modulus, x as i64)).collect();
        let mut labels = Vec::new();
        if modulus.is_two_power() {
            labels.push(BasisLabel::One);
        }
        for &b in &residues {
            if 2 * b <= n {
                labels.push(BasisLabel::Alpha(b));
            }
        }
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        Ok(RealBasis { modulus, residues, labels, index })
    }

    pub fn n(&self) -> u64 {
        self.modulus.n()
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    /// The residues of the distinguished set, ascending (closed under negation).
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Basis labels: `1` first when `n` is a power of two, then `alpha_b` for
    /// the class representatives `b <= n/2`, ascending.
    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn contains(&self, x: i64) -> bool {
        self.residues.binary_search(&modn(x, self.n())).is_ok()
    }

    pub fn label_of(&self, residue: u64) -> BasisLabel {
        BasisLabel::Alpha(gamma_rep(self.n(), residue as i64))
    }

    pub fn has_label(&self, label: BasisLabel) -> bool {
        self.index.contains_key(&label)
    }

    /// The basis element as a cyclotomic element.
    pub fn element(&self, label: BasisLabel) -> CycElt {
        match label {
            BasisLabel::One => CycElt::one(self.n()),
            BasisLabel::Alpha(b) => CycElt::alpha(self.n(), b as i64),
        }
    }

    /// The signed expansion `zeta^e = mu(gamma(e)) sum beta_{b,e} zeta^b` over the
    /// residues `b` with `b = e (mod n / gamma_bar(e))`. Terms are
    /// `(coefficient, residue)`; for `n` a power of two the residue 0 stands for
    /// the constant 1.
    pub fn expand_zeta(&self, e: i64) -> Result<Vec<(i64, u64)>> {
        let n = self.n();
        let m = &self.modulus;
        let r = modn(e, n);
        if m.is_two_power() {
            if r == 0 {
                return Ok(vec![(1, 0)]);
            }
            if r == n / 2 {
                return Ok(vec![(-1, 0)]);
            }
            if 4 * abs_rep(e, n) == n {
                return Err(Error::NoZetaExpansion { n, e });
            }
        }
        let (g, gb) = gammas(m, e);
        let mu = moebius(g);
        let step = n / gb;
        Ok(self
            .residues
            .iter()
            .filter(|&&b| modn(b as i64 - e, step) == 0)
            .map(|&b| (mu * beta(m, b as i64, e), b))
            .collect())
    }

    /// Coefficients of `alpha_i` in the basis.
    pub fn alpha_coeffs(&self, i: i64) -> RealElt {
        let n = self.n();
        let mut out = RealElt::zero(n);
        if self.modulus.is_two_power() && 4 * abs_rep(i, n) == n {
            // alpha_{n/4} = i + (-i) = 0
            return out;
        }
        let terms = self.expand_zeta(i).expect("expansion exists off n/4");
        for (c, b) in terms {
            if b == 0 {
                out.add_to(BasisLabel::One, 2 * c);
            } else {
                out.add_to(self.label_of(b), c);
            }
        }
        out
    }

    /// Basis coordinates of a real element, obtained from the monomial-level
    /// expansion: `2x = sum_e v_e alpha_e` for `x = sum_e v_e zeta^e`.
    pub fn expand_real(&self, x: &CycElt) -> Result<RealElt> {
        if x.n() != self.n() {
            return Err(Error::ModulusMismatch(x.n(), self.n()));
        }
        if !x.is_real() {
            return Err(Error::NotReal);
        }
        let mut doubled: BTreeMap<BasisLabel, i64> = BTreeMap::new();
        for (e, v) in x.terms() {
            for (&l, &c) in self.alpha_coeffs(e as i64).coeffs() {
                *doubled.entry(l).or_insert(0) += v * c;
            }
        }
        let mut out = BTreeMap::new();
        for (l, c) in doubled {
            if c % 2 != 0 {
                return Err(Error::NotReal);
            }
            out.insert(l, c / 2);
        }
        Ok(RealElt::from_map(self.n(), out))
    }

    /// The residue of the label's class with `b = i (mod n / gamma_bar(i))`, if any.
    pub fn signed_representative(&self, label: BasisLabel, i: i64) -> Option<u64> {
        self.class_residues(label)
            .into_iter()
            .find(|&b| modn(b as i64 - i, self.n() / gammas(&self.modulus, i).1) == 0)
    }

    fn class_residues(&self, label: BasisLabel) -> Vec<u64> {
        match label {
            BasisLabel::One => vec![],
            BasisLabel::Alpha(b) => {
                let n = self.n();
                let mut v = vec![b];
                let nb = (n - b) % n;
                if nb != b {
                    v.push(nb);
                }
                v.retain(|&r| self.contains(r as i64));
                v
            }
        }
    }

    /// Closed-form `C_label(alpha_i)` under the signed-representative
    /// convention: every residue `b` of the class with `b = i (mod n/gamma_bar(i))`
    /// contributes `mu(gamma(i)) beta_{b,i}`.
    pub fn closed_form_coeff(&self, label: BasisLabel, i: i64) -> i64 {
        let n = self.n();
        if label == BasisLabel::One {
            let r = modn(i, n);
            return if r == 0 {
                2
            } else if r == n / 2 {
                -2
            } else {
                0
            };
        }
        let (g, gb) = gammas(&self.modulus, i);
        let step = n / gb;
        self.class_residues(label)
            .into_iter()
            .filter(|&b| modn(b as i64 - i, step) == 0)
            .map(|b| moebius(g) * beta(&self.modulus, b as i64, i))
            .sum()
    }

    /// The literal product `kappa_i mu(gamma(i)) beta_{b,i} delta_{b,i}^{(n/gamma_bar(i))}`
    /// evaluated at the residue `b`.
    pub fn literal_coeff(&self, b: u64, i: i64) -> i64 {
        let n = self.n();
        let (g, gb) = gammas(&self.modulus, i);
        kappa(n, i) * moebius(g) * beta(&self.modulus, b as i64, i) * delta(n / gb, b as i64, i)
    }
}
