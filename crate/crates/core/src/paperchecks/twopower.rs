//! The quantities `A(chi, ell)` and `B(chi, ell)` for units of order `2^r`
//! and the trace identities behind their evaluation.

use serde::Serialize;

use crate::arith::{abs_rep, additive_order};
use crate::cyclotomic::{trace_elt, trace_table, trace_zeta, CycElt};
use crate::error::{Error, Result};

/// Partial augmentations `eps_k = eps_{g_0^k}(u)` of a unit of order `2^r`,
/// stored over the representatives `0..=2^{r-1}` and read for any integer `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsSymbols {
    pub r: u32,
    values: Vec<i64>,
}

impl EpsSymbols {
    /// `values[k]` for `k = 0..=2^{r-1}`.
    pub fn new(r: u32, values: Vec<i64>) -> Result<Self> {
        if r < 3 || values.len() != (1usize << (r - 1)) + 1 {
            return Err(Error::Precondition(format!(
                "need r >= 3 and {} values",
                (1usize << (r.max(1) - 1)) + 1
            )));
        }
        Ok(EpsSymbols { r, values })
    }

    pub fn n(&self) -> u64 {
        1 << self.r
    }

    pub fn eps(&self, k: i64) -> i64 {
        self.values[abs_rep(k, self.n()) as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Whether `eps_{2^{r-2}} = 0`, the consequence of the projection to
    /// `PSL(2, q)`.
    pub fn projection_applied(&self) -> bool {
        self.values[1 << (self.r - 2)] == 0
    }
}

fn chi_twisted(n: u64, m: u64, x: i64, ell: i64) -> CycElt {
    let mut z = CycElt::zero(n);
    let m = m as i64;
    let mut j = -m;
    while j <= m {
        z.add_monomial(x * j - ell, 1);
        j += 2;
    }
    z
}

/// `B(chi_m, ell) = sum_{k=0}^{r-1} Tr_{Q(zeta_{2^k})/Q}(chi_m(g_0^{2^{r-k}}) zeta_{2^k}^{-ell})`,
/// each trace evaluated on an element of `Z[zeta_{2^r}]`.
pub fn b_quantity(r: u32, m: u64, ell: i64) -> i64 {
    let n = 1u64 << r;
    (0..r)
        .map(|k| {
            let d = 1i64 << (r - k);
            let x = chi_twisted(n, m, d, ell * d);
            trace_elt(1 << k, &x).expect("element lies in Q(zeta_{2^k})")
        })
        .sum()
}

/// `A(chi_m, ell) = sum_{k=1}^{2^{r-1}-1} eps_k Tr_{Q(zeta_{2^r})/Q}(chi_m(g_0^k) zeta_{2^r}^{-ell})`.
pub fn a_quantity(eps: &EpsSymbols, m: u64, ell: i64) -> i64 {
    let n = eps.n();
    let tr = trace_table(n);
    a_with_table(eps, &tr, m, ell)
}

fn a_with_table(eps: &EpsSymbols, tr: &[i64], m: u64, ell: i64) -> i64 {
    let n = eps.n() as i64;
    let m = m as i64;
    (1..n / 2)
        .map(|k| {
            let e = eps.eps(k);
            if e == 0 {
                return 0;
            }
            let mut s = 0;
            let mut j = -m;
            while j <= m {
                s += tr[(k * j - ell).rem_euclid(n) as usize];
                j += 2;
            }
            e * s
        })
        .sum()
}

/// Whether `(A(chi_m, ell) + B(chi_m, ell)) / 2^r` is a non-negative integer.
pub fn ab_admissible(eps: &EpsSymbols, m: u64, ell: i64) -> bool {
    let s = a_quantity(eps, m, ell) + b_quantity(eps.r, m, ell);
    s >= 0 && s % eps.n() as i64 == 0
}

/// `Tr_{Q(zeta_{2^k})/Q}((zeta_{2^k}^e + zeta_{2^k}^{-e}) zeta_{2^k}^{-ell})`.
fn pair_trace(k: u32, e: i64, ell: i64) -> i64 {
    let m = 1u64 << k;
    [e - ell, -e - ell]
        .iter()
        .map(|&x| trace_zeta(m, additive_order(x, m)).unwrap())
        .sum()
}

/// Outcome of checking one family of identities at a fixed `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub r: u32,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    fn new(name: &str, r: u32) -> Self {
        IdentityCheck { name: name.into(), r, cases: 0, failures: vec![] }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

/// The closed values of `B(chi_{2^h}, ell)`: for `2^{r-1} | ell` and
/// `0 <= h <= r-2` it is `2^{r-1}` (h >= 1) or 0 (h = 0); for `2^h | ell`,
/// `2^{r-1} !| ell`, `h <= r-3` it is `2^{r-1}` iff `ell = ±2^h (mod 2^{r-1})`.
pub fn check_b_values(r: u32) -> Vec<IdentityCheck> {
    let n = 1i64 << r;
    let half = n / 2;
    let mut at_half = IdentityCheck::new("B at multiples of 2^(r-1)", r);
    let mut off_half = IdentityCheck::new("B at multiples of 2^h off 2^(r-1)", r);
    for h in 0..=r - 2 {
        let m = 1u64 << h;
        for ell in 0..n {
            if ell % half == 0 {
                let b = b_quantity(r, m, ell);
                let expect = if h >= 1 { half } else { 0 };
                at_half.check(b == expect, || format!("h={h} ell={ell}: {b} != {expect}"));
            } else if h + 3 <= r && ell % (1 << h) == 0 {
                let b = b_quantity(r, m, ell);
                let pm = abs_rep(ell, half as u64) == abs_rep(1 << h, half as u64);
                let expect = if pm { half } else { 0 };
                off_half.check(b == expect, || format!("h={h} ell={ell}: {b} != {expect}"));
            }
        }
    }
    vec![at_half, off_half]
}

/// The trace sums used while evaluating `B(chi_{2^h}, ell)` by induction on `h`.
pub fn check_proof_identities(r: u32) -> Vec<IdentityCheck> {
    let n = 1i64 << r;
    let half = n / 2;
    let mut even_j = IdentityCheck::new("even j sums vanish at 2^(r-1) | ell", r);
    let mut even_j_twisted = IdentityCheck::new("even j < 2^(h-1) sums vanish", r);
    let mut head = IdentityCheck::new("sum over k <= h equals 2^(h+1)", r);
    let mut middle = IdentityCheck::new("terms k = h+1, h+2 equal ±2^(h+1)", r);
    let mut tail = IdentityCheck::new("sum over k >= h+3 piecewise value", r);
    let mut pair = IdentityCheck::new("Tr((zeta^k + zeta^-k) zeta^-i) values", r);
    let full = |e: i64, ell: i64, ks: std::ops::Range<u32>| -> i64 {
        ks.map(|k| pair_trace(k, e, ell)).sum()
    };
    for h in 2..=r - 2 {
        for j in (2..=1i64 << (h - 1)).step_by(2) {
            let e = (1 << (h - 1)) + j;
            for ell in [0, half] {
                let s = full(e, ell, 0..r);
                even_j.check(s == 0, || format!("h={h} j={j} ell={ell}: {s}"));
            }
        }
    }
    for h in 2..=r.saturating_sub(3) {
        for ell in (0..n).filter(|l| l % (1 << h) == 0 && l % half != 0) {
            for j in (2..1i64 << (h - 1)).step_by(2) {
                let e = (1 << (h - 1)) + j;
                let s = full(e, ell, 0..r);
                even_j_twisted.check(s == 0, || format!("h={h} j={j} ell={ell}: {s}"));
            }
        }
    }
    for h in 0..=r.saturating_sub(3) {
        let e = 1i64 << h;
        for ell in (0..n).filter(|l| l % (1 << h) == 0 && l % half != 0) {
            let s = full(e, ell, 0..h + 1);
            head.check(s == 2 * e, || format!("h={h} ell={ell}: {s}"));
            let eps = if ell % (2 * e) != 0 { 1 } else { -1 };
            let s = full(e, ell, h + 1..h + 3);
            middle.check(s == eps * 2 * e, || format!("h={h} ell={ell}: {s}"));
            let s = full(e, ell, h + 3..r);
            let expect = if ell % (2 * e) == 0 {
                0
            } else if abs_rep(ell, half as u64) == abs_rep(e, half as u64) {
                half - 4 * e
            } else {
                -4 * e
            };
            tail.check(s == expect, || format!("h={h} ell={ell}: {s} != {expect}"));
        }
    }
    // k runs over the noncentral representatives; the two cases add up
    // when they coincide at k = i = 2^{r-2}
    for k in 1..half {
        for i in 1..half {
            let s = pair_trace(r, k, i);
            let expect = half * ((k == i) as i64 - (k == half - i) as i64);
            pair.check(s == expect, || format!("k={k} i={i}: {s} != {expect}"));
        }
    }
    vec![even_j, even_j_twisted, head, middle, tail, pair]
}

/// `B(ell + 2^{r-1}) = B(ell)`, `A(ell + 2^{r-1}) = -A(ell)` and
/// `A(chi_1, i) = 2^{r-1}(eps_i - eps_{i + 2^{r-1}})` for the given vectors.
pub fn check_periodicity(r: u32, samples: &[EpsSymbols], degrees: &[u64]) -> Vec<IdentityCheck> {
    let n = 1i64 << r;
    let half = n / 2;
    let tr = trace_table(n as u64);
    let mut bp = IdentityCheck::new("B periodic mod 2^(r-1)", r);
    let mut ap = IdentityCheck::new("A antiperiodic mod 2^(r-1)", r);
    let mut a1 = IdentityCheck::new("A(chi_1, i) formula", r);
    for &m in degrees {
        for ell in 0..n {
            let (b0, b1) = (b_quantity(r, m, ell), b_quantity(r, m, ell + half));
            bp.check(b0 == b1, || format!("m={m} ell={ell}: {b0} vs {b1}"));
        }
    }
    for (s, eps) in samples.iter().enumerate() {
        let m = degrees[s % degrees.len()];
        let ell = (s as i64 * 7 + 3) % n;
        let (x, y) = (a_with_table(eps, &tr, m, ell), a_with_table(eps, &tr, m, ell + half));
        ap.check(x == -y, || format!("sample {s}, m={m} ell={ell}: {x} vs {y}"));
        let i = ell;
        let a = a_with_table(eps, &tr, 1, i);
        let expect = half * (eps.eps(i) - eps.eps(i + half));
        a1.check(a == expect, || format!("sample {s}, i={i}: {a} != {expect}"));
    }
    vec![bp, ap, a1]
}

/// Implications `B = 0 => A = 0` and `B = 2^{r-1} => A = ±2^{r-1}` for
/// `chi_{2^h}`, `0 <= h <= r-2`, at every `ell`.
pub fn check_a_given_b(eps: &EpsSymbols) -> IdentityCheck {
    let r = eps.r;
    let n = 1i64 << r;
    let half = n / 2;
    let tr = trace_table(n as u64);
    let mut c = IdentityCheck::new("A determined by B", r);
    for h in 0..=r - 2 {
        let m = 1u64 << h;
        for ell in 0..n {
            let b = b_quantity(r, m, ell);
            let a = a_with_table(eps, &tr, m, ell);
            if b == 0 {
                c.check(a == 0, || format!("h={h} ell={ell}: B=0, A={a}"));
            } else if b == half {
                c.check(a.abs() == half, || format!("h={h} ell={ell}: B={b}, A={a}"));
            }
        }
    }
    c
}
