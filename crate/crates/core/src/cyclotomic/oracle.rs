//! Basis coordinates by exact linear algebra over the power basis, independent
//! of the closed-form expansion.

use num_traits::{ToPrimitive, Zero};

use super::basis::RealBasis;
use super::elt::{CycElt, RealElt};
use crate::arith::euler_phi;
use crate::error::{Error, Result};
use crate::linalg::{q, rref, Q};

/// A candidate family of elements of `Q(zeta_n)`, row-reduced once so that
/// many targets can be solved against it.
pub struct OracleSolver {
    n: u64,
    k: usize,
    /// Transformation `T` with `T * B` in reduced echelon form, `B` having the
    /// candidates' power-basis coordinates as columns.
    transform: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl OracleSolver {
    /// Fails with `NotABasis` when the candidates are linearly dependent.
    pub fn new(n: u64, candidates: &[CycElt]) -> Result<Self> {
        let phi = euler_phi(n) as usize;
        let k = candidates.len();
        let cols: Vec<Vec<i64>> = candidates.iter().map(|c| c.canonical()).collect();
        let mut m = vec![vec![Q::zero(); k + phi]; phi];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, col) in cols.iter().enumerate() {
                if col[i] != 0 {
                    row[j] = q(col[i]);
                }
            }
            row[k + i] = q(1);
        }
        let r = rref(m, k);
        if r.rank() < k {
            return Err(Error::NotABasis(format!(
                "{} candidates span a space of dimension {}",
                k,
                r.rank()
            )));
        }
        let transform = r.rows.into_iter().map(|row| row[k..].to_vec()).collect();
        Ok(OracleSolver { n, k, transform, pivots: r.pivots })
    }

    /// The unique rational coordinates of `target` in the candidate family.
    pub fn solve(&self, target: &CycElt) -> Result<Vec<Q>> {
        if target.n() != self.n {
            return Err(Error::ModulusMismatch(target.n(), self.n));
        }
        let t = target.canonical();
        let apply = |row: &Vec<Q>| {
            let mut acc = Q::zero();
            for (a, &b) in row.iter().zip(&t) {
                if b != 0 && !a.is_zero() {
                    acc += a * q(b);
                }
            }
            acc
        };
        let mut out = vec![Q::zero(); self.k];
        for (r, row) in self.transform.iter().enumerate() {
            let y = apply(row);
            if r < self.pivots.len() {
                out[self.pivots[r]] = y;
            } else if !y.is_zero() {
                return Err(Error::NotInSpan);
            }
        }
        Ok(out)
    }
}

fn integral(v: Vec<Q>) -> Option<Vec<i64>> {
    v.into_iter()
        .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
        .collect()
}

fn solver_for(basis: &RealBasis) -> Result<OracleSolver> {
    let cands: Vec<CycElt> = basis.labels().iter().map(|&l| basis.element(l)).collect();
    OracleSolver::new(basis.n(), &cands)
}

fn to_real(basis: &RealBasis, coords: Vec<i64>) -> RealElt {
    let mut out = RealElt::zero(basis.n());
    for (&l, c) in basis.labels().iter().zip(coords) {
        out.add_to(l, c);
    }
    out
}

/// Basis coordinates of a real element, by exact linear solve.
pub fn oracle_expand(x: &CycElt) -> Result<RealElt> {
    let basis = RealBasis::new(x.n())?;
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    let solver = solver_for(&basis)?;
    let coords = integral(solver.solve(x)?)
        .ok_or_else(|| Error::NotABasis("non-integral coordinates".into()))?;
    Ok(to_real(&basis, coords))
}

/// Certifies that the real basis is a Z-basis of `Z[alpha_1]`: the basis
/// elements are independent, their number equals `phi(n)/2`, and every
/// `alpha_i` has integral coordinates. Returns the coordinates of
/// `alpha_0, ..., alpha_{floor(n/2)}`.
pub fn certify_basis(n: u64) -> Result<Vec<RealElt>> {
    let basis = RealBasis::new(n)?;
    let expected = euler_phi(n) as usize / 2;
    if basis.labels().len() != expected {
        return Err(Error::NotABasis(format!(
            "{} labels, real subfield has degree {}",
            basis.labels().len(),
            expected
        )));
    }
    let solver = solver_for(&basis)?;
    (0..=n / 2)
        .map(|i| {
            let v = solver.solve(&CycElt::alpha(n, i as i64))?;
            let c = integral(v).ok_or_else(|| {
                Error::NotABasis(format!("alpha_{i} has non-integral coordinates"))
            })?;
            Ok(to_real(&basis, c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::BasisLabel;

    #[test]
    fn dependent_candidates_rejected() {
        let c = [CycElt::one(8), CycElt::alpha(8, 3), CycElt::alpha(8, 4)];
        assert!(matches!(OracleSolver::new(8, &c), Err(Error::NotABasis(_))));
    }

    #[test]
    fn out_of_span() {
        let s = OracleSolver::new(12, &[CycElt::alpha(12, 1)]).unwrap();
        assert_eq!(s.solve(&CycElt::one(12)), Err(Error::NotInSpan));
    }

    #[test]
    fn oracle_matches_known_values() {
        let a1 = oracle_expand(&CycElt::alpha(24, 1)).unwrap();
        assert_eq!(a1.coeff(BasisLabel::Alpha(11)), -1);
        assert_eq!(a1.coeffs().len(), 1);
        assert_eq!(oracle_expand(&CycElt::monomial(24, 1, 1)), Err(Error::NotReal));
        assert_eq!(oracle_expand(&CycElt::one(2)), Err(Error::DegenerateModulus(2)));
    }

    #[test]
    fn certificate_small() {
        for n in 3..40 {
            certify_basis(n).unwrap();
        }
    }
}
