//! The elements `lambda_x = sum_i eps_i alpha_{ix}` attached to a vector of
//! partial augmentations of a unit of order `n`.

use num_traits::Zero;

use crate::cyclotomic::{CycElt, RealBasis};
use crate::error::{Error, Result};
use crate::helpengine::PaVector;
use crate::linalg::{q, rref};

/// `lambda_x = sum_{i in Gamma_n} eps_i alpha_{ix}`.
pub fn lambda_value(eps: &PaVector, x: i64) -> CycElt {
    let n = eps.n();
    let mut z = CycElt::zero(n);
    for (i, &e) in eps.values().iter().enumerate() {
        if e != 0 {
            z.add_monomial(i as i64 * x, e);
            z.add_monomial(-(i as i64) * x, e);
        }
    }
    z
}

/// Whether `lambda_i = alpha_i` for every `i`; it suffices to test the
/// representatives `0..=n/2`, and `i = 0` encodes `sum eps = 1`.
pub fn lemma51_criterion(eps: &PaVector) -> bool {
    let n = eps.n();
    (0..=n as i64 / 2).all(|i| lambda_value(eps, i) == CycElt::alpha(n, i))
}

/// Rank of `B -> (sum_x B_x alpha_{ix})_{0 <= i <= n/2}` on `Q^{Gamma_n}`.
/// Full rank `n/2 + 1` means the criterion holds only for the identity vector.
pub fn lambda_map_rank(n: u64) -> usize {
    let reps = (n / 2 + 1) as usize;
    let cols: Vec<Vec<i64>> = (0..reps as i64)
        .map(|x| {
            (0..reps as i64)
                .flat_map(|i| CycElt::alpha(n, i * x).canonical())
                .collect()
        })
        .collect();
    let rows = cols[0].len();
    let m = (0..rows)
        .map(|r| cols.iter().map(|c| q(c[r])).collect())
        .filter(|row: &Vec<_>| row.iter().any(|v| !v.is_zero()))
        .collect();
    rref(m, reps).rank()
}

/// Given `lambda_i = alpha_i` for `1 <= i < d`, checks that every basis
/// coefficient of `lambda_d - alpha_d` is divisible by `d`.
pub fn div_check_52(eps: &PaVector, d: u64) -> Result<bool> {
    let n = eps.n();
    if d < 2 {
        return Err(Error::Precondition(format!("d = {d} must be at least 2")));
    }
    for i in 1..d as i64 {
        if lambda_value(eps, i) != CycElt::alpha(n, i) {
            return Err(Error::Precondition(format!("lambda_{i} differs from alpha_{i}")));
        }
    }
    let basis = RealBasis::new(n)?;
    let diff = &lambda_value(eps, d as i64) - &CycElt::alpha(n, d as i64);
    let c = basis.expand_real(&diff)?;
    Ok(c.coeffs().values().all(|v| v % d as i64 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_vector() {
        let e = PaVector::indicator(12, 1);
        assert!(lemma51_criterion(&e));
        assert!(!lemma51_criterion(&PaVector::indicator(12, 5)));
        assert_eq!(lambda_map_rank(12), 7);
    }

    #[test]
    fn precondition() {
        let e = PaVector::indicator(24, 5);
        assert!(matches!(div_check_52(&e, 3), Err(Error::Precondition(_))));
        assert_eq!(div_check_52(&PaVector::indicator(24, 1), 3), Ok(true));
    }
}
