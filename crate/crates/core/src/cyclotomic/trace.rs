use super::elt::CycElt;
use crate::arith::{additive_order, euler_phi, moebius};
use crate::error::{Error, Result};

/// `Tr_{Q(zeta_n)/Q}(zeta_d) = mu(d) phi(n) / phi(d)` for `d | n`.
pub fn trace_zeta(n: u64, d: u64) -> Result<i64> {
    if d == 0 || n % d != 0 {
        return Err(Error::NotADivisor { d, n });
    }
    Ok(moebius(d) * (euler_phi(n) / euler_phi(d)) as i64)
}

/// Trace table `tr[e] = Tr_{Q(zeta_n)/Q}(zeta_n^e)` for `e` in `0..n`.
pub fn trace_table(n: u64) -> Vec<i64> {
    (0..n)
        .map(|e| trace_zeta(n, additive_order(e as i64, n)).unwrap())
        .collect()
}

/// `Tr_{Q(zeta_m)/Q}(x)`, by linearity over the monomials of `x`. Every monomial
/// with nonzero coefficient must be a root of unity of order dividing `m`.
pub fn trace_elt(m: u64, x: &CycElt) -> Result<i64> {
    let mut acc = 0;
    for (e, c) in x.terms() {
        let order = additive_order(e as i64, x.n());
        if m % order != 0 {
            return Err(Error::ElementOutsideSubfield { m, order });
        }
        acc += c * trace_zeta(m, order)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_examples() {
        for n in 1..50 {
            assert_eq!(trace_zeta(n, 1).unwrap(), euler_phi(n) as i64);
        }
        assert_eq!(trace_zeta(24, 2).unwrap(), -8);
        assert_eq!(trace_zeta(12, 12).unwrap(), 0);
        assert!(matches!(trace_zeta(12, 5), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn trace_of_elements() {
        assert_eq!(trace_elt(24, &CycElt::constant(24, 5)).unwrap(), 5 * 8);
        assert_eq!(trace_elt(24, &CycElt::alpha(24, 2)).unwrap(), 0);
        assert_eq!(trace_elt(8, &CycElt::alpha(8, 1)).unwrap(), 0);
        // zeta_24^2 has order 12, which does not divide 6
        assert_eq!(
            trace_elt(6, &CycElt::monomial(24, 2, 1)),
            Err(Error::ElementOutsideSubfield { m: 6, order: 12 })
        );
        // zeta_24^4 = zeta_6 lies in Q(zeta_6): trace mu(6) phi(6)/phi(6) = 1
        assert_eq!(trace_elt(6, &CycElt::monomial(24, 4, 1)).unwrap(), 1);
    }
}
