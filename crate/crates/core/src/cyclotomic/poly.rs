//! Cyclotomic polynomials and reduction of `Z[X]/(X^n - 1)` modulo `Phi_n`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::divisors;

fn cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Exact division of `num` by the monic polynomial `den` (coefficients low to
/// high). Panics if the division leaves a remainder.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(*den.last().unwrap(), 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// `Phi_n(X)` as a coefficient vector of length `phi(n) + 1`, computed as
/// `(X^n - 1) / prod_{d | n, d < n} Phi_d(X)`.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = cache().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_poly(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cache().write().unwrap().insert(n, Arc::clone(&p));
    p
}

/// Remainder of `v` (any length) modulo `Phi_n`, as a vector of length `phi(n)`.
pub fn reduce(v: &[i64], n: u64) -> Vec<i64> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    let mut r = v.to_vec();
    if r.len() < deg {
        r.resize(deg, 0);
    }
    for top in (deg..r.len()).rev() {
        let c = r[top];
        if c != 0 {
            let base = top - deg;
            for (j, &p) in phi.iter().enumerate() {
                r[base + j] -= c * p;
            }
        }
    }
    r.truncate(deg);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // first cyclotomic polynomial with a coefficient -2
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..=300 {
            assert_eq!(cyclotomic_poly(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn x_to_the_n_reduces_to_one() {
        for n in 1..=60u64 {
            let mut v = vec![0i64; n as usize + 1];
            v[n as usize] = 1;
            let r = reduce(&v, n);
            let mut one = vec![0i64; r.len()];
            one[0] = 1;
            assert_eq!(r, one, "n = {n}");
        }
    }
}
