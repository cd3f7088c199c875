use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, factorize};

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Modulus {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Modulus {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "modulus must be positive");
        Modulus { n, factors: factorize(n) }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(p, v_p(n))` for every prime `p | n`, ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// `n' = prod_{p | n} p`.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    /// `n_p = p^{v_p(n)}`; 1 when `p` does not divide `n`.
    pub fn part(&self, p: u64) -> u64 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(1, |&(q, v)| q.pow(v))
    }

    /// `n = n_2`, i.e. `n` is a power of two (including 1).
    pub fn is_two_power(&self) -> bool {
        self.n == self.part(2)
    }

    /// `p_0`: the smallest odd prime dividing `n`.
    pub fn smallest_odd_prime(&self) -> Option<u64> {
        self.primes().find(|&p| p != 2)
    }

    pub fn phi(&self) -> u64 {
        euler_phi(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_multiply_back() {
        for n in 1..500 {
            let m = Modulus::new(n);
            let prod: u64 = m.primes().map(|p| m.part(p)).product();
            assert_eq!(prod, n);
            let rad = m.radical();
            assert!(m.primes().all(|p| (rad / p) % p != 0));
            assert!(m.primes().all(|p| n % m.part(p) == 0));
        }
    }

    #[test]
    fn two_power_and_p0() {
        assert!(Modulus::new(16).is_two_power());
        assert!(!Modulus::new(24).is_two_power());
        assert_eq!(Modulus::new(24).smallest_odd_prime(), Some(3));
        assert_eq!(Modulus::new(60).smallest_odd_prime(), Some(3));
        assert_eq!(Modulus::new(40).smallest_odd_prime(), Some(5));
        assert_eq!(Modulus::new(8).smallest_odd_prime(), None);
    }
}
