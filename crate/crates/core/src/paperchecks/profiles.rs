//! Eigenvalue profiles of `Theta_d(u)` compatible with the powers of `u`, and
//! the resulting coefficient differences between `chi_d(u)` and `chi_d(g_0)`.

use serde::Serialize;

use crate::arith::{divisors, factorize, modn, prime_count};
use crate::cyclotomic::{gammas, BasisLabel, RealBasis, RealElt};
use crate::error::{Error, Result};
use crate::sl2data::brauer_char_value;

/// `X_d = {1 <= i <= d : i = d (mod 2)}`.
pub fn x_set(d: u64) -> Vec<u64> {
    (1..=d).filter(|i| i % 2 == d % 2).collect()
}

/// A multiset `{nu_i : i in X_d}` of classes in `Gamma_n`, stored sorted by
/// representative in `0..=n/2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NuProfile {
    pub n: u64,
    pub d: u64,
    pub nu: Vec<u64>,
}

impl NuProfile {
    /// Multiplicity of `-1` among the eigenvalues `zeta^{±nu_i}` (and the
    /// eigenvalue 1 for even `d`).
    pub fn minus_one_multiplicity(&self) -> usize {
        2 * self.nu.iter().filter(|&&v| 2 * v == self.n).count()
    }

    /// `kappa_{nu} != 1` for at most one entry, and only when `n/d` is the
    /// smallest prime dividing `n`.
    pub fn kappa_rule_holds(&self) -> bool {
        let special = self.nu.iter().filter(|&&v| v == 0 || 2 * v == self.n).count();
        match special {
            0 => true,
            1 => factorize(self.n)[0].0 == self.n / self.d,
            _ => false,
        }
    }
}

/// Every multiset `nu(X_d)` with `nu(X_d) ~_m X_d` for each proper divisor
/// `m` of `n`. Fails once more than `cap` profiles are found.
pub fn nu_profiles(n: u64, d: u64, cap: usize) -> Result<Vec<NuProfile>> {
    if d < 2 || d >= n || n % d != 0 {
        return Err(Error::Precondition(format!("need 1 < d < n and d | n, got n={n} d={d}")));
    }
    let xs = x_set(d);
    let mods: Vec<u64> = divisors(n).into_iter().filter(|&m| m > 1 && m < n).collect();
    let mut need: Vec<Vec<usize>> = mods
        .iter()
        .map(|&m| {
            let mut c = vec![0; (m / 2 + 1) as usize];
            for &i in &xs {
                c[crate::arith::abs_rep(i as i64, m) as usize] += 1;
            }
            c
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(xs.len());
    extend(n, &mods, &mut need, xs.len(), 0, &mut cur, &mut out, cap)?;
    Ok(out.into_iter().map(|nu| NuProfile { n, d, nu }).collect())
}

#[allow(clippy::too_many_arguments)]
fn extend(
    n: u64,
    mods: &[u64],
    need: &mut [Vec<usize>],
    len: usize,
    start: u64,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    cap: usize,
) -> Result<()> {
    if cur.len() == len {
        if out.len() == cap {
            return Err(Error::ProfileCapExceeded(cap as u64));
        }
        out.push(cur.clone());
        return Ok(());
    }
    for v in start..=n / 2 {
        let slots: Vec<usize> =
            mods.iter().map(|&m| crate::arith::abs_rep(v as i64, m) as usize).collect();
        if slots.iter().zip(need.iter()).any(|(&s, c)| c[s] == 0) {
            continue;
        }
        for (&s, c) in slots.iter().zip(need.iter_mut()) {
            c[s] -= 1;
        }
        cur.push(v);
        let r = extend(n, mods, need, len, v, cur, out, cap);
        cur.pop();
        for (&s, c) in slots.iter().zip(need.iter_mut()) {
            c[s] += 1;
        }
        r?;
    }
    Ok(())
}

/// `chi_d(u) - chi_d(g_0)` in the real basis, i.e. for each label `b` the
/// difference `sum_{i in X_d} (C_b(alpha_{nu_i}) - C_b(alpha_i))`.
pub fn coeff_diff(basis: &RealBasis, profile: &NuProfile) -> RealElt {
    let mut z = RealElt::zero(basis.n());
    for (&v, &i) in profile.nu.iter().zip(&x_set(profile.d)) {
        z.add_assign_scaled(&basis.alpha_coeffs(v as i64), 1);
        z.add_assign_scaled(&basis.alpha_coeffs(i as i64), -1);
    }
    z
}

fn signed_literal(basis: &RealBasis, b: u64, x: i64) -> i64 {
    let n = basis.n();
    let step = n / gammas(basis.modulus(), x).1;
    if modn(b as i64 - x, step) == 0 {
        basis.literal_coeff(b, x)
    } else if modn(b as i64 + x, step) == 0 {
        basis.literal_coeff(b, -x)
    } else {
        0
    }
}

/// The same difference at label `alpha_b`, summed term by term from the
/// product `kappa mu(gamma) beta delta` with each `nu_i` and `i` replaced by
/// the sign that matches `b`.
pub fn literal_diff(basis: &RealBasis, profile: &NuProfile, b: u64) -> i64 {
    profile
        .nu
        .iter()
        .zip(&x_set(profile.d))
        .map(|(&v, &i)| signed_literal(basis, b, v as i64) - signed_literal(basis, b, i as i64))
        .sum()
}

/// `2 + 2^{P(d)+1}` where `P(d)` counts the distinct primes dividing `d`.
pub fn lemma53_bound(d: u64) -> i64 {
    2 + (1i64 << (prime_count(d) + 1))
}

/// Whether `(n, d)` can occur as a minimal counterexample degree: `4 | n`,
/// `n` is neither a prime power nor 12, `1 < d < n`, `d | n`, and for `d > 2`
/// no prime larger than `d` divides `n`.
pub fn admissible(n: u64, d: u64) -> bool {
    let f = factorize(n);
    n % 4 == 0
        && f.len() > 1
        && n != 12
        && d > 1
        && d < n
        && n % d == 0
        && (d == 2 || f.iter().all(|&(p, _)| p <= d))
}

/// Result of running the divisibility argument over every profile at `(n, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseVerdict {
    pub n: u64,
    pub d: u64,
    pub profiles: usize,
    /// Profiles whose difference is nonzero with every coefficient divisible by `d`.
    pub evading: Vec<NuProfile>,
    pub contradiction: bool,
    /// `max_b |C_b(sum_{i in X_d} alpha_i)|`, the part of `chi_d(g_0)` that
    /// survives in the difference (the constant term for even `d` cancels).
    pub g0_max_coeff: i64,
    /// `max_b |C_b(chi_d(g_0))|` including that constant.
    pub g0_full_max_coeff: i64,
    pub max_abs_diff: i64,
    pub bound: i64,
    pub bound_holds: bool,
    pub kappa_rule_holds: bool,
    /// Pairs (profile, label) where the term-by-term product disagrees with
    /// the expansion.
    pub literal_mismatches: usize,
}

pub fn case_analysis(n: u64, d: u64, cap: usize) -> Result<CaseVerdict> {
    let basis = RealBasis::new(n)?;
    let profiles = nu_profiles(n, d, cap)?;
    let g0_full = basis.expand_real(&brauer_char_value(d, n, 1))?;
    let mut g0 = RealElt::zero(n);
    for &i in &x_set(d) {
        g0.add_assign_scaled(&basis.alpha_coeffs(i as i64), 1);
    }
    let mut evading = Vec::new();
    let mut max_abs_diff = 0;
    let mut literal_mismatches = 0;
    for p in &profiles {
        let diff = coeff_diff(&basis, p);
        max_abs_diff = max_abs_diff.max(diff.max_abs());
        if !diff.coeffs().is_empty() && diff.coeffs().values().all(|c| c % d as i64 == 0) {
            evading.push(p.clone());
        }
        for &label in basis.labels() {
            if let BasisLabel::Alpha(b) = label {
                if literal_diff(&basis, p, b) != diff.coeff(label) {
                    literal_mismatches += 1;
                }
            }
        }
    }
    let bound = lemma53_bound(d);
    Ok(CaseVerdict {
        n,
        d,
        profiles: profiles.len(),
        contradiction: evading.is_empty(),
        evading,
        g0_max_coeff: g0.max_abs(),
        g0_full_max_coeff: g0_full.max_abs(),
        max_abs_diff,
        bound,
        bound_holds: max_abs_diff <= bound,
        kappa_rule_holds: profiles.iter().all(NuProfile::kappa_rule_holds),
        literal_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_sets() {
        assert_eq!(x_set(3), vec![1, 3]);
        assert_eq!(x_set(4), vec![2, 4]);
    }

    #[test]
    fn profiles_24_3() {
        let ps = nu_profiles(24, 3, 1000).unwrap();
        assert!(ps.contains(&NuProfile { n: 24, d: 3, nu: vec![1, 3] }));
        assert!(ps.contains(&NuProfile { n: 24, d: 3, nu: vec![9, 11] }));
        assert!(nu_profiles(24, 3, 1).is_err());
        assert!(nu_profiles(24, 5, 10).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(admissible(24, 3));
        assert!(!admissible(24, 5));
        assert!(!admissible(12, 2));
        assert!(!admissible(16, 2));
        assert!(!admissible(28, 4));
        assert!(admissible(28, 2));
    }
}
