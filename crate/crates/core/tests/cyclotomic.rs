use proptest::prelude::*;
use zchelp_core::arith::{divisors, euler_phi, modn};
use zchelp_core::cyclotomic::{
    certify_basis, oracle_expand, trace_elt, trace_zeta, BasisLabel, CycElt, RealBasis,
};

#[test]
fn zeta_expansion_is_exact() {
    for n in 3..=120u64 {
        let b = RealBasis::new(n).unwrap();
        for e in 0..n as i64 {
            let Ok(terms) = b.expand_zeta(e) else {
                assert!(b.modulus().is_two_power() && 4 * modn(e, n) % n == 0);
                continue;
            };
            let mut z = CycElt::zero(n);
            for (c, r) in terms {
                z.add_monomial(r as i64, c);
            }
            assert_eq!(z, CycElt::monomial(n, e, 1), "n = {n}, e = {e}");
        }
    }
}

#[test]
fn alpha_coefficients_match_oracle() {
    for n in 3..=80u64 {
        let b = RealBasis::new(n).unwrap();
        let oracle = certify_basis(n).unwrap();
        for i in 0..=n / 2 {
            assert_eq!(b.alpha_coeffs(i as i64), oracle[i as usize], "n = {n}, i = {i}");
            for &l in b.labels() {
                assert_eq!(
                    b.closed_form_coeff(l, i as i64),
                    oracle[i as usize].coeff(l),
                    "n = {n}, i = {i}, {l}"
                );
            }
        }
    }
}

#[test]
fn galois_sum_agrees_with_trace_formula() {
    for n in 1..=60u64 {
        let phi = euler_phi(n) as usize;
        for d in divisors(n) {
            // sum of the conjugates zeta_n^{k n/d}, k coprime to n, reduced mod Phi_n
            let mut s = CycElt::zero(n);
            for k in (1..=n).filter(|k| num_integer::gcd(*k, n) == 1) {
                s.add_monomial((k * (n / d)) as i64, 1);
            }
            let mut expect = vec![0i64; phi];
            expect[0] = trace_zeta(n, d).unwrap();
            assert_eq!(s.canonical(), expect, "n = {n}, d = {d}");
            assert_eq!(
                trace_elt(n, &CycElt::monomial(n, (n / d) as i64, 1)).unwrap(),
                expect[0]
            );
        }
    }
}

proptest! {
    #[test]
    fn real_elements_expand_consistently(n in 3u64..60, seed in proptest::collection::vec(-3i64..=3, 1..8)) {
        let b = RealBasis::new(n).unwrap();
        let mut x = CycElt::zero(n);
        for (k, &c) in seed.iter().enumerate() {
            x = &x + &CycElt::alpha(n, (k as i64 * 7 + 1) % n as i64).scale(c);
        }
        let e = b.expand_real(&x).unwrap();
        prop_assert_eq!(&e, &oracle_expand(&x).unwrap());
        prop_assert_eq!(e.to_cyc(), x);
        prop_assert!(b.labels().iter().all(|l| *l == BasisLabel::One || b.has_label(*l)));
    }
}
