use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zchelp_core::helpengine::{
    check_vector, multiplicity, scan_orders, solve, zc_scan, HelpProblem, LinearForms, PaVector,
    PowerData, PowerMode, SearchStatus,
};
use zchelp_core::Error;

const COMPOSITE: [(u64, u64); 6] = [(11, 12), (23, 24), (19, 20), (13, 12), (9, 10), (9, 8)];

fn random_eps(rng: &mut ChaCha8Rng, n: u64) -> PaVector {
    let mut v = vec![0i64; n as usize / 2 + 1];
    let free: Vec<usize> = (1..=n as usize / 2).filter(|&x| 2 * x != n as usize).collect();
    for &x in &free {
        v[x] = rng.gen_range(-3..=3);
    }
    let s: i64 = v.iter().sum();
    v[free[0]] += 1 - s;
    PaVector::from_vec(n, v).unwrap()
}

fn coprime_reps(n: u64) -> Vec<i64> {
    (1..=n as i64 / 2).filter(|&a| num_integer::gcd(a, n as i64) == 1).collect()
}

#[test]
fn direct_formula_matches_linear_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (q, n) in [(7, 8), (11, 12), (9, 10), (19, 20)] {
        let p = HelpProblem::new(q, n).unwrap();
        let forms = LinearForms::new(&p).unwrap();
        let power = p.power_data();
        for _ in 0..4 {
            let eps = random_eps(&mut rng, n);
            for &m in &[1, 2, 3] {
                for ell in 0..n as i64 {
                    let direct = multiplicity(n, &eps, &power, m, ell).unwrap();
                    let fast = Ratio::new(forms.value(m, ell, eps.values()), n as i64);
                    assert_eq!(direct, fast, "q={q} n={n} m={m} ell={ell}");
                }
            }
        }
    }
}

#[test]
fn group_element_multiplicities() {
    let n = 12;
    let e1 = PaVector::indicator(n, 1);
    let inductive = PowerData::inductive(n);
    assert_eq!(multiplicity(n, &e1, &inductive, 1, 1).unwrap(), Ratio::from_integer(1));
    assert_eq!(multiplicity(n, &e1, &inductive, 1, 0).unwrap(), Ratio::from_integer(0));
    for n in [8, 12, 20, 24] {
        for a in coprime_reps(n) {
            let ea = PaVector::indicator(n, a);
            let own = PowerData::of_element(n, a);
            assert_eq!(multiplicity(n, &ea, &own, 1, a).unwrap(), Ratio::from_integer(1));
            assert_eq!(multiplicity(n, &ea, &own, 1, -a).unwrap(), Ratio::from_integer(1));
        }
    }
}

#[test]
fn check_vector_examples() {
    for (q, n) in [(7, 8), (11, 12), (23, 24)] {
        for chars in [vec![1], vec![1, 2, 3], (1..=n / 2 + 2).collect()] {
            let p = HelpProblem::new(q, n).unwrap().with_characters(chars);
            assert!(check_vector(&p, &PaVector::indicator(n, 1)).unwrap().pass);
        }
    }
    let p = HelpProblem::new(7, 8).unwrap().with_normalize(false);
    let bad = PaVector::from_pairs(8, &[(5, 2), (1, -1)]);
    let r = check_vector(&p, &bad).unwrap();
    assert!(!r.pass);
    assert!(r.failures.iter().any(|f| f.starts_with("chi_1") || f.starts_with("chi_3")));

    let off = PaVector::from_pairs(8, &[(1, 1), (3, 1)]);
    assert!(matches!(check_vector(&p, &off), Err(Error::InvalidPaVector(_))));
    let central = PaVector::from_pairs(8, &[(1, 1), (4, 1), (3, -1)]);
    assert!(matches!(check_vector(&p, &central), Err(Error::InvalidPaVector(_))));
}

#[test]
fn rows_are_symmetric_and_sum_to_degree_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (q, n) in COMPOSITE.iter().copied().chain([(7, 8), (17, 16)]) {
        let p = HelpProblem::new(q, n).unwrap();
        let forms = LinearForms::new(&p).unwrap();
        let nn = n as i64;
        for _ in 0..5 {
            let eps = random_eps(&mut rng, n);
            for &m in &p.characters {
                let row: Vec<i64> = (0..nn).map(|l| forms.value(m, l, eps.values())).collect();
                for l in 0..nn {
                    assert_eq!(row[l as usize], row[((nn - l) % nn) as usize]);
                }
                assert_eq!(row.iter().sum::<i64>(), nn * (m as i64 + 1), "q={q} n={n} m={m}");
            }
        }
    }
}

#[test]
fn group_elements_are_sound() {
    for (q, n) in COMPOSITE.iter().copied().chain([(7, 8), (17, 16), (31, 32), (5, 6), (13, 14)]) {
        for a in coprime_reps(n) {
            for chars in [vec![1], vec![1, 2, 5], (1..=n / 2 + 2).collect::<Vec<_>>()] {
                let p = HelpProblem::new(q, n)
                    .unwrap()
                    .with_characters(chars)
                    .with_normalize(false)
                    .with_mode(PowerMode::Custom(PowerData::of_element(n, a)));
                let r = check_vector(&p, &PaVector::indicator(n, a)).unwrap();
                assert!(r.pass, "q={q} n={n} a={a}: {:?}", r.failures);
            }
        }
    }
}

#[test]
fn composite_orders_leave_only_group_elements() {
    for (q, n) in COMPOSITE {
        let r = solve(&HelpProblem::new(q, n).unwrap()).unwrap();
        assert!(r.complete && r.all_trivial, "q={q} n={n}");
        assert_eq!(r.survivors.len(), 1);
        assert_eq!(r.survivors[0].eps, PaVector::indicator(n, 1));
    }
}

#[test]
fn minus_one_has_even_multiplicity() {
    for (q, n) in COMPOSITE {
        let p = HelpProblem::new(q, n).unwrap().with_normalize(false);
        let r = solve(&p).unwrap();
        assert!(r.complete);
        for s in &r.survivors {
            for (m, row) in &s.multiplicities.rows {
                let v = row[n as usize / 2];
                assert!(v.is_integer() && v.to_integer() % 2 == 0, "q={q} n={n} m={m}");
            }
        }
    }
}

#[test]
fn more_characters_never_add_survivors() {
    for (q, n) in [(7, 8), (23, 24), (19, 20)] {
        let small = HelpProblem::new(q, n).unwrap().with_normalize(false);
        let mut chars = small.characters.clone();
        chars.extend([n / 2 + 3, n / 2 + 4]);
        let big = small.clone().with_characters(chars);
        let (rs, rb) = (solve(&small).unwrap(), solve(&big).unwrap());
        assert!(rs.complete && rb.complete);
        for s in &rb.survivors {
            assert!(rs.survivors.iter().any(|t| t.eps == s.eps));
        }
    }
}

#[test]
fn node_cap_reports_incomplete() {
    let p = HelpProblem::new(31, 32).unwrap().with_normalize(false).with_node_cap(1);
    let r = solve(&p).unwrap();
    assert_eq!(r.provenance.status, SearchStatus::NodeCap);
    assert!(!r.complete);
    assert!(!r.all_trivial);
}

#[test]
fn weak_character_sets_are_flagged_unbounded() {
    let p = HelpProblem::new(23, 24).unwrap().with_characters(vec![1]);
    let r = solve(&p).unwrap();
    assert_eq!(r.provenance.status, SearchStatus::Unbounded);
    assert!(!r.complete);
}

#[test]
fn scan_orders_are_divisors_of_q_pm_1() {
    assert_eq!(scan_orders(5), vec![3, 4, 6]);
    assert_eq!(scan_orders(7), vec![3, 4, 6, 8]);
    assert_eq!(scan_orders(9), vec![4, 5, 8, 10]);
    assert_eq!(scan_orders(23), vec![3, 4, 6, 8, 11, 12, 22, 24]);
    for q in [5, 7, 9] {
        let reports = zc_scan(q).unwrap();
        assert_eq!(reports.iter().map(|r| r.n).collect::<Vec<_>>(), scan_orders(q));
        assert!(reports.iter().all(|r| r.complete && r.all_trivial));
    }
}

#[test]
fn out_of_scope_orders() {
    assert!(matches!(HelpProblem::new(5, 15), Err(Error::ModularOrder { .. })));
    assert!(matches!(HelpProblem::new(5, 7), Err(Error::OrderNotRepresented { .. })));
    assert!(matches!(HelpProblem::new(7, 14), Err(Error::ModularOrder { .. })));
    assert!(matches!(HelpProblem::new(6, 5), Err(Error::NotOddPrimePower(6))));
}

/// Order 12 in SL(2, 11) with only the first character and the projection
/// to PSL(2, 11).
mod order_twelve {
    use super::*;

    fn base() -> HelpProblem {
        HelpProblem::new(11, 12)
            .unwrap()
            .with_characters(vec![1])
            .with_normalize(false)
            .with_projection(true)
    }

    #[test]
    fn all_rows_leave_the_two_generators() {
        let r = solve(&base()).unwrap();
        assert!(r.complete && r.all_trivial);
        let got: Vec<_> = r.survivors.iter().map(|s| s.eps.clone()).collect();
        assert_eq!(got, vec![PaVector::indicator(12, 5), PaVector::indicator(12, 1)]);
    }

    #[test]
    fn rows_one_and_five_do_not_see_order_three_and_six() {
        let p = base().with_ells(Some(vec![1, 5]));
        let r = solve(&p).unwrap();
        assert_eq!(r.provenance.status, SearchStatus::Unbounded);
        for t in -4..=4 {
            let eps = PaVector::from_pairs(12, &[(1, 1), (2, t), (4, -t)]);
            let c = check_vector(&p, &eps).unwrap();
            assert!(c.pass, "t={t}: {:?}", c.failures);
        }
        let all_rows = base();
        let eps = PaVector::from_pairs(12, &[(1, 1), (2, 1), (4, -1)]);
        assert!(!check_vector(&all_rows, &eps).unwrap().pass);
    }
}
