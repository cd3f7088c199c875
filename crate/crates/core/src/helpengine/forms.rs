use std::collections::BTreeMap;

use num_rational::Ratio;

use super::{CheckResult, HelpProblem, MultiplicityTable, PaVector, PowerData};
use crate::arith::{abs_rep, additive_order, divisors};
use crate::cyclotomic::{trace_elt, trace_table, trace_zeta, CycElt};
use crate::error::Result;
use crate::sl2data::brauer_char_value;

/// The multiplicity of `zeta_n^ell` as an eigenvalue of `Theta_m(u)`,
/// evaluated directly from traces of cyclotomic elements.
pub fn multiplicity(
    n: u64,
    eps: &PaVector,
    power: &PowerData,
    m: u64,
    ell: i64,
) -> Result<Ratio<i64>> {
    let mut total = 0i64;
    for d in divisors(n) {
        let weights: Vec<(u64, i64)> = if d == 1 {
            eps.values().iter().enumerate().map(|(x, &v)| (x as u64, v)).collect()
        } else {
            power.by_divisor[&d].iter().map(|(&y, &v)| (y, v)).collect()
        };
        let twist = CycElt::monomial(n, -ell * d as i64, 1);
        for (y, w) in weights {
            if w == 0 {
                continue;
            }
            let x = &brauer_char_value(m, n, y as i64) * &twist;
            total += w * trace_elt(n / d, &x)?;
        }
    }
    Ok(Ratio::new(total, n as i64))
}

/// `n * mult(m, ell) = sum_x a[m][ell][x] eps_x + k[m][ell]` for every
/// character degree in use and every `ell` in `0..n`.
#[derive(Debug, Clone)]
pub struct LinearForms {
    pub n: u64,
    pub degrees: Vec<u64>,
    pub a: Vec<Vec<Vec<i64>>>,
    pub k: Vec<Vec<i64>>,
}

impl LinearForms {
    pub fn new(problem: &HelpProblem) -> Result<Self> {
        let n = problem.n;
        let mut degrees = problem.characters.clone();
        if problem.normalize {
            degrees.push(1);
        }
        degrees.sort();
        degrees.dedup();
        let tr = trace_table(n);
        let power = problem.power_data();
        let nn = n as i64;
        let reps = n / 2 + 1;
        let mut a = Vec::new();
        let mut k = Vec::new();
        for &m in &degrees {
            let js: Vec<i64> = (0..=m as i64).map(|t| 2 * t - m as i64).collect();
            let mut am = Vec::with_capacity(n as usize);
            let mut km = Vec::with_capacity(n as usize);
            for ell in 0..nn {
                let row: Vec<i64> = (0..reps as i64)
                    .map(|x| js.iter().map(|&j| tr[(x * j - ell).rem_euclid(nn) as usize]).sum())
                    .collect();
                am.push(row);
                let mut kv = 0;
                for (&d, map) in &power.by_divisor {
                    let sub = n / d;
                    for (&y, &w) in map {
                        if w == 0 {
                            continue;
                        }
                        let s: i64 = js
                            .iter()
                            .map(|&j| {
                                let e = y as i64 * j - ell * d as i64;
                                trace_zeta(sub, additive_order(e, n)).expect("order divides n/d")
                            })
                            .sum();
                        kv += w * s;
                    }
                }
                km.push(kv);
            }
            a.push(am);
            k.push(km);
        }
        Ok(LinearForms { n, degrees, a, k })
    }

    pub fn index(&self, m: u64) -> usize {
        self.degrees.binary_search(&m).expect("degree in use")
    }

    /// `n * mult(m, ell)`.
    pub fn value(&self, m: u64, ell: i64, eps: &[i64]) -> i64 {
        let i = self.index(m);
        let l = ell.rem_euclid(self.n as i64) as usize;
        self.a[i][l].iter().zip(eps).map(|(c, e)| c * e).sum::<i64>() + self.k[i][l]
    }

    pub(crate) fn check(&self, problem: &HelpProblem, eps: &PaVector) -> CheckResult {
        let n = self.n as i64;
        let mut failures = Vec::new();
        let mut rows = BTreeMap::new();
        for &m in &problem.characters {
            let row: Vec<Ratio<i64>> =
                (0..n).map(|ell| Ratio::new(self.value(m, ell, eps.values()), n)).collect();
            for (ell, r) in row.iter().enumerate() {
                if !problem.row_active(ell as i64) {
                    continue;
                }
                if !r.is_integer() || *r < Ratio::from_integer(0) {
                    failures.push(format!("chi_{m}, ell = {ell}: multiplicity {r}"));
                }
            }
            let sum: Ratio<i64> = row.iter().sum();
            if sum != Ratio::from_integer(m as i64 + 1) {
                failures.push(format!("chi_{m}: multiplicities sum to {sum}"));
            }
            rows.insert(m, row);
        }
        if problem.normalize {
            for ell in 0..n {
                let expect = if abs_rep(ell, self.n) == 1 { n } else { 0 };
                if self.value(1, ell, eps.values()) != expect {
                    failures.push(format!("normalization fails at ell = {ell}"));
                }
            }
        }
        if problem.projection {
            for (y, s) in projection_sums(self.n, eps.values()) {
                let expect = (y == abs_rep(1, self.n / 2)) as i64;
                if s != expect {
                    failures.push(format!("projection fails at class {y} mod {}", self.n / 2));
                }
            }
        }
        CheckResult {
            pass: failures.is_empty(),
            table: MultiplicityTable { n: self.n, rows },
            failures,
        }
    }
}

/// `y -> sum_{x ~ y (mod n/2)} eps_x` over the representatives of `Gamma_{n/2}`.
pub(crate) fn projection_sums(n: u64, eps: &[i64]) -> BTreeMap<u64, i64> {
    let h = n / 2;
    let mut out: BTreeMap<u64, i64> = (0..=h / 2).map(|y| (y, 0)).collect();
    for (x, &v) in eps.iter().enumerate() {
        *out.get_mut(&abs_rep(x as i64, h)).unwrap() += v;
    }
    out
}
