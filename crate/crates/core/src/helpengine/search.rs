//! Exhaustive enumeration: the equalities are eliminated exactly, the
//! remaining free coordinates are boxed by inverting a full-rank set of
//! inequality rows, and the box is searched depth first with interval
//! propagation.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::forms::LinearForms;
use super::{
    HelpProblem, HelpReport, PaVector, Provenance, SearchStatus, Survivor,
};
use crate::arith::abs_rep;
use crate::error::{Error, Result};
use crate::linalg::{q, rref, Q};
use crate::sl2data::SmallField;

/// `c . f + c0 in [lo, hi]` with integer data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Row {
    terms: Vec<(usize, i128)>,
    c0: i128,
    lo: i128,
    hi: i128,
}

/// `v = (c . f + c0) / den`.
#[derive(Debug, Clone)]
struct Affine {
    terms: Vec<(usize, i128)>,
    c0: i128,
    den: i128,
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow)
}

/// Clears denominators of a rational affine form `coeffs . f + c0`.
fn scale(coeffs: &[Q], c0: &Q) -> Result<(Vec<(usize, i128)>, i128, i128)> {
    let mut l = c0.denom().clone();
    for c in coeffs {
        l = l.lcm(c.denom());
    }
    let lq = Q::from_integer(l.clone());
    let mut terms = Vec::new();
    for (j, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            terms.push((j, to_i128(&(c * &lq).to_integer())?));
        }
    }
    Ok((terms, to_i128(&(c0 * &lq).to_integer())?, to_i128(&l)?))
}

fn div_floor(a: i128, b: i128) -> i128 {
    Integer::div_floor(&a, &b)
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -Integer::div_floor(&-a, &b)
}

fn propagate(rows: &[Row], dom: &mut [(i128, i128)]) -> bool {
    loop {
        let mut changed = false;
        for row in rows {
            let (mut lo_sum, mut hi_sum) = (row.c0, row.c0);
            for &(j, c) in &row.terms {
                let (a, b) = dom[j];
                if c > 0 {
                    lo_sum += c * a;
                    hi_sum += c * b;
                } else {
                    lo_sum += c * b;
                    hi_sum += c * a;
                }
            }
            if hi_sum < row.lo || lo_sum > row.hi {
                return false;
            }
            for &(j, c) in &row.terms {
                let (a, b) = dom[j];
                let (cmin, cmax) = if c > 0 { (c * a, c * b) } else { (c * b, c * a) };
                if cmin == cmax {
                    continue;
                }
                // c * v in [row.lo - rest_max, row.hi - rest_min]
                let t_lo = row.lo - (hi_sum - cmax);
                let t_hi = row.hi - (lo_sum - cmin);
                let (nl, nh) = if c > 0 {
                    (div_ceil(t_lo, c), div_floor(t_hi, c))
                } else {
                    (div_ceil(t_hi, c), div_floor(t_lo, c))
                };
                let nl = nl.max(a);
                let nh = nh.min(b);
                if nl > nh {
                    return false;
                }
                if (nl, nh) != (a, b) {
                    dom[j] = (nl, nh);
                    changed = true;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

struct Search<'a> {
    problem: &'a HelpProblem,
    forms: &'a LinearForms,
    rows: Vec<Row>,
    /// For each free representative: which free coordinate or pivot expression.
    coords: Vec<Coord>,
    reps: Vec<u64>,
    nodes: AtomicU64,
    capped: AtomicBool,
}

enum Coord {
    Free(usize),
    Pivot(Affine),
}

impl Search<'_> {
    fn leaf(&self, f: &[i128]) -> Option<PaVector> {
        let n = self.problem.n;
        let mut eps = vec![0i64; n as usize / 2 + 1];
        for (rep, coord) in self.reps.iter().zip(&self.coords) {
            let v = match coord {
                Coord::Free(j) => f[*j],
                Coord::Pivot(a) => {
                    let num = a.terms.iter().map(|&(j, c)| c * f[j]).sum::<i128>() + a.c0;
                    if num % a.den != 0 {
                        return None;
                    }
                    num / a.den
                }
            };
            eps[*rep as usize] = i64::try_from(v).ok()?;
        }
        let pa = PaVector::from_vec(n, eps).ok()?;
        self.forms.check(self.problem, &pa).pass.then_some(pa)
    }

    fn dfs(&self, mut dom: Vec<(i128, i128)>, out: &mut Vec<PaVector>) {
        if self.capped.load(Ordering::Relaxed) {
            return;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.problem.node_cap {
            self.capped.store(true, Ordering::Relaxed);
            return;
        }
        if !propagate(&self.rows, &mut dom) {
            return;
        }
        let pick = dom
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| a < b)
            .min_by_key(|(_, (a, b))| b - a)
            .map(|(j, _)| j);
        let Some(j) = pick else {
            let f: Vec<i128> = dom.iter().map(|d| d.0).collect();
            out.extend(self.leaf(&f));
            return;
        };
        let (a, b) = dom[j];
        for v in a..=b {
            let mut d = dom.clone();
            d[j] = (v, v);
            self.dfs(d, out);
        }
    }

    fn run(&self, dom: Vec<(i128, i128)>) -> Vec<PaVector> {
        let mut dom = dom;
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if !propagate(&self.rows, &mut dom) {
            return vec![];
        }
        let pick = dom
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| a < b)
            .min_by_key(|(_, (a, b))| b - a)
            .map(|(j, _)| j);
        let Some(j) = pick else {
            let f: Vec<i128> = dom.iter().map(|d| d.0).collect();
            return self.leaf(&f).into_iter().collect();
        };
        let (a, b) = dom[j];
        (a..=b)
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut d = dom.clone();
                d[j] = (v, v);
                let mut out = Vec::new();
                self.dfs(d, &mut out);
                out
            })
            .collect()
    }
}

/// Row indices, in order of preference, whose coefficient vectors span the
/// free space; `None` when they do not.
fn spanning_rows(rows: &[(Vec<Q>, Q, Q)], dim: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&i, &j| (&rows[i].2 - &rows[i].1).cmp(&(&rows[j].2 - &rows[j].1)));
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut chosen = Vec::new();
    for i in order {
        let mut v = rows[i].0.clone();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            basis.push((p, v));
            chosen.push(i);
            if chosen.len() == dim {
                return Some(chosen);
            }
        }
    }
    None
}

/// Enumerates every partial augmentation vector satisfying the problem's
/// constraints. The report is complete unless the node cap is hit or the
/// constraints leave a direction unbounded.
pub fn solve(problem: &HelpProblem) -> Result<HelpReport> {
    problem.validate()?;
    let n = problem.n;
    let forms = LinearForms::new(problem)?;
    let reps = problem.free_reps();
    let k = reps.len();

    // equalities over the free representatives
    let mut eq: Vec<Vec<Q>> = Vec::new();
    let mut push_eq = |coef: Vec<i64>, rhs: i64| {
        let mut row: Vec<Q> = coef.into_iter().map(q).collect();
        row.push(q(rhs));
        eq.push(row);
    };
    push_eq(vec![1; k], 1);
    if problem.normalize {
        let i1 = forms.index(1);
        for ell in 0..=n / 2 {
            let coef = reps.iter().map(|&x| forms.a[i1][ell as usize][x as usize]).collect();
            let target = if abs_rep(ell as i64, n) == 1 { n as i64 } else { 0 };
            push_eq(coef, target - forms.k[i1][ell as usize]);
        }
    }
    if problem.projection {
        let h = n / 2;
        for y in 0..=h / 2 {
            let coef = reps.iter().map(|&x| (abs_rep(x as i64, h) == y) as i64).collect();
            push_eq(coef, (y == abs_rep(1, h)) as i64);
        }
    }
    let red = rref(eq, k);
    let consistent = red.rows[red.rank()..].iter().all(|r| r[k].is_zero());

    let pivot_of: Vec<Option<usize>> = {
        let mut v = vec![None; k];
        for (r, &p) in red.pivots.iter().enumerate() {
            v[p] = Some(r);
        }
        v
    };
    let free: Vec<usize> = (0..k).filter(|&c| pivot_of[c].is_none()).collect();
    let fdim = free.len();
    // rational affine expression of every coordinate in the free parameters
    let exprs: Vec<(Vec<Q>, Q)> = (0..k)
        .map(|c| match pivot_of[c] {
            Some(r) => {
                let row = &red.rows[r];
                (free.iter().map(|&f| -row[f].clone()).collect(), row[k].clone())
            }
            None => {
                let mut v = vec![Q::zero(); fdim];
                v[free.iter().position(|&f| f == c).unwrap()] = Q::one();
                (v, Q::zero())
            }
        })
        .collect();

    // inequality rows in the free parameters
    let mut qrows: Vec<(Vec<Q>, Q, Q)> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    for &m in &problem.characters {
        let i = forms.index(m);
        for ell in 0..=n / 2 {
            if !problem.row_active(ell as i64) {
                continue;
            }
            let a = &forms.a[i][ell as usize];
            let mut coeffs = vec![Q::zero(); fdim];
            let mut c0 = q(forms.k[i][ell as usize]);
            for (c, &x) in reps.iter().enumerate() {
                let ax = a[x as usize];
                if ax == 0 {
                    continue;
                }
                let axq = q(ax);
                for (t, e) in coeffs.iter_mut().zip(&exprs[c].0) {
                    if !e.is_zero() {
                        *t += &axq * e;
                    }
                }
                c0 += &axq * &exprs[c].1;
            }
            let hi = q(n as i64 * (m as i64 + 1));
            let (terms, s0, den) = scale(&coeffs, &c0)?;
            let row = Row { terms, c0: s0, lo: 0, hi: to_i128(&(hi.clone() * Q::from_integer(den.into())).to_integer())? };
            if !rows.contains(&row) {
                rows.push(row);
                qrows.push((coeffs, c0.clone() * q(-1), hi - c0));
            }
        }
    }

    let mut coords = Vec::with_capacity(k);
    for (c, (coef, c0)) in exprs.iter().enumerate() {
        coords.push(match pivot_of[c] {
            None => Coord::Free(free.iter().position(|&f| f == c).unwrap()),
            Some(_) => {
                let (terms, s0, den) = scale(coef, c0)?;
                Coord::Pivot(Affine { terms, c0: s0, den })
            }
        });
    }

    let field_polynomial = crate::arith::prime_power(problem.q)
        .filter(|&(_, f)| f == 2)
        .map(|(t, _)| SmallField::new(t as u32, 2).polynomial().unwrap());
    let mut provenance = Provenance {
        mode: problem.mode.clone(),
        normalize: problem.normalize,
        projection: problem.projection,
        ells: problem.ells.clone(),
        node_cap: problem.node_cap,
        nodes: 0,
        torus: problem.frame.torus,
        class_labels: problem.frame.labels.clone(),
        field_polynomial,
        status: SearchStatus::Complete,
        free_dimension: fdim,
    };
    let finish = |survivors: Vec<PaVector>, provenance: Provenance| {
        let mut survivors = survivors;
        survivors.sort();
        survivors.dedup();
        let survivors: Vec<Survivor> = survivors
            .into_iter()
            .map(|eps| Survivor {
                trivial: eps.is_trivial(),
                multiplicities: forms.check(problem, &eps).table,
                eps,
            })
            .collect();
        let complete = provenance.status == SearchStatus::Complete;
        HelpReport {
            q: problem.q,
            n,
            characters: problem.characters.clone(),
            all_trivial: complete && survivors.iter().all(|s| s.trivial),
            survivors,
            complete,
            provenance,
        }
    };
    if !consistent {
        return Ok(finish(vec![], provenance));
    }

    let search = Search {
        problem,
        forms: &forms,
        rows,
        coords,
        reps: reps.clone(),
        nodes: AtomicU64::new(0),
        capped: AtomicBool::new(false),
    };

    // box: invert a spanning set of rows, each ranging over [-c0, hi - c0]
    let dom: Vec<(i128, i128)> = if fdim == 0 {
        vec![]
    } else {
        let Some(sel) = spanning_rows(&qrows, fdim) else {
            provenance.status = SearchStatus::Unbounded;
            return Ok(finish(vec![], provenance));
        };
        let mut m: Vec<Vec<Q>> = sel
            .iter()
            .map(|&i| {
                let mut r = qrows[i].0.clone();
                r.extend((0..fdim).map(|j| if sel[j] == i { Q::one() } else { Q::zero() }));
                r
            })
            .collect();
        m = rref(m, fdim).rows;
        // row j of the reduced matrix now holds the inverse's row j
        (0..fdim)
            .map(|j| {
                let inv = &m[j][fdim..];
                let (mut lo, mut hi) = (Q::zero(), Q::zero());
                for (t, &i) in sel.iter().enumerate() {
                    let (a, b) = (&qrows[i].1, &qrows[i].2);
                    let w = &inv[t];
                    if w.is_positive() {
                        lo += w * a;
                        hi += w * b;
                    } else {
                        lo += w * b;
                        hi += w * a;
                    }
                }
                Ok((to_i128(&lo.ceil().to_integer())?, to_i128(&hi.floor().to_integer())?))
            })
            .collect::<Result<_>>()?
    };
    let found = search.run(dom);
    provenance.nodes = search.nodes.load(Ordering::Relaxed);
    if search.capped.load(Ordering::Relaxed) {
        provenance.status = SearchStatus::NodeCap;
    }
    Ok(finish(found, provenance))
}
