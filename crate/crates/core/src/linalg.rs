//! Exact rational row reduction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Reduced row echelon form of a dense matrix.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<Q>>,
    /// Pivot column of each of the first `pivots.len()` rows.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination, choosing pivots only among the first
/// `pivot_cols` columns. The remaining columns are carried along.
pub fn rref(mut m: Vec<Vec<Q>>, pivot_cols: usize) -> Rref {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[j] -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rows: m, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_system() {
        // x + y = 3, x - y = 1
        let m = vec![vec![q(1), q(1), q(3)], vec![q(1), q(-1), q(1)]];
        let r = rref(m, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rows[0][2], q(2));
        assert_eq!(r.rows[1][2], q(1));
    }

    #[test]
    fn rank_deficient() {
        let m = vec![vec![q(2), q(4)], vec![q(1), q(2)], vec![q(0), q(0)]];
        assert_eq!(rref(m, 2).rank(), 1);
    }
}
