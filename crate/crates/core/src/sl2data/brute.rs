//! Conjugacy classes of `SL(2, q)` by exhaustive enumeration, for small `q`.

use std::collections::HashMap;

use serde::Serialize;

use super::field::SmallField;
use super::{GroupParams, TorusKind};
use crate::error::{Error, Result};

/// Largest `q` accepted by [`brute_force_classes`].
pub const BRUTE_FORCE_MAX_Q: u64 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassSignature {
    pub order: u64,
    pub size: u64,
    pub torus: TorusKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceClasses {
    pub q: u64,
    pub group_order: u64,
    /// Defining polynomial of `F_q` over its prime field, when `q` is not prime.
    pub field_polynomial: Option<String>,
    /// Sorted class signatures.
    pub classes: Vec<ClassSignature>,
}

type Mat = [u32; 4];

fn mat_mul(f: &SmallField, x: &Mat, y: &Mat) -> Mat {
    let e = |a: u32, b: u32, c: u32, d: u32| f.add(f.mul(a, b), f.mul(c, d));
    [
        e(x[0], y[0], x[1], y[2]),
        e(x[0], y[1], x[1], y[3]),
        e(x[2], y[0], x[3], y[2]),
        e(x[2], y[1], x[3], y[3]),
    ]
}

fn mat_inv(f: &SmallField, x: &Mat) -> Mat {
    // determinant one
    [x[3], f.neg(x[1]), f.neg(x[2]), x[0]]
}

/// Enumerates `SL(2, q)` over an explicitly constructed `F_q` and splits it
/// into conjugacy classes. Only `q <= 13` is accepted.
pub fn brute_force_classes(q: u64) -> Result<BruteForceClasses> {
    let g = GroupParams::new(q)?;
    if q > BRUTE_FORCE_MAX_Q || g.f > 2 {
        return Err(Error::OracleScaleExceeded(q));
    }
    let f = SmallField::new(g.t as u32, g.f);
    let s = f.size();
    let (zero, one) = (f.zero(), f.one());
    let mut elems: Vec<Mat> = Vec::new();
    for a in 0..s {
        for b in 0..s {
            for c in 0..s {
                for d in 0..s {
                    if f.sub(f.mul(a, d), f.mul(b, c)) == one {
                        elems.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let index: HashMap<Mat, usize> = elems.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let inverses: Vec<Mat> = elems.iter().map(|m| mat_inv(&f, m)).collect();
    let identity: Mat = [one, zero, zero, one];
    let minus_one = f.neg(one);
    let two = f.add(one, one);

    let mut seen = vec![false; elems.len()];
    let mut classes = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut size = 0;
        for (h, hinv) in elems.iter().zip(&inverses) {
            let y = mat_mul(&f, &mat_mul(&f, h, x), hinv);
            let j = index[&y];
            if !seen[j] {
                seen[j] = true;
                size += 1;
            }
        }
        let mut order = 1;
        let mut p = *x;
        while p != identity {
            p = mat_mul(&f, &p, x);
            order += 1;
        }
        let tr = f.add(x[0], x[3]);
        let torus = if *x == identity || *x == [minus_one, zero, zero, minus_one] {
            TorusKind::Central
        } else if tr == two || tr == f.neg(two) {
            TorusKind::Unipotent
        } else {
            let disc = f.sub(f.mul(tr, tr), f.add(two, two));
            if f.is_square(disc) {
                TorusKind::Split
            } else {
                TorusKind::Nonsplit
            }
        };
        classes.push(ClassSignature { order, size, torus });
    }
    classes.sort();
    Ok(BruteForceClasses {
        q,
        group_order: elems.len() as u64,
        field_polynomial: f.polynomial(),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_3() {
        let b = brute_force_classes(3).unwrap();
        assert_eq!(b.group_order, 24);
        assert_eq!(b.classes.len(), 7);
        assert_eq!(b.field_polynomial, None);
    }

    #[test]
    fn cap() {
        assert_eq!(brute_force_classes(17), Err(Error::OracleScaleExceeded(17)));
        assert_eq!(brute_force_classes(4), Err(Error::NotOddPrimePower(4)));
    }
}
