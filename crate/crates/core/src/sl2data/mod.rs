//! Conjugacy class data of `SL(2, q)` for odd `q`, the cyclic subgroup
//! parametrization used by the constraint engine, and the natural Brauer
//! characters restricted to a cyclic subgroup.

mod brute;
mod field;

use serde::Serialize;

pub use brute::{brute_force_classes, BruteForceClasses, ClassSignature};
pub use field::SmallField;

use crate::arith::{abs_rep, prime_power};
use crate::cyclotomic::CycElt;
use crate::error::{Error, Result};

/// `SL(2, q)` for an odd prime power `q = t^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupParams {
    pub q: u64,
    pub t: u64,
    pub f: u32,
}

impl GroupParams {
    pub fn new(q: u64) -> Result<Self> {
        match prime_power(q) {
            Some((t, f)) if t != 2 => Ok(GroupParams { q, t, f }),
            _ => Err(Error::NotOddPrimePower(q)),
        }
    }

    pub fn order(&self) -> u64 {
        self.q * (self.q * self.q - 1)
    }
}

/// Which maximal torus (if any) a class meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusKind {
    Central,
    Unipotent,
    Split,
    Nonsplit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub label: String,
    pub order: u64,
    pub size: u64,
    #[serde(skip)]
    pub torus: TorusKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTable {
    pub q: u64,
    pub classes: Vec<ClassInfo>,
}

fn split_label(q: u64, y: u64) -> String {
    let r = abs_rep(y as i64, q - 1);
    match r {
        0 => "1".into(),
        r if 2 * r == q - 1 => "J".into(),
        r => format!("s{r}"),
    }
}

fn nonsplit_label(q: u64, y: u64) -> String {
    let r = abs_rep(y as i64, q + 1);
    match r {
        0 => "1".into(),
        r if 2 * r == q + 1 => "J".into(),
        r => format!("ns{r}"),
    }
}

/// The `q + 4` conjugacy classes: `1`, `J`, four unipotent-type classes
/// `t_a, t_b, 2t_a, 2t_b`, the split classes `s{y}` for
/// `0 < y < (q-1)/2` and the non-split classes `ns{y}` for `0 < y < (q+1)/2`.
pub fn class_table(q: u64) -> Result<ClassTable> {
    let g = GroupParams::new(q)?;
    let t = g.t;
    let mut classes = vec![
        ClassInfo { label: "1".into(), order: 1, size: 1, torus: TorusKind::Central },
        ClassInfo { label: "J".into(), order: 2, size: 1, torus: TorusKind::Central },
    ];
    for (label, order) in [("t_a", t), ("t_b", t), ("2t_a", 2 * t), ("2t_b", 2 * t)] {
        classes.push(ClassInfo {
            label: label.into(),
            order,
            size: (q * q - 1) / 2,
            torus: TorusKind::Unipotent,
        });
    }
    for y in 1..(q - 1) / 2 {
        classes.push(ClassInfo {
            label: format!("s{y}"),
            order: (q - 1) / num_integer::gcd(y, q - 1),
            size: q * (q + 1),
            torus: TorusKind::Split,
        });
    }
    for y in 1..(q + 1) / 2 {
        classes.push(ClassInfo {
            label: format!("ns{y}"),
            order: (q + 1) / num_integer::gcd(y, q + 1),
            size: q * (q - 1),
            torus: TorusKind::Nonsplit,
        });
    }
    Ok(ClassTable { q, classes })
}

impl ClassTable {
    pub fn get(&self, label: &str) -> Option<&ClassInfo> {
        self.classes.iter().find(|c| c.label == label)
    }

    /// Sorted `(order, size, torus)` triples, for comparison with brute force.
    pub fn signature(&self) -> Vec<ClassSignature> {
        let mut v: Vec<_> = self
            .classes
            .iter()
            .map(|c| ClassSignature { order: c.order, size: c.size, torus: c.torus })
            .collect();
        v.sort();
        v
    }

    /// The class of `J g` for `g` in the given class.
    pub fn central_shift_partner(&self, label: &str) -> Option<String> {
        let q = self.q;
        self.get(label)?;
        let out = match label {
            "1" => "J".to_string(),
            "J" => "1".to_string(),
            "t_a" => "2t_a".into(),
            "t_b" => "2t_b".into(),
            "2t_a" => "t_a".into(),
            "2t_b" => "t_b".into(),
            l => {
                if let Some(y) = l.strip_prefix("ns") {
                    let y: u64 = y.parse().ok()?;
                    nonsplit_label(q, y + (q + 1) / 2)
                } else {
                    let y: u64 = l.strip_prefix('s')?.parse().ok()?;
                    split_label(q, y + (q - 1) / 2)
                }
            }
        };
        Some(out)
    }
}

/// The cyclic subgroup `<g_0>` of order `n` inside a maximal torus, with the
/// class label of `g_0^x` for each representative `x` of `Gamma_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicFrame {
    pub q: u64,
    pub n: u64,
    pub torus: TorusKind,
    /// `0, 1, ..., floor(n/2)`.
    pub reps: Vec<u64>,
    pub labels: Vec<String>,
}

/// Requires `gcd(n, q) = 1` and `n | q - 1` or `n | q + 1`. The split torus is
/// used whenever it contains an element of order `n`.
pub fn cyclic_frame(q: u64, n: u64) -> Result<CyclicFrame> {
    let g = GroupParams::new(q)?;
    if n == 0 {
        return Err(Error::OrderNotRepresented { q, n });
    }
    if n % g.t == 0 {
        return Err(Error::ModularOrder { t: g.t, n });
    }
    let (torus, m) = if (q - 1) % n == 0 {
        (TorusKind::Split, q - 1)
    } else if (q + 1) % n == 0 {
        (TorusKind::Nonsplit, q + 1)
    } else {
        return Err(Error::OrderNotRepresented { q, n });
    };
    let reps: Vec<u64> = (0..=n / 2).collect();
    let labels = reps
        .iter()
        .map(|&x| {
            let y = x * (m / n);
            match torus {
                TorusKind::Split => split_label(q, y),
                _ => nonsplit_label(q, y),
            }
        })
        .collect();
    Ok(CyclicFrame { q, n, torus, reps, labels })
}

impl CyclicFrame {
    pub fn label(&self, x: i64) -> &str {
        &self.labels[abs_rep(x, self.n) as usize]
    }
}

/// `chi_m(g_0^i) = sum_{j = m mod 2, |j| <= m} zeta_n^{ij}`: the natural
/// `t`-Brauer character of degree `m + 1` on `g_0^i`.
pub fn brauer_char_value(m: u64, n: u64, i: i64) -> CycElt {
    let mut z = CycElt::zero(n);
    let m = m as i64;
    let mut j = -m;
    while j <= m {
        z.add_monomial(i * j, 1);
        j += 2;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_and_sizes() {
        for q in [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 31] {
            let ct = class_table(q).unwrap();
            assert_eq!(ct.classes.len() as u64, q + 4);
            let total: u64 = ct.classes.iter().map(|c| c.size).sum();
            assert_eq!(total, q * q * q - q);
        }
        assert_eq!(class_table(8), Err(Error::NotOddPrimePower(8)));
        assert_eq!(class_table(15), Err(Error::NotOddPrimePower(15)));
    }

    #[test]
    fn shift_partners() {
        let ct = class_table(7).unwrap();
        assert_eq!(ct.central_shift_partner("1").unwrap(), "J");
        assert_eq!(ct.central_shift_partner("t_b").unwrap(), "2t_b");
        // split torus of order 6: J diag(l, 1/l) = diag(l^4, l^-4) ~ s2
        assert_eq!(ct.central_shift_partner("s1").unwrap(), "s2");
        // non-split torus of order 8: y = 1 -> 5 ~ 3
        assert_eq!(ct.central_shift_partner("ns1").unwrap(), "ns3");
        assert_eq!(ct.central_shift_partner("ns2").unwrap(), "ns2");
        assert!(ct.central_shift_partner("x").is_none());
    }

    #[test]
    fn frames() {
        let f = cyclic_frame(7, 8).unwrap();
        assert_eq!(f.reps, vec![0, 1, 2, 3, 4]);
        assert_eq!(f.labels, vec!["1", "ns1", "ns2", "ns3", "J"]);
        let f = cyclic_frame(23, 24).unwrap();
        assert_eq!(f.reps.len(), 13);
        assert_eq!(f.label(12), "J");
        assert_eq!(cyclic_frame(5, 7), Err(Error::OrderNotRepresented { q: 5, n: 7 }));
        assert_eq!(cyclic_frame(9, 6), Err(Error::ModularOrder { t: 3, n: 6 }));
    }

    #[test]
    fn brauer_values() {
        assert_eq!(brauer_char_value(1, 8, 0), CycElt::constant(8, 2));
        let a = brauer_char_value(3, 24, 1);
        assert_eq!(a, &CycElt::alpha(24, 1) + &CycElt::alpha(24, 3));
        for n in 3..20u64 {
            for m in 0..8 {
                for i in 0..n as i64 {
                    assert_eq!(brauer_char_value(m, n, i), brauer_char_value(m, n, -i));
                }
                assert_eq!(brauer_char_value(m, n, 0), CycElt::constant(n, m as i64 + 1));
                if n % 2 == 0 {
                    let sign = if m % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        brauer_char_value(m, n, n as i64 / 2),
                        CycElt::constant(n, sign * (m as i64 + 1))
                    );
                }
            }
        }
    }
}
