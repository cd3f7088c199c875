//! Small finite fields `F_p` and `F_{p^2}` with table-driven arithmetic.

use crate::arith::is_prime;

/// A finite field of order `p` or `p^2`. Elements are indices `a + b p`
/// standing for `a + b X`, where `X^2 = c` in the quadratic case.
#[derive(Debug, Clone)]
pub struct SmallField {
    p: u32,
    size: u32,
    c: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

fn is_square_mod(x: u32, p: u32) -> bool {
    (0..p).any(|y| (y * y) % p == x % p)
}

impl SmallField {
    /// `F_p` for `f = 1`, `F_p[X]/(X^2 - c)` for `f = 2` with `c = -1` when
    /// that is a non-residue, else the least non-residue.
    pub fn new(p: u32, f: u32) -> Self {
        assert!(is_prime(p as u64) && p > 2 && (f == 1 || f == 2));
        let size = p.pow(f);
        let c = if f == 1 {
            0
        } else if !is_square_mod(p - 1, p) {
            p - 1
        } else {
            (2..p).find(|&x| !is_square_mod(x, p)).unwrap()
        };
        let split = |x: u32| (x % p, x / p);
        let join = |a: u32, b: u32| a % p + (b % p) * p;
        let s = size as usize;
        let mut add = vec![0; s * s];
        let mut mul = vec![0; s * s];
        for x in 0..size {
            let (a, b) = split(x);
            for y in 0..size {
                let (a2, b2) = split(y);
                add[(x * size + y) as usize] = join(a + a2, b + b2);
                mul[(x * size + y) as usize] = join(a * a2 + b * b2 % p * c, a * b2 + a2 * b);
            }
        }
        SmallField { p, size, c, add, mul }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// The defining polynomial, e.g. `X^2+1`; `None` for a prime field.
    pub fn polynomial(&self) -> Option<String> {
        if self.size == self.p {
            None
        } else if self.c == self.p - 1 {
            Some("X^2+1".into())
        } else {
            Some(format!("X^2-{}", self.c))
        }
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// The embedded prime-field element `k mod p`.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[(x * self.size + y) as usize]
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[(x * self.size + y) as usize]
    }

    pub fn neg(&self, x: u32) -> u32 {
        (0..self.size).find(|&y| self.add(x, y) == 0).unwrap()
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn is_square(&self, x: u32) -> bool {
        (0..self.size).any(|y| self.mul(y, y) == x)
    }
}
