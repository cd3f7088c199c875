use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::reduce;
use crate::arith::modn;
use crate::error::{Error, Result};

/// An element of `Z[zeta_n]`, stored as its preimage in `Z[X]/(X^n - 1)`:
/// `coeffs[e]` is the coefficient of `zeta_n^e`.
///
/// Equality is equality of the images in `Q(zeta_n)`, decided by reduction
/// modulo `Phi_n`.
#[derive(Debug, Clone)]
pub struct CycElt {
    n: u64,
    coeffs: Vec<i64>,
}

impl CycElt {
    pub fn zero(n: u64) -> Self {
        assert!(n >= 1);
        CycElt { n, coeffs: vec![0; n as usize] }
    }

    pub fn constant(n: u64, c: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    pub fn one(n: u64) -> Self {
        Self::constant(n, 1)
    }

    /// `c * zeta_n^e`.
    pub fn monomial(n: u64, e: i64, c: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[modn(e, n) as usize] = c;
        z
    }

    pub fn from_coeffs(n: u64, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len() as u64, n, "coefficient vector must have length n");
        CycElt { n, coeffs }
    }

    /// `alpha_x = zeta_n^x + zeta_n^{-x}`.
    pub fn alpha(n: u64, x: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[modn(x, n) as usize] += 1;
        z.coeffs[modn(-x, n) as usize] += 1;
        z
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.coeffs[modn(e, self.n) as usize]
    }

    pub fn add_monomial(&mut self, e: i64, c: i64) {
        self.coeffs[modn(e, self.n) as usize] += c;
    }

    /// Nonzero `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e as u64, c))
    }

    /// Power-basis coordinates after reduction modulo `Phi_n`.
    pub fn canonical(&self) -> Vec<i64> {
        reduce(&self.coeffs, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|&c| c == 0)
    }

    /// Image under `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut out = vec![0; n];
        for (e, &c) in self.coeffs.iter().enumerate() {
            out[(n - e) % n] += c;
        }
        CycElt { n: self.n, coeffs: out }
    }

    pub fn is_real(&self) -> bool {
        (self - &self.conj()).is_zero()
    }

    /// Image under the Galois-type substitution `zeta -> zeta^k` (a ring
    /// endomorphism of `Z[X]/(X^n - 1)` for any integer `k`).
    pub fn power_map(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in self.terms() {
            out.add_monomial(e as i64 * k, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        CycElt { n: self.n, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "cyclotomic modulus mismatch");
    }
}

impl PartialEq for CycElt {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && (self - other).is_zero()
    }
}

impl Eq for CycElt {}

impl Add for &CycElt {
    type Output = CycElt;
    fn add(self, rhs: &CycElt) -> CycElt {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycElt { n: self.n, coeffs }
    }
}

impl Sub for &CycElt {
    type Output = CycElt;
    fn sub(self, rhs: &CycElt) -> CycElt {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycElt { n: self.n, coeffs }
    }
}

impl Neg for &CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        self.scale(-1)
    }
}

impl Mul for &CycElt {
    type Output = CycElt;
    fn mul(self, rhs: &CycElt) -> CycElt {
        self.check(rhs);
        let n = self.n as usize;
        let mut out = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        CycElt { n: self.n, coeffs: out }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for CycElt {
            type Output = CycElt;
            fn $f(self, rhs: CycElt) -> CycElt {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct CycEltRepr {
    n: u64,
    coeffs: BTreeMap<u64, i64>,
}

impl Serialize for CycElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycEltRepr { n: self.n, coeffs: self.terms().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycElt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CycEltRepr::deserialize(d)?;
        if r.n == 0 {
            return Err(serde::de::Error::custom("n must be positive"));
        }
        let mut z = CycElt::zero(r.n);
        for (e, c) in r.coeffs {
            z.add_monomial(e as i64, c);
        }
        Ok(z)
    }
}

/// A label of the real basis: the constant `1` (only when `n` is a power of
/// two) or `alpha_b` for a class representative `b` in `[0, n/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    One,
    Alpha(u64),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::One => write!(f, "1"),
            BasisLabel::Alpha(b) => write!(f, "a{b}"),
        }
    }
}

impl FromStr for BasisLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(BasisLabel::One);
        }
        s.strip_prefix('a')
            .and_then(|r| r.parse().ok())
            .map(BasisLabel::Alpha)
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasisLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of `Z[alpha_1]` written in the real basis for modulus `n`.
/// Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealElt {
    n: u64,
    coeffs: BTreeMap<BasisLabel, i64>,
}

impl RealElt {
    pub fn zero(n: u64) -> Self {
        RealElt { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn coeff(&self, label: BasisLabel) -> i64 {
        self.coeffs.get(&label).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<BasisLabel, i64> {
        &self.coeffs
    }

    pub fn add_to(&mut self, label: BasisLabel, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(label).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&label);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &RealElt, k: i64) {
        assert_eq!(self.n, other.n);
        for (&l, &c) in &other.coeffs {
            self.add_to(l, c * k);
        }
    }

    /// Sum `C_1 * 1 + sum_b C_b alpha_b` as a cyclotomic element.
    pub fn to_cyc(&self) -> CycElt {
        let mut z = CycElt::zero(self.n);
        for (&l, &c) in &self.coeffs {
            match l {
                BasisLabel::One => z.add_monomial(0, c),
                BasisLabel::Alpha(b) => {
                    z.add_monomial(b as i64, c);
                    z.add_monomial(-(b as i64), c);
                }
            }
        }
        z
    }

    pub(crate) fn from_map(n: u64, coeffs: BTreeMap<BasisLabel, i64>) -> Self {
        let coeffs = coeffs.into_iter().filter(|&(_, c)| c != 0).collect();
        RealElt { n, coeffs }
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> i64 {
        self.coeffs.values().map(|c| c.abs()).max().unwrap_or(0)
    }
}
