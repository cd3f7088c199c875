//! Partial augmentation constraints from eigenvalue multiplicities of the
//! natural Brauer characters of `SL(2, q)`, and an exhaustive solver for them.

mod forms;
mod search;

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

pub use forms::{multiplicity, LinearForms};
pub use search::solve;

use crate::arith::{abs_rep, divisors};
use crate::error::{Error, Result};
use crate::sl2data::{cyclic_frame, CyclicFrame, GroupParams};

/// Default cap on search nodes; `ZCHELP_NODE_CAP` overrides it.
pub const DEFAULT_NODE_CAP: u64 = 5_000_000;

/// The node cap from `ZCHELP_NODE_CAP`, falling back to [`DEFAULT_NODE_CAP`].
pub fn node_cap_from_env() -> u64 {
    std::env::var("ZCHELP_NODE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_NODE_CAP)
}

/// Partial augmentations of a candidate unit over the representatives
/// `0..=n/2` of `Gamma_n` (the classes of `g_0^x`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaVector {
    n: u64,
    eps: Vec<i64>,
}

impl PaVector {
    pub fn from_vec(n: u64, eps: Vec<i64>) -> Result<Self> {
        if eps.len() as u64 != n / 2 + 1 {
            return Err(Error::InvalidPaVector(format!(
                "expected {} entries, got {}",
                n / 2 + 1,
                eps.len()
            )));
        }
        Ok(PaVector { n, eps })
    }

    /// Builds a vector from `(x, value)` pairs, folding `x` into `Gamma_n`.
    pub fn from_pairs(n: u64, pairs: &[(i64, i64)]) -> Self {
        let mut eps = vec![0; n as usize / 2 + 1];
        for &(x, v) in pairs {
            eps[abs_rep(x, n) as usize] += v;
        }
        PaVector { n, eps }
    }

    /// The indicator `e_a` of the class of `g_0^a`.
    pub fn indicator(n: u64, a: i64) -> Self {
        Self::from_pairs(n, &[(a, 1)])
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, x: i64) -> i64 {
        self.eps[abs_rep(x, self.n) as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.eps
    }

    pub fn augmentation(&self) -> i64 {
        self.eps.iter().sum()
    }

    /// The indicator of a single class with value 1.
    pub fn is_trivial(&self) -> bool {
        self.eps.iter().filter(|&&v| v != 0).count() == 1 && self.eps.contains(&1)
    }

    /// Augmentation one, and zero on the central classes `0` and `n/2`.
    pub fn validate(&self) -> Result<()> {
        if self.augmentation() != 1 {
            return Err(Error::InvalidPaVector(format!(
                "augmentation {} instead of 1",
                self.augmentation()
            )));
        }
        if self.n > 2 {
            if self.eps[0] != 0 {
                return Err(Error::InvalidPaVector("nonzero entry on the identity".into()));
            }
            if self.n % 2 == 0 && self.eps[self.n as usize / 2] != 0 {
                return Err(Error::InvalidPaVector("nonzero entry on J".into()));
            }
        }
        Ok(())
    }
}

impl Serialize for PaVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.eps.len()))?;
        for (x, v) in self.eps.iter().enumerate() {
            map.serialize_entry(&x.to_string(), v)?;
        }
        map.end()
    }
}

/// `eps(u^d)` for every divisor `d > 1` of `n`, as partial augmentation maps
/// over `Gamma_n` representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerData {
    pub by_divisor: BTreeMap<u64, BTreeMap<u64, i64>>,
}

impl PowerData {
    /// `u^d` is conjugate to `g_0^d` for every proper power.
    pub fn inductive(n: u64) -> Self {
        Self::of_element(n, 1)
    }

    /// The power data of the group element `g_0^a`.
    pub fn of_element(n: u64, a: i64) -> Self {
        let by_divisor = divisors(n)
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| (d, BTreeMap::from([(abs_rep(a * d as i64, n), 1)])))
            .collect();
        PowerData { by_divisor }
    }

    /// Every divisor `d > 1` present, augmentation one, support on classes of
    /// order dividing `n/d`, and `u^n = 1`.
    pub fn validate(&self, n: u64) -> Result<()> {
        for d in divisors(n).into_iter().filter(|&d| d > 1) {
            let Some(map) = self.by_divisor.get(&d) else {
                return Err(Error::InvalidPowerData(format!("missing divisor {d}")));
            };
            if map.values().sum::<i64>() != 1 {
                return Err(Error::InvalidPowerData(format!("augmentation of u^{d} is not 1")));
            }
            for (&y, &v) in map {
                if v != 0 && (2 * y > n || y % d != 0) {
                    return Err(Error::InvalidPowerData(format!(
                        "u^{d} has weight on class {y} of order not dividing {}",
                        n / d
                    )));
                }
            }
        }
        if let Some(d) = self.by_divisor.keys().find(|&&d| d <= 1 || n % d != 0) {
            return Err(Error::InvalidPowerData(format!("{d} is not a proper divisor key")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerMode {
    Inductive,
    Custom(PowerData),
}

impl Serialize for PowerMode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PowerMode::Inductive => s.serialize_str("inductive"),
            PowerMode::Custom(_) => s.serialize_str("custom"),
        }
    }
}

/// A constraint system for units of order `n` in `V(Z SL(2, q))`.
#[derive(Debug, Clone, Serialize)]
pub struct HelpProblem {
    pub q: u64,
    pub n: u64,
    /// Degrees `m` of the characters `chi_m` used.
    pub characters: Vec<u64>,
    pub mode: PowerMode,
    /// Pin the `chi_1` rows to the eigenvalues `zeta^{±1}`.
    pub normalize: bool,
    /// Impose `sum_{x ~ y (mod n/2)} eps_x = [y ~ 1 (mod n/2)]`, i.e. the image
    /// in `PSL(2, q)` is conjugate to the image of `g_0`.
    pub projection: bool,
    /// Restrict the inequality rows to these `ell` (up to sign); `None` uses all.
    pub ells: Option<Vec<u64>>,
    pub node_cap: u64,
    #[serde(skip)]
    pub frame: CyclicFrame,
}

/// `1, 2, ..., floor(n/2) + 2`.
pub fn default_characters(n: u64) -> Vec<u64> {
    (1..=n / 2 + 2).collect()
}

impl HelpProblem {
    /// Default problem: all characters up to `floor(n/2) + 2`, inductive power
    /// data, normalization on, no projection, node cap from the environment.
    pub fn new(q: u64, n: u64) -> Result<Self> {
        GroupParams::new(q)?;
        let frame = cyclic_frame(q, n)?;
        if n < 3 {
            return Err(Error::InvalidProblem(format!(
                "order {n}: units of order at most 2 are central or trivial"
            )));
        }
        Ok(HelpProblem {
            q,
            n,
            characters: default_characters(n),
            mode: PowerMode::Inductive,
            normalize: true,
            projection: false,
            ells: None,
            node_cap: node_cap_from_env(),
            frame,
        })
    }

    pub fn with_characters(mut self, chars: Vec<u64>) -> Self {
        self.characters = chars;
        self
    }

    pub fn with_mode(mut self, mode: PowerMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_normalize(mut self, on: bool) -> Self {
        self.normalize = on;
        self
    }

    pub fn with_projection(mut self, on: bool) -> Self {
        self.projection = on;
        self
    }

    pub fn with_ells(mut self, ells: Option<Vec<u64>>) -> Self {
        self.ells = ells;
        self
    }

    pub fn with_node_cap(mut self, cap: u64) -> Self {
        self.node_cap = cap;
        self
    }

    pub fn power_data(&self) -> PowerData {
        match &self.mode {
            PowerMode::Inductive => PowerData::inductive(self.n),
            PowerMode::Custom(p) => p.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.characters.is_empty() || self.characters.contains(&0) {
            return Err(Error::InvalidProblem("character degrees must be positive".into()));
        }
        if self.projection && self.n % 2 != 0 {
            return Err(Error::InvalidProblem("projection needs n even".into()));
        }
        if self.node_cap == 0 {
            return Err(Error::InvalidProblem("node cap must be positive".into()));
        }
        self.power_data().validate(self.n)
    }

    /// Whether the row for `ell` is active under the `ells` filter.
    pub fn row_active(&self, ell: i64) -> bool {
        match &self.ells {
            None => true,
            Some(v) => v.iter().any(|&e| abs_rep(e as i64, self.n) == abs_rep(ell, self.n)),
        }
    }

    /// Free representatives: `Gamma_n` minus the central classes.
    pub fn free_reps(&self) -> Vec<u64> {
        (1..=self.n / 2).filter(|&x| 2 * x != self.n).collect()
    }
}

/// Multiplicities `mult(m, ell)` for `ell` in `0..n`, per character degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub n: u64,
    pub rows: BTreeMap<u64, Vec<Ratio<i64>>>,
}

impl Serialize for MultiplicityTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.rows.len()))?;
        for (m, row) in &self.rows {
            let vals: Vec<serde_json::Value> = row
                .iter()
                .map(|r| {
                    if r.is_integer() {
                        serde_json::Value::from(r.to_integer())
                    } else {
                        serde_json::Value::from(r.to_string())
                    }
                })
                .collect();
            map.serialize_entry(&m.to_string(), &vals)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    pub table: MultiplicityTable,
    /// Human-readable reasons for failure.
    pub failures: Vec<String>,
}

/// Evaluates every multiplicity of the problem at `eps` and checks that they
/// are non-negative integers with row sums `m + 1`, plus the normalization and
/// projection equalities when enabled.
pub fn check_vector(problem: &HelpProblem, eps: &PaVector) -> Result<CheckResult> {
    problem.validate()?;
    if eps.n() != problem.n {
        return Err(Error::ModulusMismatch(eps.n(), problem.n));
    }
    eps.validate()?;
    let forms = LinearForms::new(problem)?;
    Ok(forms.check(problem, eps))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub eps: PaVector,
    pub trivial: bool,
    pub multiplicities: MultiplicityTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Complete,
    /// The search hit the node cap.
    NodeCap,
    /// The constraints do not bound the search space.
    Unbounded,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub mode: PowerMode,
    pub normalize: bool,
    pub projection: bool,
    pub ells: Option<Vec<u64>>,
    pub node_cap: u64,
    pub nodes: u64,
    pub torus: crate::sl2data::TorusKind,
    pub class_labels: Vec<String>,
    pub field_polynomial: Option<String>,
    pub status: SearchStatus,
    /// Number of free parameters after eliminating the equalities.
    pub free_dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct HelpReport {
    pub q: u64,
    pub n: u64,
    pub characters: Vec<u64>,
    pub survivors: Vec<Survivor>,
    pub complete: bool,
    pub all_trivial: bool,
    pub provenance: Provenance,
}

impl HelpReport {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Survivor> {
        self.survivors.iter().filter(|s| !s.trivial)
    }
}

/// Runs the default problem for every order `n > 2` of an element of
/// `SL(2, q)` coprime to `q`, i.e. the divisors of `q - 1` and `q + 1`.
pub fn zc_scan(q: u64) -> Result<Vec<HelpReport>> {
    GroupParams::new(q)?;
    scan_orders(q).into_iter().map(|n| solve(&HelpProblem::new(q, n)?)).collect()
}

/// The orders scanned by [`zc_scan`].
pub fn scan_orders(q: u64) -> Vec<u64> {
    let mut orders: Vec<u64> = divisors(q - 1).into_iter().chain(divisors(q + 1)).filter(|&n| n > 2).collect();
    orders.sort();
    orders.dedup();
    orders
}
