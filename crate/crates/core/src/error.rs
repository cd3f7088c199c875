use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate modulus {0}: the real subfield is Q")]
    DegenerateModulus(u64),

    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },

    #[error("element outside subfield Q(zeta_{m}): monomial of order {order}")]
    ElementOutsideSubfield { m: u64, order: u64 },

    #[error("element is not real (not fixed by complex conjugation)")]
    NotReal,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("zeta_{n}^{e} has no expansion over the real basis residues")]
    NoZetaExpansion { n: u64, e: i64 },

    #[error("not a basis: {0}")]
    NotABasis(String),

    #[error("element not in the span of the candidate set")]
    NotInSpan,

    #[error("invalid basis label {0}")]
    InvalidLabel(String),

    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),

    #[error("oracle scale exceeded: q = {0}")]
    OracleScaleExceeded(u64),

    #[error("order not represented: SL(2,{q}) has no element of order {n}")]
    OrderNotRepresented { q: u64, n: u64 },

    #[error("modular order out of scope: {t} divides n = {n}")]
    ModularOrder { t: u64, n: u64 },

    #[error("invalid partial augmentation vector: {0}")]
    InvalidPaVector(String),

    #[error("invalid power data: {0}")]
    InvalidPowerData(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("profile enumeration cap exceeded ({0} candidates)")]
    ProfileCapExceeded(u64),

    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
