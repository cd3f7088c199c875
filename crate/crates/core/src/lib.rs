//! Cyclotomic arithmetic, the ordinary and modular character data of
//! `SL(2, q)` needed for partial augmentation problems, and a solver for the
//! HeLP constraint system.

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod helpengine;
pub mod linalg;
pub mod paperchecks;
pub mod sl2data;

pub use error::{Error, Result};
