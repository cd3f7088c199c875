//! Arithmetic in `Z[zeta_n]` and its real subring `Z[alpha_1]`.

mod basis;
mod elt;
mod modulus;
mod oracle;
mod poly;
mod trace;

pub use basis::{beta, delta, gamma_rep, gammas, kappa, similar, RealBasis};
pub use elt::{BasisLabel, CycElt, RealElt};
pub use modulus::Modulus;
pub use oracle::{certify_basis, oracle_expand, OracleSolver};
pub use poly::{cyclotomic_poly, reduce};
pub use trace::{trace_elt, trace_table, trace_zeta};
