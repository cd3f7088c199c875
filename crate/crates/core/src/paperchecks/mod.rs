//! Numerical reproduction of the identities and case distinctions used to
//! rule out nontrivial units.

mod lambda;
mod profiles;
mod twopower;

pub use lambda::{div_check_52, lambda_map_rank, lambda_value, lemma51_criterion};
pub use profiles::{
    admissible, case_analysis, coeff_diff, lemma53_bound, literal_diff, nu_profiles, x_set,
    CaseVerdict, NuProfile,
};
pub use twopower::{
    a_quantity, ab_admissible, b_quantity, check_a_given_b, check_b_values, check_periodicity,
    check_proof_identities, EpsSymbols, IdentityCheck,
};
