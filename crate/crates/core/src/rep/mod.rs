//! Finite-dimensional representations of `U_q(sl(2))`.

pub mod checks;
pub mod generators;

pub use checks::{
    rep_suite, power_action_matrix,
    basis_equivalence_check, power_action_check, verify_eq25_conjugation, verify_power_identity,
    verify_uq_relations,
};
pub use generators::{build_uq_rep, Basis, GeneratorSet, RepSpec};
