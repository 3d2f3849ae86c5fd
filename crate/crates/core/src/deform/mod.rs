//! The nonlinear map from `U_q(sl(2))` to `U_{q,h}(sl(2))` on finite-dimensional
//! representations, its inverse, and checks of the deformed relations.
//!
//! All series in the raising generator terminate because `J_+` is nilpotent.
//! The formal prefactor `2/h` is never formed: `X̂` is built as
//! `J_+ Σ α_n v^{2n}` with `v = (h/2) J_+`.

pub mod build;
pub mod casimir;
pub mod identities;
pub mod jordanian;
pub mod limits;
pub mod normal_order;

pub use build::{build_deformed, build_deformed_with_alphas, invert_map, DeformedSet};
pub use casimir::casimir_check;
pub use identities::{
    deformed_suite,
    grading_check, jacobi_check, verify_f_forms, verify_hx_commutator, verify_hy_commutator,
    verify_main_commutator, verify_round_trip, verify_uv_relation, verify_x_jminus,
};
pub use jordanian::{exp_hx, jordanian_limit_suite, uh_relations, JordanianSet};
pub use limits::{h_zero_limit, h_zero_numeric_continuity, limit_coherence};
pub use normal_order::{basis_action_x_check, normal_ordered_y_check};
