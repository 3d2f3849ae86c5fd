//! Exact scalar arithmetic and numeric evaluation.

pub mod domain;
pub mod fraction;
pub mod json;
pub mod laurent;
pub mod poly;

pub use domain::{
    clear_denominators, eval_numeric, eval_numeric_hpoly, substitute_q_one, substitute_q_one_hpoly,
    ClassicalQ, ClassicalQh, ExactQh, Mode, Numeric, NumericContext, Outcome, QDomain, QhDomain,
    SymbolicQ,
};
pub use fraction::{DenMonomial, QFraction};
pub use laurent::{q_integer_laurent, s_integer, Laurent};
pub use poly::Poly;
