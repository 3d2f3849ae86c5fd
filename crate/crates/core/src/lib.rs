//! Exact and numeric workbench for the nonlinear map from `U_q(sl(2))` to
//! the doubly deformed algebra `U_{q,h}(sl(2))`.
//!
//! The crate builds finite-dimensional representations of `U_q(sl(2))`,
//! pushes them through the map, and checks every algebraic identity the
//! construction relies on. Exact checks run over `Q(s)[h]` with
//! `s = q^{1/2}`; numeric checks evaluate the same code at complex `q, h`.
//!
//! All constructions are generic over a [`QDomain`]; the concrete
//! aliases below name the types used in practice.

pub mod coalgebra;
pub mod deform;
pub mod error;
pub mod matrix;
pub mod qseries;
pub mod report;
pub mod rep;
pub mod sampling;
pub mod ring;
pub mod scalar;

pub use coalgebra::TensorRep;
pub use deform::{build_deformed, DeformedSet};
pub use error::{Error, Result};
pub use matrix::{nilpotent_series_eval, Matrix};
pub use rep::{build_uq_rep, Basis, GeneratorSet, RepSpec};
pub use report::VerificationReport;
pub use ring::Ring;
pub use scalar::{
    ClassicalQ, ClassicalQh, DenMonomial, ExactQh, Laurent, Mode, Numeric, NumericContext, Poly,
    QDomain, QFraction, QhDomain, SymbolicQ,
};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `s = q^{1/2}` with rational coefficients.
pub type LaurentScalar = Laurent<Rational>;
/// Polynomial in `h` with Laurent coefficients.
pub type HPoly = Poly<LaurentScalar>;
/// Polynomial in `h` over the quotient ring `Q[s, 1/s][1/{k}]`.
pub type FracHPoly = Poly<QFraction>;
/// Exact deformed matrices.
pub type ExactMatrix = Matrix<FracHPoly>;
/// Double-precision numeric matrices.
pub type NumericMatrix = Matrix<num_complex::Complex64>;
/// Double-precision numeric domain.
pub type Numeric64 = Numeric<f64>;
