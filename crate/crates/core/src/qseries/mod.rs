//! Scalar-level series machinery for the map.
//!
//! The forward map is the odd series `y = Σ α_n x^{2n+1}` with
//! `α_n = P_n(ξ)/[2n+1]`; its compositional inverse `x = Σ β_n y^{2n+1}`
//! is computed two independent ways (partition recursion and generic
//! order-by-order reversion).

pub mod classical;
pub mod coeffs;
pub mod genfun;
pub mod legendre;
pub mod reversion;
pub mod symbolic;
pub mod uv;

pub use classical::{bernoulli, tanh_index_report, TanhIndexRow};
pub use coeffs::{alpha, alphas, beta_recursive, enumerate_partitions, Partition, SeriesCoeffs, SeriesKind};
pub use genfun::{binomial_series, f_product_series, f_series};
pub use legendre::{legendre, legendre_at};
pub use reversion::{beta_oracle, compose, odd_series};
pub use symbolic::AlphaPoly;
pub use uv::{u_of_v, v_of_u, v_of_u_classical};

use crate::scalar::laurent::q_integer_laurent;
use crate::{LaurentScalar, Rational};
use num_traits::One;

/// `[n]` as a Laurent polynomial in `s`; `[-n] = -[n]`, `[0] = 0`.
pub fn q_integer(n: i64) -> LaurentScalar {
    q_integer_laurent::<Rational>(n)
}

/// `[n]! = [1][2]...[n]`, `[0]! = 1`.
pub fn q_factorial(n: u32) -> LaurentScalar {
    (1..=n as i64).fold(LaurentScalar::one(), |acc, k| acc * q_integer(k))
}
