//! Closed-form inversion between `u = Σ P_n(ξ) v^{2n+1}` and `v`.
//!
//! `u = v / sqrt((1 - q²v²)(1 - q⁻²v²))` squares to
//! `v⁴ - (2ξ + 1/u²) v² + 1 = 0`, whose roots are
//! `v² = c ± sqrt(c² - 1)` with `c = ξ + 1/(2u²)`. The root that vanishes
//! with `u` is taken, in the cancellation-free form `1/(c + sqrt(c² - 1))`.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::NumericContext;

fn xi(q: Complex64) -> Complex64 {
    (q * q + (q * q).inv()) * 0.5
}

/// `u = v (1 - q²v²)^{-1/2} (1 - q⁻²v²)^{-1/2}` with principal roots, which
/// are continuous from 1 for small `v`.
pub fn u_of_v(v: Complex64, q: Complex64) -> Complex64 {
    let a = Complex64::new(1.0, 0.0) - q * q * v * v;
    let b = Complex64::new(1.0, 0.0) - v * v / (q * q);
    v / (a.sqrt() * b.sqrt())
}

/// Solves `u_of_v(v) = u` for the branch with `v ≈ u` as `u -> 0`.
///
/// Both roots of the quadratic in `v²` and both signs of `v` are tried;
/// a candidate is accepted when it lies on the same side as `u`
/// (`|v/u - 1| < 1`) and reproduces `u`.
pub fn v_of_u(u: Complex64, ctx: &NumericContext) -> Result<Complex64> {
    if u.is_zero() {
        return Ok(Complex64::zero());
    }
    let q = ctx.q;
    let c = xi(q) + (u * u * 2.0).inv();
    let r = (c * c - 1.0).sqrt();
    let roots = [(c + r).inv(), (c - r).inv()];
    let tol = 1e-8 * (1.0 + u.norm());
    let mut best: Option<(f64, Complex64)> = None;
    for w in roots {
        let root = w.sqrt();
        for v in [root, -root] {
            if !v.is_finite() || (v / u - 1.0).norm() >= 1.0 {
                continue;
            }
            let err = (u_of_v(v, q) - u).norm();
            if err <= tol && best.is_none_or(|(e, _)| err < e) {
                best = Some((err, v));
            }
        }
    }
    best.map(|(_, v)| v).ok_or_else(|| Error::BranchAmbiguity { u: format!("{u}") })
}

/// The `q = 1` closed form `v = (sqrt(1 + 4u²) - 1)/(2u)`.
pub fn v_of_u_classical(u: f64) -> f64 {
    if u == 0.0 {
        return 0.0;
    }
    ((1.0 + 4.0 * u * u).sqrt() - 1.0) / (2.0 * u)
}
