//! The `h -> 0` and `q -> 1` limits of the deformed generators.

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::report::{check_all, report_or_error, VerificationReport};
use crate::rep::{build_uq_rep, RepSpec};
use crate::scalar::{substitute_q_one_hpoly, ClassicalQh, ExactQh, Numeric, NumericContext, Poly, SymbolicQ};
use crate::{FracHPoly, QFraction};

use super::build::{build_deformed, DeformedSet};

fn constant_term(m: &Matrix<FracHPoly>) -> Matrix<QFraction> {
    m.map(|p| p.coeff(0))
}

/// Dropping every positive power of `h` sends `X̂ -> J_+`, `Ŷ -> J_-`, `Ĥ -> J_0`.
pub fn h_zero_limit(d: &DeformedSet<FracHPoly>) -> VerificationReport {
    let g = &d.source;
    check_all(
        &SymbolicQ,
        "h -> 0 recovers U_q generators",
        "Limit-h0",
        d.label(),
        &[
            (constant_term(&d.xhat), constant_term(&g.jp)),
            (constant_term(&d.yhat), constant_term(&g.jm)),
            (constant_term(&d.hhat), constant_term(&g.j0)),
        ],
    )
}

/// At `h = 1e-8` the deformed matrices agree with the undeformed ones to `~1e-7`.
pub fn h_zero_numeric_continuity(q: Complex64, two_j: u32) -> VerificationReport {
    let ctx = NumericContext::new(q, Complex64::new(1e-8, 0.0)).with_tol(1e-7);
    let dom = Numeric::<f64>::new(&ctx);
    let label = format!("twoJ={two_j}");
    let run = || -> Result<VerificationReport> {
        let g = build_uq_rep(&dom, RepSpec::polynomial(two_j))?;
        let d = build_deformed(&dom, &g)?;
        Ok(check_all(
            &dom,
            "continuity at small h",
            "Limit-h0",
            &label,
            &[(d.xhat, g.jp.clone()), (d.yhat, g.jm.clone())],
        ))
    };
    report_or_error(&dom, "continuity at small h", "Limit-h0", &label, run())
}

/// Building at `q = 1` equals building for generic `q` and then setting `s = 1`.
pub fn limit_coherence(two_j: u32) -> VerificationReport {
    let label = format!("twoJ={two_j}");
    let run = || -> Result<VerificationReport> {
        let exact = build_deformed(&ExactQh, &build_uq_rep(&ExactQh, RepSpec::polynomial(two_j))?)?;
        let classical = build_deformed(&ClassicalQh, &build_uq_rep(&ClassicalQh, RepSpec::polynomial(two_j))?)?;
        let sub = |m: &Matrix<FracHPoly>| -> Matrix<Poly<crate::Rational>> { m.map(substitute_q_one_hpoly) };
        Ok(check_all(
            &ClassicalQh,
            "q -> 1 commutes with the construction",
            "Limit-q1",
            &label,
            &[
                (sub(&exact.xhat), classical.xhat),
                (sub(&exact.yhat), classical.yhat),
                (sub(&exact.hhat), classical.hhat),
            ],
        ))
    };
    report_or_error(&ClassicalQh, "q -> 1 commutes with the construction", "Limit-q1", &label, run())
}
