//! The deformed generators, their relations, inversion and limits.

use num_complex::Complex64;
use proptest::prelude::*;

use qhdeform::deform::identities::deformed_suite;
use qhdeform::deform::{
    basis_action_x_check, build_deformed_with_alphas, casimir_check, h_zero_limit, h_zero_numeric_continuity,
    invert_map, jordanian_limit_suite, limit_coherence, normal_ordered_y_check, verify_main_commutator,
};
use qhdeform::qseries::alphas;
use qhdeform::{build_deformed, build_uq_rep, ClassicalQh, ExactQh, Numeric, NumericContext, QDomain, RepSpec};

#[test]
fn exact_closure_and_round_trip_up_to_spin_four() {
    for tj in 0..=8 {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
        let d = build_deformed(&ExactQh, &g).unwrap();
        assert!(d.xhat.is_strictly_upper());
        assert_eq!(d.truncation, g.dim() - 1);
        assert_eq!(invert_map(&ExactQh, &d).unwrap(), g.jp);
        if tj <= 6 {
            for rep in deformed_suite(&ExactQh, &d) {
                assert!(rep.pass, "{rep:?}");
            }
            assert!(h_zero_limit(&d).pass);
        } else {
            assert!(verify_main_commutator(&ExactQh, &d).pass);
        }
    }
}

#[test]
fn main_commutator_numeric_example() {
    let ctx = NumericContext::new(Complex64::new(1.7, 0.2), Complex64::new(0.9, 0.0));
    let dom = Numeric::<f64>::new(&ctx);
    let g = build_uq_rep(&dom, RepSpec::polynomial(5)).unwrap();
    let rep = verify_main_commutator(&dom, &build_deformed(&dom, &g).unwrap());
    assert!(rep.pass && rep.max_residual.unwrap() < 1e-10, "{rep:?}");
}

#[test]
fn jordanian_and_casimir() {
    for tj in 0..=6 {
        for rep in jordanian_limit_suite(&ClassicalQh, tj) {
            assert!(rep.pass, "{rep:?}");
        }
        assert!(casimir_check(&qhdeform::SymbolicQ, &build_uq_rep(&qhdeform::SymbolicQ, RepSpec::polynomial(tj)).unwrap()).pass);
    }
}

#[test]
fn limits() {
    for tj in 0..=6 {
        assert!(limit_coherence(tj).pass, "twoJ={tj}");
    }
    assert!(h_zero_numeric_continuity(Complex64::new(0.8, 0.5), 6).pass);
}

#[test]
fn symmetric_basis_action_formulas() {
    for (q, h) in [(1.2, 0.5), (0.7, 0.9)] {
        let ctx = NumericContext::new(Complex64::new(q, 0.0), Complex64::new(h, 0.0));
        for tj in 0..=4 {
            assert!(normal_ordered_y_check(&ctx, tj).pass);
            assert!(basis_action_x_check(&ctx, tj).pass);
        }
    }
    // h = 0: all forms reduce to the undeformed action.
    let ctx = NumericContext::new(Complex64::new(1.4, 0.0), Complex64::new(0.0, 0.0));
    assert!(normal_ordered_y_check(&ctx, 3).pass);
}

#[test]
fn perturbed_coefficients_are_detected() {
    for tj in 3..=5 {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
        let mut a = alphas(&ExactQh, 3).unwrap().values;
        a[1] = a[1].clone() * ExactQh.int(2);
        let d = build_deformed_with_alphas(&ExactQh, &g, &a).unwrap();
        assert!(!verify_main_commutator(&ExactQh, &d).pass, "twoJ={tj}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn numeric_suite_at_random_points(
        logr in 0.5f64.ln()..2f64.ln(), phase in 0.0..std::f64::consts::TAU,
        hr in 0.0f64..1.0, hphase in 0.0..std::f64::consts::TAU, tj in 0u32..=6,
    ) {
        let ctx = NumericContext::new(Complex64::from_polar(logr.exp(), phase), Complex64::from_polar(hr, hphase));
        prop_assume!(ctx.check_generic(2 * tj as i64 + 4).is_ok());
        let dom = Numeric::<f64>::new(&ctx);
        let g = build_uq_rep(&dom, RepSpec::polynomial(tj)).unwrap();
        let d = build_deformed(&dom, &g).unwrap();
        for rep in deformed_suite(&dom, &d) {
            prop_assert!(rep.pass, "{:?}", rep);
        }
    }
}
