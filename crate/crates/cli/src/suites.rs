//! Verification suites run by the subcommands.

use num_complex::Complex64;
use qhdeform::coalgebra::{jordanian_coproduct_check, qh_coproduct_suite, uq_coproduct_suite};
use qhdeform::deform::identities::deformed_suite;
use qhdeform::deform::{
    basis_action_x_check, build_deformed_with_alphas, casimir_check, h_zero_limit, h_zero_numeric_continuity,
    jordanian_limit_suite, limit_coherence, normal_ordered_y_check,
};
use qhdeform::qseries::alphas;
use qhdeform::rep::checks::{basis_equivalence_check, power_action_check, rep_suite};
use qhdeform::report::report_or_error;
use qhdeform::{
    build_uq_rep, ClassicalQh, DeformedSet, ExactQh, GeneratorSet, Numeric, NumericContext, QhDomain, RepSpec,
    SymbolicQ, TensorRep, VerificationReport,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::NumericPoint;

/// Fault injection: add 1 to `α_n` before building the deformed generators.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Perturbation {
    pub alpha_index: Option<usize>,
}

impl Perturbation {
    pub fn build<D: QhDomain>(&self, dom: &D, g: &GeneratorSet<D::Elem>) -> qhdeform::Result<DeformedSet<D::Elem>> {
        let n = (g.dim() / 2 + 1).max(self.alpha_index.unwrap_or(0));
        let mut a = alphas(dom, n)?.values;
        if let Some(k) = self.alpha_index {
            a[k] = a[k].clone() + dom.int(1);
        }
        build_deformed_with_alphas(dom, g, &a)
    }
}

fn exact_for_spin(tj: u32, perturb: Perturbation) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let label = format!("twoJ={tj}");
    match build_uq_rep(&SymbolicQ, RepSpec::polynomial(tj)) {
        Ok(g) => {
            out.extend(rep_suite(&SymbolicQ, &g));
            out.push(casimir_check(&SymbolicQ, &g));
        }
        Err(e) => out.push(VerificationReport::errored(&SymbolicQ, "U_q representation", "Eq7", &label, &e)),
    }
    match build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).and_then(|g| perturb.build(&ExactQh, &g)) {
        Ok(d) => {
            out.extend(deformed_suite(&ExactQh, &d));
            out.push(h_zero_limit(&d));
        }
        Err(e) => out.push(VerificationReport::errored(&ExactQh, "deformed generators", "Eq10-12", &label, &e)),
    }
    out
}

fn numeric_for_spin(tj: u32, p: &NumericPoint, perturb: Perturbation) -> Vec<VerificationReport> {
    let ctx = p.ctx();
    let dom = Numeric::<f64>::new(&ctx);
    let label = format!("twoJ={tj}");
    let mut out = Vec::new();
    match build_uq_rep(&dom, RepSpec::polynomial(tj)) {
        Ok(g) => {
            out.extend(rep_suite(&dom, &g));
            out.push(casimir_check(&dom, &g));
            match perturb.build(&dom, &g) {
                Ok(d) => out.extend(deformed_suite(&dom, &d)),
                Err(e) => out.push(VerificationReport::errored(&dom, "deformed generators", "Eq10-12", &label, &e)),
            }
        }
        Err(e) => out.push(VerificationReport::errored(&dom, "U_q representation", "Eq7", &label, &e)),
    }
    let real_ctx = p.real_ctx();
    let real = Numeric::<f64>::new(&real_ctx);
    out.push(report_or_error(&real, "basis equivalence", "Eq39", &label, basis_equivalence_check(&real, tj)));
    for k in 0..=tj as usize + 1 {
        out.push(report_or_error(&real, "J_+^p basis action", "Eq41", &label, power_action_check(&real, tj, k)));
    }
    out.push(basis_action_x_check(&real_ctx, tj));
    out.push(normal_ordered_y_check(&real_ctx, tj));
    out
}

/// Every single-representation identity for `twoJ = 0..=two_j_max`.
pub fn verify(
    two_j_max: u32,
    exact: bool,
    points: &[NumericPoint],
    perturb: Perturbation,
) -> Vec<VerificationReport> {
    let spins: Vec<u32> = (0..=two_j_max).collect();
    let mut out: Vec<VerificationReport> = Vec::new();
    if exact {
        out.extend(spins.par_iter().map(|&tj| exact_for_spin(tj, perturb)).collect::<Vec<_>>().into_iter().flatten());
    }
    for p in points {
        out.extend(spins.par_iter().map(|&tj| numeric_for_spin(tj, p, perturb)).collect::<Vec<_>>().into_iter().flatten());
    }
    out
}

/// The Jordanian (q = 1) and h -> 0 limits.
pub fn limits(two_j_max: u32, points: &[NumericPoint]) -> Vec<VerificationReport> {
    let spins: Vec<u32> = (0..=two_j_max).collect();
    let mut out: Vec<VerificationReport> = spins
        .par_iter()
        .map(|&tj| {
            let mut r = jordanian_limit_suite(&ClassicalQh, tj);
            let label = format!("twoJ={tj}");
            match build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).and_then(|g| qhdeform::build_deformed(&ExactQh, &g)) {
                Ok(d) => r.push(h_zero_limit(&d)),
                Err(e) => r.push(VerificationReport::errored(&ExactQh, "h -> 0", "Limit-h0", &label, &e)),
            }
            r.push(limit_coherence(tj));
            r
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    for p in points {
        let at_one = NumericContext { q: Complex64::new(1.0, 0.0), ..p.ctx() };
        let dom = Numeric::<f64>::new(&at_one);
        for tj in 0..=two_j_max {
            out.extend(jordanian_limit_suite(&dom, tj));
            out.push(h_zero_numeric_continuity(p.q, tj));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Uq,
    Qh,
    Uh,
}

/// One coproduct structure on `V_left ⊗ V_right`.
pub fn coproduct(t: TensorRep, which: Which, exact: bool, points: &[NumericPoint]) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    if exact {
        out.extend(match which {
            Which::Uq => uq_coproduct_suite(&SymbolicQ, t),
            Which::Qh => qh_coproduct_suite(&ExactQh, t),
            Which::Uh => jordanian_coproduct_check(&ClassicalQh, t),
        });
    }
    for p in points {
        let out_p = match which {
            Which::Uq => uq_coproduct_suite(&Numeric::<f64>::new(&p.ctx()), t),
            Which::Qh => qh_coproduct_suite(&Numeric::<f64>::new(&p.ctx()), t),
            Which::Uh => {
                let at_one = NumericContext { q: Complex64::new(1.0, 0.0), ..p.ctx() };
                jordanian_coproduct_check(&Numeric::<f64>::new(&at_one), t)
            }
        };
        out.extend(out_p);
    }
    out
}
