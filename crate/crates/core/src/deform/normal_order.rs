//! Basis-action formulas for `X̂` and `Ŷ` in the symmetric basis, compared
//! with the matrix constructions.
//!
//! The formulas take square roots of products of q-integers; they agree with
//! products of square roots only for real positive `q`, which is required here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::qseries::{alphas, binomial_series};
use crate::report::{check_all, report_or_error, VerificationReport};
use crate::rep::checks::power_action_matrix;
use crate::rep::{build_uq_rep, RepSpec};
use crate::scalar::{Numeric, NumericContext, QDomain, QhDomain};
use crate::Rational;

use super::build::{build_deformed, odd_terms};

type C = Complex64;

fn real_positive_q(ctx: &NumericContext) -> Result<Numeric<f64>> {
    if ctx.q.im != 0.0 || ctx.q.re <= 0.0 {
        return Err(Error::Invalid("basis-action formulas need real positive q".into()));
    }
    Ok(Numeric::new(ctx))
}

fn fact(dom: &Numeric<f64>, n: i64) -> C {
    (1..=n).fold(C::new(1.0, 0.0), |acc, k| acc * dom.q_integer(k))
}

/// `X̂ e_m = Σ_k (h/2)^{2k} P_k(ξ)/[2k+1] (…)^{1/2} e_{m+2k+1}`, summed as
/// closed-form powers of `J_+`.
pub fn basis_action_x_check(ctx: &NumericContext, two_j: u32) -> VerificationReport {
    let label = format!("twoJ={two_j} symmetric");
    let run = || -> Result<VerificationReport> {
        let dom = real_positive_q(ctx)?;
        let g = build_uq_rep(&dom, RepSpec::symmetric(two_j))?;
        let d = build_deformed(&dom, &g)?;
        let a = alphas(&dom, odd_terms(g.dim()))?.values;
        let hh2 = dom.half_h() * dom.half_h();
        let mut formula = Matrix::zeros(g.dim());
        for (k, ak) in a.iter().enumerate() {
            if 2 * k + 1 >= g.dim() {
                break;
            }
            let term = power_action_matrix(&dom, two_j, 2 * k + 1)?.scale(&(ak * hh2.powi(k as i32)));
            formula = formula + term;
        }
        Ok(check_all(&dom, "X basis action", "Eq42", &label, &[(d.xhat, formula)]))
    };
    report_or_error(&Numeric::<f64>::new(ctx), "X basis action", "Eq42", &label, run())
}

/// Compares three constructions of `Ŷ` in the symmetric basis: the matrix
/// product `S J_- S`, the normal-ordered double sum
/// `Σ c_k c_l (-h²/4)^{k+l} (J_- J_+^{2k+2l} + [2k] J_+^{2k+2l-1} [2J_0 + 2k + 4l - 1])`,
/// and its action on basis vectors, with the bracket read as `[j+m+2k+2l]`.
pub fn normal_ordered_y_check(ctx: &NumericContext, two_j: u32) -> VerificationReport {
    let label = format!("twoJ={two_j} symmetric");
    let run = || -> Result<VerificationReport> {
        let dom = real_positive_q(ctx)?;
        let g = build_uq_rep(&dom, RepSpec::symmetric(two_j))?;
        let d = build_deformed(&dom, &g)?;
        let dim = g.dim();
        let c: Vec<C> = binomial_series(&Rational::new(1.into(), 2.into()), dim)
            .iter()
            .map(|x| dom.rational(x))
            .collect();
        let mh2 = -(dom.h() * dom.h()) / 4.0;
        let powers = g.jp.powers(2 * dim + 1);
        let tj = two_j as i64;

        let mut normal = Matrix::zeros(dim);
        let mut action = Matrix::zeros(dim);
        for k in 0..=dim / 2 {
            for l in 0..=dim / 2 {
                let n = k + l;
                if 2 * n > dim {
                    continue;
                }
                let coef = c[k] * c[l] * mh2.powi(n as i32);
                let mut term = &g.jm * &powers[2 * n];
                if k > 0 {
                    let diag = g.weight_diag(|w| dom.q_integer(w + 2 * k as i64 + 4 * l as i64 - 1));
                    term = term + (&powers[2 * n - 1] * &diag).scale(&dom.q_integer(2 * k as i64));
                }
                normal = normal + term.scale(&coef);

                let (k, l) = (k as i64, l as i64);
                for (i, tm) in g.weights.iter().enumerate() {
                    let (jpm, jmm) = ((tj + tm) / 2, (tj - tm) / 2);
                    let shift = 2 * k + 2 * l - 1;
                    let row = i as i64 - shift;
                    if row < 0 || row >= dim as i64 {
                        continue;
                    }
                    let mut v = C::new(0.0, 0.0);
                    if jmm - 2 * k - 2 * l >= 0 {
                        let num = dom.q_integer(jpm + 2 * k + 2 * l)
                            * dom.q_integer(jmm - 2 * k - 2 * l + 1)
                            * fact(&dom, jmm)
                            * fact(&dom, jpm + 2 * k + 2 * l);
                        let den = fact(&dom, jpm) * fact(&dom, jmm - 2 * k - 2 * l);
                        v += (num / den).sqrt();
                    }
                    if k > 0 {
                        let num = fact(&dom, jmm) * fact(&dom, jpm + 2 * k + 2 * l - 1);
                        let den = fact(&dom, jpm) * fact(&dom, jmm - 2 * k - 2 * l + 1);
                        v += dom.q_integer(2 * k) * dom.q_integer(2 * k + 4 * l + tm - 1) * (num / den).sqrt();
                    }
                    let old = *action.get(row as usize, i);
                    action.set(row as usize, i, old + coef * v);
                }
            }
        }
        Ok(check_all(
            &dom,
            "Y: product, normal-ordered and basis-action forms",
            "Eq43-47",
            &label,
            &[(d.yhat.clone(), normal), (d.yhat, action)],
        ))
    };
    report_or_error(
        &Numeric::<f64>::new(ctx),
        "Y: product, normal-ordered and basis-action forms",
        "Eq43-47",
        &label,
        run(),
    )
}
