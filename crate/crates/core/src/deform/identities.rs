//! Commutation relations and auxiliary identities of the deformed generators.
//! Identities with a `1/(q - q⁻¹)` are checked cross-multiplied.

use num_traits::One;

use crate::error::Result;
use crate::matrix::{nilpotent_series_eval, Matrix};
use crate::qseries::genfun::inverse_sqrt_coeffs;
use crate::qseries::{f_series, legendre_at};
use crate::report::{check, check_all, report_or_error, VerificationReport};
use crate::ring::Ring;
use crate::scalar::QhDomain;

use super::build::{even_series, half_h_jp, invert_map, odd_terms, DeformedSet};

/// `[X̂, Ŷ] = [2Ĥ]`.
pub fn verify_main_commutator<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let lhs = d.xhat.commutator(&d.yhat);
    check(dom, "[X,Y] = [2H]", "Eq26", d.label(), &lhs, &d.source.q_two_j0(dom))
}

fn hx_rhs<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>, jp: &Matrix<D::Elem>) -> Result<Matrix<D::Elem>> {
    let c: Vec<D::Elem> =
        d.alphas.iter().enumerate().map(|(n, a)| a.mul_ref(&dom.int(2 * n as i64 + 1))).collect();
    Ok(jp * &even_series(dom, &c, jp)?)
}

/// `[Ĥ, X̂] = Σ (2n+1) α_n (h/2)^{2n} J_+^{2n+1}`, with `J_+` taken both as the
/// source matrix and as the series in `X̂` obtained by inverting the map.
pub fn verify_hx_commutator<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let run = || -> Result<VerificationReport> {
        let lhs = d.hhat.commutator(&d.xhat);
        let jp_rec = invert_map(dom, d)?;
        Ok(check_all(
            dom,
            "[H,X] series in J_+",
            "Eq27",
            d.label(),
            &[(lhs.clone(), hx_rhs(dom, d, &d.source.jp)?), (lhs, hx_rhs(dom, d, &jp_rec)?)],
        ))
    };
    report_or_error(dom, "[H,X] series in J_+", "Eq27", d.label(), run())
}

fn hy_rhs<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>, jp: &Matrix<D::Elem>) -> Result<Matrix<D::Elem>> {
    // (1 + A)(1 - A)⁻¹ = 1 + 2 Σ_{k>=1} A^k with A = ((h/2)J_+)².
    let coeffs: Vec<D::Elem> =
        (0..d.dim().max(1)).map(|k| if k == 0 { D::Elem::one() } else { dom.int(2) }).collect();
    let r = even_series(dom, &coeffs, jp)?;
    let minus_half = dom.rational(&crate::Rational::new((-1).into(), 2.into()));
    Ok(d.yhat.anticommutator(&r).scale(&minus_half))
}

/// `[Ĥ, Ŷ] = -½ (R Ŷ + Ŷ R)` with `R = (1 + ((h/2)J_+)²)(1 - ((h/2)J_+)²)⁻¹`,
/// again for both readings of `J_+`.
pub fn verify_hy_commutator<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let run = || -> Result<VerificationReport> {
        let lhs = d.hhat.commutator(&d.yhat);
        let jp_rec = invert_map(dom, d)?;
        Ok(check_all(
            dom,
            "[H,Y] rational function of J_+",
            "Eq28",
            d.label(),
            &[(lhs.clone(), hy_rhs(dom, d, &d.source.jp)?), (lhs, hy_rhs(dom, d, &jp_rec)?)],
        ))
    };
    report_or_error(dom, "[H,Y] rational function of J_+", "Eq28", d.label(), run())
}

/// `F((h/2)J_+) = Σ P_n(ξ) ((h/2)J_+)^{2n}`.
fn f_legendre<D: QhDomain>(dom: &D, jp: &Matrix<D::Elem>) -> Result<Matrix<D::Elem>> {
    let c: Vec<D::Elem> = (0..=odd_terms(jp.dim())).map(|n| legendre_at(dom, n)).collect();
    even_series(dom, &c, jp)
}

/// `(q - q⁻¹)[X̂, J_-] = q^{J_0} F q^{J_0} - q^{-J_0} F q^{-J_0}`.
pub fn verify_x_jminus<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let run = || -> Result<VerificationReport> {
        let g = &d.source;
        let lhs = d.xhat.commutator(&g.jm).scale(&dom.q_minus_qinv());
        let f = f_legendre(dom, &g.jp)?;
        let rhs = &(&(&g.k_pos * &f) * &g.k_pos) - &(&(&g.k_neg * &f) * &g.k_neg);
        Ok(check(dom, "[X,J_-] cross-multiplied", "Eq23", d.label(), &lhs, &rhs))
    };
    report_or_error(dom, "[X,J_-] cross-multiplied", "Eq23", d.label(), run())
}

/// Three evaluations of `F` on the matrix argument `(h/2)J_+`: the Legendre
/// series, the binomial expansion of `(1 - 2ξx² + x⁴)^{-1/2}`, and the
/// product `(1 - (qx)²)^{-1/2} (1 - (q⁻¹x)²)^{-1/2}`.
pub fn verify_f_forms<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let run = || -> Result<VerificationReport> {
        let jp = &d.source.jp;
        let n = odd_terms(d.dim());
        let legendre = f_legendre(dom, jp)?;
        let binomial = even_series(dom, &f_series(dom, n), jp)?;
        let v = half_h_jp(dom, jp);
        let a = &v * &v;
        let c = inverse_sqrt_coeffs(n);
        let side = |q2: D::Elem| -> Result<Matrix<D::Elem>> {
            let mut qk = D::Elem::one();
            let coeffs: Vec<D::Elem> = c
                .iter()
                .map(|ck| {
                    let t = dom.rational(ck).mul_ref(&qk);
                    qk = qk.mul_ref(&q2);
                    t
                })
                .collect();
            nilpotent_series_eval(&coeffs, &a)
        };
        let product = &side(dom.s_pow(4))? * &side(dom.s_pow(-4))?;
        Ok(check_all(
            dom,
            "generating function F: three evaluation paths",
            "Eq24",
            d.label(),
            &[(legendre.clone(), binomial), (legendre, product)],
        ))
    };
    report_or_error(dom, "generating function F: three evaluation paths", "Eq24", d.label(), run())
}

/// `q^Ĥ (h/2)X̂ q^{-Ĥ} - q^{-Ĥ} (h/2)X̂ q^Ĥ = (q - q⁻¹) Σ P_n(ξ) v^{2n+1}`, `v = (h/2)J_+`.
pub fn verify_uv_relation<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let run = || -> Result<VerificationReport> {
        let g = &d.source;
        let hx = d.xhat.scale(&dom.half_h());
        let lhs = &(&(&g.k_pos * &hx) * &g.k_neg) - &(&(&g.k_neg * &hx) * &g.k_pos);
        let v = half_h_jp(dom, &g.jp);
        let rhs = (&v * &f_legendre(dom, &g.jp)?).scale(&dom.q_minus_qinv());
        Ok(check(dom, "u as Legendre series in v", "Eq35", d.label(), &lhs, &rhs))
    };
    report_or_error(dom, "u as Legendre series in v", "Eq35", d.label(), run())
}

/// The inverse series reproduces the source `J_+`.
pub fn verify_round_trip<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let r = invert_map(dom, d).map(|jp| check(dom, "inverse map recovers J_+", "Eq14", d.label(), &jp, &d.source.jp));
    report_or_error(dom, "inverse map recovers J_+", "Eq14", d.label(), r)
}

/// `[[X̂,Ŷ],Ĥ] + [[Ŷ,Ĥ],X̂] + [[Ĥ,X̂],Ŷ] = 0` — a sanity gate on construction.
pub fn jacobi_check<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let (x, y, h) = (&d.xhat, &d.yhat, &d.hhat);
    let lhs = x.commutator(y).commutator(h) + y.commutator(h).commutator(x) + h.commutator(x).commutator(y);
    check(dom, "Jacobi identity", "Jacobi", d.label(), &lhs, &Matrix::zeros(d.dim()))
}

fn masked<E: Ring>(m: &Matrix<E>, weights: &[i64], keep: impl Fn(i64) -> bool) -> Matrix<E> {
    Matrix::from_fn(m.dim(), |r, c| {
        if keep((weights[r] - weights[c]) / 2) {
            m.get(r, c).clone()
        } else {
            E::zero()
        }
    })
}

/// `Ĥ = J_0`; `X̂` raises the weight `m` by odd amounts `>= 1` and `Ŷ` shifts
/// it by odd amounts `>= -1`.
pub fn grading_check<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> VerificationReport {
    let w = &d.source.weights;
    let odd = |k: i64| k.rem_euclid(2) == 1;
    check_all(
        dom,
        "weight grading of X, Y, H",
        "Grading",
        d.label(),
        &[
            (d.hhat.clone(), d.source.j0.clone()),
            (d.xhat.clone(), masked(&d.xhat, w, |k| odd(k) && k >= 1)),
            (d.yhat.clone(), masked(&d.yhat, w, |k| odd(k) && k >= -1)),
        ],
    )
}

/// The cross-multiplied identities of the deformed triple on one representation.
pub fn deformed_suite<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> Vec<VerificationReport> {
    vec![
        verify_main_commutator(dom, d),
        verify_hx_commutator(dom, d),
        verify_hy_commutator(dom, d),
        verify_x_jminus(dom, d),
        verify_f_forms(dom, d),
        verify_uv_relation(dom, d),
        verify_round_trip(dom, d),
        jacobi_check(dom, d),
        grading_check(dom, d),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::build::{build_deformed, build_deformed_with_alphas};
    use crate::rep::{build_uq_rep, RepSpec};
    use crate::scalar::{ExactQh, Numeric, NumericContext, QDomain};
    use num_complex::Complex64;

    #[test]
    fn exact_suite_small() {
        for tj in 0..=4 {
            let g = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
            let d = build_deformed(&ExactQh, &g).unwrap();
            for r in deformed_suite(&ExactQh, &d) {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn numeric_suite() {
        let ctx = NumericContext::new(Complex64::new(1.7, 0.2), Complex64::new(0.9, 0.0));
        let dom = Numeric::<f64>::new(&ctx);
        for tj in [2, 5] {
            let g = build_uq_rep(&dom, RepSpec::polynomial(tj)).unwrap();
            let d = build_deformed(&dom, &g).unwrap();
            for r in deformed_suite(&dom, &d) {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn perturbed_alpha_breaks_closure() {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(3)).unwrap();
        let mut a = crate::qseries::alphas(&ExactQh, 2).unwrap().values;
        a[1] = a[1].clone() + ExactQh.int(1);
        let d = build_deformed_with_alphas(&ExactQh, &g, &a).unwrap();
        assert!(!verify_main_commutator(&ExactQh, &d).pass);
    }
}
