use num_traits::Zero;

use crate::error::Result;
use crate::matrix::{nilpotent_series_eval, Matrix};
use crate::qseries::{alphas, beta_recursive, binomial_series};
use crate::rep::GeneratorSet;
use crate::ring::Ring;
use crate::scalar::QhDomain;
use crate::Rational;

/// The deformed generators `(X̂, Ŷ, Ĥ)` on one representation.
#[derive(Clone, Debug)]
pub struct DeformedSet<E> {
    pub xhat: Matrix<E>,
    pub yhat: Matrix<E>,
    pub hhat: Matrix<E>,
    pub source: GeneratorSet<E>,
    /// The `α_n` actually used (index `n` multiplies `v^{2n+1}`).
    pub alphas: Vec<E>,
    /// Highest power of `J_+` that can survive: `dim - 1`.
    pub truncation: usize,
}

impl<E: Ring> DeformedSet<E> {
    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    pub fn label(&self) -> &str {
        &self.source.label
    }
}

/// Number of odd-series coefficients that can contribute on a `dim`-dimensional
/// space: `2n + 1 <= dim - 1`.
pub(crate) fn odd_terms(dim: usize) -> usize {
    dim / 2 + 1
}

/// `(1 - t)^{1/2}` coefficients.
pub(crate) fn sqrt_one_minus(n: usize) -> Vec<Rational> {
    binomial_series(&Rational::new(1.into(), 2.into()), n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c } else { -c })
        .collect()
}

/// `v = (h/2) J_+`.
pub(crate) fn half_h_jp<D: QhDomain>(dom: &D, jp: &Matrix<D::Elem>) -> Matrix<D::Elem> {
    jp.scale(&dom.half_h())
}

/// `Σ c_n ((h/2) P)^{2n}` for nilpotent `P`.
pub(crate) fn even_series<D: QhDomain>(
    dom: &D,
    coeffs: &[D::Elem],
    p: &Matrix<D::Elem>,
) -> Result<Matrix<D::Elem>> {
    let v = half_h_jp(dom, p);
    nilpotent_series_eval(coeffs, &(&v * &v))
}

/// Builds `X̂ = Σ α_n (h/2)^{2n} J_+^{2n+1}`, `Ŷ = S J_- S` with
/// `S = (1 - ((h/2)J_+)²)^{1/2}`, and `Ĥ = J_0`.
pub fn build_deformed<D: QhDomain>(dom: &D, gen: &GeneratorSet<D::Elem>) -> Result<DeformedSet<D::Elem>> {
    let a = alphas(dom, odd_terms(gen.dim()))?.values;
    build_deformed_with_alphas(dom, gen, &a)
}

/// As [`build_deformed`] with caller-supplied coefficients; used for fault injection.
pub fn build_deformed_with_alphas<D: QhDomain>(
    dom: &D,
    gen: &GeneratorSet<D::Elem>,
    alphas: &[D::Elem],
) -> Result<DeformedSet<D::Elem>> {
    let dim = gen.dim();
    let xhat = &gen.jp * &even_series(dom, alphas, &gen.jp)?;
    let sqrt_c: Vec<D::Elem> = sqrt_one_minus(dim).iter().map(|c| dom.rational(c)).collect();
    let s = even_series(dom, &sqrt_c, &gen.jp)?;
    let yhat = &(&s * &gen.jm) * &s;
    Ok(DeformedSet {
        xhat,
        yhat,
        hhat: gen.j0.clone(),
        source: gen.clone(),
        alphas: alphas.to_vec(),
        truncation: dim.saturating_sub(1),
    })
}

/// Recovers `J_+ = Σ β_n (h/2)^{2n} X̂^{2n+1}` with `β` the series inverse of `α`.
pub fn invert_map<D: QhDomain>(dom: &D, d: &DeformedSet<D::Elem>) -> Result<Matrix<D::Elem>> {
    let n = odd_terms(d.dim());
    let mut a = d.alphas.clone();
    a.resize(n.max(a.len()), D::Elem::zero());
    let betas = beta_recursive(&a[..n.max(1)]);
    Ok(&d.xhat * &even_series(dom, &betas, &d.xhat)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_uq_rep, RepSpec};
    use crate::scalar::{ExactQh, QDomain};

    #[test]
    fn spin_half_is_undeformed() {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(1)).unwrap();
        let d = build_deformed(&ExactQh, &g).unwrap();
        assert_eq!(d.xhat, g.jp);
        assert_eq!(d.yhat, g.jm);
        assert_eq!(d.hhat, g.j0);
    }

    #[test]
    fn spin_one_dresses_only_y() {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(2)).unwrap();
        let d = build_deformed(&ExactQh, &g).unwrap();
        assert_eq!(d.xhat, g.jp);
        let v = g.jp.scale(&ExactQh.half_h());
        let s = Matrix::identity(3) - (&v * &v).scale(&ExactQh.rational(&Rational::new(1.into(), 2.into())));
        assert_eq!(d.yhat, &(&s * &g.jm) * &s);
        assert_ne!(d.yhat, g.jm);
    }

    #[test]
    fn spin_three_halves_x_correction() {
        let g = build_uq_rep(&ExactQh, RepSpec::polynomial(3)).unwrap();
        let d = build_deformed(&ExactQh, &g).unwrap();
        let a1 = crate::qseries::alpha(&ExactQh, 1).unwrap();
        let hh = ExactQh.half_h();
        let expected = g.jp.clone() + g.jp.pow(3).scale(&(a1 * hh.clone() * hh));
        assert_eq!(d.xhat, expected);
        assert!(d.xhat.is_strictly_upper());
    }

    #[test]
    fn inversion_recovers_source() {
        for tj in 0..=5 {
            let g = build_uq_rep(&ExactQh, RepSpec::polynomial(tj)).unwrap();
            let d = build_deformed(&ExactQh, &g).unwrap();
            assert_eq!(invert_map(&ExactQh, &d).unwrap(), g.jp, "twoJ={tj}");
        }
    }
}
