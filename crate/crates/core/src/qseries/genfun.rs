//! The generating function `F(x) = Σ P_n(ξ) x^{2n} = (1 - 2ξx² + x⁴)^{-1/2}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::Ring;
use crate::scalar::{Poly, QDomain};
use crate::Rational;

/// Coefficients of `(1 + x)^a` up to `x^n`.
pub fn binomial_series(a: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Rational::one();
    for k in 0..=n {
        out.push(c.clone());
        c = c * (a - Rational::from_integer(BigInt::from(k))) / Rational::from_integer(BigInt::from(k + 1));
    }
    out
}

/// `(1 - t)^{-1/2} = Σ c_k t^k` with `c_k = C(2k,k)/4^k`.
pub fn inverse_sqrt_coeffs(n: usize) -> Vec<Rational> {
    binomial_series(&Rational::new((-1).into(), 2.into()), n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c } else { -c })
        .collect()
}

/// Coefficients of `t^n = x^{2n}` in `(1 - (2ξt - t²))^{-1/2}`, `n <= max_n`,
/// by direct binomial expansion.
pub fn f_series<D: QDomain>(dom: &D, max_n: usize) -> Vec<D::Elem> {
    let xi = dom.xi();
    let inner: Poly<D::Elem> =
        Poly::from_coeffs(vec![D::Elem::zero(), xi.clone() + xi, -D::Elem::one()]);
    let mut out = vec![D::Elem::zero(); max_n + 1];
    let mut power = Poly::<D::Elem>::one();
    for c in inverse_sqrt_coeffs(max_n) {
        let c = dom.rational(&c);
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = slot.add_ref(&power.coeff(k).mul_ref(&c));
        }
        let next = power * inner.clone();
        power = Poly::from_coeffs(next.coeffs().iter().take(max_n + 1).cloned().collect());
    }
    out
}

/// The same coefficients from the factorised form
/// `(1 - q²t)^{-1/2} (1 - q⁻²t)^{-1/2}`.
pub fn f_product_series<D: QDomain>(dom: &D, max_n: usize) -> Vec<D::Elem> {
    let c = inverse_sqrt_coeffs(max_n);
    (0..=max_n)
        .map(|n| {
            (0..=n).fold(D::Elem::zero(), |acc, a| {
                let b = n - a;
                let term = dom.rational(&(&c[a] * &c[b])) * dom.s_pow(4 * a as i64 - 4 * b as i64);
                acc + term
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::legendre::legendre_at;
    use crate::scalar::SymbolicQ;

    #[test]
    fn binomial_half() {
        let c = binomial_series(&Rational::new(1.into(), 2.into()), 3);
        assert_eq!(
            c,
            vec![
                Rational::one(),
                Rational::new(1.into(), 2.into()),
                Rational::new((-1).into(), 8.into()),
                Rational::new(1.into(), 16.into()),
            ]
        );
    }

    #[test]
    fn low_orders_match_legendre() {
        let f = f_series(&SymbolicQ, 2);
        assert_eq!(f[0], crate::QFraction::one());
        assert_eq!(f[1], SymbolicQ.xi());
        assert_eq!(f[2], legendre_at(&SymbolicQ, 2));
    }
}
