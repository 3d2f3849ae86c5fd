//! Legendre polynomials via Bonnet's recurrence.

use num_traits::{One, Zero};

use crate::ring::Ring;
use crate::scalar::{Poly, QDomain};
use crate::Rational;

/// `P_n` as a polynomial in an abstract variable `ξ`.
///
/// `(n+1) P_{n+1} = (2n+1) ξ P_n - n P_{n-1}`, `P_0 = 1`, `P_1 = ξ`.
pub fn legendre(n: usize) -> Poly<Rational> {
    let xi = Poly::<Rational>::var();
    let mut prev = Poly::zero();
    let mut cur = Poly::one();
    for k in 0..n {
        let k = k as i64;
        let next = (xi.clone() * cur.clone()).scale(&Rational::from_int(2 * k + 1))
            - prev.scale(&Rational::from_int(k));
        prev = cur;
        cur = next.scale(&Rational::new(1.into(), (k + 1).into()));
    }
    cur
}

/// `P_n(ξ(q))` with `ξ = (q² + q⁻²)/2` in the given domain.
pub fn legendre_at<D: QDomain>(dom: &D, n: usize) -> D::Elem {
    let xi = dom.xi();
    legendre(n)
        .coeffs()
        .iter()
        .rev()
        .fold(D::Elem::zero(), |acc, c| acc * xi.clone() + dom.rational(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ClassicalQ, SymbolicQ};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn first_polynomials() {
        assert_eq!(legendre(0), Poly::one());
        assert_eq!(legendre(1), Poly::var());
        assert_eq!(legendre(2), Poly::from_coeffs(vec![r(-1, 2), r(0, 1), r(3, 2)]));
        assert_eq!(
            legendre(3),
            Poly::from_coeffs(vec![r(0, 1), r(-3, 2), r(0, 1), r(5, 2)])
        );
    }

    #[test]
    fn value_at_one_is_one() {
        for n in 0..12 {
            assert_eq!(legendre(n).eval(&Rational::one()), Rational::one());
            assert_eq!(legendre_at(&ClassicalQ, n), Rational::one());
        }
    }

    #[test]
    fn symbolic_value_is_laurent() {
        let p2 = legendre_at(&SymbolicQ, 2);
        assert!(p2.denominator().is_one());
        assert_eq!(p2.substitute_q_one(), Rational::one());
    }
}
