//! Series machinery: α, β, Legendre, generating function, u <-> v.

use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

use qhdeform::qseries::{
    alpha, alphas, beta_oracle, beta_recursive, compose, enumerate_partitions, f_series, legendre,
    legendre_at, odd_series, q_factorial, q_integer, u_of_v, v_of_u, v_of_u_classical, AlphaPoly,
};
use qhdeform::scalar::substitute_q_one;
use qhdeform::{ClassicalQ, LaurentScalar, NumericContext, Poly, QDomain, QFraction, Rational, SymbolicQ};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn q_integers_and_factorials() {
    assert_eq!(q_integer(1), LaurentScalar::one());
    assert_eq!(q_integer(2), LaurentScalar::s_pow(2) + LaurentScalar::s_pow(-2));
    assert_eq!(q_integer(0), LaurentScalar::zero());
    assert_eq!(q_integer(-3), -q_integer(3));
    assert_eq!(q_factorial(0), LaurentScalar::one());
    assert_eq!(q_factorial(2), q_integer(2));
    assert_eq!(q_factorial(4).substitute_one(), Rational::from_integer(24.into()));
    assert_eq!(substitute_q_one(&SymbolicQ.xi()), Rational::one());
    let odd = LaurentScalar::s_pow(5) - LaurentScalar::s_pow(-5);
    assert_eq!(odd.substitute_one(), Rational::zero());
}

#[test]
fn legendre_low_orders() {
    assert_eq!(legendre(0), Poly::constant(Rational::one()));
    assert_eq!(legendre(1), Poly::var());
    assert_eq!(legendre(2), Poly::from_coeffs(vec![r(-1, 2), Rational::zero(), r(3, 2)]));
}

#[test]
fn alpha_values() {
    assert_eq!(alpha(&SymbolicQ, 0).unwrap(), QFraction::one());
    // α_1 = ξ/[3]: [3] α_1 = ξ.
    let a1 = alpha(&SymbolicQ, 1).unwrap();
    assert_eq!(a1 * SymbolicQ.q_integer(3), SymbolicQ.xi());
    assert_eq!(substitute_q_one(&alpha(&SymbolicQ, 2).unwrap()), r(1, 5));
    assert_eq!(alpha(&ClassicalQ, 3).unwrap(), r(1, 7));
}

#[test]
fn partitions() {
    let p = enumerate_partitions(1, 1);
    assert_eq!(p.len(), 1);
    assert!(p[0].multiplicities.is_empty());
    assert_eq!(p[0].zeta, 1u32.into());

    let p = enumerate_partitions(2, 1);
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].zeta, 3u32.into());

    let mut zetas: Vec<_> = enumerate_partitions(3, 1).iter().map(|p| p.zeta.clone()).collect();
    zetas.sort();
    assert_eq!(zetas, vec![3u32.into(), 3u32.into()]);
}

#[test]
fn symbolic_betas() {
    let mut a = vec![AlphaPoly::one()];
    a.extend((1..=4).map(AlphaPoly::symbol));
    let b = beta_recursive(&a);
    assert_eq!(b[0], AlphaPoly::one());
    assert_eq!(b[1], -AlphaPoly::symbol(1));
    let t = |c: i64, p: &[(usize, u32)]| AlphaPoly::term(Rational::from_integer(c.into()), p);
    let b4 = t(-1, &[(4, 1)]) + t(10, &[(3, 1), (1, 1)]) + t(5, &[(2, 2)]) + t(-55, &[(2, 1), (1, 2)]) + t(55, &[(1, 4)]);
    assert_eq!(b[4], b4);
    // The oracle agrees on abstract symbols too.
    assert_eq!(beta_oracle(&a[..4]), b[..4].to_vec());
    for (n, bn) in b.iter().enumerate() {
        assert!(bn.is_weighted_homogeneous(n as u32), "beta_{n}");
    }
}

#[test]
fn classical_beta_is_tanh() {
    let b = beta_recursive(&alphas(&ClassicalQ, 5).unwrap().values);
    let tanh = [r(1, 1), r(-1, 3), r(2, 15), r(-17, 315), r(62, 2835), r(-1382, 155925)];
    assert_eq!(b, tanh.to_vec());
}

fn assert_identity_series<T: qhdeform::Ring + PartialEq + std::fmt::Debug>(a: &[T]) {
    let b = beta_recursive(a);
    let order = 2 * a.len() - 1;
    let composed = compose(&odd_series(a), &odd_series(&b), order);
    for (k, c) in composed.iter().enumerate() {
        let expected = if k == 1 { T::one() } else { T::zero() };
        assert_eq!(c, &expected, "order {k}");
    }
}

#[test]
fn map_and_inverse_compose_to_identity() {
    // Generic in the coefficients up to N = 8, and for the actual q-dependent α_n at low order.
    let mut symbols = vec![AlphaPoly::one()];
    symbols.extend((1..=8).map(AlphaPoly::symbol));
    assert_identity_series(&symbols);
    assert_identity_series(&alphas(&SymbolicQ, 3).unwrap().values);
}

#[test]
fn generating_function_low_orders() {
    let f = f_series(&SymbolicQ, 10);
    assert_eq!(f[0], QFraction::one());
    assert_eq!(f[1], SymbolicQ.xi());
    for (n, fn_) in f.iter().enumerate() {
        assert_eq!(fn_, &legendre_at(&SymbolicQ, n));
    }
}

#[test]
fn uv_examples() {
    let ctx = NumericContext::new(Complex64::one(), Complex64::zero());
    let u = 0.1;
    let v = v_of_u(Complex64::new(u, 0.0), &ctx).unwrap();
    assert!((v.re - (-1.0 / (2.0 * u) + (1.0 / (4.0 * u * u) + 1.0).sqrt())).abs() < 1e-12);
    assert!((v.re - v_of_u_classical(u)).abs() < 1e-12);
    assert!((u_of_v(v, Complex64::one()).re - u).abs() < 1e-12);
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=15).prop_map(|(n, d)| r(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recursion_matches_reversion(tail in prop::collection::vec(rational(), 1..=8)) {
        let mut a = vec![Rational::one()];
        a.extend(tail);
        prop_assert_eq!(beta_recursive(&a), beta_oracle(&a));
    }

    #[test]
    fn uv_round_trip(
        logr in 0.5f64.ln()..2f64.ln(), phase in 0.0..std::f64::consts::TAU,
        ur in 0.0f64..0.3, uphase in 0.0..std::f64::consts::TAU,
    ) {
        let q = Complex64::from_polar(logr.exp(), phase);
        let ctx = NumericContext::new(q, Complex64::zero());
        prop_assume!(ctx.check_generic(4).is_ok());
        let u = Complex64::from_polar(ur, uphase);
        let v = v_of_u(u, &ctx).unwrap();
        prop_assert!((u_of_v(v, q) - u).norm() < 1e-10);
    }
}
