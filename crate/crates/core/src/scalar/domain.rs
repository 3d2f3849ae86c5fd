//! Scalar domains: where `s = q^{1/2}` and `h` live.
//!
//! Every construction in the crate (generators, the deformation map, the
//! identities) is written once against [`QDomain`] / [`QhDomain`] and then
//! run in four settings:
//!
//! | domain          | element                | q      | h        |
//! |-----------------|------------------------|--------|----------|
//! | [`SymbolicQ`]   | [`QFraction`]          | formal | absent   |
//! | [`ExactQh`]     | `Poly<QFraction>`      | formal | formal   |
//! | [`ClassicalQ`]  | [`Rational`]           | 1      | absent   |
//! | [`ClassicalQh`] | `Poly<Rational>`       | 1      | formal   |
//! | [`Numeric`]     | `Complex<F>`           | value  | value    |

use num_complex::{Complex, Complex64};
use num_traits::{Float, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{rational_to_float, Ring};
use crate::scalar::fraction::{vanishing_index, DenMonomial, QFraction};
use crate::scalar::laurent::{q_integer_laurent, s_integer};
use crate::scalar::poly::Poly;
use crate::{HPoly, LaurentScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

/// Result of comparing two matrices in a domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Outcome {
    /// 0 for an exact pass; otherwise the largest entry of the difference
    /// (numeric: relative to `max(1, scale)`; exact: evaluated at a probe point).
    pub residual: f64,
    /// Largest entry magnitude of either side (numeric only).
    pub scale: f64,
    pub pass: bool,
}

impl Outcome {
    pub fn exact(pass: bool, probe: f64) -> Self {
        Outcome { residual: if pass { 0.0 } else { probe }, scale: 0.0, pass }
    }
}

pub trait QDomain: Sync {
    type Elem: Ring;

    fn mode(&self) -> Mode;

    /// `s^k = q^{k/2}`.
    fn s_pow(&self, k: i64) -> Self::Elem;

    /// Divides by the s-integer `{k} = (s^k - s^{-k})/(s - s^{-1})`.
    fn div_s_integer(&self, x: &Self::Elem, k: i64) -> Result<Self::Elem>;

    fn compare(&self, lhs: &Matrix<Self::Elem>, rhs: &Matrix<Self::Elem>) -> Outcome;

    /// Square roots exist only numerically.
    fn sqrt(&self, _x: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn describe(&self) -> String;

    fn rational(&self, r: &Rational) -> Self::Elem {
        Self::Elem::from_rational(r)
    }

    fn int(&self, n: i64) -> Self::Elem {
        Self::Elem::from_int(n)
    }

    fn q(&self) -> Self::Elem {
        self.s_pow(2)
    }

    fn q_inv(&self) -> Self::Elem {
        self.s_pow(-2)
    }

    fn q_minus_qinv(&self) -> Self::Elem {
        self.s_pow(2) - self.s_pow(-2)
    }

    /// `ξ = (q² + q⁻²)/2`.
    fn xi(&self) -> Self::Elem {
        (self.s_pow(4) + self.s_pow(-4)) * self.rational(&Rational::new(1.into(), 2.into()))
    }

    fn s_integer(&self, k: i64) -> Self::Elem {
        let n = k.abs();
        let v = (0..n).fold(Self::Elem::zero(), |acc, i| acc + self.s_pow(n - 1 - 2 * i));
        if k < 0 {
            -v
        } else {
            v
        }
    }

    /// `[n] = (q^n - q^{-n})/(q - q^{-1})`, with `[-n] = -[n]`.
    fn q_integer(&self, n: i64) -> Self::Elem {
        let m = n.abs();
        let v = (0..m).fold(Self::Elem::zero(), |acc, k| acc + self.s_pow(2 * (m - 1 - 2 * k)));
        if n < 0 {
            -v
        } else {
            v
        }
    }

    /// The q-number `[x]` at a half-integer `x = two_x / 2`.
    fn q_number_half(&self, two_x: i64) -> Result<Self::Elem> {
        if two_x % 2 == 0 {
            Ok(self.q_integer(two_x / 2))
        } else {
            self.div_s_integer(&self.s_integer(two_x), 2)
        }
    }

    /// `x / [n]`, using `[n] = {2n}/{2}`.
    fn div_q_integer(&self, x: &Self::Elem, n: i64) -> Result<Self::Elem> {
        self.div_s_integer(&(x.clone() * self.s_integer(2)), 2 * n)
    }

    fn q_factorial(&self, n: u32) -> Self::Elem {
        (1..=n as i64).fold(Self::Elem::one(), |acc, k| acc * self.q_integer(k))
    }
}

pub trait QhDomain: QDomain {
    fn h(&self) -> Self::Elem;

    fn half_h(&self) -> Self::Elem {
        self.h() * self.rational(&Rational::new(1.into(), 2.into()))
    }
}

// Probe point used to attach a magnitude to a failed exact comparison.
fn probe_s() -> Complex64 {
    Complex64::new(1.3, 0.4).sqrt()
}

const PROBE_H: f64 = 0.7;

fn probe_fraction(x: &QFraction) -> f64 {
    x.eval(probe_s()).map(|v| v.norm()).unwrap_or(f64::INFINITY)
}

/// Multiplies a matrix over `Q(s)[h]` through by the common denominator of
/// all its entries, giving a matrix over `Q[s, 1/s][h]`.
pub fn clear_denominators(m: &Matrix<Poly<QFraction>>) -> (DenMonomial, Matrix<HPoly>) {
    let common = m
        .entries()
        .flat_map(|(_, _, p)| p.coeffs().iter().map(|c| c.denominator().clone()))
        .fold(DenMonomial::one(), |acc, d| acc.lcm(&d));
    let cleared = m.map(|p| p.map(|c| c.clear(&common).expect("common multiple")));
    (common, cleared)
}

/// Formal `q` (through `s`), no `h`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymbolicQ;

impl QDomain for SymbolicQ {
    type Elem = QFraction;

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn s_pow(&self, k: i64) -> QFraction {
        QFraction::from(LaurentScalar::s_pow(k))
    }

    fn div_s_integer(&self, x: &QFraction, k: i64) -> Result<QFraction> {
        x.div_s_integer(k)
    }

    fn compare(&self, lhs: &Matrix<QFraction>, rhs: &Matrix<QFraction>) -> Outcome {
        let diff = lhs.sub_m(rhs);
        let common = diff
            .entries()
            .fold(DenMonomial::one(), |acc, (_, _, x)| acc.lcm(x.denominator()));
        let pass = diff.entries().all(|(_, _, x)| x.clear(&common).expect("multiple").is_zero());
        let probe = diff.entries().map(|(_, _, x)| probe_fraction(x)).fold(0.0, f64::max);
        Outcome::exact(pass, probe)
    }

    fn describe(&self) -> String {
        "exact Q(s)".into()
    }

    fn s_integer(&self, k: i64) -> QFraction {
        QFraction::from(s_integer::<Rational>(k))
    }

    fn q_integer(&self, n: i64) -> QFraction {
        QFraction::from(q_integer_laurent::<Rational>(n))
    }
}

/// Formal `q` and formal `h`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactQh;

impl QDomain for ExactQh {
    type Elem = Poly<QFraction>;

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn s_pow(&self, k: i64) -> Poly<QFraction> {
        Poly::constant(SymbolicQ.s_pow(k))
    }

    fn div_s_integer(&self, x: &Poly<QFraction>, k: i64) -> Result<Poly<QFraction>> {
        Ok(Poly::from_coeffs(
            x.coeffs().iter().map(|c| c.div_s_integer(k)).collect::<Result<_>>()?,
        ))
    }

    fn compare(&self, lhs: &Matrix<Poly<QFraction>>, rhs: &Matrix<Poly<QFraction>>) -> Outcome {
        let diff = lhs.sub_m(rhs);
        let (_, cleared) = clear_denominators(&diff);
        let pass = cleared.is_zero();
        let probe = if pass {
            0.0
        } else {
            let s = probe_s();
            let h = Complex64::new(PROBE_H, 0.0);
            diff.entries()
                .map(|(_, _, p)| {
                    p.coeffs()
                        .iter()
                        .rev()
                        .try_fold(Complex64::zero(), |acc, c| Ok::<_, Error>(acc * h + c.eval(s)?))
                        .map(|v| v.norm())
                        .unwrap_or(f64::INFINITY)
                })
                .fold(0.0, f64::max)
        };
        Outcome::exact(pass, probe)
    }

    fn describe(&self) -> String {
        "exact Q(s)[h]".into()
    }

    fn s_integer(&self, k: i64) -> Poly<QFraction> {
        Poly::constant(SymbolicQ.s_integer(k))
    }

    fn q_integer(&self, n: i64) -> Poly<QFraction> {
        Poly::constant(SymbolicQ.q_integer(n))
    }
}

impl QhDomain for ExactQh {
    fn h(&self) -> Poly<QFraction> {
        Poly::var()
    }
}

/// The classical point `q = 1` (so `s = 1`), no `h`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassicalQ;

impl QDomain for ClassicalQ {
    type Elem = Rational;

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn s_pow(&self, _k: i64) -> Rational {
        Rational::one()
    }

    fn div_s_integer(&self, x: &Rational, k: i64) -> Result<Rational> {
        if k == 0 {
            return Err(Error::NonGenericQ { index: 0 });
        }
        Ok(x / Rational::from_int(k))
    }

    fn compare(&self, lhs: &Matrix<Rational>, rhs: &Matrix<Rational>) -> Outcome {
        let diff = lhs.sub_m(rhs);
        let probe = diff
            .entries()
            .map(|(_, _, x)| rational_to_float::<f64>(x).abs())
            .fold(0.0, f64::max);
        Outcome::exact(diff.is_zero(), probe)
    }

    fn describe(&self) -> String {
        "exact Q (q = 1)".into()
    }

    fn s_integer(&self, k: i64) -> Rational {
        Rational::from_int(k)
    }

    fn q_integer(&self, n: i64) -> Rational {
        Rational::from_int(n)
    }
}

/// `q = 1` with formal `h`: the Jordanian setting.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassicalQh;

impl QDomain for ClassicalQh {
    type Elem = Poly<Rational>;

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn s_pow(&self, _k: i64) -> Poly<Rational> {
        Poly::one()
    }

    fn div_s_integer(&self, x: &Poly<Rational>, k: i64) -> Result<Poly<Rational>> {
        let inv = ClassicalQ.div_s_integer(&Rational::one(), k)?;
        Ok(x.scale(&inv))
    }

    fn compare(&self, lhs: &Matrix<Poly<Rational>>, rhs: &Matrix<Poly<Rational>>) -> Outcome {
        let diff = lhs.sub_m(rhs);
        let h = Rational::new(7.into(), 10.into());
        let probe = diff
            .entries()
            .map(|(_, _, p)| rational_to_float::<f64>(&p.eval(&h)).abs())
            .fold(0.0, f64::max);
        Outcome::exact(diff.is_zero(), probe)
    }

    fn describe(&self) -> String {
        "exact Q[h] (q = 1)".into()
    }

    fn s_integer(&self, k: i64) -> Poly<Rational> {
        Poly::constant(Rational::from_int(k))
    }

    fn q_integer(&self, n: i64) -> Poly<Rational> {
        Poly::constant(Rational::from_int(n))
    }
}

impl QhDomain for ClassicalQh {
    fn h(&self) -> Poly<Rational> {
        Poly::var()
    }
}

/// Complex values of `q` and `h` with tolerances for floating-point checks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericContext {
    pub q: Complex64,
    pub h: Complex64,
    /// Pass threshold for residuals scaled by `max(1, largest entry)`.
    pub tol_abs: f64,
    /// Relative threshold below which a q-number counts as vanishing.
    pub tol_rel: f64,
}

impl NumericContext {
    pub const DEFAULT_TOL_ABS: f64 = 1e-10;
    pub const DEFAULT_TOL_REL: f64 = 1e-8;

    pub fn new(q: Complex64, h: Complex64) -> Self {
        NumericContext { q, h, tol_abs: Self::DEFAULT_TOL_ABS, tol_rel: Self::DEFAULT_TOL_REL }
    }

    pub fn with_tol(mut self, tol_abs: f64) -> Self {
        self.tol_abs = tol_abs;
        self
    }

    /// Rejects `q = 0`, `q = ±1` and any `q` for which `[k]` vanishes for `1 <= k <= max_index`.
    pub fn check_generic(&self, max_index: i64) -> Result<()> {
        if self.q.norm() == 0.0 {
            return Err(Error::NonGenericQ { index: 0 });
        }
        let dom = Numeric::<f64>::new(self);
        for k in 1..=max_index {
            dom.checked_q_integer(k)?;
        }
        if (self.q * self.q - Complex64::one()).norm() < self.tol_rel {
            return Err(Error::Invalid("q = 1 and q = -1 are not generic".into()));
        }
        Ok(())
    }
}

/// Numeric evaluation at fixed complex `q` and `h`; `s` is the principal
/// square root of `q`.
#[derive(Clone, Copy, Debug)]
pub struct Numeric<F> {
    q: Complex<F>,
    s: Complex<F>,
    h: Complex<F>,
    tol_abs: f64,
    tol_rel: f64,
}

impl<F: Float + std::fmt::Debug + Send + Sync> Numeric<F> {
    pub fn new(ctx: &NumericContext) -> Self {
        let cv = |z: Complex64| Complex::new(F::from(z.re).unwrap(), F::from(z.im).unwrap());
        let q = cv(ctx.q);
        Numeric { q, s: q.sqrt(), h: cv(ctx.h), tol_abs: ctx.tol_abs, tol_rel: ctx.tol_rel }
    }

    pub fn q_value(&self) -> Complex<F> {
        self.q
    }

    pub fn h_value(&self) -> Complex<F> {
        self.h
    }

    pub fn tol_abs(&self) -> f64 {
        self.tol_abs
    }

    /// The same `q` with a different `h`.
    pub fn with_h(&self, h: Complex<F>) -> Self {
        Numeric { h, ..*self }
    }

    /// Evaluates an exact scalar at this point.
    pub fn eval_fraction(&self, x: &QFraction) -> Result<Complex<F>> {
        x.eval(self.s)
    }

    pub fn eval_laurent(&self, x: &LaurentScalar) -> Complex<F> {
        x.eval(self.s)
    }

    pub fn eval_hpoly(&self, p: &Poly<QFraction>) -> Result<Complex<F>> {
        p.coeffs().iter().rev().try_fold(Complex::zero(), |acc, c| Ok(acc * self.h + c.eval(self.s)?))
    }

    fn vanishes(&self, v: Complex<F>, scale: F) -> bool {
        v.norm().to_f64().unwrap_or(0.0) <= self.tol_rel * scale.to_f64().unwrap_or(1.0).max(1.0)
    }

    pub fn checked_q_integer(&self, n: i64) -> Result<Complex<F>> {
        let v = self.q_integer(n);
        let big = self.q.norm().max(self.q.inv().norm()).powi(n.abs() as i32 - 1);
        if n == 0 || self.vanishes(v, big) {
            return Err(Error::NonGenericQ { index: n });
        }
        Ok(v)
    }
}

impl<F: Float + std::fmt::Debug + Send + Sync> QDomain for Numeric<F> {
    type Elem = Complex<F>;

    fn mode(&self) -> Mode {
        Mode::Numeric
    }

    fn s_pow(&self, k: i64) -> Complex<F> {
        self.s.powi(k as i32)
    }

    fn div_s_integer(&self, x: &Complex<F>, k: i64) -> Result<Complex<F>> {
        let d = self.s_integer(k);
        let big = self.s.norm().max(self.s.inv().norm()).powi(k.abs() as i32 - 1);
        if k == 0 || self.vanishes(d, big) {
            return Err(Error::NonGenericQ { index: vanishing_index(k.unsigned_abs() as u32) });
        }
        Ok(*x / d)
    }

    fn div_q_integer(&self, x: &Complex<F>, n: i64) -> Result<Complex<F>> {
        Ok(*x / self.checked_q_integer(n)?)
    }

    fn compare(&self, lhs: &Matrix<Complex<F>>, rhs: &Matrix<Complex<F>>) -> Outcome {
        if lhs.dim() != rhs.dim() {
            return Outcome { residual: f64::INFINITY, scale: 0.0, pass: false };
        }
        let mut diff = 0.0f64;
        let mut scale = 0.0f64;
        let mut finite = true;
        for ((_, _, a), (_, _, b)) in lhs.entries().zip(rhs.entries()) {
            let na = a.norm().to_f64().unwrap_or(f64::NAN);
            let nb = b.norm().to_f64().unwrap_or(f64::NAN);
            let nd = (*a - *b).norm().to_f64().unwrap_or(f64::NAN);
            finite &= na.is_finite() && nb.is_finite() && nd.is_finite();
            scale = scale.max(na).max(nb);
            diff = diff.max(nd);
        }
        if !finite {
            return Outcome { residual: f64::INFINITY, scale, pass: false };
        }
        let residual = diff / scale.max(1.0);
        Outcome { residual, scale, pass: residual <= self.tol_abs }
    }

    fn sqrt(&self, x: &Complex<F>) -> Option<Complex<F>> {
        Some(x.sqrt())
    }

    fn describe(&self) -> String {
        format!(
            "numeric q = {:?}, h = {:?}",
            (self.q.re.to_f64().unwrap_or(0.0), self.q.im.to_f64().unwrap_or(0.0)),
            (self.h.re.to_f64().unwrap_or(0.0), self.h.im.to_f64().unwrap_or(0.0))
        )
    }
}

impl<F: Float + std::fmt::Debug + Send + Sync> QhDomain for Numeric<F> {
    fn h(&self) -> Complex<F> {
        self.h
    }
}

/// Substitutes `s = 1` in every exact scalar.
pub fn substitute_q_one(x: &QFraction) -> Rational {
    x.substitute_q_one()
}

pub fn substitute_q_one_hpoly(p: &Poly<QFraction>) -> Poly<Rational> {
    p.map(|c| c.substitute_q_one())
}

/// Evaluates an exact scalar at a numeric point (principal `s = sqrt(q)`).
pub fn eval_numeric(x: &QFraction, ctx: &NumericContext) -> Result<Complex64> {
    if ctx.q.norm() == 0.0 {
        return Err(Error::NonGenericQ { index: 0 });
    }
    Numeric::<f64>::new(ctx).eval_fraction(x)
}

pub fn eval_numeric_hpoly(p: &Poly<QFraction>, ctx: &NumericContext) -> Result<Complex64> {
    if ctx.q.norm() == 0.0 {
        return Err(Error::NonGenericQ { index: 0 });
    }
    Numeric::<f64>::new(ctx).eval_hpoly(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: f64) -> NumericContext {
        NumericContext::new(Complex64::new(q, 0.0), Complex64::new(0.5, 0.0))
    }

    #[test]
    fn q_integer_two_at_q_two() {
        let v = eval_numeric(&SymbolicQ.q_integer(2), &ctx(2.0)).unwrap();
        assert!((v - Complex64::new(2.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn xi_at_q_one_is_one() {
        let v = eval_numeric(&SymbolicQ.xi(), &ctx(1.0)).unwrap();
        assert!((v - Complex64::one()).norm() < 1e-14);
        assert_eq!(substitute_q_one(&SymbolicQ.xi()), Rational::one());
        assert_eq!(ClassicalQ.xi(), Rational::one());
    }

    #[test]
    fn substitute_q_one_examples() {
        assert_eq!(substitute_q_one(&SymbolicQ.q_integer(3)), Rational::from_int(3));
        let anti = SymbolicQ.s_pow(5) - SymbolicQ.s_pow(-5);
        assert!(substitute_q_one(&anti).is_zero());
    }

    #[test]
    fn half_integer_q_numbers_agree_across_domains() {
        let c = ctx(1.7);
        let num = Numeric::<f64>::new(&c);
        for two_x in -7..=7 {
            let exact = SymbolicQ.q_number_half(two_x).unwrap();
            let a = eval_numeric(&exact, &c).unwrap();
            let b = num.q_number_half(two_x).unwrap();
            assert!((a - b).norm() < 1e-12, "two_x = {two_x}");
            assert_eq!(
                substitute_q_one(&exact),
                Rational::new(two_x.into(), 2.into()),
            );
        }
    }

    #[test]
    fn numeric_division_detects_roots_of_unity() {
        // q = i: q^2 = -1 so [2] = q + 1/q = 0.
        let c = NumericContext::new(Complex64::new(0.0, 1.0), Complex64::zero());
        let num = Numeric::<f64>::new(&c);
        assert_eq!(num.div_q_integer(&Complex64::one(), 2), Err(Error::NonGenericQ { index: 2 }));
        assert!(c.check_generic(4).is_err());
        assert!(ctx(1.3).check_generic(15).is_ok());
        assert!(ctx(1.0).check_generic(3).is_err());
    }

    #[test]
    fn single_precision_domain_works() {
        let num = Numeric::<f32>::new(&ctx(2.0));
        let v = num.q_integer(2);
        assert!((v.re - 2.5).abs() < 1e-5);
    }
}
