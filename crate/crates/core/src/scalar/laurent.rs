//! Laurent polynomials in `s = q^{1/2}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{rational_to_float, Ring};
use crate::Rational;

/// A Laurent polynomial `Σ c_k s^k` with coefficients in `C`.
///
/// Stored densely from the lowest exponent; both ends are trimmed so equal
/// values have identical representations. Zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> Laurent<C> {
    pub fn monomial(c: C, exp: i64) -> Self {
        let mut out = Laurent { low: exp, coeffs: vec![c] };
        out.normalize();
        out
    }

    /// `s^k`.
    pub fn s_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = acc + Self::monomial(c, e);
        }
        acc
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn coeff(&self, exp: i64) -> C {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn low_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        };
        out.normalize();
        out
    }

    /// Value at `s = 1`, i.e. the `q -> 1` limit.
    pub fn substitute_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc.add_ref(c))
    }

    /// Substitutes `s -> s^{-1}`.
    pub fn invert_variable(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(hi) => Laurent { low: -hi, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        if other.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return if negate_other { -other.clone() } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().unwrap().max(other.high_exp().unwrap());
        let mut coeffs = vec![C::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(self.low - low) as usize + i];
            *slot = slot.add_ref(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + i];
            *slot = if negate_other { slot.sub_ref(c) } else { slot.add_ref(c) };
        }
        let mut out = Laurent { low, coeffs };
        out.normalize();
        out
    }

    fn product(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        let mut out = Laurent { low: self.low + other.low, coeffs };
        out.normalize();
        out
    }
}

impl Laurent<Rational> {
    /// Evaluates at a complex value of `s`.
    pub fn eval<F: Float>(&self, s: Complex<F>) -> Complex<F> {
        let Some(low) = self.low_exp() else {
            return Complex::new(F::zero(), F::zero());
        };
        // Horner in s, then the overall s^low.
        let mut acc = Complex::new(F::zero(), F::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * s + Complex::new(rational_to_float::<F>(c), F::zero());
        }
        acc * s.powi(low as i32)
    }

    /// Exact division in the Laurent ring.
    ///
    /// Fails with [`Error::DivisionNotExact`] unless `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionNotExact);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both sides become ordinary polynomials with nonzero constant term
        // once the s^low units are stripped; divide those from the top.
        let mut rem: Vec<Rational> = self.coeffs.clone();
        let div = &divisor.coeffs;
        if rem.len() < div.len() {
            return Err(Error::DivisionNotExact);
        }
        let lead = div.last().unwrap();
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + div.len() - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionNotExact);
        }
        let mut out = Laurent { low: self.low - divisor.low, coeffs: quot };
        out.normalize();
        Ok(out)
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}

/// The s-integer `{k} = (s^k - s^{-k}) / (s - s^{-1}) = Σ_{i<k} s^{k-1-2i}`.
///
/// `[n] = {2n}/{2}` relates it to the q-integer.
pub fn s_integer<C: Ring>(k: i64) -> Laurent<C> {
    if k == 0 {
        return Laurent::zero();
    }
    let n = k.abs();
    let coeffs = (0..2 * n - 1)
        .map(|i| if i % 2 == 0 { C::one() } else { C::zero() })
        .collect();
    let out = Laurent { low: -(n - 1), coeffs };
    if k < 0 {
        -out
    } else {
        out
    }
}

/// The q-integer `[n] = Σ_{k<n} q^{n-1-2k}` written in `s` (so `q^a = s^{2a}`).
pub fn q_integer_laurent<C: Ring>(n: i64) -> Laurent<C> {
    if n == 0 {
        return Laurent::zero();
    }
    let m = n.abs();
    let mut coeffs = vec![C::zero(); (4 * (m - 1) + 1) as usize];
    for k in 0..m {
        coeffs[(4 * k) as usize] = C::one();
    }
    let out = Laurent { low: -2 * (m - 1), coeffs };
    if n < 0 {
        -out
    } else {
        out
    }
}

impl<C: Ring> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Laurent<C> {
    fn one() -> Self {
        Laurent { low: 0, coeffs: vec![C::one()] }
    }
}

impl<C: Ring> Add for Laurent<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl<C: Ring> Sub for Laurent<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl<C: Ring> Mul for Laurent<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<'a, C: Ring> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        self.product(rhs)
    }
}

impl<'a, C: Ring> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        self.combine(rhs, false)
    }
}

impl<'a, C: Ring> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        self.combine(rhs, true)
    }
}

impl<C: Ring> Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Ring> Ring for Laurent<C> {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(C::from_rational(r))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.product(other)
    }
}

impl fmt::Display for Laurent<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "s^{e}")?,
                (_, false) => write!(f, "{mag}*s^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = Laurent<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn difference_of_squares() {
        let a = L::s_pow(2) + L::s_pow(-2);
        let b = L::s_pow(2) - L::s_pow(-2);
        assert_eq!(a * b, L::s_pow(4) - L::s_pow(-4));
    }

    #[test]
    fn q_integer_two_squared() {
        // [2]^2 = [1] + [3]
        let two = q_integer_laurent::<Rational>(2);
        let expected = q_integer_laurent::<Rational>(1) + q_integer_laurent::<Rational>(3);
        assert_eq!(two.clone() * two, expected);
    }

    #[test]
    fn cancellation_gives_canonical_zero() {
        let a = L::from_terms([(3, r(1, 2)), (-5, r(-7, 3))]);
        let z = a.clone() - a;
        assert!(z.is_zero());
        assert_eq!(z, L::zero());
        assert_eq!(z.low_exp(), None);
    }

    #[test]
    fn exact_division() {
        let a = L::s_pow(4) - L::s_pow(-4);
        let b = L::s_pow(2) - L::s_pow(-2);
        assert_eq!(a.checked_div(&b).unwrap(), L::s_pow(2) + L::s_pow(-2));
        // [6] is divisible by [3] and [2] but [5] is not divisible by [2].
        let six = q_integer_laurent::<Rational>(6);
        assert!(six.checked_div(&q_integer_laurent(3)).is_ok());
        assert_eq!(
            q_integer_laurent::<Rational>(5).checked_div(&q_integer_laurent(2)),
            Err(Error::DivisionNotExact)
        );
    }

    #[test]
    fn s_integer_relates_to_q_integer() {
        for n in 1..8 {
            let lhs = s_integer::<Rational>(2 * n);
            let rhs = q_integer_laurent::<Rational>(n) * s_integer::<Rational>(2);
            assert_eq!(lhs, rhs);
        }
        assert_eq!(s_integer::<Rational>(-3), -s_integer::<Rational>(3));
    }

    #[test]
    fn eval_s_fourth_at_q_three() {
        let s = Complex::new(3.0f64, 0.0).sqrt();
        let v = L::s_pow(4).eval(s);
        assert!((v - Complex::new(9.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn substitute_one_of_antisymmetric_is_zero() {
        assert!((L::s_pow(5) - L::s_pow(-5)).substitute_one().is_zero());
        assert_eq!(q_integer_laurent::<Rational>(3).substitute_one(), r(3, 1));
    }

    #[test]
    fn display_is_readable() {
        let x = L::from_terms([(2, r(1, 1)), (-2, r(-1, 2))]);
        assert_eq!(x.to_string(), "s^2 - 1/2*s^-2");
    }
}
