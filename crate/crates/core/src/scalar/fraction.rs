//! Quotients of Laurent polynomials by products of s-integers.
//!
//! Every denominator the map ever produces is a product of q-integers
//! `[n] = {2n}/{2}` or half-integer q-numbers `[a/2] = {a}/{2}`, so a
//! monomial in the s-integers `{k}` covers all of them and no polynomial
//! gcd is ever needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::laurent::s_integer;
use crate::{LaurentScalar, Rational};

/// `Π {k}^{e_k}` with `k >= 2` and `e_k >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenMonomial(BTreeMap<u32, u32>);

impl DenMonomial {
    pub fn one() -> Self {
        DenMonomial(BTreeMap::new())
    }

    pub fn atom(k: u32) -> Self {
        let mut m = BTreeMap::new();
        if k >= 2 {
            m.insert(k, 1);
        }
        DenMonomial(m)
    }

    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(it: I) -> Self {
        let mut out = Self::one();
        for (k, e) in it {
            if k >= 2 && e > 0 {
                *out.0.entry(k).or_insert(0) += e;
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(k, e)| (*k, *e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, e) in &other.0 {
            *out.entry(*k).or_insert(0) += e;
        }
        DenMonomial(out)
    }

    /// Common multiple taking the larger exponent of each atom.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, e) in &other.0 {
            let slot = out.entry(*k).or_insert(0);
            *slot = (*slot).max(*e);
        }
        DenMonomial(out)
    }

    /// `self / other`, which must divide exactly as monomials.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        let mut out = self.0.clone();
        for (k, e) in &other.0 {
            let slot = out.get_mut(k)?;
            if *slot < *e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                out.remove(k);
            }
        }
        Some(DenMonomial(out))
    }

    pub fn to_laurent(&self) -> LaurentScalar {
        let mut acc = LaurentScalar::one();
        for (k, e) in &self.0 {
            acc = acc * s_integer::<Rational>(*k as i64).pow(*e);
        }
        acc
    }

    pub fn substitute_one(&self) -> Rational {
        let mut acc = BigInt::one();
        for (k, e) in &self.0 {
            acc *= num_traits::pow(BigInt::from(*k), *e as usize);
        }
        Rational::from_integer(acc)
    }

    /// Evaluates at `s`; reports the offending index if an atom vanishes.
    pub fn eval<F: Float>(&self, s: Complex<F>) -> Result<Complex<F>> {
        let mut acc = Complex::new(F::one(), F::zero());
        for (k, e) in &self.0 {
            let atom = s_integer::<Rational>(*k as i64).eval(s);
            let scale = s.norm().max(s.inv().norm()).powi(*k as i32 - 1).max(F::one());
            if atom.norm() <= F::from(1e-12).unwrap() * scale {
                return Err(Error::NonGenericQ { index: vanishing_index(*k) });
            }
            acc = acc * atom.powi(*e as i32);
        }
        Ok(acc)
    }
}

/// `{k}` vanishes iff `q^k = 1` (k odd) or `q^{k/2} = 1` (k even); both are
/// reported as the q-integer with that index.
pub(crate) fn vanishing_index(k: u32) -> i64 {
    if k % 2 == 0 {
        (k / 2) as i64
    } else {
        k as i64
    }
}

/// A Laurent polynomial in `s` divided by a product of s-integers.
///
/// Equality is semantic (cross-multiplied); the stored numerator is not
/// reduced unless [`QFraction::reduce`] is called.
#[derive(Clone, Debug)]
pub struct QFraction {
    num: LaurentScalar,
    den: DenMonomial,
}

impl QFraction {
    pub fn new(num: LaurentScalar, den: DenMonomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        QFraction { num, den }
    }

    pub fn numerator(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denominator(&self) -> &DenMonomial {
        &self.den
    }

    /// The value as a Laurent polynomial, if it is one after reduction.
    pub fn as_laurent(&self) -> Option<LaurentScalar> {
        let r = self.reduce();
        r.den.is_one().then_some(r.num)
    }

    /// Divides by the s-integer `{k}`.
    pub fn div_s_integer(&self, k: i64) -> Result<Self> {
        match k {
            0 => Err(Error::NonGenericQ { index: 0 }),
            1 => Ok(self.clone()),
            -1 => Ok(-self.clone()),
            k if k < 0 => Ok(-self.div_s_integer(-k)?),
            k => Ok(QFraction::new(self.num.clone(), self.den.mul(&DenMonomial::atom(k as u32)))),
        }
    }

    /// Cancels every denominator atom that divides the numerator exactly.
    pub fn reduce(&self) -> Self {
        let mut num = self.num.clone();
        let mut left = BTreeMap::new();
        // Largest atoms first: {k} divides {mk}, so trying small atoms first can
        // strand a larger one.
        let atoms: Vec<_> = self.den.exponents().collect();
        for (k, e) in atoms.into_iter().rev() {
            let atom = s_integer::<Rational>(k as i64);
            let mut remaining = e;
            while remaining > 0 {
                match num.checked_div(&atom) {
                    Ok(q) => {
                        num = q;
                        remaining -= 1;
                    }
                    Err(_) => break,
                }
            }
            if remaining > 0 {
                left.insert(k, remaining);
            }
        }
        QFraction::new(num, DenMonomial(left))
    }

    /// The numerator after multiplying through by `common`, which must be a
    /// multiple of this denominator.
    pub fn clear(&self, common: &DenMonomial) -> Option<LaurentScalar> {
        let extra = common.quotient(&self.den)?;
        Some(&self.num * &extra.to_laurent())
    }

    pub fn eval<F: Float>(&self, s: Complex<F>) -> Result<Complex<F>> {
        let d = self.den.eval(s)?;
        Ok(self.num.eval(s) / d)
    }

    pub fn substitute_q_one(&self) -> Rational {
        self.num.substitute_one() / self.den.substitute_one()
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        if self.den == other.den {
            let num = if negate { &self.num - &other.num } else { &self.num + &other.num };
            return QFraction::new(num, self.den.clone());
        }
        let common = self.den.lcm(&other.den);
        let a = self.clear(&common).expect("lcm is a multiple");
        let b = other.clear(&common).expect("lcm is a multiple");
        let num = if negate { &a - &b } else { &a + &b };
        QFraction::new(num, common)
    }

    fn product(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Self::zero();
        }
        QFraction::new(&self.num * &other.num, self.den.mul(&other.den))
    }
}

impl From<LaurentScalar> for QFraction {
    fn from(num: LaurentScalar) -> Self {
        QFraction::new(num, DenMonomial::one())
    }
}

impl PartialEq for QFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.combine(other, true).num.is_zero()
    }
}

impl Zero for QFraction {
    fn zero() -> Self {
        QFraction { num: LaurentScalar::zero(), den: DenMonomial::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QFraction {
    fn one() -> Self {
        QFraction { num: LaurentScalar::one(), den: DenMonomial::one() }
    }
}

impl Add for QFraction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl Sub for QFraction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl Mul for QFraction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl Neg for QFraction {
    type Output = Self;
    fn neg(self) -> Self {
        QFraction { num: -self.num, den: self.den }
    }
}

impl Ring for QFraction {
    fn from_rational(r: &Rational) -> Self {
        QFraction::from(LaurentScalar::from_rational(r))
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

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})", self.num)?;
        for (k, e) in self.den.exponents() {
            if e == 1 {
                write!(f, "/{{{k}}}")?;
            } else {
                write!(f, "/{{{k}}}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::laurent::q_integer_laurent;

    fn qint(n: i64) -> QFraction {
        QFraction::from(q_integer_laurent::<Rational>(n))
    }

    #[test]
    fn division_then_multiplication_round_trips() {
        let x = QFraction::from(LaurentScalar::s_pow(3) + LaurentScalar::one());
        let y = x.div_s_integer(5).unwrap();
        let back = y * QFraction::from(s_integer::<Rational>(5));
        assert_eq!(back, x);
    }

    #[test]
    fn sum_with_different_denominators() {
        // 1/[3] expressed with s-integers is {2}/{6}.
        let two = QFraction::from(s_integer::<Rational>(2));
        let inv3 = two.div_s_integer(6).unwrap();
        let sum = inv3.clone() + inv3.clone();
        let expected = QFraction::from_int(2) * inv3;
        assert_eq!(sum, expected);
        assert_eq!((qint(3) * sum).as_laurent(), Some(LaurentScalar::from_int(2)));
    }

    #[test]
    fn reduce_cancels_exact_factors() {
        // [3]{2}/({6}{2}) = 1/{2}, since [3] = {6}/{2}.
        let x = (qint(3) * QFraction::from(s_integer::<Rational>(2))).div_s_integer(6).unwrap();
        let r = x.div_s_integer(2).unwrap().reduce();
        assert_eq!(r.denominator(), &DenMonomial::atom(2));
        assert_eq!(r.numerator(), &LaurentScalar::one());
    }

    #[test]
    fn half_integer_q_numbers_at_q_one() {
        // [1/2][3/2] -> 3/4 classically.
        let half = QFraction::one().div_s_integer(2).unwrap();
        let three_half = QFraction::from(s_integer::<Rational>(3)).div_s_integer(2).unwrap();
        let v = (half * three_half).substitute_q_one();
        assert_eq!(v, Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn eval_reports_vanishing_atoms() {
        // q = -1 => s = i, and {2} = s + 1/s = 0.
        let x = QFraction::one().div_s_integer(2).unwrap();
        let s = Complex::new(0.0f64, 1.0);
        assert_eq!(x.eval(s), Err(Error::NonGenericQ { index: 1 }));
    }
}
