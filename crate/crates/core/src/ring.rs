//! The ring abstraction shared by every scalar type in the crate.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, One, ToPrimitive, Zero};

use crate::Rational;

/// A commutative algebra over the rationals.
///
/// Every scalar in this crate (exact rationals, Laurent polynomials in
/// `s = q^{1/2}`, their quotients by s-integers, polynomials in `h`,
/// complex floats) satisfies this; matrices, series and the deformation
/// map are written once against it.
pub trait Ring:
    Clone
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl<F> Ring for Complex<F>
where
    F: Float + Debug + Send + Sync,
{
    fn from_rational(r: &Rational) -> Self {
        let v = r.to_f64().unwrap_or(f64::NAN);
        Complex::new(F::from(v).unwrap_or_else(F::nan), F::zero())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }
}

/// Converts an exact rational to a floating-point type.
pub fn rational_to_float<F: Float>(r: &Rational) -> F {
    F::from(r.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan)
}
