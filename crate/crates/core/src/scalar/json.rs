//! JSON encoding of exact scalars.
//!
//! A Laurent scalar is `{"s_powers": {"<exp>": [num, den]}}`; a
//! [`QFraction`] adds `"den": {"<k>": e}` for the s-integer product
//! `Π {k}^e` when it is not 1. Polynomials in `h` are arrays of scalars
//! indexed by the power of `h`. Integers that fit in `i64` are written as
//! JSON numbers, larger ones as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::Ring;
use crate::scalar::fraction::{DenMonomial, QFraction};
use crate::scalar::poly::Poly;
use crate::{LaurentScalar, Rational};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BigNum {
    Small(i64),
    Big(String),
}

impl BigNum {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => BigNum::Small(v),
            None => BigNum::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, String> {
        match self {
            BigNum::Small(v) => Ok(BigInt::from(*v)),
            BigNum::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    s_powers: BTreeMap<i64, [BigNum; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    den: BTreeMap<u32, u32>,
}

fn laurent_repr(x: &LaurentScalar) -> BTreeMap<i64, [BigNum; 2]> {
    x.terms()
        .map(|(e, c)| (e, [BigNum::from_big(c.numer()), BigNum::from_big(c.denom())]))
        .collect()
}

fn laurent_from_repr(map: &BTreeMap<i64, [BigNum; 2]>) -> Result<LaurentScalar, String> {
    let mut terms = Vec::with_capacity(map.len());
    for (e, [n, d]) in map {
        let d = d.to_big()?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        terms.push((*e, Rational::new(n.to_big()?, d)));
    }
    Ok(LaurentScalar::from_terms(terms))
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ScalarRepr { s_powers: laurent_repr(self), den: BTreeMap::new() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(de)?;
        if !repr.den.is_empty() {
            return Err(D::Error::custom("a Laurent scalar cannot carry a denominator"));
        }
        laurent_from_repr(&repr.s_powers).map_err(D::Error::custom)
    }
}

impl Serialize for QFraction {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            s_powers: laurent_repr(self.numerator()),
            den: self.denominator().exponents().collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QFraction {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(de)?;
        if repr.den.keys().any(|k| *k < 2) || repr.den.values().any(|e| *e == 0) {
            return Err(D::Error::custom("denominator atoms need k >= 2 and e >= 1"));
        }
        let num = laurent_from_repr(&repr.s_powers).map_err(D::Error::custom)?;
        Ok(QFraction::new(num, DenMonomial::from_exponents(repr.den)))
    }
}

impl<T: Ring + Serialize> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(ser)
    }
}

impl<'de, T: Ring + Deserialize<'de>> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        Ok(Poly::from_coeffs(Vec::<T>::deserialize(de)?))
    }
}
