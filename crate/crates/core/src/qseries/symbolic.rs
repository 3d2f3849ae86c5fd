//! Polynomials in abstract symbols `α_1, α_2, ...` with rational coefficients.
//!
//! Just enough of a multivariate ring to state the inverse coefficients as
//! formulas in the `α`'s.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::ring::Ring;
use crate::Rational;

/// Exponent vector: entry `i` is the power of `α_{i+1}`; trailing zeros trimmed.
type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl AlphaPoly {
    /// The symbol `α_index` (`index >= 1`).
    pub fn symbol(index: usize) -> Self {
        Self::term(Rational::one(), &[(index, 1)])
    }

    /// `coeff · Π α_i^{e_i}`.
    pub fn term(coeff: Rational, powers: &[(usize, u32)]) -> Self {
        let mut mono: Monomial = Vec::new();
        for &(i, e) in powers {
            assert!(i >= 1, "symbols are 1-based");
            if mono.len() < i {
                mono.resize(i, 0);
            }
            mono[i - 1] += e;
        }
        trim(&mut mono);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        AlphaPoly { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Substitutes values for the symbols.
    pub fn eval<T: Ring>(&self, values: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, (mono, c)| {
            let t = mono
                .iter()
                .enumerate()
                .fold(T::from_rational(c), |t, (i, e)| t.mul_ref(&values[i + 1].pow(*e)));
            acc.add_ref(&t)
        })
    }

    /// Weighted degree `Σ i·e_i`.
    pub fn is_weighted_homogeneous(&self, weight: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum::<u32>() == weight)
    }
}

fn trim(m: &mut Monomial) {
    while m.last() == Some(&0) {
        m.pop();
    }
}

impl Zero for AlphaPoly {
    fn zero() -> Self {
        AlphaPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for AlphaPoly {
    fn one() -> Self {
        Self::term(Rational::one(), &[])
    }
}

impl Add for AlphaPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for AlphaPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for AlphaPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for AlphaPoly {
    type Output = Self;
    fn neg(self) -> Self {
        AlphaPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Ring for AlphaPoly {
    fn from_rational(r: &Rational) -> Self {
        Self::term(r.clone(), &[])
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        AlphaPoly { terms }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let len = ma.len().max(mb.len());
                let mono: Monomial = (0..len)
                    .map(|i| ma.get(i).copied().unwrap_or(0) + mb.get(i).copied().unwrap_or(0))
                    .collect();
                let slot = terms.entry(mono).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        AlphaPoly { terms }
    }
}

impl fmt::Display for AlphaPoly {
    /// Terms ordered with the highest single index first, e.g.
    /// `-a4 + 10*a3*a1 + 5*a2^2 - 55*a2*a1^2 + 55*a1^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        // Lexicographic from the largest index down.
        keys.sort_by(|a, b| {
            let ra: Vec<u32> = a.iter().rev().copied().collect();
            let rb: Vec<u32> = b.iter().rev().copied().collect();
            let pad = |v: &Vec<u32>, n: usize| {
                let mut w = vec![0; n - v.len()];
                w.extend(v);
                w
            };
            let n = ra.len().max(rb.len());
            pad(&rb, n).cmp(&pad(&ra, n))
        });
        for (k, mono) in keys.into_iter().enumerate() {
            let c = &self.terms[mono];
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = mono
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { format!("a{}", i + 1) } else { format!("a{}^{}", i + 1, e) })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
