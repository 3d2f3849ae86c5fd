//! Dense square matrices over a [`Ring`].
//!
//! Basis index `i` of a `(2j+1)`-dimensional representation carries the
//! magnetic number `m = j - i`, so raising operators are strictly upper
//! triangular.

use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, T::one())
    }

    pub fn scalar(dim: usize, c: T) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = c.clone();
        }
        m
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * dim + i] = e;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { dim: self.dim, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.entries().all(|(r, c, v)| c > r || v.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { dim: self.dim, data: self.data.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    fn check_dims(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }

    pub fn add_m(&self, other: &Self) -> Self {
        self.check_dims(other);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub_m(&self, other: &Self) -> Self {
        self.check_dims(other);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn mul_m(&self, other: &Self) -> Self {
        self.check_dims(other);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * n + j];
                    *slot = slot.add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul_m(other).sub_m(&other.mul_m(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul_m(other).add_m(&other.mul_m(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = acc.mul_m(self);
        }
        acc
    }

    /// `A^0, A^1, ..., A^n`.
    pub fn powers(&self, n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(Self::identity(self.dim));
        for k in 1..=n {
            let next = out[k - 1].mul_m(self);
            out.push(next);
        }
        out
    }

    /// Kronecker product with the left factor's index varying slowest.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        Self::from_fn(a * b, |r, c| self.get(r / b, c / b).mul_ref(other.get(r % b, c % b)))
    }

    /// Applies a permutation: entry `(r, c)` moves to `(perm[r], perm[c])`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.dim);
        for (r, c, v) in self.entries() {
            out.set(perm[r], perm[c], v.clone());
        }
        out
    }
}

/// `Σ_k coeffs[k] A^k` for a nilpotent `A`, truncated at `k = dim - 1`.
///
/// Every series of the raising generator in the map terminates this way.
/// Fails with [`Error::NotNilpotent`] if `A^dim != 0`.
pub fn nilpotent_series_eval<T: Ring>(coeffs: &[T], a: &Matrix<T>) -> Result<Matrix<T>> {
    let n = a.dim();
    let mut out = Matrix::zeros(n);
    let mut power = Matrix::identity(n);
    for k in 0..=n {
        if power.is_zero() {
            return Ok(out);
        }
        if k == n {
            break;
        }
        if let Some(c) = coeffs.get(k) {
            if !c.is_zero() {
                out = out.add_m(&power.scale(c));
            }
        }
        power = power.mul_m(a);
    }
    Err(Error::NotNilpotent { dim: n })
}

impl<T: Ring> Add for Matrix<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_m(&rhs)
    }
}

impl<T: Ring> Sub for Matrix<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_m(&rhs)
    }
}

impl<T: Ring> Mul for Matrix<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_m(&rhs)
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.mul_m(rhs)
    }
}

impl<'a, T: Ring> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.add_m(rhs)
    }
}

impl<'a, T: Ring> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.sub_m(rhs)
    }
}

impl<T: Ring> Neg for Matrix<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Matrix { dim: self.dim, data: self.data.into_iter().map(|x| -x).collect() }
    }
}

/// Checks that two matrices have the same dimension.
pub fn same_dim<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(format!("{} vs {}", a.dim, b.dim)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{One, Zero};

    fn shift(n: usize) -> Matrix<Rational> {
        Matrix::from_fn(n, |r, c| if c == r + 1 { Rational::one() } else { Rational::zero() })
    }

    #[test]
    fn series_on_zero_matrix_is_constant() {
        let coeffs: Vec<Rational> = (1..5).map(Rational::from_int).collect();
        let out = nilpotent_series_eval(&coeffs, &Matrix::zeros(3)).unwrap();
        assert_eq!(out, Matrix::scalar(3, Rational::from_int(1)));
    }

    #[test]
    fn geometric_series_on_two_by_two() {
        let a = shift(2);
        let ones = vec![Rational::one(); 10];
        let out = nilpotent_series_eval(&ones, &a).unwrap();
        assert_eq!(out, Matrix::identity(2).add_m(&a));
    }

    #[test]
    fn not_nilpotent_is_rejected() {
        let ones = vec![Rational::one(); 3];
        assert_eq!(
            nilpotent_series_eval(&ones, &Matrix::<Rational>::identity(2)),
            Err(Error::NotNilpotent { dim: 2 })
        );
    }

    #[test]
    fn kron_mixed_product() {
        let a = shift(2);
        let b = Matrix::diag(vec![Rational::from_int(2), Rational::from_int(3)]);
        let c = a.transpose();
        let d = shift(2).add_m(&Matrix::identity(2));
        let lhs = a.kron(&b).mul_m(&c.kron(&d));
        let rhs = a.mul_m(&c).kron(&b.mul_m(&d));
        assert_eq!(lhs, rhs);
    }
}
