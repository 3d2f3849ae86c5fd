use serde::{Deserialize, Serialize};

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::QDomain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Raising acts with coefficient 1; all q-integer content sits in the
    /// lowering operator, so every entry is square-root free.
    Polynomial,
    /// The standard unitary-type basis with square roots of q-integers.
    Symmetric,
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polynomial" => Ok(Basis::Polynomial),
            "symmetric" => Ok(Basis::Symmetric),
            other => Err(Error::Invalid(format!("unknown basis {other:?}"))),
        }
    }
}

/// An irreducible representation label `twoJ = 2j` with a basis choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSpec {
    pub two_j: u32,
    pub basis: Basis,
}

impl RepSpec {
    pub fn polynomial(two_j: u32) -> Self {
        RepSpec { two_j, basis: Basis::Polynomial }
    }

    pub fn symmetric(two_j: u32) -> Self {
        RepSpec { two_j, basis: Basis::Symmetric }
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// `2m` for each basis index, from `2j` down to `-2j`.
    pub fn weights(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.two_j as i64 - 2 * i as i64).collect()
    }
}

/// The generator matrices `J_+`, `J_-`, `q^{±J_0}`, `J_0` of one representation
/// (or of a tensor product built by the coproduct).
#[derive(Clone, Debug)]
pub struct GeneratorSet<E> {
    pub label: String,
    /// `2m` of each basis vector; `J_0` is diagonal with entries `m`.
    pub weights: Vec<i64>,
    pub jp: Matrix<E>,
    pub jm: Matrix<E>,
    pub k_pos: Matrix<E>,
    pub k_neg: Matrix<E>,
    pub j0: Matrix<E>,
}

impl<E: Ring> GeneratorSet<E> {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `diag(f(2m))` over the basis.
    pub fn weight_diag(&self, f: impl Fn(i64) -> E) -> Matrix<E> {
        Matrix::diag(self.weights.iter().map(|w| f(*w)).collect())
    }

    pub fn try_weight_diag(&self, f: impl Fn(i64) -> Result<E>) -> Result<Matrix<E>> {
        Ok(Matrix::diag(self.weights.iter().map(|w| f(*w)).collect::<Result<_>>()?))
    }

    /// `[2J_0] = diag([2m])`.
    pub fn q_two_j0<D: QDomain<Elem = E>>(&self, dom: &D) -> Matrix<E> {
        self.weight_diag(|w| dom.q_integer(w))
    }
}

/// Builds the generators of the `(twoJ+1)`-dimensional irrep.
///
/// Polynomial basis (exact in any domain):
/// `J_+ e_m = e_{m+1}`, `J_- e_m = [j+m][j-m+1] e_{m-1}`, `q^{±J_0} e_m = s^{±2m} e_m`.
///
/// Symmetric basis (needs square roots, so numeric domains only):
/// `J_± e_m = ([j∓m][j±m+1])^{1/2} e_{m±1}`.
pub fn build_uq_rep<D: QDomain>(dom: &D, spec: RepSpec) -> Result<GeneratorSet<D::Elem>> {
    let weights = spec.weights();
    let dim = spec.dim();
    let tj = spec.two_j as i64;
    let mut jp = Matrix::zeros(dim);
    let mut jm = Matrix::zeros(dim);
    for (i, &tm) in weights.iter().enumerate() {
        let j_plus_m = (tj + tm) / 2;
        let j_minus_m = (tj - tm) / 2;
        if i > 0 {
            // e_m -> e_{m+1} sits at row i-1.
            let up = match spec.basis {
                Basis::Polynomial => D::Elem::one(),
                Basis::Symmetric => {
                    let arg = dom.q_integer(j_minus_m) * dom.q_integer(j_plus_m + 1);
                    dom.sqrt(&arg).ok_or(Error::SymmetricBasisRequiresNumeric)?
                }
            };
            jp.set(i - 1, i, up);
        }
        if i + 1 < dim {
            let prod = dom.q_integer(j_plus_m) * dom.q_integer(j_minus_m + 1);
            let down = match spec.basis {
                Basis::Polynomial => prod,
                Basis::Symmetric => dom.sqrt(&prod).ok_or(Error::SymmetricBasisRequiresNumeric)?,
            };
            jm.set(i + 1, i, down);
        }
    }
    let k_pos = Matrix::diag(weights.iter().map(|w| dom.s_pow(*w)).collect());
    let k_neg = Matrix::diag(weights.iter().map(|w| dom.s_pow(-*w)).collect());
    let half = crate::Rational::new(1.into(), 2.into());
    let j0 = Matrix::diag(
        weights.iter().map(|w| dom.rational(&(crate::Rational::from_int(*w) * &half))).collect(),
    );
    Ok(GeneratorSet { label: format!("twoJ={}", spec.two_j), weights, jp, jm, k_pos, k_neg, j0 })
}
