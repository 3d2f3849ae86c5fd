//! The map coefficients `α_n` and the inverse coefficients `β_n`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::qseries::legendre::legendre_at;
use crate::ring::Ring;
use crate::scalar::QDomain;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Alpha,
    Beta,
    Legendre,
    TanhClassical,
}

/// A coefficient list `values[0..=truncation_order]`.
#[derive(Clone, Debug)]
pub struct SeriesCoeffs<T> {
    pub kind: SeriesKind,
    pub values: Vec<T>,
    pub truncation_order: usize,
}

impl<T: Ring> SeriesCoeffs<T> {
    pub fn new(kind: SeriesKind, values: Vec<T>) -> Self {
        let truncation_order = values.len().saturating_sub(1);
        SeriesCoeffs { kind, values, truncation_order }
    }
}

/// `α_n = P_n(ξ)/[2n+1]`.
pub fn alpha<D: QDomain>(dom: &D, n: usize) -> Result<D::Elem> {
    if n == 0 {
        return Ok(D::Elem::one());
    }
    dom.div_q_integer(&legendre_at(dom, n), 2 * n as i64 + 1)
}

/// `α_0, ..., α_max_n`.
pub fn alphas<D: QDomain>(dom: &D, max_n: usize) -> Result<SeriesCoeffs<D::Elem>> {
    let values = (0..=max_n).map(|n| alpha(dom, n)).collect::<Result<Vec<_>>>()?;
    Ok(SeriesCoeffs::new(SeriesKind::Alpha, values))
}

/// Multiplicities `ν_p` with `Σ p ν_p = n - m` and `Σ ν_p <= 2m + 1`,
/// together with the symmetry factor
/// `ζ = (2m+1)! / ((2m+1 - Σ ν_p)! Π ν_p!)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub n: usize,
    pub m: usize,
    /// `p -> ν_p`, only positive multiplicities.
    pub multiplicities: BTreeMap<usize, u32>,
    pub zeta: BigUint,
}

impl Partition {
    pub fn total(&self) -> u32 {
        self.multiplicities.values().sum()
    }

    pub fn weight(&self) -> usize {
        self.multiplicities.iter().map(|(p, v)| p * *v as usize).sum()
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Every multiplicity map contributing to `Z_{n,m}`, each exactly once.
///
/// Parts are filled largest first; a branch is cut as soon as the number of
/// parts would exceed `2m + 1`.
pub fn enumerate_partitions(n: usize, m: usize) -> Vec<Partition> {
    assert!(m >= 1 && m <= n, "need 1 <= m <= n");
    let budget = 2 * m as u32 + 1;
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    fill(n - m, n - m, budget, &mut current, &mut out);
    out.into_iter()
        .map(|mults: BTreeMap<usize, u32>| {
            let total: u32 = mults.values().sum();
            let denom = mults.values().fold(factorial(budget - total), |acc, v| acc * factorial(*v));
            Partition { n, m, zeta: factorial(budget) / denom, multiplicities: mults }
        })
        .collect()
}

fn fill(
    remaining: usize,
    max_part: usize,
    budget: u32,
    current: &mut BTreeMap<usize, u32>,
    out: &mut Vec<BTreeMap<usize, u32>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if max_part == 0 || budget == 0 {
        return;
    }
    let p = max_part.min(remaining);
    // Take p with every feasible multiplicity, then move to smaller parts.
    let most = ((remaining / p) as u32).min(budget);
    for count in (0..=most).rev() {
        if count > 0 {
            current.insert(p, count);
        }
        fill(remaining - p * count as usize, p - 1, budget - count, current, out);
        current.remove(&p);
    }
}

/// `β_0 = 1`, `β_n = -Σ_{m=1}^{n} α_m Z_{n,m}` with
/// `Z_{n,m} = Σ_partitions ζ Π_p β_p^{ν_p}` and `Z_{n,n} = 1`.
///
/// `alphas[0]` is taken to be 1. Returns `β_0..β_N` for `N = alphas.len() - 1`.
pub fn beta_recursive<T: Ring>(alphas: &[T]) -> Vec<T> {
    let mut betas: Vec<T> = vec![T::one()];
    for n in 1..alphas.len() {
        let mut acc = T::zero();
        for (m, alpha_m) in alphas.iter().enumerate().take(n + 1).skip(1) {
            if alpha_m.is_zero() {
                continue;
            }
            let mut z = T::zero();
            for part in enumerate_partitions(n, m) {
                let zeta = T::from_rational(&Rational::from_integer(part.zeta.clone().into()));
                let term = part
                    .multiplicities
                    .iter()
                    .fold(zeta, |t, (p, nu)| t.mul_ref(&betas[*p].pow(*nu)));
                z = z.add_ref(&term);
            }
            acc = acc.add_ref(&alpha_m.mul_ref(&z));
        }
        betas.push(-acc);
    }
    betas
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ClassicalQ, SymbolicQ};

    fn zetas(n: usize, m: usize) -> Vec<(Vec<(usize, u32)>, u64)> {
        let mut v: Vec<_> = enumerate_partitions(n, m)
            .into_iter()
            .map(|p| {
                let z: u64 = p.zeta.try_into().unwrap();
                (p.multiplicities.into_iter().collect::<Vec<_>>(), z)
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn diagonal_partition_is_empty() {
        assert_eq!(zetas(1, 1), vec![(vec![], 1)]);
        assert_eq!(zetas(5, 5), vec![(vec![], 1)]);
    }

    #[test]
    fn small_partitions() {
        assert_eq!(zetas(2, 1), vec![(vec![(1, 1)], 3)]);
        assert_eq!(zetas(3, 1), vec![(vec![(1, 2)], 3), (vec![(2, 1)], 3)]);
    }

    #[test]
    fn part_count_is_bounded() {
        // n - m = 4 with m = 1 allows at most 3 parts: {1,1,1,1} is excluded.
        let parts = enumerate_partitions(5, 1);
        assert!(parts.iter().all(|p| p.total() <= 3 && p.weight() == 4));
        assert_eq!(parts.len(), 4); // {4}, {3,1}, {2,2}, {2,1,1}
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&SymbolicQ, 0).unwrap(), crate::QFraction::one());
        let a1 = alpha(&SymbolicQ, 1).unwrap();
        let expected = SymbolicQ.div_q_integer(&SymbolicQ.xi(), 3).unwrap();
        assert_eq!(a1, expected);
        assert_eq!(alpha(&SymbolicQ, 2).unwrap().substitute_q_one(), Rational::new(1.into(), 5.into()));
        assert_eq!(alpha(&ClassicalQ, 3).unwrap(), Rational::new(1.into(), 7.into()));
    }

    #[test]
    fn classical_beta_one() {
        let a = alphas(&ClassicalQ, 1).unwrap();
        let b = beta_recursive(&a.values);
        assert_eq!(b[1], Rational::new((-1).into(), 3.into()));
    }
}
