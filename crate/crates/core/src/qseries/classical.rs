//! Classical (`q = 1`) reference values: Bernoulli numbers and the tanh
//! coefficients obtained by reverting arctanh.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::qseries::reversion::beta_oracle;
use crate::Rational;

/// `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        let mut binom = BigInt::one(); // C(m+1, k)
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b.pop().unwrap()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `2^{2n}(2^{2n}-1) B_{2n} / (2n)!`, the `x^{2n-1}` Taylor coefficient of tanh.
pub fn bernoulli_tanh_coefficient(n: usize) -> Rational {
    let four_n = BigInt::one() << (2 * n);
    let num = &four_n * (&four_n - BigInt::one());
    Rational::from_integer(num) * bernoulli(2 * n) / Rational::from_integer(factorial(2 * n))
}

/// `tanh x = Σ t_n x^{2n+1}` by reversion of `arctanh x = Σ x^{2n+1}/(2n+1)`.
pub fn tanh_coefficients(max_n: usize) -> Vec<Rational> {
    let alphas: Vec<Rational> =
        (0..=max_n).map(|n| Rational::new(BigInt::one(), BigInt::from(2 * n + 1))).collect();
    beta_oracle(&alphas)
}

/// One row comparing the classical `β_n` with the Bernoulli closed form.
///
/// `β_n` multiplies `y^{2n+1}`, while the Bernoulli expression indexed by
/// `n` gives the `y^{2n-1}` coefficient; the row records both so the index
/// offset is visible rather than silently corrected.
#[derive(Clone, Debug, Serialize)]
pub struct TanhIndexRow {
    pub n: usize,
    pub beta_at_q_one: String,
    pub bernoulli_formula_at_n: String,
    pub bernoulli_formula_at_n_plus_1: String,
    pub matches_at_n: bool,
    pub matches_at_n_plus_1: bool,
}

pub fn tanh_index_report(classical_betas: &[Rational]) -> Vec<TanhIndexRow> {
    classical_betas
        .iter()
        .enumerate()
        .map(|(n, beta)| {
            // n = 0 has no Bernoulli counterpart at index 0 (the formula vanishes there).
            let at_n = bernoulli_tanh_coefficient(n);
            let at_next = bernoulli_tanh_coefficient(n + 1);
            TanhIndexRow {
                n,
                beta_at_q_one: beta.to_string(),
                bernoulli_formula_at_n: at_n.to_string(),
                bernoulli_formula_at_n_plus_1: at_next.to_string(),
                matches_at_n: *beta == at_n,
                matches_at_n_plus_1: *beta == at_next,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn bernoulli_numbers() {
        let expected = [r(1, 1), r(-1, 2), r(1, 6), r(0, 1), r(-1, 30), r(0, 1), r(1, 42)];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(&bernoulli(n), e, "B_{n}");
        }
        assert_eq!(bernoulli(12), r(-691, 2730));
    }

    #[test]
    fn bernoulli_formula_is_shifted_by_one() {
        let t = tanh_coefficients(6);
        assert_eq!(bernoulli_tanh_coefficient(1), r(1, 1));
        for (n, tn) in t.iter().enumerate() {
            assert_eq!(*tn, bernoulli_tanh_coefficient(n + 1));
        }
        let rows = tanh_index_report(&t);
        assert!(!rows[1].matches_at_n && rows[1].matches_at_n_plus_1);
    }
}
