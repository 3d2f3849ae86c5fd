//! Truncated power series and generic series reversion.
//!
//! This is the independent route to `β_n`: it never looks at partitions,
//! it just substitutes the unknown inverse into the forward series and
//! fixes one coefficient per order.

use crate::ring::Ring;

/// Product of two series truncated after `order`.
pub fn mul_trunc<T: Ring>(a: &[T], b: &[T], order: usize) -> Vec<T> {
    let mut out = vec![T::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

/// `f(g(y))` truncated after `order`; requires `g[0] = 0`.
pub fn compose<T: Ring>(f: &[T], g: &[T], order: usize) -> Vec<T> {
    let mut acc = vec![T::zero(); order + 1];
    for c in f.iter().take(order + 1).rev() {
        acc = mul_trunc(&acc, g, order);
        acc[0] = acc[0].add_ref(c);
    }
    acc
}

/// The dense series `Σ odd[n] y^{2n+1}` up to order `2N+1`.
pub fn odd_series<T: Ring>(odd: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); 2 * odd.len()];
    for (n, c) in odd.iter().enumerate() {
        out[2 * n + 1] = c.clone();
    }
    out
}

/// Reverts `y = Σ α_n x^{2n+1}` (with `α_0 = 1`) order by order and
/// returns the odd coefficients `β_0..β_N` of `x = Σ β_n y^{2n+1}`.
pub fn beta_oracle<T: Ring>(alphas: &[T]) -> Vec<T> {
    let order = 2 * alphas.len() - 1;
    let f = odd_series(alphas);
    let mut g = vec![T::zero(); order + 1];
    g[1] = T::one();
    for k in 2..=order {
        // The y^k coefficient of f(g) is linear in g[k] with slope f[1] = 1.
        let c = compose(&f, &g, k).pop().unwrap();
        g[k] = g[k].sub_ref(&c);
    }
    g.into_iter().skip(1).step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arctanh_reverts_to_tanh() {
        let alphas: Vec<Rational> = (0..6).map(|n| r(1, 2 * n + 1)).collect();
        let betas = beta_oracle(&alphas);
        let expected = [r(1, 1), r(-1, 3), r(2, 15), r(-17, 315), r(62, 2835), r(-1382, 155925)];
        assert_eq!(betas, expected);
    }

    #[test]
    fn composition_of_inverse_pair_is_identity() {
        let alphas: Vec<Rational> = vec![r(1, 1), r(2, 3), r(-5, 7), r(1, 11)];
        let betas = beta_oracle(&alphas);
        let order = 2 * alphas.len() - 1;
        let id = compose(&odd_series(&alphas), &odd_series(&betas), order);
        for (k, c) in id.iter().enumerate() {
            if k == 1 {
                assert_eq!(*c, r(1, 1));
            } else {
                assert!(c.is_zero(), "order {k}");
            }
        }
    }
}
