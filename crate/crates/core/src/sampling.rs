//! Seeded sampling of generic numeric points `(q, h)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::scalar::NumericContext;

/// Excluded radius around each `2k`-th root of unity.
pub const ROOT_EXCLUSION: f64 = 0.05;
/// Roots of unity of order `2k` for `k <= MAX_ROOT_ORDER` are avoided.
pub const MAX_ROOT_ORDER: u32 = 15;

/// Distance from `q` to the nearest `2k`-th root of unity, `k <= MAX_ROOT_ORDER`.
pub fn distance_to_roots_of_unity(q: Complex64) -> f64 {
    (1..=MAX_ROOT_ORDER)
        .flat_map(|k| (0..2 * k).map(move |j| Complex64::from_polar(1.0, PI * j as f64 / k as f64)))
        .map(|z| (q - z).norm())
        .fold(f64::INFINITY, f64::min)
}

/// `q` in the annulus `0.5 < |q| < 2` away from low-order roots of unity.
pub fn sample_q<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    loop {
        let r = (rng.gen_range(0.5f64.ln()..2f64.ln())).exp();
        let q = Complex64::from_polar(r, rng.gen_range(0.0..2.0 * PI));
        if distance_to_roots_of_unity(q) > ROOT_EXCLUSION {
            return q;
        }
    }
}

/// Real `q` in `(0.5, 2)` away from `1`.
pub fn sample_real_q<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let q = rng.gen_range(0.5f64.ln()..2f64.ln()).exp();
        if (q - 1.0).abs() > ROOT_EXCLUSION {
            return q;
        }
    }
}

/// `h` uniform in the disk `|h| < 1`.
pub fn sample_h<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.gen::<f64>().sqrt(), rng.gen_range(0.0..2.0 * PI))
}

/// A generic numeric point with default tolerances.
pub fn sample_point<R: Rng + ?Sized>(rng: &mut R) -> NumericContext {
    NumericContext::new(sample_q(rng), sample_h(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_stay_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let c = sample_point(&mut rng);
            assert!(c.q.norm() > 0.5 && c.q.norm() < 2.0);
            assert!(c.h.norm() < 1.0);
            assert!(distance_to_roots_of_unity(c.q) > ROOT_EXCLUSION);
            assert!(c.check_generic(30).is_ok());
        }
    }

    #[test]
    fn roots_are_detected() {
        assert!(distance_to_roots_of_unity(Complex64::new(-1.0, 0.0)) < 1e-12);
        assert!(distance_to_roots_of_unity(Complex64::from_polar(1.0, PI / 7.0)) < 1e-12);
    }

    #[test]
    fn deterministic() {
        let a = sample_q(&mut ChaCha8Rng::seed_from_u64(1));
        let b = sample_q(&mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
    }
}
