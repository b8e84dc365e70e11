//! Seeded sampling of rationals, elements and maps.
//!
//! Every randomized routine in the crate draws from [`SeededRng`], built from
//! an explicit `u64` seed, so identical seeds give identical results.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Element;
use crate::linalg::{Mat, Rational, Subspace};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational `p/q` with `|p| ≤ 5` and `1 ≤ q ≤ 3`.
pub fn small_rational(rng: &mut SeededRng) -> Rational {
    let p: i64 = rng.gen_range(-5..=5);
    let q: i64 = rng.gen_range(1..=3);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn small_integer(rng: &mut SeededRng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn random_vector(rng: &mut SeededRng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_element(rng: &mut SeededRng, dim: usize) -> Element {
    Element::new(random_vector(rng, dim))
}

pub fn random_matrix(rng: &mut SeededRng, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(rows, cols, |_, _| small_rational(rng))
}

/// Random invertible matrix; resamples until the rank is full.
pub fn random_invertible(rng: &mut SeededRng, n: usize) -> Mat {
    loop {
        let m = Mat::from_fn(n, n, |_, _| small_integer(rng, 3));
        if m.rank() == n {
            return m;
        }
    }
}

/// Random combination of a subspace's basis with small integer coefficients.
pub fn random_in_subspace(rng: &mut SeededRng, s: &Subspace, bound: i64) -> Vec<Rational> {
    let coeffs: Vec<Rational> = (0..s.dim()).map(|_| small_integer(rng, bound)).collect();
    s.combine(&coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_draws() {
        let a = random_vector(&mut rng_from_seed(7), 10);
        let b = random_vector(&mut rng_from_seed(7), 10);
        assert_eq!(a, b);
        assert_ne!(a, random_vector(&mut rng_from_seed(8), 10));
    }
}
