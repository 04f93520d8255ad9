//! Seeded random sampling of small rational scalars, forms, and unimodular
//! matrices. Everything is deterministic in the seed so reports reproduce
//! byte for byte.

use crate::scalar::{FieldSpec, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero-biased rational with numerator in `[-9, 9]` and
/// denominator in `[1, 4]`.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=4);
    Scalar::rat(n, d)
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_rational(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_scalar_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// Random element of SL(n, Q) built as a product of elementary shears, so
/// the determinant is exactly 1.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::int(1)
                    } else {
                        Scalar::int(0)
                    }
                })
                .collect()
        })
        .collect();
    // a dozen shears mixes the matrix thoroughly at these sizes
    for _ in 0..12 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c: i64 = rng.gen_range(-3..=3);
        let c = Scalar::int(c);
        // row_i += c * row_j
        for k in 0..n {
            let v = &m[i][k] + &(&c * &m[j][k]);
            m[i][k] = v;
        }
    }
    m
}

pub fn random_field_spec_prime(rng: &mut ChaCha8Rng) -> u64 {
    // medium primes for modular cross-checks
    const PRIMES: [u64; 6] = [10007, 15013, 32003, 65537, 104729, 31013];
    PRIMES[rng.gen_range(0..PRIMES.len())]
}

/// Reduces a rational vector mod `p` for a finite-field mirror run.
pub fn vec_mod_p(v: &[Scalar], p: u64) -> Option<Vec<Scalar>> {
    v.iter().map(|s| crate::scalar::rational_mod_p(s, p)).collect()
}

pub fn zero_vec(field: FieldSpec, len: usize) -> Vec<Scalar> {
    vec![field.zero(); len]
}
