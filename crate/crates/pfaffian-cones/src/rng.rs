//! Deterministic seeded randomness. Every randomized routine derives one
//! stream per (seed, trial) pair, so trials are order-independent and runs
//! are reproducible across platforms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ring::{rat, Rational};

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(trial.wrapping_add(1))))
}

/// Integer coordinates in `[-9, 9]`, the identity-testing sampling box.
pub(crate) fn integer_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.gen_range(-9..=9))).collect()
}

/// Small rationals: numerator in `[-9, 9]`, denominator in `[1, 3]`.
pub(crate) fn small_rational(rng: &mut impl Rng) -> Rational {
    crate::ring::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3))
}

pub(crate) fn small_rational_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}
