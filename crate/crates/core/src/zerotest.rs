//! Randomized zero testing by evaluation at integer points.
//!
//! Points are drawn uniformly from `[-2^16, 2^16]` in every variable. For a
//! nonzero polynomial of total degree `d`, one trial reports "zero" with
//! probability at most `d / (2^17 + 1)`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Coeff, Polynomial};

pub const SAMPLE_BOUND: i64 = 1 << 16;

/// Random integer point with one coordinate per variable of the space.
pub fn random_point(rng: &mut impl Rng, nvars: usize) -> Vec<Coeff> {
    (0..nvars)
        .map(|_| Coeff::from_integer(BigInt::from(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))))
        .collect()
}

/// `false` means `p` is certainly nonzero. `true` means every trial vanished;
/// callers must confirm with [`Polynomial::is_zero`] before relying on it.
pub fn probabilistic_zero_test(p: &Polynomial, trials: u32, seed: u64) -> bool {
    assert!(trials >= 1, "at least one trial is required");
    if p.is_zero() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nvars = p.space().nvars();
    for _ in 0..trials {
        let point = random_point(&mut rng, nvars);
        if !p.eval_unchecked(&point).is_zero() {
            return false;
        }
    }
    true
}
