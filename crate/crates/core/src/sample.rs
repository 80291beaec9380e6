//! Seeded random rational points for exact identity testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Q;
use crate::error::{Error, Result};

/// Numerators are drawn from `[-NUM_RANGE, NUM_RANGE] \ {0}`.
pub const NUM_RANGE: i64 = 40;
/// Denominators are drawn from `[1, DEN_RANGE]`.
pub const DEN_RANGE: i64 = 17;
/// Redraws allowed when a point lands on a pole.
pub const MAX_REDRAWS: usize = 64;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Nonzero rational `p/q'`, never ±1.
    pub fn rational(&mut self) -> Q {
        loop {
            let p = self.rng.gen_range(-NUM_RANGE..=NUM_RANGE);
            let d = self.rng.gen_range(1..=DEN_RANGE);
            let x = Q::new(p, d);
            if p != 0 && x.abs() != Q::one() {
                return x;
            }
        }
    }

    pub fn rationals(&mut self, n: usize) -> Vec<Q> {
        (0..n).map(|_| self.rational()).collect()
    }

    /// Draw points with `draw` and evaluate `f` until it does not hit a
    /// pole.
    pub fn retry<T, P>(&mut self, mut draw: impl FnMut(&mut Self) -> P, mut f: impl FnMut(&P) -> Result<T>) -> Result<(P, T)> {
        for _ in 0..MAX_REDRAWS {
            let p = draw(self);
            match f(&p) {
                Ok(v) => return Ok((p, v)),
                Err(Error::RPole | Error::KPole | Error::PoleHit | Error::WeylDenominatorZero) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::PoleHit)
    }
}
