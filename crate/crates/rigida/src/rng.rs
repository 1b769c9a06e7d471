//! A tiny deterministic pseudorandom generator.
//!
//! Sampling (characteristic sequences, randomized property suites) must give
//! bit-identical results for a given seed on every platform, so we use a
//! self-contained SplitMix64 instead of an external RNG whose stream could
//! change between releases.

use crate::exactlin::Rational;
use num_bigint::BigInt;

/// Default seed used by sampling operations when none is supplied.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// SplitMix64 generator. The stream for a given seed is fixed forever.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// A small rational integer in `-9..=9`, the sampling range used for
    /// generic vectors.
    pub fn small_rational(&mut self) -> Rational {
        Rational::from(BigInt::from(self.int_in(-9, 9)))
    }

    /// A vector of `n` small rational integers.
    pub fn small_vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.small_rational()).collect()
    }
}
