//! Reproducible random streams.
//!
//! A sampler is a ChaCha8 keystream keyed by a 64-bit seed. Its 64-bit stream
//! id selects an independent sub-sequence, so `fork(i)` gives per-case
//! generators that do not depend on how many cases ran before or in which order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SeededSampler {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

fn mix(mut x: u64) -> u64 {
    // splitmix64 finalizer
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl SeededSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Fresh sampler for child `index`: same seed, stream derived from this
    /// sampler's stream id and `index` only (not from its position).
    pub fn fork(&self, index: u64) -> Self {
        Self::with_stream(self.seed, mix(self.stream ^ mix(index.wrapping_add(1))))
    }

    /// Number of 32-bit words consumed so far.
    pub fn position(&self) -> u128 {
        self.rng.get_word_pos()
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform (by area) in the closed disk of radius `max_radius` about 0.
    pub fn disk_point(&mut self, max_radius: f64) -> Complex64 {
        let rad = max_radius * self.unit().sqrt();
        let angle = self.uniform(0.0, std::f64::consts::TAU);
        Complex64::from_polar(rad, angle)
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
