//! The pinned random stream behind every generated matrix.
//!
//! * Generator: PCG XSL-RR 128/64 (`Pcg64` in `rand_pcg`), multiplier
//!   `0x2360ed051fc65da44385df649fccf645`, increment `(STREAM << 1) | 1` with
//!   `STREAM = 0xa02bdbf7bb3c0a7ac28fa16a64abf96` (the PCG default stream).
//! * Initial state: `(splitmix64(seed) << 64) | splitmix64(splitmix64(seed))`.
//! * Bounded integers: Lemire's multiply-shift with rejection, so a draw in
//!   `[0, n)` is exactly uniform and consumes a platform-independent number
//!   of 64-bit outputs.
//! * Per-instance seeds: `splitmix64(seed + GOLDEN * (index + 1))` with
//!   wrapping arithmetic.

use rand_core::Rng;
use rand_pcg::Pcg64;

pub const STREAM: u128 = 0x0a02_bdbf_7bb3_c0a7_ac28_fa16_a64a_bf96;

/// `floor(2^64 / phi)`, the splitmix64 increment.
pub const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// The splitmix64 output function applied to `x + GOLDEN`.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of instance `index` in a run seeded with `seed`.
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed.wrapping_add(GOLDEN.wrapping_mul(index.wrapping_add(1))))
}

#[derive(Debug, Clone)]
pub struct BenchRng(Pcg64);

impl BenchRng {
    pub fn new(seed: u64) -> Self {
        let hi = splitmix64(seed);
        let lo = splitmix64(hi);
        BenchRng(Pcg64::new(((hi as u128) << 64) | lo as u128, STREAM))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, n)`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let mut m = self.next_u64() as u128 * n as u128;
        if (m as u64) < n {
            let threshold = n.wrapping_neg() % n;
            while (m as u64) < threshold {
                m = self.next_u64() as u128 * n as u128;
            }
        }
        (m >> 64) as u64
    }

    /// Uniform in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = hi.wrapping_sub(lo) as u64;
        if span == u64::MAX {
            return self.next_u64() as i64;
        }
        lo.wrapping_add(self.below(span + 1) as i64)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    /// Two different indices in `[0, n)`, the second drawn by rejection.
    pub fn distinct_pair(&mut self, n: usize) -> (usize, usize) {
        assert!(n >= 2, "need at least two indices");
        let a = self.index(n);
        loop {
            let b = self.index(n);
            if b != a {
                return (a, b);
            }
        }
    }
}
