#![allow(dead_code)]

use gencomp_core::{Count, WeightVector};

/// Every weight vector with length in `1..=max_r` and entries in
/// `0..=max_entry`, in a fixed deterministic order.
pub fn all_weight_vectors(max_r: usize, max_entry: i64) -> Vec<WeightVector> {
    let base = (max_entry + 1) as u64;
    let mut out = Vec::new();
    for r in 1..=max_r {
        for idx in 0..base.pow(r as u32) {
            let mut entries = Vec::with_capacity(r);
            let mut rest = idx;
            for _ in 0..r {
                entries.push((rest % base) as i64);
                rest /= base;
            }
            out.push(WeightVector::new(&entries).unwrap());
        }
    }
    out
}

pub fn c(v: u64) -> Count {
    Count::from(v)
}

/// Deterministic 64-bit generator (splitmix64) for seeded random grids.
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

    /// Uniform-enough value in `0..bound` (bound must be nonzero).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
