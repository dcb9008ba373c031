//! Seeded, position-addressable random streams.
//!
//! Every random quantity in the crate is a 53-bit draw read from a ChaCha8
//! stream at a fixed position: `(seed, stream, index)` always yields the same
//! value regardless of how work is sharded across threads. Stream assignment:
//!
//! * Monte Carlo densities: stream `i` holds the coordinates of pattern node
//!   `i`, index = sample number.
//! * W-random graphs: stream 0 holds the block of node `i` at index `i`;
//!   stream `1 + i` holds the edge coin of pair `{i, j}` (i < j) at index `j`.
//! * Random anchors: stream 0, index = anchor position.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub const UNIT_BITS: u32 = 53;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Streams {
    seed: u64,
}

impl Streams {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Generator positioned at draw `index` of `stream`.
    pub fn positioned(&self, stream: u64, index: u64) -> DrawCursor {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        // two 32-bit words per u64 draw
        rng.set_word_pos(u128::from(index) * 2);
        DrawCursor { rng }
    }

    /// Fills `out` with draws `start..start + out.len()` of `stream`.
    pub fn fill(&self, stream: u64, start: u64, out: &mut [u64]) {
        let mut cursor = self.positioned(stream, start);
        for slot in out.iter_mut() {
            *slot = cursor.next_bits();
        }
    }
}

pub struct DrawCursor {
    rng: ChaCha8Rng,
}

impl DrawCursor {
    /// Next 53-bit integer draw, uniform on `0..2^53`.
    pub fn next_bits(&mut self) -> u64 {
        self.rng.next_u64() >> (64 - UNIT_BITS)
    }

    /// Next uniform real in `[0, 1)`, exactly `bits / 2^53`.
    pub fn next_unit(&mut self) -> f64 {
        bits_to_unit(self.next_bits())
    }
}

pub fn bits_to_unit(bits: u64) -> f64 {
    bits as f64 * (1.0 / (1u64 << UNIT_BITS) as f64)
}

/// SplitMix64 finalizer, used to derive child seeds from `(seed, a, b)`.
pub fn derive_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed
        .wrapping_add(a.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(b.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Index of the first threshold strictly above `bits`. The thresholds are
/// cumulative and the last one must be `2^53`.
pub fn pick_by_thresholds(bits: u64, cumulative: &[u64]) -> usize {
    cumulative.partition_point(|&t| t <= bits)
}
