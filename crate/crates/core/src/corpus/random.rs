//! Seeded random lattices.
//!
//! Attempt `k` (starting at 0) seeds a ChaCha8 generator with
//! `seed + k * 0x9E37_79B9_7F4A_7C15` (wrapping), draws an edge density
//! `p ∈ [0.15, 0.6)`, then for every ordered pair `i < j` of middle elements
//! adds `i < j` with probability `p`. The relation is closed transitively
//! and bounded; the first attempt that yields a lattice is returned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::Lattice;

use super::enumerate::bounded_from_middle;
use super::CorpusError;

pub const DEFAULT_RETRY_BUDGET: usize = 100_000;

const RESEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn random_lattice(n: usize, seed: u64) -> Result<Lattice, CorpusError> {
    random_lattice_with_budget(n, seed, DEFAULT_RETRY_BUDGET)
}

pub fn random_lattice_with_budget(
    n: usize,
    seed: u64,
    budget: usize,
) -> Result<Lattice, CorpusError> {
    if n < 2 {
        return Err(CorpusError::SizeTooSmall(n));
    }
    if n > crate::set::MAX_ELEMENTS {
        return Err(CorpusError::SizeCapExceeded {
            requested: n,
            cap: crate::set::MAX_ELEMENTS,
        });
    }
    let m = n - 2;
    for attempt in 0..budget {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed.wrapping_add((attempt as u64).wrapping_mul(RESEED_STRIDE)),
        );
        let p: f64 = rng.gen_range(0.15..0.6);
        let mut below = vec![0u64; m];
        for (j, row) in below.iter_mut().enumerate() {
            for i in 0..j {
                if rng.gen_bool(p) {
                    *row |= 1 << i;
                }
            }
        }
        // Indices only ever point down, so one ascending pass closes the relation.
        for j in 0..m {
            let mut closed = below[j];
            for (i, &b) in below.iter().enumerate().take(j) {
                if below[j] >> i & 1 == 1 {
                    closed |= b;
                }
            }
            below[j] = closed;
        }
        let name = format!("random-n{n}-s{seed}");
        if let Some(l) = bounded_from_middle(name, &below) {
            return Ok(l);
        }
    }
    Err(CorpusError::RetryBudgetExhausted {
        size: n,
        seed,
        budget,
    })
}
