//! Seedable random streams.
//!
//! Every group owns its own ChaCha stream derived from the run seed, and the
//! crossover phase draws from a separate stream. Group-level work can then run
//! on any thread without changing the numbers a run produces.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GloaRng = ChaCha8Rng;

const CROSSOVER_STREAM: u64 = u64::MAX;

/// Stream owned by group `group` for a run seeded with `seed`.
pub fn group_stream(seed: u64, group: usize) -> GloaRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(group as u64);
    rng
}

/// Stream reserved for the sequential crossover phase.
pub fn crossover_stream(seed: u64) -> GloaRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(CROSSOVER_STREAM);
    rng
}

/// Plain stream for experiments and helpers outside the engine.
pub fn stream(seed: u64) -> GloaRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All streams a single run needs.
#[derive(Debug, Clone)]
pub struct Streams {
    pub groups: Vec<GloaRng>,
    pub crossover: GloaRng,
}

impl Streams {
    pub fn new(seed: u64, groups: usize) -> Self {
        Streams {
            groups: (0..groups).map(|g| group_stream(seed, g)).collect(),
            crossover: crossover_stream(seed),
        }
    }
}
