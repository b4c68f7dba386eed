use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

/// Protocol stages, each with its own stream under the root seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stage {
    Prepare = 1,
    Channel = 2,
    Check = 3,
    Condense = 4,
    Decode = 5,
}

pub fn stream_rng(seed: u64, stream: u64) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn stage_rng(seed: u64, stage: Stage) -> SimRng {
    stream_rng(seed, stage as u64)
}
