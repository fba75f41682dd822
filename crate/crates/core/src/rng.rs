use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every stochastic routine draws from this generator so results depend on
/// the seed alone.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
