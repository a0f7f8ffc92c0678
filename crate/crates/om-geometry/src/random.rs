//! Seeded generation of general-position integer configurations.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use om_core::MAX_GROUND_SET;

use crate::point::{Point3, PointConfiguration, COORD_BOUND};
use crate::GeomError;

const MAX_ATTEMPTS: u32 = 1000;

/// Deterministic general-position configuration: `n` integer points in
/// `[0, bound]^3` drawn from a ChaCha stream seeded with `seed`, resampled
/// wholesale until no four points are coplanar. The same `(n, seed, bound)`
/// always returns the same points.
pub fn random_general_position(
    n: u8,
    seed: u64,
    bound: i64,
) -> Result<PointConfiguration, GeomError> {
    if !(4..=MAX_GROUND_SET).contains(&n) {
        return Err(GeomError::BadGeneratorParams { n, max: MAX_GROUND_SET });
    }
    let bound = bound.clamp(1, COORD_BOUND);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points: Vec<Point3> = (0..n)
            .map(|_| {
                [
                    rng.gen_range(0..=bound),
                    rng.gen_range(0..=bound),
                    rng.gen_range(0..=bound),
                ]
            })
            .collect();
        let config = PointConfiguration::new(points)?;
        if config.check_general_position().is_ok() {
            return Ok(config);
        }
    }
    Err(GeomError::GenerationFailed { attempts: MAX_ATTEMPTS })
}
