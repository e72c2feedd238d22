//! Deterministic and seeded point sampling on disks.
//!
//! Two flavours are provided: a golden-angle spiral for reproducible
//! quasi-uniform coverage (used by validation gates and inequality
//! checks), and a seeded pseudo-random sampler for randomized property
//! probes. Both are pure functions of their arguments, so identical
//! inputs always yield identical point sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr::Cplx;

/// Seed used when the caller does not supply one ("harmonic" in ASCII).
pub const DEFAULT_SEED: u64 = 0x6861_726d_6f6e_6963;

/// Golden angle in radians, 2π(1 − 1/φ); successive rotations by this
/// angle never resonate with any circle subdivision, giving the spiral
/// its quasi-uniform coverage.
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// `n` quasi-uniform points of the closed disk |z| ≤ `radius`, arranged
/// on a golden-angle (sunflower) spiral. Deterministic.
pub fn sunflower_samples(n: usize, radius: f64) -> Vec<Cplx> {
    (0..n)
        .map(|i| {
            // sqrt of the centred index makes the areal density uniform.
            let rho = radius * (((i as f64) + 0.5) / (n as f64)).sqrt();
            Cplx::from_polar(rho, (i as f64) * GOLDEN_ANGLE)
        })
        .collect()
}

/// `n` pseudo-random points, area-uniform on the closed disk
/// |z| ≤ `radius`, from a counter-based generator seeded with `seed`.
pub fn disk_samples(n: usize, radius: f64, seed: u64) -> Vec<Cplx> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let rho = radius * rng.gen::<f64>().sqrt();
            let theta = std::f64::consts::TAU * rng.gen::<f64>();
            Cplx::from_polar(rho, theta)
        })
        .collect()
}
