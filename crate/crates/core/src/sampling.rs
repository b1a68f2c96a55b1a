//! Deterministic seeded sampling on spheres.
//!
//! Uniform sphere points come from normalized Gaussian vectors. Each sample
//! index gets its own counter-derived RNG stream from the master seed, so a
//! report is reproducible bit-for-bit no matter how the sample loop is
//! partitioned.

use crate::geometry::{orbit_distance, SpaceDescriptor, UnitVector};
use crate::EPS_SEPARATION;
use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Counter-based stream source: `rng_for(i)` is independent of every other
/// index and of evaluation order.
#[derive(Debug, Clone, Copy)]
pub struct SampleStream {
    seed: u64,
}

impl SampleStream {
    pub fn new(seed: u64) -> Self {
        SampleStream { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng_for(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// One uniform point on S^{ambient-1}.
pub fn sample_unit(rng: &mut ChaCha8Rng, ambient: usize) -> UnitVector {
    loop {
        let v: Vec<f64> = (0..ambient).map(|_| rng.sample(StandardNormal)).collect();
        if let Ok(u) = UnitVector::normalized(&v) {
            return u;
        }
    }
}

/// A pair of independent uniform points drawn from the same stream.
pub fn sample_unit_pair(rng: &mut ChaCha8Rng, ambient: usize) -> (UnitVector, UnitVector) {
    let x = sample_unit(rng, ambient);
    let y = sample_unit(rng, ambient);
    (x, y)
}

/// A uniform pair whose orbits in `space` are separated by more than the
/// diagonal threshold (draws continue within the stream until one qualifies).
pub fn sample_config_pair(
    rng: &mut ChaCha8Rng,
    space: SpaceDescriptor,
) -> (UnitVector, UnitVector) {
    let ambient = space.ambient_len();
    loop {
        let (x, y) = sample_unit_pair(rng, ambient);
        let sep = orbit_distance(space, &x, &y).expect("matching ambient dims");
        if sep > EPS_SEPARATION {
            return (x, y);
        }
    }
}

/// A uniformly random orthonormal 2-frame: Gram–Schmidt on two Gaussian
/// draws, retried in the (measure-zero) degenerate case.
pub fn sample_frame(rng: &mut ChaCha8Rng, ambient: usize) -> (UnitVector, UnitVector) {
    loop {
        let (x, raw) = sample_unit_pair(rng, ambient);
        let c = x.dot(&raw);
        let proj: Vec<f64> = raw
            .coords()
            .iter()
            .zip(x.coords())
            .map(|(r, a)| r - c * a)
            .collect();
        if let Ok(y) = UnitVector::normalized(&proj) {
            return (x, y);
        }
    }
}

/// Perturbs a unit vector by a Gaussian step of size `delta` and
/// renormalizes.
pub fn perturb_unit(rng: &mut ChaCha8Rng, u: &UnitVector, delta: f64) -> UnitVector {
    let v: Vec<f64> = u
        .coords()
        .iter()
        .map(|c| c + delta * rng.sample::<f64, _>(StandardNormal))
        .collect();
    UnitVector::normalized(&v).expect("perturbation of a unit vector stays nonzero")
}
