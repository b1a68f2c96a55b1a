//! Generic equivariance checking: does `map` intertwine a domain action
//! with a codomain action, generator for generator?

use crate::actions::GroupActionSpec;
use crate::error::Error;
use crate::report::VerificationReport;
use crate::sampling::SampleStream;
use crate::vecmath as vm;
use rand_chacha::ChaCha8Rng;

/// A map under test: flat coordinates in, flat coordinates out, with
/// excluded-locus inputs rejected.
pub type PointMap<'a> = &'a dyn Fn(&[f64]) -> Result<Vec<f64>, Error>;

/// Draws one domain point from a per-sample RNG stream.
pub type PointSampler<'a> = &'a dyn Fn(&mut ChaCha8Rng) -> Vec<f64>;

/// Checks `map(g·x) = g'·map(x)` for each generator pair (g, g') at seeded
/// sampled points. The two actions must present the same group: equally
/// long generator lists.
///
/// `sampler` draws domain points (flat coordinate vectors) from a per-sample
/// RNG stream; `map` may reject a sample (excluded locus), which is skipped.
#[allow(clippy::too_many_arguments)]
pub fn check_equivariance(
    name: &str,
    map: PointMap<'_>,
    sampler: PointSampler<'_>,
    domain: &GroupActionSpec,
    codomain: &GroupActionSpec,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport, Error> {
    if domain.generators.len() != codomain.generators.len() {
        return Err(Error::Unsupported(format!(
            "generator lists differ in length ({} vs {}): not the same presentation",
            domain.generators.len(),
            codomain.generators.len()
        )));
    }
    let mut report = VerificationReport::new(name, "equivariance", samples, seed, tol);
    let stream = SampleStream::new(seed);
    for i in 0..samples {
        let mut rng = stream.rng_for(i as u64);
        let x = sampler(&mut rng);
        let fx = match map(&x) {
            Ok(v) => v,
            Err(_) => continue,
        };
        for (g, g_out) in domain.generators.iter().zip(&codomain.generators) {
            let gx = g.apply(&x);
            let lhs = match map(&gx) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let rhs = g_out.apply(&fx);
            report.record(vm::distance(&lhs, &rhs), &[&x]);
        }
    }
    Ok(report)
}
