//! Finite group actions on coordinate vectors, as explicit generator lists.
//!
//! A [`GroupActionSpec`] is a named list of evaluable generators. Two specs
//! with generator lists of equal length form a presentation pairing for
//! [`crate::equivariance::check_equivariance`]: the i-th domain generator is
//! matched against the i-th codomain generator.
//!
//! Actions on pairs of sphere points act on the flat concatenation of the
//! two coordinate vectors.

use crate::vecmath as vm;
use std::fmt;
use std::sync::Arc;

type GenFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// One group generator: a norm-preserving map on coordinate vectors.
#[derive(Clone)]
pub struct Generator {
    pub name: &'static str,
    /// Order of the generator in the group (g^order = id).
    pub order: usize,
    map: GenFn,
}

impl Generator {
    pub fn new(
        name: &'static str,
        order: usize,
        map: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        Generator {
            name,
            order,
            map: Arc::new(map),
        }
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (self.map)(v)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Generator({}, order {})", self.name, self.order)
    }
}

/// Which action a spec encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionKind {
    /// x ↦ -x on a sphere.
    Antipodal,
    /// Coordinatewise multiplication by e^{2πi/m} on interleaved complex
    /// coordinates.
    RotationZm { m: usize },
    /// (x, y) ↦ (y, x) on a flat pair.
    CoordinateSwap,
    /// The wreath-product action on a pair of spheres: per-factor antipodes
    /// plus the swap.
    DihedralPairs,
    /// The same dihedral group acting on a target sphere through its
    /// projection to the swap factor: per-factor antipodes act trivially,
    /// the swap acts antipodally.
    TrivialThroughZ2,
}

/// A group action given by explicit generators.
#[derive(Debug, Clone)]
pub struct GroupActionSpec {
    pub kind: ActionKind,
    pub generators: Vec<Generator>,
}

fn half(v: &[f64]) -> (usize, &[f64], &[f64]) {
    let h = v.len() / 2;
    (h, &v[..h], &v[h..])
}

impl GroupActionSpec {
    /// Antipodal ℤ/2 on a sphere.
    pub fn antipodal() -> Self {
        GroupActionSpec {
            kind: ActionKind::Antipodal,
            generators: vec![Generator::new("antipode", 2, vm::neg)],
        }
    }

    /// Trivial action with `count` identity generators (pairs with any
    /// domain presentation whose generators should act invisibly).
    pub fn trivial(count: usize) -> Self {
        GroupActionSpec {
            kind: ActionKind::TrivialThroughZ2,
            generators: (0..count)
                .map(|_| Generator::new("identity", 1, |v: &[f64]| v.to_vec()))
                .collect(),
        }
    }

    /// ℤ/m rotation by the primitive root of unity on interleaved complex
    /// coordinates.
    pub fn rotation_zm(m: usize) -> Self {
        GroupActionSpec {
            kind: ActionKind::RotationZm { m },
            generators: vec![Generator::new("rotation", m, move |v| {
                let (re, im) = vm::root_of_unity(m, 1);
                vm::cplx_scalar_mul(re, im, v)
            })],
        }
    }

    /// Swap of the two halves of a flat pair.
    pub fn coordinate_swap() -> Self {
        GroupActionSpec {
            kind: ActionKind::CoordinateSwap,
            generators: vec![Generator::new("swap", 2, |v| {
                let (_, a, b) = half(v);
                let mut out = b.to_vec();
                out.extend_from_slice(a);
                out
            })],
        }
    }

    /// Dihedral action on flat pairs: generators
    /// `[negate-first, negate-second, swap]`.
    pub fn dihedral_pairs() -> Self {
        GroupActionSpec {
            kind: ActionKind::DihedralPairs,
            generators: vec![
                Generator::new("negate-first", 2, |v| {
                    let (_, a, b) = half(v);
                    let mut out = vm::neg(a);
                    out.extend_from_slice(b);
                    out
                }),
                Generator::new("negate-second", 2, |v| {
                    let (_, a, b) = half(v);
                    let mut out = a.to_vec();
                    out.extend(vm::neg(b));
                    out
                }),
                Generator::new("swap", 2, |v| {
                    let (_, a, b) = half(v);
                    let mut out = b.to_vec();
                    out.extend_from_slice(a);
                    out
                }),
            ],
        }
    }

    /// The dihedral pair action pushed to a target sphere through the swap
    /// projection: `[identity, identity, antipode]`. Pairs generator-for-
    /// generator with [`GroupActionSpec::dihedral_pairs`].
    pub fn through_swap_z2() -> Self {
        GroupActionSpec {
            kind: ActionKind::TrivialThroughZ2,
            generators: vec![
                Generator::new("identity", 1, |v: &[f64]| v.to_vec()),
                Generator::new("identity", 1, |v: &[f64]| v.to_vec()),
                Generator::new("antipode", 2, vm::neg),
            ],
        }
    }

    /// Checks the generator invariants on sampled vectors: unit norm is
    /// preserved within 1e-12, and each generator composed `order` times is
    /// the identity within 1e-9. Returns the largest residual seen.
    pub fn check_generators(&self, samples: &[Vec<f64>]) -> f64 {
        let mut worst = 0.0f64;
        for v in samples {
            for gen in &self.generators {
                let gv = gen.apply(v);
                worst = worst.max((vm::norm(&gv) - vm::norm(v)).abs());
                let mut iter = v.clone();
                for _ in 0..gen.order {
                    iter = gen.apply(&iter);
                }
                worst = worst.max(vm::distance(&iter, v));
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_unit, SampleStream};

    #[test]
    fn generator_relations_hold_on_samples() {
        let stream = SampleStream::new(11);
        let singles: Vec<Vec<f64>> = (0..50)
            .map(|i| sample_unit(&mut stream.rng_for(i), 6).into_coords())
            .collect();
        let pairs: Vec<Vec<f64>> = (0..50)
            .map(|i| {
                let mut rng = stream.rng_for(100 + i);
                let mut v = sample_unit(&mut rng, 3).into_coords();
                v.extend(sample_unit(&mut rng, 3).into_coords());
                v
            })
            .collect();

        assert!(GroupActionSpec::antipodal().check_generators(&singles) < 1e-9);
        for m in 2..=8 {
            assert!(GroupActionSpec::rotation_zm(m).check_generators(&singles) < 1e-9);
        }
        assert!(GroupActionSpec::coordinate_swap().check_generators(&pairs) < 1e-9);
        assert!(GroupActionSpec::dihedral_pairs().check_generators(&pairs) < 1e-9);
        assert!(GroupActionSpec::through_swap_z2().check_generators(&singles) < 1e-9);
    }

    #[test]
    fn pair_norm_convention() {
        // Pair generators act on the concatenation; norm of the flat vector
        // is preserved even though each half is separately unit.
        let v = vec![1.0, 0.0, 0.0, 1.0];
        let swapped = GroupActionSpec::coordinate_swap().generators[0].apply(&v);
        assert_eq!(swapped, vec![0.0, 1.0, 1.0, 0.0]);
    }
}
