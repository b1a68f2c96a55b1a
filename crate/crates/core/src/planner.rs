//! Explicit motion-planning sections and their verification.
//!
//! Two planners are provided:
//!
//! * **Rotation** - on real projective space, driven by a symmetric
//!   nonsingular bilinear map α. The local rule index is the component of α
//!   largest in absolute value at the pair's representatives; representatives
//!   are then oriented so that component is positive, and the line is rotated
//!   to its target along the geodesic arc of their common 2-plane.
//! * **Lift** - on spheres, projective and even-torsion lens spaces: pick
//!   the deck translate of the target closest to the start and normalize the
//!   straight chord between them. For even torsion the two representatives
//!   can never be antipodal (the antipode of a deck translate is again a
//!   deck translate, and equal orbits are excluded), so the chord stays away
//!   from the origin.
//!
//! [`verify_section`] samples random configuration pairs and measures the
//! section properties: exact endpoints, discrete step bounds, plane
//! confinement, swap-reversal symmetry, rule coverage, and a Lipschitz
//! surrogate for continuity inside one planner branch.

use crate::bilinear::BilinearMapSpec;
use crate::error::Error;
use crate::geometry::{
    best_deck_representative, canonicalize, orbit_distance, rep_distance, SpaceDescriptor,
    SpacePoint, UnitVector,
};
use crate::relations::RelationId;
use crate::sampling::{perturb_unit, sample_config_pair, SampleStream};
use crate::vecmath as vm;
use crate::{EPS_SEPARATION, EPS_SINGULAR};
use serde::{Serialize, Serializer};
use std::f64::consts::{FRAC_PI_2, PI};

/// Endpoint residual allowed after canonicalization.
pub const ENDPOINT_TOL: f64 = 1e-12;

/// Allowed ratio between path sup-distance and input perturbation size in
/// the continuity surrogate.
pub const CONTINUITY_RATIO: f64 = 1e3;

/// Perturbation size used by the continuity surrogate.
pub const CONTINUITY_DELTA: f64 = 1e-6;

/// A uniformly sampled path of canonical space points.
#[derive(Debug, Clone, Serialize)]
pub struct DiscretePath {
    pub space: SpaceDescriptor,
    /// Which local rule produced the path, when the planner has rules.
    pub rule_id: Option<usize>,
    #[serde(serialize_with = "serialize_samples")]
    pub samples: Vec<SpacePoint>,
}

fn serialize_samples<S: Serializer>(samples: &[SpacePoint], s: S) -> Result<S::Ok, S::Error> {
    let coords: Vec<&[f64]> = samples.iter().map(|p| p.rep_coords()).collect();
    coords.serialize(s)
}

impl DiscretePath {
    pub fn segment_count(&self) -> usize {
        self.samples.len() - 1
    }

    /// Largest orbit distance between consecutive samples.
    pub fn max_step(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| orbit_distance(self.space, &w[0].rep, &w[1].rep).expect("same space"))
            .fold(0.0, f64::max)
    }
}

/// Reverses a path in place-order; the producing rule is kept.
pub fn reverse(path: &DiscretePath) -> DiscretePath {
    DiscretePath {
        space: path.space,
        rule_id: path.rule_id,
        samples: path.samples.iter().rev().cloned().collect(),
    }
}

/// Which planner to run.
#[derive(Debug, Clone)]
pub enum PlannerKind {
    Rotation(BilinearMapSpec),
    Lift,
}

/// A validated planner instance.
#[derive(Debug, Clone)]
pub struct PlannerSpec {
    pub kind: PlannerKind,
    pub space: SpaceDescriptor,
    /// Number of segments: paths carry `segments + 1` samples.
    pub segments: usize,
}

impl PlannerSpec {
    /// Rotation planner on P^r. The driving map must claim (and should have
    /// passed) both the symmetry and the sign relations, and match the
    /// space's dimension.
    pub fn rotation(
        map: BilinearMapSpec,
        space: SpaceDescriptor,
        segments: usize,
    ) -> Result<Self, Error> {
        let r = match space {
            SpaceDescriptor::RealProjective { r } => r,
            _ => {
                return Err(Error::Unsupported(format!(
                    "rotation planner runs on real projective spaces, not {space}"
                )))
            }
        };
        if !map.claims(RelationId::Sym) || !map.claims(RelationId::Axial2) {
            return Err(Error::Unsupported(format!(
                "rotation planner needs a map claiming SYM and AXIAL2; `{}` claims {:?}",
                map.name,
                map.profile.iter().map(|r| r.label()).collect::<Vec<_>>()
            )));
        }
        if map.domain_dim != r {
            return Err(Error::DimensionMismatch {
                expected: r + 1,
                got: map.domain_dim + 1,
            });
        }
        if segments == 0 {
            return Err(Error::Unsupported("need at least one segment".into()));
        }
        Ok(PlannerSpec {
            kind: PlannerKind::Rotation(map),
            space,
            segments,
        })
    }

    /// Chord-lift planner. Lens spaces must have even torsion: odd torsion
    /// lacks the antipodal guard and is not supported.
    pub fn lift(space: SpaceDescriptor, segments: usize) -> Result<Self, Error> {
        match space {
            SpaceDescriptor::Sphere { .. } | SpaceDescriptor::RealProjective { .. } => {}
            SpaceDescriptor::Lens { m, .. } => {
                if m % 2 != 0 {
                    return Err(Error::Unsupported(format!(
                        "lift planner needs even torsion, got m = {m}"
                    )));
                }
            }
            SpaceDescriptor::ComplexProjective { .. } => {
                return Err(Error::Unsupported(
                    "lift planner is not defined on complex projective spaces".into(),
                ))
            }
        }
        if segments == 0 {
            return Err(Error::Unsupported("need at least one segment".into()));
        }
        Ok(PlannerSpec {
            kind: PlannerKind::Lift,
            space,
            segments,
        })
    }

    pub fn name(&self) -> String {
        match &self.kind {
            PlannerKind::Rotation(map) => format!("rotation[{}]", map.name),
            PlannerKind::Lift => "lift".to_string(),
        }
    }

    /// Plans a path between two points of the planner's space.
    pub fn plan(&self, from: &SpacePoint, to: &SpacePoint) -> Result<DiscretePath, Error> {
        match &self.kind {
            PlannerKind::Rotation(map) => rotation_plan(map, self.space, self.segments, from, to),
            PlannerKind::Lift => lift_plan(self.space, self.segments, from, to),
        }
    }
}

fn check_pair(space: SpaceDescriptor, from: &SpacePoint, to: &SpacePoint) -> Result<f64, Error> {
    if from.space != space || to.space != space {
        return Err(Error::Unsupported(format!(
            "planner space {space} does not match the pair ({}, {})",
            from.space, to.space
        )));
    }
    let sep = orbit_distance(space, &from.rep, &to.rep)?;
    if sep <= EPS_SEPARATION {
        return Err(Error::DiagonalPair { separation: sep });
    }
    Ok(sep)
}

/// Picks the local rule for a projective pair: the 1-based component index
/// maximizing |α_i| at the canonical representatives (ties to the smallest
/// index), with the representatives re-signed so that component is positive.
/// Of the two valid sign choices the one keeping the first representative
/// canonical is returned; both orient the pair's 2-plane identically.
pub fn select_rule(
    map: &BilinearMapSpec,
    from: &SpacePoint,
    to: &SpacePoint,
) -> Result<(usize, UnitVector, UnitVector), Error> {
    let value = map.eval(from.rep_coords(), to.rep_coords());
    let mut best = 0usize;
    for (k, v) in value.iter().enumerate() {
        if v.abs() > value[best].abs() {
            best = k;
        }
    }
    if value[best].abs() <= EPS_SINGULAR {
        return Err(Error::NoRuleFound {
            threshold: EPS_SINGULAR,
        });
    }
    let l1 = from.rep.clone();
    let l2 = if value[best] > 0.0 {
        to.rep.clone()
    } else {
        to.rep.antipode()
    };
    Ok((best + 1, l1, l2))
}

/// Oriented rotation data for a projective pair: rule index, start and end
/// representatives re-signed to a nonnegative inner product, the orthonormal
/// in-plane direction, and the rotation angle θ ∈ (0, π/2].
fn rotation_frame(
    map: &BilinearMapSpec,
    from: &SpacePoint,
    to: &SpacePoint,
) -> Result<(usize, UnitVector, UnitVector, UnitVector, f64), Error> {
    let (rule, l1, mut l2) = select_rule(map, from, to)?;
    let mut c = l1.dot(&l2);
    if c < 0.0 {
        l2 = l2.antipode();
        c = -c;
    }
    let theta = c.clamp(-1.0, 1.0).acos();
    let perp = UnitVector::normalized(&vm::axpy(l2.coords(), -c, l1.coords()))?;
    Ok((rule, l1, l2, perp, theta))
}

/// Rotates the first line to the second inside their common 2-plane,
/// sampling `segments + 1` projective points at uniform angle steps.
pub fn rotation_plan(
    map: &BilinearMapSpec,
    space: SpaceDescriptor,
    segments: usize,
    from: &SpacePoint,
    to: &SpacePoint,
) -> Result<DiscretePath, Error> {
    check_pair(space, from, to)?;
    let (rule, l1, l2, perp, theta) = rotation_frame(map, from, to)?;
    let mut samples = Vec::with_capacity(segments + 1);
    samples.push(canonicalize(space, l1.clone())?);
    for k in 1..segments {
        let phi = theta * (k as f64) / (segments as f64);
        let v = vm::axpy(&vm::scale(l1.coords(), phi.cos()), phi.sin(), perp.coords());
        samples.push(canonicalize(space, UnitVector::normalized(&v)?)?);
    }
    samples.push(canonicalize(space, l2)?);
    Ok(DiscretePath {
        space,
        rule_id: Some(rule),
        samples,
    })
}

/// Normalized-chord path: picks the deck translate of the target best
/// aligned with the start (ties to the smallest deck index) and samples
/// ν(t·x₂ + (1−t)·x₁).
pub fn lift_plan(
    space: SpaceDescriptor,
    segments: usize,
    from: &SpacePoint,
    to: &SpacePoint,
) -> Result<DiscretePath, Error> {
    check_pair(space, from, to)?;
    let x1 = from.rep.clone();
    let (_, x2) = best_deck_representative(space, x1.coords(), to.rep_coords());
    let mut samples = Vec::with_capacity(segments + 1);
    samples.push(canonicalize(space, x1.clone())?);
    for k in 1..segments {
        let t = (k as f64) / (segments as f64);
        let chord = vm::axpy(&vm::scale(&x2, t), 1.0 - t, x1.coords());
        samples.push(canonicalize(space, UnitVector::normalized(&chord)?)?);
    }
    samples.push(canonicalize(space, UnitVector::normalized(&x2)?)?);
    Ok(DiscretePath {
        space,
        rule_id: None,
        samples,
    })
}

/// Planner branch signature used by the continuity surrogate: perturbations
/// are compared only when they stay inside the same analytic branch.
fn branch_signature(
    planner: &PlannerSpec,
    from: &SpacePoint,
    to: &SpacePoint,
) -> Option<(usize, bool)> {
    match &planner.kind {
        PlannerKind::Rotation(map) => {
            let (rule, l1, l2) = select_rule(map, from, to).ok()?;
            Some((rule, l1.dot(&l2) >= 0.0))
        }
        PlannerKind::Lift => {
            let (j, _) =
                best_deck_representative(planner.space, from.rep_coords(), to.rep_coords());
            Some((j, true))
        }
    }
}

/// Aggregated section-property measurements for one planner.
#[derive(Debug, Clone, Serialize)]
pub struct SectionReport {
    pub planner: String,
    pub space: SpaceDescriptor,
    pub pairs: usize,
    pub segments: usize,
    pub seed: u64,
    pub tol: f64,
    /// Deck-minimized Euclidean residual at both endpoints (bound 1e-12).
    pub max_endpoint_residual: f64,
    /// Largest angular step between consecutive samples.
    pub max_step: f64,
    /// Analytic step bound for this planner and sample count.
    pub step_bound: f64,
    /// Pointwise residual between plan(b, a) and the reversal of plan(a, b).
    pub max_swap_residual: f64,
    /// Out-of-plane component of rotation samples (0 for lift planners).
    pub max_plane_residual: f64,
    /// sup-distance of the perturbed path divided by the perturbation size.
    pub max_continuity_ratio: f64,
    /// Perturbed pairs that left the planner branch and were not compared.
    pub continuity_skipped: usize,
    /// Pairs with no applicable rule (nonsingularity violations).
    pub coverage_failures: usize,
    /// Pairs whose chord passed through the origin.
    pub singular_failures: usize,
    pub pass: bool,
}

/// Runs the section-property suite on seeded random configuration pairs.
pub fn verify_section(
    planner: &PlannerSpec,
    pairs: usize,
    seed: u64,
    tol: f64,
) -> Result<SectionReport, Error> {
    let space = planner.space;
    let n = planner.segments as f64;
    let mut report = SectionReport {
        planner: planner.name(),
        space,
        pairs,
        segments: planner.segments,
        seed,
        tol,
        max_endpoint_residual: 0.0,
        max_step: 0.0,
        step_bound: match planner.kind {
            PlannerKind::Rotation(_) => FRAC_PI_2 / n + 1e-9,
            PlannerKind::Lift => 1e-9, // grows with the observed worst pair below
        },
        max_swap_residual: 0.0,
        max_plane_residual: 0.0,
        max_continuity_ratio: 0.0,
        continuity_skipped: 0,
        coverage_failures: 0,
        singular_failures: 0,
        pass: false,
    };
    let stream = SampleStream::new(seed);
    for i in 0..pairs {
        let mut rng = stream.rng_for(i as u64);
        let (x, y) = sample_config_pair(&mut rng, space);
        let from = canonicalize(space, x)?;
        let to = canonicalize(space, y)?;

        let path = match planner.plan(&from, &to) {
            Ok(p) => p,
            Err(Error::NoRuleFound { .. }) => {
                report.coverage_failures += 1;
                continue;
            }
            Err(Error::NearZeroVector { .. }) => {
                report.singular_failures += 1;
                continue;
            }
            Err(e) => return Err(e),
        };

        let last = path.samples.len() - 1;
        let endpoint = rep_distance(space, path.samples[0].rep_coords(), from.rep_coords()).max(
            rep_distance(space, path.samples[last].rep_coords(), to.rep_coords()),
        );
        report.max_endpoint_residual = report.max_endpoint_residual.max(endpoint);
        report.max_step = report.max_step.max(path.max_step());

        match &planner.kind {
            PlannerKind::Rotation(map) => {
                let (_, l1, _, perp, _) = rotation_frame(map, &from, &to)?;
                for p in &path.samples {
                    let c = p.rep_coords();
                    let in_plane = vm::add(
                        &vm::scale(l1.coords(), vm::dot(c, l1.coords())),
                        &vm::scale(perp.coords(), vm::dot(c, perp.coords())),
                    );
                    report.max_plane_residual =
                        report.max_plane_residual.max(vm::distance(c, &in_plane));
                }
            }
            PlannerKind::Lift => {
                let (_, x2) = best_deck_representative(space, from.rep_coords(), to.rep_coords());
                let theta = vm::dot(from.rep_coords(), &x2).clamp(-1.0, 1.0).acos();
                report.step_bound = report.step_bound.max(2.0 * (theta / 2.0).tan() / n + 1e-9);
            }
        }

        // Swap-reversal: plan(to, from) against the reversal of plan(from, to).
        if let Ok(swapped) = planner.plan(&to, &from) {
            let rev = reverse(&swapped);
            let worst = path
                .samples
                .iter()
                .zip(&rev.samples)
                .map(|(a, b)| rep_distance(space, a.rep_coords(), b.rep_coords()))
                .fold(0.0, f64::max);
            report.max_swap_residual = report.max_swap_residual.max(worst);
        }

        // Continuity surrogate inside one planner branch, evaluated away
        // from the planner's singular locus (separation at least 0.1; on
        // spheres also at least 0.1 short of antipodal), where the section
        // is Lipschitz with a modest constant.
        let sep = orbit_distance(space, &from.rep, &to.rep)?;
        let near_singular =
            sep < 0.1 || matches!(space, SpaceDescriptor::Sphere { .. }) && sep > PI - 0.1;
        if near_singular {
            report.continuity_skipped += 1;
            continue;
        }
        let sig = branch_signature(planner, &from, &to);
        let xp = perturb_unit(&mut rng, &from.rep, CONTINUITY_DELTA);
        let yp = perturb_unit(&mut rng, &to.rep, CONTINUITY_DELTA);
        if let (Ok(from_p), Ok(to_p)) = (canonicalize(space, xp), canonicalize(space, yp)) {
            if orbit_distance(space, &from_p.rep, &to_p.rep)? > EPS_SEPARATION
                && branch_signature(planner, &from_p, &to_p) == sig
            {
                if let Ok(path_p) = planner.plan(&from_p, &to_p) {
                    let sup = path
                        .samples
                        .iter()
                        .zip(&path_p.samples)
                        .map(|(a, b)| rep_distance(space, a.rep_coords(), b.rep_coords()))
                        .fold(0.0, f64::max);
                    report.max_continuity_ratio =
                        report.max_continuity_ratio.max(sup / CONTINUITY_DELTA);
                } else {
                    report.continuity_skipped += 1;
                }
            } else {
                report.continuity_skipped += 1;
            }
        }
    }

    report.pass = report.max_endpoint_residual <= ENDPOINT_TOL
        && report.max_step <= report.step_bound
        && report.max_swap_residual <= tol
        && report.max_plane_residual <= tol
        && report.max_continuity_ratio <= CONTINUITY_RATIO
        && report.coverage_failures == 0
        && report.singular_failures == 0;
    Ok(report)
}
