//! Composed verification suites: the fixed batteries of checks behind the
//! CLI `verify` command and the acceptance harness.
//!
//! Every suite is seeded and deterministic; each report carries its own
//! tolerance, so one suite can mix machine-precision checks (endpoints,
//! antisymmetry) with sampling-precision checks.

use crate::bilinear::{builtin_bilinear, sphere_map, BilinearMapSpec, BuiltinKind};
use crate::embedding::{haefliger_map, EmbeddingSpec};
use crate::error::Error;
use crate::geometry::{
    canonicalize, make_pair_config, orbit_distance, rep_distance, SpaceDescriptor, UnitVector,
};
use crate::pair_maps::{
    exchange_orbit_distance, frame_retraction, sign_orbit_distance, sum_diff_split,
};
use crate::planner::{verify_section, PlannerSpec, SectionReport};
use crate::relations::{check_bilinearity, check_relations};
use crate::report::VerificationReport;
use crate::sampling::{perturb_unit, sample_frame, sample_unit, sample_unit_pair, SampleStream};
use crate::vecmath as vm;
use serde::Serialize;

/// Shared knobs for a suite run.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SuiteConfig {
    /// Sample count for pointwise relation checks.
    pub samples: usize,
    /// Pair count for planner section checks.
    pub pairs: usize,
    /// Path segments used by planner checks.
    pub segments: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: 10_000,
            pairs: 1_000,
            segments: 64,
            seed: 0,
            tol: crate::DEFAULT_TOL,
        }
    }
}

/// Everything a full run produces.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
    pub sections: Vec<SectionReport>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass) && self.sections.iter().all(|s| s.pass)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.reports.extend(other.reports);
        self.sections.extend(other.sections);
    }

    pub fn empty() -> Self {
        SuiteReport {
            reports: Vec::new(),
            sections: Vec::new(),
        }
    }
}

/// Checks bilinearity plus every relation in the map's claimed profile.
pub fn relation_suite(
    spec: &BilinearMapSpec,
    cfg: &SuiteConfig,
) -> Result<Vec<VerificationReport>, Error> {
    let mut reports = vec![check_bilinearity(spec, cfg.samples, cfg.seed, cfg.tol)];
    for rel in spec.profile.iter() {
        reports.push(check_relations(spec, *rel, cfg.samples, cfg.seed, cfg.tol)?);
    }
    Ok(reports)
}

/// The relation-exchange battery for the sum/difference split on S^r pairs.
///
/// Forward: the images of the exchange identifications (−x,−y) ~ (x,y) ~
/// (y,x) are equivalent under per-factor sign flips. Reverse: the images of
/// the per-factor sign identifications are equivalent under the exchange
/// identifications.
pub fn pair_exchange_suite(r: usize, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let name = format!("sum-diff-split:r={r}");
    let mut forward = VerificationReport::new(
        &name,
        "exchange-relations-to-sign-relations",
        cfg.samples,
        cfg.seed,
        cfg.tol,
    );
    let mut reverse = VerificationReport::new(
        &name,
        "sign-relations-to-exchange-relations",
        cfg.samples,
        cfg.seed,
        cfg.tol,
    );
    let stream = SampleStream::new(cfg.seed);
    for i in 0..cfg.samples {
        let mut rng = stream.rng_for(i as u64);
        let (x, y) = sample_unit_pair(&mut rng, r + 1);
        let Ok((a, b)) = sum_diff_split(&x, &y) else {
            continue;
        };
        let inputs: &[&[f64]] = &[x.coords(), y.coords()];

        let mut worst_fwd = 0.0f64;
        for (gx, gy) in [(x.antipode(), y.antipode()), (y.clone(), x.clone())] {
            if let Ok((ga, gb)) = sum_diff_split(&gx, &gy) {
                worst_fwd = worst_fwd.max(sign_orbit_distance(&ga, &gb, &a, &b));
            }
        }
        forward.record(worst_fwd, inputs);

        let mut worst_rev = 0.0f64;
        for (gx, gy) in [(x.antipode(), y.clone()), (x.clone(), y.antipode())] {
            if let Ok((ga, gb)) = sum_diff_split(&gx, &gy) {
                worst_rev = worst_rev.max(exchange_orbit_distance(&ga, &gb, &a, &b));
            }
        }
        reverse.record(worst_rev, inputs);
    }
    vec![forward, reverse]
}

const RETRACTION_TIME_STEPS: usize = 11;

fn time_grid() -> impl Iterator<Item = f64> {
    (0..RETRACTION_TIME_STEPS).map(|k| k as f64 / (RETRACTION_TIME_STEPS - 1) as f64)
}

/// The retraction battery on S^r pairs with |<u1,u2>| ≤ 1 − 1e-6: identity
/// at time zero (machine precision), orthonormality at time one, pointwise
/// fixing of frames, the three dihedral equivariances on the full time grid,
/// and a Lipschitz continuity surrogate away from the degenerate locus.
pub fn retraction_suite(r: usize, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let name = format!("frame-retraction:r={r}");
    let report = |relation: &str, tol: f64| {
        VerificationReport::new(&name, relation, cfg.samples, cfg.seed, tol)
    };
    let mut identity_at_zero = report("identity-at-time-zero", 1e-12);
    let mut frame_at_one = report("orthonormal-at-time-one", cfg.tol);
    let mut frames_fixed = report("frames-fixed-pointwise", cfg.tol);
    let mut equi_diagonal = report("equivariance-diagonal-antipode", cfg.tol);
    let mut equi_swap = report("equivariance-swap", cfg.tol);
    let mut equi_factor = report("equivariance-factor-antipode", cfg.tol);
    let mut continuity = report("lipschitz-surrogate", 1e-3);

    let stream = SampleStream::new(cfg.seed);
    let delta = 1e-6;
    for i in 0..cfg.samples {
        let mut rng = stream.rng_for(i as u64);
        let (x, y) = loop {
            let (x, y) = sample_unit_pair(&mut rng, r + 1);
            if x.dot(&y).abs() <= 1.0 - 1e-6 {
                break (x, y);
            }
        };
        let inputs: &[&[f64]] = &[x.coords(), y.coords()];

        let Ok((h0a, h0b)) = frame_retraction(&x, &y, 0.0) else {
            continue;
        };
        identity_at_zero.record(
            vm::distance(h0a.coords(), x.coords()).max(vm::distance(h0b.coords(), y.coords())),
            inputs,
        );

        let (h1a, h1b) = frame_retraction(&x, &y, 1.0).expect("nondegenerate pair");
        let frame_residual = h1a
            .dot(&h1b)
            .abs()
            .max((vm::norm(h1a.coords()) - 1.0).abs())
            .max((vm::norm(h1b.coords()) - 1.0).abs());
        frame_at_one.record(frame_residual, inputs);

        let (f1, f2) = sample_frame(&mut rng, r + 1);
        for t in time_grid() {
            let (ha, hb) = frame_retraction(&x, &y, t).expect("nondegenerate pair");

            let (ga, gb) = frame_retraction(&f1, &f2, t).expect("frames are nondegenerate");
            frames_fixed.record(
                vm::distance(ga.coords(), f1.coords()).max(vm::distance(gb.coords(), f2.coords())),
                &[f1.coords(), f2.coords()],
            );

            let (da, db) = frame_retraction(&x.antipode(), &y.antipode(), t).expect("same locus");
            equi_diagonal.record(
                vm::distance(da.coords(), &vm::neg(ha.coords()))
                    .max(vm::distance(db.coords(), &vm::neg(hb.coords()))),
                inputs,
            );

            let (sa, sb) = frame_retraction(&y, &x, t).expect("same locus");
            equi_swap.record(
                vm::distance(sa.coords(), hb.coords()).max(vm::distance(sb.coords(), ha.coords())),
                inputs,
            );

            let (fa, fb) = frame_retraction(&x.antipode(), &y, t).expect("same locus");
            equi_factor.record(
                vm::distance(fa.coords(), &vm::neg(ha.coords()))
                    .max(vm::distance(fb.coords(), hb.coords())),
                inputs,
            );
        }

        // Continuity surrogate: perturbations of size 1e-6 at separation at
        // least 0.1 from the degenerate locus move the output, at every
        // retraction time, by at most 1e3 times the perturbation.
        if x.dot(&y).abs() <= (0.1f64).cos() {
            let xp = perturb_unit(&mut rng, &x, delta);
            let yp = perturb_unit(&mut rng, &y, delta);
            for t in time_grid() {
                if let (Ok((pa, pb)), Ok((ha, hb))) =
                    (frame_retraction(&xp, &yp, t), frame_retraction(&x, &y, t))
                {
                    let sup = vm::distance(pa.coords(), ha.coords())
                        .max(vm::distance(pb.coords(), hb.coords()));
                    continuity.record(sup, inputs);
                }
            }
        }
    }
    vec![
        identity_at_zero,
        frame_at_one,
        frames_fixed,
        equi_diagonal,
        equi_swap,
        equi_factor,
        continuity,
    ]
}

/// The embedding battery for a symmetric map: representative-sign
/// independence, descent of the induced sphere map to projective images,
/// the sampled injectivity surrogate with its minimum image separation, and
/// exact antisymmetry of the difference map.
pub fn hopf_suite(
    spec: &BilinearMapSpec,
    cfg: &SuiteConfig,
) -> Result<Vec<VerificationReport>, Error> {
    let r = spec.domain_dim;
    let space = SpaceDescriptor::RealProjective { r };
    let target_space = SpaceDescriptor::RealProjective {
        r: spec.target_sphere_dim(),
    };
    let embedding = EmbeddingSpec::hopf(spec.clone())?;
    let name = embedding.name.clone();
    let mut sign_independence = VerificationReport::new(
        &name,
        "representative-sign-independence",
        cfg.samples,
        cfg.seed,
        cfg.tol,
    );
    let mut descends = VerificationReport::new(
        &spec.name,
        "projective-descent",
        cfg.samples,
        cfg.seed,
        cfg.tol,
    );
    let mut injective = VerificationReport::new(
        &name,
        "injectivity-surrogate",
        cfg.samples,
        cfg.seed,
        cfg.tol,
    );
    let mut antisymmetry =
        VerificationReport::new(&name, "difference-antisymmetry", cfg.samples, cfg.seed, 0.0);

    let stream = SampleStream::new(cfg.seed);
    let mut min_image = f64::INFINITY;
    for i in 0..cfg.samples {
        let mut rng = stream.rng_for(i as u64);
        let x = sample_unit(&mut rng, r + 1);

        let plus = UnitVector::normalized(&spec.eval(x.coords(), x.coords()))?;
        let nx = x.antipode();
        let minus = UnitVector::normalized(&spec.eval(nx.coords(), nx.coords()))?;
        sign_independence.record(vm::distance(plus.coords(), minus.coords()), &[x.coords()]);

        // The induced sphere map sends (−x, y) and (x, y) to the same
        // projective image.
        let y = sample_unit(&mut rng, r + 1);
        let a = sphere_map(spec, &x, &y)?;
        let b = sphere_map(spec, &nx, &y)?;
        descends.record(
            rep_distance(target_space, a.coords(), b.coords()),
            &[x.coords(), y.coords()],
        );

        // Injectivity surrogate over well-separated pairs.
        let (p, q) = loop {
            let (p, q) = sample_unit_pair(&mut rng, r + 1);
            if orbit_distance(space, &p, &q)? >= 0.1 {
                break (p, q);
            }
        };
        let pa = embedding.eval(&canonicalize(space, p.clone())?)?;
        let qa = embedding.eval(&canonicalize(space, q.clone())?)?;
        let image_distance = vm::distance(pa.coords(), qa.coords());
        if image_distance < min_image {
            min_image = image_distance;
            injective.worst_input = vec![p.coords().to_vec(), q.coords().to_vec()];
        }

        // Exact swap antisymmetry of the difference map.
        if let Ok(pair) = make_pair_config(space, p, q) {
            let h_ab = haefliger_map(&embedding, &pair)?;
            let h_ba = haefliger_map(&embedding, &pair.swapped())?;
            let exact = h_ab
                .coords()
                .iter()
                .zip(h_ba.coords())
                .all(|(u, v)| *u == -v);
            antisymmetry.record(
                if exact {
                    0.0
                } else {
                    vm::distance(h_ab.coords(), &vm::neg(h_ba.coords()))
                },
                &[pair.first.coords(), pair.second.coords()],
            );
        }
    }
    injective.min_image_distance = Some(min_image);
    injective.pass = injective.pass && min_image > 0.0;
    Ok(vec![sign_independence, descends, injective, antisymmetry])
}

/// Planner batteries: the rotation planner with the shipped symmetric maps
/// and the chord lift on even-torsion lens spaces.
pub fn planner_suite(cfg: &SuiteConfig) -> Result<Vec<SectionReport>, Error> {
    let mut sections = Vec::new();
    // Rotation: complex on the projective line, polynomial families beyond.
    let rotation_specs: Vec<BilinearMapSpec> =
        std::iter::once(builtin_bilinear(BuiltinKind::Complex))
            .chain((2..=6).map(|r| builtin_bilinear(BuiltinKind::PolynomialMult { r })))
            .collect::<Result<_, _>>()?;
    for map in rotation_specs {
        let space = SpaceDescriptor::RealProjective { r: map.domain_dim };
        let planner = PlannerSpec::rotation(map, space, cfg.segments)?;
        sections.push(verify_section(&planner, cfg.pairs, cfg.seed, cfg.tol)?);
    }
    // Lift: lens spaces of every even torsion up to 8, n up to 3.
    for n in 0..=3 {
        for m in [2, 4, 6, 8] {
            let planner = PlannerSpec::lift(SpaceDescriptor::Lens { n, m }, cfg.segments)?;
            sections.push(verify_section(&planner, cfg.pairs, cfg.seed, cfg.tol)?);
        }
    }
    Ok(sections)
}

/// The whole battery in a fixed order. Used by `verify --target all` and by
/// the determinism check (two runs with one seed must serialize identically).
pub fn full_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let mut suite = SuiteReport::empty();

    let mut relation_specs: Vec<BilinearMapSpec> = vec![
        builtin_bilinear(BuiltinKind::Complex)?,
        builtin_bilinear(BuiltinKind::Quaternion)?,
        builtin_bilinear(BuiltinKind::Octonion)?,
    ];
    for r in 1..=6 {
        relation_specs.push(builtin_bilinear(BuiltinKind::PolynomialMult { r })?);
    }
    for m in [2, 4, 6, 8] {
        relation_specs.push(builtin_bilinear(BuiltinKind::LensBiequivariant {
            n: 1,
            m,
        })?);
    }
    for spec in &relation_specs {
        suite.reports.extend(relation_suite(spec, cfg)?);
    }

    for r in 1..=8 {
        suite.reports.extend(pair_exchange_suite(r, cfg));
    }
    let retraction_cfg = SuiteConfig {
        samples: cfg.samples.div_euclid(10).max(1),
        ..*cfg
    };
    for r in 1..=8 {
        suite.reports.extend(retraction_suite(r, &retraction_cfg));
    }

    let mut hopf_specs = vec![builtin_bilinear(BuiltinKind::Complex)?];
    for r in 1..=4 {
        hopf_specs.push(builtin_bilinear(BuiltinKind::PolynomialMult { r })?);
    }
    for spec in &hopf_specs {
        suite.reports.extend(hopf_suite(spec, cfg)?);
    }

    suite.sections = planner_suite(cfg)?;
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            samples: 300,
            pairs: 60,
            segments: 32,
            seed: 0,
            tol: 1e-9,
        }
    }

    #[test]
    fn exchange_suite_passes_small() {
        for r in [1, 4] {
            for report in pair_exchange_suite(r, &small()) {
                assert!(report.pass, "{}: {}", report.relation, report.max_residual);
            }
        }
    }

    #[test]
    fn retraction_suite_passes_small() {
        for report in retraction_suite(3, &small()) {
            assert!(report.pass, "{}: {}", report.relation, report.max_residual);
        }
    }

    #[test]
    fn hopf_suite_passes_small() {
        let spec = builtin_bilinear(BuiltinKind::PolynomialMult { r: 2 }).unwrap();
        let reports = hopf_suite(&spec, &small()).unwrap();
        for report in &reports {
            assert!(report.pass, "{}: {}", report.relation, report.max_residual);
        }
        let injective = reports
            .iter()
            .find(|r| r.relation == "injectivity-surrogate")
            .unwrap();
        assert!(injective.min_image_distance.unwrap() > 0.0);
    }

    #[test]
    fn full_suite_is_deterministic_small() {
        let cfg = SuiteConfig {
            samples: 60,
            pairs: 12,
            segments: 16,
            seed: 3,
            tol: 1e-9,
        };
        let a = serde_json::to_string(&full_suite(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&full_suite(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
