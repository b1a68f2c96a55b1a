//! The defining relation sets of sphere-level bilinear maps, checked by
//! seeded sampling.
//!
//! Each relation set is a finite list of generator equations on the
//! normalized map α̃ = ν∘α. Writing ω for the primitive m-th root of unity
//! acting coordinatewise on interleaved complex coordinates:
//!
//! * `SYM`     - α̃(x,y) = α̃(y,x)
//! * `AXIAL2`  - −α̃(x,y) = α̃(−x,y) and −α̃(x,y) = α̃(x,−y)
//! * `BIEQ_E`  - α̃(ωx,y) = α̃(x,ωy) and α̃(−x,y) = −α̃(x,y)
//! * `TCE`     - α̃(ωx,y) = ω·α̃(x,y) and ω·α̃(x,y) = α̃(x,ω⁻¹y)
//! * `EMB`     - α̃(ωx,y) = α̃(x,y) = α̃(x,ωy) and α̃(x,y) = −α̃(y,x)
//!
//! For `TCE`/`EMB` on maps carrying a torsion, sample pairs are drawn from
//! the orbit configuration space only (distinct ℤ/m-orbits).

use crate::bilinear::BilinearMapSpec;
use crate::error::Error;
use crate::geometry::{SpaceDescriptor, UnitVector};
use crate::report::VerificationReport;
use crate::sampling::{sample_config_pair, sample_unit_pair, SampleStream};
use crate::vecmath as vm;
use serde::{Deserialize, Serialize};

/// Identifier of a relation set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, Hash)]
pub enum RelationId {
    #[serde(rename = "SYM")]
    Sym,
    #[serde(rename = "AXIAL2")]
    Axial2,
    #[serde(rename = "BIEQ_E")]
    BieqE,
    #[serde(rename = "TCE")]
    Tce,
    #[serde(rename = "EMB")]
    Emb,
}

impl RelationId {
    pub fn label(&self) -> &'static str {
        match self {
            RelationId::Sym => "SYM",
            RelationId::Axial2 => "AXIAL2",
            RelationId::BieqE => "BIEQ_E",
            RelationId::Tce => "TCE",
            RelationId::Emb => "EMB",
        }
    }

    /// Whether the relation's equations involve the ω scalar, and therefore
    /// need a torsion parameter and complex coordinates.
    pub fn needs_torsion(&self) -> bool {
        matches!(self, RelationId::BieqE | RelationId::Tce | RelationId::Emb)
    }

    /// Whether samples must come from the orbit configuration space.
    pub fn samples_config_space(&self) -> bool {
        matches!(self, RelationId::Tce | RelationId::Emb)
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "SYM" => Ok(RelationId::Sym),
            "AXIAL2" => Ok(RelationId::Axial2),
            "BIEQ_E" => Ok(RelationId::BieqE),
            "TCE" => Ok(RelationId::Tce),
            "EMB" => Ok(RelationId::Emb),
            _ => Err(Error::Parse(format!("unknown relation `{s}`"))),
        }
    }
}

/// Normalized evaluation; a vanishing α is recorded as an infinite residual
/// by the caller.
fn tilde(spec: &BilinearMapSpec, x: &[f64], y: &[f64]) -> Result<Vec<f64>, Error> {
    let raw = spec.eval(x, y);
    Ok(UnitVector::normalized(&raw)?.into_coords())
}

/// LHS/RHS value pairs of a relation set's generator equations.
type EquationSides = Vec<(Vec<f64>, Vec<f64>)>;

/// LHS/RHS pairs of one relation set at one sample point.
fn equation_sides(
    spec: &BilinearMapSpec,
    rel: RelationId,
    x: &[f64],
    y: &[f64],
) -> Result<EquationSides, Error> {
    let at = |a: &[f64], b: &[f64]| tilde(spec, a, b);
    let base = at(x, y)?;
    match rel {
        RelationId::Sym => Ok(vec![(base, at(y, x)?)]),
        RelationId::Axial2 => {
            let minus = vm::neg(&base);
            Ok(vec![
                (minus.clone(), at(&vm::neg(x), y)?),
                (minus, at(x, &vm::neg(y))?),
            ])
        }
        RelationId::BieqE => {
            let m = require_torsion(spec, rel)?;
            let (re, im) = vm::root_of_unity(m, 1);
            let wx = vm::cplx_scalar_mul(re, im, x);
            let wy = vm::cplx_scalar_mul(re, im, y);
            Ok(vec![
                (at(&wx, y)?, at(x, &wy)?),
                (at(&vm::neg(x), y)?, vm::neg(&base)),
            ])
        }
        RelationId::Tce => {
            let m = require_torsion(spec, rel)?;
            let (re, im) = vm::root_of_unity(m, 1);
            let wx = vm::cplx_scalar_mul(re, im, x);
            let winv_y = vm::cplx_scalar_mul(re, -im, y);
            let scaled = vm::cplx_scalar_mul(re, im, &base);
            Ok(vec![
                (at(&wx, y)?, scaled.clone()),
                (scaled, at(x, &winv_y)?),
            ])
        }
        RelationId::Emb => {
            let m = require_torsion(spec, rel)?;
            let (re, im) = vm::root_of_unity(m, 1);
            let wx = vm::cplx_scalar_mul(re, im, x);
            let wy = vm::cplx_scalar_mul(re, im, y);
            Ok(vec![
                (at(&wx, y)?, base.clone()),
                (base.clone(), at(x, &wy)?),
                (base, vm::neg(&at(y, x)?)),
            ])
        }
    }
}

fn require_torsion(spec: &BilinearMapSpec, rel: RelationId) -> Result<usize, Error> {
    match spec.torsion {
        Some(m) => {
            if !(spec.domain_dim + 1).is_multiple_of(2) {
                return Err(Error::DimensionMismatch {
                    expected: spec.domain_dim + 2,
                    got: spec.domain_dim + 1,
                });
            }
            Ok(m)
        }
        None => Err(Error::Unsupported(format!(
            "relation {} needs a torsion parameter, and map `{}` carries none",
            rel.label(),
            spec.name
        ))),
    }
}

/// Checks every generator equation of `rel` on `samples` seeded pseudo-random
/// unit pairs. Relation failures are reported in the result, never thrown;
/// only contract violations (missing torsion, odd ambient for ω) error out.
pub fn check_relations(
    spec: &BilinearMapSpec,
    rel: RelationId,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport, Error> {
    if rel.needs_torsion() {
        require_torsion(spec, rel)?;
    }
    let mut report = VerificationReport::new(&spec.name, rel.label(), samples, seed, tol);
    let stream = SampleStream::new(seed);
    let ambient = spec.domain_dim + 1;
    let config_space = rel.samples_config_space().then(|| {
        spec.torsion
            .filter(|&m| m >= 2)
            .map(|m| SpaceDescriptor::Lens {
                n: spec.domain_dim / 2,
                m,
            })
    });
    for i in 0..samples {
        let mut rng = stream.rng_for(i as u64);
        let (x, y) = match config_space {
            Some(Some(space)) => sample_config_pair(&mut rng, space),
            _ => sample_unit_pair(&mut rng, ambient),
        };
        match equation_sides(spec, rel, x.coords(), y.coords()) {
            Ok(sides) => {
                let residual = sides
                    .iter()
                    .map(|(l, r)| vm::distance(l, r))
                    .fold(0.0, f64::max);
                report.record(residual, &[x.coords(), y.coords()]);
            }
            Err(Error::NearZeroVector { .. }) => {
                // Nonsingularity violation at this sample.
                report.record(f64::INFINITY, &[x.coords(), y.coords()]);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Checks real-bilinearity of α on seeded samples: α(ax + bx', y) =
/// a·α(x,y) + b·α(x',y), and the same in the second slot.
pub fn check_bilinearity(
    spec: &BilinearMapSpec,
    samples: usize,
    seed: u64,
    tol: f64,
) -> VerificationReport {
    let mut report = VerificationReport::new(&spec.name, "bilinearity", samples, seed, tol);
    let stream = SampleStream::new(seed);
    let ambient = spec.domain_dim + 1;
    for i in 0..samples {
        let mut rng = stream.rng_for(i as u64);
        let (x, xp) = sample_unit_pair(&mut rng, ambient);
        let (y, yp) = sample_unit_pair(&mut rng, ambient);
        use rand::Rng;
        let a: f64 = rng.random_range(-2.0..2.0);
        let b: f64 = rng.random_range(-2.0..2.0);
        let combo: Vec<f64> = x
            .coords()
            .iter()
            .zip(xp.coords())
            .map(|(u, v)| a * u + b * v)
            .collect();
        let lhs1 = spec.eval(&combo, y.coords());
        let rhs1 = vm::add(
            &vm::scale(&spec.eval(x.coords(), y.coords()), a),
            &vm::scale(&spec.eval(xp.coords(), y.coords()), b),
        );
        let combo2: Vec<f64> = y
            .coords()
            .iter()
            .zip(yp.coords())
            .map(|(u, v)| a * u + b * v)
            .collect();
        let lhs2 = spec.eval(x.coords(), &combo2);
        let rhs2 = vm::add(
            &vm::scale(&spec.eval(x.coords(), y.coords()), a),
            &vm::scale(&spec.eval(x.coords(), yp.coords()), b),
        );
        let residual = vm::distance(&lhs1, &rhs1).max(vm::distance(&lhs2, &rhs2));
        report.record(residual, &[x.coords(), y.coords()]);
    }
    report
}
