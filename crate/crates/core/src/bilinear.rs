//! Bilinear maps between spheres: the division-algebra multiplications,
//! polynomial coefficient convolution, and the coordinatewise biequivariant
//! family for lens spaces.
//!
//! A [`BilinearMapSpec`] evaluates the raw bilinear map α; [`sphere_map`]
//! normalizes it to the induced map of spheres. The `profile` records which
//! relation sets the map is *claimed* to satisfy - claims are verified by
//! sampling in [`crate::relations`], never trusted blindly.

use crate::error::Error;
use crate::geometry::UnitVector;
use crate::relations::RelationId;
use crate::vecmath as vm;
use std::collections::BTreeSet;

/// Construction behind a bilinear map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    /// Complex multiplication ℝ²×ℝ² → ℝ².
    Complex,
    /// Quaternion multiplication ℝ⁴×ℝ⁴ → ℝ⁴.
    Quaternion,
    /// Octonion multiplication ℝ⁸×ℝ⁸ → ℝ⁸ (Cayley–Dickson doubling of the
    /// quaternions).
    Octonion,
    /// Coefficient convolution ℝ^{r+1}×ℝ^{r+1} → ℝ^{2r+1}: multiplication of
    /// degree-r polynomials. Symmetric and nonsingular for every r.
    PolynomialMult { r: usize },
    /// Coordinatewise z_j ↦ x_j·conj(y_j) on ℂ^{n+1}×ℂ^{n+1} → ℂ^{n+1},
    /// intertwining the ℤ/m rotation with the scalar action on the target.
    /// Nonvanishing only off a measure-zero set, so nonsingularity is
    /// claimed only statistically on the orbit configuration space.
    LensBiequivariant { n: usize, m: usize },
}

/// A bilinear map α together with its claimed relation profile.
#[derive(Debug, Clone)]
pub struct BilinearMapSpec {
    pub name: String,
    /// Inputs live on S^{domain_dim} ⊂ ℝ^{domain_dim + 1}.
    pub domain_dim: usize,
    /// Raw output length; the normalized map lands on S^{target_len - 1}.
    pub target_len: usize,
    /// Relation sets the map claims to satisfy.
    pub profile: BTreeSet<RelationId>,
    /// Torsion m for maps carrying a ℤ/m structure.
    pub torsion: Option<usize>,
    pub kind: BuiltinKind,
}

impl BilinearMapSpec {
    /// Sphere dimension of the normalized target.
    pub fn target_sphere_dim(&self) -> usize {
        self.target_len - 1
    }

    pub fn claims(&self, rel: RelationId) -> bool {
        self.profile.contains(&rel)
    }

    /// Raw bilinear evaluation α(x, y).
    pub fn eval(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.domain_dim + 1);
        debug_assert_eq!(y.len(), self.domain_dim + 1);
        match self.kind {
            BuiltinKind::Complex => complex_mul(x, y),
            BuiltinKind::Quaternion => quaternion_mul(x, y),
            BuiltinKind::Octonion => octonion_mul(x, y),
            BuiltinKind::PolynomialMult { .. } => convolve(x, y),
            BuiltinKind::LensBiequivariant { .. } => coordinatewise_conj_mul(x, y),
        }
    }

    /// i-th real component of α (1-based, i = 1..=target_len).
    pub fn component(&self, i: usize, x: &[f64], y: &[f64]) -> f64 {
        self.eval(x, y)[i - 1]
    }
}

/// Builds one of the shipped bilinear maps.
///
/// The declared profiles follow the classical properties: complex and
/// polynomial multiplication are symmetric, quaternions and octonions are
/// not; the lens family satisfies the twisted-scalar relations only.
pub fn builtin_bilinear(kind: BuiltinKind) -> Result<BilinearMapSpec, Error> {
    use RelationId::*;
    let spec = match kind {
        BuiltinKind::Complex => BilinearMapSpec {
            name: "complex".into(),
            domain_dim: 1,
            target_len: 2,
            profile: BTreeSet::from([Sym, Axial2]),
            torsion: None,
            kind,
        },
        BuiltinKind::Quaternion => BilinearMapSpec {
            name: "quaternion".into(),
            domain_dim: 3,
            target_len: 4,
            profile: BTreeSet::from([Axial2]),
            torsion: None,
            kind,
        },
        BuiltinKind::Octonion => BilinearMapSpec {
            name: "octonion".into(),
            domain_dim: 7,
            target_len: 8,
            profile: BTreeSet::from([Axial2]),
            torsion: None,
            kind,
        },
        BuiltinKind::PolynomialMult { r } => BilinearMapSpec {
            name: format!("poly:{r}"),
            domain_dim: r,
            target_len: 2 * r + 1,
            profile: BTreeSet::from([Sym, Axial2]),
            torsion: None,
            kind,
        },
        BuiltinKind::LensBiequivariant { n, m } => {
            if m == 0 {
                return Err(Error::Unsupported(
                    "lens biequivariant map needs torsion m >= 1".into(),
                ));
            }
            BilinearMapSpec {
                name: format!("lensbieq:{n},{m}"),
                domain_dim: 2 * n + 1,
                target_len: 2 * n + 2,
                profile: BTreeSet::from([Tce]),
                torsion: Some(m),
                kind,
            }
        }
    };
    Ok(spec)
}

/// The lens-space family with an explicit target parameter. Only the
/// coordinatewise construction is shipped, so `k` must equal n+1 (target
/// sphere S^{2k-1}); anything else is [`Error::Unsupported`].
pub fn lens_biequivariant(n: usize, m: usize, k: usize) -> Result<BilinearMapSpec, Error> {
    if k != n + 1 {
        return Err(Error::Unsupported(format!(
            "no built-in biequivariant map with target C^{k} for n = {n}; only k = n+1 is provided"
        )));
    }
    builtin_bilinear(BuiltinKind::LensBiequivariant { n, m })
}

/// Looks a builtin up by its CLI name (`complex`, `quaternion`, `octonion`,
/// `poly:<r>`, `lensbieq:<n>,<m>`).
pub fn builtin_by_name(name: &str) -> Result<BilinearMapSpec, Error> {
    let bad = || Error::Parse(format!("unknown map `{name}`"));
    match name {
        "complex" => builtin_bilinear(BuiltinKind::Complex),
        "quaternion" => builtin_bilinear(BuiltinKind::Quaternion),
        "octonion" => builtin_bilinear(BuiltinKind::Octonion),
        _ => {
            if let Some(r) = name.strip_prefix("poly:") {
                let r = r.parse().map_err(|_| bad())?;
                builtin_bilinear(BuiltinKind::PolynomialMult { r })
            } else if let Some(nm) = name.strip_prefix("lensbieq:") {
                let (n, m) = nm.split_once(',').ok_or_else(bad)?;
                builtin_bilinear(BuiltinKind::LensBiequivariant {
                    n: n.trim().parse().map_err(|_| bad())?,
                    m: m.trim().parse().map_err(|_| bad())?,
                })
            } else {
                Err(bad())
            }
        }
    }
}

/// The induced map of spheres: normalize(α(x, y)).
///
/// A near-zero value is a nonsingularity violation and surfaces as
/// [`Error::NearZeroVector`] - reported, not swallowed.
pub fn sphere_map(
    spec: &BilinearMapSpec,
    x: &UnitVector,
    y: &UnitVector,
) -> Result<UnitVector, Error> {
    if x.ambient_len() != spec.domain_dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: spec.domain_dim + 1,
            got: x.ambient_len(),
        });
    }
    if y.ambient_len() != spec.domain_dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: spec.domain_dim + 1,
            got: y.ambient_len(),
        });
    }
    UnitVector::normalized(&spec.eval(x.coords(), y.coords()))
}

fn complex_mul(x: &[f64], y: &[f64]) -> Vec<f64> {
    vec![x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]]
}

fn quaternion_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    vec![
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quaternion_conj(a: &[f64]) -> Vec<f64> {
    vec![a[0], -a[1], -a[2], -a[3]]
}

/// Cayley–Dickson product on pairs of quaternions:
/// (a, b)(c, d) = (ac − d̄b, da + bc̄).
fn octonion_mul(x: &[f64], y: &[f64]) -> Vec<f64> {
    let (a, b) = (&x[..4], &x[4..]);
    let (c, d) = (&y[..4], &y[4..]);
    let first = vm::sub(
        &quaternion_mul(a, c),
        &quaternion_mul(&quaternion_conj(d), b),
    );
    let second = vm::add(
        &quaternion_mul(d, a),
        &quaternion_mul(b, &quaternion_conj(c)),
    );
    let mut out = first;
    out.extend(second);
    out
}

fn convolve(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn coordinatewise_conj_mul(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(x.len());
    for k in (0..x.len()).step_by(2) {
        let (a, b) = (x[k], x[k + 1]);
        let (c, d) = (y[k], y[k + 1]);
        // (a + ib)·(c − id)
        out.push(a * c + b * d);
        out.push(b * c - a * d);
    }
    out
}
