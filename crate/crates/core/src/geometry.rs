//! Spheres, projective spaces, and lens spaces through their unit-sphere
//! representatives.
//!
//! Every quotient point is stored as a canonical representative on the
//! covering sphere. Canonicalization conventions (all deterministic, O(dim),
//! stable away from a measure-zero threshold set):
//!
//! * real projective `rp:r` - flip the sign so the first coordinate with
//!   absolute value above the singularity threshold is positive;
//! * lens `lens:n,m` - multiply by the m-th root of unity that moves the
//!   argument of the first significant complex coordinate into [0, 2π/m);
//! * complex projective `cp:n` - the first significant complex coordinate is
//!   made real and positive;
//! * spheres - identity.
//!
//! Complex coordinates are interleaved real pairs, so a point of
//! `lens:n,m` or `cp:n` lives on S^{2n+1} ⊂ ℝ^{2n+2}.

use crate::error::Error;
use crate::vecmath as vm;
use crate::{EPS_SEPARATION, EPS_SINGULAR};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A point on the unit sphere of some ℝ^{d+1}, norm 1 within 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector {
    coords: Vec<f64>,
}

impl UnitVector {
    /// Normalizes `v` to unit length, preserving direction.
    ///
    /// Fails with [`Error::NearZeroVector`] when the norm is at or below the
    /// singularity threshold - the signal that an input sits on an excluded
    /// diagonal or antipodal locus.
    pub fn normalized(v: &[f64]) -> Result<Self, Error> {
        let n = vm::norm(v);
        if !n.is_finite() || n <= EPS_SINGULAR {
            return Err(Error::NearZeroVector { norm: n });
        }
        Ok(UnitVector {
            coords: v.iter().map(|x| x / n).collect(),
        })
    }

    /// Wraps coordinates that are already unit length within `1e-12`.
    pub fn from_unit(v: Vec<f64>) -> Result<Self, Error> {
        let n = vm::norm(&v);
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::Parse(format!(
                "coordinates have norm {n:.17}, expected a unit vector"
            )));
        }
        Ok(UnitVector { coords: v })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    /// Sphere dimension: one less than the ambient length.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn ambient_len(&self) -> usize {
        self.coords.len()
    }

    pub fn antipode(&self) -> Self {
        UnitVector {
            coords: vm::neg(&self.coords),
        }
    }

    pub fn dot(&self, other: &UnitVector) -> f64 {
        vm::dot(&self.coords, &other.coords)
    }

    /// Standard basis vector e_i of ℝ^{ambient}.
    pub fn basis(ambient: usize, i: usize) -> Self {
        let mut coords = vec![0.0; ambient];
        coords[i] = 1.0;
        UnitVector { coords }
    }
}

/// Normalizes a raw vector to the unit sphere.
pub fn normalize(v: &[f64]) -> Result<UnitVector, Error> {
    UnitVector::normalized(v)
}

/// Which space a point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    /// Sphere S^r.
    Sphere { r: usize },
    /// Real projective space P^r = S^r / ±1.
    RealProjective { r: usize },
    /// Lens space L^{2n+1}(m) = S^{2n+1} / (ℤ/m), m ≥ 2.
    Lens { n: usize, m: usize },
    /// Complex projective space ℂP^n = S^{2n+1} / U(1).
    ComplexProjective { n: usize },
}

impl SpaceDescriptor {
    /// Length of the representative coordinate vector.
    pub fn ambient_len(&self) -> usize {
        match *self {
            SpaceDescriptor::Sphere { r } => r + 1,
            SpaceDescriptor::RealProjective { r } => r + 1,
            SpaceDescriptor::Lens { n, .. } => 2 * n + 2,
            SpaceDescriptor::ComplexProjective { n } => 2 * n + 2,
        }
    }

    /// Dimension of the covering sphere.
    pub fn cover_dim(&self) -> usize {
        self.ambient_len() - 1
    }

    /// Number of deck transformations, `None` for the continuous U(1) deck
    /// of complex projective space.
    pub fn deck_order(&self) -> Option<usize> {
        match *self {
            SpaceDescriptor::Sphere { .. } => Some(1),
            SpaceDescriptor::RealProjective { .. } => Some(2),
            SpaceDescriptor::Lens { m, .. } => Some(m),
            SpaceDescriptor::ComplexProjective { .. } => None,
        }
    }

    /// Applies the j-th deck transformation to raw coordinates.
    ///
    /// For spheres this is the identity; for projective spaces the sign
    /// (-1)^j; for lens spaces coordinatewise multiplication by e^{2πij/m}.
    pub fn deck_apply(&self, j: usize, v: &[f64]) -> Vec<f64> {
        match *self {
            SpaceDescriptor::Sphere { .. } => v.to_vec(),
            SpaceDescriptor::RealProjective { .. } => {
                if j.is_multiple_of(2) {
                    v.to_vec()
                } else {
                    vm::neg(v)
                }
            }
            SpaceDescriptor::Lens { m, .. } => {
                let (re, im) = vm::root_of_unity(m, j % m);
                vm::cplx_scalar_mul(re, im, v)
            }
            SpaceDescriptor::ComplexProjective { .. } => {
                panic!("complex projective space has no finite deck enumeration")
            }
        }
    }

    fn check_ambient(&self, v: &UnitVector) -> Result<(), Error> {
        if v.ambient_len() != self.ambient_len() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_len(),
                got: v.ambient_len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceDescriptor::Sphere { r } => write!(f, "sphere:{r}"),
            SpaceDescriptor::RealProjective { r } => write!(f, "rp:{r}"),
            SpaceDescriptor::Lens { n, m } => write!(f, "lens:{n},{m}"),
            SpaceDescriptor::ComplexProjective { n } => write!(f, "cp:{n}"),
        }
    }
}

impl FromStr for SpaceDescriptor {
    type Err = Error;

    /// Parses the descriptor syntax `rp:r | lens:n,m | cp:n | sphere:r`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid space descriptor `{s}`"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "sphere" => Ok(SpaceDescriptor::Sphere {
                r: rest.parse().map_err(|_| bad())?,
            }),
            "rp" => Ok(SpaceDescriptor::RealProjective {
                r: rest.parse().map_err(|_| bad())?,
            }),
            "cp" => Ok(SpaceDescriptor::ComplexProjective {
                n: rest.parse().map_err(|_| bad())?,
            }),
            "lens" => {
                let (n, m) = rest.split_once(',').ok_or_else(bad)?;
                let n: usize = n.trim().parse().map_err(|_| bad())?;
                let m: usize = m.trim().parse().map_err(|_| bad())?;
                if m < 2 {
                    return Err(Error::Parse(format!(
                        "lens torsion must be at least 2, got {m}"
                    )));
                }
                Ok(SpaceDescriptor::Lens { n, m })
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for SpaceDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SpaceDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|e: Error| D::Error::custom(e.to_string()))
    }
}

/// A point of one of the supported spaces, stored as the canonical orbit
/// representative on the covering sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpacePoint {
    pub space: SpaceDescriptor,
    #[serde(serialize_with = "serialize_rep")]
    pub rep: UnitVector,
}

fn serialize_rep<S: Serializer>(rep: &UnitVector, s: S) -> Result<S::Ok, S::Error> {
    rep.coords().serialize(s)
}

impl SpacePoint {
    pub fn rep_coords(&self) -> &[f64] {
        self.rep.coords()
    }
}

/// Index (in interleaved-pair steps of 2) of the first complex coordinate
/// whose modulus exceeds the singularity threshold.
fn first_significant_complex(v: &[f64]) -> usize {
    for k in (0..v.len()).step_by(2) {
        if (v[k] * v[k] + v[k + 1] * v[k + 1]).sqrt() > EPS_SINGULAR {
            return k;
        }
    }
    // Unit vectors always have a coordinate of modulus >= 1/sqrt(dim).
    unreachable!("unit vector with no significant coordinate")
}

/// Canonical orbit representative of `x` inside `space`.
///
/// Idempotent: canonicalizing a canonical representative returns it
/// unchanged, bit for bit.
pub fn canonicalize(space: SpaceDescriptor, x: UnitVector) -> Result<SpacePoint, Error> {
    space.check_ambient(&x)?;
    let rep = match space {
        SpaceDescriptor::Sphere { .. } => x,
        SpaceDescriptor::RealProjective { .. } => {
            let lead = x
                .coords()
                .iter()
                .find(|c| c.abs() > EPS_SINGULAR)
                .copied()
                .unwrap_or(1.0);
            if lead < 0.0 {
                x.antipode()
            } else {
                x
            }
        }
        SpaceDescriptor::Lens { m, .. } => {
            let k = first_significant_complex(x.coords());
            let arg = x.coords()[k + 1].atan2(x.coords()[k]);
            let arg = if arg < 0.0 {
                arg + std::f64::consts::TAU
            } else {
                arg
            };
            let window = std::f64::consts::TAU / m as f64;
            let q = ((arg / window).floor() as usize).min(m - 1);
            if q == 0 {
                x
            } else {
                let (re, im) = vm::root_of_unity(m, m - q);
                UnitVector {
                    coords: vm::cplx_scalar_mul(re, im, x.coords()),
                }
            }
        }
        SpaceDescriptor::ComplexProjective { .. } => {
            let k = first_significant_complex(x.coords());
            let (re, im) = (x.coords()[k], x.coords()[k + 1]);
            if im == 0.0 && re > 0.0 {
                x
            } else {
                let modulus = (re * re + im * im).sqrt();
                let mut coords = vm::cplx_scalar_mul(re / modulus, -im / modulus, x.coords());
                // The lead coordinate is |z| by construction; write it
                // exactly so re-canonicalization is a bitwise no-op.
                coords[k] = modulus;
                coords[k + 1] = 0.0;
                UnitVector { coords }
            }
        }
    };
    Ok(SpacePoint { space, rep })
}

/// Geodesic (angular) distance between the orbits of `x` and `y`:
/// the minimum over the deck group of the sphere distance.
///
/// Computed from the chord as 2·asin(‖x − g·y‖/2), which stays accurate all
/// the way down to machine precision near coincident orbits (an acos of the
/// inner product cannot resolve angles below ~1e-8).
pub fn orbit_distance(
    space: SpaceDescriptor,
    x: &UnitVector,
    y: &UnitVector,
) -> Result<f64, Error> {
    space.check_ambient(x)?;
    space.check_ambient(y)?;
    let chord = rep_distance(space, x.coords(), y.coords());
    Ok(2.0 * (chord / 2.0).clamp(0.0, 1.0).asin())
}

/// Deck element index maximizing `<x, g·y>`, plus the aligned copy of `y`.
/// Ties resolve to the smallest index.
pub(crate) fn best_deck_representative(
    space: SpaceDescriptor,
    x: &[f64],
    y: &[f64],
) -> (usize, Vec<f64>) {
    let order = space
        .deck_order()
        .expect("finite deck group required for representative selection");
    let mut best_j = 0;
    let mut best = f64::NEG_INFINITY;
    for j in 0..order {
        let cand = vm::dot(x, &space.deck_apply(j, y));
        if cand > best {
            best = cand;
            best_j = j;
        }
    }
    (best_j, space.deck_apply(best_j, y))
}

/// Minimum over the deck group of the Euclidean distance between
/// representatives. Resolves far below the angular metric's floating-point
/// floor, and is insensitive to canonicalization branch flips.
pub fn rep_distance(space: SpaceDescriptor, x: &[f64], y: &[f64]) -> f64 {
    match space.deck_order() {
        Some(order) => (0..order)
            .map(|j| vm::distance(x, &space.deck_apply(j, y)))
            .fold(f64::INFINITY, f64::min),
        None => {
            // U(1) deck: align y with x by the optimal unit scalar.
            let (hre, him) = vm::cplx_inner(x, y);
            let modulus = (hre * hre + him * him).sqrt();
            if modulus <= EPS_SINGULAR {
                return std::f64::consts::SQRT_2;
            }
            vm::distance(x, &vm::cplx_scalar_mul(hre / modulus, him / modulus, y))
        }
    }
}

/// An ordered pair of distinct orbits - a point of the configuration space
/// X×X minus the diagonal (for lens spaces: representatives generating
/// different ℤ/m-orbits).
#[derive(Debug, Clone, Serialize)]
pub struct OrderedPairConfig {
    pub space: SpaceDescriptor,
    #[serde(serialize_with = "serialize_rep")]
    pub first: UnitVector,
    #[serde(serialize_with = "serialize_rep")]
    pub second: UnitVector,
    pub min_separation: f64,
}

impl OrderedPairConfig {
    pub fn swapped(&self) -> OrderedPairConfig {
        OrderedPairConfig {
            space: self.space,
            first: self.second.clone(),
            second: self.first.clone(),
            min_separation: self.min_separation,
        }
    }
}

/// Builds a configuration-space pair, canonicalizing both points and caching
/// the orbit distance. Rejects pairs within `EPS_SEPARATION` of the diagonal.
pub fn make_pair_config(
    space: SpaceDescriptor,
    x: UnitVector,
    y: UnitVector,
) -> Result<OrderedPairConfig, Error> {
    let first = canonicalize(space, x)?;
    let second = canonicalize(space, y)?;
    let separation = orbit_distance(space, &first.rep, &second.rep)?;
    if separation <= EPS_SEPARATION {
        return Err(Error::DiagonalPair { separation });
    }
    Ok(OrderedPairConfig {
        space,
        first: first.rep,
        second: second.rep,
        min_separation: separation,
    })
}

/// True iff (u1, u2) is an orthonormal 2-frame within `tol` (real inner
/// product).
pub fn is_frame(u1: &UnitVector, u2: &UnitVector, tol: f64) -> bool {
    if u1.ambient_len() != u2.ambient_len() {
        return false;
    }
    let n1 = vm::norm(u1.coords());
    let n2 = vm::norm(u2.coords());
    u1.dot(u2).abs() <= tol && (n1 - 1.0).abs() <= tol && (n2 - 1.0).abs() <= tol
}

/// An orthonormal 2-frame, validated at 1e-9.
#[derive(Debug, Clone)]
pub struct Frame2 {
    pub u1: UnitVector,
    pub u2: UnitVector,
}

impl Frame2 {
    pub fn new(u1: UnitVector, u2: UnitVector) -> Result<Self, Error> {
        if u1.ambient_len() != u2.ambient_len() {
            return Err(Error::DimensionMismatch {
                expected: u1.ambient_len(),
                got: u2.ambient_len(),
            });
        }
        if !is_frame(&u1, &u2, 1e-9) {
            return Err(Error::Parse(format!(
                "not an orthonormal 2-frame: <u1,u2> = {:.3e}",
                u1.dot(&u2)
            )));
        }
        Ok(Frame2 { u1, u2 })
    }

    /// Validates a frame in ℂ^{n+1} under the Hermitian inner product
    /// (both interleaved vectors unit, complex inner product zero).
    pub fn new_hermitian(u1: UnitVector, u2: UnitVector) -> Result<Self, Error> {
        if u1.ambient_len() != u2.ambient_len() {
            return Err(Error::DimensionMismatch {
                expected: u1.ambient_len(),
                got: u2.ambient_len(),
            });
        }
        let (re, im) = vm::cplx_inner(u1.coords(), u2.coords());
        if (re * re + im * im).sqrt() > 1e-9 {
            return Err(Error::Parse(format!(
                "not a Hermitian 2-frame: |<u1,u2>| = {:.3e}",
                (re * re + im * im).sqrt()
            )));
        }
        Ok(Frame2 { u1, u2 })
    }
}
