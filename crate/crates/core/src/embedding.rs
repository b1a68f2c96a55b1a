//! Sphere-valued embeddings of projective spaces built from symmetric
//! nonsingular bilinear maps, and the difference map they induce on the
//! deleted product.
//!
//! From a symmetric bilinear map α, the squaring L ↦ ν(α(ℓ, ℓ)) is
//! well-defined on lines (two sign flips cancel) and injective whenever α is
//! nonsingular: α(x,x) = λ·α(y,y) with λ > 0 forces α(x+√λ y, x−√λ y) = 0.
//! Injectivity is certified statistically, never assumed.

use crate::bilinear::BilinearMapSpec;
use crate::error::Error;
use crate::geometry::{canonicalize, OrderedPairConfig, SpaceDescriptor, SpacePoint, UnitVector};
use crate::relations::RelationId;
use crate::vecmath as vm;
use crate::EPS_SINGULAR;

/// A map from a quotient space into Euclidean space, claimed injective.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    pub name: String,
    pub source: SpaceDescriptor,
    /// Length of the image vectors (unit vectors in ℝ^{target_dim}).
    pub target_dim: usize,
    map: BilinearMapSpec,
}

impl EmbeddingSpec {
    /// The squaring embedding of P^r induced by a symmetric bilinear map.
    pub fn hopf(map: BilinearMapSpec) -> Result<Self, Error> {
        if !map.claims(RelationId::Sym) {
            return Err(Error::Unsupported(format!(
                "embedding construction needs a symmetric map; `{}` does not claim SYM",
                map.name
            )));
        }
        Ok(EmbeddingSpec {
            name: format!("hopf[{}]", map.name),
            source: SpaceDescriptor::RealProjective { r: map.domain_dim },
            target_dim: map.target_len,
            map,
        })
    }

    /// Evaluates the embedding at a point of the source space.
    ///
    /// Well-defined on orbits: the point is canonicalized first, and the
    /// underlying formula is itself sign-independent.
    pub fn eval(&self, p: &SpacePoint) -> Result<UnitVector, Error> {
        if p.space != self.source {
            return Err(Error::Unsupported(format!(
                "embedding `{}` is defined on {}, got a point of {}",
                self.name, self.source, p.space
            )));
        }
        hopf_embed(&self.map, p)
    }
}

/// ν(α(ℓ, ℓ)) for the canonical representative ℓ of the line `point`.
///
/// Independent of the representative sign since α(−ℓ,−ℓ) = α(ℓ,ℓ) exactly.
pub fn hopf_embed(spec: &BilinearMapSpec, point: &SpacePoint) -> Result<UnitVector, Error> {
    match point.space {
        SpaceDescriptor::RealProjective { r } if r == spec.domain_dim => {}
        SpaceDescriptor::RealProjective { .. } => {
            return Err(Error::DimensionMismatch {
                expected: spec.domain_dim + 1,
                got: point.rep.ambient_len(),
            })
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "squaring embedding expects a real projective point, got {}",
                point.space
            )))
        }
    }
    let x = point.rep_coords();
    UnitVector::normalized(&spec.eval(x, x))
}

/// The normalized difference map of an embedding on a configuration pair:
/// (a, b) ↦ (g(a) − g(b)) / |g(a) − g(b)|.
///
/// Swapping the pair negates the output exactly. Coincident images signal an
/// injectivity failure of g and are reported as an error.
pub fn haefliger_map(g: &EmbeddingSpec, pair: &OrderedPairConfig) -> Result<UnitVector, Error> {
    let a = canonicalize(pair.space, pair.first.clone())?;
    let b = canonicalize(pair.space, pair.second.clone())?;
    let ga = g.eval(&a)?;
    let gb = g.eval(&b)?;
    let diff = vm::sub(ga.coords(), gb.coords());
    let dist = vm::norm(&diff);
    if dist <= EPS_SINGULAR {
        return Err(Error::CoincidentImages { distance: dist });
    }
    UnitVector::normalized(&diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::{builtin_bilinear, BuiltinKind};
    use crate::geometry::make_pair_config;

    fn rp_point(r: usize, v: &[f64]) -> SpacePoint {
        canonicalize(
            SpaceDescriptor::RealProjective { r },
            UnitVector::normalized(v).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn complex_squaring_on_the_circle() {
        let spec = builtin_bilinear(BuiltinKind::Complex).unwrap();
        let img = hopf_embed(&spec, &rp_point(1, &[1.0, 0.0])).unwrap();
        assert_eq!(img.coords(), &[1.0, 0.0]);
        // ((1+i)/√2)^2 = i
        let img = hopf_embed(&spec, &rp_point(1, &[1.0, 1.0])).unwrap();
        assert!(vm::distance(img.coords(), &[0.0, 1.0]) < 1e-15);
    }

    #[test]
    fn polynomial_squaring_of_basis_monomial() {
        // [t] on P^2 squares to t^2, the third basis vector of R^5.
        let spec = builtin_bilinear(BuiltinKind::PolynomialMult { r: 2 }).unwrap();
        let img = hopf_embed(&spec, &rp_point(2, &[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(img.coords(), &[0.0, 0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn squaring_is_sign_independent() {
        let spec = builtin_bilinear(BuiltinKind::PolynomialMult { r: 3 }).unwrap();
        let x = UnitVector::normalized(&[0.3, -0.4, 0.5, 0.2]).unwrap();
        let raw_plus = spec.eval(x.coords(), x.coords());
        let nx = x.antipode();
        let raw_minus = spec.eval(nx.coords(), nx.coords());
        assert!(vm::distance(&raw_plus, &raw_minus) < 1e-15);
    }

    #[test]
    fn embedding_requires_symmetry() {
        let quat = builtin_bilinear(BuiltinKind::Quaternion).unwrap();
        assert!(matches!(
            EmbeddingSpec::hopf(quat),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn difference_map_on_orthogonal_lines() {
        let spec = builtin_bilinear(BuiltinKind::Complex).unwrap();
        let g = EmbeddingSpec::hopf(spec).unwrap();
        let pair = make_pair_config(
            SpaceDescriptor::RealProjective { r: 1 },
            UnitVector::normalized(&[1.0, 0.0]).unwrap(),
            UnitVector::normalized(&[0.0, 1.0]).unwrap(),
        )
        .unwrap();
        // 1^2 = 1, i^2 = -1: normalized difference is (1, 0).
        let h = haefliger_map(&g, &pair).unwrap();
        assert_eq!(h.coords(), &[1.0, 0.0]);
        // Swap antisymmetry is exact in floating point.
        let h_swap = haefliger_map(&g, &pair.swapped()).unwrap();
        assert_eq!(h_swap.coords(), vm::neg(h.coords()).as_slice());
    }
}
