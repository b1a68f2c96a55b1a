//! The two explicit pair-level maps used to move between the quotient
//! models of the configuration space:
//!
//! * [`sum_diff_split`] - (x, y) ↦ (ν(x+y), ν(x−y)), which exchanges the
//!   two relation systems on pairs: the images of (−x,−y)~(x,y)~(y,x)
//!   identifications are equivalent under per-factor sign flips
//!   (−x,y)~(x,y)~(x,−y), and vice versa. On an orthonormal 2-frame the
//!   normalizations reduce to division by √2 and the image is again a frame.
//! * [`frame_retraction`] - the deformation retraction of the off-diagonal
//!   pair space onto the orthonormal 2-frames, equivariant for the dihedral
//!   action (per-factor antipodes and the swap).

use crate::error::Error;
use crate::geometry::UnitVector;
use crate::vecmath as vm;
use crate::EPS_SEPARATION;

/// (x, y) ↦ (ν(x+y), ν(x−y)). Requires x ≠ ±y; the excluded diagonal
/// surfaces as [`Error::NearZeroVector`] from the normalization.
pub fn sum_diff_split(x: &UnitVector, y: &UnitVector) -> Result<(UnitVector, UnitVector), Error> {
    if x.ambient_len() != y.ambient_len() {
        return Err(Error::DimensionMismatch {
            expected: x.ambient_len(),
            got: y.ambient_len(),
        });
    }
    let sum = UnitVector::normalized(&vm::add(x.coords(), y.coords()))?;
    let diff = UnitVector::normalized(&vm::sub(x.coords(), y.coords()))?;
    Ok((sum, diff))
}

/// Distance from (a, b) to the orbit of (c, d) under independent per-factor
/// sign flips: min over ε₁, ε₂ ∈ {±1} of the larger factor distance.
pub fn sign_orbit_distance(a: &UnitVector, b: &UnitVector, c: &UnitVector, d: &UnitVector) -> f64 {
    let d1 =
        vm::distance(a.coords(), c.coords()).min(vm::distance(a.coords(), &vm::neg(c.coords())));
    let d2 =
        vm::distance(b.coords(), d.coords()).min(vm::distance(b.coords(), &vm::neg(d.coords())));
    d1.max(d2)
}

/// Distance from (a, b) to the orbit of (c, d) under the identifications
/// (c,d) ~ (−c,−d) ~ (d,c): min over the four orbit members of the larger
/// factor distance.
pub fn exchange_orbit_distance(
    a: &UnitVector,
    b: &UnitVector,
    c: &UnitVector,
    d: &UnitVector,
) -> f64 {
    let dist = |p: &UnitVector, q: &[f64]| vm::distance(p.coords(), q);
    let nc = vm::neg(c.coords());
    let nd = vm::neg(d.coords());
    [
        dist(a, c.coords()).max(dist(b, d.coords())),
        dist(a, &nc).max(dist(b, &nd)),
        dist(a, d.coords()).max(dist(b, c.coords())),
        dist(a, &nd).max(dist(b, &nc)),
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min)
}

/// The deformation retraction H of the off-diagonal pair space onto the
/// orthonormal 2-frames, at time t ∈ [0, 1]:
///
/// ```text
/// w1 = (u1 + u2)/√(1 + <u1,u2>)      w2 = (u1 − u2)/√(1 − <u1,u2>)
/// v1 = w1 + w2                       v2 = w1 − w2
/// H(u1, u2, t) = ( ν(u1 + t(v1 − u1)), ν(u2 + t(v2 − u2)) )
/// ```
///
/// At t = 0 this is the identity, at t = 1 an orthonormal pair; frames are
/// fixed pointwise for every t.
pub fn frame_retraction(
    u1: &UnitVector,
    u2: &UnitVector,
    t: f64,
) -> Result<(UnitVector, UnitVector), Error> {
    if u1.ambient_len() != u2.ambient_len() {
        return Err(Error::DimensionMismatch {
            expected: u1.ambient_len(),
            got: u2.ambient_len(),
        });
    }
    let c = u1.dot(u2);
    if c.abs() >= 1.0 - EPS_SEPARATION {
        return Err(Error::DegeneratePair { inner: c });
    }
    let w1 = vm::scale(&vm::add(u1.coords(), u2.coords()), 1.0 / (1.0 + c).sqrt());
    let w2 = vm::scale(&vm::sub(u1.coords(), u2.coords()), 1.0 / (1.0 - c).sqrt());
    let v1 = vm::add(&w1, &w2);
    let v2 = vm::sub(&w1, &w2);
    let h1 = UnitVector::normalized(&vm::axpy(u1.coords(), t, &vm::sub(&v1, u1.coords())))?;
    let h2 = UnitVector::normalized(&vm::axpy(u2.coords(), t, &vm::sub(&v2, u2.coords())))?;
    Ok((h1, h2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::is_frame;
    use crate::sampling::{sample_unit_pair, SampleStream};

    fn uv(v: &[f64]) -> UnitVector {
        UnitVector::normalized(v).unwrap()
    }

    #[test]
    fn split_of_basis_pair() {
        let (s, d) = sum_diff_split(&uv(&[1.0, 0.0]), &uv(&[0.0, 1.0])).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(vm::distance(s.coords(), &[h, h]) < 1e-15);
        assert!(vm::distance(d.coords(), &[h, -h]) < 1e-15);
    }

    #[test]
    fn split_rejects_equal_points() {
        let x = uv(&[0.6, 0.8]);
        assert!(matches!(
            sum_diff_split(&x, &x),
            Err(Error::NearZeroVector { .. })
        ));
    }

    #[test]
    fn split_sends_exchange_relations_to_sign_relations() {
        let stream = SampleStream::new(9);
        for i in 0..500 {
            let (x, y) = sample_unit_pair(&mut stream.rng_for(i), 5);
            if x.dot(&y).abs() > 1.0 - 1e-6 {
                continue;
            }
            let (a, b) = sum_diff_split(&x, &y).unwrap();
            // (−x, −y) and (y, x) land in the per-factor sign orbit.
            let (a1, b1) = sum_diff_split(&x.antipode(), &y.antipode()).unwrap();
            let (a2, b2) = sum_diff_split(&y, &x).unwrap();
            assert!(sign_orbit_distance(&a1, &b1, &a, &b) < 1e-9);
            assert!(sign_orbit_distance(&a2, &b2, &a, &b) < 1e-9);
            // (−x, y) and (x, −y) land in the exchange orbit.
            let (a3, b3) = sum_diff_split(&x.antipode(), &y).unwrap();
            let (a4, b4) = sum_diff_split(&x, &y.antipode()).unwrap();
            assert!(exchange_orbit_distance(&a3, &b3, &a, &b) < 1e-9);
            assert!(exchange_orbit_distance(&a4, &b4, &a, &b) < 1e-9);
        }
    }

    #[test]
    fn split_preserves_frames() {
        let stream = SampleStream::new(10);
        for i in 0..200 {
            let (x, raw) = sample_unit_pair(&mut stream.rng_for(i), 6);
            // Gram–Schmidt the second vector to get a frame.
            let proj = vm::axpy(raw.coords(), -x.dot(&raw), x.coords());
            let y = UnitVector::normalized(&proj).unwrap();
            let (a, b) = sum_diff_split(&x, &y).unwrap();
            assert!(is_frame(&a, &b, 1e-9));
            // On frames the normalization is exactly the 1/√2 scaling.
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let expect = vm::scale(&vm::add(x.coords(), y.coords()), h);
            assert!(vm::distance(a.coords(), &expect) < 1e-12);
        }
    }

    #[test]
    fn retraction_time_zero_is_identity() {
        let stream = SampleStream::new(12);
        for i in 0..200 {
            let (x, y) = sample_unit_pair(&mut stream.rng_for(i), 4);
            if x.dot(&y).abs() > 1.0 - 1e-6 {
                continue;
            }
            let (h1, h2) = frame_retraction(&x, &y, 0.0).unwrap();
            assert!(vm::distance(h1.coords(), x.coords()) < 1e-12);
            assert!(vm::distance(h2.coords(), y.coords()) < 1e-12);
        }
    }

    #[test]
    fn retraction_time_one_is_a_frame() {
        let stream = SampleStream::new(13);
        for i in 0..200 {
            let (x, y) = sample_unit_pair(&mut stream.rng_for(i), 7);
            if x.dot(&y).abs() > 1.0 - 1e-6 {
                continue;
            }
            let (h1, h2) = frame_retraction(&x, &y, 1.0).unwrap();
            assert!(is_frame(&h1, &h2, 1e-9));
        }
    }

    #[test]
    fn retraction_fixes_frames_for_all_t() {
        let e1 = uv(&[1.0, 0.0, 0.0]);
        let e2 = uv(&[0.0, 1.0, 0.0]);
        for k in 0..=10 {
            let t = k as f64 / 10.0;
            let (h1, h2) = frame_retraction(&e1, &e2, t).unwrap();
            assert!(vm::distance(h1.coords(), e1.coords()) < 1e-15);
            assert!(vm::distance(h2.coords(), e2.coords()) < 1e-15);
        }
    }

    #[test]
    fn retraction_rejects_near_diagonal() {
        let x = uv(&[1.0, 0.0]);
        assert!(matches!(
            frame_retraction(&x, &x, 0.5),
            Err(Error::DegeneratePair { .. })
        ));
    }

    #[test]
    fn retraction_is_dihedral_equivariant() {
        let stream = SampleStream::new(14);
        for i in 0..200 {
            let (x, y) = sample_unit_pair(&mut stream.rng_for(i), 5);
            if x.dot(&y).abs() > 1.0 - 1e-6 {
                continue;
            }
            for k in 0..=10 {
                let t = k as f64 / 10.0;
                let (h1, h2) = frame_retraction(&x, &y, t).unwrap();
                // Diagonal antipode.
                let (n1, n2) = frame_retraction(&x.antipode(), &y.antipode(), t).unwrap();
                assert!(vm::distance(n1.coords(), &vm::neg(h1.coords())) < 1e-9);
                assert!(vm::distance(n2.coords(), &vm::neg(h2.coords())) < 1e-9);
                // Swap.
                let (s1, s2) = frame_retraction(&y, &x, t).unwrap();
                assert!(vm::distance(s1.coords(), h2.coords()) < 1e-9);
                assert!(vm::distance(s2.coords(), h1.coords()) < 1e-9);
                // Single-factor antipode.
                let (f1, f2) = frame_retraction(&x.antipode(), &y, t).unwrap();
                assert!(vm::distance(f1.coords(), &vm::neg(h1.coords())) < 1e-9);
                assert!(vm::distance(f2.coords(), h2.coords()) < 1e-9);
            }
        }
    }
}
