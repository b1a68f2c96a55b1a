//! Quotient-geometry invariants checked over seeded bulk samples and
//! proptest-generated inputs.

use proptest::prelude::*;
use symtc_core::geometry::{
    canonicalize, make_pair_config, orbit_distance, SpaceDescriptor, UnitVector,
};
use symtc_core::sampling::{sample_unit, sample_unit_pair, SampleStream};
use symtc_core::{Error, EPS_SEPARATION};

const SPACES: [SpaceDescriptor; 5] = [
    SpaceDescriptor::Sphere { r: 3 },
    SpaceDescriptor::RealProjective { r: 4 },
    SpaceDescriptor::Lens { n: 1, m: 4 },
    SpaceDescriptor::Lens { n: 2, m: 6 },
    SpaceDescriptor::ComplexProjective { n: 2 },
];

#[test]
fn canonicalization_is_idempotent_in_bulk() {
    let stream = SampleStream::new(100);
    for space in SPACES {
        for i in 0..10_000u64 {
            let x = sample_unit(&mut stream.rng_for(i), space.ambient_len());
            let once = canonicalize(space, x).unwrap();
            let twice = canonicalize(space, once.rep.clone()).unwrap();
            assert_eq!(
                once.rep.coords(),
                twice.rep.coords(),
                "{space} sample {i}: canonicalization moved a canonical representative"
            );
        }
    }
}

#[test]
fn orbit_distance_is_deck_invariant_and_symmetric() {
    let stream = SampleStream::new(101);
    for space in SPACES {
        let Some(order) = space.deck_order() else {
            continue;
        };
        for i in 0..10_000u64 {
            let (x, y) = sample_unit_pair(&mut stream.rng_for(i), space.ambient_len());
            let base = orbit_distance(space, &x, &y).unwrap();
            let swapped = orbit_distance(space, &y, &x).unwrap();
            assert!((base - swapped).abs() <= 1e-9, "{space}: asymmetric");
            for j in 0..order {
                let moved = UnitVector::from_unit(space.deck_apply(j, y.coords())).unwrap();
                let d = orbit_distance(space, &x, &moved).unwrap();
                assert!((base - d).abs() <= 1e-9, "{space} deck {j}: {base} vs {d}");
            }
        }
    }
}

#[test]
fn pair_rejection_matches_brute_force_deck_search() {
    let stream = SampleStream::new(102);
    for space in SPACES {
        let Some(order) = space.deck_order() else {
            continue;
        };
        for i in 0..2_000u64 {
            let mut rng = stream.rng_for(i);
            let (x, y) = sample_unit_pair(&mut rng, space.ambient_len());
            // Exercise the diagonal too: half the time, test against a deck
            // translate of x itself.
            let (x, y) = if i % 2 == 0 {
                let j = (i as usize) % order;
                (
                    x.clone(),
                    UnitVector::from_unit(space.deck_apply(j, x.coords())).unwrap(),
                )
            } else {
                (x, y)
            };
            let brute = (0..order)
                .map(|j| {
                    let gy = space.deck_apply(j, y.coords());
                    let chord: f64 = x
                        .coords()
                        .iter()
                        .zip(&gy)
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum::<f64>()
                        .sqrt();
                    2.0 * (chord / 2.0).clamp(0.0, 1.0).asin()
                })
                .fold(f64::INFINITY, f64::min);
            let accepted = make_pair_config(space, x, y).is_ok();
            assert_eq!(
                accepted,
                brute > EPS_SEPARATION,
                "{space} sample {i}: brute distance {brute}"
            );
        }
    }
}

#[test]
fn even_torsion_pairs_are_never_antipodal_under_the_deck() {
    // With -1 in the deck group, an antipodal deck translate would mean
    // equal orbits; valid pairs therefore keep every chord away from the
    // origin, with the midpoint chord norm at least 1/sqrt(2).
    let stream = SampleStream::new(103);
    for (n, m) in [(0usize, 2usize), (1, 4), (2, 6), (3, 8)] {
        let space = SpaceDescriptor::Lens { n, m };
        for i in 0..2_000u64 {
            let mut rng = stream.rng_for(i);
            let (x, y) = sample_unit_pair(&mut rng, space.ambient_len());
            let Ok(pair) = make_pair_config(space, x, y) else {
                continue;
            };
            let align = |j: usize| {
                let gy = space.deck_apply(j, pair.second.coords());
                pair.first
                    .coords()
                    .iter()
                    .zip(&gy)
                    .map(|(p, q)| p * q)
                    .sum::<f64>()
            };
            let best_j = (0..m)
                .max_by(|&a, &b| align(a).partial_cmp(&align(b)).unwrap())
                .unwrap();
            assert!(
                align(best_j) >= 0.0,
                "lens:{n},{m} sample {i}: best alignment {} is negative",
                align(best_j)
            );
            let gy = space.deck_apply(best_j, pair.second.coords());
            let mid: f64 = pair
                .first
                .coords()
                .iter()
                .zip(&gy)
                .map(|(a, b)| 0.5 * a + 0.5 * b)
                .map(|c| c * c)
                .sum::<f64>()
                .sqrt();
            assert!(
                mid >= std::f64::consts::FRAC_1_SQRT_2 - 1e-12,
                "lens:{n},{m}: midpoint chord norm {mid}"
            );
        }
    }
}

fn arb_direction(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0f64..100.0, len).prop_filter("nonzero", |v| {
        v.iter().map(|x| x * x).sum::<f64>().sqrt() > 1e-3
    })
}

proptest! {
    #[test]
    fn normalize_preserves_direction(v in arb_direction(5)) {
        let u = UnitVector::normalized(&v).unwrap();
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for (a, b) in u.coords().iter().zip(&v) {
            prop_assert!((a * norm - b).abs() <= 1e-9 * norm.max(1.0));
        }
    }

    #[test]
    fn canonical_representatives_stay_in_the_orbit(v in arb_direction(6)) {
        for space in [
            SpaceDescriptor::RealProjective { r: 5 },
            SpaceDescriptor::Lens { n: 2, m: 6 },
            SpaceDescriptor::ComplexProjective { n: 2 },
        ] {
            let x = UnitVector::normalized(&v).unwrap();
            let p = canonicalize(space, x.clone()).unwrap();
            let d = orbit_distance(space, &x, &p.rep).unwrap();
            prop_assert!(d <= 1e-7, "{} moved by {}", space, d);
        }
    }

    #[test]
    fn diagonal_pairs_are_always_rejected(v in arb_direction(4), j in 0usize..6) {
        let space = SpaceDescriptor::Lens { n: 1, m: 6 };
        let x = UnitVector::normalized(&v).unwrap();
        let y = UnitVector::from_unit(space.deck_apply(j, x.coords())).unwrap();
        let rejected = matches!(
            make_pair_config(space, x, y),
            Err(Error::DiagonalPair { .. })
        );
        prop_assert!(rejected);
    }
}
