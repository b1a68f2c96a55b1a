//! Section-property invariants for both planners, beyond the per-pair
//! checks inside `verify_section`.

use proptest::prelude::*;
use symtc_core::bilinear::{builtin_bilinear, BuiltinKind};
use symtc_core::bounds::{table1_entry, witness_upper};
use symtc_core::geometry::{canonicalize, SpaceDescriptor, UnitVector};
use symtc_core::planner::{reverse, select_rule, verify_section, PlannerSpec};
use symtc_core::relations::{check_relations, RelationId};
use symtc_core::sampling::{sample_config_pair, SampleStream};

#[test]
fn rotation_sections_pass_for_the_polynomial_family() {
    for r in 2..=4 {
        let map = builtin_bilinear(BuiltinKind::PolynomialMult { r }).unwrap();
        let space = SpaceDescriptor::RealProjective { r };
        let planner = PlannerSpec::rotation(map, space, 64).unwrap();
        let report = verify_section(&planner, 300, 11, 1e-9).unwrap();
        assert!(report.pass, "r={r}: {report:?}");
        assert_eq!(report.coverage_failures, 0);
        assert!(report.max_step <= std::f64::consts::FRAC_PI_2 / 64.0 + 1e-9);
    }
}

#[test]
fn rule_indices_range_over_all_components() {
    // A map into S^s yields s+1 local rules; over many pairs on the circle
    // both complex components must fire.
    let map = builtin_bilinear(BuiltinKind::Complex).unwrap();
    let space = SpaceDescriptor::RealProjective { r: 1 };
    let stream = SampleStream::new(21);
    let mut seen = [false; 2];
    for i in 0..200u64 {
        let (x, y) = sample_config_pair(&mut stream.rng_for(i), space);
        let from = canonicalize(space, x).unwrap();
        let to = canonicalize(space, y).unwrap();
        let (rule, l1, l2) = select_rule(&map, &from, &to).unwrap();
        assert!((1..=2).contains(&rule));
        seen[rule - 1] = true;
        // The oriented component really is positive.
        assert!(map.component(rule, l1.coords(), l2.coords()) > 0.0);
    }
    assert!(seen[0] && seen[1]);
}

#[test]
fn witness_chain_matches_rule_count() {
    // s+1 rules from a verified map into S^s give the upper bound s+2; for
    // the polynomial family s = 2r, and the bound must sit above every
    // tabulated lower bound.
    for r in 1..=6u64 {
        let spec = builtin_bilinear(BuiltinKind::PolynomialMult { r: r as usize }).unwrap();
        let sym = check_relations(&spec, RelationId::Sym, 2_000, 0, 1e-12).unwrap();
        let axial = check_relations(&spec, RelationId::Axial2, 2_000, 0, 1e-12).unwrap();
        let fact = witness_upper(&spec, r, &[sym, axial]).unwrap();
        assert_eq!(fact.value.as_int(), Some(2 * r as i64 + 2));
        if let Some((_, lower)) = table1_entry(r as u32) {
            assert!(2 * r as i64 + 2 >= lower as i64, "r={r}");
        }
    }
}

#[test]
fn lift_sections_pass_across_even_torsions() {
    for n in 0..=2 {
        for m in [2, 4, 6, 8] {
            let space = SpaceDescriptor::Lens { n, m };
            let planner = PlannerSpec::lift(space, 64).unwrap();
            let report = verify_section(&planner, 300, 13, 1e-9).unwrap();
            assert!(report.pass, "lens:{n},{m}: {report:?}");
            assert_eq!(report.singular_failures, 0);
            assert!(report.max_step <= std::f64::consts::PI / 64.0 + 1e-9);
        }
    }
}

#[test]
fn sphere_lift_sections_have_exact_endpoints() {
    let space = SpaceDescriptor::Sphere { r: 3 };
    let planner = PlannerSpec::lift(space, 64).unwrap();
    let report = verify_section(&planner, 300, 17, 1e-9).unwrap();
    assert!(report.max_endpoint_residual <= 1e-12);
    assert_eq!(report.singular_failures, 0);
    // The chord step bound is pair-dependent on spheres but still honored.
    assert!(report.max_step <= report.step_bound, "{report:?}");
}

#[test]
fn swap_reversal_holds_pointwise() {
    let map = builtin_bilinear(BuiltinKind::PolynomialMult { r: 3 }).unwrap();
    let space = SpaceDescriptor::RealProjective { r: 3 };
    let planner = PlannerSpec::rotation(map, space, 32).unwrap();
    let stream = SampleStream::new(23);
    for i in 0..300u64 {
        let (x, y) = sample_config_pair(&mut stream.rng_for(i), space);
        let from = canonicalize(space, x).unwrap();
        let to = canonicalize(space, y).unwrap();
        let fwd = planner.plan(&from, &to).unwrap();
        let back = reverse(&planner.plan(&to, &from).unwrap());
        for (a, b) in fwd.samples.iter().zip(&back.samples) {
            let d = symtc_core::geometry::rep_distance(space, a.rep_coords(), b.rep_coords());
            assert!(d <= 1e-9, "sample {i}: swap residual {d}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planned_paths_stay_on_the_space(seed in 0u64..1000) {
        let map = builtin_bilinear(BuiltinKind::PolynomialMult { r: 2 }).unwrap();
        let space = SpaceDescriptor::RealProjective { r: 2 };
        let planner = PlannerSpec::rotation(map, space, 16).unwrap();
        let stream = SampleStream::new(seed);
        let (x, y) = sample_config_pair(&mut stream.rng_for(0), space);
        let from = canonicalize(space, x).unwrap();
        let to = canonicalize(space, y).unwrap();
        let path = planner.plan(&from, &to).unwrap();
        for p in &path.samples {
            let norm: f64 = p.rep_coords().iter().map(|c| c * c).sum::<f64>().sqrt();
            prop_assert!((norm - 1.0).abs() < 1e-12);
            // Representatives are canonical: re-canonicalizing is a no-op.
            let again = canonicalize(space, UnitVector::from_unit(p.rep_coords().to_vec()).unwrap()).unwrap();
            prop_assert_eq!(again.rep_coords(), p.rep_coords());
        }
    }
}
