mod common;

use common::*;
use polytrim::trimming::*;
use polytrim::{HalfSpace, Polyhedron, Vector};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

#[test]
fn characterization_matches_direct_oracle_r3() {
    let mut positives = 0;
    for seed in 0..500u64 {
        let k = r3_instance(seed);
        let direct = a_bounded_direct(&k).unwrap();
        let (ch, witness) = a_bounded_characterized(&k).unwrap();
        assert_eq!(ch, direct, "seed {seed}");
        if let Some(w) = witness {
            assert!(section_clause_holds(&k, &w).unwrap(), "seed {seed}");
        }
        assert!(ray_sampling_agrees(&k, direct, seed), "seed {seed}");
        positives += direct as usize;
    }
    assert!(positives >= 100, "only {positives} bounded instances");
}

#[test]
fn characterization_matches_direct_oracle_r4() {
    let mut positives = 0;
    for seed in 0..100u64 {
        let k = r4_instance(seed);
        let direct = a_bounded_direct(&k).unwrap();
        assert_eq!(a_bounded_characterized(&k).unwrap().0, direct, "seed {seed}");
        assert!(ray_sampling_agrees(&k, direct, seed), "seed {seed}");
        positives += direct as usize;
    }
    assert!(positives >= 50);
}

#[test]
fn fiber_examples() {
    let f = fiber_set(&orthant(3)).unwrap();
    assert_eq!(f.shadow, f.slice);
    let raised = poly(3, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[-1, 0, 0, 1]]);
    let f = fiber_set(&raised).unwrap();
    assert!(f.slice.is_empty() && !f.a_set_bounded && f.witness.is_none());
    let f = fiber_set(&wedge()).unwrap();
    assert!(f.a_set_bounded && f.witness.is_some());
}

proptest! {
    #![proptest_config(config(150))]

    #[test]
    fn placements_pass_their_predicates(seed in any::<u64>()) {
        let k = placeable(seed);
        let first = place_first(&k, None).unwrap();
        let second = place_second(&k, None).unwrap();
        prop_assert!(first.map.is_invertible() && second.map.is_invertible());
        prop_assert!(first.checks.all() && second.checks.all());
        prop_assert!(first.verify(&k).unwrap());
        prop_assert!(second.verify(&k).unwrap());
        prop_assert_eq!(first.facet_index, second.facet_index);
        // independent re-evaluation on the image
        let image = k.transform(&first.map).unwrap();
        let idx = first.image_facet(&image).unwrap();
        prop_assert!(is_first_trimming(&image, idx).unwrap().all());
    }

    #[test]
    fn triangle_contains_a_set(seed in any::<u64>()) {
        let k = placeable(seed);
        prop_assume!(k.rays().len() > 1);
        let c = place_second(&k, None).unwrap();
        let t = c.trace.triangle.clone().unwrap();
        let image = k.transform(&c.map).unwrap();
        prop_assert!(t.contains_a_set(&image).unwrap());
        // grid points of the set all lie in the triangle
        let f = fiber_set(&image).unwrap();
        let tri = t.polygon().unwrap();
        for i in 0..25 {
            for j in 0..25 {
                let a = Vector::new(vec![q(i, 2), q(j, 2)]);
                if f.in_a_set(&a) {
                    prop_assert!(tri.contains(&a));
                }
            }
        }
    }

    #[test]
    fn predicates_ignore_redundant_constraints(seed in any::<u64>(), shift in 1i64..5) {
        let k = placeable(seed);
        let c = place_second(&k, None).unwrap();
        let image = k.transform(&c.map).unwrap();
        let mut hs: Vec<HalfSpace> = image.facets().to_vec();
        let extra: Vec<HalfSpace> = hs.iter().map(|h| HalfSpace::new(h.offset() + rat(shift), h.normal().clone())).collect();
        hs.extend(extra);
        hs.reverse();
        let again = Polyhedron::from_halfspaces(3, &hs).unwrap();
        prop_assert_eq!(&again, &image);
        for i in 0..image.facets().len() {
            prop_assert_eq!(is_first_trimming(&image, i).unwrap(), is_first_trimming(&again, i).unwrap());
            prop_assert_eq!(is_second_trimming(&image, i).unwrap(), is_second_trimming(&again, i).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn schedules_eliminate_one_facet_per_stage(seed in any::<u64>()) {
        let k = placeable(seed);
        let s = schedule(&k).unwrap();
        prop_assert!(s.verify().unwrap());
        let mut count = k.facets().len();
        for stage in &s.stages {
            prop_assert_eq!(stage.polyhedron.facets().len(), count);
            count -= 1;
        }
        prop_assert_eq!(s.last.facets().len(), count);
        match &s.terminal {
            Terminal::Trivial { facets } => prop_assert!(*facets <= 1),
            Terminal::DegenerateProduct { factor, lineality } => {
                prop_assert!(s.last.is_degenerate() && !s.last.is_layer());
                prop_assert!(!factor.is_degenerate() && !lineality.is_empty());
            }
            Terminal::Bounded => prop_assert!(false, "unbounded input cannot end bounded"),
        }
    }
}

#[test]
fn schedule_of_wedge_has_verified_stages() {
    let s = schedule(&wedge()).unwrap();
    assert!((1..=4).contains(&s.stages.len()));
    assert!(s.verify().unwrap());
    for stage in &s.stages {
        assert!(stage.first.checks.all() && stage.second.checks.all());
    }
}

#[test]
fn random_instances_cover_both_branches() {
    let mut branches = std::collections::BTreeSet::new();
    for seed in 0..40 {
        let k = placeable(seed);
        branches.insert(place_first(&k, None).unwrap().trace.branch);
    }
    assert_eq!(branches.len(), 2);
}
