mod common;

use common::*;
use num_traits::Zero;
use polytrim::exactgeom::{linalg, LinearProgram, LpOutcome};
use polytrim::polyhedron::random::{random_polyhedron, RandomConfig};
use polytrim::{HalfSpace, Hyperplane, Polyhedron, Rat, Vector};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn any_random(seed: u64, dim: usize, small: bool) -> Polyhedron {
    let mut cfg = RandomConfig::new(dim);
    cfg.require_full_dim = false;
    cfg.small_integers = small;
    random_polyhedron(seed, &cfg).expect("some nonempty polyhedron")
}

#[test]
fn cube_vertices_match_brute_force() {
    let k = unit_cube();
    let brute = brute_vertices(3, &k.facets().to_vec());
    assert_eq!(brute.len(), 8);
    assert_eq!(k.vertices().to_vec(), brute);
}

#[test]
fn octahedron_facets_match_sign_patterns() {
    let pts: Vec<Vector> = (0..3).flat_map(|i| [Vector::unit(3, i), -Vector::unit(3, i)]).collect();
    let k = Polyhedron::from_generators(3, &pts, &[], &[]).unwrap();
    let mut expected = Vec::new();
    for s in 0..8 {
        let signs: Vec<i64> = (0..3).map(|b| if s >> b & 1 == 1 { -1 } else { 1 }).collect();
        expected.push(hs(&[1, -signs[0], -signs[1], -signs[2]]));
    }
    expected.sort();
    assert_eq!(k.facets().to_vec(), expected);
    assert_eq!(k.faces(2).unwrap().len(), 8);
}

#[test]
fn wedge_recession_cone_matches_brute_rays() {
    let k = wedge();
    let brute = brute_rays(3, &k.facets().to_vec());
    let mut rays = k.rays().to_vec();
    rays.sort();
    assert_eq!(rays, brute);
}

#[test]
fn product_with_line_has_product_cone() {
    // P x R with P the wedge's planar analogue {x1 >= 0, x2 >= 0, x1 + x2 >= 1}
    let k = poly(3, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 1, 1]]);
    let c = k.recession_cone().unwrap();
    assert_eq!(c.lineality(), &[v(&[1, 0, 0])]);
    let mut g = c.generators().to_vec();
    g.sort();
    assert_eq!(g, vec![v(&[0, 0, 1]), v(&[0, 1, 0])]);
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn double_description_round_trip(seed in any::<u64>(), dim in 2usize..=4, small in any::<bool>()) {
        let k = any_random(seed, dim, small);
        let g = Polyhedron::from_generators(dim, k.points(), k.rays(), k.lineality()).unwrap();
        prop_assert_eq!(&g, &k);
        let h = Polyhedron::from_halfspaces(dim, &k.halfspaces()).unwrap();
        prop_assert_eq!(&h, &k);
    }
}

proptest! {
    #![proptest_config(config(150))]

    #[test]
    fn vertices_match_brute_force(seed in any::<u64>(), dim in 2usize..=3) {
        let mut cfg = RandomConfig::new(dim);
        cfg.require_nondegenerate = true;
        let k = random_polyhedron(seed, &cfg).unwrap();
        prop_assert_eq!(k.vertices().to_vec(), brute_vertices(dim, k.facets()));
    }

    #[test]
    fn facets_are_irredundant(seed in any::<u64>(), dim in 2usize..=4) {
        let k = any_random(seed, dim, false);
        for i in 0..k.facets().len() {
            let relaxed = k.without_facet(i).unwrap();
            prop_assert!(relaxed != k);
        }
        // facet bijection for full-dimensional sets
        if k.is_full_dimensional() {
            prop_assert_eq!(k.faces(dim - 1).map(|f| f.len()).unwrap_or(0), k.facets().len());
        }
    }

    #[test]
    fn unbounded_edges_are_extreme_rays(seed in any::<u64>(), dim in 2usize..=4) {
        let k = random_polyhedron(seed, &RandomConfig::unbounded_nondegenerate(dim)).unwrap();
        let mut dirs: Vec<Vector> = k.unbounded_edges().iter().map(|e| k.rays()[e.rays[0]].clone()).collect();
        dirs.sort();
        dirs.dedup();
        let cone = k.recession_cone().unwrap();
        let mut rays = cone.generators().to_vec();
        rays.sort();
        prop_assert_eq!(&dirs, &rays);
        prop_assert_eq!(rays, brute_rays(dim, &cone.halfspaces()));
    }

    #[test]
    fn motzkin_sum_recovers_polyhedron(seed in any::<u64>(), dim in 2usize..=4) {
        let k = random_polyhedron(seed, &RandomConfig::unbounded_nondegenerate(dim)).unwrap();
        let (k0, c) = k.motzkin_decompose().unwrap();
        prop_assert!(k0.is_bounded());
        prop_assert_eq!(k0.plus_cone(&c).unwrap(), k);
    }

    #[test]
    fn lp_agrees_with_vertex_enumeration(seed in any::<u64>(), dim in 1usize..=3, f in prop::collection::vec(-4i64..=4, 3), max in any::<bool>()) {
        let mut cfg = RandomConfig::bounded(dim);
        cfg.max_halfspaces = 8;
        cfg.require_full_dim = false;
        let k = random_polyhedron(seed, &cfg).unwrap();
        let cs = k.halfspaces();
        let f = Vector::from_ints(&f[..dim]);
        let lp = if max { LinearProgram::maximize(cs.clone(), f.clone()) } else { LinearProgram::minimize(cs.clone(), f.clone()) };
        let out = lp.solve().unwrap();
        let LpOutcome::Optimal { value, point } = out else { panic!("bounded feasible LP") };
        prop_assert!(k.contains(&point));
        prop_assert_eq!(Some(value), brute_extremum(dim, &cs, &f, max));
    }

    #[test]
    fn projection_matches_fiber_feasibility(seed in any::<u64>(), dim in 2usize..=4) {
        let k = any_random(seed, dim, false);
        let shadow = k.project(dim - 1).unwrap();
        let mut rng_state = seed;
        for _ in 0..200 {
            // small deterministic sample of base points
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a: Vec<Rat> = (0..dim - 1).map(|i| q(((rng_state >> (8 * i + 8)) % 21) as i64 - 10, 2)).collect();
            let mut base = a.clone();
            base.push(Rat::zero());
            let base = Vector(base);
            let mut cs = k.halfspaces();
            for (i, ai) in a.iter().enumerate() {
                let h = Hyperplane::coordinate(dim, i, ai.clone());
                let (p, m) = h.sides();
                cs.push(p);
                cs.push(m);
            }
            let feasible = LinearProgram::feasibility(dim, cs).solve().unwrap().is_feasible();
            prop_assert_eq!(shadow.contains(&base), feasible);
        }
    }

    #[test]
    fn transform_round_trip(seed in any::<u64>(), m in prop::collection::vec(-3i64..=3, 9), t in prop::collection::vec(-3i64..=3, 3)) {
        let rows: Vec<Vector> = m.chunks(3).map(Vector::from_ints).collect();
        let map = polytrim::AffineMap::from_functionals(rows, t.iter().map(|&x| rat(x)).collect()).unwrap();
        prop_assume!(map.is_invertible());
        let k = any_random(seed, 3, false);
        let img = k.transform(&map).unwrap();
        let back = img.transform(&map.invert().unwrap()).unwrap();
        prop_assert_eq!(&back, &k);
        // image of each facet inequality is valid and tight on the image
        for h in k.facets() {
            let ih: HalfSpace = map.image_halfspace(h).unwrap();
            prop_assert!(img.points().iter().all(|p| ih.contains(p)));
        }
    }
}

#[test]
fn empty_and_whole_space_behave() {
    let e: Polyhedron = poly(2, &[&[-1, 1, 0], &[0, -1, 0]]);
    assert!(e.is_empty() && e.vrep().is_err());
    let w: Polyhedron = Polyhedron::whole_space(3);
    assert!(w.is_degenerate() && !w.is_layer());
    assert_eq!(linalg::rank(&w.lineality().iter().map(|l| l.0.clone()).collect::<Vec<_>>(), 3), 3);
    assert!(w.rays().is_empty() && w.facets().is_empty());
}
