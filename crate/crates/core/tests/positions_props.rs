mod common;

use common::*;
use num_traits::Zero;
use polytrim::polyhedron::random::{random_polyhedron, RandomConfig};
use polytrim::positions::*;
use polytrim::{HalfSpace, Hyperplane, Rat, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn sections_beyond_the_vertices() {
    let mut with_parallel = 0;
    for seed in 0..200u64 {
        let (k, f) = section_instance(seed);
        let s = section_beyond(&k, &f).unwrap();
        let c = s.check(&k).unwrap();
        assert!(c.all(), "seed {seed}: {c:?}");
        // brute-force vertices of the section from the raw inequalities
        let mut hs: Vec<HalfSpace> = k.halfspaces();
        let (a, b) = s.plane.sides();
        hs.push(a);
        hs.push(b);
        assert_eq!(brute_vertices(k.ambient_dim(), &hs), s.section.vertices().to_vec(), "seed {seed}");
        if s.parallel_edges.is_empty() {
            assert_eq!(c.lower_part_bounded, Some(true));
        } else {
            with_parallel += 1;
        }
        assert!(k.points().iter().all(|p| f.dot(p) < s.level));
    }
    assert!(with_parallel >= 20);
}

#[test]
fn compactification_of_normalized_polyhedra() {
    let cfg = RandomConfig::unbounded_nondegenerate(3);
    for seed in 0..100u64 {
        let k = random_polyhedron(seed, &cfg).unwrap();
        let t = fu_normalize(&k).unwrap();
        let kn = k.transform(&t).unwrap();
        assert!(is_fu_normalized(&kn));
        let (kp, e) = compactify(&kn).unwrap();
        assert!(kp.is_bounded());
        // E' is cut out by the supporting hyperplane x_n = 0
        let n = kn.ambient_dim();
        let xn = Vector::unit(n, n - 1);
        assert_eq!(kp.minimize(&xn, &Rat::zero()).unwrap(), Some(Rat::zero()));
        let on: Vec<usize> = (0..kp.points().len()).filter(|&i| kp.points()[i][n - 1].is_zero()).collect();
        assert_eq!(e.points, on);
        assert_eq!(e.dim + 1, kn.recession_cone().unwrap().dim());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let p = sample_point(&kn, &mut rng);
            let lam: Vec<Vec<Rat>> =
                (0..3).map(|_| kn.rays().iter().map(|_| q(rng.gen_range(0..5), rng.gen_range(1..3))).collect()).collect();
            assert!(cone_identity_holds(&kn, &kp, &e, &p, &lam).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn fu_functional_is_positive_on_rays() {
    let cfg = RandomConfig::unbounded_nondegenerate(3);
    for seed in 0..60u64 {
        let k = random_polyhedron(seed, &cfg).unwrap();
        let h = k.recession_cone().unwrap().polyhedron().facets().iter().fold(Vector::zeros(3), |a, h| &a + h.normal());
        let w = is_fu_position(&k, &h).unwrap().expect("interior functional gives a facing-upwards position");
        for r in k.rays() {
            assert!(w.functional.dot(r) > Rat::zero());
        }
        for p in k.points() {
            assert!(w.sawing_plane.eval(p) != Rat::zero());
        }
    }
}

#[test]
fn saw_through_the_orthant_corner() {
    let k = orthant(3);
    let saw = Hyperplane::new(rat(-1), v(&[1, 1, 1])).unwrap();
    let w = Hyperplane::new(rat(0), v(&[0, 0, 1])).unwrap();
    let hs = supporting_from_saw(&k, &saw, &w, &v(&[1, 0, 0])).unwrap();
    assert!(k.points().iter().all(|p| hs.contains(p)));
    assert!(k.rays().iter().all(|r| hs.normal().dot(r) >= Rat::zero()));
    assert!(hs.eval(&v(&[1, 0, 0])).is_zero());
}

#[test]
fn sections_reject_downward_edges() {
    let k = orthant(3);
    assert!(section_beyond(&k, &v(&[1, -1, 1])).is_err());
    assert!(section_beyond(&unit_cube(), &v(&[0, 0, 1])).is_err());
}
