//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the double description code so they can check it.

#![allow(dead_code)]

use itertools::Itertools;
use num_traits::{Signed, Zero};
use polytrim::exactgeom::linalg;
use polytrim::{HalfSpace, Polyhedron, Rat, Vector};

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

pub fn hs(c: &[i64]) -> HalfSpace {
    HalfSpace::from_ints(c)
}

pub fn poly(n: usize, cs: &[&[i64]]) -> Polyhedron {
    Polyhedron::from_halfspaces(n, &cs.iter().map(|c| hs(c)).collect::<Vec<_>>()).unwrap()
}

pub fn wedge() -> Polyhedron {
    poly(3, &[&[0, 0, 0, -1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[-1, 1, 1, 1]])
}

pub fn square_column() -> Polyhedron {
    poly(3, &[&[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, -1]])
}

pub fn orthant(n: usize) -> Polyhedron {
    let hs: Vec<HalfSpace> = (0..n).map(|i| HalfSpace::new(rat(0), Vector::unit(n, i))).collect();
    Polyhedron::from_halfspaces(n, &hs).unwrap()
}

pub fn unit_cube() -> Polyhedron {
    poly(3, &[&[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 0], &[1, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, -1]])
}

/// Unique solution of the square system `a . x = -a0` for the chosen rows.
fn solve(rows: &[&HalfSpace], n: usize) -> Option<Vector> {
    let m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|h| {
            let mut r = h.normal().0.clone();
            r.push(-h.offset().clone());
            r
        })
        .collect();
    let (red, piv) = linalg::rref(&m, n + 1);
    if piv.len() != n || piv.contains(&n) {
        return None;
    }
    Some(Vector(red.iter().map(|r| r[n].clone()).collect()))
}

/// Vertices of `{x : hs}` by solving every `n`-subset of constraints.
pub fn brute_vertices(n: usize, hs: &[HalfSpace]) -> Vec<Vector> {
    let mut out: Vec<Vector> = hs
        .iter()
        .combinations(n)
        .filter_map(|rows| solve(&rows, n))
        .filter(|x| hs.iter().all(|h| h.contains(x)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Extreme rays of `{d : a . d >= 0}` by solving every `(n-1)`-subset of
/// homogeneous equations, for pointed cones.
pub fn brute_rays(n: usize, hs: &[HalfSpace]) -> Vec<Vector> {
    let normals: Vec<Vec<Rat>> = hs.iter().map(|h| h.normal().0.clone()).collect();
    let mut out = Vec::new();
    for rows in normals.iter().cloned().combinations(n - 1) {
        let null = linalg::nullspace(&rows, n);
        if null.len() != 1 {
            continue;
        }
        let d = Vector(null[0].clone());
        for cand in [d.clone(), -d] {
            if normals.iter().all(|a| !Vector(a.clone()).dot(&cand).is_negative()) {
                out.push(cand.primitive());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Extremum of `f` over the feasible set by vertex enumeration, assuming the
/// set is bounded and nonempty.
pub fn brute_extremum(n: usize, hs: &[HalfSpace], f: &Vector, max: bool) -> Option<Rat> {
    let vals = brute_vertices(n, hs).into_iter().map(|x| f.dot(&x));
    if max {
        vals.max()
    } else {
        vals.min()
    }
}

pub fn is_zero_vec(x: &[Rat]) -> bool {
    x.iter().all(Zero::is_zero)
}

use polytrim::polyhedron::random::{random_polyhedron, random_polyhedron_with, RandomConfig};
use polytrim::trimming::{a_bounded_direct, fiber_set, place_first, place_second};
use polytrim::{AffineMap, Hyperplane};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random invertible `(x', x_n) -> (A x' + b, s x_n)`: it maps vertical
/// fibers to vertical fibers and the base hyperplane to itself, so it keeps
/// the boundedness of the set of base points.
pub fn fiber_preserving_map(rng: &mut ChaCha8Rng, n: usize) -> AffineMap {
    loop {
        let mut rows = Vec::new();
        for _ in 0..n - 1 {
            let mut r: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-2..=2)).collect();
            r.push(0);
            rows.push(Vector::from_ints(&r));
        }
        let s = [q(1, 2), rat(1), rat(2), rat(3)][rng.gen_range(0..4)].clone();
        rows.push(Vector::unit(n, n - 1).scale(&s));
        let mut t: Vec<Rat> = (0..n - 1).map(|_| q(rng.gen_range(-6..=6), rng.gen_range(1..=2))).collect();
        t.push(rat(0));
        let m = AffineMap::from_functionals(rows, t).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

/// Bounded random polytope plus one ray: every unbounded edge is parallel.
pub fn parallel_edge_polyhedron(seed: u64) -> Polyhedron {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cfg = RandomConfig::bounded(3);
    cfg.small_integers = seed % 3 == 0;
    let p = random_polyhedron_with(&mut rng, &cfg).unwrap();
    let ray = loop {
        let r: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
        if r.iter().any(|&x| x != 0) {
            break Vector::from_ints(&r);
        }
    };
    let c = polytrim::polyhedron::RecessionCone::from_generators(3, &[ray], &[]).unwrap();
    p.plus_cone(&c).unwrap()
}

/// Random non-degenerate unbounded full-dimensional polyhedron in `R^3`,
/// alternating between general instances and parallel-edge ones.
pub fn placeable(seed: u64) -> Polyhedron {
    if seed % 4 == 3 {
        return parallel_edge_polyhedron(seed);
    }
    let mut cfg = RandomConfig::unbounded_nondegenerate(3);
    cfg.small_integers = seed % 2 == 0;
    random_polyhedron(seed, &cfg).unwrap()
}

/// Unbounded pointed instance with a section functional: even seeds use the
/// sum of the recession cone's facet normals (every unbounded edge crossed),
/// odd seeds a single facet normal (some edges parallel).
pub fn section_instance(seed: u64) -> (Polyhedron, Vector) {
    let n = if seed % 5 == 4 { 4 } else { 3 };
    let mut cfg = RandomConfig::unbounded_nondegenerate(n);
    cfg.small_integers = seed % 3 == 0;
    let k = random_polyhedron(seed, &cfg).unwrap();
    let cone = k.recession_cone().unwrap();
    let facets = cone.polyhedron().facets();
    let f = if seed % 2 == 0 || facets.is_empty() {
        facets.iter().fold(Vector::zeros(n), |acc, h| &acc + h.normal())
    } else {
        facets[(seed as usize / 2) % facets.len()].normal().clone()
    };
    (k, f)
}

/// A point of `K`: a random convex combination of vertices plus a random
/// nonnegative combination of rays.
pub fn sample_point(k: &Polyhedron, rng: &mut ChaCha8Rng) -> Vector {
    let n = k.ambient_dim();
    let w: Vec<i64> = k.points().iter().map(|_| rng.gen_range(0..4)).collect();
    let total: i64 = w.iter().sum::<i64>().max(1);
    let mut x = if w.iter().all(|&c| c == 0) { k.points()[0].clone() } else { Vector::zeros(n) };
    for (c, p) in w.iter().zip(k.points()) {
        x = x.add_scaled(&q(*c, total), p);
    }
    for r in k.rays() {
        x = x.add_scaled(&q(rng.gen_range(0..6), 2), r);
    }
    x
}

/// Either a raw random instance or a placed image moved by a fiber-preserving
/// map, so that both verdicts show up often.
pub fn r3_instance(seed: u64) -> Polyhedron {
    let k = placeable(seed);
    if seed % 2 == 0 {
        return k;
    }
    let cert = if seed % 4 == 1 { place_second(&k, None) } else { place_first(&k, None) }.unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    k.transform(&cert.map).unwrap().transform(&fiber_preserving_map(&mut rng, 3)).unwrap()
}

/// Random instance in `R^4`; odd seeds are resampled until the direct oracle
/// reports a bounded set, to balance the verdicts.
pub fn r4_instance(seed: u64) -> Polyhedron {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cfg = RandomConfig::unbounded_nondegenerate(4);
    cfg.small_integers = true;
    loop {
        let k = random_polyhedron_with(&mut rng, &cfg).unwrap();
        let top = k.points().iter().map(|p| p[3].clone()).max().unwrap();
        let k = k.intersect_halfspace(&HalfSpace::new(top, -Vector::unit(4, 3))).unwrap();
        if k.is_bounded() || k.is_degenerate() {
            continue;
        }
        if seed % 2 == 0 || a_bounded_direct(&k).unwrap() {
            return k;
        }
    }
}

/// Walks out along recession directions of the shadow. Bounded verdict: far
/// points along sampled directions are never in the set. Unbounded verdict:
/// some shadow vertex pushed far along an extreme ray or lineality direction
/// is in the set.
pub fn ray_sampling_agrees(k: &Polyhedron, bounded: bool, seed: u64) -> bool {
    let f = fiber_set(k).unwrap();
    let far = rat(1_000_000);
    let shadow = &f.shadow;
    let mut dirs: Vec<Vector> = shadow.rays().to_vec();
    for l in shadow.lineality() {
        dirs.push(l.clone());
        dirs.push(-l.clone());
    }
    if dirs.is_empty() {
        return bounded;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if bounded {
        let base = Vector::average(shadow.points());
        (0..50).all(|_| {
            let mut d = Vector::zeros(shadow.ambient_dim());
            for g in &dirs {
                d = d.add_scaled(&rat(rng.gen_range(1..4)), g);
            }
            !f.in_a_set(&base.add_scaled(&far, &d))
        })
    } else {
        shadow.points().iter().any(|p| dirs.iter().any(|d| f.in_a_set(&p.add_scaled(&far, d))))
    }
}

/// Independent witness check: `(v, H)` works iff every vertex of the
/// polytope projects into `K`, and `H` is transverse to `v`.
pub fn projects_into(k: &Polyhedron, v: &Vector, h: &Hyperplane) -> bool {
    let nv = h.normal().dot(v);
    nv != rat(0) && k.vertices().iter().all(|x| k.contains(&x.add_scaled(&(-h.eval(x) / &nv), v)))
}

