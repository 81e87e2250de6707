//! Exact decision of sectional-projection existence for 3-polytopes.
//!
//! Fix `v` and write points as `(y, t)` with `y` in the quotient by `v` and
//! `t` the coordinate along `v`; planes non-parallel to `v` are graphs
//! `t = h(y)` of affine `h`. `(v, H)` works iff `lo <= h <= hi` on the shadow,
//! where `[lo(y), hi(y)]` is the fiber. Both `lo - h` and `h - hi` are convex,
//! so checking the shadow vertices suffices: a 3-variable LP. When feasible,
//! its feasible set is a polytope, and one of its vertices makes three
//! constraints tight at non-collinear shadow vertices, so some valid plane
//! passes through three non-collinear vertices of `K`. Enumerating those
//! planes and solving for `v` (an intersection of polygons) is complete.
//! See `docs/sectional-certifier.md`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{has_sectional_projection_at, hyperplane_json, SectionalProjectionReport, Verdict};
use crate::error::{Error, Result};
use crate::exactgeom::{linalg, HalfSpace, Hyperplane, LinearProgram, Vector};
use crate::polyhedron::Polyhedron;
use crate::Rat;
use num_traits::{Signed, Zero};

/// A direction along the intersection line of two facet planes, with the
/// plane found by the transversal LP if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionCandidate {
    pub facets: (usize, usize),
    pub direction: Vector,
    pub plane: Option<Hyperplane>,
}

/// A plane through at least three non-collinear vertices, with a valid
/// direction if the direction polygons intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCandidate {
    pub vertices: Vec<usize>,
    pub hyperplane: Hyperplane,
    pub above: usize,
    pub below: usize,
    pub direction: Option<Vector>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertifierTrace {
    pub direction_candidates: Vec<DirectionCandidate>,
    pub plane_candidates: Vec<PlaneCandidate>,
}

impl CertifierTrace {
    pub fn to_json(&self) -> Value {
        let dirs: Vec<Value> = self
            .direction_candidates
            .iter()
            .map(|c| {
                json!({
                    "facets": [c.facets.0, c.facets.1],
                    "direction": c.direction.to_strings(),
                    "plane": c.plane.as_ref().map(hyperplane_json),
                })
            })
            .collect();
        let planes: Vec<Value> = self
            .plane_candidates
            .iter()
            .map(|c| {
                json!({
                    "vertices": c.vertices,
                    "hyperplane": hyperplane_json(&c.hyperplane),
                    "above": c.above,
                    "below": c.below,
                    "direction": c.direction.as_ref().map(|d| d.to_strings()),
                })
            })
            .collect();
        json!({ "direction_candidates": dirs, "plane_candidates": planes })
    }
}

fn check_polytope(k: &Polyhedron) -> Result<()> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !k.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if !k.is_bounded() {
        return Err(Error::pre("sectional projections are decided for bounded polyhedra only"));
    }
    Ok(())
}

/// For a fixed direction `v`, a plane `H` making `(v, H)` a sectional
/// projection of the polytope `K`, if one exists.
pub fn transversal_plane(k: &Polyhedron, v: &Vector) -> Result<Option<Hyperplane>> {
    check_polytope(k)?;
    let n = k.ambient_dim();
    Error::check_dim(n, v.dim())?;
    if v.is_zero() {
        return Err(Error::pre("projection direction must be nonzero"));
    }
    let us: Vec<Vector> = linalg::nullspace(&[v.0.clone()], n).into_iter().map(Vector::new).collect();
    let vv = v.dot(v);
    let coords: Vec<(Vector, Rat)> = k
        .vertices()
        .iter()
        .map(|x| (Vector::new(us.iter().map(|u| u.dot(x)).collect()), v.dot(x) / &vv))
        .collect();
    let ys: Vec<Vector> = coords.iter().map(|(y, _)| y.clone()).collect();
    let hull: Vec<Vector> = if n == 3 {
        hull_2d(&ys)
    } else {
        Polyhedron::from_generators(n - 1, &ys, &[], &[])?.vertices().to_vec()
    };
    let one = Rat::from_integer(1.into());
    let mut rows = Vec::with_capacity(hull.len());
    for s in &hull {
        let ts = coords.iter().filter(|(y, _)| y == s).map(|(_, t)| t);
        let lo = ts.clone().min().expect("shadow vertex is a projected vertex").clone();
        let hi = ts.max().expect("shadow vertex is a projected vertex").clone();
        let row = Vector::new(std::iter::once(one.clone()).chain(s.iter().cloned()).collect());
        rows.push((row, lo, hi));
    }
    // n vertices of the shadow with point fibers pin the plane down; distinct
    // vertices of a convex polygon are never collinear
    let pinned: Vec<&(Vector, Rat, Rat)> = rows.iter().filter(|(_, lo, hi)| lo == hi).take(n).collect();
    let z = if n == 3 && pinned.len() == 3 {
        let m: Vec<Vec<Rat>> = pinned.iter().map(|(r, _, _)| r.0.clone()).collect();
        let inv = linalg::inverse(&m).ok_or(Error::Singular)?;
        let rhs: Vec<Rat> = pinned.iter().map(|(_, t, _)| t.clone()).collect();
        let z = Vector::new(linalg::mat_vec(&inv, &rhs));
        if !rows.iter().all(|(r, lo, hi)| {
            let t = r.dot(&z);
            lo <= &t && &t <= hi
        }) {
            return Ok(None);
        }
        z
    } else {
        let mut constraints = Vec::with_capacity(2 * rows.len());
        for (row, lo, hi) in rows {
            constraints.push(HalfSpace::new(-lo, row.clone()));
            constraints.push(HalfSpace::new(hi, -row));
        }
        match LinearProgram::feasibility(n, constraints).solve()?.point() {
            Some(z) => z.clone(),
            None => return Ok(None),
        }
    };
    let mut normal = v.scale(&(Rat::from_integer(1.into()) / &vv));
    for (u, b) in us.iter().zip(&z.0[1..]) {
        normal = normal.add_scaled(&-b.clone(), u);
    }
    let h = Hyperplane::new(-z[0].clone(), normal)?;
    if !has_sectional_projection_at(k, v, &h)? {
        return Err(Error::Verification("transversal plane fails the exact check".into()));
    }
    Ok(Some(h))
}

/// For a fixed plane `H`, a direction `v` making `(v, H)` a sectional
/// projection of `K`, if one exists. Normalizing `n . v = 1`, a vertex `x`
/// off `H` allows exactly the polygon `(x - K∩H) / g(x)`.
pub fn plane_candidate_directions(k: &Polyhedron, h: &Hyperplane) -> Result<Option<Vector>> {
    check_polytope(k)?;
    Error::check_dim(k.ambient_dim(), h.dim())?;
    let n = k.ambient_dim();
    let slice = k.intersect_hyperplane(h)?;
    if slice.is_empty() {
        return Ok(None);
    }
    let mut acc: Option<Polyhedron> = None;
    for x in k.vertices() {
        let g = h.eval(x);
        if g.is_zero() {
            continue;
        }
        let pts: Vec<Vector> = slice.points().iter().map(|y| (x - y).scale(&(Rat::from_integer(1.into()) / &g))).collect();
        let q = Polyhedron::from_generators(n, &pts, &[], &[])?;
        let next = match acc {
            Some(a) => a.intersect(&q)?,
            None => q,
        };
        if next.is_empty() {
            return Ok(None);
        }
        acc = Some(next);
    }
    let acc = acc.ok_or(Error::NotFullDimensional)?;
    let v = Vector::average(acc.points()).primitive();
    if !has_sectional_projection_at(k, &v, h)? {
        return Err(Error::Verification("direction from the polygon intersection fails the exact check".into()));
    }
    Ok(Some(v))
}

/// Vertices of the convex hull of planar points (monotone chain).
fn hull_2d(points: &[Vector]) -> Vec<Vector> {
    let mut pts: Vec<Vector> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Vector, a: &Vector, b: &Vector| {
        (a[0].clone() - &o[0]) * (b[1].clone() - &o[1]) - (a[1].clone() - &o[1]) * (b[0].clone() - &o[0])
    };
    let mut chain: Vec<Vector> = Vec::with_capacity(2 * pts.len());
    for pass in [pts.clone(), pts.iter().rev().cloned().collect()] {
        let start = chain.len();
        for p in pass {
            while chain.len() >= start + 2 && !turn(&chain[chain.len() - 2], &chain[chain.len() - 1], &p).is_positive() {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
    }
    chain
}

fn direction_candidates(k: &Polyhedron) -> Vec<DirectionCandidate> {
    let fs = k.facets();
    let mut seen = BTreeMap::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            let d = fs[i].normal().cross(fs[j].normal());
            if !d.is_zero() {
                seen.entry(d.primitive_unsigned()).or_insert((i, j));
            }
        }
    }
    let mut out: Vec<DirectionCandidate> =
        seen.into_iter().map(|(direction, facets)| DirectionCandidate { facets, direction, plane: None }).collect();
    out.sort_by(|a, b| a.facets.cmp(&b.facets));
    out
}

fn plane_candidates(k: &Polyhedron) -> Result<Vec<PlaneCandidate>> {
    let vs = k.vertices();
    let mut seen: BTreeMap<Hyperplane, (usize, usize, usize)> = BTreeMap::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            for c in b + 1..vs.len() {
                let normal = (&vs[b] - &vs[a]).cross(&(&vs[c] - &vs[a]));
                if normal.is_zero() {
                    continue;
                }
                seen.entry(Hyperplane::through(&vs[a], normal)?).or_insert((a, b, c));
            }
        }
    }
    let mut out: Vec<((usize, usize, usize), PlaneCandidate)> = seen
        .into_iter()
        .map(|(hyperplane, triple)| {
            let vals: Vec<Rat> = vs.iter().map(|x| hyperplane.eval(x)).collect();
            let cand = PlaneCandidate {
                vertices: (0..vs.len()).filter(|&i| vals[i].is_zero()).collect(),
                above: vals.iter().filter(|g| g.is_positive()).count(),
                below: vals.iter().filter(|g| g.is_negative()).count(),
                hyperplane,
                direction: None,
            };
            (triple, cand)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, c)| c).collect())
}

/// Decides whether the 3-polytope `K` has a sectional projection.
///
/// Facet-line directions are tried first with the transversal LP; the plane
/// enumeration is then run in full and is what the verdict rests on. A
/// direction hit without any plane hit is reported as a verification error.
pub fn certify_no_sectional_projections(k: &Polyhedron) -> Result<SectionalProjectionReport> {
    Error::check_dim(3, k.ambient_dim())?;
    check_polytope(k)?;
    let dirs: Vec<DirectionCandidate> = direction_candidates(k)
        .into_par_iter()
        .map(|mut c| {
            c.plane = transversal_plane(k, &c.direction)?;
            Ok(c)
        })
        .collect::<Result<_>>()?;
    let planes: Vec<PlaneCandidate> = plane_candidates(k)?
        .into_par_iter()
        .map(|mut c| {
            c.direction = plane_candidate_directions(k, &c.hyperplane)?;
            Ok(c)
        })
        .collect::<Result<_>>()?;
    let from_dirs = dirs.iter().find_map(|c| c.plane.clone().map(|h| (c.direction.clone(), h)));
    let from_planes = planes.iter().find_map(|c| c.direction.clone().map(|v| (v, c.hyperplane.clone())));
    if from_dirs.is_some() && from_planes.is_none() {
        return Err(Error::Verification("a facet-line direction works but no vertex plane does".into()));
    }
    // report the sparsest witness so symmetric inputs give the obvious pair
    let nnz = |v: &Vector| v.iter().filter(|c| !c.is_zero()).count();
    let simplest = dirs
        .iter()
        .filter_map(|c| c.plane.clone().map(|h| (c.direction.clone(), h)))
        .chain(planes.iter().filter_map(|c| c.direction.clone().map(|v| (v, c.hyperplane.clone()))))
        .enumerate()
        .min_by_key(|(i, (v, h))| (nnz(v) + nnz(h.normal()), v.iter().position(|c| !c.is_zero()), *i))
        .map(|(_, w)| w);
    debug_assert_eq!(simplest.is_some(), from_dirs.or(from_planes).is_some());
    let verdict = match simplest {
        Some((direction, hyperplane)) => Verdict::Witness { direction, hyperplane },
        None => Verdict::NoneCertified,
    };
    Ok(SectionalProjectionReport { verdict, trace: CertifierTrace { direction_candidates: dirs, plane_candidates: planes } })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub samples: usize,
    pub witnesses: usize,
    pub first_witness: Option<(Vector, Hyperplane)>,
}

fn sample_direction(rng: &mut ChaCha8Rng, i: usize, vs: &[Vector]) -> Vector {
    let small = |rng: &mut ChaCha8Rng, r: i64| Vector::new((0..3).map(|_| Rat::from_integer(rng.gen_range(-r..=r).into())).collect());
    loop {
        let d = match i % 4 {
            0 | 1 => small(rng, 12),
            _ => {
                let a = rng.gen_range(0..vs.len());
                let b = rng.gen_range(0..vs.len());
                let edge = &vs[a] - &vs[b];
                if i % 4 == 2 {
                    edge
                } else {
                    &edge.scale(&Rat::from_integer(6.into())) + &small(rng, 1)
                }
            }
        };
        if !d.is_zero() {
            return d.primitive();
        }
    }
}

/// Samples directions (uniform small integers, vertex differences and their
/// neighbours) and pairs each with the plane from the transversal LP. Every
/// hit is confirmed by the exact checker. Deterministic in `seed`.
pub fn falsification_sweep(k: &Polyhedron, samples: usize, seed: u64) -> Result<SweepReport> {
    Error::check_dim(3, k.ambient_dim())?;
    check_polytope(k)?;
    let vs = k.vertices();
    let hits: Vec<Option<(Vector, Hyperplane)>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64));
            let v = sample_direction(&mut rng, i, vs);
            Ok(transversal_plane(k, &v)?.map(|h| (v, h)))
        })
        .collect::<Result<_>>()?;
    let witnesses = hits.iter().filter(|h| h.is_some()).count();
    let first_witness = hits.into_iter().flatten().next();
    Ok(SweepReport { samples, witnesses, first_witness })
}
