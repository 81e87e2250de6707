//! Constructive placements of non-degenerate unbounded 3-dimensional
//! polyhedra in first and second trimming position.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{evaluate, TrimmingCertificate, TrimmingKind};
use crate::error::{Error, Result};
use crate::exactgeom::{format_scalar, linalg, AffineMap, HalfSpace, Hyperplane, Vector};
use crate::polyhedron::Polyhedron;
use crate::positions::{compactify, fu_normalize, ray_entry, supporting_from_saw, unbounded_edges};
use crate::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FacetKind {
    Bounded,
    /// Unbounded with a single recession direction.
    ParallelEdges,
    /// Unbounded with a 2-dimensional recession cone.
    NonParallelEdges,
}

/// Containing triangle `{y >= 0, y1/(a+1) + y2/(b+1) <= 1}` for the set of
/// base points of a second trimming placement around an unbounded facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub a: Rat,
    pub b: Rat,
}

impl Triangle {
    /// The closed triangle in `R^2`.
    pub fn polygon(&self) -> Result<Polyhedron> {
        let one = Rat::one();
        let hyp = HalfSpace::new(
            one.clone(),
            Vector::new(vec![-(one.clone() / (self.a.clone() + one.clone())), -(one.clone() / (self.b.clone() + one))]),
        );
        Polyhedron::from_halfspaces(2, &[HalfSpace::from_ints(&[0, 1, 0]), HalfSpace::from_ints(&[0, 0, 1]), hyp])
    }

    /// Shadow in the quadrant and every shadow point on or beyond the
    /// hypotenuse inside the slice: then `shadow \ slice` is in the triangle.
    pub fn contains_a_set(&self, k: &Polyhedron) -> Result<bool> {
        let shadow = k.shadow_last()?;
        let slice = k.slice_last()?;
        let quadrant = Polyhedron::from_halfspaces(2, &[HalfSpace::from_ints(&[0, 1, 0]), HalfSpace::from_ints(&[0, 0, 1])])?;
        if !quadrant.contains_polyhedron(&shadow) {
            return Ok(false);
        }
        let one = Rat::one();
        let beyond = HalfSpace::new(
            -one.clone(),
            Vector::new(vec![one.clone() / (self.a.clone() + one.clone()), one.clone() / (self.b.clone() + one)]),
        );
        let outer = shadow.intersect_halfspace(&beyond)?;
        Ok(outer.is_empty() || slice.contains_polyhedron(&outer))
    }
}

/// Construction record kept with a certificate.
#[derive(Clone, Debug, Default)]
pub struct PlacementTrace {
    pub branch: String,
    pub notes: Vec<(String, String)>,
    pub triangle: Option<Triangle>,
}

impl PlacementTrace {
    fn new(branch: &str) -> Self {
        PlacementTrace { branch: branch.into(), ..Default::default() }
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.push((key.into(), value.to_string()));
    }
}

fn show(v: &Vector) -> String {
    format!("({})", v.to_strings().join(", "))
}

fn require_placeable(k: &Polyhedron) -> Result<()> {
    if k.ambient_dim() != 3 {
        return Err(Error::pre("placements are constructed in R^3 only"));
    }
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !k.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if k.is_degenerate() {
        return Err(Error::Degenerate);
    }
    if k.is_bounded() {
        return Err(Error::Bounded);
    }
    Ok(())
}

fn all_edges_parallel(k: &Polyhedron) -> bool {
    k.rays().len() == 1
}

pub fn classify_facets(k: &Polyhedron) -> Result<Vec<FacetKind>> {
    (0..k.facets().len())
        .map(|i| {
            let f = k.facet_face(i)?;
            Ok(match f.rays.len() {
                0 => FacetKind::Bounded,
                1 => FacetKind::ParallelEdges,
                _ => FacetKind::NonParallelEdges,
            })
        })
        .collect()
}

fn admissible(k: &Polyhedron, kind: FacetKind) -> bool {
    if all_edges_parallel(k) {
        kind == FacetKind::Bounded
    } else {
        kind == FacetKind::NonParallelEdges
    }
}

fn check_hint(k: &Polyhedron, facet: usize) -> Result<FacetKind> {
    if facet >= k.facets().len() {
        return Err(Error::OutOfRange { index: facet, len: k.facets().len() });
    }
    let kind = classify_facets(k)?[facet];
    if admissible(k, kind) {
        return Ok(kind);
    }
    Err(Error::Unsupported(if all_edges_parallel(k) {
        "with all unbounded edges parallel, placements are constructed for bounded facets only".into()
    } else {
        "with non-parallel unbounded edges, placements are constructed for unbounded facets having non-parallel unbounded edges only".into()
    }))
}

/// A facet admissible for both placements: the admissible facet with the
/// lexicographically least canonical normal.
pub fn common_trimming_facet(k: &Polyhedron) -> Result<usize> {
    require_placeable(k)?;
    let kinds = classify_facets(k)?;
    (0..kinds.len())
        .filter(|&i| admissible(k, kinds[i]))
        .min_by(|&i, &j| {
            let (a, b) = (&k.facets()[i], &k.facets()[j]);
            (a.normal(), a.offset()).cmp(&(b.normal(), b.offset()))
        })
        .ok_or_else(|| Error::Verification("no admissible facet".into()))
}

fn certify(k: &Polyhedron, facet: usize, kind: TrimmingKind, map: AffineMap, trace: PlacementTrace) -> Result<TrimmingCertificate> {
    if !map.is_invertible() {
        return Err(Error::Verification("placement map is singular".into()));
    }
    let f = k.facets()[facet].clone();
    let image = k.transform(&map)?;
    let idx = image
        .facet_index(&map.image_halfspace(&f)?)
        .ok_or_else(|| Error::Verification("image of the facet is not a facet".into()))?;
    let checks = evaluate(&image, idx, kind)?;
    if !checks.all() {
        return Err(Error::Verification(format!("placement fails its own predicate: {checks:?}")));
    }
    if let Some(t) = &trace.triangle {
        if !t.contains_a_set(&image)? {
            return Err(Error::Verification("containing triangle check failed".into()));
        }
    }
    Ok(TrimmingCertificate { facet_index: facet, facet: f, kind, map, checks, trace })
}

/// First trimming placement. Without a hint the facet is
/// [`common_trimming_facet`].
pub fn place_first(k: &Polyhedron, facet: Option<usize>) -> Result<TrimmingCertificate> {
    require_placeable(k)?;
    let facet = match facet {
        Some(i) => {
            check_hint(k, i)?;
            i
        }
        None => common_trimming_facet(k)?,
    };
    let (map, trace) = if all_edges_parallel(k) { first_parallel(k, facet)? } else { first_unbounded_facet(k, facet)? };
    certify(k, facet, TrimmingKind::First, map, trace)
}

/// Steps for an unbounded facet with non-parallel unbounded edges, after
/// bringing `K` to facing-upwards position.
fn first_unbounded_facet(k: &Polyhedron, facet: usize) -> Result<(AffineMap, PlacementTrace)> {
    let mut trace = PlacementTrace::new("unbounded-facet");
    let t0 = fu_normalize(k)?;
    let k0 = k.transform(&t0)?;
    let f = t0.image_halfspace(&k.facets()[facet])?;
    let fi = k0.facet_index(&f).ok_or_else(|| Error::Verification("normalized facet lost".into()))?;

    // Step 1: the face at infinity of the compactification
    let (_, e) = compactify(&k0)?;
    trace.note("face_at_infinity_dim", e.dim);

    // Step 2: saw high enough that every point of G enters F below it along w
    let (a0, a) = (f.offset().clone(), f.normal().clone());
    let ff = k0.facet_face(fi)?.polyhedron(&k0);
    let mut w = Vector::zeros(3);
    for r in ff.rays() {
        w = &w + r;
    }
    let mut g_points = Vec::new();
    for edge in unbounded_edges(&k0) {
        let av = a.dot(&edge.direction);
        if !av.is_zero() {
            let t = -f.eval(&edge.vertex) / av;
            g_points.push(edge.vertex.add_scaled(&t, &edge.direction));
        }
    }
    let mut level = k0.points().iter().map(|p| p[2].clone()).max().expect("vertex");
    for p in &g_points {
        level = level.max(ray_entry(&ff, p, &w)?[2].clone());
    }
    level += Rat::one();
    for p in &g_points {
        let s = (level.clone() - p[2].clone()) / w[2].clone();
        if s.is_negative() || !ff.contains(&p.add_scaled(&s, &w)) {
            return Err(Error::Verification("half-line misses the facet section".into()));
        }
    }
    let saw = Hyperplane::coordinate(3, 2, level.clone());
    trace.note("saw_level", format_scalar(&level));
    trace.note("w", show(&w));

    // Step 3: far side of the section from the facet, and the plane H0
    let section = k0.intersect_hyperplane(&saw)?;
    let b = section.vertices().iter().map(|p| f.eval(p)).max().expect("section vertex");
    let p0 = section.vertices().iter().filter(|p| f.eval(p) == b).min().expect("vertex").clone();
    let lambda_b = Hyperplane::new(a0.clone() - b, a.clone())?;
    let h0 = supporting_from_saw(&k0, &saw, &lambda_b, &p0)?;
    let v = unbounded_edges(&k0)
        .into_iter()
        .find(|edge| {
            let t = (level.clone() - edge.vertex[2].clone()) / edge.direction[2].clone();
            edge.vertex.add_scaled(&t, &edge.direction) == p0
        })
        .ok_or_else(|| Error::Verification("section vertex off every unbounded edge".into()))?
        .direction;
    trace.note("p0", show(&p0));
    trace.note("h0", &h0);

    // Step 4: W through the line of the edge, meeting F in a half-line
    let av = a.dot(&v);
    let wplane = if av.is_zero() {
        let fp = ff.intersect_hyperplane(&saw)?;
        let q = Vector::average(fp.vertices());
        trace.note("step4_case", 1);
        trace.note("q", show(&q));
        Hyperplane::through(&p0, v.cross(&(&q - &p0)))?
    } else {
        let t = -f.eval(&p0) / av;
        let q0 = p0.add_scaled(&t, &v);
        trace.note("step4_case", 2);
        trace.note("q0", show(&q0));
        Hyperplane::through(&q0, v.cross(&w))?
    };
    trace.note("w_plane", &wplane);

    // Step 5: projection onto W along the horizontal direction of H
    let d = a.cross(&Vector::unit(3, 2));
    let nw = wplane.normal().clone();
    let nd = nw.dot(&d);
    if nd.is_zero() {
        return Err(Error::Verification("projection direction lies in W".into()));
    }
    let rows: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i).add_scaled(&-(d[i].clone() / nd.clone()), &nw)).collect();
    let offsets: Vec<Rat> = (0..3).map(|i| -(d[i].clone() / nd.clone()) * wplane.offset().clone()).collect();
    let proj = AffineMap::from_functionals(rows.clone(), offsets)?;
    if section.transform(&proj)? != section.intersect_hyperplane(&wplane)? {
        return Err(Error::Verification("section does not project into itself".into()));
    }
    let cone = k0.recession_cone()?;
    let proj_lin = AffineMap::from_functionals(rows, vec![Rat::zero(); 3])?;
    let through_origin = Hyperplane::new(Rat::zero(), nw.clone())?;
    if cone.polyhedron().transform(&proj_lin)? != cone.polyhedron().intersect_hyperplane(&through_origin)? {
        return Err(Error::Verification("recession cone does not project into itself".into()));
    }

    // Step 6: H+ -> {x2 <= 0}, W -> {x3 = 0}, horizontal direction of H -> e3
    let t1 = AffineMap::from_functionals(
        vec![Vector::unit(3, 2), -a, nw],
        vec![Rat::zero(), -a0, wplane.offset().clone()],
    )?;
    Ok((t1.compose(&t0), trace))
}

/// All unbounded edges parallel: section parallel to a bounded facet, made
/// vertical, with the polygon's projection property in the remaining plane.
fn first_parallel(k: &Polyhedron, facet: usize) -> Result<(AffineMap, PlacementTrace)> {
    let mut trace = PlacementTrace::new("parallel-edges");
    let f = &k.facets()[facet];
    let (a0, a) = (f.offset().clone(), f.normal().clone());
    let v = k.rays()[0].clone();
    let level = k.points().iter().map(|p| f.eval(p)).max().expect("vertex") + Rat::one();
    let saw = Hyperplane::new(a0.clone() - level.clone(), a.clone())?;
    let section = k.intersect_hyperplane(&saw)?;
    // projection direction l in the facet plane, transverse functional g
    let l = Vector::new(linalg::nullspace(&[a.0.clone()], 3).swap_remove(0)).primitive();
    let g = a.cross(&l);
    let lo = section.vertices().iter().map(|p| g.dot(p)).min().expect("vertex");
    let hi = section.vertices().iter().map(|p| g.dot(p)).max().expect("vertex");
    let p = section.vertices().iter().filter(|x| g.dot(x) == lo).min().expect("vertex").clone();
    let q = section.vertices().iter().filter(|x| g.dot(x) == hi).min().expect("vertex").clone();
    if p == q {
        return Err(Error::Verification("section polygon is degenerate".into()));
    }
    let wplane = Hyperplane::through(&p, (&q - &p).cross(&v))?;
    trace.note("section_level", format_scalar(&level));
    trace.note("direction", show(&l));
    trace.note("segment", format!("{} -- {}", show(&p), show(&q)));
    let inv = Rat::one() / level;
    let t = AffineMap::from_functionals(
        vec![l.cross(&v), (-a).scale(&inv), wplane.normal().clone()],
        vec![Rat::zero(), -a0 * inv, wplane.offset().clone()],
    )?;
    Ok((t, trace))
}

/// Second trimming placement. Without a hint the facet is
/// [`common_trimming_facet`].
pub fn place_second(k: &Polyhedron, facet: Option<usize>) -> Result<TrimmingCertificate> {
    require_placeable(k)?;
    let facet = match facet {
        Some(i) => {
            check_hint(k, i)?;
            i
        }
        None => common_trimming_facet(k)?,
    };
    let f = &k.facets()[facet];
    let (map, trace) = if all_edges_parallel(k) {
        // rows 1 and 2 kill the edge direction, row 3 sends the facet to {x3 = 0}
        let mut trace = PlacementTrace::new("bounded-facet");
        let v = &k.rays()[0];
        let basis = linalg::nullspace(&[v.0.clone()], 3);
        trace.note("edge_direction", show(v));
        let map = AffineMap::from_functionals(
            vec![Vector::new(basis[0].clone()), Vector::new(basis[1].clone()), -f.normal().clone()],
            vec![Rat::zero(), Rat::zero(), -f.offset().clone()],
        )?;
        (map, trace)
    } else {
        second_unbounded_facet(k, facet)?
    };
    certify(k, facet, TrimmingKind::Second, map, trace)
}

fn second_unbounded_facet(k: &Polyhedron, facet: usize) -> Result<(AffineMap, PlacementTrace)> {
    let mut trace = PlacementTrace::new("unbounded-facet");
    let f = &k.facets()[facet];
    let edges: Vec<_> = unbounded_edges(k).into_iter().filter(|e| e.face.active_set.contains(&facet)).collect();
    if edges.len() != 2 || edges[0].direction == edges[1].direction {
        return Err(Error::Verification("facet should have two non-parallel unbounded edges".into()));
    }
    let neighbour = |e: &crate::positions::UnboundedEdge| -> Result<HalfSpace> {
        let others: Vec<usize> = e.face.active_set.iter().copied().filter(|&j| j != facet).collect();
        match others.as_slice() {
            [j] => Ok(k.facets()[*j].clone()),
            _ => Err(Error::Verification("an edge should lie on exactly two facets".into())),
        }
    };
    let (h1, h2) = (neighbour(&edges[0])?, neighbour(&edges[1])?);
    let map = AffineMap::from_functionals(
        vec![h1.normal().clone(), h2.normal().clone(), -f.normal().clone()],
        vec![h1.offset().clone(), h2.offset().clone(), -f.offset().clone()],
    )?;
    // edge 1 lies on {y1 = 0}, edge 2 on {y2 = 0}
    let p1 = map.apply(&edges[0].vertex);
    let p2 = map.apply(&edges[1].vertex);
    if !p1[0].is_zero() || !p2[1].is_zero() {
        return Err(Error::Verification("edge endpoints off the coordinate axes".into()));
    }
    trace.note("p1", show(&p1));
    trace.note("p2", show(&p2));
    trace.triangle = Some(Triangle { a: p2[0].clone(), b: p1[1].clone() });
    Ok((map, trace))
}
