//! Facing-upwards positions, sawing hyperplanes, supporting hyperplanes built
//! from a saw, and the projective compactification of an unbounded polyhedron.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{affine_dehomogenize_phi, phi_of_direction, AffineMap, HalfSpace, Hyperplane, Vector};
use crate::polyhedron::{Face, Polyhedron};
use crate::Rat;

/// An unbounded edge `vertex + t * direction`, `t >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundedEdge {
    pub vertex: Vector,
    pub direction: Vector,
    pub face: Face,
}

/// Unbounded edges of a pointed polyhedron, in face-lattice order.
pub fn unbounded_edges(k: &Polyhedron) -> Vec<UnboundedEdge> {
    k.unbounded_edges()
        .into_iter()
        .map(|f| UnboundedEdge { vertex: k.points()[f.points[0]].clone(), direction: k.rays()[f.rays[0]].clone(), face: f })
        .collect()
}

fn require_pointed_unbounded(k: &Polyhedron) -> Result<()> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if k.is_degenerate() {
        return Err(Error::Degenerate);
    }
    if k.is_bounded() {
        return Err(Error::Bounded);
    }
    Ok(())
}

fn max_level(points: &[Vector], f: &Vector) -> Rat {
    points.iter().map(|p| f.dot(p)).max().expect("nonempty point set")
}

/// Data certifying that `K` is in facing-upwards position with respect to
/// the direction `{functional = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuWitness {
    /// `h = offset + functional . x`; vertices have `h < 0`, rays `functional . r > 0`.
    pub functional: Vector,
    pub offset: Rat,
    pub sawing_plane: Hyperplane,
    /// The minimum of `functional` on `K` is attained at a single vertex.
    pub optimal: bool,
    pub minimizing_vertex: Option<Vector>,
}

/// Witness for the facing-upwards position of `K` with respect to the
/// hyperplane direction `{direction . x = 0}`, trying both orientations.
pub fn is_fu_position(k: &Polyhedron, direction: &Vector) -> Result<Option<FuWitness>> {
    require_pointed_unbounded(k)?;
    Error::check_dim(k.ambient_dim(), direction.dim())?;
    for f in [direction.clone(), -direction.clone()] {
        if k.rays().iter().all(|r| f.dot(r).is_positive()) {
            let c = max_level(k.points(), &f) + Rat::one();
            let min = k.points().iter().map(|p| f.dot(p)).min().expect("vertex");
            let minimizers: Vec<&Vector> = k.points().iter().filter(|p| f.dot(p) == min).collect();
            let optimal = minimizers.len() == 1;
            return Ok(Some(FuWitness {
                sawing_plane: Hyperplane::new(-c.clone(), f.clone())?,
                functional: f,
                offset: -c,
                optimal,
                minimizing_vertex: optimal.then(|| minimizers[0].clone()),
            }));
        }
    }
    Ok(None)
}

/// True when `K` is in optimal facing-upwards position with respect to
/// `{x_n = 0}` and lies in `{x_n > 0}`.
pub fn is_fu_normalized(k: &Polyhedron) -> bool {
    if k.is_empty() || k.is_degenerate() || k.is_bounded() {
        return false;
    }
    let n = k.ambient_dim();
    let last = |v: &Vector| v[n - 1].clone();
    let min = k.points().iter().map(last).min().expect("vertex");
    k.rays().iter().all(|r| last(r).is_positive())
        && min.is_positive()
        && k.points().iter().filter(|p| last(p) == min).count() == 1
}

/// An affine change of coordinates `T` such that `T(K)` is in optimal
/// facing-upwards position with respect to `{x_n = 0}`, has a unique lowest
/// vertex, and lies in `{x_n >= 1}`.
pub fn fu_normalize(k: &Polyhedron) -> Result<AffineMap> {
    require_pointed_unbounded(k)?;
    let n = k.ambient_dim();
    if is_fu_normalized(k) {
        return Ok(AffineMap::identity(n));
    }
    let cone = k.recession_cone()?;
    let mut h = Vector::zeros(n);
    for f in cone.polyhedron().facets() {
        h = &h + f.normal();
    }
    let rays_positive = |f: &Vector| k.rays().iter().all(|r| f.dot(r).is_positive());
    if !rays_positive(&h) {
        return Err(Error::Verification("facet-normal sum is not positive on the recession cone".into()));
    }
    let unique_min = |f: &Vector| {
        let min = k.points().iter().map(|p| f.dot(p)).min().expect("vertex");
        k.points().iter().filter(|p| f.dot(p) == min).count() == 1
    };
    let mut f = h.clone();
    if !unique_min(&f) {
        // lexicographic perturbation h + eps*e1 + eps^2*e2 + ..., eps halved until it works
        let mut eps = Rat::one();
        loop {
            let mut g = h.clone();
            let mut w = eps.clone();
            for i in 0..n {
                g = g.add_scaled(&w, &Vector::unit(n, i));
                w = w * eps.clone();
            }
            if rays_positive(&g) && unique_min(&g) {
                f = g;
                break;
            }
            eps = eps / Rat::from_integer(2.into());
        }
    }
    let f = f.primitive();
    let pivot = (0..n).find(|&i| !f[i].is_zero()).expect("nonzero functional");
    let mut rows: Vec<Vector> = (0..n).filter(|&i| i != pivot).map(|i| Vector::unit(n, i)).collect();
    rows.push(f.clone());
    let min = k.points().iter().map(|p| f.dot(p)).min().expect("vertex");
    let mut offsets = vec![Rat::zero(); n];
    offsets[n - 1] = Rat::one() - min;
    let t = AffineMap::from_functionals(rows, offsets)?;
    let image = k.transform(&t)?;
    if !is_fu_normalized(&image) {
        return Err(Error::Verification("normalized image fails the facing-upwards postcondition".into()));
    }
    Ok(t)
}

/// Projective compactification of a normalized polyhedron: the bounded
/// polyhedron `K'` spanned by the images of vertices and ray directions, and
/// its face `E'` at height zero (the image of the points at infinity).
pub fn compactify(k: &Polyhedron) -> Result<(Polyhedron, Face)> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if k.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let n = k.ambient_dim();
    if k.points().iter().any(|p| !p[n - 1].is_positive()) || k.rays().iter().any(|r| !r[n - 1].is_positive()) {
        return Err(Error::pre("compactification needs every vertex with x_n > 0 and every ray with v_n > 0"));
    }
    let mut gens = Vec::new();
    for p in k.points() {
        gens.push(affine_dehomogenize_phi(p)?);
    }
    for r in k.rays() {
        gens.push(phi_of_direction(r)?);
    }
    let kp = Polyhedron::from_generators(n, &gens, &[], &[])?;
    let at_zero: Vec<usize> = (0..kp.points().len()).filter(|&i| kp.points()[i][n - 1].is_zero()).collect();
    let face = kp
        .face_lattice()
        .into_iter()
        .find(|f| f.points == at_zero)
        .ok_or_else(|| Error::Verification("image of the points at infinity is not a face".into()))?;
    Ok((kp, face))
}

/// Checks that the image of `p + C(K)` together with `E'` is the cone with
/// apex `phi(p)` over `E'`, on the given sample coefficients. Each sample is a
/// list of nonnegative weights, one per ray of `K`.
pub fn cone_identity_holds(k: &Polyhedron, kp: &Polyhedron, e: &Face, p: &Vector, samples: &[Vec<Rat>]) -> Result<bool> {
    let n = k.ambient_dim();
    let apex = affine_dehomogenize_phi(p)?;
    let mut gens = vec![apex.clone()];
    gens.extend(e.points.iter().map(|&i| kp.points()[i].clone()));
    let cone = Polyhedron::from_generators(n, &gens, &[], &[])?;
    let rec = k.recession_cone()?;
    for lam in samples {
        if lam.len() != k.rays().len() || lam.iter().any(Signed::is_negative) {
            return Err(Error::pre("one nonnegative weight per ray"));
        }
        // forward: phi(p + sum lam v) lies in the cone
        let mut x = p.clone();
        for (l, r) in lam.iter().zip(k.rays()) {
            x = x.add_scaled(l, r);
        }
        if !cone.contains(&affine_dehomogenize_phi(&x)?) {
            return Ok(false);
        }
        // backward: a point of the cone off E' maps back into p + C(K)
        let total: Rat = lam.iter().cloned().sum::<Rat>() + Rat::one();
        let mut y = apex.scale(&(Rat::one() / total.clone()));
        for (l, r) in lam.iter().zip(k.rays()) {
            y = y.add_scaled(&(l.clone() / total.clone()), &phi_of_direction(r)?);
        }
        let back = affine_dehomogenize_phi(&y)?;
        if !rec.contains(&(&back - p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Supporting hyperplane of `K` spanned by the unbounded edge through the
/// vertex `p` of `K ∩ saw` and the supporting hyperplane `saw ∩ w` of that
/// section. Returns the closed side containing `K`.
pub fn supporting_from_saw(k: &Polyhedron, saw: &Hyperplane, w: &Hyperplane, p: &Vector) -> Result<HalfSpace> {
    require_pointed_unbounded(k)?;
    let n = k.ambient_dim();
    Error::check_dim(n, saw.dim())?;
    Error::check_dim(n, w.dim())?;
    // orient the saw so that vertices lie below it
    let (mut po, mut pn) = (saw.offset().clone(), saw.normal().clone());
    if k.points().iter().all(|q| (po.clone() + pn.dot(q)).is_positive()) {
        po = -po;
        pn = -pn;
    }
    if !k.points().iter().all(|q| (po.clone() + pn.dot(q)).is_negative()) || !k.rays().iter().all(|r| pn.dot(r).is_positive()) {
        return Err(Error::pre("the plane is not a sawing hyperplane"));
    }
    let section = k.intersect_hyperplane(saw)?;
    if !section.vertices().contains(p) {
        return Err(Error::pre("the point is not a vertex of the section"));
    }
    if !w.contains(p) {
        return Err(Error::pre("the supporting plane does not pass through the point"));
    }
    let (mut wo, mut wn) = (w.offset().clone(), w.normal().clone());
    let wmin = section.minimize(&wn, &wo)?;
    let wmax = section.maximize(&wn, &wo)?;
    if wmin.as_ref().is_some_and(|m| m.is_zero()) {
    } else if wmax.as_ref().is_some_and(|m| m.is_zero()) {
        wo = -wo;
        wn = -wn;
    } else {
        return Err(Error::pre("the plane is not supporting for the section"));
    }
    let edge = unbounded_edges(k)
        .into_iter()
        .find(|e| {
            let s = pn.dot(&e.direction);
            let t = -(po.clone() + pn.dot(&e.vertex)) / s;
            e.vertex.add_scaled(&t, &e.direction) == *p
        })
        .ok_or_else(|| Error::pre("no unbounded edge meets the saw at the point"))?;
    let v = &edge.direction;
    let a = pn.dot(v);
    let b = wn.dot(v);
    let normal = &wn.scale(&a) - &pn.scale(&b);
    let offset = wo * a - po * b;
    if normal.is_zero() {
        return Err(Error::pre("the spanned affine subspace is not a hyperplane"));
    }
    let mut hs = HalfSpace::new(offset, normal);
    match k.minimize(hs.normal(), hs.offset())? {
        Some(m) if m.is_zero() => {}
        _ => {
            hs = hs.flipped();
            if k.minimize(hs.normal(), hs.offset())? != Some(Rat::zero()) {
                return Err(Error::Verification("spanned hyperplane does not support the polyhedron".into()));
            }
        }
    }
    Ok(hs)
}

/// Start of the half-line `(p + R_{>=0} v) ∩ K`, for `v` in the relative
/// interior of a recession cone of full dimension in the affine hull of `K`
/// and `p` in that affine hull.
pub fn ray_entry(k: &Polyhedron, p: &Vector, v: &Vector) -> Result<Vector> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    Error::check_dim(k.ambient_dim(), p.dim())?;
    Error::check_dim(k.ambient_dim(), v.dim())?;
    let interior = k.recession_cone()?.dim() == k.dim()
        && k.equalities().iter().all(|e| e.normal().dot(v).is_zero())
        && k.facets().iter().all(|h| h.normal().dot(v).is_positive());
    if !interior {
        return Err(Error::pre("direction is not interior to the recession cone"));
    }
    if !k.equalities().iter().all(|e| e.contains(p)) {
        return Err(Error::pre("point is off the affine hull"));
    }
    let mut lambda = Rat::zero();
    for h in k.facets() {
        let t = -h.eval(p) / h.normal().dot(v);
        if t > lambda {
            lambda = t;
        }
    }
    Ok(p.add_scaled(&lambda, v))
}

/// A sawing hyperplane `{direction . x = c}` such that the half-line from
/// every `g` in `points` along `v` meets `K ∩ Π` in exactly one point.
pub fn saw_for_singletons(k: &Polyhedron, direction: &Vector, v: &Vector, points: &[Vector]) -> Result<Hyperplane> {
    let fu = is_fu_position(k, direction)?.ok_or_else(|| Error::pre("not in facing-upwards position"))?;
    let f = &fu.functional;
    let mut c = max_level(k.points(), f);
    for g in points {
        let e = ray_entry(k, g, v)?;
        c = c.max(f.dot(&e));
    }
    c += Rat::one();
    let plane = Hyperplane::new(-c.clone(), f.clone())?;
    let fv = f.dot(v);
    for g in points {
        let t = (c.clone() - f.dot(g)) / fv.clone();
        if t.is_negative() || !k.contains(&g.add_scaled(&t, v)) {
            return Err(Error::Verification("half-line misses the section".into()));
        }
    }
    Ok(plane)
}

/// A hyperplane section beyond every vertex, with its decomposition data.
#[derive(Clone, Debug)]
pub struct SectionData {
    pub functional: Vector,
    pub level: Rat,
    pub plane: Hyperplane,
    pub section: Polyhedron,
    pub edges: Vec<UnboundedEdge>,
    /// Indices into `edges` crossed by the plane.
    pub crossed_edges: Vec<usize>,
    /// Indices into `edges` parallel to the plane.
    pub parallel_edges: Vec<usize>,
    /// `K ∩ {functional >= level}`.
    pub upper_part: Polyhedron,
    /// `K ∩ {functional <= level}`.
    pub lower_part: Polyhedron,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionChecks {
    pub vertices_are_edge_crossings: bool,
    pub recession_from_parallel_edges: bool,
    pub upper_part_decomposes: bool,
    /// Only meaningful when no unbounded edge is parallel.
    pub lower_part_bounded: Option<bool>,
}

impl SectionChecks {
    pub fn all(&self) -> bool {
        self.vertices_are_edge_crossings
            && self.recession_from_parallel_edges
            && self.upper_part_decomposes
            && self.lower_part_bounded != Some(false)
    }
}

impl SectionData {
    pub fn crossing(&self, i: usize) -> Vector {
        let e = &self.edges[i];
        let t = (self.level.clone() - self.functional.dot(&e.vertex)) / self.functional.dot(&e.direction);
        e.vertex.add_scaled(&t, &e.direction)
    }

    pub fn check(&self, k: &Polyhedron) -> Result<SectionChecks> {
        let mut crossings: Vec<Vector> = self.crossed_edges.iter().map(|&i| self.crossing(i)).collect();
        crossings.sort();
        crossings.dedup();
        let vertices_are_edge_crossings = self.section.vertices().to_vec() == crossings;
        let n = k.ambient_dim();
        let par: Vec<Vector> = self.parallel_edges.iter().map(|&i| self.edges[i].direction.clone()).collect();
        let par_cone = crate::polyhedron::RecessionCone::from_generators(n, &par, &[])?;
        let recession_from_parallel_edges = self.section.recession_cone()? == par_cone;
        let upper_part_decomposes = self.section.plus_cone(&k.recession_cone()?)? == self.upper_part;
        let lower_part_bounded = self.parallel_edges.is_empty().then(|| self.lower_part.is_bounded());
        Ok(SectionChecks {
            vertices_are_edge_crossings,
            recession_from_parallel_edges,
            upper_part_decomposes,
            lower_part_bounded,
        })
    }
}

/// Section of `K` by `{functional . x = c}` with `c` one beyond the highest
/// vertex. Every unbounded edge must be crossed or parallel.
pub fn section_beyond(k: &Polyhedron, functional: &Vector) -> Result<SectionData> {
    require_pointed_unbounded(k)?;
    Error::check_dim(k.ambient_dim(), functional.dim())?;
    let edges = unbounded_edges(k);
    let mut crossed = Vec::new();
    let mut parallel = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let s = functional.dot(&e.direction);
        if s.is_negative() {
            return Err(Error::pre("an unbounded edge points below the section direction"));
        }
        if s.is_zero() {
            parallel.push(i);
        } else {
            crossed.push(i);
        }
    }
    let level = max_level(k.points(), functional) + Rat::one();
    let plane = Hyperplane::new(-level.clone(), functional.clone())?;
    let section = k.intersect_hyperplane(&plane)?;
    let up = HalfSpace::new(-level.clone(), functional.clone());
    let upper_part = k.intersect_halfspace(&up)?;
    let lower_part = k.intersect_halfspace(&up.flipped())?;
    Ok(SectionData {
        functional: functional.clone(),
        level,
        plane,
        section,
        edges,
        crossed_edges: crossed,
        parallel_edges: parallel,
        upper_part,
        lower_part,
    })
}
