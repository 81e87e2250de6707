//! Convex polyhedra with a canonical irredundant H-representation and an
//! eagerly computed V-representation.

mod dd;
mod faces;
pub mod io;
mod ops;
pub mod random;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactgeom::linalg;
use crate::exactgeom::{HalfSpace, Hyperplane, Scalar, Vector};
use crate::Rat;

pub use faces::Face;
pub use ops::RecessionCone;

/// A convex polyhedron `{x in R^n : equalities, facet inequalities}`.
///
/// The H-representation is canonical: equalities are the reduced row echelon
/// basis of the affine hull, and every facet inequality is reduced modulo the
/// equalities, scaled to coprime integers and sorted. Two polyhedra are equal
/// exactly when they are the same set.
#[derive(Clone, Debug)]
pub struct Polyhedron<S: Scalar = Rat> {
    ambient: usize,
    empty: bool,
    dim: usize,
    equalities: Vec<Hyperplane<S>>,
    facets: Vec<HalfSpace<S>>,
    points: Vec<Vector<S>>,
    rays: Vec<Vector<S>>,
    lineality: Vec<Vector<S>>,
}

impl<S: Scalar> PartialEq for Polyhedron<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.empty == other.empty
            && self.equalities == other.equalities
            && self.facets == other.facets
    }
}

impl<S: Scalar> Eq for Polyhedron<S> {}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn hom_point<S: Scalar>(p: &Vector<S>) -> Vec<S> {
    let mut v = vec![S::one()];
    v.extend(p.iter().cloned());
    v
}

fn hom_dir<S: Scalar>(d: &Vector<S>) -> Vec<S> {
    let mut v = vec![S::zero()];
    v.extend(d.iter().cloned());
    v
}

impl<S: Scalar> Polyhedron<S> {
    /// The empty polyhedron in `R^n`.
    pub fn empty(n: usize) -> Self {
        Polyhedron {
            ambient: n,
            empty: true,
            dim: 0,
            equalities: Vec::new(),
            facets: Vec::new(),
            points: Vec::new(),
            rays: Vec::new(),
            lineality: Vec::new(),
        }
    }

    /// All of `R^n`.
    pub fn whole_space(n: usize) -> Self {
        Self::from_halfspaces(n, &[]).expect("no constraints")
    }

    /// Intersection of the given closed half-spaces in `R^n`.
    pub fn from_halfspaces(n: usize, hs: &[HalfSpace<S>]) -> Result<Self> {
        for h in hs {
            Error::check_dim(n, h.dim())?;
        }
        let mut constraints: Vec<Vec<S>> = vec![Vector::<S>::unit(n + 1, 0).0];
        for h in hs {
            if h.normal().is_zero() {
                if h.offset().is_negative() {
                    return Ok(Self::empty(n));
                }
                continue;
            }
            constraints.push(h.coefficients());
        }
        let cone = dd::cone_generators(n + 1, &constraints);

        let lineality_raw: Vec<Vec<S>> = cone.lineality.iter().map(|l| l[1..].to_vec()).collect();
        let lineality = canonical_basis(&lineality_raw, n);
        let mut points = Vec::new();
        let mut rays = Vec::new();
        for r in &cone.rays {
            let t = r[0].clone();
            let x = linalg::project_out(&r[1..], &lineality_raw);
            if t.is_positive() {
                points.push(Vector(x.into_iter().map(|c| c / t.clone()).collect()));
            } else if !x.iter().all(Zero::is_zero) {
                rays.push(Vector(x).primitive());
            }
        }
        if points.is_empty() {
            return Ok(Self::empty(n));
        }
        points.sort();
        points.dedup();
        rays.sort();
        rays.dedup();
        Ok(Self::assemble(n, points, rays, lineality, hs))
    }

    /// `conv(points) + cone(rays) + span(lineality)`. Empty when `points` is.
    pub fn from_generators(
        n: usize,
        points: &[Vector<S>],
        rays: &[Vector<S>],
        lineality: &[Vector<S>],
    ) -> Result<Self> {
        for v in points.iter().chain(rays).chain(lineality) {
            Error::check_dim(n, v.dim())?;
        }
        if points.is_empty() {
            return Ok(Self::empty(n));
        }
        // polar cone: c = (c0, c) with c . g >= 0 for every homogenized generator
        let mut constraints: Vec<Vec<S>> = Vec::new();
        constraints.extend(points.iter().map(hom_point));
        constraints.extend(rays.iter().filter(|r| !r.is_zero()).map(hom_dir));
        for l in lineality.iter().filter(|l| !l.is_zero()) {
            constraints.push(hom_dir(l));
            constraints.push(hom_dir(&-l.clone()));
        }
        let polar = dd::cone_generators(n + 1, &constraints);
        let mut hs: Vec<HalfSpace<S>> = polar.rays.iter().map(|c| HalfSpace::from_coefficients(c)).collect();
        for l in &polar.lineality {
            let h = HalfSpace::from_coefficients(l);
            hs.push(h.flipped());
            hs.push(h);
        }
        Self::from_halfspaces(n, &hs)
    }

    fn assemble(
        n: usize,
        points: Vec<Vector<S>>,
        rays: Vec<Vector<S>>,
        lineality: Vec<Vector<S>>,
        hs: &[HalfSpace<S>],
    ) -> Self {
        let mut gens: Vec<Vec<S>> = points.iter().map(hom_point).collect();
        gens.extend(rays.iter().map(hom_dir));
        gens.extend(lineality.iter().map(hom_dir));
        let total_rank = linalg::rank(&gens, n + 1);
        let dim = total_rank - 1;

        let null = linalg::nullspace(&gens, n + 1);
        let (eq_rows, eq_pivots) = linalg::rref(&null, n + 1);
        let equalities: Vec<Hyperplane<S>> = eq_rows
            .iter()
            .map(|r| Hyperplane::new(r[0].clone(), Vector(r[1..].to_vec())).expect("nonempty polyhedron"))
            .collect();

        let lin_rows: Vec<Vec<S>> = lineality.iter().map(hom_dir).collect();
        let point_gens: Vec<Vec<S>> = points.iter().map(hom_point).chain(rays.iter().map(hom_dir)).collect();
        let mut facets = Vec::new();
        for h in hs {
            if h.normal().is_zero() {
                continue;
            }
            let c = h.coefficients();
            let tight: Vec<Vec<S>> = point_gens.iter().filter(|g| dot(&c, g).is_zero()).cloned().collect();
            // a facet is a proper face, so it contains a point and misses one generator
            if tight.len() == point_gens.len() || !tight.iter().any(|g| !g[0].is_zero()) {
                continue;
            }
            let mut rows = tight;
            rows.extend(lin_rows.iter().cloned());
            if linalg::rank(&rows, n + 1) + 1 != total_rank {
                continue;
            }
            let mut reduced = c;
            for (row, &p) in eq_rows.iter().zip(&eq_pivots) {
                let f = reduced[p].clone();
                if !f.is_zero() {
                    for (r, e) in reduced.iter_mut().zip(row) {
                        *r = r.clone() - f.clone() * e.clone();
                    }
                }
            }
            facets.push(HalfSpace::from_coefficients(&reduced));
        }
        facets.sort();
        facets.dedup();

        Polyhedron { ambient: n, empty: false, dim, equalities, facets, points, rays, lineality }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// Affine dimension. Zero for the empty polyhedron; check [`Self::is_empty`].
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.empty && self.dim == self.ambient
    }

    /// Canonical equalities of the affine hull.
    pub fn equalities(&self) -> &[Hyperplane<S>] {
        &self.equalities
    }

    /// Facet inequalities; a facet's index is its position in this list.
    pub fn facets(&self) -> &[HalfSpace<S>] {
        &self.facets
    }

    /// The full irredundant H-representation: facets plus both sides of each
    /// equality.
    pub fn halfspaces(&self) -> Vec<HalfSpace<S>> {
        let mut out = self.facets.clone();
        for e in &self.equalities {
            let (a, b) = e.sides();
            out.push(a);
            out.push(b);
        }
        out
    }

    /// Vertices; empty when the polyhedron is degenerate.
    pub fn vertices(&self) -> &[Vector<S>] {
        if self.lineality.is_empty() {
            &self.points
        } else {
            &[]
        }
    }

    /// Minimal-face representatives in the orthogonal complement of the
    /// lineality space. These are the vertices when the polyhedron is pointed.
    pub fn points(&self) -> &[Vector<S>] {
        &self.points
    }

    /// Extreme rays as primitive integer vectors, taken in the orthogonal
    /// complement of the lineality space.
    pub fn rays(&self) -> &[Vector<S>] {
        &self.rays
    }

    /// Reduced row echelon basis of the lineality space.
    pub fn lineality(&self) -> &[Vector<S>] {
        &self.lineality
    }

    /// `(vertices, rays, lineality)`.
    pub fn vrep(&self) -> Result<(Vec<Vector<S>>, Vec<Vector<S>>, Vec<Vector<S>>)> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        Ok((self.vertices().to_vec(), self.rays.clone(), self.lineality.clone()))
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// No vertex, equivalently a nontrivial lineality space.
    pub fn is_degenerate(&self) -> bool {
        !self.empty && !self.lineality.is_empty()
    }

    /// Affinely equivalent to `[-a, a] x R^{n-1}` for some `a >= 0`.
    pub fn is_layer(&self) -> bool {
        !self.empty && self.ambient >= 1 && self.lineality.len() + 1 == self.ambient && self.rays.is_empty()
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        !self.empty
            && x.dim() == self.ambient
            && self.equalities.iter().all(|e| e.contains(x))
            && self.facets.iter().all(|h| h.contains(x))
    }

    /// `v` is in the recession cone.
    pub fn recedes_along(&self, v: &Vector<S>) -> bool {
        !self.empty
            && self.equalities.iter().all(|e| e.normal().dot(v).is_zero())
            && self.facets.iter().all(|h| !h.normal().dot(v).is_negative())
    }

    pub fn contains_polyhedron(&self, other: &Self) -> bool {
        if other.empty {
            return true;
        }
        !self.empty
            && other.points.iter().all(|p| self.contains(p))
            && other.rays.iter().all(|r| self.recedes_along(r))
            && other.lineality.iter().all(|l| self.recedes_along(l) && self.recedes_along(&-l.clone()))
    }
}

/// Reduced row echelon basis with primitive integer rows.
fn canonical_basis<S: Scalar>(rows: &[Vec<S>], n: usize) -> Vec<Vector<S>> {
    linalg::rref(rows, n).0.into_iter().map(|r| Vector(r).primitive()).collect()
}

impl<S: Scalar> fmt::Display for Polyhedron<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return write!(f, "empty polyhedron in R^{}", self.ambient);
        }
        let parts: Vec<String> = self
            .equalities
            .iter()
            .map(|e| e.to_string())
            .chain(self.facets.iter().map(|h| h.to_string()))
            .collect();
        if parts.is_empty() {
            write!(f, "R^{}", self.ambient)
        } else {
            write!(f, "{}", parts.join(" ∩ "))
        }
    }
}
