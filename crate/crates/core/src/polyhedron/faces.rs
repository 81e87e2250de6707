//! Face lattice enumeration by closed active sets.

use std::collections::{BTreeSet, VecDeque};

use super::{hom_dir, hom_point, Polyhedron};
use crate::error::{Error, Result};
use crate::exactgeom::{linalg, HalfSpace, Scalar, Vector};

/// A nonempty face: the polyhedron intersected with the boundaries of the
/// facets in `active_set`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    /// Indices into [`Polyhedron::facets`], sorted.
    pub active_set: Vec<usize>,
    pub dim: usize,
    /// Indices into [`Polyhedron::points`] lying on the face.
    pub points: Vec<usize>,
    /// Indices into [`Polyhedron::rays`] lying on the face.
    pub rays: Vec<usize>,
}

impl Face {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// The face as a polyhedron of its own.
    pub fn polyhedron<S: Scalar>(&self, k: &Polyhedron<S>) -> Polyhedron<S> {
        let pts: Vec<Vector<S>> = self.points.iter().map(|&i| k.points[i].clone()).collect();
        let rays: Vec<Vector<S>> = self.rays.iter().map(|&i| k.rays[i].clone()).collect();
        Polyhedron::from_generators(k.ambient, &pts, &rays, &k.lineality).expect("consistent dimensions")
    }
}

impl<S: Scalar> Polyhedron<S> {
    fn incidence(&self) -> (Vec<BTreeSet<usize>>, Vec<BTreeSet<usize>>) {
        let tight = |g: Vec<S>| -> BTreeSet<usize> {
            self.facets
                .iter()
                .enumerate()
                .filter(|(_, h)| {
                    let c = h.coefficients();
                    c.iter().zip(&g).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()).is_zero()
                })
                .map(|(i, _)| i)
                .collect()
        };
        let p = self.points.iter().map(|x| tight(hom_point(x))).collect();
        let r = self.rays.iter().map(|x| tight(hom_dir(x))).collect();
        (p, r)
    }

    fn face_from_active(
        &self,
        active: &BTreeSet<usize>,
        pinc: &[BTreeSet<usize>],
        rinc: &[BTreeSet<usize>],
    ) -> Option<Face> {
        let points: Vec<usize> = (0..self.points.len()).filter(|&i| active.is_subset(&pinc[i])).collect();
        if points.is_empty() {
            return None;
        }
        let rays: Vec<usize> = (0..self.rays.len()).filter(|&i| active.is_subset(&rinc[i])).collect();
        let closed: BTreeSet<usize> = (0..self.facets.len())
            .filter(|f| points.iter().all(|&i| pinc[i].contains(f)) && rays.iter().all(|&i| rinc[i].contains(f)))
            .collect();
        let mut rows: Vec<Vec<S>> = points.iter().map(|&i| hom_point(&self.points[i])).collect();
        rows.extend(rays.iter().map(|&i| hom_dir(&self.rays[i])));
        rows.extend(self.lineality.iter().map(hom_dir));
        let dim = linalg::rank(&rows, self.ambient + 1) - 1;
        Some(Face { active_set: closed.into_iter().collect(), dim, points, rays })
    }

    /// Every nonempty face, including the polyhedron itself, sorted by
    /// dimension and then active set.
    pub fn face_lattice(&self) -> Vec<Face> {
        if self.empty {
            return Vec::new();
        }
        let (pinc, rinc) = self.incidence();
        let top = self.face_from_active(&BTreeSet::new(), &pinc, &rinc).expect("nonempty");
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(top.active_set.clone());
        queue.push_back(top);
        while let Some(face) = queue.pop_front() {
            let active: BTreeSet<usize> = face.active_set.iter().copied().collect();
            for f in 0..self.facets.len() {
                if active.contains(&f) {
                    continue;
                }
                let mut next = active.clone();
                next.insert(f);
                if let Some(g) = self.face_from_active(&next, &pinc, &rinc) {
                    if seen.insert(g.active_set.clone()) {
                        queue.push_back(g);
                    }
                }
            }
            out.push(face);
        }
        out.sort_by(|a, b| (a.dim, &a.active_set).cmp(&(b.dim, &b.active_set)));
        out
    }

    /// All faces of dimension `d`, for `0 <= d < dim`.
    pub fn faces(&self, d: usize) -> Result<Vec<Face>> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        if d >= self.dim {
            return Err(Error::OutOfRange { index: d, len: self.dim });
        }
        Ok(self.face_lattice().into_iter().filter(|f| f.dim == d).collect())
    }

    /// Edges carrying exactly one point and one ray.
    pub fn unbounded_edges(&self) -> Vec<Face> {
        if self.empty || !self.lineality.is_empty() {
            return Vec::new();
        }
        self.face_lattice()
            .into_iter()
            .filter(|f| f.dim == 1 && f.points.len() == 1 && f.rays.len() == 1)
            .collect()
    }

    pub fn edges(&self) -> Vec<Face> {
        if self.empty || self.dim < 2 {
            return Vec::new();
        }
        self.faces(1).unwrap_or_default()
    }

    /// Face for the facet with index `i`.
    pub fn facet_face(&self, i: usize) -> Result<Face> {
        if i >= self.facets.len() {
            return Err(Error::OutOfRange { index: i, len: self.facets.len() });
        }
        let (pinc, rinc) = self.incidence();
        let active: BTreeSet<usize> = [i].into_iter().collect();
        self.face_from_active(&active, &pinc, &rinc).ok_or(Error::EmptyPolyhedron)
    }

    /// Index of `h` in the facet list.
    pub fn facet_index(&self, h: &HalfSpace<S>) -> Option<usize> {
        self.facets.iter().position(|f| f == h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, cs: &[&[i64]]) -> Polyhedron {
        Polyhedron::from_halfspaces(n, &cs.iter().map(|c| HalfSpace::from_ints(c)).collect::<Vec<_>>()).unwrap()
    }

    fn cube() -> Polyhedron {
        poly(3, &[&[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 0], &[1, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, -1]])
    }

    #[test]
    fn cube_has_eight_vertices() {
        assert_eq!(cube().faces(0).unwrap().len(), 8);
        assert_eq!(cube().faces(1).unwrap().len(), 12);
        assert_eq!(cube().faces(2).unwrap().len(), 6);
    }

    #[test]
    fn orthant_has_three_edges() {
        let k = poly(3, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(k.faces(1).unwrap().len(), 3);
        assert_eq!(k.unbounded_edges().len(), 3);
    }

    #[test]
    fn out_of_range_dimension() {
        assert!(matches!(cube().faces(3), Err(Error::OutOfRange { .. })));
    }
}
