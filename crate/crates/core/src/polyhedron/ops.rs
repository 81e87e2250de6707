//! Set operations, recession cones and decompositions.


use super::Polyhedron;
use crate::error::{Error, Result};
use crate::exactgeom::{AffineMap, HalfSpace, Hyperplane, Scalar, Vector};

/// Recession cone of a polyhedron, itself stored as a polyhedral cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecessionCone<S: Scalar = crate::Rat> {
    cone: Polyhedron<S>,
}

impl<S: Scalar> RecessionCone<S> {
    pub fn from_generators(n: usize, rays: &[Vector<S>], lineality: &[Vector<S>]) -> Result<Self> {
        let cone = Polyhedron::from_generators(n, &[Vector::zeros(n)], rays, lineality)?;
        Ok(RecessionCone { cone })
    }

    /// Extreme rays.
    pub fn generators(&self) -> &[Vector<S>] {
        self.cone.rays()
    }

    pub fn lineality(&self) -> &[Vector<S>] {
        self.cone.lineality()
    }

    /// Half-spaces through the origin cutting out the cone.
    pub fn halfspaces(&self) -> Vec<HalfSpace<S>> {
        self.cone.halfspaces()
    }

    pub fn polyhedron(&self) -> &Polyhedron<S> {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.cone.dim() == 0
    }

    pub fn is_pointed(&self) -> bool {
        self.cone.lineality().is_empty()
    }

    pub fn contains(&self, v: &Vector<S>) -> bool {
        self.cone.contains(v)
    }

    /// `v` lies in the relative interior and the cone is full-dimensional.
    pub fn contains_in_interior(&self, v: &Vector<S>) -> bool {
        self.cone.is_full_dimensional() && self.cone.facets().iter().all(|h| h.eval(v).is_positive())
    }
}

impl<S: Scalar> Polyhedron<S> {
    pub fn recession_cone(&self) -> Result<RecessionCone<S>> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        RecessionCone::from_generators(self.ambient, &self.rays, &self.lineality)
    }

    /// `(conv(vertices), recession cone)`.
    pub fn motzkin_decompose(&self) -> Result<(Polyhedron<S>, RecessionCone<S>)> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        if self.is_degenerate() {
            return Err(Error::Degenerate);
        }
        let k0 = Polyhedron::from_generators(self.ambient, &self.points, &[], &[])?;
        Ok((k0, self.recession_cone()?))
    }

    /// Pointed factor in the orthogonal complement of the lineality space,
    /// together with the lineality basis.
    pub fn split_lineality(&self) -> Result<(Polyhedron<S>, Vec<Vector<S>>)> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        let k = Polyhedron::from_generators(self.ambient, &self.points, &self.rays, &[])?;
        Ok((k, self.lineality.clone()))
    }

    fn map_generators(&self, n: usize, f: impl Fn(&Vector<S>) -> Vector<S>, g: impl Fn(&Vector<S>) -> Vector<S>) -> Result<Self> {
        if self.empty {
            return Ok(Polyhedron::empty(n));
        }
        let pts: Vec<Vector<S>> = self.points.iter().map(&f).collect();
        let rays: Vec<Vector<S>> = self.rays.iter().map(&g).filter(|r| !r.is_zero()).collect();
        let lin: Vec<Vector<S>> = self.lineality.iter().map(&g).filter(|r| !r.is_zero()).collect();
        Polyhedron::from_generators(n, &pts, &rays, &lin)
    }

    /// Image under `x -> x` with coordinate `axis` (zero-based) set to zero,
    /// kept in `R^n`.
    pub fn project(&self, axis: usize) -> Result<Self> {
        if axis >= self.ambient {
            return Err(Error::OutOfRange { index: axis, len: self.ambient });
        }
        let zero = |v: &Vector<S>| {
            let mut w = v.clone();
            w[axis] = S::zero();
            w
        };
        self.map_generators(self.ambient, zero, zero)
    }

    /// Image under dropping the last coordinate, in `R^{n-1}`.
    pub fn shadow_last(&self) -> Result<Self> {
        let n = self.ambient;
        if n == 0 {
            return Err(Error::pre("cannot project R^0"));
        }
        let drop = |v: &Vector<S>| v.without(n - 1);
        self.map_generators(n - 1, drop, drop)
    }

    /// `K ∩ {x_n = 0}` viewed in `R^{n-1}`.
    pub fn slice_last(&self) -> Result<Self> {
        let n = self.ambient;
        if n == 0 {
            return Err(Error::pre("cannot slice R^0"));
        }
        if self.empty {
            return Ok(Polyhedron::empty(n - 1));
        }
        let hs: Vec<HalfSpace<S>> =
            self.halfspaces().iter().map(|h| HalfSpace::new(h.offset().clone(), h.normal().without(n - 1))).collect();
        Polyhedron::from_halfspaces(n - 1, &hs)
    }

    /// `K x R` in `R^{n+1}`.
    pub fn lift(&self) -> Result<Self> {
        let n = self.ambient;
        if self.empty {
            return Ok(Polyhedron::empty(n + 1));
        }
        let hs: Vec<HalfSpace<S>> = self
            .halfspaces()
            .iter()
            .map(|h| HalfSpace::new(h.offset().clone(), h.normal().with_inserted(n, S::zero())))
            .collect();
        Polyhedron::from_halfspaces(n + 1, &hs)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Error::check_dim(self.ambient, other.ambient)?;
        if self.empty || other.empty {
            return Ok(Polyhedron::empty(self.ambient));
        }
        let mut hs = self.halfspaces();
        hs.extend(other.halfspaces());
        Polyhedron::from_halfspaces(self.ambient, &hs)
    }

    pub fn intersect_halfspace(&self, h: &HalfSpace<S>) -> Result<Self> {
        Error::check_dim(self.ambient, h.dim())?;
        if self.empty {
            return Ok(self.clone());
        }
        let mut hs = self.halfspaces();
        hs.push(h.clone());
        Polyhedron::from_halfspaces(self.ambient, &hs)
    }

    pub fn intersect_hyperplane(&self, h: &Hyperplane<S>) -> Result<Self> {
        Error::check_dim(self.ambient, h.dim())?;
        if self.empty {
            return Ok(self.clone());
        }
        let mut hs = self.halfspaces();
        let (a, b) = h.sides();
        hs.push(a);
        hs.push(b);
        Polyhedron::from_halfspaces(self.ambient, &hs)
    }

    /// Drops the facet with index `i` from the H-representation.
    pub fn without_facet(&self, i: usize) -> Result<Self> {
        if i >= self.facets.len() {
            return Err(Error::OutOfRange { index: i, len: self.facets.len() });
        }
        let mut hs = self.halfspaces();
        hs.remove(i);
        Polyhedron::from_halfspaces(self.ambient, &hs)
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        Error::check_dim(self.ambient, other.ambient)?;
        if self.empty || other.empty {
            return Ok(Polyhedron::empty(self.ambient));
        }
        let mut pts = Vec::new();
        for p in &self.points {
            for q in &other.points {
                pts.push(p + q);
            }
        }
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().cloned());
        let mut lin = self.lineality.clone();
        lin.extend(other.lineality.iter().cloned());
        Polyhedron::from_generators(self.ambient, &pts, &rays, &lin)
    }

    pub fn plus_cone(&self, c: &RecessionCone<S>) -> Result<Self> {
        self.minkowski_sum(c.polyhedron())
    }

    /// Image `T(K)`.
    pub fn transform(&self, t: &AffineMap<S>) -> Result<Self> {
        Error::check_dim(self.ambient, t.dim())?;
        self.map_generators(self.ambient, |p| t.apply(p), |v| t.apply_linear(v))
    }

    /// Minimum of `offset + f . x`; `None` when unbounded below.
    pub fn minimize(&self, f: &Vector<S>, offset: &S) -> Result<Option<S>> {
        if self.empty {
            return Err(Error::EmptyPolyhedron);
        }
        Error::check_dim(self.ambient, f.dim())?;
        if self.lineality.iter().any(|l| !f.dot(l).is_zero()) || self.rays.iter().any(|r| f.dot(r).is_negative()) {
            return Ok(None);
        }
        Ok(self.points.iter().map(|p| offset.clone() + f.dot(p)).min())
    }

    /// Maximum of `offset + f . x`; `None` when unbounded above.
    pub fn maximize(&self, f: &Vector<S>, offset: &S) -> Result<Option<S>> {
        Ok(self.minimize(&-f.clone(), &-offset.clone())?.map(|v| -v))
    }

    /// Face on which `f` attains its minimum, when attained.
    pub fn minimizing_points(&self, f: &Vector<S>) -> Result<Option<Vec<Vector<S>>>> {
        let Some(m) = self.minimize(f, &S::zero())? else {
            return Ok(None);
        };
        Ok(Some(self.points.iter().filter(|p| f.dot(p) == m).cloned().collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::Rat;

    fn poly(n: usize, cs: &[&[i64]]) -> Polyhedron {
        Polyhedron::from_halfspaces(n, &cs.iter().map(|c| HalfSpace::from_ints(c)).collect::<Vec<_>>()).unwrap()
    }

    fn wedge() -> Polyhedron {
        // x3 <= 0, x1 >= 0, x2 >= 0, x1 + x2 + x3 >= 1
        poly(3, &[&[0, 0, 0, -1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[-1, 1, 1, 1]])
    }

    #[test]
    fn bounded_polyhedron_has_trivial_cone() {
        let k = poly(2, &[&[0, 1, 0], &[0, 0, 1], &[1, -1, -1]]);
        assert!(k.recession_cone().unwrap().is_trivial());
    }

    #[test]
    fn wedge_recession_cone() {
        let c = wedge().recession_cone().unwrap();
        let mut g = c.generators().to_vec();
        g.sort();
        let mut expected: Vec<Vector> =
            vec![Vector::from_ints(&[1, 0, 0]), Vector::from_ints(&[0, 1, 0]), Vector::from_ints(&[1, 0, -1]), Vector::from_ints(&[0, 1, -1])];
        expected.sort();
        assert_eq!(g, expected);
    }

    #[test]
    fn wedge_motzkin() {
        let k = wedge();
        let (k0, c) = k.motzkin_decompose().unwrap();
        let seg = Polyhedron::from_generators(3, &[Vector::from_ints(&[1, 0, 0]), Vector::from_ints(&[0, 1, 0])], &[], &[]).unwrap();
        assert_eq!(k0, seg);
        assert_eq!(k0.plus_cone(&c).unwrap(), k);
    }

    #[test]
    fn layer_and_lineality() {
        let layer = poly(3, &[&[1, 1, 0, 0], &[1, -1, 0, 0]]);
        assert!(layer.is_layer());
        assert!(layer.is_degenerate());
        let half = poly(3, &[&[0, 0, -1, 0]]);
        assert!(!half.is_layer());
        let (f, lin) = half.split_lineality().unwrap();
        assert_eq!(lin.len(), 2);
        assert_eq!(f.dim(), 1);
        assert_eq!(f.rays(), &[Vector::from_ints(&[0, -1, 0])]);
    }

    #[test]
    fn cube_shadow() {
        let cube = poly(3, &[&[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 0], &[1, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, -1]]);
        let sq = poly(3, &[&[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 0], &[1, 0, -1, 0], &[0, 0, 0, 1], &[0, 0, 0, -1]]);
        assert_eq!(cube.project(2).unwrap(), sq);
    }

    #[test]
    fn orthant_coordinate_section() {
        let k = poly(3, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let s = k.intersect_hyperplane(&Hyperplane::coordinate(3, 0, Rat::zero())).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn segment_plus_ray() {
        let seg = Polyhedron::from_generators(2, &[Vector::zeros(2), Vector::from_ints(&[1, 0])], &[], &[]).unwrap();
        let c = RecessionCone::from_generators(2, &[Vector::from_ints(&[0, 1])], &[]).unwrap();
        assert_eq!(seg.plus_cone(&c).unwrap(), poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1]]));
    }
}
