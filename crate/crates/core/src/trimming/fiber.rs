//! The set of base points whose vertical fiber is nonempty but misses the
//! base hyperplane, handled through the pair (shadow, slice) since the set
//! itself is a difference of convex sets.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::{Hyperplane, Vector};
use crate::polyhedron::{Polyhedron, RecessionCone};
use crate::positions::unbounded_edges;
use crate::Rat;

#[derive(Clone, Debug)]
pub struct FiberAnalysis {
    /// Image of `K` dropping the last coordinate, in `R^{n-1}`.
    pub shadow: Polyhedron,
    /// `K ∩ {x_n = 0}` in `R^{n-1}`.
    pub slice: Polyhedron,
    pub a_set_bounded: bool,
    /// Witness hyperplane from the characterization, when it applies.
    pub witness: Option<Hyperplane>,
}

impl FiberAnalysis {
    /// `a` has a nonempty fiber that avoids the base hyperplane.
    pub fn in_a_set(&self, a: &Vector) -> bool {
        self.shadow.contains(a) && !self.slice.contains(a)
    }
}

pub fn fiber_set(k: &Polyhedron) -> Result<FiberAnalysis> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let witness = if !k.is_degenerate() && !k.is_bounded() { a_bounded_characterized(k)?.1 } else { None };
    Ok(FiberAnalysis { shadow: k.shadow_last()?, slice: k.slice_last()?, a_set_bounded: a_bounded_direct(k)?, witness })
}

/// Exact boundedness of `shadow \ slice`.
///
/// `shadow \ slice` is the union over the constraints `g >= 0` of the slice
/// of `shadow ∩ {g < 0}`. Each piece is convex; when nonempty it is
/// unbounded exactly when some nonzero recession direction `d` of the shadow
/// has `g(d) <= 0`, since its closure is `shadow ∩ {g <= 0}`.
pub fn a_bounded_direct(k: &Polyhedron) -> Result<bool> {
    if k.is_empty() {
        return Ok(true);
    }
    let shadow = k.shadow_last()?;
    let slice = k.slice_last()?;
    if slice.is_empty() {
        return Ok(shadow.is_bounded());
    }
    for g in slice.halfspaces() {
        let below = match shadow.minimize(g.normal(), g.offset())? {
            None => true,
            Some(m) => m.is_negative(),
        };
        if !below {
            continue;
        }
        if !shadow.lineality().is_empty() {
            return Ok(false);
        }
        if shadow.rays().iter().any(|r| !g.normal().dot(r).is_positive()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `π(C(K)) = C(K) ∩ {x_n = 0}` for the vertical projection `π`.
pub fn projected_cone_matches(k: &Polyhedron) -> Result<bool> {
    let n = k.ambient_dim();
    let c = k.recession_cone()?;
    let proj: Vec<Vector> = c.generators().iter().map(|r| r.without(n - 1)).filter(|r| !r.is_zero()).collect();
    let lin: Vec<Vector> = c.lineality().iter().map(|r| r.without(n - 1)).filter(|r| !r.is_zero()).collect();
    let projected = RecessionCone::from_generators(n - 1, &proj, &lin)?;
    Ok(projected.polyhedron() == &c.polyhedron().slice_last()?)
}

/// Whether `plane` (containing the vertical direction) satisfies the
/// section clause: it crosses every non-vertical unbounded edge, leaves
/// vertices and vertical edges strictly below, and the vertical projection
/// of `K ∩ plane` equals its intersection with `{x_n = 0}`.
pub fn section_clause_holds(k: &Polyhedron, plane: &Hyperplane) -> Result<bool> {
    let n = k.ambient_dim();
    Error::check_dim(n, plane.dim())?;
    let mut candidates = vec![(plane.offset().clone(), plane.normal().clone())];
    candidates.push((-plane.offset().clone(), -plane.normal().clone()));
    if !plane.normal()[n - 1].is_zero() {
        return Ok(false);
    }
    for (off, h) in candidates {
        let below = k.points().iter().all(|p| (off.clone() + h.dot(p)).is_negative());
        let edges_ok = unbounded_edges(k).iter().all(|e| {
            let s = h.dot(&e.direction);
            if e.direction.without(n - 1).is_zero() { s.is_zero() } else { s.is_positive() }
        });
        if below && edges_ok {
            let section = k.intersect_hyperplane(plane)?;
            let base = Hyperplane::coordinate(n, n - 1, Rat::zero());
            return Ok(section.project(n - 1)? == section.intersect_hyperplane(&base)?);
        }
    }
    Ok(false)
}

/// Boundedness of the set through its geometric characterization: the
/// projected recession cone clause, then a search for the section hyperplane
/// along the lines of the sufficiency argument. Returns the hyperplane found.
pub fn a_bounded_characterized(k: &Polyhedron) -> Result<(bool, Option<Hyperplane>)> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if k.is_degenerate() {
        return Err(Error::Degenerate);
    }
    if k.is_bounded() {
        return Err(Error::Bounded);
    }
    let n = k.ambient_dim();
    if n < 2 {
        return Err(Error::pre("needs ambient dimension at least 2"));
    }
    if !projected_cone_matches(k)? {
        return Ok((false, None));
    }
    let c = k.recession_cone()?;
    let proj: Vec<Vector> = c.generators().iter().map(|r| r.without(n - 1)).filter(|r| !r.is_zero()).collect();
    let plane = if proj.is_empty() {
        // every ray is vertical: a plane x_1 = c beyond the bounded shadow
        let level = k.points().iter().map(|p| p[0].clone()).max().expect("vertex") + Rat::one();
        Hyperplane::coordinate(n, 0, level)
    } else {
        // the projected cone is pointed; its facet-normal sum is positive off 0
        let q = RecessionCone::from_generators(n - 1, &proj, &[])?;
        let mut h = Vector::zeros(n - 1);
        for f in q.polyhedron().facets() {
            h = &h + f.normal();
        }
        let h = h.with_inserted(n - 1, Rat::zero());
        let mut level = k.points().iter().map(|p| h.dot(p)).max().expect("vertex") + Rat::one();
        for e in unbounded_edges(k) {
            let hv = h.dot(&e.direction);
            if hv.is_zero() {
                continue;
            }
            // the crossing y(t) = q + t v projects into K for all large t
            let w = e.direction.without(n - 1);
            let q0 = e.vertex.without(n - 1);
            for g in k.halfspaces() {
                let gn = g.normal().without(n - 1);
                let alpha = g.offset().clone() + gn.dot(&q0);
                let beta = gn.dot(&w);
                if beta.is_negative() || (beta.is_zero() && alpha.is_negative()) {
                    return Ok((false, None));
                }
                if beta.is_positive() {
                    let t = -alpha / beta;
                    level = level.max(h.dot(&e.vertex) + hv.clone() * t);
                }
            }
        }
        Hyperplane::new(-level, h)?
    };
    if section_clause_holds(k, &plane)? {
        Ok((true, Some(plane)))
    } else {
        Err(Error::Verification("constructed section hyperplane fails the section clause".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::HalfSpace;

    fn poly(n: usize, cs: &[&[i64]]) -> Polyhedron {
        Polyhedron::from_halfspaces(n, &cs.iter().map(|c| HalfSpace::from_ints(c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn orthant_has_empty_a_set() {
        let k = poly(3, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let f = fiber_set(&k).unwrap();
        assert_eq!(f.shadow, f.slice);
        assert!(f.a_set_bounded);
        assert!(a_bounded_characterized(&k).unwrap().0);
    }

    #[test]
    fn raised_orthant_has_quadrant_a_set() {
        let k = poly(3, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[-1, 0, 0, 1]]);
        let f = fiber_set(&k).unwrap();
        assert!(f.slice.is_empty());
        assert!(f.in_a_set(&Vector::from_ints(&[5, 7])));
        assert!(!a_bounded_direct(&k).unwrap());
        assert_eq!(a_bounded_characterized(&k).unwrap(), (false, None));
    }

    #[test]
    fn truncated_corner_is_bounded() {
        let k = poly(3, &[&[0, 0, 0, -1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[-1, 1, 1, 1]]);
        let f = fiber_set(&k).unwrap();
        assert!(!f.in_a_set(&Vector::from_ints(&[3, 3])));
        assert!(a_bounded_direct(&k).unwrap());
        let (ok, w) = a_bounded_characterized(&k).unwrap();
        assert!(ok && section_clause_holds(&k, &w.unwrap()).unwrap());
    }

    #[test]
    fn square_column_agrees() {
        let k = poly(3, &[&[0, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, -1]]);
        assert_eq!(a_bounded_characterized(&k).unwrap().0, a_bounded_direct(&k).unwrap());
    }

    #[test]
    fn bounded_input_is_bounded() {
        let cube = poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 0, -1]]);
        assert!(a_bounded_direct(&cube).unwrap());
    }
}
