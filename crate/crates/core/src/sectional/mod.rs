//! Sectional projections `(v, H)`: the projection of `K` onto `H` along `v`
//! equals `K ∩ H`. Every convex polygon has one; in `R^3` we decide existence
//! exactly and build polytopes (and an `R^4` counterexample) without any.

mod certifier;
mod cross;

pub use certifier::{
    certify_no_sectional_projections, falsification_sweep, plane_candidate_directions, transversal_plane,
    CertifierTrace, DirectionCandidate, PlaneCandidate, SweepReport,
};
pub use cross::{
    corollary_counterexample, cross_polytope, has_octahedral_lattice, perturbed_cross_polytope, perturbed_cross_polytope_with,
    shell_polytope, CandidateOutcome, CertifiedPolytope, CorollaryCertificate, DEFAULT_ATTEMPTS, SWEEP_CANDIDATES,
};

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactgeom::{Hyperplane, Vector};
use crate::polyhedron::Polyhedron;
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Witness { direction: Vector, hyperplane: Hyperplane },
    NoneCertified,
    NoneFoundHeuristic { samples: usize },
}

#[derive(Clone, Debug)]
pub struct SectionalProjectionReport {
    pub verdict: Verdict,
    pub trace: CertifierTrace,
}

impl SectionalProjectionReport {
    pub fn witness(&self) -> Option<(&Vector, &Hyperplane)> {
        match &self.verdict {
            Verdict::Witness { direction, hyperplane } => Some((direction, hyperplane)),
            _ => None,
        }
    }

    pub fn is_none_certified(&self) -> bool {
        self.verdict == Verdict::NoneCertified
    }

    pub fn to_json(&self) -> Value {
        let verdict = match &self.verdict {
            Verdict::Witness { direction, hyperplane } => json!({
                "kind": "witness",
                "direction": direction.to_strings(),
                "hyperplane": hyperplane_json(hyperplane),
            }),
            Verdict::NoneCertified => json!({ "kind": "none-certified" }),
            Verdict::NoneFoundHeuristic { samples } => json!({ "kind": "none-found-heuristic", "samples": samples }),
        };
        json!({ "verdict": verdict, "trace": self.trace.to_json() })
    }
}

/// `[offset, a_1, ..., a_n]` for `offset + a . x = 0`.
pub fn hyperplane_json(h: &Hyperplane) -> Value {
    json!(h.coefficients().iter().map(crate::exactgeom::format_scalar).collect::<Vec<_>>())
}

/// Projection onto `H` along `v`.
fn project_point(x: &Vector, v: &Vector, h: &Hyperplane, nv: &Rat) -> Vector {
    x.add_scaled(&(-h.eval(x) / nv), v)
}

fn project_direction(d: &Vector, v: &Vector, h: &Hyperplane, nv: &Rat) -> Vector {
    d.add_scaled(&(-h.normal().dot(d) / nv), v)
}

/// `(π(K), K ∩ H)` for the projection `π` onto `H` along `v`. Errors when the
/// slice is not contained in the shadow, which would be an arithmetic bug.
pub fn shadow_and_slice(k: &Polyhedron, v: &Vector, h: &Hyperplane) -> Result<(Polyhedron, Polyhedron)> {
    let n = k.ambient_dim();
    Error::check_dim(n, v.dim())?;
    Error::check_dim(n, h.dim())?;
    if v.is_zero() {
        return Err(Error::pre("projection direction must be nonzero"));
    }
    let nv = h.normal().dot(v);
    if nv.is_zero() {
        return Err(Error::pre("the hyperplane is parallel to the projection direction"));
    }
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let points: Vec<Vector> = k.points().iter().map(|x| project_point(x, v, h, &nv)).collect();
    let rays: Vec<Vector> = k.rays().iter().map(|d| project_direction(d, v, h, &nv)).collect();
    let lin: Vec<Vector> = k.lineality().iter().map(|d| project_direction(d, v, h, &nv)).collect();
    let shadow = Polyhedron::from_generators(n, &points, &rays, &lin)?;
    let slice = k.intersect_hyperplane(h)?;
    if !shadow.contains_polyhedron(&slice) {
        return Err(Error::Verification("slice is not contained in the shadow".into()));
    }
    Ok((shadow, slice))
}

/// Whether `(v, H)` is a sectional projection of `K`, decided by exact
/// equality of shadow and slice.
pub fn has_sectional_projection_at(k: &Polyhedron, v: &Vector, h: &Hyperplane) -> Result<bool> {
    let (shadow, slice) = shadow_and_slice(k, v, h)?;
    Ok(shadow == slice)
}

/// A sectional projection of a convex polygon.
///
/// `v` is a lineality direction, else an extreme ray, else `e2`. With `u`
/// orthogonal to `v` and nonnegative on the recession cone, `H` joins a point
/// minimizing `u` either to a point maximizing `u` or along a ray on which
/// `u` grows. Both shadow and slice are then the part of `H` over the range
/// of `u` on `P`.
pub fn polygon_sectional_projection(p: &Polyhedron) -> Result<(Vector, Hyperplane)> {
    Error::check_dim(2, p.ambient_dim())?;
    if p.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if p.dim() < 2 {
        return Err(Error::pre("a sectional projection of a polygon needs a 2-dimensional polygon"));
    }
    let e2 = Vector::unit(2, 1);
    if p.lineality().len() == 2 {
        return Ok((e2, Hyperplane::coordinate(2, 1, Rat::zero())));
    }
    let v = p.lineality().first().or_else(|| p.rays().first()).cloned().unwrap_or(e2);
    let mut u = Vector::new(vec![v[1].clone(), -v[0].clone()]);
    if p.rays().iter().chain(p.lineality()).any(|r| u.dot(r).is_negative()) {
        u = -u;
    }
    let extreme = |pick_max: bool| -> Vector {
        let key = |x: &Vector| if pick_max { -u.dot(x) } else { u.dot(x) };
        let best = p.points().iter().map(key).min().expect("nonempty");
        p.points().iter().filter(|x| key(x) == best).min().expect("nonempty").clone()
    };
    let lo = extreme(false);
    let line_dir = match p.rays().iter().find(|r| u.dot(r).is_positive()) {
        Some(r) => r.clone(),
        None => {
            let hi = extreme(true);
            if u.dot(&hi) == u.dot(&lo) {
                return Err(Error::Verification("polygon has constant width zero".into()));
            }
            &hi - &lo
        }
    };
    let normal = Vector::new(vec![line_dir[1].clone(), -line_dir[0].clone()]);
    let h = Hyperplane::through(&lo, normal)?;
    if !has_sectional_projection_at(p, &v, &h)? {
        return Err(Error::Verification("constructed pair is not a sectional projection".into()));
    }
    Ok((v, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::HalfSpace;

    fn poly(n: usize, cs: &[&[i64]]) -> Polyhedron {
        Polyhedron::from_halfspaces(n, &cs.iter().map(|c| HalfSpace::from_ints(c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn unit_square_uses_bottom_chord() {
        let sq = poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 0, -1]]);
        let (v, h) = polygon_sectional_projection(&sq).unwrap();
        assert_eq!(v, Vector::from_ints(&[0, 1]));
        assert_eq!(h, Hyperplane::coordinate(2, 1, Rat::zero()));
    }

    #[test]
    fn triangle_verifies() {
        let t = poly(2, &[&[0, 1, 0], &[0, 0, 1], &[1, -1, -1]]);
        let (v, h) = polygon_sectional_projection(&t).unwrap();
        assert!(has_sectional_projection_at(&t, &v, &h).unwrap());
    }

    #[test]
    fn unbounded_polygons() {
        for p in [
            poly(2, &[&[0, 1, 0], &[0, 0, 1]]),
            poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 1, -1]]),
            poly(2, &[&[0, 0, 1], &[1, 0, -1]]),
            poly(2, &[&[0, 1, 1]]),
            Polyhedron::whole_space(2),
        ] {
            let (v, h) = polygon_sectional_projection(&p).unwrap();
            assert!(has_sectional_projection_at(&p, &v, &h).unwrap());
        }
    }

    #[test]
    fn segment_is_rejected() {
        let s = poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
        assert!(polygon_sectional_projection(&s).is_err());
    }

    #[test]
    fn empty_slice_is_not_sectional() {
        let sq = poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 0, -1]]);
        let far = Hyperplane::coordinate(2, 1, Rat::from_integer(5.into()));
        assert!(!has_sectional_projection_at(&sq, &Vector::from_ints(&[0, 1]), &far).unwrap_or(false));
    }

    #[test]
    fn parallel_plane_is_an_error() {
        let sq = poly(2, &[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 0, -1]]);
        let h = Hyperplane::coordinate(2, 0, Rat::zero());
        assert!(has_sectional_projection_at(&sq, &Vector::from_ints(&[0, 1]), &h).is_err());
    }
}
