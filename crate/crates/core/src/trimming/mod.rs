//! First and second trimming positions: predicates, constructive placements
//! for 3-dimensional polyhedra, and the facet-elimination schedule.

mod certificate;
mod fiber;
mod placement;
mod schedule;

pub use certificate::{affine_map_json, halfspace_json, polyhedron_from_json, polyhedron_json};
pub use fiber::{
    a_bounded_characterized, a_bounded_direct, fiber_set, projected_cone_matches, section_clause_holds, FiberAnalysis,
};
pub use placement::{
    classify_facets, common_trimming_facet, place_first, place_second, FacetKind, PlacementTrace, Triangle,
};
pub use schedule::{schedule, Schedule, Stage, Terminal};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{AffineMap, HalfSpace, Vector};
use crate::polyhedron::Polyhedron;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrimmingKind {
    First,
    Second,
}

impl TrimmingKind {
    /// Zero-based coordinate whose hyperplane holds the facet.
    pub fn facet_axis(self, n: usize) -> usize {
        match self {
            TrimmingKind::First => n - 2,
            TrimmingKind::Second => n - 1,
        }
    }
}

/// Clause-by-clause evaluation of a trimming position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrimmingChecks {
    pub kind: TrimmingKind,
    /// The facet lies in the coordinate hyperplane.
    pub facet_in_plane: bool,
    /// `K` lies in the nonpositive side of that hyperplane.
    pub inside_halfspace: bool,
    /// Every vertical fiber is bounded; first position only.
    pub fibers_bounded: Option<bool>,
    pub a_set_bounded: bool,
}

impl TrimmingChecks {
    pub fn all(&self) -> bool {
        self.facet_in_plane && self.inside_halfspace && self.fibers_bounded != Some(false) && self.a_set_bounded
    }
}

fn check_facet_input(k: &Polyhedron, facet: usize) -> Result<()> {
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !k.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if facet >= k.facets().len() {
        return Err(Error::OutOfRange { index: facet, len: k.facets().len() });
    }
    Ok(())
}

fn evaluate(k: &Polyhedron, facet: usize, kind: TrimmingKind) -> Result<TrimmingChecks> {
    check_facet_input(k, facet)?;
    let n = k.ambient_dim();
    if n < 2 {
        return Err(Error::pre("needs ambient dimension at least 2"));
    }
    let axis = kind.facet_axis(n);
    let f = &k.facets()[facet];
    let e = Vector::unit(n, axis);
    let facet_in_plane = f.offset().is_zero() && (f.normal() == &e || f.normal() == &-e.clone());
    let inside_halfspace = match k.maximize(&e, &Zero::zero())? {
        Some(m) => !m.is_positive(),
        None => false,
    };
    let fibers_bounded = match kind {
        TrimmingKind::First => {
            let c = k.recession_cone()?;
            let up = Vector::unit(n, n - 1);
            Some(!c.contains(&up) && !c.contains(&-up))
        }
        TrimmingKind::Second => None,
    };
    Ok(TrimmingChecks { kind, facet_in_plane, inside_halfspace, fibers_bounded, a_set_bounded: a_bounded_direct(k)? })
}

/// Clauses of the first trimming position of `K` with respect to its facet
/// `facet` (an index into [`Polyhedron::facets`]).
pub fn is_first_trimming(k: &Polyhedron, facet: usize) -> Result<TrimmingChecks> {
    evaluate(k, facet, TrimmingKind::First)
}

/// Clauses of the second trimming position.
pub fn is_second_trimming(k: &Polyhedron, facet: usize) -> Result<TrimmingChecks> {
    evaluate(k, facet, TrimmingKind::Second)
}

/// A placement: the facet of the input, the change of coordinates, and the
/// clauses evaluated on the image.
#[derive(Clone, Debug)]
pub struct TrimmingCertificate {
    pub facet_index: usize,
    pub facet: HalfSpace,
    pub kind: TrimmingKind,
    pub map: AffineMap,
    pub checks: TrimmingChecks,
    pub trace: PlacementTrace,
}

impl TrimmingCertificate {
    /// Index of the image facet in `T(K)`.
    pub fn image_facet(&self, image: &Polyhedron) -> Result<usize> {
        let h = self.map.image_halfspace(&self.facet)?;
        image.facet_index(&h).ok_or_else(|| Error::Verification("image of the facet is not a facet".into()))
    }

    /// Recomputes every clause on `T(K)` from scratch.
    pub fn verify(&self, k: &Polyhedron) -> Result<bool> {
        if !self.map.is_invertible() || k.facets().get(self.facet_index) != Some(&self.facet) {
            return Ok(false);
        }
        let image = k.transform(&self.map)?;
        let idx = self.image_facet(&image)?;
        let checks = evaluate(&image, idx, self.kind)?;
        let triangle_ok = match &self.trace.triangle {
            Some(t) => t.contains_a_set(&image)?,
            None => true,
        };
        Ok(checks.all() && checks == self.checks && triangle_ok)
    }
}
