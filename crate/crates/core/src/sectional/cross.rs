//! Cross-polytopes, perturbed octahedra without sectional projections, and
//! the `R^4` prism `P × [0, ∞)` that admits no trimming position.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{certify_no_sectional_projections, SectionalProjectionReport};
use crate::error::{Error, Result};
use crate::exactgeom::{format_scalar, AffineMap, HalfSpace, Vector};
use crate::polyhedron::Polyhedron;
use crate::trimming::{
    affine_map_json, halfspace_json, is_first_trimming, is_second_trimming, polyhedron_json, TrimmingChecks,
    TrimmingKind,
};
use crate::Rat;
use num_traits::{One, Zero};

/// Convex hull of `±e_i`, built from its `2^n` facets `Σ ε_i x_i <= 1`.
pub fn cross_polytope(n: usize) -> Result<Polyhedron> {
    if n < 2 {
        return Err(Error::pre("cross-polytopes need dimension at least 2"));
    }
    let hs: Vec<HalfSpace> = (0..1u64 << n)
        .map(|mask| {
            let normal = (0..n).map(|i| if mask >> i & 1 == 1 { Rat::one() } else { -Rat::one() }).collect();
            HalfSpace::new(Rat::one(), -Vector::new(normal))
        })
        .collect();
    Polyhedron::from_halfspaces(n, &hs)
}

/// The octahedron vertices in the order `e1, -e1, e2, -e2, e3, -e3`.
fn octahedron_vertices() -> Vec<Vector> {
    (0..6)
        .map(|i| {
            let mut v = Vector::zeros(3);
            v[i / 2] = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
            v
        })
        .collect()
}

/// Whether the hull of `pts` (listed as `e1, -e1, e2, -e2, e3, -e3` moved
/// slightly) has exactly these six vertices and the eight facets
/// `{±e1, ±e2, ±e3}` of the octahedron.
pub fn has_octahedral_lattice(k: &Polyhedron, pts: &[Vector]) -> bool {
    if pts.len() != 6 || k.vertices().len() != 6 || k.facets().len() != 8 {
        return false;
    }
    if !pts.iter().all(|p| k.vertices().contains(p)) {
        return false;
    }
    k.facets().iter().all(|f| {
        let on: Vec<usize> = (0..6).filter(|&i| f.eval(&pts[i]).is_zero()).collect();
        on.len() == 3 && (0..3).all(|axis| on.iter().filter(|&&i| i / 2 == axis).count() == 1)
    })
}

/// A polytope found by a seeded search, with its certificate.
#[derive(Clone, Debug)]
pub struct CertifiedPolytope {
    pub family: &'static str,
    pub polyhedron: Polyhedron,
    pub report: SectionalProjectionReport,
    /// Zero-based attempt that succeeded.
    pub attempt: usize,
    pub vertices: Vec<Vector>,
}

impl CertifiedPolytope {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "attempt": self.attempt,
            "vertices": self.vertices.iter().map(|v| v.to_strings()).collect::<Vec<_>>(),
            "polyhedron": polyhedron_json(&self.polyhedron),
            "report": self.report.to_json(),
        })
    }
}

pub const DEFAULT_ATTEMPTS: usize = 1000;

fn attempt_rng(seed: u64, attempt: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    rng
}

/// Moves each octahedron coordinate by `k/16` with `|k| <= 2` until the hull
/// keeps the octahedral face lattice and is certified to have no sectional
/// projection. Attempt `i` draws from stream `i` of the seeded generator.
pub fn perturbed_cross_polytope(seed: u64) -> Result<CertifiedPolytope> {
    perturbed_cross_polytope_with(seed, DEFAULT_ATTEMPTS)
}

pub fn perturbed_cross_polytope_with(seed: u64, max_attempts: usize) -> Result<CertifiedPolytope> {
    let sixteenth = Rat::new(1.into(), 16.into());
    for attempt in 0..max_attempts {
        let mut rng = attempt_rng(seed, attempt);
        let vertices: Vec<Vector> = octahedron_vertices()
            .into_iter()
            .map(|v| Vector::new(v.iter().map(|c| c + &sixteenth * Rat::from_integer(rng.gen_range(-2..=2).into())).collect()))
            .collect();
        let k = Polyhedron::from_generators(3, &vertices, &[], &[])?;
        if !has_octahedral_lattice(&k, &vertices) {
            continue;
        }
        let report = certify_no_sectional_projections(&k)?;
        if report.is_none_certified() {
            return Ok(CertifiedPolytope { family: "perturbed-cross-polytope", polyhedron: k, report, attempt, vertices });
        }
    }
    Err(Error::IterationCap(max_attempts))
}

/// Hulls of `points` random lattice points `k/16` in the shell
/// `14/16 <= |x| <= 1`, kept when every point is a vertex, until one is
/// certified to have no sectional projection.
pub fn shell_polytope(seed: u64, points: usize, max_attempts: usize) -> Result<CertifiedPolytope> {
    if points < 4 {
        return Err(Error::pre("a 3-polytope needs at least four points"));
    }
    for attempt in 0..max_attempts {
        let mut rng = attempt_rng(seed, attempt);
        let mut vertices: Vec<Vector> = Vec::with_capacity(points);
        while vertices.len() < points {
            let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-16..=16)).collect();
            let r2: i64 = c.iter().map(|x| x * x).sum();
            if !(196..=256).contains(&r2) {
                continue;
            }
            let v = Vector::new(c.into_iter().map(|x| Rat::new(x.into(), 16.into())).collect());
            if !vertices.contains(&v) {
                vertices.push(v);
            }
        }
        let k = Polyhedron::from_generators(3, &vertices, &[], &[])?;
        if !k.is_full_dimensional() || k.vertices().len() != points {
            continue;
        }
        let report = certify_no_sectional_projections(&k)?;
        if report.is_none_certified() {
            return Ok(CertifiedPolytope { family: "shell-sample", polyhedron: k, report, attempt, vertices });
        }
    }
    Err(Error::IterationCap(max_attempts))
}

/// One member of the falsification family for the prism.
#[derive(Clone, Debug)]
pub struct CandidateOutcome {
    pub index: usize,
    pub kind: TrimmingKind,
    pub facet_index: usize,
    pub map: AffineMap,
    pub checks: TrimmingChecks,
}

#[derive(Clone, Debug)]
pub struct CorollaryCertificate {
    pub polyhedron: Polyhedron,
    pub base: Polyhedron,
    pub base_report: SectionalProjectionReport,
    pub edge_direction: Vector,
    pub base_facet: HalfSpace,
    /// Projection along the edge direction onto the base facet's hyperplane.
    pub rho: AffineMap,
    pub candidates: Vec<CandidateOutcome>,
}

impl CorollaryCertificate {
    pub fn all_candidates_fail(&self) -> bool {
        self.candidates.iter().all(|c| !c.checks.all())
    }

    pub fn to_json(&self) -> Value {
        let steps = [
            "a first trimming position yields a hyperplane Pi crossing every unbounded edge once; the edges are parallel to the edge direction, so Pi is transverse to it",
            "g = rho restricted to Pi is an affine bijection onto the base hyperplane",
            "K meets Pi in the polytope spanned by the edge crossings, and rho maps it onto the base facet",
            "conjugating the vertical projection of Pi by g gives a sectional projection of the base facet, which the base report rules out",
            "for a second trimming position with respect to an unbounded facet, the hyperplane from the fiber-set characterization plays the role of Pi",
        ];
        let candidates: Vec<Value> = self
            .candidates
            .iter()
            .map(|c| {
                json!({
                    "index": c.index,
                    "kind": c.kind,
                    "facet_index": c.facet_index,
                    "map": affine_map_json(&c.map),
                    "checks": c.checks,
                    "passes": c.checks.all(),
                })
            })
            .collect();
        json!({
            "polyhedron": polyhedron_json(&self.polyhedron),
            "base": polyhedron_json(&self.base),
            "base_report": self.base_report.to_json(),
            "reduction": {
                "edge_direction": self.edge_direction.to_strings(),
                "base_facet": halfspace_json(&self.base_facet),
                "rho": {
                    "linear": self.rho.linear().iter().map(|r| r.iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "translation": self.rho.translation().to_strings(),
                },
                "steps": steps,
            },
            "falsification_sweep": {
                "candidates": candidates,
                "all_fail": self.all_candidates_fail(),
            },
        })
    }
}

pub const SWEEP_CANDIDATES: usize = 200;

/// A change of coordinates putting `facet` in `{x_axis = 0}` with `K` below,
/// the remaining rows a shuffled unit basis followed by integer shears.
fn candidate_map(facet: &HalfSpace, axis: usize, rng: &mut ChaCha8Rng) -> Result<AffineMap> {
    let n = facet.dim();
    let a = facet.normal();
    let pivot = (0..n).find(|&i| !a[i].is_zero()).expect("facet normal is nonzero");
    let mut others: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
    others.shuffle(rng);
    let mut rows = Vec::with_capacity(n);
    let mut offsets = Vec::with_capacity(n);
    let mut it = others.into_iter();
    for i in 0..n {
        if i == axis {
            rows.push(-a.clone());
            offsets.push(-facet.offset().clone());
        } else {
            rows.push(Vector::unit(n, it.next().expect("n - 1 unit rows")));
            offsets.push(Rat::zero());
        }
    }
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == axis || i == j {
            continue;
        }
        let c = Rat::from_integer(rng.gen_range(-2..=2).into());
        rows[i] = rows[i].add_scaled(&c, &rows[j]);
        offsets[i] = offsets[i].clone() + c * offsets[j].clone();
    }
    AffineMap::from_functionals(rows, offsets)
}

/// `K = P × [0, ∞)` for a polytope `P ⊂ R^3` certified to have no sectional
/// projection, with the reduction record and a seeded sweep of
/// [`SWEEP_CANDIDATES`] candidate positions: first trimming positions over
/// all facets and second ones over the unbounded facets, each evaluated by
/// the trimming predicates.
pub fn corollary_counterexample(
    p: &Polyhedron,
    report: &SectionalProjectionReport,
    seed: u64,
) -> Result<CorollaryCertificate> {
    Error::check_dim(3, p.ambient_dim())?;
    if !report.is_none_certified() {
        return Err(Error::pre("the base polytope must be certified to have no sectional projection"));
    }
    let recheck = certify_no_sectional_projections(p)?;
    if !recheck.is_none_certified() {
        return Err(Error::pre("the base polytope has a sectional projection"));
    }
    let mut hs: Vec<HalfSpace> =
        p.facets().iter().map(|f| HalfSpace::new(f.offset().clone(), f.normal().with_inserted(3, Rat::zero()))).collect();
    let base_facet = HalfSpace::new(Rat::zero(), Vector::unit(4, 3));
    hs.push(base_facet.clone());
    let k = Polyhedron::from_halfspaces(4, &hs)?;
    let mut linear = crate::exactgeom::linalg::identity::<Rat>(4);
    linear[3][3] = Rat::zero();
    let rho = AffineMap::new(linear, Vector::zeros(4))?;

    let facets = k.facets();
    let unbounded: Vec<usize> = (0..facets.len()).filter(|&i| facets[i].normal()[3].is_zero()).collect();
    let mut candidates = Vec::with_capacity(SWEEP_CANDIDATES);
    for index in 0..SWEEP_CANDIDATES {
        let mut rng = attempt_rng(seed, index);
        let (kind, facet_index) = if index % 2 == 0 {
            (TrimmingKind::First, (index / 2) % facets.len())
        } else {
            (TrimmingKind::Second, unbounded[(index / 2) % unbounded.len()])
        };
        let map = candidate_map(&facets[facet_index], kind.facet_axis(4), &mut rng)?;
        if !map.is_invertible() {
            return Err(Error::Verification("candidate map is singular".into()));
        }
        let image = k.transform(&map)?;
        let idx = image
            .facet_index(&map.image_halfspace(&facets[facet_index])?)
            .ok_or_else(|| Error::Verification("image of the facet is not a facet".into()))?;
        let checks = match kind {
            TrimmingKind::First => is_first_trimming(&image, idx)?,
            TrimmingKind::Second => is_second_trimming(&image, idx)?,
        };
        if !checks.facet_in_plane || !checks.inside_halfspace {
            return Err(Error::Verification("candidate map does not place the facet".into()));
        }
        candidates.push(CandidateOutcome { index, kind, facet_index, map, checks });
    }
    Ok(CorollaryCertificate {
        polyhedron: k,
        base: p.clone(),
        base_report: recheck,
        edge_direction: Vector::unit(4, 3),
        base_facet,
        rho,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_polytope_counts() {
        for (n, v, f) in [(2, 4, 4), (3, 6, 8), (4, 8, 16)] {
            let k = cross_polytope(n).unwrap();
            assert_eq!((k.vertices().len(), k.facets().len()), (v, f));
        }
        assert!(cross_polytope(1).is_err());
    }

    #[test]
    fn octahedron_lattice_is_recognized() {
        let k = cross_polytope(3).unwrap();
        assert!(has_octahedral_lattice(&k, &octahedron_vertices()));
        let mut moved = octahedron_vertices();
        moved.swap(0, 2);
        assert!(!has_octahedral_lattice(&k, &moved));
    }

    #[test]
    fn octahedron_prism_is_rejected() {
        let k = cross_polytope(3).unwrap();
        let r = certify_no_sectional_projections(&k).unwrap();
        assert!(corollary_counterexample(&k, &r, 0).is_err());
    }
}
