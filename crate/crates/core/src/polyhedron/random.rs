//! Seeded random polyhedra for tests and experiments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Polyhedron;
use crate::exactgeom::{HalfSpace, Vector};
use crate::Rat;

/// Filters and sampling knobs for [`random_polyhedron`].
#[derive(Clone, Debug)]
pub struct RandomConfig {
    pub dim: usize,
    pub min_halfspaces: usize,
    pub max_halfspaces: usize,
    /// Coefficients are `k/d` with `|k/d| <= coeff_bound` and `d <= max_denom`.
    pub coeff_bound: i64,
    pub max_denom: i64,
    /// Flip normals so they are nonnegative on this direction, which makes
    /// unbounded results common.
    pub recession_bias: Option<Vector<Rat>>,
    /// Sample coefficients from `{-1, 0, 1}` so that parallel and vertical
    /// structure shows up often.
    pub small_integers: bool,
    pub require_full_dim: bool,
    pub require_nondegenerate: bool,
    pub require_unbounded: bool,
    pub require_bounded: bool,
    pub reject_layers: bool,
    pub facet_range: Option<(usize, usize)>,
    pub max_attempts: usize,
}

impl RandomConfig {
    pub fn new(dim: usize) -> Self {
        RandomConfig {
            dim,
            min_halfspaces: 4,
            max_halfspaces: 10,
            coeff_bound: 5,
            max_denom: 3,
            recession_bias: None,
            small_integers: false,
            require_full_dim: true,
            require_nondegenerate: false,
            require_unbounded: false,
            require_bounded: false,
            reject_layers: false,
            facet_range: None,
            max_attempts: 100_000,
        }
    }

    /// Full-dimensional, pointed and unbounded.
    pub fn unbounded_nondegenerate(dim: usize) -> Self {
        let mut c = Self::new(dim);
        c.require_nondegenerate = true;
        c.require_unbounded = true;
        c
    }

    pub fn bounded(dim: usize) -> Self {
        let mut c = Self::new(dim);
        c.require_bounded = true;
        c
    }

    fn accepts(&self, k: &Polyhedron<Rat>) -> bool {
        if k.is_empty() {
            return false;
        }
        if self.require_full_dim && !k.is_full_dimensional() {
            return false;
        }
        if self.require_nondegenerate && k.is_degenerate() {
            return false;
        }
        if self.require_unbounded && k.is_bounded() {
            return false;
        }
        if self.require_bounded && !k.is_bounded() {
            return false;
        }
        if self.reject_layers && k.is_layer() {
            return false;
        }
        if let Some((lo, hi)) = self.facet_range {
            if k.facets().len() < lo || k.facets().len() > hi {
                return false;
            }
        }
        true
    }
}

fn coefficient(rng: &mut ChaCha8Rng, cfg: &RandomConfig) -> Rat {
    if cfg.small_integers {
        return Rat::from_integer(rng.gen_range(-1i64..=1).into());
    }
    let d = rng.gen_range(1..=cfg.max_denom);
    let k = rng.gen_range(-cfg.coeff_bound * d..=cfg.coeff_bound * d);
    Rat::new(k.into(), d.into())
}

fn sample_halfspace(rng: &mut ChaCha8Rng, cfg: &RandomConfig) -> HalfSpace<Rat> {
    loop {
        let normal = Vector((0..cfg.dim).map(|_| coefficient(rng, cfg)).collect());
        if normal.is_zero() {
            continue;
        }
        let offset = coefficient(rng, cfg);
        let h = HalfSpace::new(offset, normal);
        return match &cfg.recession_bias {
            Some(d) if h.normal().dot(d) < Rat::from_integer(0.into()) => h.flipped(),
            _ => h,
        };
    }
}

/// One random polyhedron satisfying `cfg`, drawn from `rng`.
pub fn random_polyhedron_with(rng: &mut ChaCha8Rng, cfg: &RandomConfig) -> Option<Polyhedron<Rat>> {
    for _ in 0..cfg.max_attempts {
        let m = rng.gen_range(cfg.min_halfspaces..=cfg.max_halfspaces);
        let hs: Vec<HalfSpace<Rat>> = (0..m).map(|_| sample_halfspace(rng, cfg)).collect();
        let k = Polyhedron::from_halfspaces(cfg.dim, &hs).expect("consistent dimensions");
        if cfg.accepts(&k) {
            return Some(k);
        }
    }
    None
}

/// Deterministic random polyhedron for `seed`.
pub fn random_polyhedron(seed: u64, cfg: &RandomConfig) -> Option<Polyhedron<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_polyhedron_with(&mut rng, cfg)
}

/// `count` polyhedra from one seeded stream.
pub fn random_family(seed: u64, count: usize, cfg: &RandomConfig) -> Vec<Polyhedron<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).filter_map(|_| random_polyhedron_with(&mut rng, cfg)).collect()
}
