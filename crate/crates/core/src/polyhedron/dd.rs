//! Double description method for polyhedral cones.
//!
//! Computes generators (extreme rays plus a lineality basis) of
//! `{y in R^d : c . y >= 0 for every constraint c}` by inserting one
//! constraint at a time. Adjacency of rays uses the combinatorial test, which
//! is exact because the ray list always consists of extreme rays only.

use num_traits::Zero;

use crate::exactgeom::scalar::{primitive_factor, Scalar};

#[derive(Clone, Debug)]
pub(crate) struct ConeGenerators<S: Scalar> {
    pub rays: Vec<Vec<S>>,
    pub lineality: Vec<Vec<S>>,
}

#[derive(Clone, Debug, Default)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn insert(&mut self, i: usize) {
        let (w, b) = (i / 64, i % 64);
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << b;
    }

    fn intersection(&self, other: &Self) -> Self {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset_of(&self, other: &Self) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, w)| w & !self.0.get(i).copied().unwrap_or(0) == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray<S: Scalar> {
    coords: Vec<S>,
    zeros: BitSet,
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn normalize<S: Scalar>(v: Vec<S>) -> Vec<S> {
    match primitive_factor(&v) {
        Some(f) => v.into_iter().map(|c| c * f.clone()).collect(),
        None => v,
    }
}

/// Generators of `{y : c . y >= 0 for c in constraints}` in `R^dim`.
pub(crate) fn cone_generators<S: Scalar>(dim: usize, constraints: &[Vec<S>]) -> ConeGenerators<S> {
    let mut lineality: Vec<Vec<S>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect();
    let mut rays: Vec<Ray<S>> = Vec::new();

    for (ci, c) in constraints.iter().enumerate() {
        if c.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(li) = lineality.iter().position(|l| !dot(c, l).is_zero()) {
            let mut l = lineality.remove(li);
            let mut cl = dot(c, &l);
            if cl.is_negative() {
                l = l.into_iter().map(|x| -x).collect();
                cl = -cl;
            }
            for other in lineality.iter_mut() {
                let f = dot(c, other) / cl.clone();
                if !f.is_zero() {
                    let v: Vec<S> = other.iter().zip(&l).map(|(o, x)| o.clone() - f.clone() * x.clone()).collect();
                    *other = normalize(v);
                }
            }
            for r in rays.iter_mut() {
                let f = dot(c, &r.coords) / cl.clone();
                if !f.is_zero() {
                    let v: Vec<S> = r.coords.iter().zip(&l).map(|(o, x)| o.clone() - f.clone() * x.clone()).collect();
                    r.coords = normalize(v);
                }
                r.zeros.insert(ci);
            }
            // l itself is orthogonal to every earlier constraint
            let mut zeros = BitSet::default();
            for k in 0..ci {
                zeros.insert(k);
            }
            rays.push(Ray { coords: normalize(l), zeros });
            continue;
        }

        let values: Vec<S> = rays.iter().map(|r| dot(c, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(ci);
                }
            }
            continue;
        }
        // pointed part dimension: pairs of adjacent rays share at least
        // (d - lin - 2) tight constraints
        let min_common = (dim - lineality.len()).saturating_sub(2);
        let mut new_rays: Vec<Ray<S>> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.len() < min_common {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&k| k != p && k != q)
                    .all(|k| !rays[k].zeros.is_superset_of(&common));
                if !adjacent {
                    continue;
                }
                let vp = values[p].clone();
                let vq = -values[q].clone();
                let coords: Vec<S> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(a, b)| a.clone() * vq.clone() + b.clone() * vp.clone())
                    .collect();
                let mut zeros = common;
                zeros.insert(ci);
                new_rays.push(Ray { coords: normalize(coords), zeros });
            }
        }
        let old = std::mem::take(&mut rays);
        for (r, v) in old.into_iter().zip(values) {
            if v.is_positive() {
                rays.push(r);
            } else if v.is_zero() {
                let mut r = r;
                r.zeros.insert(ci);
                rays.push(r);
            }
        }
        rays.extend(new_rays);
    }

    ConeGenerators { rays: rays.into_iter().map(|r| r.coords).collect(), lineality }
}
