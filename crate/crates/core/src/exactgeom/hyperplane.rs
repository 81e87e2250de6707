use std::fmt;


use super::scalar::{format_scalar, primitive_factor, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::Rat;

/// Affine hyperplane `{x : offset + normal . x = 0}`.
///
/// Stored canonically: coprime integer coefficients, and the first nonzero
/// coefficient of `(offset, normal_1, ..., normal_n)` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane<S: Scalar = Rat> {
    offset: S,
    normal: Vector<S>,
}

impl<S: Scalar> Hyperplane<S> {
    pub fn new(offset: S, normal: Vector<S>) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::pre("hyperplane normal must be nonzero"));
        }
        let mut all = vec![offset];
        all.extend(normal.0);
        let f = primitive_factor(&all).expect("nonzero normal");
        let mut all: Vec<S> = all.into_iter().map(|c| c * f.clone()).collect();
        if all.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            all = all.into_iter().map(|c| -c).collect();
        }
        let offset = all.remove(0);
        Ok(Hyperplane { offset, normal: Vector(all) })
    }

    /// Coordinate hyperplane `{x_axis = value}` (axis is zero-based).
    pub fn coordinate(n: usize, axis: usize, value: S) -> Self {
        Self::new(-value, Vector::unit(n, axis)).expect("unit normal")
    }

    /// The hyperplane with the given normal through `point`.
    pub fn through(point: &Vector<S>, normal: Vector<S>) -> Result<Self> {
        let offset = -normal.dot(point);
        Self::new(offset, normal)
    }

    pub fn offset(&self) -> &S {
        &self.offset
    }

    pub fn normal(&self) -> &Vector<S> {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn eval(&self, x: &Vector<S>) -> S {
        self.offset.clone() + self.normal.dot(x)
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        self.eval(x).is_zero()
    }

    /// `{h >= 0}` and `{h <= 0}`.
    pub fn sides(&self) -> (HalfSpace<S>, HalfSpace<S>) {
        (
            HalfSpace::new(self.offset.clone(), self.normal.clone()),
            HalfSpace::new(-self.offset.clone(), -self.normal.clone()),
        )
    }

    pub fn coefficients(&self) -> Vec<S> {
        let mut c = vec![self.offset.clone()];
        c.extend(self.normal.0.iter().cloned());
        c
    }
}

impl<S: Scalar> fmt::Display for Hyperplane<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} = 0}}", linear_form(&self.offset, &self.normal))
    }
}

/// Closed half-space `{x : offset + normal . x >= 0}`.
///
/// Canonical form is the positive rescaling to coprime integers. The derived
/// order compares normals first, which is the tie-break order used for facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace<S: Scalar = Rat> {
    normal: Vector<S>,
    offset: S,
}

impl<S: Scalar> HalfSpace<S> {
    /// `{offset + normal . x >= 0}`. A zero normal gives a trivial or
    /// infeasible constraint, which polyhedron construction resolves.
    pub fn new(offset: S, normal: Vector<S>) -> Self {
        let mut all = vec![offset];
        all.extend(normal.0);
        if let Some(f) = primitive_factor(&all) {
            all = all.into_iter().map(|c| c * f.clone()).collect();
        }
        let offset = all.remove(0);
        HalfSpace { normal: Vector(all), offset }
    }

    /// `{offset + normal . x <= 0}`, stored with the sense flipped.
    pub fn le(offset: S, normal: Vector<S>) -> Self {
        Self::new(-offset, -normal)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(S::from_int(coeffs[0]), Vector::from_ints(&coeffs[1..]))
    }

    pub fn offset(&self) -> &S {
        &self.offset
    }

    pub fn normal(&self) -> &Vector<S> {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn eval(&self, x: &Vector<S>) -> S {
        self.offset.clone() + self.normal.dot(x)
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        !self.eval(x).is_negative()
    }

    pub fn boundary(&self) -> Result<Hyperplane<S>> {
        Hyperplane::new(self.offset.clone(), self.normal.clone())
    }

    pub fn flipped(&self) -> Self {
        Self::new(-self.offset.clone(), -self.normal.clone())
    }

    /// Homogeneous coefficient vector `(offset, normal...)`.
    pub fn coefficients(&self) -> Vec<S> {
        let mut c = vec![self.offset.clone()];
        c.extend(self.normal.0.iter().cloned());
        c
    }

    pub fn from_coefficients(c: &[S]) -> Self {
        Self::new(c[0].clone(), Vector(c[1..].to_vec()))
    }
}

impl<S: Scalar> fmt::Display for HalfSpace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} >= 0}}", linear_form(&self.offset, &self.normal))
    }
}

fn linear_form<S: Scalar>(offset: &S, normal: &Vector<S>) -> String {
    let mut parts = Vec::new();
    for (i, c) in normal.iter().enumerate() {
        if !c.is_zero() {
            parts.push(format!("{}*x{}", format_scalar(c), i + 1));
        }
    }
    if !offset.is_zero() || parts.is_empty() {
        parts.push(format_scalar(offset));
    }
    parts.join(" + ")
}
