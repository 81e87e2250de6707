use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;

use super::scalar::{format_scalar, primitive_factor, Scalar};
use crate::error::{Error, Result};
use crate::Rat;

/// A point or direction of `R^n` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<S: Scalar = Rat>(pub Vec<S>);

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![S::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = S::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn checked_dot(&self, other: &Self) -> Result<S> {
        Error::check_dim(self.dim(), other.dim())?;
        Ok(self.dot(other))
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector(self.0.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: &S, other: &Self) -> Self {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + k.clone() * b.clone())
                .collect(),
        )
    }

    /// Positive rescaling to coprime integer coordinates; the direction is kept.
    pub fn primitive(&self) -> Self {
        match primitive_factor(&self.0) {
            Some(f) => self.scale(&f),
            None => self.clone(),
        }
    }

    /// Primitive form whose first nonzero coordinate is positive; used for lines.
    pub fn primitive_unsigned(&self) -> Self {
        let p = self.primitive();
        match p.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => -p,
            _ => p,
        }
    }

    /// Drops coordinate `i`.
    pub fn without(&self, i: usize) -> Self {
        let mut c = self.0.clone();
        c.remove(i);
        Vector(c)
    }

    /// Inserts `value` at position `i`.
    pub fn with_inserted(&self, i: usize, value: S) -> Self {
        let mut c = self.0.clone();
        c.insert(i, value);
        Vector(c)
    }

    pub fn last(&self) -> &S {
        self.0.last().expect("nonempty vector")
    }

    /// Cross product in `R^3`.
    pub fn cross(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), 3, "cross product needs dimension 3");
        let (a, b) = (&self.0, &other.0);
        Vector(vec![
            a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
            a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
            a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
        ])
    }

    /// True when `self = k * other` for some `k > 0`.
    pub fn same_direction(&self, other: &Self) -> bool {
        !self.is_zero() && self.primitive() == other.primitive()
    }

    /// True when the two nonzero vectors span the same line.
    pub fn parallel(&self, other: &Self) -> bool {
        !self.is_zero() && !other.is_zero() && self.primitive_unsigned() == other.primitive_unsigned()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_scalar).collect()
    }

    pub fn average(points: &[Self]) -> Self {
        assert!(!points.is_empty());
        let n = points[0].dim();
        let mut acc = Self::zeros(n);
        for p in points {
            acc = &acc + p;
        }
        acc.scale(&(S::one() / S::from_int(points.len() as i64)))
    }
}

impl<S: Scalar> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S: Scalar> IndexMut<usize> for Vector<S> {
    fn index_mut(&mut self, i: usize) -> &mut S {
        &mut self.0[i]
    }
}

impl<S: Scalar> Add for &Vector<S> {
    type Output = Vector<S>;
    fn add(self, rhs: Self) -> Vector<S> {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }
}

impl<S: Scalar> Sub for &Vector<S> {
    type Output = Vector<S>;
    fn sub(self, rhs: Self) -> Vector<S> {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() - b.clone()).collect())
    }
}

impl<S: Scalar> Neg for Vector<S> {
    type Output = Vector<S>;
    fn neg(self) -> Vector<S> {
        Vector(self.0.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_keeps_sign_and_clears_denominators() {
        let v: Vector = Vector::new(vec![
            Rat::new((-1).into(), 2.into()),
            Rat::new(3.into(), 4.into()),
            Rat::zero(),
        ]);
        assert_eq!(v.primitive(), Vector::from_ints(&[-2, 3, 0]));
        assert_eq!(v.primitive_unsigned(), Vector::from_ints(&[2, -3, 0]));
    }

    #[test]
    fn cross_and_parallel() {
        let x: Vector = Vector::unit(3, 0);
        let y = Vector::unit(3, 1);
        assert_eq!(x.cross(&y), Vector::unit(3, 2));
        assert!(Vector::<Rat>::from_ints(&[2, 0, 0]).parallel(&Vector::from_ints(&[-1, 0, 0])));
        assert!(!Vector::<Rat>::from_ints(&[2, 0, 0]).same_direction(&Vector::from_ints(&[-1, 0, 0])));
    }
}
