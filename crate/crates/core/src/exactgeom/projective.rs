//! Homogeneous points and the coordinate-swap involution of projective space.

use num_traits::Zero;

use super::scalar::Scalar;
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::Rat;

/// Point `(x_0 : x_1 : ... : x_n)` of real projective `n`-space.
#[derive(Clone, Debug)]
pub struct HomPoint<S: Scalar = Rat> {
    coords: Vec<S>,
}

impl<S: Scalar> HomPoint<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroHomogeneous);
        }
        Ok(HomPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| S::from_int(c)).collect())
    }

    /// The affine point `x` as `(1 : x)`.
    pub fn from_affine(x: &Vector<S>) -> Self {
        let mut c = vec![S::one()];
        c.extend(x.iter().cloned());
        HomPoint { coords: c }
    }

    /// The point at infinity `(0 : v)` in direction `v`.
    pub fn at_infinity(v: &Vector<S>) -> Result<Self> {
        let mut c = vec![S::zero()];
        c.extend(v.iter().cloned());
        Self::new(c)
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[0].is_zero()
    }

    /// Affine chart `x_0 != 0`.
    pub fn to_affine(&self) -> Result<Vector<S>> {
        if self.is_at_infinity() {
            return Err(Error::PointAtInfinity);
        }
        let x0 = self.coords[0].clone();
        Ok(Vector(self.coords[1..].iter().map(|c| c.clone() / x0.clone()).collect()))
    }
}

impl<S: Scalar> PartialEq for HomPoint<S> {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        // proportional iff all 2x2 minors vanish
        let n = self.coords.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                self.coords[i].clone() * other.coords[j].clone()
                    == self.coords[j].clone() * other.coords[i].clone()
            })
        })
    }
}

impl<S: Scalar> Eq for HomPoint<S> {}

/// `(x_0 : x_1 : ... : x_{n-1} : x_n) -> (x_n : x_1 : ... : x_{n-1} : x_0)`.
pub fn phi_involution<S: Scalar>(p: &HomPoint<S>) -> HomPoint<S> {
    let mut c = p.coords.clone();
    let last = c.len() - 1;
    c.swap(0, last);
    HomPoint { coords: c }
}

/// Affine restriction of the involution:
/// `(x_1, ..., x_n) -> (x_1/x_n, ..., x_{n-1}/x_n, 1/x_n)`.
pub fn affine_dehomogenize_phi<S: Scalar>(x: &Vector<S>) -> Result<Vector<S>> {
    let n = x.dim();
    let xn = x[n - 1].clone();
    if xn.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let mut out: Vec<S> = x.0[..n - 1].iter().map(|c| c.clone() / xn.clone()).collect();
    out.push(S::one() / xn);
    Ok(Vector(out))
}

/// Image of the point at infinity in direction `v`: `(v_1/v_n, ..., v_{n-1}/v_n, 0)`.
pub fn phi_of_direction<S: Scalar>(v: &Vector<S>) -> Result<Vector<S>> {
    let n = v.dim();
    let vn = v[n - 1].clone();
    if vn.is_zero() {
        return Err(Error::PointAtInfinity);
    }
    let mut out: Vec<S> = v.0[..n - 1].iter().map(|c| c.clone() / vn.clone()).collect();
    out.push(S::zero());
    Ok(Vector(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn involution_examples() {
        let p: HomPoint = HomPoint::from_ints(&[1, 1, 2, 4]).unwrap();
        assert_eq!(phi_involution(&p).coords(), HomPoint::<Rat>::from_ints(&[4, 1, 2, 1]).unwrap().coords());
        let inf: HomPoint = HomPoint::from_ints(&[0, 0, 0, 1]).unwrap();
        assert_eq!(phi_involution(&inf), HomPoint::from_ints(&[1, 0, 0, 0]).unwrap());
        assert_eq!(phi_involution(&phi_involution(&p)), p);
        assert_eq!(HomPoint::<Rat>::from_ints(&[0, 0, 0]), Err(Error::ZeroHomogeneous));
    }

    #[test]
    fn projective_equality_is_up_to_scale() {
        let a: HomPoint = HomPoint::from_ints(&[1, 2, 3]).unwrap();
        let b: HomPoint = HomPoint::from_ints(&[-2, -4, -6]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, HomPoint::from_ints(&[1, 2, 4]).unwrap());
    }

    #[test]
    fn dehomogenize_examples() {
        let x: Vector = Vector::from_ints(&[1, 2, 4]);
        assert_eq!(affine_dehomogenize_phi(&x).unwrap(), Vector(vec![q(1, 4), q(1, 2), q(1, 4)]));
        let e: Vector = Vector::from_ints(&[0, 0, 1]);
        assert_eq!(affine_dehomogenize_phi(&e).unwrap(), e);
        let f: Vector = Vector::from_ints(&[2, 2, 1]);
        assert_eq!(affine_dehomogenize_phi(&f).unwrap(), f);
        assert_eq!(affine_dehomogenize_phi(&Vector::<Rat>::from_ints(&[1, 0])), Err(Error::PointAtInfinity));
    }

    #[test]
    fn affine_restriction_agrees_with_involution() {
        let x: Vector = Vector(vec![q(3, 2), q(-1, 3), q(5, 7)]);
        let via_hom = phi_involution(&HomPoint::from_affine(&x)).to_affine().unwrap();
        assert_eq!(via_hom, affine_dehomogenize_phi(&x).unwrap());
    }
}
