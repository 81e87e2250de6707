
use super::hyperplane::{HalfSpace, Hyperplane};
use super::linalg::{self, Matrix};
use super::scalar::Scalar;
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::Rat;

/// `x -> linear * x + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap<S: Scalar = Rat> {
    linear: Matrix<S>,
    translation: Vector<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(linear: Matrix<S>, translation: Vector<S>) -> Result<Self> {
        let n = translation.dim();
        Error::check_dim(n, linear.len())?;
        for row in &linear {
            Error::check_dim(n, row.len())?;
        }
        Ok(AffineMap { linear, translation })
    }

    pub fn identity(n: usize) -> Self {
        AffineMap { linear: linalg::identity(n), translation: Vector::zeros(n) }
    }

    pub fn translation_by(t: Vector<S>) -> Self {
        AffineMap { linear: linalg::identity(t.dim()), translation: t }
    }

    /// The map whose `i`-th output coordinate is the affine functional
    /// `offsets[i] + rows[i] . x`.
    pub fn from_functionals(rows: Vec<Vector<S>>, offsets: Vec<S>) -> Result<Self> {
        let linear = rows.into_iter().map(|r| r.0).collect();
        Self::new(linear, Vector(offsets))
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn linear(&self) -> &Matrix<S> {
        &self.linear
    }

    pub fn translation(&self) -> &Vector<S> {
        &self.translation
    }

    pub fn determinant(&self) -> S {
        linalg::determinant(&self.linear)
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn apply(&self, x: &Vector<S>) -> Vector<S> {
        let lx = Vector(linalg::mat_vec(&self.linear, &x.0));
        &lx + &self.translation
    }

    /// Image of a direction (linear part only).
    pub fn apply_linear(&self, v: &Vector<S>) -> Vector<S> {
        Vector(linalg::mat_vec(&self.linear, &v.0))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        AffineMap {
            linear: linalg::mat_mul(&self.linear, &inner.linear),
            translation: self.apply(&inner.translation),
        }
    }

    pub fn invert(&self) -> Result<Self> {
        let inv = linalg::inverse(&self.linear).ok_or(Error::Singular)?;
        let t = Vector(linalg::mat_vec(&inv, &self.translation.0));
        Ok(AffineMap { linear: inv, translation: -t })
    }

    /// Half-space `{g >= 0}` such that `T(x)` lies in it iff `x` lies in `hs`:
    /// the image of `hs` under `self`. Needs an invertible map.
    pub fn image_halfspace(&self, hs: &HalfSpace<S>) -> Result<HalfSpace<S>> {
        let inv = self.invert()?;
        Ok(inv.pullback_halfspace(hs))
    }

    /// `{x : T(x) in hs}`.
    pub fn pullback_halfspace(&self, hs: &HalfSpace<S>) -> HalfSpace<S> {
        let (offset, normal) = self.pullback(hs.offset(), hs.normal());
        HalfSpace::new(offset, normal)
    }

    pub fn image_hyperplane(&self, h: &Hyperplane<S>) -> Result<Hyperplane<S>> {
        let inv = self.invert()?;
        let (offset, normal) = inv.pullback(h.offset(), h.normal());
        Hyperplane::new(offset, normal)
    }

    fn pullback(&self, offset: &S, normal: &Vector<S>) -> (S, Vector<S>) {
        let t = linalg::transpose(&self.linear);
        let new_normal = Vector(linalg::mat_vec(&t, &normal.0));
        (offset.clone() + normal.dot(&self.translation), new_normal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn identity_inverts_to_identity() {
        let id: AffineMap = AffineMap::identity(3);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn translation_moves_origin() {
        let t: AffineMap = AffineMap::translation_by(Vector::from_ints(&[1, 0, 0]));
        assert_eq!(t.apply(&Vector::zeros(3)), Vector::from_ints(&[1, 0, 0]));
    }

    #[test]
    fn singular_map_fails_to_invert() {
        let m: AffineMap = AffineMap::from_functionals(
            vec![Vector::from_ints(&[1, 1]), Vector::from_ints(&[2, 2])],
            vec![Rat::zero(), Rat::zero()],
        )
        .unwrap();
        assert_eq!(m.invert(), Err(Error::Singular));
    }

    #[test]
    fn image_of_hyperplane_contains_image_points() {
        let t: AffineMap = AffineMap::from_functionals(
            vec![Vector::from_ints(&[2, 1, 0]), Vector::from_ints(&[0, 1, 3]), Vector::from_ints(&[1, 0, 1])],
            vec![Rat::from_integer(1.into()), Rat::zero(), Rat::from_integer((-2).into())],
        )
        .unwrap();
        let h: Hyperplane = Hyperplane::new(Rat::from_integer((-1).into()), Vector::from_ints(&[1, 1, 1])).unwrap();
        let img = t.image_hyperplane(&h).unwrap();
        for p in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [3, -1, -1]] {
            let p = Vector::from_ints(&p);
            assert!(h.contains(&p));
            assert!(img.contains(&t.apply(&p)));
        }
    }
}
