//! Exact rational primitives: scalars, vectors, hyperplanes, affine and
//! projective maps, and a simplex solver.

pub mod affine;
pub mod hyperplane;
pub mod linalg;
pub mod lp;
pub mod projective;
pub mod scalar;
pub mod vector;

pub use affine::AffineMap;
pub use hyperplane::{HalfSpace, Hyperplane};
pub use lp::{lp_solve, LinearProgram, LpOutcome, Sense};
pub use projective::{affine_dehomogenize_phi, phi_involution, phi_of_direction, HomPoint};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use vector::Vector;
