//! Exact polyhedral computations for trimming positions of unbounded convex
//! polyhedra.
//!
//! The geometric core ([`exactgeom`], [`polyhedron`]) is generic over an exact
//! rational [`Scalar`]; the placement machinery built on top of it works with
//! the arbitrary-precision [`Rat`].

pub mod error;
pub mod exactgeom;
pub mod polyhedron;
pub mod positions;
pub mod trimming;
pub mod sectional;
pub mod cli;

pub use error::{Error, Result};
pub use exactgeom::{AffineMap, HalfSpace, Hyperplane, LinearProgram, LpOutcome, Scalar, Vector};
pub use polyhedron::Polyhedron;

/// Arbitrary-precision rational, the default scalar.
pub type Rat = num_rational::BigRational;

/// Fixed-width rational for small inputs; overflow panics.
pub type SmallRat = num_rational::Rational64;

pub type RatVector = Vector<Rat>;
pub type RatPolyhedron = Polyhedron<Rat>;
pub type RatAffineMap = AffineMap<Rat>;
