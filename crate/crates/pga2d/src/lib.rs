//! Exact rational plane geometry in the projective geometric algebra
//! Cl(2,0,1).
//!
//! Lines are 1-vectors, points are 2-vectors, and the degenerate metric
//! `e0² = 0` makes the algebra Euclidean. On top of the kernel sit the
//! rational replacements for distance and angle — quadrance (squared
//! distance) and spread (squared sine) — together with the classical
//! incidence constructions and sandwich isometries. Every coefficient is
//! an arbitrary-precision rational, so all predicates are exact zero tests
//! and all identities hold bit-for-bit.
//!
//! The [`oracle`] module holds independent coordinate-formula
//! implementations of the measurable quantities; it shares nothing with
//! the algebra kernel and exists to differential-test it.
//!
//! `no_std`-compatible (with `alloc`) when built without the default
//! `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod construct;
pub mod geometry;
pub mod isometry;
pub mod oracle;
pub mod scalar;
pub mod trig;

pub use algebra::{Blade, Grade, Multivector};
pub use construct::{
    altitude, foot, join_points, meet_lines, midpoint, parallel_through, perpendicular_bisector,
    signed_area2, ConstructError, Triangle,
};
pub use geometry::{incident, GeometryError, Line, Point};
pub use isometry::{IsometryError, Parity, Versor};
pub use scalar::{Rational, ScalarError};
pub use trig::{
    collinear, concurrent, cross, is_parallel, is_perpendicular, quadrance, spread, twist,
    Quadrance, Spread, TrigError,
};
