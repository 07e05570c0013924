//! The rational measurement layer: quadrance, spread, cross, twist, and the
//! exact incidence predicates.
//!
//! Quadrance replaces distance (its square), spread replaces angle (the
//! squared sine). Both are quotients of geometric squares,
//!
//! ```text
//! Q(A, B) = (A ∨ B)² / (A² B²)        s(l, m) = -(l ∧ m)² / (l² m²)
//! ```
//!
//! so both are rational in the inputs, invariant under rescaling either
//! argument, and exactly computable. No square root or transcendental
//! function appears anywhere.

use core::fmt;

use crate::algebra::Multivector;
use crate::geometry::{Line, Point};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrigError {
    /// Quadrance requires both points proper (nonzero weight).
    IdealPoint,
    /// Spread, cross and twist require non-null lines.
    NullLine,
    /// Twist divides by the inner product, which vanishes for
    /// perpendicular lines.
    PerpendicularLines,
}

impl fmt::Display for TrigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrigError::IdealPoint => write!(f, "ideal point (zero weight)"),
            TrigError::NullLine => write!(f, "null line"),
            TrigError::PerpendicularLines => write!(f, "perpendicular lines"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TrigError {}

/// Squared Euclidean distance between two points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Quadrance(Rational);

impl Quadrance {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }
}

/// Squared sine of the angle between two lines; 0 for parallel, 1 for
/// perpendicular.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Spread(Rational);

impl Spread {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }
}

/// The geometric square of any 1- or 2-vector is a pure scalar.
fn scalar_square(mv: &Multivector) -> Rational {
    mv.square().scalar_part().clone()
}

/// Quadrance of two proper points, in the weight-independent quotient form.
/// For weight-1 points the denominator is 1 and this is the square of the
/// joining line.
pub fn quadrance(a: &Point, b: &Point) -> Result<Quadrance, TrigError> {
    if a.is_ideal() || b.is_ideal() {
        return Err(TrigError::IdealPoint);
    }
    let numer = scalar_square(&a.multivector().join(b.multivector()));
    // a point of weight w squares to -w², so the denominator is (w_a w_b)² > 0
    let denom = scalar_square(a.multivector()) * scalar_square(b.multivector());
    Ok(Quadrance(numer / denom))
}

/// Spread of two non-null lines. Squaring the meet picks off the negative
/// square of its homogeneous weight, hence the leading minus sign.
pub fn spread(l: &Line, m: &Line) -> Result<Spread, TrigError> {
    if l.is_null() || m.is_null() {
        return Err(TrigError::NullLine);
    }
    let numer = -scalar_square(&l.multivector().wedge(m.multivector()));
    let denom = scalar_square(l.multivector()) * scalar_square(m.multivector());
    Ok(Spread(numer / denom))
}

/// Cross of two non-null lines: the squared cosine, `(l·m)² / (l²m²)`.
pub fn cross(l: &Line, m: &Line) -> Result<Rational, TrigError> {
    if l.is_null() || m.is_null() {
        return Err(TrigError::NullLine);
    }
    let numer = l.multivector().dot(m.multivector()).scalar_part().square();
    let denom = scalar_square(l.multivector()) * scalar_square(m.multivector());
    Ok(numer / denom)
}

/// Twist of two non-null, non-perpendicular lines: the squared tangent,
/// `-(l∧m)² / (l·m)²`; equals spread divided by cross.
pub fn twist(l: &Line, m: &Line) -> Result<Rational, TrigError> {
    if l.is_null() || m.is_null() {
        return Err(TrigError::NullLine);
    }
    let inner = l.multivector().dot(m.multivector()).scalar_part().clone();
    if inner.is_zero() {
        return Err(TrigError::PerpendicularLines);
    }
    let numer = -scalar_square(&l.multivector().wedge(m.multivector()));
    Ok(numer / inner.square())
}

/// Lines are parallel (or coincident) when their meet squares to zero,
/// i.e. the intersection point is ideal and the spread vanishes.
pub fn is_parallel(l: &Line, m: &Line) -> bool {
    scalar_square(&l.multivector().wedge(m.multivector())).is_zero()
}

/// Lines are perpendicular exactly when their inner product vanishes.
pub fn is_perpendicular(l: &Line, m: &Line) -> bool {
    l.multivector().dot(m.multivector()).is_zero()
}

/// Three points are collinear exactly when their triple join vanishes.
pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    a.multivector()
        .join(b.multivector())
        .join(c.multivector())
        .is_zero()
}

/// Three lines are concurrent exactly when their triple wedge vanishes.
pub fn concurrent(l: &Line, m: &Line, n: &Line) -> bool {
    l.multivector()
        .wedge(m.multivector())
        .wedge(n.multivector())
        .is_zero()
}
