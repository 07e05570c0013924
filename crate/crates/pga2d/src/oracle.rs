//! Coordinate-formula reference implementations for differential testing.
//!
//! Everything in this module is deliberately naive: plain Cartesian
//! coordinates, textbook formulas, no multivectors, no wedge, no join. It
//! must stay that way — its entire value is independence from the algebra
//! kernel it is used to check. Only the scalar type is shared.
//!
//! Not exposed through the calculator; used by the test suites and by
//! `pgacalc selftest`.

use core::fmt;

use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordPoint {
    pub x: Rational,
    pub y: Rational,
}

impl CoordPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }
}

/// The line `ax + by + c = 0`; the metric formulas require `(a, b) ≠ (0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordLine {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl CoordLine {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Self { a, b, c }
    }

    fn direction_square(&self) -> Rational {
        self.a.square() + self.b.square()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    NullLine,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NullLine => write!(f, "null line"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OracleError {}

/// `(ax - bx)² + (ay - by)²`.
pub fn quadrance_coords(a: &CoordPoint, b: &CoordPoint) -> Rational {
    (&a.x - &b.x).square() + (&a.y - &b.y).square()
}

/// `(a1 b2 - a2 b1)² / ((a1² + b1²)(a2² + b2²))`.
pub fn spread_coords(l: &CoordLine, m: &CoordLine) -> Result<Rational, OracleError> {
    let dl = l.direction_square();
    let dm = m.direction_square();
    if dl.is_zero() || dm.is_zero() {
        return Err(OracleError::NullLine);
    }
    let numer = (&l.a * &m.b - &m.a * &l.b).square();
    Ok(numer / (dl * dm))
}

/// Determinant of the homogeneous coordinate matrix with rows `(1, x, y)`:
/// twice the signed area of the triangle `a b c`.
pub fn area2_det(a: &CoordPoint, b: &CoordPoint, c: &CoordPoint) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Classical mirror image: `P - 2(aPx + bPy + c)/(a² + b²) · (a, b)`.
pub fn reflect_coords(m: &CoordLine, p: &CoordPoint) -> Result<CoordPoint, OracleError> {
    let d = m.direction_square();
    if d.is_zero() {
        return Err(OracleError::NullLine);
    }
    let offset = &m.a * &p.x + &m.b * &p.y + &m.c;
    let scale = Rational::from_int(2) * offset / d;
    Ok(CoordPoint {
        x: &p.x - &(&m.a * &scale),
        y: &p.y - &(&m.b * &scale),
    })
}
