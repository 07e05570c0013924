//! Semantic point and line layer over the algebra.
//!
//! [`Line`] and [`Point`] are thin grade-checked wrappers around grade-1 and
//! grade-2 multivectors. Points normalize rationally (divide by the weight);
//! lines are deliberately never normalized, since `a² + b² = 1` generally
//! needs a square root — every metric formula downstream is written in a
//! scale-invariant quotient form instead.

use core::fmt;

use crate::algebra::{Blade, Grade, Multivector};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// All coefficients were zero where a projective element was expected.
    ZeroElement,
    /// A multivector had coefficients outside the expected grade.
    WrongGrade { expected: Grade },
    /// A proper (finite) point was required but the weight was zero.
    IdealPoint,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::ZeroElement => write!(f, "all coefficients are zero"),
            GeometryError::WrongGrade { expected } => {
                let what = match expected {
                    Grade::Vector => "a line (grade 1)",
                    Grade::Bivector => "a point (grade 2)",
                    _ => "a homogeneous element",
                };
                write!(f, "not {what}")
            }
            GeometryError::IdealPoint => write!(f, "ideal point (zero weight)"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GeometryError {}

/// The line `ax + by + c = 0`, stored as the 1-vector `c·e0 + a·e1 + b·e2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    mv: Multivector,
}

impl Line {
    /// Line with equation `ax + by + c = 0`; the coefficients must not all
    /// vanish.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(GeometryError::ZeroElement);
        }
        let mut mv = Multivector::zero();
        mv.set_coeff(Blade::E0, c);
        mv.set_coeff(Blade::E1, a);
        mv.set_coeff(Blade::E2, b);
        Ok(Self { mv })
    }

    /// Wraps a nonzero, purely grade-1 multivector.
    pub fn from_multivector(mv: Multivector) -> Result<Self, GeometryError> {
        if mv.is_zero() {
            return Err(GeometryError::ZeroElement);
        }
        if !mv.is_homogeneous(Grade::Vector) {
            return Err(GeometryError::WrongGrade {
                expected: Grade::Vector,
            });
        }
        Ok(Self { mv })
    }

    pub fn a(&self) -> &Rational {
        self.mv.coeff(Blade::E1)
    }

    pub fn b(&self) -> &Rational {
        self.mv.coeff(Blade::E2)
    }

    pub fn c(&self) -> &Rational {
        self.mv.coeff(Blade::E0)
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_multivector(self) -> Multivector {
        self.mv
    }

    /// True for multiples of `e0`, the ideal line: `a² + b² = 0`. Null
    /// lines have no Euclidean direction and are excluded from every
    /// metric formula.
    pub fn is_null(&self) -> bool {
        (self.a().square() + self.b().square()).is_zero()
    }
}

/// The homogeneous point `(x, y, w)`, stored as the 2-vector
/// `w·e12 + x·e20 + y·e01`. Weight zero marks an ideal point (a direction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    mv: Multivector,
}

impl Point {
    /// The Euclidean point `(x, y)` at weight 1.
    pub fn new(x: Rational, y: Rational) -> Self {
        let mut mv = Multivector::basis(Blade::E12);
        mv.set_coeff(Blade::E20, x);
        mv.set_coeff(Blade::E01, y);
        Self { mv }
    }

    /// A point from homogeneous coordinates `(x, y, w)`; some coordinate
    /// must be nonzero.
    pub fn from_homogeneous(x: Rational, y: Rational, w: Rational) -> Result<Self, GeometryError> {
        if x.is_zero() && y.is_zero() && w.is_zero() {
            return Err(GeometryError::ZeroElement);
        }
        let mut mv = Multivector::zero();
        mv.set_coeff(Blade::E12, w);
        mv.set_coeff(Blade::E20, x);
        mv.set_coeff(Blade::E01, y);
        Ok(Self { mv })
    }

    /// Wraps a nonzero, purely grade-2 multivector.
    pub fn from_multivector(mv: Multivector) -> Result<Self, GeometryError> {
        if mv.is_zero() {
            return Err(GeometryError::ZeroElement);
        }
        if !mv.is_homogeneous(Grade::Bivector) {
            return Err(GeometryError::WrongGrade {
                expected: Grade::Bivector,
            });
        }
        Ok(Self { mv })
    }

    pub fn x(&self) -> &Rational {
        self.mv.coeff(Blade::E20)
    }

    pub fn y(&self) -> &Rational {
        self.mv.coeff(Blade::E01)
    }

    pub fn weight(&self) -> &Rational {
        self.mv.coeff(Blade::E12)
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_multivector(self) -> Multivector {
        self.mv
    }

    pub fn is_ideal(&self) -> bool {
        self.weight().is_zero()
    }

    /// Divides all coefficients by the weight; no square roots involved.
    /// Ideal points have no normalization.
    pub fn normalize(&self) -> Result<Self, GeometryError> {
        let w = self.weight();
        if w.is_zero() {
            return Err(GeometryError::IdealPoint);
        }
        let inv = w.recip().expect("nonzero weight");
        Ok(Self {
            mv: self.mv.scale(&inv),
        })
    }
}

/// Incidence of a point and a line: the wedge vanishes, equivalently the
/// scalar `ax + by + cw` does.
pub fn incident(p: &Point, l: &Line) -> bool {
    p.multivector().wedge(l.multivector()).is_zero()
}
