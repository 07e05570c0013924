//! Euclidean isometries as sandwich products of non-null lines.
//!
//! A single line `m` acts by reflection, `X → m X m`. The product of two
//! reflections is the even versor `R = m l`, acting by `X → R X R̃`: a
//! rotation about the meet `m ∧ l`, or a translation when the mirrors are
//! parallel (the meet is then ideal).
//!
//! Versors are never normalized — that would require square roots — so
//! images carry an overall nonzero rational factor and are compared
//! projectively. The classical angle decomposition of a rotor survives in
//! exact form through the squared grade parts: `⟨ml⟩₀² = cross(l,m)·l²m²`
//! and `-⟨ml⟩₂² = spread(l,m)·l²m²`.

use core::fmt;

use crate::algebra::{Grade, Multivector};
use crate::geometry::{Line, Point};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsometryError {
    /// Sandwiching by a null line is not an isometry.
    NullLine,
    /// Rotor part extraction requires an even versor.
    NotEven,
    /// Raw coefficients do not form a valid versor of the stated parity.
    InvalidVersor,
}

impl fmt::Display for IsometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsometryError::NullLine => write!(f, "null line"),
            IsometryError::NotEven => write!(f, "not an even versor"),
            IsometryError::InvalidVersor => write!(f, "invalid versor"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for IsometryError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// A single reflection.
    Odd,
    /// A product of two reflections: rotation or translation.
    Even,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// A product of one or two non-null lines, applied by sandwiching.
///
/// Invariant: the element times its own reversal is a nonzero scalar
/// (`m² = a² + b²` for a reflection, `l²m²` for a rotor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Versor {
    parity: Parity,
    mv: Multivector,
}

impl Versor {
    /// The reflection in a non-null line.
    pub fn reflection(m: &Line) -> Result<Self, IsometryError> {
        if m.is_null() {
            return Err(IsometryError::NullLine);
        }
        Ok(Self {
            parity: Parity::Odd,
            mv: m.multivector().clone(),
        })
    }

    /// The even versor `m l`: reflection in `l` followed by reflection in
    /// `m`. Fixes the point `m ∧ l`; a translation when `l ∥ m`.
    pub fn rotor(l: &Line, m: &Line) -> Result<Self, IsometryError> {
        if l.is_null() || m.is_null() {
            return Err(IsometryError::NullLine);
        }
        Ok(Self {
            parity: Parity::Even,
            mv: m.multivector().gp(l.multivector()),
        })
    }

    /// Reassembles a versor from raw coefficients, checking that they
    /// could have arisen as a product of one or two non-null lines: the
    /// grade support must match the parity and the scalar square
    /// (element times reversal) must be a nonzero scalar.
    pub fn from_parts(parity: Parity, mv: Multivector) -> Result<Self, IsometryError> {
        let grade_ok = match parity {
            Parity::Odd => mv.is_homogeneous(Grade::Vector),
            Parity::Even => mv
                .grades_present()
                .iter()
                .all(|g| matches!(g, Grade::Scalar | Grade::Bivector)),
        };
        if !grade_ok {
            return Err(IsometryError::InvalidVersor);
        }
        let norm = mv.gp(&mv.reverse());
        if !norm.is_homogeneous(Grade::Scalar) || norm.is_zero() {
            return Err(IsometryError::InvalidVersor);
        }
        Ok(Self { parity, mv })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    /// The sandwich: `m X m` for a reflection, `R X R̃` for a rotor. Works
    /// on an element of any grade. The image of a generator-unnormalized
    /// versor is scaled by its scalar square (and 2-vector images under a
    /// reflection pick up a further sign), so compare results projectively.
    pub fn apply(&self, x: &Multivector) -> Multivector {
        match self.parity {
            Parity::Odd => self.mv.gp(x).gp(&self.mv),
            Parity::Even => self.mv.gp(x).gp(&self.mv.reverse()),
        }
    }

    /// Sandwich of a point; grade and nonzeroness are preserved.
    pub fn apply_point(&self, p: &Point) -> Point {
        Point::from_multivector(self.apply(p.multivector()))
            .expect("a versor sandwich preserves points")
    }

    /// Sandwich of a line; grade and nonzeroness are preserved.
    pub fn apply_line(&self, l: &Line) -> Line {
        Line::from_multivector(self.apply(l.multivector()))
            .expect("a versor sandwich preserves lines")
    }

    /// Scalar part of an even versor `m l`; its square is
    /// `cross(l,m) · l²m²`.
    pub fn scalar_part(&self) -> Result<Rational, IsometryError> {
        match self.parity {
            Parity::Even => Ok(self.mv.scalar_part().clone()),
            Parity::Odd => Err(IsometryError::NotEven),
        }
    }

    /// Grade-2 part of an even versor `m l`: the fixed point `m ∧ l`,
    /// scaled by the sine of the mirror angle. Its square is
    /// `-spread(l,m) · l²m²`.
    pub fn point_part(&self) -> Result<Multivector, IsometryError> {
        match self.parity {
            Parity::Even => Ok(self.mv.grade_part(Grade::Bivector)),
            Parity::Odd => Err(IsometryError::NotEven),
        }
    }
}
