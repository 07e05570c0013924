//! The geometric algebra Cl(2,0,1) over the dual projectivized Grassmann
//! basis, with exact rational coefficients.
//!
//! The eight basis blades, in coefficient order, are
//!
//! ```text
//! 1   e0   e1   e2   e12   e20   e01   e012
//! ```
//!
//! where `e12 = e1 e2`, `e20 = e2 e0`, `e01 = e0 e1` and `e012` is the unit
//! pseudoscalar. The metric is degenerate: `e0² = 0`, `e1² = e2² = 1`, from
//! which `e12² = -1`, `e20² = e01² = 0`, `e012² = 0`.
//!
//! Geometric reading: a line `ax + by + c = 0` is the 1-vector
//! `c·e0 + a·e1 + b·e2`; the homogeneous point `(x, y, w)` is the 2-vector
//! `w·e12 + x·e20 + y·e01`. The wedge of two lines is their intersection
//! point (meet); the join of two points is computed through the duality
//! map [`Multivector::dual`].
//!
//! Both product tables are derived at compile time from the generator rules
//! alone; nothing blade-by-blade is hand-written.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use crate::scalar::Rational;

pub const DIM: usize = 8;

/// Grade of a homogeneous element: how many generator factors it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    Scalar = 0,
    Vector = 1,
    Bivector = 2,
    Trivector = 3,
}

impl Grade {
    pub const ALL: [Grade; 4] = [
        Grade::Scalar,
        Grade::Vector,
        Grade::Bivector,
        Grade::Trivector,
    ];

    pub fn as_usize(self) -> usize {
        self as usize
    }
}

/// The eight basis blades in coefficient order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Blade {
    /// Scalar unit.
    One = 0,
    /// Degenerate generator; as a line, the ideal line.
    E0 = 1,
    /// As a line: x = 0.
    E1 = 2,
    /// As a line: y = 0.
    E2 = 3,
    /// `e1 e2`; as a point, the origin (weight component).
    E12 = 4,
    /// `e2 e0`; as a point, the ideal point in the x direction.
    E20 = 5,
    /// `e0 e1`; as a point, the ideal point in the y direction.
    E01 = 6,
    /// Unit pseudoscalar `e0 e1 e2`.
    E012 = 7,
}

impl Blade {
    pub const ALL: [Blade; DIM] = [
        Blade::One,
        Blade::E0,
        Blade::E1,
        Blade::E2,
        Blade::E12,
        Blade::E20,
        Blade::E01,
        Blade::E012,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn grade(self) -> Grade {
        grade_of_index(self.index())
    }

    pub fn name(self) -> &'static str {
        ["1", "e0", "e1", "e2", "e12", "e20", "e01", "e012"][self.index()]
    }
}

/// Generator content of each named blade, bit i = generator `e_i`.
const BLADE_MASK: [u8; DIM] = [0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111];

/// Sign relating each named blade to the ascending product of its
/// generators: `e20 = e2 e0 = -(e0 e2)`, all others are already ascending.
const BLADE_SIGN: [i8; DIM] = [1, 1, 1, 1, 1, -1, 1, 1];

/// Squares of the generators: `e0² = 0`, `e1² = e2² = 1`.
const METRIC: [i8; 3] = [0, 1, 1];

/// Coefficient swap realizing the duality map: 1 ↔ e012, e0 ↔ e12,
/// e1 ↔ e20, e2 ↔ e01.
const DUAL_INDEX: [usize; DIM] = [7, 4, 5, 6, 1, 2, 3, 0];

/// Reversal negates grades 2 and 3 and fixes grades 0 and 1.
const REVERSE_SIGN: [i8; DIM] = [1, 1, 1, 1, -1, -1, -1, -1];

const fn grade_of_index(i: usize) -> Grade {
    match BLADE_MASK[i].count_ones() {
        0 => Grade::Scalar,
        1 => Grade::Vector,
        2 => Grade::Bivector,
        _ => Grade::Trivector,
    }
}

const fn index_of_mask(mask: u8) -> usize {
    let mut i = 0;
    while i < DIM {
        if BLADE_MASK[i] == mask {
            return i;
        }
        i += 1;
    }
    panic!("unknown blade mask");
}

/// Sign of sorting the concatenation of two ascending generator lists:
/// parity of the number of pairs (s, t) with s in `a`, t in `b`, s > t.
const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy)]
struct BladeProduct {
    index: usize,
    sign: i8,
}

/// Product of two named basis blades from the generator rules. With
/// `exterior` set, shared generators annihilate the whole term instead of
/// contributing metric factors, which yields the wedge product.
const fn blade_product(i: usize, j: usize, exterior: bool) -> BladeProduct {
    let ma = BLADE_MASK[i];
    let mb = BLADE_MASK[j];
    let common = ma & mb;
    let mut sign = BLADE_SIGN[i] * BLADE_SIGN[j] * reorder_sign(ma, mb);
    if exterior && common != 0 {
        sign = 0;
    }
    let mut g = 0;
    while g < 3 {
        if common & (1 << g) != 0 {
            sign *= METRIC[g];
        }
        g += 1;
    }
    if sign == 0 {
        return BladeProduct { index: 0, sign: 0 };
    }
    let k = index_of_mask(ma ^ mb);
    BladeProduct {
        index: k,
        sign: sign * BLADE_SIGN[k],
    }
}

const fn build_table(exterior: bool) -> [[BladeProduct; DIM]; DIM] {
    let mut table = [[BladeProduct { index: 0, sign: 0 }; DIM]; DIM];
    let mut i = 0;
    while i < DIM {
        let mut j = 0;
        while j < DIM {
            table[i][j] = blade_product(i, j, exterior);
            j += 1;
        }
        i += 1;
    }
    table
}

const GEOMETRIC_TABLE: [[BladeProduct; DIM]; DIM] = build_table(false);
const EXTERIOR_TABLE: [[BladeProduct; DIM]; DIM] = build_table(true);

/// A general element of the algebra: eight rational coefficients in the
/// fixed basis order `1, e0, e1, e2, e12, e20, e01, e012`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    coeffs: [Rational; DIM],
}

impl Multivector {
    pub fn zero() -> Self {
        Self {
            coeffs: core::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn from_coeffs(coeffs: [Rational; DIM]) -> Self {
        Self { coeffs }
    }

    pub fn scalar(value: Rational) -> Self {
        let mut out = Self::zero();
        out.coeffs[0] = value;
        out
    }

    pub fn basis(blade: Blade) -> Self {
        let mut out = Self::zero();
        out.coeffs[blade.index()] = Rational::one();
        out
    }

    pub fn pseudoscalar() -> Self {
        Self::basis(Blade::E012)
    }

    pub fn coeff(&self, blade: Blade) -> &Rational {
        &self.coeffs[blade.index()]
    }

    pub fn coeffs(&self) -> &[Rational; DIM] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, blade: Blade, value: Rational) {
        self.coeffs[blade.index()] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Scalar coefficient, the grade-0 component.
    pub fn scalar_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    fn accumulate(&self, rhs: &Self, table: &[[BladeProduct; DIM]; DIM]) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = table[i][j];
                match p.sign {
                    1 => out.coeffs[p.index] += a * b,
                    -1 => out.coeffs[p.index] -= a * b,
                    _ => {}
                }
            }
        }
        out
    }

    /// Geometric product.
    pub fn gp(&self, rhs: &Self) -> Self {
        self.accumulate(rhs, &GEOMETRIC_TABLE)
    }

    /// Wedge (exterior) product. On two lines this is their intersection
    /// point, the meet.
    pub fn wedge(&self, rhs: &Self) -> Self {
        self.accumulate(rhs, &EXTERIOR_TABLE)
    }

    /// Duality map: the coefficient-preserving basis complement
    /// (1 ↔ e012, e0 ↔ e12, e1 ↔ e20, e2 ↔ e01). An involution.
    pub fn dual(&self) -> Self {
        let mut out = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[DUAL_INDEX[i]] = c.clone();
        }
        out
    }

    /// Join: the wedge carried out in the dual algebra. On two points this
    /// is their connecting line; on three points (associated either way) a
    /// scalar equal to twice the signed triangle area.
    pub fn join(&self, rhs: &Self) -> Self {
        self.dual().wedge(&rhs.dual()).dual()
    }

    /// Zeroes every coefficient outside grade `k`.
    pub fn grade_part(&self, k: Grade) -> Self {
        let mut out = Self::zero();
        for i in 0..DIM {
            if grade_of_index(i) == k {
                out.coeffs[i] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// The grades with a nonzero coefficient, ascending.
    pub fn grades_present(&self) -> Vec<Grade> {
        let mut present = [false; 4];
        for i in 0..DIM {
            if !self.coeffs[i].is_zero() {
                present[grade_of_index(i).as_usize()] = true;
            }
        }
        Grade::ALL
            .iter()
            .copied()
            .filter(|g| present[g.as_usize()])
            .collect()
    }

    /// True when every nonzero coefficient lies in grade `k` (vacuously
    /// true for the zero element).
    pub fn is_homogeneous(&self, k: Grade) -> bool {
        (0..DIM).all(|i| grade_of_index(i) == k || self.coeffs[i].is_zero())
    }

    /// Grade-selected inner product: for operands of homogeneous grades j
    /// and k this is the grade-|j-k| part of the geometric product, the
    /// lowest grade the product can carry; extended bilinearly to general
    /// elements. For two lines it is the scalar `a1*a2 + b1*b2` (the
    /// degenerate coefficient plays no role); for a point and a line it is
    /// the altitude line.
    pub fn dot(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let gi = grade_of_index(i).as_usize();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let gj = grade_of_index(j).as_usize();
                let p = GEOMETRIC_TABLE[i][j];
                if p.sign == 0 || grade_of_index(p.index).as_usize() != gi.abs_diff(gj) {
                    continue;
                }
                match p.sign {
                    1 => out.coeffs[p.index] += a * b,
                    _ => out.coeffs[p.index] -= a * b,
                }
            }
        }
        out
    }

    /// Reversal: the anti-automorphism that reverses every product of
    /// 1-vectors. Negates grades 2 and 3.
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if REVERSE_SIGN[i] < 0 {
                *c = -&*c;
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        if s.is_zero() {
            return out;
        }
        for i in 0..DIM {
            out.coeffs[i] = &self.coeffs[i] * s;
        }
        out
    }

    /// Geometric square. A line `c·e0 + a·e1 + b·e2` squares to the scalar
    /// `a² + b²`; a point `w·e12 + x·e20 + y·e01` squares to `-w²`.
    pub fn square(&self) -> Self {
        self.gp(self)
    }

    /// True when the elements agree up to a nonzero rational factor
    /// (or both vanish).
    pub fn projectively_eq(&self, rhs: &Self) -> bool {
        let pivot = (0..DIM).find(|&i| !self.coeffs[i].is_zero() || !rhs.coeffs[i].is_zero());
        let Some(pivot) = pivot else {
            return true; // both zero
        };
        if self.coeffs[pivot].is_zero() || rhs.coeffs[pivot].is_zero() {
            return false;
        }
        let lambda = &self.coeffs[pivot] / &rhs.coeffs[pivot];
        (0..DIM).all(|i| self.coeffs[i] == &rhs.coeffs[i] * &lambda)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        Multivector {
            coeffs: core::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        Multivector {
            coeffs: core::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            coeffs: core::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.gp(rhs)
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.gp(&rhs)
    }
}

/// Canonical textual form: the eight coefficients in basis order,
/// space-separated.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Error from parsing the canonical multivector form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMultivectorError(pub String);

impl fmt::Display for ParseMultivectorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid multivector literal: {}", self.0)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseMultivectorError {}

impl FromStr for Multivector {
    type Err = ParseMultivectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != DIM {
            return Err(ParseMultivectorError(
                "expected 8 space-separated rationals".to_string(),
            ));
        }
        let mut out = Multivector::zero();
        for (i, part) in parts.iter().enumerate() {
            out.coeffs[i] = part
                .parse::<Rational>()
                .map_err(|e| ParseMultivectorError(e.to_string()))?;
        }
        Ok(out)
    }
}
