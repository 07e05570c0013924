//! Seeded random generators shared by the integration suites.
//!
//! Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use pga2d::oracle::{CoordLine, CoordPoint};
use pga2d::{Line, Multivector, Point, Rational, Triangle};
use rand::Rng;

pub fn rat<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let n = rng.random_range(-max_num..=max_num);
    let d = rng.random_range(1..=max_den);
    Rational::ratio(n, d).unwrap()
}

pub fn small_rat<R: Rng>(rng: &mut R) -> Rational {
    rat(rng, 10, 10)
}

pub fn nonzero_rat<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = small_rat(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_mv<R: Rng>(rng: &mut R) -> Multivector {
    Multivector::from_coeffs(core::array::from_fn(|_| small_rat(rng)))
}

/// A weight-1 point with small rational coordinates.
pub fn proper_point<R: Rng>(rng: &mut R) -> Point {
    Point::new(small_rat(rng), small_rat(rng))
}

/// The same point carried at a random nonzero weight.
pub fn rescale_point<R: Rng>(rng: &mut R, p: &Point) -> Point {
    let lambda = nonzero_rat(rng);
    Point::from_multivector(p.multivector().scale(&lambda)).unwrap()
}

pub fn nonnull_line<R: Rng>(rng: &mut R) -> Line {
    loop {
        let (a, b, c) = (small_rat(rng), small_rat(rng), small_rat(rng));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        return Line::new(a, b, c).unwrap();
    }
}

pub fn rescale_line<R: Rng>(rng: &mut R, l: &Line) -> Line {
    let lambda = nonzero_rat(rng);
    Line::from_multivector(l.multivector().scale(&lambda)).unwrap()
}

pub fn nondegenerate_triangle<R: Rng>(rng: &mut R) -> Triangle {
    loop {
        let (a, b, c) = (proper_point(rng), proper_point(rng), proper_point(rng));
        if let Ok(t) = Triangle::new(&a, &b, &c) {
            return t;
        }
    }
}

pub fn coord_of(p: &Point) -> CoordPoint {
    let n = p.normalize().expect("proper point");
    CoordPoint::new(n.x().clone(), n.y().clone())
}

pub fn coord_of_line(l: &Line) -> CoordLine {
    CoordLine::new(l.a().clone(), l.b().clone(), l.c().clone())
}
