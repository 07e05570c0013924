//! Built-in verification suites, run by `pgacalc selftest`.
//!
//! Each suite replays one family of exact identities over seeded random
//! rational inputs: the blade product table against an independent
//! symbolic multiplier, the measurement formulas against the coordinate
//! oracles, the triangle and median identities, isometry invariance, the
//! rotor angle surrogates, and the printer/parser round trip. Everything
//! is compared bit-for-bit — a single mismatch fails the suite.

use pga2d::oracle::{area2_det, quadrance_coords, spread_coords, CoordLine, CoordPoint};
use pga2d::{
    collinear, cross, foot, incident, quadrance, signed_area2, spread, twist, Blade, Grade, Line,
    Multivector, Parity, Point, Rational, Triangle, Versor,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eval::eval_str;
use crate::value::{format_value_text, Value};

pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u32,
    pub failures: u32,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type SuiteFn = fn(&mut ChaCha8Rng) -> (u32, u32);

/// Runs every suite with a fixed seed; the output is deterministic.
pub fn run_all() -> Vec<SuiteReport> {
    let suites: [(&'static str, SuiteFn); 11] = [
        ("blade-product-table", blade_table),
        ("product-laws", product_laws),
        ("quadrance-vs-coordinates", quadrance_oracle),
        ("spread-vs-coordinates", spread_oracle),
        ("spread-cross-twist", spread_cross_twist),
        ("triangle-side-products", triangle_products),
        ("medians-and-centroid", medians_centroid),
        ("parallel-section", parallel_section),
        ("isometry-invariance", isometry_invariance),
        ("rotor-angle-parts", rotor_angle_parts),
        ("print-parse-round-trip", print_parse_round_trip),
    ];
    suites
        .into_iter()
        .enumerate()
        .map(|(i, (name, run))| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5E1F_7E57 + i as u64);
            let (cases, failures) = run(&mut rng);
            SuiteReport {
                name,
                cases,
                failures,
            }
        })
        .collect()
}

fn rat(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.random_range(-10i64..=10);
    let d = rng.random_range(1i64..=10);
    Rational::ratio(n, d).unwrap()
}

fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = rat(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn random_mv(rng: &mut ChaCha8Rng) -> Multivector {
    Multivector::from_coeffs(core::array::from_fn(|_| rat(rng)))
}

fn proper_point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(rat(rng), rat(rng))
}

fn rescale_point(rng: &mut ChaCha8Rng, p: &Point) -> Point {
    Point::from_multivector(p.multivector().scale(&nonzero_rat(rng))).unwrap()
}

fn nonnull_line(rng: &mut ChaCha8Rng) -> Line {
    loop {
        let (a, b, c) = (rat(rng), rat(rng), rat(rng));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        return Line::new(a, b, c).unwrap();
    }
}

fn rescale_line(rng: &mut ChaCha8Rng, l: &Line) -> Line {
    Line::from_multivector(l.multivector().scale(&nonzero_rat(rng))).unwrap()
}

fn triangle(rng: &mut ChaCha8Rng) -> Triangle {
    loop {
        let (a, b, c) = (proper_point(rng), proper_point(rng), proper_point(rng));
        if let Ok(t) = Triangle::new(&a, &b, &c) {
            return t;
        }
    }
}

fn coord_of(p: &Point) -> CoordPoint {
    let n = p.normalize().expect("proper point");
    CoordPoint::new(n.x().clone(), n.y().clone())
}

fn coord_of_line(l: &Line) -> CoordLine {
    CoordLine::new(l.a().clone(), l.b().clone(), l.c().clone())
}

/// Independent symbolic blade multiplier over generator index lists.
fn multiply_generator_lists(a: &[u8], b: &[u8]) -> (i64, Vec<u8>) {
    let mut seq: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
    let mut sign = 1i64;
    loop {
        let mut swapped = false;
        for i in 1..seq.len() {
            if seq[i - 1] > seq[i] {
                seq.swap(i - 1, i);
                sign = -sign;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let mut reduced = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        if i + 1 < seq.len() && seq[i] == seq[i + 1] {
            if seq[i] == 0 {
                sign = 0; // the degenerate generator squares to zero
            }
            i += 2;
        } else {
            reduced.push(seq[i]);
            i += 1;
        }
    }
    (sign, reduced)
}

fn blade_table(_rng: &mut ChaCha8Rng) -> (u32, u32) {
    const GENERATORS: [&[u8]; 8] = [&[], &[0], &[1], &[2], &[1, 2], &[2, 0], &[0, 1], &[0, 1, 2]];
    fn named(sorted: &[u8]) -> (usize, i64) {
        match sorted {
            [] => (0, 1),
            [0] => (1, 1),
            [1] => (2, 1),
            [2] => (3, 1),
            [1, 2] => (4, 1),
            [0, 2] => (5, -1),
            [0, 1] => (6, 1),
            [0, 1, 2] => (7, 1),
            other => panic!("unexpected generator list {other:?}"),
        }
    }
    let mut cases = 0;
    let mut failures = 0;
    for (i, gi) in GENERATORS.iter().enumerate() {
        for (j, gj) in GENERATORS.iter().enumerate() {
            let (mut sign, sorted) = multiply_generator_lists(gi, gj);
            let expected = if sign == 0 {
                Multivector::zero()
            } else {
                let (k, correction) = named(&sorted);
                sign *= correction;
                Multivector::basis(Blade::ALL[k]).scale(&Rational::from_int(sign))
            };
            let got = Multivector::basis(Blade::ALL[i]).gp(&Multivector::basis(Blade::ALL[j]));
            cases += 1;
            if got != expected {
                failures += 1;
            }
        }
    }
    (cases, failures)
}

fn product_laws(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..500 {
        let (x, y, z) = (random_mv(rng), random_mv(rng), random_mv(rng));
        cases += 1;
        if x.gp(&y).gp(&z) != x.gp(&y.gp(&z)) {
            failures += 1;
        }
        let l = nonnull_line(rng);
        let m = nonnull_line(rng);
        let (l, m) = (l.multivector(), m.multivector());
        cases += 1;
        if l.gp(m) != &l.dot(m) + &l.wedge(m) {
            failures += 1;
        }
    }
    (cases, failures)
}

fn quadrance_oracle(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..1000 {
        let a = proper_point(rng);
        let b = proper_point(rng);
        let expected = quadrance_coords(&coord_of(&a), &coord_of(&b));
        let aw = rescale_point(rng, &a);
        let bw = rescale_point(rng, &b);
        cases += 1;
        let plain = quadrance(&a, &b).unwrap();
        let weighted = quadrance(&aw, &bw).unwrap();
        if plain.value() != &expected || weighted.value() != &expected {
            failures += 1;
        }
    }
    (cases, failures)
}

fn spread_oracle(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..1000 {
        let l = nonnull_line(rng);
        let m = nonnull_line(rng);
        let expected = spread_coords(&coord_of_line(&l), &coord_of_line(&m)).unwrap();
        let ls = rescale_line(rng, &l);
        let ms = rescale_line(rng, &m);
        cases += 1;
        let plain = spread(&l, &m).unwrap();
        let scaled = spread(&ls, &ms).unwrap();
        if plain.value() != &expected || scaled.value() != &expected {
            failures += 1;
        }
    }
    (cases, failures)
}

fn spread_cross_twist(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..500 {
        let l = nonnull_line(rng);
        let m = nonnull_line(rng);
        let s = spread(&l, &m).unwrap().into_value();
        let c = cross(&l, &m).unwrap();
        cases += 1;
        let mut ok = &s + &c == Rational::one();
        if !c.is_zero() {
            ok &= twist(&l, &m).unwrap() == s.checked_div(&c).unwrap();
        }
        if !ok {
            failures += 1;
        }
    }
    (cases, failures)
}

fn triangle_products(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..500 {
        let t = triangle(rng);
        let area2 = t.area2();
        let det = area2_det(
            &coord_of(t.vertex(1)),
            &coord_of(t.vertex(2)),
            &coord_of(t.vertex(3)),
        );
        let mut ok = area2 == det;
        for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            let lhs = t.side(i).multivector().wedge(t.side(j).multivector());
            ok &= lhs == t.vertex(k).multivector().scale(&area2);
        }
        let triple = t
            .side(1)
            .multivector()
            .wedge(t.side(2).multivector())
            .wedge(t.side(3).multivector());
        ok &= triple == Multivector::pseudoscalar().scale(&area2.square());
        cases += 1;
        if !ok {
            failures += 1;
        }
    }
    (cases, failures)
}

fn medians_centroid(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..200 {
        let t = triangle(rng);
        let area2 = t.area2();
        let sum =
            t.vertex(1).multivector() + &(t.vertex(2).multivector() + t.vertex(3).multivector());
        let expected = sum.scale(&area2);
        let mut ok = true;
        for i in 1..=3usize {
            for j in 1..=3usize {
                if i == j {
                    continue;
                }
                let met = t
                    .median(i)
                    .unwrap()
                    .multivector()
                    .wedge(t.median(j).unwrap().multivector());
                let cyclic = matches!((i, j), (1, 2) | (2, 3) | (3, 1));
                let oriented = if cyclic { expected.clone() } else { -&expected };
                ok &= met == oriented;
            }
        }
        let centroid = t.centroid().unwrap();
        let third = Rational::ratio(1, 3).unwrap();
        let mean = Point::new(
            (t.vertex(1).x() + t.vertex(2).x() + t.vertex(3).x()) * &third,
            (t.vertex(1).y() + t.vertex(2).y() + t.vertex(3).y()) * &third,
        );
        ok &= centroid == mean;
        cases += 1;
        if !ok {
            failures += 1;
        }
    }
    (cases, failures)
}

fn parallel_section(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..100 {
        let t = triangle(rng);
        let lambda = loop {
            let x = rat(rng);
            if !x.is_zero() && !x.is_one() {
                break x;
            }
        };
        let one_minus = Rational::one() - &lambda;
        let a1 = t.vertex(1).multivector();
        let a2 = t.vertex(2).multivector();
        let a3 = t.vertex(3).multivector();
        let b2 = &a1.scale(&one_minus) + &a2.scale(&lambda);
        let b3 = &a1.scale(&one_minus) + &a3.scale(&lambda);
        let met = a2.join(a3).wedge(&b2.join(&b3));
        let factor = &lambda * &one_minus * t.area2();
        let expected = (a2 - a3).scale(&factor);
        cases += 1;
        if !met.coeff(Blade::E12).is_zero() || met != expected {
            failures += 1;
        }
    }
    (cases, failures)
}

fn random_versor(rng: &mut ChaCha8Rng) -> Versor {
    if rng.random_range(0..2) == 0 {
        Versor::reflection(&nonnull_line(rng)).unwrap()
    } else {
        Versor::rotor(&nonnull_line(rng), &nonnull_line(rng)).unwrap()
    }
}

fn isometry_invariance(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..200 {
        let v = random_versor(rng);
        let a = proper_point(rng);
        let b = proper_point(rng);
        let l = nonnull_line(rng);
        let m = nonnull_line(rng);
        let mut ok = quadrance(&v.apply_point(&a), &v.apply_point(&b)).unwrap()
            == quadrance(&a, &b).unwrap();
        ok &= spread(&v.apply_line(&l), &v.apply_line(&m)).unwrap() == spread(&l, &m).unwrap();
        ok &= incident(&v.apply_point(&a), &v.apply_line(&l)) == incident(&a, &l);
        let on_l = foot(&a, &l).unwrap();
        ok &= incident(&v.apply_point(&on_l), &v.apply_line(&l));
        let c = proper_point(rng);
        let before = signed_area2(&a, &b, &c).unwrap();
        let after =
            signed_area2(&v.apply_point(&a), &v.apply_point(&b), &v.apply_point(&c)).unwrap();
        ok &= match v.parity() {
            Parity::Odd => after == -before,
            Parity::Even => after == before,
        };
        cases += 1;
        if !ok {
            failures += 1;
        }
    }
    (cases, failures)
}

fn rotor_angle_parts(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..200 {
        let l = nonnull_line(rng);
        let m = nonnull_line(rng);
        let l2m2 = l.multivector().square().scalar_part() * m.multivector().square().scalar_part();
        let rotor = Versor::rotor(&l, &m).unwrap();
        let s = spread(&l, &m).unwrap().into_value();
        let c = cross(&l, &m).unwrap();
        let mut ok = rotor.scalar_part().unwrap().square() == &c * &l2m2;
        let p2_square = rotor.point_part().unwrap().square();
        ok &= p2_square.is_homogeneous(Grade::Scalar)
            && -p2_square.scalar_part().clone() == &s * &l2m2;
        let mirrored = Versor::reflection(&m).unwrap().apply_line(&l);
        ok &= spread(&l, &mirrored).unwrap().into_value() == Rational::from_int(4) * &s * &c;
        cases += 1;
        if !ok {
            failures += 1;
        }
    }
    (cases, failures)
}

fn random_value(rng: &mut ChaCha8Rng) -> Value {
    match rng.random_range(0..7) {
        0 => Value::Rational(rat(rng)),
        1 => Value::Boolean(rng.random_range(0..2) == 0),
        2 => {
            let p = proper_point(rng);
            Value::Point(rescale_point(rng, &p))
        }
        3 => {
            // an ideal point
            loop {
                let (x, y) = (rat(rng), rat(rng));
                if !(x.is_zero() && y.is_zero()) {
                    break Value::Point(Point::from_homogeneous(x, y, Rational::zero()).unwrap());
                }
            }
        }
        4 => Value::Line(nonnull_line(rng)),
        5 => Value::Multivector(random_mv(rng)),
        _ => Value::Versor(random_versor(rng)),
    }
}

/// Projective agreement, except for kinds printed verbatim, which must
/// round-trip structurally.
fn round_trip_matches(original: &Value, reparsed: &Value) -> bool {
    match (original, reparsed) {
        (Value::Point(a), Value::Point(b)) => a.multivector().projectively_eq(b.multivector()),
        (Value::Line(a), Value::Line(b)) => a.multivector().projectively_eq(b.multivector()),
        (a, b) => a == b,
    }
}

fn print_parse_round_trip(rng: &mut ChaCha8Rng) -> (u32, u32) {
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..200 {
        let value = random_value(rng);
        let text = format_value_text(&value);
        cases += 1;
        match eval_str(&text) {
            Ok(reparsed) if round_trip_matches(&value, &reparsed) => {}
            _ => failures += 1,
        }
    }
    // a handful of collinearity cross-checks tying the evaluator to the
    // library predicates
    for _ in 0..50 {
        let (a, b, c) = (proper_point(rng), proper_point(rng), proper_point(rng));
        let text = format!(
            "(collinear? (point {} {}) (point {} {}) (point {} {}))",
            a.x(),
            a.y(),
            b.x(),
            b.y(),
            c.x(),
            c.y()
        );
        cases += 1;
        match eval_str(&text) {
            Ok(Value::Boolean(flag)) if flag == collinear(&a, &b, &c) => {}
            _ => failures += 1,
        }
    }
    (cases, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for report in run_all() {
            assert_eq!(
                report.failures, 0,
                "suite {} had {} failures out of {}",
                report.name, report.failures, report.cases
            );
            assert!(report.cases > 0);
        }
    }
}
