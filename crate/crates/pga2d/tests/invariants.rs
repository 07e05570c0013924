//! Cross-module property suites: symmetry and scale invariance of the
//! measurements, characterizations of parallelism/perpendicularity,
//! equidistance of the perpendicular bisector, translation behaviour, and
//! the defining predicates of the derived constructions.

mod common;

use common::*;
use pga2d::{
    altitude, cross, foot, incident, is_parallel, is_perpendicular, join_points, meet_lines,
    parallel_through, perpendicular_bisector, quadrance, spread, Line, Parity, Point, Rational,
    Triangle, Versor,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng_for(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x17E4_0002_u64.wrapping_add(stream))
}

#[test]
fn measurements_are_symmetric() {
    let mut rng = rng_for(1);
    for _ in 0..200 {
        let a = proper_point(&mut rng);
        let b = proper_point(&mut rng);
        assert_eq!(quadrance(&a, &b).unwrap(), quadrance(&b, &a).unwrap());
        let l = nonnull_line(&mut rng);
        let m = nonnull_line(&mut rng);
        assert_eq!(spread(&l, &m).unwrap(), spread(&m, &l).unwrap());
        assert_eq!(cross(&l, &m).unwrap(), cross(&m, &l).unwrap());
    }
}

#[test]
fn measurements_are_scale_invariant_in_each_argument() {
    let mut rng = rng_for(2);
    for _ in 0..200 {
        let a = proper_point(&mut rng);
        let b = proper_point(&mut rng);
        let q = quadrance(&a, &b).unwrap();
        assert_eq!(quadrance(&rescale_point(&mut rng, &a), &b).unwrap(), q);
        assert_eq!(quadrance(&a, &rescale_point(&mut rng, &b)).unwrap(), q);
        let l = nonnull_line(&mut rng);
        let m = nonnull_line(&mut rng);
        let s = spread(&l, &m).unwrap();
        assert_eq!(spread(&rescale_line(&mut rng, &l), &m).unwrap(), s);
        assert_eq!(spread(&l, &rescale_line(&mut rng, &m)).unwrap(), s);
    }
}

#[test]
fn zero_quadrance_characterizes_coincidence() {
    let mut rng = rng_for(3);
    for _ in 0..200 {
        let a = proper_point(&mut rng);
        let b = proper_point(&mut rng);
        let q = quadrance(&a, &b).unwrap();
        assert_eq!(
            q.value().is_zero(),
            a.multivector().projectively_eq(b.multivector())
        );
        // and against a rescaled copy of itself
        let a2 = rescale_point(&mut rng, &a);
        assert!(quadrance(&a, &a2).unwrap().value().is_zero());
    }
}

#[test]
fn spread_zero_iff_parallel_and_one_iff_perpendicular() {
    let mut rng = rng_for(4);
    for _ in 0..200 {
        let l = nonnull_line(&mut rng);
        let m = nonnull_line(&mut rng);
        let s = spread(&l, &m).unwrap().into_value();
        assert_eq!(s.is_zero(), is_parallel(&l, &m));
        assert_eq!(s.is_one(), is_perpendicular(&l, &m));
        // force both directions of the iff with constructed pairs
        let p = proper_point(&mut rng);
        let par = parallel_through(&p, &l).unwrap();
        assert!(spread(&l, &par).unwrap().value().is_zero());
        let perp = altitude(&p, &l).unwrap();
        assert!(spread(&l, &perp).unwrap().value().is_one());
    }
}

#[test]
fn constructions_satisfy_their_defining_predicates() {
    let mut rng = rng_for(5);
    for _ in 0..200 {
        let a = proper_point(&mut rng);
        let l = nonnull_line(&mut rng);
        let alt = altitude(&a, &l).unwrap();
        assert!(incident(&a, &alt));
        assert!(is_perpendicular(&alt, &l));
        let par = parallel_through(&a, &l).unwrap();
        assert!(incident(&a, &par));
        assert!(is_parallel(&par, &l));
        let f = foot(&a, &l).unwrap();
        let fp = f
            .normalize()
            .expect("foot of a proper point on a non-null line is proper");
        assert!(incident(&fp, &l));
        if !incident(&a, &l) {
            let drop = join_points(&a, &fp).unwrap();
            assert!(is_perpendicular(&drop, &l));
        } else {
            assert!(f.multivector().projectively_eq(a.multivector()));
        }
    }
}

/// Rational points of a line, swept by a parameter.
fn point_on_line(l: &Line, t: Rational) -> Point {
    if !l.b().is_zero() {
        let x = t;
        let y = (-(l.c()) - l.a() * &x).checked_div(l.b()).unwrap();
        Point::new(x, y)
    } else {
        let x = (-(l.c())).checked_div(l.a()).unwrap();
        Point::new(x, t)
    }
}

#[test]
fn perpendicular_bisector_is_equidistant() {
    let mut rng = rng_for(6);
    for _ in 0..100 {
        let a = proper_point(&mut rng);
        let b = loop {
            let b = proper_point(&mut rng);
            if b != a {
                break b;
            }
        };
        let bis = perpendicular_bisector(&a, &b).unwrap();
        for _ in 0..5 {
            let x = point_on_line(&bis, small_rat(&mut rng));
            assert!(incident(&x, &bis));
            assert_eq!(quadrance(&a, &x).unwrap(), quadrance(&b, &x).unwrap());
        }
    }
}

#[test]
fn ideal_points_are_exactly_the_translation_fixed_points() {
    let mut rng = rng_for(7);
    for _ in 0..100 {
        // a translation: two distinct parallel non-null mirrors
        let l = nonnull_line(&mut rng);
        let shifted =
            Line::new(l.a().clone(), l.b().clone(), l.c() + nonzero_rat(&mut rng)).unwrap();
        let translation = Versor::rotor(&l, &shifted).unwrap();
        // every ideal point is fixed projectively
        let dir = loop {
            let (x, y) = (small_rat(&mut rng), small_rat(&mut rng));
            if !(x.is_zero() && y.is_zero()) {
                break Point::from_homogeneous(x, y, Rational::zero()).unwrap();
            }
        };
        let image = translation.apply(dir.multivector());
        assert!(image.projectively_eq(dir.multivector()));
        // no proper point is fixed
        let p = proper_point(&mut rng);
        let moved = translation.apply_point(&p);
        assert!(!moved.multivector().projectively_eq(p.multivector()));
    }
}

#[test]
fn thick_sandwich_composes_two_reflections() {
    let mut rng = rng_for(8);
    for _ in 0..100 {
        let l = nonnull_line(&mut rng);
        let m = nonnull_line(&mut rng);
        let rot = Versor::rotor(&l, &m).unwrap();
        let rl = Versor::reflection(&l).unwrap();
        let rm = Versor::reflection(&m).unwrap();
        let x = random_mv(&mut rng);
        let two_step = rm.apply(&rl.apply(&x));
        assert_eq!(rot.apply(&x), two_step);
    }
}

#[test]
fn versor_parity_matches_generator_count() {
    let mut rng = rng_for(9);
    for _ in 0..50 {
        let l = nonnull_line(&mut rng);
        let m = nonnull_line(&mut rng);
        assert_eq!(Versor::reflection(&l).unwrap().parity(), Parity::Odd);
        let rot = Versor::rotor(&l, &m).unwrap();
        assert_eq!(rot.parity(), Parity::Even);
        // the rotor is literally the product m l
        assert_eq!(rot.multivector(), &m.multivector().gp(l.multivector()));
        // and its scalar square is l²m²
        let norm = rot.multivector().gp(&rot.multivector().reverse());
        let l2m2 = l.multivector().square().scalar_part() * m.multivector().square().scalar_part();
        assert_eq!(norm.scalar_part(), &l2m2);
    }
}

#[test]
fn side_squares_are_the_opposite_quadrances() {
    let mut rng = rng_for(10);
    for _ in 0..100 {
        let t = nondegenerate_triangle(&mut rng);
        // a_i = A_j ∨ A_k on weight-1 vertices, so a_i² = Q(A_j, A_k)
        let pairs = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];
        for (i, j, k) in pairs {
            let side_sq = t.side(i).multivector().square().scalar_part().clone();
            let q = quadrance(t.vertex(j), t.vertex(k)).unwrap();
            assert_eq!(&side_sq, q.value());
        }
    }
}

#[test]
fn meet_then_join_round_trips_projectively() {
    let mut rng = rng_for(11);
    for _ in 0..100 {
        let l = nonnull_line(&mut rng);
        let m = nonnull_line(&mut rng);
        if is_parallel(&l, &m) {
            continue;
        }
        let p = meet_lines(&l, &m).unwrap();
        assert!(incident(&p.normalize().unwrap(), &l));
        assert!(incident(&p.normalize().unwrap(), &m));
        let a = proper_point(&mut rng);
        let b = proper_point(&mut rng);
        if a.multivector().projectively_eq(b.multivector()) {
            continue;
        }
        let joined = join_points(&a, &b).unwrap();
        assert!(incident(&a, &joined));
        assert!(incident(&b, &joined));
    }
}

#[test]
fn degenerate_triangles_keep_boundary_identities() {
    // collinear but pairwise distinct vertices: area vanishes, side
    // products collapse accordingly
    let t = Triangle::new_allow_degenerate(
        &Point::new(Rational::from_int(0), Rational::from_int(0)),
        &Point::new(Rational::from_int(1), Rational::from_int(2)),
        &Point::new(Rational::from_int(3), Rational::from_int(6)),
    )
    .unwrap();
    assert!(t.is_degenerate());
    let area2 = t.area2();
    assert!(area2.is_zero());
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        let lhs = t.side(i).multivector().wedge(t.side(j).multivector());
        assert_eq!(lhs, t.vertex(k).multivector().scale(&area2));
        assert!(lhs.is_zero());
    }
}
