//! Incidence constructions and the triangle apparatus: joins and meets,
//! altitude / parallel / foot, perpendicular bisector, midpoint, signed
//! area, sides, medians and centroid.
//!
//! Everything here is a short algebraic expression in the kernel products;
//! the classical theorems (median concurrency, the intercept theorem) hold
//! as exact multivector identities and are exercised by the test suites.

use core::fmt;

use crate::algebra::{Grade, Multivector};
use crate::geometry::{GeometryError, Line, Point};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// Join of projectively equal points.
    CoincidentPoints,
    /// Meet of projectively equal lines.
    CoincidentLines,
    /// A proper point was required.
    IdealPoint,
    /// A non-null line was required.
    NullLine,
    /// The triangle operation needs non-collinear vertices.
    DegenerateTriangle,
    /// A vertex coincides with the midpoint of the opposite side, so the
    /// median degenerates (only possible for collinear vertices).
    DegenerateMedian,
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::CoincidentPoints => write!(f, "coincident points"),
            ConstructError::CoincidentLines => write!(f, "coincident lines"),
            ConstructError::IdealPoint => write!(f, "ideal point (zero weight)"),
            ConstructError::NullLine => write!(f, "null line"),
            ConstructError::DegenerateTriangle => write!(f, "degenerate (collinear) triangle"),
            ConstructError::DegenerateMedian => {
                write!(f, "median undefined: vertex at opposite midpoint")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConstructError {}

impl From<GeometryError> for ConstructError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::IdealPoint => ConstructError::IdealPoint,
            _ => ConstructError::DegenerateTriangle,
        }
    }
}

/// The connecting line of two distinct points.
pub fn join_points(a: &Point, b: &Point) -> Result<Line, ConstructError> {
    let joined = a.multivector().join(b.multivector());
    Line::from_multivector(joined).map_err(|_| ConstructError::CoincidentPoints)
}

/// The intersection point of two distinct lines; ideal when they are
/// parallel.
pub fn meet_lines(l: &Line, m: &Line) -> Result<Point, ConstructError> {
    let met = l.multivector().wedge(m.multivector());
    Point::from_multivector(met).map_err(|_| ConstructError::CoincidentLines)
}

/// The line through `a` perpendicular to `l`: the inner product `A·l`.
pub fn altitude(a: &Point, l: &Line) -> Result<Line, ConstructError> {
    if l.is_null() {
        return Err(ConstructError::NullLine);
    }
    if a.is_ideal() {
        return Err(ConstructError::IdealPoint);
    }
    let mv = a.multivector().dot(l.multivector());
    Ok(Line::from_multivector(mv).expect("altitude of a proper point is a line"))
}

/// The line through `a` parallel to `l`: the grade-1 part of `A (A·l)`.
pub fn parallel_through(a: &Point, l: &Line) -> Result<Line, ConstructError> {
    let perp = altitude(a, l)?;
    let mv = a
        .multivector()
        .gp(perp.multivector())
        .grade_part(Grade::Vector);
    Ok(Line::from_multivector(mv).expect("parallel through a proper point is a line"))
}

/// The orthogonal projection of `a` onto `l`: the meet of `l` with the
/// altitude from `a`.
pub fn foot(a: &Point, l: &Line) -> Result<Point, ConstructError> {
    let perp = altitude(a, l)?;
    let mv = l.multivector().wedge(perp.multivector());
    Ok(Point::from_multivector(mv).expect("a line always meets its altitude"))
}

/// The midpoint of two proper points: the sum of the weight-normalized
/// points. Returned at weight 2; normalize to read off coordinates.
pub fn midpoint(a: &Point, b: &Point) -> Result<Point, ConstructError> {
    let an = a.normalize().map_err(|_| ConstructError::IdealPoint)?;
    let bn = b.normalize().map_err(|_| ConstructError::IdealPoint)?;
    let sum = an.into_multivector() + bn.into_multivector();
    Ok(Point::from_multivector(sum).expect("weight-1 points sum to weight 2"))
}

/// The perpendicular bisector of two distinct proper points:
/// `(A ∨ B) · (A + B)` on normalized points — the joining line dotted with
/// the midpoint.
pub fn perpendicular_bisector(a: &Point, b: &Point) -> Result<Line, ConstructError> {
    let an = a.normalize().map_err(|_| ConstructError::IdealPoint)?;
    let bn = b.normalize().map_err(|_| ConstructError::IdealPoint)?;
    if an == bn {
        return Err(ConstructError::CoincidentPoints);
    }
    let joining = an.multivector().join(bn.multivector());
    let mid = an.into_multivector() + bn.into_multivector();
    let mv = joining.dot(&mid);
    Ok(Line::from_multivector(mv).expect("bisector of distinct proper points is a line"))
}

/// Twice the signed area of the triangle `a b c`: the scalar triple join
/// of the weight-normalized points. Positive for counterclockwise order.
pub fn signed_area2(a: &Point, b: &Point, c: &Point) -> Result<Rational, ConstructError> {
    let an = a.normalize().map_err(|_| ConstructError::IdealPoint)?;
    let bn = b.normalize().map_err(|_| ConstructError::IdealPoint)?;
    let cn = c.normalize().map_err(|_| ConstructError::IdealPoint)?;
    let triple = an
        .multivector()
        .join(bn.multivector())
        .join(cn.multivector());
    Ok(triple.scalar_part().clone())
}

/// A triangle with weight-normalized vertices. [`Triangle::new`] demands
/// non-collinear vertices; [`Triangle::new_allow_degenerate`] admits
/// collinear (but still pairwise distinct) ones so that boundary identities
/// remain probeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    vertices: [Point; 3],
}

/// Indices are 1-based; `(i, j, k)` always denotes a cyclic permutation of
/// `(1, 2, 3)`.
fn cyclic(i: usize) -> (usize, usize, usize) {
    match i {
        1 => (0, 1, 2),
        2 => (1, 2, 0),
        3 => (2, 0, 1),
        _ => panic!("vertex index must be 1, 2 or 3"),
    }
}

impl Triangle {
    pub fn new(a: &Point, b: &Point, c: &Point) -> Result<Self, ConstructError> {
        let t = Self::new_allow_degenerate(a, b, c)?;
        if t.is_degenerate() {
            return Err(ConstructError::DegenerateTriangle);
        }
        Ok(t)
    }

    pub fn new_allow_degenerate(a: &Point, b: &Point, c: &Point) -> Result<Self, ConstructError> {
        let vertices = [
            a.normalize().map_err(|_| ConstructError::IdealPoint)?,
            b.normalize().map_err(|_| ConstructError::IdealPoint)?,
            c.normalize().map_err(|_| ConstructError::IdealPoint)?,
        ];
        if vertices[0] == vertices[1] || vertices[1] == vertices[2] || vertices[0] == vertices[2] {
            return Err(ConstructError::CoincidentPoints);
        }
        Ok(Self { vertices })
    }

    /// Vertex `i` (1-based), at weight 1.
    pub fn vertex(&self, i: usize) -> &Point {
        let (i0, _, _) = cyclic(i);
        &self.vertices[i0]
    }

    /// Twice the signed area.
    pub fn area2(&self) -> Rational {
        self.vertices[0]
            .multivector()
            .join(self.vertices[1].multivector())
            .join(self.vertices[2].multivector())
            .scalar_part()
            .clone()
    }

    pub fn is_degenerate(&self) -> bool {
        self.area2().is_zero()
    }

    /// Side `i`, the join of the other two vertices: `a_i = A_j ∨ A_k`.
    pub fn side(&self, i: usize) -> Line {
        let (_, j, k) = cyclic(i);
        join_points(&self.vertices[j], &self.vertices[k])
            .expect("triangle vertices are pairwise distinct")
    }

    /// Median `i`, the line `(A_j + A_k) ∨ A_i` through vertex `i` and the
    /// midpoint of the opposite side.
    pub fn median(&self, i: usize) -> Result<Line, ConstructError> {
        let (i0, j, k) = cyclic(i);
        let mid =
            midpoint(&self.vertices[j], &self.vertices[k]).expect("triangle vertices are proper");
        let mv = mid.multivector().join(self.vertices[i0].multivector());
        Line::from_multivector(mv).map_err(|_| ConstructError::DegenerateMedian)
    }

    /// The common point of the medians: `A_1 + A_2 + A_3`, normalized.
    pub fn centroid(&self) -> Result<Point, ConstructError> {
        if self.is_degenerate() {
            return Err(ConstructError::DegenerateTriangle);
        }
        let sum = self
            .vertices
            .iter()
            .fold(Multivector::zero(), |acc, v| &acc + v.multivector());
        let p = Point::from_multivector(sum).expect("vertex weights sum to 3");
        Ok(p.normalize().expect("weight 3 is nonzero"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::incident;
    use crate::trig::{is_parallel, is_perpendicular, spread};

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d).unwrap()
    }

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(
            Rational::from_int(a),
            Rational::from_int(b),
            Rational::from_int(c),
        )
        .unwrap()
    }

    fn point(x: i64, y: i64) -> Point {
        Point::new(Rational::from_int(x), Rational::from_int(y))
    }

    fn unit_triangle() -> Triangle {
        Triangle::new(&point(0, 0), &point(1, 0), &point(0, 1)).unwrap()
    }

    fn proj_eq_lines(a: &Line, b: &Line) -> bool {
        a.multivector().projectively_eq(b.multivector())
    }

    fn proj_eq_points(a: &Point, b: &Point) -> bool {
        a.multivector().projectively_eq(b.multivector())
    }

    #[test]
    fn join_points_examples() {
        let l = join_points(&point(0, 0), &point(1, 0)).unwrap();
        assert!(proj_eq_lines(&l, &line(0, 1, 0)));
        let l = join_points(&point(0, 0), &point(1, 1)).unwrap();
        assert!(proj_eq_lines(&l, &line(1, -1, 0)));
        let a = point(1, 2);
        let b = point(3, 4);
        let l = join_points(&a, &b).unwrap();
        assert!(incident(&a, &l) && incident(&b, &l));
        assert_eq!(join_points(&a, &a), Err(ConstructError::CoincidentPoints));
    }

    #[test]
    fn meet_lines_examples() {
        let p = meet_lines(&line(1, 0, 0), &line(0, 1, 0)).unwrap();
        assert!(proj_eq_points(&p, &point(0, 0)));
        // parallels meet at an ideal point
        let p = meet_lines(&line(1, 0, 0), &line(1, 0, -1)).unwrap();
        assert!(p.is_ideal());
        let p = meet_lines(&line(1, 1, -1), &line(1, -1, 0)).unwrap();
        assert_eq!(p.normalize().unwrap(), Point::new(r(1, 2), r(1, 2)));
        let l = line(2, 3, 4);
        let m = Line::new(r(1, 1), r(3, 2), r(2, 1)).unwrap();
        assert_eq!(meet_lines(&l, &m), Err(ConstructError::CoincidentLines));
    }

    #[test]
    fn altitude_examples() {
        let alt = altitude(&point(0, 0), &line(1, 1, -1)).unwrap();
        assert!(proj_eq_lines(&alt, &line(1, -1, 0)));
        let alt = altitude(&point(0, 0), &line(0, 1, 0)).unwrap();
        assert!(proj_eq_lines(&alt, &line(1, 0, 0)));
        // a point on the line still gets a perpendicular through itself
        let a = point(2, 0);
        let l = line(0, 1, 0);
        let alt = altitude(&a, &l).unwrap();
        assert!(incident(&a, &alt));
        assert!(is_perpendicular(&alt, &l));
        assert_eq!(
            altitude(&point(1, 1), &Line::new(r(0, 1), r(0, 1), r(1, 1)).unwrap()),
            Err(ConstructError::NullLine)
        );
    }

    #[test]
    fn parallel_through_examples() {
        let par = parallel_through(&point(0, 1), &line(0, 1, 0)).unwrap();
        assert!(proj_eq_lines(&par, &line(0, 1, -1)));
        // through a point of the line itself: the line again
        let l = line(1, 1, -1);
        let a = Point::new(r(1, 2), r(1, 2));
        let par = parallel_through(&a, &l).unwrap();
        assert!(proj_eq_lines(&par, &l));
        let a = point(2, 3);
        let par = parallel_through(&a, &l).unwrap();
        assert!(incident(&a, &par));
        assert_eq!(spread(&par, &l).unwrap().value(), &Rational::zero());
    }

    #[test]
    fn foot_examples() {
        let f = foot(&point(1, 1), &line(0, 1, 0)).unwrap();
        assert!(proj_eq_points(&f, &point(1, 0)));
        let f = foot(&point(0, 0), &line(1, 0, -3)).unwrap();
        assert!(proj_eq_points(&f, &point(3, 0)));
        // a point on the line projects to itself
        let a = point(5, 0);
        let f = foot(&a, &line(0, 1, 0)).unwrap();
        assert!(proj_eq_points(&f, &a));
    }

    #[test]
    fn foot_joins_perpendicularly() {
        let a = point(2, 5);
        let l = line(3, -1, 4);
        let f = foot(&a, &l).unwrap();
        assert!(incident(&f.normalize().unwrap(), &l));
        let drop = join_points(&a, &f.normalize().unwrap()).unwrap();
        assert!(is_perpendicular(&drop, &l));
    }

    #[test]
    fn midpoint_examples() {
        let m = midpoint(&point(0, 0), &point(2, 0)).unwrap();
        assert_eq!(m.normalize().unwrap(), point(1, 0));
        let m = midpoint(&point(1, 1), &point(1, 1)).unwrap();
        assert_eq!(m.normalize().unwrap(), point(1, 1));
        let m = midpoint(&point(0, 0), &point(1, 1)).unwrap();
        assert_eq!(m.normalize().unwrap(), Point::new(r(1, 2), r(1, 2)));
    }

    #[test]
    fn perpendicular_bisector_examples() {
        let b = perpendicular_bisector(&point(0, 0), &point(2, 0)).unwrap();
        assert!(proj_eq_lines(&b, &line(1, 0, -1)));
        let b = perpendicular_bisector(&point(0, 0), &point(0, 2)).unwrap();
        assert!(proj_eq_lines(&b, &line(0, 1, -1)));
        let b = perpendicular_bisector(&point(0, 0), &point(2, 2)).unwrap();
        assert!(proj_eq_lines(&b, &line(1, 1, -2)));
        assert_eq!(
            perpendicular_bisector(&point(1, 2), &point(1, 2)),
            Err(ConstructError::CoincidentPoints)
        );
    }

    #[test]
    fn bisector_properties() {
        let a = point(1, 2);
        let b = point(4, -2);
        let bis = perpendicular_bisector(&a, &b).unwrap();
        let mid = midpoint(&a, &b).unwrap().normalize().unwrap();
        assert!(incident(&mid, &bis));
        assert!(is_perpendicular(&bis, &join_points(&a, &b).unwrap()));
    }

    #[test]
    fn signed_area_examples() {
        assert_eq!(
            signed_area2(&point(0, 0), &point(1, 0), &point(0, 1)).unwrap(),
            Rational::one()
        );
        assert_eq!(
            signed_area2(&point(0, 0), &point(0, 1), &point(1, 0)).unwrap(),
            Rational::from_int(-1)
        );
        assert_eq!(
            signed_area2(&point(0, 0), &point(1, 1), &point(2, 2)).unwrap(),
            Rational::zero()
        );
        // weight-insensitive thanks to internal normalization
        let heavy = Point::from_homogeneous(r(3, 1), r(0, 1), r(3, 1)).unwrap();
        assert_eq!(
            signed_area2(&point(0, 0), &heavy, &point(0, 1)).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn triangle_sides() {
        let t = unit_triangle();
        assert!(proj_eq_lines(&t.side(3), &line(0, 1, 0)));
        assert!(proj_eq_lines(&t.side(1), &line(1, 1, -1)));
        assert!(proj_eq_lines(&t.side(2), &line(1, 0, 0)));
    }

    #[test]
    fn triangle_medians() {
        let t = unit_triangle();
        let m1 = t.median(1).unwrap();
        assert!(proj_eq_lines(&m1, &line(1, -1, 0)));
        let m2 = t.median(2).unwrap();
        assert!(incident(&point(1, 0), &m2));
        assert!(incident(&Point::new(r(0, 1), r(1, 2)), &m2));
        for i in 1..=3 {
            let m = t.median(i).unwrap();
            assert!(incident(t.vertex(i), &m));
        }
    }

    #[test]
    fn centroid_examples() {
        let t = unit_triangle();
        assert_eq!(t.centroid().unwrap(), Point::new(r(1, 3), r(1, 3)));
        let t = Triangle::new(&point(0, 0), &point(3, 0), &point(0, 3)).unwrap();
        assert_eq!(t.centroid().unwrap(), point(1, 1));
        let t = Triangle::new(&point(0, 0), &point(2, 0), &point(1, 1)).unwrap();
        assert_eq!(t.centroid().unwrap(), Point::new(r(1, 1), r(1, 3)));
    }

    #[test]
    fn degenerate_triangles() {
        assert_eq!(
            Triangle::new(&point(0, 0), &point(1, 1), &point(2, 2)),
            Err(ConstructError::DegenerateTriangle)
        );
        let t = Triangle::new_allow_degenerate(&point(0, 0), &point(1, 1), &point(2, 2)).unwrap();
        assert!(t.is_degenerate());
        assert_eq!(t.area2(), Rational::zero());
        // sides and most medians stay defined
        assert!(is_parallel(&t.side(1), &t.side(2)));
        assert!(t.median(1).is_ok());
        // but the centroid is refused
        assert_eq!(t.centroid(), Err(ConstructError::DegenerateTriangle));
        // and the median through the middle vertex degenerates here:
        // (1,1) is the midpoint of (0,0) and (2,2)
        assert_eq!(t.median(2), Err(ConstructError::DegenerateMedian));
    }

    #[test]
    fn ideal_vertices_are_rejected() {
        let ideal =
            Point::from_homogeneous(Rational::one(), Rational::zero(), Rational::zero()).unwrap();
        assert_eq!(
            Triangle::new(&point(0, 0), &point(1, 0), &ideal),
            Err(ConstructError::IdealPoint)
        );
        assert_eq!(
            midpoint(&ideal, &point(0, 0)),
            Err(ConstructError::IdealPoint)
        );
        assert_eq!(
            signed_area2(&ideal, &point(1, 0), &point(0, 1)),
            Err(ConstructError::IdealPoint)
        );
    }
}
