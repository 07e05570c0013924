//! Pure evaluator: expression tree in, exact value out. Domain and type
//! errors carry the source position of the offending sub-expression.

use pga2d::{
    altitude, collinear, concurrent, cross, foot, is_parallel, is_perpendicular, join_points,
    meet_lines, midpoint, parallel_through, perpendicular_bisector, quadrance, signed_area2,
    spread, twist, Line, Multivector, Point, Rational, Triangle, Versor,
};

use crate::lexer::{CalcError, Pos};
use crate::parser::{Expr, Op};
use crate::value::Value;

fn domain(pos: Pos, op: Op, detail: impl std::fmt::Display) -> CalcError {
    CalcError::new(pos, format!("{}: {detail}", op.name()))
}

fn type_error(pos: Pos, op: Op, index: usize, expected: &str, found: &Value) -> CalcError {
    CalcError::new(
        pos,
        format!(
            "{}: argument {} must be {expected}, got {}",
            op.name(),
            index + 1,
            found.kind_name()
        ),
    )
}

fn point_arg(pos: Pos, op: Op, args: &[Value], index: usize) -> Result<Point, CalcError> {
    match &args[index] {
        Value::Point(p) => Ok(p.clone()),
        other => Err(type_error(pos, op, index, "a point", other)),
    }
}

fn line_arg(pos: Pos, op: Op, args: &[Value], index: usize) -> Result<Line, CalcError> {
    match &args[index] {
        Value::Line(l) => Ok(l.clone()),
        other => Err(type_error(pos, op, index, "a line", other)),
    }
}

fn versor_arg(pos: Pos, op: Op, args: &[Value], index: usize) -> Result<Versor, CalcError> {
    match &args[index] {
        Value::Versor(v) => Ok(v.clone()),
        other => Err(type_error(pos, op, index, "a versor", other)),
    }
}

fn rational_arg(pos: Pos, op: Op, args: &[Value], index: usize) -> Result<Rational, CalcError> {
    match &args[index] {
        Value::Rational(r) => Ok(r.clone()),
        other => Err(type_error(pos, op, index, "a rational", other)),
    }
}

/// Applies a versor to a point, line or raw multivector, preserving the
/// value kind.
fn sandwich(pos: Pos, op: Op, v: &Versor, target: &Value) -> Result<Value, CalcError> {
    match target {
        Value::Point(p) => Ok(Value::Point(v.apply_point(p))),
        Value::Line(l) => Ok(Value::Line(v.apply_line(l))),
        Value::Multivector(m) => Ok(Value::Multivector(v.apply(m))),
        other => Err(type_error(
            pos,
            op,
            1,
            "a point, line or multivector",
            other,
        )),
    }
}

fn triangle(pos: Pos, op: Op, args: &[Value]) -> Result<Triangle, CalcError> {
    let a = point_arg(pos, op, args, 0)?;
    let b = point_arg(pos, op, args, 1)?;
    let c = point_arg(pos, op, args, 2)?;
    Triangle::new(&a, &b, &c).map_err(|e| domain(pos, op, e))
}

pub fn evaluate(expr: &Expr) -> Result<Value, CalcError> {
    match expr {
        Expr::Literal { value, .. } => Ok(Value::Rational(value.clone())),
        Expr::BoolLit { value, .. } => Ok(Value::Boolean(*value)),
        Expr::PointLit { x, y, .. } => Ok(Value::Point(Point::new(x.clone(), y.clone()))),
        Expr::IdealPointLit { x, y, pos } => {
            Point::from_homogeneous(x.clone(), y.clone(), Rational::zero())
                .map(Value::Point)
                .map_err(|e| CalcError::new(*pos, format!("ideal-point: {e}")))
        }
        Expr::LineLit { a, b, c, pos } => Line::new(a.clone(), b.clone(), c.clone())
            .map(Value::Line)
            .map_err(|e| CalcError::new(*pos, format!("line: {e}"))),
        Expr::MvLit { coeffs, .. } => Ok(Value::Multivector(Multivector::from_coeffs(
            (**coeffs).clone(),
        ))),
        Expr::VersorLit {
            parity,
            coeffs,
            pos,
        } => Versor::from_parts(*parity, Multivector::from_coeffs((**coeffs).clone()))
            .map(Value::Versor)
            .map_err(|e| CalcError::new(*pos, format!("versor: {e}"))),
        Expr::Call { op, args, pos } => {
            let values: Vec<Value> = args
                .iter()
                .map(evaluate)
                .collect::<Result<_, CalcError>>()?;
            apply_op(*op, &values, *pos)
        }
    }
}

fn apply_op(op: Op, args: &[Value], pos: Pos) -> Result<Value, CalcError> {
    match op {
        Op::Quadrance => {
            let a = point_arg(pos, op, args, 0)?;
            let b = point_arg(pos, op, args, 1)?;
            quadrance(&a, &b)
                .map(|q| Value::Rational(q.into_value()))
                .map_err(|e| domain(pos, op, e))
        }
        Op::Spread => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            spread(&l, &m)
                .map(|s| Value::Rational(s.into_value()))
                .map_err(|e| domain(pos, op, e))
        }
        Op::Cross => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            cross(&l, &m)
                .map(Value::Rational)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Twist => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            twist(&l, &m)
                .map(Value::Rational)
                .map_err(|e| domain(pos, op, e))
        }
        Op::IsParallel => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            Ok(Value::Boolean(is_parallel(&l, &m)))
        }
        Op::IsPerpendicular => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            Ok(Value::Boolean(is_perpendicular(&l, &m)))
        }
        Op::Collinear => {
            let a = point_arg(pos, op, args, 0)?;
            let b = point_arg(pos, op, args, 1)?;
            let c = point_arg(pos, op, args, 2)?;
            Ok(Value::Boolean(collinear(&a, &b, &c)))
        }
        Op::Concurrent => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            let n = line_arg(pos, op, args, 2)?;
            Ok(Value::Boolean(concurrent(&l, &m, &n)))
        }
        Op::Join => {
            let a = point_arg(pos, op, args, 0)?;
            let b = point_arg(pos, op, args, 1)?;
            join_points(&a, &b)
                .map(Value::Line)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Meet => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            meet_lines(&l, &m)
                .map(Value::Point)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Altitude => {
            let a = point_arg(pos, op, args, 0)?;
            let l = line_arg(pos, op, args, 1)?;
            altitude(&a, &l)
                .map(Value::Line)
                .map_err(|e| domain(pos, op, e))
        }
        Op::ParallelThrough => {
            let a = point_arg(pos, op, args, 0)?;
            let l = line_arg(pos, op, args, 1)?;
            parallel_through(&a, &l)
                .map(Value::Line)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Foot => {
            let a = point_arg(pos, op, args, 0)?;
            let l = line_arg(pos, op, args, 1)?;
            foot(&a, &l)
                .map(Value::Point)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Midpoint => {
            let a = point_arg(pos, op, args, 0)?;
            let b = point_arg(pos, op, args, 1)?;
            midpoint(&a, &b)
                .map(Value::Point)
                .map_err(|e| domain(pos, op, e))
        }
        Op::PerpBisector => {
            let a = point_arg(pos, op, args, 0)?;
            let b = point_arg(pos, op, args, 1)?;
            perpendicular_bisector(&a, &b)
                .map(Value::Line)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Area2 => {
            let a = point_arg(pos, op, args, 0)?;
            let b = point_arg(pos, op, args, 1)?;
            let c = point_arg(pos, op, args, 2)?;
            signed_area2(&a, &b, &c)
                .map(Value::Rational)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Centroid => {
            let t = triangle(pos, op, args)?;
            t.centroid()
                .map(Value::Point)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Median => {
            let index = rational_arg(pos, op, args, 3)?;
            let index =
                index_1_to_3(&index).ok_or_else(|| domain(pos, op, "index must be 1, 2 or 3"))?;
            let t = triangle(pos, op, args)?;
            t.median(index)
                .map(Value::Line)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Reflect => {
            let m = line_arg(pos, op, args, 0)?;
            let v = Versor::reflection(&m).map_err(|e| domain(pos, op, e))?;
            sandwich(pos, op, &v, &args[1])
        }
        Op::Rotor => {
            let l = line_arg(pos, op, args, 0)?;
            let m = line_arg(pos, op, args, 1)?;
            Versor::rotor(&l, &m)
                .map(Value::Versor)
                .map_err(|e| domain(pos, op, e))
        }
        Op::Apply => {
            let v = versor_arg(pos, op, args, 0)?;
            sandwich(pos, op, &v, &args[1])
        }
    }
}

fn index_1_to_3(r: &Rational) -> Option<usize> {
    if !r.is_integer() {
        return None;
    }
    [1usize, 2, 3]
        .into_iter()
        .find(|&i| r == &Rational::from_int(i as i64))
}

/// Tokenize, parse and evaluate a source string.
pub fn eval_str(input: &str) -> Result<Value, CalcError> {
    evaluate(&crate::parser::parse_str(input)?)
}
