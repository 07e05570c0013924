//! Result values and their canonical textual / structured renderings.
//!
//! Text mode prints every value in a form the parser accepts back, and
//! canonicalizes projective elements so golden outputs are stable: points
//! are weight-normalized, lines (and ideal-point directions) are scaled to
//! coprime integers with the leading nonzero coefficient positive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use pga2d::{Line, Multivector, Point, Rational, Versor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Point(Point),
    Line(Line),
    Multivector(Multivector),
    Versor(Versor),
    Boolean(bool),
}

impl Value {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Value::Rational(_) => "rational",
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Multivector(_) => "multivector",
            Value::Versor(_) => "versor",
            Value::Boolean(_) => "boolean",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Structured,
}

/// Clears denominators and common factors, then fixes the sign so the
/// first nonzero entry is positive. At least one input must be nonzero.
fn canonical_ints(values: &[&Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for i in &ints {
        gcd = gcd.gcd(i);
    }
    assert!(!gcd.is_zero(), "canonical_ints needs a nonzero entry");
    for i in ints.iter_mut() {
        *i /= &gcd;
    }
    if ints
        .iter()
        .find(|i| !i.is_zero())
        .is_some_and(|i| i.is_negative())
    {
        for i in ints.iter_mut() {
            *i = -&*i;
        }
    }
    ints
}

fn point_text(p: &Point) -> String {
    match p.normalize() {
        Ok(n) => format!("(point {} {})", n.x(), n.y()),
        Err(_) => {
            let dir = canonical_ints(&[p.x(), p.y()]);
            format!("(ideal-point {} {})", dir[0], dir[1])
        }
    }
}

fn line_text(l: &Line) -> String {
    let abc = canonical_ints(&[l.a(), l.b(), l.c()]);
    format!("(line {} {} {})", abc[0], abc[1], abc[2])
}

/// The canonical text rendering; parses back to the same value.
pub fn format_value_text(v: &Value) -> String {
    match v {
        Value::Rational(r) => format!("{r}"),
        Value::Boolean(b) => format!("{b}"),
        Value::Point(p) => point_text(p),
        Value::Line(l) => line_text(l),
        Value::Multivector(m) => format!("(mv {m})"),
        Value::Versor(v) => format!("(versor {} {})", v.parity().name(), v.multivector()),
    }
}

/// One structured output record: a `kind` tag, an exact `value` (rationals
/// as strings), and a `detail` carried by errors only.
#[derive(Serialize)]
struct Record {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn rational_strings(values: &[&Rational]) -> Vec<serde_json::Value> {
    values
        .iter()
        .map(|r| serde_json::Value::String(r.to_string()))
        .collect()
}

fn structured_value(v: &Value) -> serde_json::Value {
    match v {
        Value::Rational(r) => serde_json::json!(r.to_string()),
        Value::Boolean(b) => serde_json::json!(b),
        Value::Point(p) => match p.normalize() {
            Ok(n) => serde_json::json!({
                "ideal": false,
                "x": n.x().to_string(),
                "y": n.y().to_string(),
            }),
            Err(_) => {
                let dir = canonical_ints(&[p.x(), p.y()]);
                serde_json::json!({
                    "ideal": true,
                    "x": dir[0].to_string(),
                    "y": dir[1].to_string(),
                })
            }
        },
        Value::Line(l) => {
            let abc = canonical_ints(&[l.a(), l.b(), l.c()]);
            serde_json::json!({
                "a": abc[0].to_string(),
                "b": abc[1].to_string(),
                "c": abc[2].to_string(),
            })
        }
        Value::Multivector(m) => {
            serde_json::Value::Array(rational_strings(&m.coeffs().iter().collect::<Vec<_>>()))
        }
        Value::Versor(v) => serde_json::json!({
            "parity": v.parity().name(),
            "coefficients": rational_strings(
                &v.multivector().coeffs().iter().collect::<Vec<_>>()
            ),
        }),
    }
}

pub fn format_value(v: &Value, mode: OutputMode) -> String {
    match mode {
        OutputMode::Text => format_value_text(v),
        OutputMode::Structured => {
            let record = Record {
                kind: v.kind_name(),
                value: Some(structured_value(v)),
                detail: None,
            };
            serde_json::to_string(&record).expect("record serialization cannot fail")
        }
    }
}

/// Error rendering: `error: <detail>` in text mode, an error record in
/// structured mode.
pub fn format_error(detail: &str, mode: OutputMode) -> String {
    match mode {
        OutputMode::Text => format!("error: {detail}"),
        OutputMode::Structured => {
            let record = Record {
                kind: "error",
                value: None,
                detail: Some(detail.to_string()),
            };
            serde_json::to_string(&record).expect("record serialization cannot fail")
        }
    }
}
