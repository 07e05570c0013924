//! Recursive-descent parser producing a typed expression tree.
//!
//! Operator names and arities live in a fixed table and are checked here,
//! at parse time. The literal forms `point`, `line`, `ideal-point`, `mv`
//! and `versor` take rational literals only; everything else is a call
//! whose arguments are full expressions.

use pga2d::{Parity, Rational};

use crate::lexer::{tokenize, CalcError, Pos, Token, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Quadrance,
    Spread,
    Cross,
    Twist,
    IsParallel,
    IsPerpendicular,
    Collinear,
    Concurrent,
    Join,
    Meet,
    Altitude,
    ParallelThrough,
    Foot,
    Midpoint,
    PerpBisector,
    Area2,
    Centroid,
    Median,
    Reflect,
    Rotor,
    Apply,
}

impl Op {
    pub const ALL: [Op; 21] = [
        Op::Quadrance,
        Op::Spread,
        Op::Cross,
        Op::Twist,
        Op::IsParallel,
        Op::IsPerpendicular,
        Op::Collinear,
        Op::Concurrent,
        Op::Join,
        Op::Meet,
        Op::Altitude,
        Op::ParallelThrough,
        Op::Foot,
        Op::Midpoint,
        Op::PerpBisector,
        Op::Area2,
        Op::Centroid,
        Op::Median,
        Op::Reflect,
        Op::Rotor,
        Op::Apply,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Quadrance => "quadrance",
            Op::Spread => "spread",
            Op::Cross => "cross",
            Op::Twist => "twist",
            Op::IsParallel => "parallel?",
            Op::IsPerpendicular => "perpendicular?",
            Op::Collinear => "collinear?",
            Op::Concurrent => "concurrent?",
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Altitude => "altitude",
            Op::ParallelThrough => "parallel-through",
            Op::Foot => "foot",
            Op::Midpoint => "midpoint",
            Op::PerpBisector => "perp-bisector",
            Op::Area2 => "area2",
            Op::Centroid => "centroid",
            Op::Median => "median",
            Op::Reflect => "reflect",
            Op::Rotor => "rotor",
            Op::Apply => "apply",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Op::Collinear | Op::Concurrent | Op::Area2 | Op::Centroid => 3,
            Op::Median => 4,
            _ => 2,
        }
    }

    pub fn by_name(name: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal {
        value: Rational,
        pos: Pos,
    },
    BoolLit {
        value: bool,
        pos: Pos,
    },
    PointLit {
        x: Rational,
        y: Rational,
        pos: Pos,
    },
    IdealPointLit {
        x: Rational,
        y: Rational,
        pos: Pos,
    },
    LineLit {
        a: Rational,
        b: Rational,
        c: Rational,
        pos: Pos,
    },
    MvLit {
        coeffs: Box<[Rational; 8]>,
        pos: Pos,
    },
    VersorLit {
        parity: Parity,
        coeffs: Box<[Rational; 8]>,
        pos: Pos,
    },
    Call {
        op: Op,
        args: Vec<Expr>,
        pos: Pos,
    },
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Literal { pos, .. }
            | Expr::BoolLit { pos, .. }
            | Expr::PointLit { pos, .. }
            | Expr::IdealPointLit { pos, .. }
            | Expr::LineLit { pos, .. }
            | Expr::MvLit { pos, .. }
            | Expr::VersorLit { pos, .. }
            | Expr::Call { pos, .. } => *pos,
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.index]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn expect_rparen(&mut self, context: &str) -> Result<(), CalcError> {
        match self.peek().kind {
            TokenKind::RParen => {
                self.bump();
                Ok(())
            }
            _ => Err(CalcError::new(
                self.peek().pos,
                format!("expected ')' to close {context}"),
            )),
        }
    }

    /// A rational literal token, for the fixed literal forms.
    fn number(&mut self, context: &str) -> Result<Rational, CalcError> {
        match &self.peek().kind {
            TokenKind::Number(_) => {
                let token = self.bump();
                match token.kind {
                    TokenKind::Number(value) => Ok(value),
                    _ => unreachable!(),
                }
            }
            _ => Err(CalcError::new(
                self.peek().pos,
                format!("{context} takes rational literals"),
            )),
        }
    }

    fn numbers<const N: usize>(&mut self, context: &str) -> Result<[Rational; N], CalcError> {
        let mut out: [Rational; N] = core::array::from_fn(|_| Rational::zero());
        for slot in out.iter_mut() {
            *slot = self.number(context)?;
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr, CalcError> {
        let token = self.bump();
        match token.kind {
            TokenKind::Number(value) => Ok(Expr::Literal {
                value,
                pos: token.pos,
            }),
            TokenKind::Symbol(ref s) if s == "true" || s == "false" => Ok(Expr::BoolLit {
                value: s == "true",
                pos: token.pos,
            }),
            TokenKind::LParen => self.form(token.pos),
            TokenKind::Symbol(s) => Err(CalcError::new(
                token.pos,
                format!("expected an expression, found symbol '{s}'"),
            )),
            TokenKind::RParen => Err(CalcError::new(token.pos, "unexpected ')'")),
            TokenKind::Eof => Err(CalcError::new(token.pos, "unexpected end of input")),
        }
    }

    /// A parenthesized form: a literal constructor or an operator call.
    fn form(&mut self, open: Pos) -> Result<Expr, CalcError> {
        let head = self.bump();
        let name = match head.kind {
            TokenKind::Symbol(s) => s,
            _ => {
                return Err(CalcError::new(
                    head.pos,
                    "expected an operator name after '('",
                ))
            }
        };
        match name.as_str() {
            "point" => {
                let [x, y] = self.numbers("point")?;
                self.expect_rparen("point")?;
                Ok(Expr::PointLit { x, y, pos: open })
            }
            "ideal-point" => {
                let [x, y] = self.numbers("ideal-point")?;
                self.expect_rparen("ideal-point")?;
                Ok(Expr::IdealPointLit { x, y, pos: open })
            }
            "line" => {
                let [a, b, c] = self.numbers("line")?;
                self.expect_rparen("line")?;
                Ok(Expr::LineLit { a, b, c, pos: open })
            }
            "mv" => {
                let coeffs = self.numbers::<8>("mv")?;
                self.expect_rparen("mv")?;
                Ok(Expr::MvLit {
                    coeffs: Box::new(coeffs),
                    pos: open,
                })
            }
            "versor" => {
                let parity = match &self.peek().kind {
                    TokenKind::Symbol(s) if s == "odd" => {
                        self.bump();
                        Parity::Odd
                    }
                    TokenKind::Symbol(s) if s == "even" => {
                        self.bump();
                        Parity::Even
                    }
                    _ => {
                        return Err(CalcError::new(
                            self.peek().pos,
                            "versor takes a parity, 'odd' or 'even'",
                        ))
                    }
                };
                let coeffs = self.numbers::<8>("versor")?;
                self.expect_rparen("versor")?;
                Ok(Expr::VersorLit {
                    parity,
                    coeffs: Box::new(coeffs),
                    pos: open,
                })
            }
            _ => {
                let Some(op) = Op::by_name(&name) else {
                    return Err(CalcError::new(
                        head.pos,
                        format!("unknown operator '{name}'"),
                    ));
                };
                let mut args = Vec::new();
                while !matches!(self.peek().kind, TokenKind::RParen | TokenKind::Eof) {
                    args.push(self.expr()?);
                }
                self.expect_rparen(op.name())?;
                if args.len() != op.arity() {
                    return Err(CalcError::new(
                        open,
                        format!(
                            "{} expects {} arguments, got {}",
                            op.name(),
                            op.arity(),
                            args.len()
                        ),
                    ));
                }
                Ok(Expr::Call {
                    op,
                    args,
                    pos: open,
                })
            }
        }
    }
}

/// Parses exactly one expression from a token stream.
pub fn parse(tokens: Vec<Token>) -> Result<Expr, CalcError> {
    let mut parser = Parser { tokens, index: 0 };
    if matches!(parser.peek().kind, TokenKind::Eof) {
        return Err(CalcError::new(parser.peek().pos, "empty input"));
    }
    let expr = parser.expr()?;
    match parser.peek().kind {
        TokenKind::Eof => Ok(expr),
        _ => Err(CalcError::new(
            parser.peek().pos,
            "unexpected trailing input",
        )),
    }
}

/// Convenience: tokenize and parse a source string.
pub fn parse_str(input: &str) -> Result<Expr, CalcError> {
    parse(tokenize(input)?)
}
