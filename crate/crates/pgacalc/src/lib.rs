//! Library half of the `pgacalc` binary: the s-expression language
//! (lexer, parser), the evaluator over the exact geometry kernel, output
//! formatting, and the built-in verification suites.

pub mod eval;
pub mod lexer;
pub mod parser;
pub mod selftest;
pub mod value;

pub use eval::{eval_str, evaluate};
pub use lexer::{tokenize, CalcError, Pos, Token, TokenKind};
pub use parser::{parse, parse_str, Expr, Op};
pub use value::{format_error, format_value, OutputMode, Value};
