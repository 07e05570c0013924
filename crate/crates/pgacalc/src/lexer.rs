//! Tokenizer for the s-expression geometry language.
//!
//! Tokens: `(`, `)`, symbols (operator names, `true`/`false`, `odd`/`even`)
//! and rational literals matching `-?digits(/digits)?`. Whitespace separates
//! tokens; `;` starts a comment running to end of line. Every token carries
//! a 1-based line/column position.

use std::fmt;

use pga2d::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// An error anywhere in the lex/parse/eval pipeline, anchored to the
/// source position of the offending token or sub-expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalcError {
    pub pos: Pos,
    pub message: String,
}

impl CalcError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for CalcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for CalcError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    LParen,
    RParen,
    Symbol(String),
    Number(Rational),
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
}

fn is_symbol_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_symbol_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '-' || c == '?'
}

fn is_delimiter(c: Option<char>) -> bool {
    matches!(c, None | Some('(') | Some(')') | Some(';')) || c.is_some_and(char::is_whitespace)
}

/// Tokenizes a complete input, appending an `Eof` token at the final
/// position.
pub fn tokenize(input: &str) -> Result<Vec<Token>, CalcError> {
    let mut scanner = Scanner::new(input);
    let mut tokens = Vec::new();
    while let Some(c) = scanner.peek() {
        if c.is_whitespace() {
            scanner.bump();
            continue;
        }
        if c == ';' {
            while scanner.peek().is_some_and(|c| c != '\n') {
                scanner.bump();
            }
            continue;
        }
        let pos = scanner.pos();
        if c == '(' {
            scanner.bump();
            tokens.push(Token {
                kind: TokenKind::LParen,
                pos,
            });
            continue;
        }
        if c == ')' {
            scanner.bump();
            tokens.push(Token {
                kind: TokenKind::RParen,
                pos,
            });
            continue;
        }
        if c.is_ascii_digit() || c == '-' {
            let mut text = String::new();
            text.push(scanner.bump().expect("peeked"));
            if text == "-" && !scanner.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(CalcError::new(pos, "unexpected character '-'"));
            }
            while scanner.peek().is_some_and(|c| c.is_ascii_digit()) {
                text.push(scanner.bump().expect("peeked"));
            }
            if scanner.peek() == Some('/') {
                text.push(scanner.bump().expect("peeked"));
                if !scanner.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(CalcError::new(pos, format!("malformed rational '{text}'")));
                }
                while scanner.peek().is_some_and(|c| c.is_ascii_digit()) {
                    text.push(scanner.bump().expect("peeked"));
                }
            }
            if !is_delimiter(scanner.peek()) {
                return Err(CalcError::new(
                    pos,
                    format!("malformed number starting at '{text}'"),
                ));
            }
            let value: Rational = text
                .parse()
                .map_err(|e| CalcError::new(pos, format!("{e}")))?;
            tokens.push(Token {
                kind: TokenKind::Number(value),
                pos,
            });
            continue;
        }
        if is_symbol_start(c) {
            let mut text = String::new();
            while scanner.peek().is_some_and(is_symbol_continue) {
                text.push(scanner.bump().expect("peeked"));
            }
            if !is_delimiter(scanner.peek()) {
                return Err(CalcError::new(
                    scanner.pos(),
                    format!(
                        "unexpected character {:?}",
                        scanner.peek().expect("non-delimiter")
                    ),
                ));
            }
            tokens.push(Token {
                kind: TokenKind::Symbol(text),
                pos,
            });
            continue;
        }
        return Err(CalcError::new(pos, format!("unexpected character '{c}'")));
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        pos: scanner.pos(),
    });
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_tokens() {
        let tokens = tokenize("(spread (line 1 0 0) (line 0 1 0))").unwrap();
        // 15 language tokens (4 parens per sub-form included) plus Eof
        assert_eq!(tokens.len(), 16);
        assert_eq!(tokens[0].kind, TokenKind::LParen);
        assert_eq!(tokens[1].kind, TokenKind::Symbol("spread".into()));
        assert_eq!(tokens[15].kind, TokenKind::Eof);
    }

    #[test]
    fn rational_literals_are_single_tokens() {
        let tokens = tokenize("1/2").unwrap();
        assert_eq!(
            tokens[0].kind,
            TokenKind::Number(Rational::ratio(1, 2).unwrap())
        );
        let tokens = tokenize("-3").unwrap();
        assert_eq!(tokens[0].kind, TokenKind::Number(Rational::from_int(-3)));
    }

    #[test]
    fn spaced_slash_is_rejected_at_the_slash() {
        let err = tokenize("1 / 2").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 3 });
        assert!(err.message.contains("unexpected character '/'"));
    }

    #[test]
    fn comments_and_whitespace_are_skipped() {
        let tokens = tokenize("  ; intro\n 7 ; trailing\n").unwrap();
        assert_eq!(tokens.len(), 2);
        assert_eq!(tokens[0].pos, Pos { line: 2, col: 2 });
    }

    #[test]
    fn positions_are_one_based() {
        let err = tokenize("(point 1 #)").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 10 });
    }

    #[test]
    fn zero_denominator_is_reported_at_the_literal() {
        let err = tokenize("(point 1/0 2)").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 8 });
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn malformed_numbers() {
        assert!(tokenize("1/").is_err());
        assert!(tokenize("1x").is_err());
        assert!(tokenize("-").is_err());
        assert!(tokenize("1/2/3").is_err());
    }
}
