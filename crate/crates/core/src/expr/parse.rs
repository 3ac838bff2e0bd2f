//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | power
//! power  := atom ('^' factor)?
//! atom   := NUMBER | 's' | 't' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit, and exponents may not mention `s`
//! or `t`.

use std::fmt;

use thiserror::Error;

use super::{BinaryOp, Expr, UnaryOp, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax {
        expected: Vec<&'static str>,
        found: String,
    },
    UnknownFunction(String),
    UnknownVariable(String),
    NonConstantExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input where the problem starts.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => write!(
                f,
                "syntax error at byte {}: expected {}, found {}",
                self.offset,
                expected.join(" | "),
                found
            ),
            ParseErrorKind::UnknownFunction(name) => {
                write!(f, "unknown function `{name}` at byte {}", self.offset)
            }
            ParseErrorKind::UnknownVariable(name) => write!(
                f,
                "unknown variable `{name}` at byte {} (only s, t, pi, e)",
                self.offset
            ),
            ParseErrorKind::NonConstantExponent => write!(
                f,
                "exponent at byte {} must be a constant expression",
                self.offset
            ),
        }
    }
}

impl ParseError {
    /// Expected-token set for syntax errors, empty otherwise.
    pub fn expected(&self) -> &[&'static str] {
        match &self.kind {
            ParseErrorKind::Syntax { expected, .. } => expected,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(x) => format!("number {x}"),
            Tok::Ident(name) => format!("`{name}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &["number", "s", "t", "pi", "e", "function", "(", "-"];
const AFTER_OPERAND_TOP: &[&str] = &["+", "-", "*", "/", "^", "end of input"];
const AFTER_OPERAND_NESTED: &[&str] = &["+", "-", "*", "/", "^", ")"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                i = scan_number(bytes, i);
                let lit = &text[start..i];
                let value = lit.parse::<f64>().map_err(|_| ParseError {
                    offset: start,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["number"],
                        found: format!("`{lit}`"),
                    },
                })?;
                out.push((start, Tok::Number(value)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::Syntax {
                        expected: ATOM_START.to_vec(),
                        found: format!("character `{ch}`"),
                    },
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// Digits with an optional fraction and an optional exponent. The `e` of an
/// exponent is consumed only when digits follow it.
fn scan_number(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        if j < bytes.len() && bytes[j].is_ascii_digit() {
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            i = j;
        }
    }
    i
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn syntax_error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind: ParseErrorKind::Syntax {
                expected: expected.to_vec(),
                found: self.peek().describe(),
            },
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinaryOp::Add,
                Tok::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinaryOp::Mul,
                Tok::Slash => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let inner = self.factor()?;
            return Ok(Expr::unary(UnaryOp::Neg, inner));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let exp_offset = self.offset();
        let exponent = self.factor()?;
        if !exponent.is_constant() {
            return Err(ParseError {
                offset: exp_offset,
                kind: ParseErrorKind::NonConstantExponent,
            });
        }
        Ok(Expr::binary(BinaryOp::Pow, base, exponent))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Number(x) => {
                self.bump();
                Ok(Expr::Constant(x))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.nested()?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "s" => return Ok(Expr::Variable(Var::S)),
                    "t" => return Ok(Expr::Variable(Var::T)),
                    "pi" => return Ok(Expr::Constant(std::f64::consts::PI)),
                    "e" => return Ok(Expr::Constant(std::f64::consts::E)),
                    _ => {}
                }
                if let Some(op) = UnaryOp::from_name(&name) {
                    if *self.peek() != Tok::LParen {
                        return Err(self.syntax_error(&["("]));
                    }
                    self.bump();
                    let arg = self.nested()?;
                    return Ok(Expr::unary(op, arg));
                }
                let kind = if *self.peek() == Tok::LParen {
                    ParseErrorKind::UnknownFunction(name)
                } else {
                    ParseErrorKind::UnknownVariable(name)
                };
                Err(ParseError { offset, kind })
            }
            _ => Err(self.syntax_error(ATOM_START)),
        }
    }

    /// Parses `expr ')'` after an opening parenthesis has been consumed.
    fn nested(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        let inner = self.expr()?;
        if *self.peek() != Tok::RParen {
            return Err(self.syntax_error(AFTER_OPERAND_NESTED));
        }
        self.bump();
        self.depth -= 1;
        Ok(inner)
    }
}

/// Parses expression text into a tree.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    debug_assert_eq!(p.depth, 0);
    if *p.peek() != Tok::End {
        return Err(p.syntax_error(AFTER_OPERAND_TOP));
    }
    Ok(e)
}
