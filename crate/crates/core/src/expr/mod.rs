//! Scalar expressions in the parameters `s` and `t`.
//!
//! Curve components and marching-scale functions are written in a small
//! infix language (see [`parse`]) and kept as an immutable tree so that
//! they can be differentiated exactly.

mod diff;
mod parse;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use diff::{differentiate, simplify, substitute};
pub use parse::{parse, ParseError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    S,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::T => "t",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Neg,
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Ln,
    Sqrt,
}

impl UnaryOp {
    pub const FUNCTIONS: [UnaryOp; 9] = [
        UnaryOp::Sin,
        UnaryOp::Cos,
        UnaryOp::Tan,
        UnaryOp::Sinh,
        UnaryOp::Cosh,
        UnaryOp::Tanh,
        UnaryOp::Exp,
        UnaryOp::Ln,
        UnaryOp::Sqrt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Neg => "-",
            UnaryOp::Sin => "sin",
            UnaryOp::Cos => "cos",
            UnaryOp::Tan => "tan",
            UnaryOp::Sinh => "sinh",
            UnaryOp::Cosh => "cosh",
            UnaryOp::Tanh => "tanh",
            UnaryOp::Exp => "exp",
            UnaryOp::Ln => "ln",
            UnaryOp::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<UnaryOp> {
        UnaryOp::FUNCTIONS.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Pow => "^",
        }
    }
}

/// Expression tree. Subtrees are shared, so cloning is cheap.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constant(f64),
    Variable(Var),
    Unary(UnaryOp, Arc<Expr>),
    Binary(BinaryOp, Arc<Expr>, Arc<Expr>),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("variable `{0}` is not bound")]
    Unbound(&'static str),
}

/// Values for the free variables.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bindings {
    pub s: f64,
    pub t: Option<f64>,
}

impl Bindings {
    pub fn s(s: f64) -> Self {
        Self { s, t: None }
    }

    pub fn st(s: f64, t: f64) -> Self {
        Self { s, t: Some(t) }
    }
}

impl Expr {
    pub fn constant(c: f64) -> Expr {
        Expr::Constant(c)
    }

    pub fn var(v: Var) -> Expr {
        Expr::Variable(v)
    }

    pub fn unary(op: UnaryOp, e: Expr) -> Expr {
        Expr::Unary(op, Arc::new(e))
    }

    pub fn binary(op: BinaryOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Arc::new(a), Arc::new(b))
    }

    pub fn is_constant(&self) -> bool {
        !self.contains_var(Var::S) && !self.contains_var(Var::T)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        match self {
            Expr::Constant(_) => false,
            Expr::Variable(w) => *w == v,
            Expr::Unary(_, a) => a.contains_var(v),
            Expr::Binary(_, a, b) => a.contains_var(v) || b.contains_var(v),
        }
    }

    pub fn as_constant(&self) -> Option<f64> {
        match self {
            Expr::Constant(c) => Some(*c),
            _ => None,
        }
    }

    /// Evaluates in IEEE double precision. Any operation leaving its
    /// real domain, or producing a non-finite value, is an error.
    pub fn eval(&self, b: &Bindings) -> Result<f64, EvalError> {
        let value = match self {
            Expr::Constant(c) => *c,
            Expr::Variable(Var::S) => b.s,
            Expr::Variable(Var::T) => b.t.ok_or(EvalError::Unbound("t"))?,
            Expr::Unary(op, a) => {
                let x = a.eval(b)?;
                apply_unary(*op, x)?
            }
            Expr::Binary(op, l, r) => {
                let x = l.eval(b)?;
                let y = r.eval(b)?;
                apply_binary(*op, x, y)?
            }
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(EvalError::Domain(format!("non-finite result in `{self}`")))
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expr::Constant(_) | Expr::Variable(_) => 1,
            Expr::Unary(_, a) => 1 + a.size(),
            Expr::Binary(_, a, b) => 1 + a.size() + b.size(),
        }
    }
}

pub fn eval(expr: &Expr, b: &Bindings) -> Result<f64, EvalError> {
    expr.eval(b)
}

pub(crate) fn apply_unary(op: UnaryOp, x: f64) -> Result<f64, EvalError> {
    Ok(match op {
        UnaryOp::Neg => -x,
        UnaryOp::Sin => x.sin(),
        UnaryOp::Cos => x.cos(),
        UnaryOp::Tan => {
            if x.cos() == 0.0 {
                return Err(EvalError::Domain(format!("tan undefined at {x}")));
            }
            x.tan()
        }
        UnaryOp::Sinh => x.sinh(),
        UnaryOp::Cosh => x.cosh(),
        UnaryOp::Tanh => x.tanh(),
        UnaryOp::Exp => x.exp(),
        UnaryOp::Ln => {
            if x <= 0.0 {
                return Err(EvalError::Domain(format!("ln of non-positive value {x}")));
            }
            x.ln()
        }
        UnaryOp::Sqrt => {
            if x < 0.0 {
                return Err(EvalError::Domain(format!("sqrt of negative value {x}")));
            }
            x.sqrt()
        }
    })
}

pub(crate) fn apply_binary(op: BinaryOp, x: f64, y: f64) -> Result<f64, EvalError> {
    Ok(match op {
        BinaryOp::Add => x + y,
        BinaryOp::Sub => x - y,
        BinaryOp::Mul => x * y,
        BinaryOp::Div => {
            if y == 0.0 {
                return Err(EvalError::Domain("division by zero".into()));
            }
            x / y
        }
        BinaryOp::Pow => {
            if x < 0.0 && y.fract() != 0.0 {
                return Err(EvalError::Domain(format!(
                    "negative base {x} raised to non-integer power {y}"
                )));
            }
            if x == 0.0 && y < 0.0 {
                return Err(EvalError::Domain("zero raised to a negative power".into()));
            }
            x.powf(y)
        }
    })
}

// Printing precedence levels; they mirror the grammar in `parse`.
const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_FACTOR: u8 = 3;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Constant(_) | Expr::Variable(_) => PREC_ATOM,
            Expr::Unary(UnaryOp::Neg, _) => PREC_FACTOR,
            Expr::Unary(_, _) => PREC_ATOM,
            Expr::Binary(BinaryOp::Add | BinaryOp::Sub, _, _) => PREC_SUM,
            Expr::Binary(BinaryOp::Mul | BinaryOp::Div, _, _) => PREC_PRODUCT,
            Expr::Binary(BinaryOp::Pow, _, _) => 4,
        }
    }

    fn fmt_min(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_node(f)?;
            write!(f, ")")
        } else {
            self.fmt_node(f)
        }
    }

    fn fmt_node(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Constant(c) if c.is_sign_negative() => write!(f, "(-{})", -c),
            Expr::Constant(c) => write!(f, "{c}"),
            Expr::Variable(v) => write!(f, "{}", v.name()),
            Expr::Unary(UnaryOp::Neg, a) => {
                write!(f, "-")?;
                a.fmt_min(f, PREC_FACTOR)
            }
            Expr::Unary(op, a) => {
                write!(f, "{}(", op.name())?;
                a.fmt_node(f)?;
                write!(f, ")")
            }
            Expr::Binary(op, l, r) => {
                let (lmin, rmin) = match op {
                    BinaryOp::Add | BinaryOp::Sub => (PREC_SUM, PREC_PRODUCT),
                    BinaryOp::Mul | BinaryOp::Div => (PREC_PRODUCT, PREC_FACTOR),
                    BinaryOp::Pow => (PREC_ATOM, PREC_FACTOR),
                };
                l.fmt_min(f, lmin)?;
                write!(f, " {} ", op.symbol())?;
                r.fmt_min(f, rmin)
            }
        }
    }
}

/// Prints in the input syntax; `parse(&e.to_string())` rebuilds `e`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_node(f)
    }
}
