//! Symbolic differentiation, substitution and light simplification.

use std::sync::Arc;

use super::{apply_binary, apply_unary, BinaryOp, Expr, UnaryOp, Var};

fn c(x: f64) -> Expr {
    Expr::Constant(x)
}

fn add(a: Expr, b: Expr) -> Expr {
    Expr::binary(BinaryOp::Add, a, b)
}

fn sub(a: Expr, b: Expr) -> Expr {
    Expr::binary(BinaryOp::Sub, a, b)
}

fn mul(a: Expr, b: Expr) -> Expr {
    Expr::binary(BinaryOp::Mul, a, b)
}

fn div(a: Expr, b: Expr) -> Expr {
    Expr::binary(BinaryOp::Div, a, b)
}

fn neg(a: Expr) -> Expr {
    Expr::unary(UnaryOp::Neg, a)
}

fn un(op: UnaryOp, a: &Arc<Expr>) -> Expr {
    Expr::Unary(op, a.clone())
}

/// Exact derivative with respect to `var`, simplified.
pub fn differentiate(expr: &Expr, var: Var) -> Expr {
    simplify(&derive(expr, var))
}

fn derive(expr: &Expr, var: Var) -> Expr {
    match expr {
        Expr::Constant(_) => c(0.0),
        Expr::Variable(v) => c(if *v == var { 1.0 } else { 0.0 }),
        Expr::Unary(op, a) => {
            let da = derive(a, var);
            let inner = match op {
                UnaryOp::Neg => return neg(da),
                UnaryOp::Sin => un(UnaryOp::Cos, a),
                UnaryOp::Cos => neg(un(UnaryOp::Sin, a)),
                // sec^2 = 1 / cos^2
                UnaryOp::Tan => div(
                    c(1.0),
                    Expr::binary(BinaryOp::Pow, un(UnaryOp::Cos, a), c(2.0)),
                ),
                UnaryOp::Sinh => un(UnaryOp::Cosh, a),
                UnaryOp::Cosh => un(UnaryOp::Sinh, a),
                UnaryOp::Tanh => sub(
                    c(1.0),
                    Expr::binary(BinaryOp::Pow, un(UnaryOp::Tanh, a), c(2.0)),
                ),
                UnaryOp::Exp => un(UnaryOp::Exp, a),
                UnaryOp::Ln => return div(da, (**a).clone()),
                UnaryOp::Sqrt => return div(da, mul(c(2.0), un(UnaryOp::Sqrt, a))),
            };
            mul(inner, da)
        }
        Expr::Binary(op, l, r) => {
            let dl = derive(l, var);
            match op {
                BinaryOp::Add => add(dl, derive(r, var)),
                BinaryOp::Sub => sub(dl, derive(r, var)),
                BinaryOp::Mul => add(mul(dl, (**r).clone()), mul((**l).clone(), derive(r, var))),
                BinaryOp::Div => div(
                    sub(mul(dl, (**r).clone()), mul((**l).clone(), derive(r, var))),
                    Expr::binary(BinaryOp::Pow, (**r).clone(), c(2.0)),
                ),
                // Exponents are constant by construction of the grammar.
                BinaryOp::Pow => mul(
                    mul(
                        (**r).clone(),
                        Expr::binary(BinaryOp::Pow, (**l).clone(), sub((**r).clone(), c(1.0))),
                    ),
                    dl,
                ),
            }
        }
    }
}

/// Replaces every occurrence of `var` by `value`.
pub fn substitute(expr: &Expr, var: Var, value: &Expr) -> Expr {
    match expr {
        Expr::Variable(v) if *v == var => value.clone(),
        Expr::Constant(_) | Expr::Variable(_) => expr.clone(),
        Expr::Unary(op, a) => Expr::unary(*op, substitute(a, var, value)),
        Expr::Binary(op, a, b) => {
            Expr::binary(*op, substitute(a, var, value), substitute(b, var, value))
        }
    }
}

/// Constant folding plus removal of additive and multiplicative
/// identities. The result evaluates to the same value wherever both
/// expressions are defined.
pub fn simplify(expr: &Expr) -> Expr {
    match expr {
        Expr::Constant(_) | Expr::Variable(_) => expr.clone(),
        Expr::Unary(op, a) => simplify_unary(*op, simplify(a)),
        Expr::Binary(op, a, b) => simplify_binary(*op, simplify(a), simplify(b)),
    }
}

fn simplify_unary(op: UnaryOp, a: Expr) -> Expr {
    if let Some(x) = a.as_constant() {
        if let Ok(v) = apply_unary(op, x) {
            if v.is_finite() {
                return c(v);
            }
        }
    }
    if op == UnaryOp::Neg {
        if let Expr::Unary(UnaryOp::Neg, inner) = &a {
            return (**inner).clone();
        }
    }
    Expr::unary(op, a)
}

fn is(e: &Expr, x: f64) -> bool {
    e.as_constant() == Some(x)
}

fn simplify_binary(op: BinaryOp, a: Expr, b: Expr) -> Expr {
    if let (Some(x), Some(y)) = (a.as_constant(), b.as_constant()) {
        if let Ok(v) = apply_binary(op, x, y) {
            if v.is_finite() {
                return c(v);
            }
        }
    }
    match op {
        BinaryOp::Add if is(&a, 0.0) => b,
        BinaryOp::Add | BinaryOp::Sub if is(&b, 0.0) => a,
        BinaryOp::Add => match b {
            Expr::Unary(UnaryOp::Neg, inner) => sub(a, (*inner).clone()),
            _ => add(a, b),
        },
        BinaryOp::Sub if is(&a, 0.0) => simplify_unary(UnaryOp::Neg, b),
        BinaryOp::Sub => match b {
            Expr::Unary(UnaryOp::Neg, inner) => add(a, (*inner).clone()),
            _ => sub(a, b),
        },
        BinaryOp::Mul if is(&a, 0.0) || is(&b, 0.0) => c(0.0),
        BinaryOp::Mul if is(&a, 1.0) => b,
        BinaryOp::Mul if is(&b, 1.0) => a,
        BinaryOp::Mul if is(&a, -1.0) => simplify_unary(UnaryOp::Neg, b),
        BinaryOp::Mul if is(&b, -1.0) => simplify_unary(UnaryOp::Neg, a),
        BinaryOp::Div if is(&a, 0.0) => c(0.0),
        BinaryOp::Div if is(&b, 1.0) => a,
        BinaryOp::Pow if is(&b, 1.0) => a,
        BinaryOp::Pow if is(&b, 0.0) => c(1.0),
        _ => Expr::binary(op, a, b),
    }
}
