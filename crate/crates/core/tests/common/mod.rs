//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's own differentiation or metric code.
#![allow(dead_code)]

use std::rc::Rc;

use minkowski_lift::lorentz::Vec3;
use rand::Rng;

pub fn g(a: Vec3, b: Vec3) -> f64 {
    -a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3
}

pub fn v(a: [f64; 3]) -> Vec3 {
    Vec3::new(a[0], a[1], a[2])
}

pub fn max_abs(a: Vec3) -> f64 {
    a.x1.abs().max(a.x2.abs()).max(a.x3.abs())
}

/// Five-point central difference, error O(h^4).
pub fn d5<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

pub fn d5_vec<F: Fn(f64) -> Vec3>(f: F, x: f64, h: f64) -> Vec3 {
    Vec3::new(
        d5(|y| f(y).x1, x, h),
        d5(|y| f(y).x2, x, h),
        d5(|y| f(y).x3, x, h),
    )
}

pub const HYPERBOLA: [&str; 3] = ["sinh(s)", "0", "cosh(s)"];
pub const HELIX: [&str; 3] = ["(5/3)*s", "(4/9)*cos(3*s)", "(4/9)*sin(3*s)"];
/// Unit-speed timelike curve with kappa = cosh s and non-constant torsion.
pub const TWISTED: [&str; 3] = [
    "sinh(s)",
    "(sinh(s)*sin(s) + cosh(s)*cos(s))/2",
    "(cosh(s)*sin(s) - sinh(s)*cos(s))/2",
];

/// Hand-derived first derivative of [`TWISTED`].
pub fn twisted_velocity(s: f64) -> Vec3 {
    Vec3::new(s.cosh(), s.sinh() * s.cos(), s.sinh() * s.sin())
}

/// Published frames of the hyperbola: `(T, N, B, T~, N~, B~)`.
pub fn hyperbola_frames(s: f64) -> [Vec3; 6] {
    let (c, h) = (s.cosh(), s.sinh());
    [
        Vec3::new(c, 0.0, h),
        Vec3::new(h, 0.0, c),
        Vec3::new(0.0, -1.0, 0.0),
        Vec3::new(h, 0.0, c),
        Vec3::new(c, 0.0, h),
        Vec3::new(0.0, 1.0, 0.0),
    ]
}

/// Published frames of the helix: `(T, N, B, T~, N~, B~)`.
pub fn helix_frames(s: f64) -> [Vec3; 6] {
    let (c, n) = ((3.0 * s).cos(), (3.0 * s).sin());
    [
        Vec3::new(5.0 / 3.0, -4.0 / 3.0 * n, 4.0 / 3.0 * c),
        Vec3::new(0.0, -c, -n),
        Vec3::new(-4.0 / 3.0, 5.0 / 3.0 * n, -5.0 / 3.0 * c),
        Vec3::new(0.0, -c, -n),
        Vec3::new(0.0, n, -c),
        Vec3::new(-1.0, 0.0, 0.0),
    ]
}

/// Published closed forms of the four surfaces.
pub fn printed_surface(id: u8, s: f64, t: f64) -> Vec3 {
    match id {
        1 => Vec3::new(
            s.cosh() + t * s.sinh() + t.sinh() * s.cosh(),
            t.sinh(),
            t * s.cosh() + s.sinh() + t.sinh() * s.sinh(),
        ),
        2 => {
            let k = 1.0 + s.sinh() * t.sinh();
            Vec3::new(s.cosh() * k, t - t.sinh(), s.sinh() * k)
        }
        3 => Vec3::new(
            5.0 / 3.0,
            (t - 4.0 / 3.0) * (3.0 * s).sin(),
            (4.0 / 3.0 - t) * (3.0 * s).cos(),
        ),
        4 => {
            let v = t * s.ln();
            Vec3::new(
                5.0 / 3.0 - t * t * s.exp(),
                (v - 4.0 / 3.0) * (3.0 * s).sin(),
                (4.0 / 3.0 - v) * (3.0 * s).cos(),
            )
        }
        _ => panic!("no surface {id}"),
    }
}

/// A random expression in `s` and `t` together with a native closure that
/// computes the same function.
#[derive(Clone)]
pub struct RandExpr {
    pub text: String,
    pub f: Rc<dyn Fn(f64, f64) -> f64>,
}

fn leaf<R: Rng>(rng: &mut R) -> RandExpr {
    match rng.gen_range(0..4) {
        0 => RandExpr {
            text: "s".into(),
            f: Rc::new(|s, _| s),
        },
        1 => RandExpr {
            text: "t".into(),
            f: Rc::new(|_, t| t),
        },
        _ => {
            let c = (rng.gen_range(-30..=30) as f64) / 10.0;
            RandExpr {
                text: format!("({c})"),
                f: Rc::new(move |_, _| c),
            }
        }
    }
}

/// Builds expressions whose values and derivatives stay moderate on
/// `[-1, 1]^2`: arguments of exponentials, logs, roots, quotients and
/// tangents are squashed into safe ranges first.
pub fn rand_expr<R: Rng>(rng: &mut R, depth: u32) -> RandExpr {
    if depth == 0 || rng.gen_bool(0.2) {
        return leaf(rng);
    }
    let a = rand_expr(rng, depth - 1);
    let fa = a.f.clone();
    match rng.gen_range(0..14) {
        0 | 1 => {
            let b = rand_expr(rng, depth - 1);
            let fb = b.f.clone();
            RandExpr {
                text: format!("({} + {})", a.text, b.text),
                f: Rc::new(move |s, t| fa(s, t) + fb(s, t)),
            }
        }
        2 => {
            let b = rand_expr(rng, depth - 1);
            let fb = b.f.clone();
            RandExpr {
                text: format!("({} - {})", a.text, b.text),
                f: Rc::new(move |s, t| fa(s, t) - fb(s, t)),
            }
        }
        3 | 4 => {
            let b = rand_expr(rng, depth - 1);
            let fb = b.f.clone();
            RandExpr {
                text: format!("({} * {})", a.text, b.text),
                f: Rc::new(move |s, t| fa(s, t) * fb(s, t)),
            }
        }
        5 => {
            let b = rand_expr(rng, depth - 1);
            let fb = b.f.clone();
            RandExpr {
                text: format!("({} / (1 + tanh({})^2))", a.text, b.text),
                f: Rc::new(move |s, t| fa(s, t) / (1.0 + fb(s, t).tanh().powi(2))),
            }
        }
        6 => RandExpr {
            text: format!("sin({})", a.text),
            f: Rc::new(move |s, t| fa(s, t).sin()),
        },
        7 => RandExpr {
            text: format!("cos({})", a.text),
            f: Rc::new(move |s, t| fa(s, t).cos()),
        },
        8 => RandExpr {
            text: format!("exp(tanh({}))", a.text),
            f: Rc::new(move |s, t| fa(s, t).tanh().exp()),
        },
        9 => RandExpr {
            text: format!("ln(2 + sin({}))", a.text),
            f: Rc::new(move |s, t| (2.0 + fa(s, t).sin()).ln()),
        },
        10 => RandExpr {
            text: format!("sqrt(1 + cos({})^2)", a.text),
            f: Rc::new(move |s, t| (1.0 + fa(s, t).cos().powi(2)).sqrt()),
        },
        11 => RandExpr {
            text: format!("(sinh(tanh({})) - cosh(sin({})))", a.text, a.text),
            f: Rc::new(move |s, t| fa(s, t).tanh().sinh() - fa(s, t).sin().cosh()),
        },
        12 => RandExpr {
            text: format!("tan(tanh({}))", a.text),
            f: Rc::new(move |s, t| fa(s, t).tanh().tan()),
        },
        _ => {
            let p = rng.gen_range(2..=3);
            RandExpr {
                text: format!("sin({})^{p}", a.text),
                f: Rc::new(move |s, t| fa(s, t).sin().powi(p)),
            }
        }
    }
}
