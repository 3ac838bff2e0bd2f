use thiserror::Error;

use crate::expr::{EvalError, ParseError};
use crate::lorentz::LorentzError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Lorentz(#[from] LorentzError),
    #[error("curve component `{0}` depends on t; curves are functions of s only")]
    CurveUsesT(String),
    #[error("invalid range [{0}, {1}]")]
    InvalidRange(f64, f64),
    #[error("curve is not unit speed at s = {s}: |g(a', a') + 1| = {residual:.3e}")]
    NotUnitSpeed { s: f64, residual: f64 },
    #[error("curve is not timelike at s = {s}")]
    NotTimelike { s: f64 },
    #[error("curvature vanishes at s = {s}")]
    VanishingCurvature { s: f64 },
    #[error("Darboux vector is null (kappa = {kappa}, tau = {tau})")]
    NullDarboux { kappa: f64, tau: f64 },
    #[error("tangent of the natural lift is null or vanishing at s = {s}")]
    NullLiftTangent { s: f64 },
    #[error("principal normal of the natural lift is null at s = {s}")]
    NullLiftNormal { s: f64 },
    #[error("frames disagree on the causal character of the binormal")]
    CaseMismatch,
    #[error("grid must be at least 2 x 2, got {ns} x {nt}")]
    InvalidGrid { ns: usize, nt: usize },
    #[error("surface normal degenerates at (s, t) = ({s}, {t})")]
    DegenerateNormal { s: f64, t: f64 },
    #[error("evaluation failed at (s, t) = ({s}, {t}): {source}")]
    SampleDomain {
        s: f64,
        t: f64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
