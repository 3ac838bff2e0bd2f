//! Frenet apparatus of a unit-speed timelike curve and the Darboux case
//! split that decides how the natural lift's frame is built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{differentiate, parse, Bindings, Expr, Var};
use crate::lorentz::{classify, CausalCharacter, CausalTag, TimeSign, Vec3, EPS_CAUSAL};

/// Allowed `|g(a', a') + 1|` for a curve to count as unit speed.
pub const EPS_UNIT: f64 = 1e-8;

/// Tolerance for frame identities (unit lengths, orthogonality).
pub const EPS_FRAME: f64 = 1e-9;

/// Highest derivative order kept symbolically.
const MAX_ORDER: usize = 3;

/// A space curve `s -> (x1(s), x2(s), x3(s))` on `[s_min, s_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    derivs: Vec<[Expr; 3]>,
    s_min: f64,
    s_max: f64,
}

impl CurveSpec {
    pub fn new(components: [Expr; 3], s_min: f64, s_max: f64) -> Result<Self> {
        if !(s_min.is_finite() && s_max.is_finite() && s_min <= s_max) {
            return Err(Error::InvalidRange(s_min, s_max));
        }
        if let Some(c) = components.iter().find(|c| c.contains_var(Var::T)) {
            return Err(Error::CurveUsesT(c.to_string()));
        }
        let mut derivs = vec![components];
        for k in 0..MAX_ORDER {
            let next = derivs[k].clone().map(|c| differentiate(&c, Var::S));
            derivs.push(next);
        }
        Ok(Self {
            derivs,
            s_min,
            s_max,
        })
    }

    pub fn parse(texts: [&str; 3], s_min: f64, s_max: f64) -> Result<Self> {
        let [x, y, z] = texts;
        Self::new([parse(x)?, parse(y)?, parse(z)?], s_min, s_max)
    }

    pub fn components(&self) -> &[Expr; 3] {
        &self.derivs[0]
    }

    /// Symbolic derivative of the given order (0 through 3).
    pub fn derivative(&self, order: usize) -> &[Expr; 3] {
        &self.derivs[order]
    }

    pub fn range(&self) -> (f64, f64) {
        (self.s_min, self.s_max)
    }

    pub fn point(&self, s: f64) -> Result<Vec3> {
        self.eval_derivative(0, s)
    }

    pub fn eval_derivative(&self, order: usize, s: f64) -> Result<Vec3> {
        let b = Bindings::s(s);
        let [x, y, z] = &self.derivs[order];
        Ok(Vec3::new(x.eval(&b)?, y.eval(&b)?, z.eval(&b)?))
    }

    /// `n` evenly spaced parameters covering the full range.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        linspace(self.s_min, self.s_max, n)
    }
}

/// `n` evenly spaced values from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i + 1 == n {
                    b
                } else {
                    a + (b - a) * (i as f64) / ((n - 1) as f64)
                }
            })
            .collect(),
    }
}

/// `{T, N, B, kappa, tau}` of a unit-speed timelike curve at `s`.
///
/// `T` is timelike, `N` and `B` spacelike, oriented so that
/// `T x N = -B`, and `T' = kN`, `N' = kT + tB`, `B' = -tN`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrenetApparatus {
    pub s: f64,
    pub tangent: Vec3,
    pub normal: Vec3,
    pub binormal: Vec3,
    pub curvature: f64,
    pub torsion: f64,
}

pub fn frenet_apparatus_timelike(curve: &CurveSpec, s: f64) -> Result<FrenetApparatus> {
    let d1 = curve.eval_derivative(1, s)?;
    let d2 = curve.eval_derivative(2, s)?;
    let d3 = curve.eval_derivative(3, s)?;

    if !classify(&d1, EPS_CAUSAL).is_timelike() {
        return Err(Error::NotTimelike { s });
    }
    let residual = (d1.dot(&d1) + 1.0).abs();
    if residual > EPS_UNIT {
        return Err(Error::NotUnitSpeed { s, residual });
    }
    let kappa = d2.norm();
    if kappa <= EPS_CAUSAL {
        return Err(Error::VanishingCurvature { s });
    }

    let tangent = d1;
    let normal = (1.0 / kappa) * d2;
    let binormal = -tangent.cross(&normal);

    // N' = a'''/k - (k'/k) N with k' = g(a'', a''')/k; then B' = -T x N'
    // because T' x N = k N x N = 0.
    let dkappa = d2.dot(&d3) / kappa;
    let dnormal = (1.0 / kappa) * d3 - (dkappa / kappa) * normal;
    let dbinormal = -tangent.cross(&dnormal);
    let torsion = -dbinormal.dot(&normal);

    Ok(FrenetApparatus {
        s,
        tangent,
        normal,
        binormal,
        curvature: kappa,
        torsion,
    })
}

/// Largest `|g(a', a') + 1|` over `grid_size` evenly spaced parameters.
pub fn verify_unit_speed(curve: &CurveSpec, grid_size: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for s in curve.grid(grid_size.max(2)) {
        let d1 = curve.eval_derivative(1, s)?;
        worst = worst.max((d1.dot(&d1) + 1.0).abs());
    }
    Ok(worst)
}

/// Rotation vector `W` of the Frenet frame: `X' = W x X` for `X = T, N, B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Darboux {
    pub vector: Vec3,
    pub character: CausalCharacter,
}

/// `W = -tau T - kappa B`, so `g(W, W) = kappa^2 - tau^2`.
pub fn darboux_vector(app: &FrenetApparatus) -> Result<Darboux> {
    let (kappa, tau) = (app.curvature, app.torsion);
    if (kappa - tau.abs()).abs() <= EPS_CAUSAL {
        return Err(Error::NullDarboux { kappa, tau });
    }
    let vector = -tau * app.tangent - kappa * app.binormal;
    // The sign of kappa^2 - tau^2 is exact; g(W, W) from components is not.
    let character = if kappa > tau.abs() {
        CausalCharacter {
            tag: CausalTag::Spacelike,
            sign: TimeSign::NotApplicable,
        }
    } else {
        CausalCharacter {
            tag: CausalTag::Timelike,
            sign: classify(&vector, 0.0).sign,
        }
    };
    Ok(Darboux { vector, character })
}

/// The four ways the lift frame `{T~, N~, B~}` can sit relative to
/// `{T, N, B}`, named by the causal character of the lift binormal and of
/// the Darboux vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LiftRelation {
    TimelikeBinormalSpacelikeW,
    TimelikeBinormalTimelikeW,
    SpacelikeBinormalSpacelikeW,
    SpacelikeBinormalTimelikeW,
}

impl LiftRelation {
    /// Rows express `(T~, N~, B~)` in the basis `(T, N, B)`.
    pub fn matrix(self, cosh: f64, sinh: f64) -> [[f64; 3]; 3] {
        let first = [0.0, 1.0, 0.0];
        match self {
            Self::TimelikeBinormalSpacelikeW => [first, [cosh, 0.0, sinh], [sinh, 0.0, cosh]],
            Self::TimelikeBinormalTimelikeW => [first, [sinh, 0.0, cosh], [cosh, 0.0, sinh]],
            Self::SpacelikeBinormalSpacelikeW => [first, [cosh, 0.0, sinh], [-sinh, 0.0, -cosh]],
            Self::SpacelikeBinormalTimelikeW => [first, [sinh, 0.0, cosh], [-cosh, 0.0, -sinh]],
        }
    }

    pub fn binormal_is_timelike(self) -> bool {
        matches!(
            self,
            Self::TimelikeBinormalSpacelikeW | Self::TimelikeBinormalTimelikeW
        )
    }

    pub fn darboux_is_timelike(self) -> bool {
        matches!(
            self,
            Self::TimelikeBinormalTimelikeW | Self::SpacelikeBinormalTimelikeW
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::TimelikeBinormalSpacelikeW => "timelike lift binormal, spacelike W",
            Self::TimelikeBinormalTimelikeW => "timelike lift binormal, timelike W",
            Self::SpacelikeBinormalSpacelikeW => "spacelike lift binormal, spacelike W",
            Self::SpacelikeBinormalTimelikeW => "spacelike lift binormal, timelike W",
        }
    }
}

/// Selected relation together with its hyperbolic angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LiftCase {
    pub relation: LiftRelation,
    pub theta: f64,
    pub cosh_theta: f64,
    pub sinh_theta: f64,
    /// `-1` when the torsion is negative in the timelike-W branch; the
    /// `cosh` entries of the `N~` and `B~` rows then change sign.
    pub torsion_sign: f64,
    pub darboux_tag: CausalTag,
}

impl LiftCase {
    /// Matrix rows with the torsion sign applied.
    pub fn rows(&self) -> [[f64; 3]; 3] {
        let mut m = self.relation.matrix(self.cosh_theta, self.sinh_theta);
        if self.torsion_sign < 0.0 {
            match self.relation {
                LiftRelation::TimelikeBinormalTimelikeW
                | LiftRelation::SpacelikeBinormalTimelikeW => {
                    m[1][2] = -m[1][2];
                    m[2][0] = -m[2][0];
                }
                _ => {}
            }
        }
        m
    }
}

/// Picks the lift relation from the sign of `kappa^2 - tau^2`.
///
/// Only the two relations that a natural lift of a timelike curve can
/// realize are ever returned: a spacelike `W` makes `N~` timelike and a
/// timelike `W` makes `B~` timelike.
pub fn lift_case(kappa: f64, tau: f64) -> Result<LiftCase> {
    if (kappa - tau.abs()).abs() <= EPS_CAUSAL {
        return Err(Error::NullDarboux { kappa, tau });
    }
    if kappa > tau.abs() {
        let r = (kappa * kappa - tau * tau).sqrt();
        Ok(LiftCase {
            relation: LiftRelation::SpacelikeBinormalSpacelikeW,
            theta: (tau / kappa).atanh(),
            cosh_theta: kappa / r,
            sinh_theta: tau / r,
            torsion_sign: 1.0,
            darboux_tag: CausalTag::Spacelike,
        })
    } else {
        let r = (tau * tau - kappa * kappa).sqrt();
        Ok(LiftCase {
            relation: LiftRelation::TimelikeBinormalTimelikeW,
            theta: (kappa / tau.abs()).atanh(),
            cosh_theta: tau.abs() / r,
            sinh_theta: kappa / r,
            torsion_sign: if tau < 0.0 { -1.0 } else { 1.0 },
            darboux_tag: CausalTag::Timelike,
        })
    }
}
