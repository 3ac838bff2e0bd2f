//! Vector algebra of Minkowski 3-space with signature (-, +, +).
//!
//! The first coordinate is the timelike axis. Everything here is a pure
//! function of its inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default absolute threshold on `g(X, X)` below which a vector is treated
/// as lightlike.
pub const EPS_CAUSAL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LorentzError {
    #[error("vector is null (lightlike) within tolerance")]
    NullInput,
    #[error("timelike vectors lie in opposite time cones")]
    OppositeOrientation,
    #[error("vectors span a degenerate (lightlike) plane")]
    DegeneratePlane,
    #[error("vector norm {0:e} is too small to normalize")]
    NearNull(f64),
}

/// A point or direction in Minkowski 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Lorentzian inner product `-x1 y1 + x2 y2 + x3 y3`.
    pub fn dot(&self, other: &Vec3) -> f64 {
        -self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3
    }

    /// `sqrt(|g(X, X)|)`.
    pub fn norm(&self) -> f64 {
        self.dot(self).abs().sqrt()
    }

    /// Lorentzian cross product, the determinant with first row
    /// `(e1, -e2, -e3)`.
    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3::new(
            self.x2 * other.x3 - self.x3 * other.x2,
            self.x1 * other.x3 - self.x3 * other.x1,
            self.x2 * other.x1 - self.x1 * other.x2,
        )
    }

    /// Ordinary Euclidean length of the coordinate triple. Used for
    /// residuals and tolerances, never for geometry.
    pub fn euclidean_norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn classify(&self, eps: f64) -> CausalCharacter {
        classify(self, eps)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        Vec3::new(self * v.x1, self * v.x2, self * v.x3)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, k: f64) -> Vec3 {
        k * self
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

pub fn lorentz_dot(x: &Vec3, y: &Vec3) -> f64 {
    x.dot(y)
}

pub fn lorentz_norm(x: &Vec3) -> f64 {
    x.norm()
}

pub fn lorentz_cross(x: &Vec3, y: &Vec3) -> Vec3 {
    x.cross(y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalTag {
    Timelike,
    Spacelike,
    Lightlike,
}

/// Time orientation of a timelike or lightlike vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TimeSign {
    Positive,
    Negative,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CausalCharacter {
    pub tag: CausalTag,
    pub sign: TimeSign,
}

impl CausalCharacter {
    pub fn is_timelike(&self) -> bool {
        self.tag == CausalTag::Timelike
    }

    pub fn is_spacelike(&self) -> bool {
        self.tag == CausalTag::Spacelike
    }

    pub fn is_lightlike(&self) -> bool {
        self.tag == CausalTag::Lightlike
    }
}

impl fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tag, self.sign) {
            (CausalTag::Spacelike, _) => write!(f, "spacelike"),
            (tag, TimeSign::Negative) => write!(f, "{} (negative)", tag_name(tag)),
            (tag, _) => write!(f, "{} (positive)", tag_name(tag)),
        }
    }
}

fn tag_name(tag: CausalTag) -> &'static str {
    match tag {
        CausalTag::Timelike => "timelike",
        CausalTag::Spacelike => "spacelike",
        CausalTag::Lightlike => "lightlike",
    }
}

/// Causal character of `x`. `|g(x, x)| <= eps` counts as lightlike, except
/// for the zero vector, which is spacelike by convention.
pub fn classify(x: &Vec3, eps: f64) -> CausalCharacter {
    let q = x.dot(x);
    let tag = if *x == Vec3::ZERO {
        CausalTag::Spacelike
    } else if q.abs() <= eps {
        CausalTag::Lightlike
    } else if q < 0.0 {
        CausalTag::Timelike
    } else {
        CausalTag::Spacelike
    };
    let sign = match tag {
        CausalTag::Spacelike => TimeSign::NotApplicable,
        _ if x.x1 < 0.0 => TimeSign::Negative,
        _ => TimeSign::Positive,
    };
    CausalCharacter { tag, sign }
}

/// Returns `x / ||x||`.
pub fn normalize(x: &Vec3) -> Result<Vec3, LorentzError> {
    normalize_eps(x, EPS_CAUSAL)
}

pub fn normalize_eps(x: &Vec3, eps: f64) -> Result<Vec3, LorentzError> {
    let n = x.norm();
    if n <= eps {
        return Err(LorentzError::NearNull(n));
    }
    Ok((1.0 / n) * *x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AngleKind {
    /// Two timelike vectors in the same time cone; `|g| = |X||Y| cosh phi`.
    TimelikeTimelike,
    /// Two spacelike vectors spanning a spacelike plane; `g = |X||Y| cos phi`.
    SpacelikeSpacelikePlane,
    /// Two spacelike vectors spanning a timelike plane; `|g| = |X||Y| cosh phi`.
    SpacelikeTimelikePlane,
    /// One spacelike and one timelike vector; `|g| = |X||Y| sinh phi`.
    SpacelikeTimelike,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleResult {
    pub kind: AngleKind,
    pub value: f64,
}

impl AngleResult {
    /// Rebuilds the inner product from the angle and the two norms.
    ///
    /// For the two hyperbolic kinds where only `|g|` is determined this
    /// returns the magnitude. For timelike pairs in one cone `g` is always
    /// negative, so the sign is restored.
    pub fn inner_product(&self, norm_x: f64, norm_y: f64) -> f64 {
        let scale = norm_x * norm_y;
        match self.kind {
            AngleKind::TimelikeTimelike => -scale * self.value.cosh(),
            AngleKind::SpacelikeSpacelikePlane => scale * self.value.cos(),
            AngleKind::SpacelikeTimelikePlane => scale * self.value.cosh(),
            AngleKind::SpacelikeTimelike => scale * self.value.sinh(),
        }
    }
}

pub fn lorentz_angle(x: &Vec3, y: &Vec3) -> Result<AngleResult, LorentzError> {
    lorentz_angle_eps(x, y, EPS_CAUSAL)
}

pub fn lorentz_angle_eps(x: &Vec3, y: &Vec3, eps: f64) -> Result<AngleResult, LorentzError> {
    let cx = classify(x, eps);
    let cy = classify(y, eps);
    if cx.is_lightlike() || cy.is_lightlike() || *x == Vec3::ZERO || *y == Vec3::ZERO {
        return Err(LorentzError::NullInput);
    }
    let g = x.dot(y);
    let scale = x.norm() * y.norm();
    let ratio = g.abs() / scale;

    match (cx.tag, cy.tag) {
        (CausalTag::Timelike, CausalTag::Timelike) => {
            if cx.sign != cy.sign {
                return Err(LorentzError::OppositeOrientation);
            }
            Ok(AngleResult {
                kind: AngleKind::TimelikeTimelike,
                value: ratio.max(1.0).acosh(),
            })
        }
        (CausalTag::Spacelike, CausalTag::Spacelike) => {
            // Gram determinant of g restricted to span{x, y}.
            let gram = x.dot(x) * y.dot(y) - g * g;
            let gram_scale = x.dot(x) * y.dot(y);
            if gram.abs() <= eps * gram_scale.max(1.0) {
                Err(LorentzError::DegeneratePlane)
            } else if gram > 0.0 {
                Ok(AngleResult {
                    kind: AngleKind::SpacelikeSpacelikePlane,
                    value: (g / scale).clamp(-1.0, 1.0).acos(),
                })
            } else {
                Ok(AngleResult {
                    kind: AngleKind::SpacelikeTimelikePlane,
                    value: ratio.max(1.0).acosh(),
                })
            }
        }
        _ => Ok(AngleResult {
            kind: AngleKind::SpacelikeTimelike,
            value: ratio.asinh(),
        }),
    }
}
