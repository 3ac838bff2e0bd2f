//! Surface families `P(s, t) = a~(s) + u T~ + v N~ + w B~` through the
//! natural lift, and the conditions under which the lift is an
//! isoparametric asymptotic curve on them.
//!
//! The marching-scale functions are differentiated symbolically. Frame
//! derivatives, needed for `dP/ds` away from the lift, come from
//! Richardson differences of the lift frame. Along `t = t0` all three
//! marching functions vanish, so the normal there is exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{differentiate, parse, simplify, substitute, Bindings, Expr, Var};
use crate::frenet::{frenet_apparatus_timelike, CurveSpec, LiftRelation};
use crate::lift::{lift_frame_direct, LiftFrame, Orientation};
use crate::lorentz::{Vec3, EPS_CAUSAL};
use crate::numdiff::{richardson, DEFAULT_STEP};

/// Tolerance for conditions of the form `f(s, t0) = 0`.
pub const TOL_ZERO: f64 = 1e-9;
/// Smallest `|dv/dt(s, t0)|` accepted as nonzero.
pub const TOL_NONZERO: f64 = 1e-6;
/// Bounds used when checking that a numeric normal is parallel to `B~`.
pub const TOL_PARALLEL: f64 = 1e-6;
pub const MIN_BINORMAL_COMPONENT: f64 = 1e-3;
/// Largest distance between `P(s, t0)` and `a~(s)` for the lift to count
/// as lying on the surface.
pub const TOL_ON_CURVE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
struct Partials {
    ds: Expr,
    dt: Expr,
}

impl Partials {
    fn of(e: &Expr) -> Self {
        Self {
            ds: differentiate(e, Var::S),
            dt: differentiate(e, Var::T),
        }
    }
}

/// The three marching-scale functions with the isoparametric value `t0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarchingScale {
    pub u: Expr,
    pub v: Expr,
    pub w: Expr,
    pub t0: f64,
    pub t_min: f64,
    pub t_max: f64,
    partials: [Partials; 3],
}

impl MarchingScale {
    pub fn new(u: Expr, v: Expr, w: Expr, t0: f64, t_min: f64, t_max: f64) -> Result<Self> {
        if !(t_min.is_finite() && t_max.is_finite() && t0.is_finite())
            || !(t_min <= t0 && t0 <= t_max)
        {
            return Err(Error::InvalidRange(t_min, t_max));
        }
        let partials = [Partials::of(&u), Partials::of(&v), Partials::of(&w)];
        Ok(Self {
            u,
            v,
            w,
            t0,
            t_min,
            t_max,
            partials,
        })
    }

    pub fn parse(texts: [&str; 3], t0: f64, t_min: f64, t_max: f64) -> Result<Self> {
        let [u, v, w] = texts;
        Self::new(parse(u)?, parse(v)?, parse(w)?, t0, t_min, t_max)
    }

    pub fn with_t_range(self, t_min: f64, t_max: f64) -> Result<Self> {
        Self::new(self.u, self.v, self.w, self.t0, t_min, t_max)
    }

    fn exprs(&self) -> [&Expr; 3] {
        [&self.u, &self.v, &self.w]
    }

    /// `(u, v, w)` at `(s, t)`.
    pub fn values(&self, s: f64, t: f64) -> Result<[f64; 3]> {
        let b = Bindings::st(s, t);
        Ok([self.u.eval(&b)?, self.v.eval(&b)?, self.w.eval(&b)?])
    }

    pub fn d_ds(&self, s: f64, t: f64) -> Result<[f64; 3]> {
        let b = Bindings::st(s, t);
        let [pu, pv, pw] = &self.partials;
        Ok([pu.ds.eval(&b)?, pv.ds.eval(&b)?, pw.ds.eval(&b)?])
    }

    pub fn d_dt(&self, s: f64, t: f64) -> Result<[f64; 3]> {
        let b = Bindings::st(s, t);
        let [pu, pv, pw] = &self.partials;
        Ok([pu.dt.eval(&b)?, pv.dt.eval(&b)?, pw.dt.eval(&b)?])
    }

    pub fn dv_dt(&self) -> &Expr {
        &self.partials[1].dt
    }

    pub fn dw_dt(&self) -> &Expr {
        &self.partials[2].dt
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuledVariant {
    /// `u = v = t - t0`, `w = 0`: rulings along `T~ + N~`.
    TangentPlusNormal,
    /// `u = w = 0`, `v = t - t0`: rulings along `N~`.
    Normal,
}

/// Marching scales that make the surface ruled with the lift asymptotic.
/// The `t` range is degenerate (`[t0, t0]`); widen it with
/// [`MarchingScale::with_t_range`].
pub fn ruled_surface(t0: f64, variant: RuledVariant) -> MarchingScale {
    let ruling = Expr::binary(
        crate::expr::BinaryOp::Sub,
        Expr::Variable(Var::T),
        Expr::Constant(t0),
    );
    let zero = Expr::Constant(0.0);
    let (u, v, w) = match variant {
        RuledVariant::TangentPlusNormal => (ruling.clone(), ruling, zero),
        RuledVariant::Normal => (zero.clone(), ruling, zero),
    };
    MarchingScale::new(u, v, w, t0, t0, t0).expect("t0 is finite")
}

/// `P(s, t) = a~(s) + u T~(s) + v N~(s) + w B~(s)` over a base timelike
/// curve `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceFamily {
    pub curve: CurveSpec,
    pub marching: MarchingScale,
    pub orientation: Orientation,
}

impl SurfaceFamily {
    pub fn new(curve: CurveSpec, marching: MarchingScale, orientation: Orientation) -> Self {
        Self {
            curve,
            marching,
            orientation,
        }
    }

    pub fn lift_point(&self, s: f64) -> Result<Vec3> {
        self.curve.eval_derivative(1, s)
    }

    pub fn lift_frame(&self, s: f64) -> Result<LiftFrame> {
        Ok(lift_frame_direct(&self.curve, s)?.oriented(self.orientation))
    }

    pub fn eval(&self, s: f64, t: f64) -> Result<Vec3> {
        let [u, v, w] = self.marching.values(s, t)?;
        let base = self.lift_point(s)?;
        if u == 0.0 && v == 0.0 && w == 0.0 {
            return Ok(base);
        }
        let f = self.lift_frame(s)?;
        Ok(base + u * f.tangent + v * f.normal + w * f.binormal)
    }

    /// `(dP/ds, dP/dt)` at `(s, t)`.
    pub fn partials(&self, s: f64, t: f64) -> Result<(Vec3, Vec3)> {
        let m = &self.marching;
        let values = m.values(s, t)?;
        let ds = m.d_ds(s, t)?;
        let dt = m.d_dt(s, t)?;
        let frame = self.lift_frame(s)?.vectors();

        // a~' = a''
        let mut p_s = self.curve.eval_derivative(2, s)?;
        let mut p_t = Vec3::ZERO;
        for k in 0..3 {
            p_s = p_s + ds[k] * frame[k];
            p_t = p_t + dt[k] * frame[k];
        }
        if values.iter().any(|&x| x != 0.0) {
            let frame_at = |x: f64| -> Result<[Vec3; 3]> { Ok(self.lift_frame(x)?.vectors()) };
            for (k, &value) in values.iter().enumerate() {
                if value == 0.0 {
                    continue;
                }
                let dframe = richardson(|x| Ok::<_, Error>(frame_at(x)?[k]), s, DEFAULT_STEP)?;
                p_s = p_s + value * dframe;
            }
        }
        Ok((p_s, p_t))
    }

    /// `dP/ds x dP/dt` with the Lorentzian cross product, unnormalized.
    pub fn normal(&self, s: f64, t: f64) -> Result<Vec3> {
        let (p_s, p_t) = self.partials(s, t)?;
        let n = p_s.cross(&p_t);
        if n.max_abs() <= EPS_CAUSAL {
            return Err(Error::DegenerateNormal { s, t });
        }
        Ok(n)
    }
}

pub fn eval_surface(surf: &SurfaceFamily, s: f64, t: f64) -> Result<Vec3> {
    surf.eval(s, t)
}

pub fn surface_normal(surf: &SurfaceFamily, s: f64, t: f64) -> Result<Vec3> {
    surf.normal(s, t)
}

/// Which closed form describes the normal along the lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalForm {
    /// `k [w_t N~ + v_t B~]`, timelike lift binormal.
    TimelikeBinormal,
    /// `-k [w_t N~ + v_t B~]`, spacelike lift binormal and spacelike `W`.
    SpacelikeBinormalSpacelikeW,
    /// `k [w_t N~ - v_t B~]`, spacelike lift binormal and timelike `W`.
    SpacelikeBinormalTimelikeW,
}

impl NormalForm {
    pub fn for_relation(relation: LiftRelation) -> Self {
        if relation.binormal_is_timelike() {
            NormalForm::TimelikeBinormal
        } else if relation.darboux_is_timelike() {
            NormalForm::SpacelikeBinormalTimelikeW
        } else {
            NormalForm::SpacelikeBinormalSpacelikeW
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            NormalForm::TimelikeBinormal => "n = kappa [w_t N~ + v_t B~]",
            NormalForm::SpacelikeBinormalSpacelikeW => "n = -kappa [w_t N~ + v_t B~]",
            NormalForm::SpacelikeBinormalTimelikeW => "n = kappa [w_t N~ - v_t B~]",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticNormal {
    pub vector: Vec3,
    pub form: NormalForm,
    /// Set when the vector vanishes, i.e. `v_t = w_t = 0`.
    pub degenerate: bool,
}

/// Closed-form normal along `t = t0`, valid when the marching functions
/// vanish there.
pub fn analytic_normal_on_curve(surf: &SurfaceFamily, s: f64) -> Result<AnalyticNormal> {
    let app = frenet_apparatus_timelike(&surf.curve, s)?;
    let frame = surf.lift_frame(s)?;
    let [_, v_t, w_t] = surf.marching.d_dt(s, surf.marching.t0)?;
    let kappa = app.curvature;
    let form = NormalForm::for_relation(frame.case.relation);
    let vector = match form {
        NormalForm::TimelikeBinormal => kappa * (w_t * frame.normal + v_t * frame.binormal),
        NormalForm::SpacelikeBinormalSpacelikeW => {
            -kappa * (w_t * frame.normal + v_t * frame.binormal)
        }
        NormalForm::SpacelikeBinormalTimelikeW => {
            kappa * (w_t * frame.normal - v_t * frame.binormal)
        }
    };
    Ok(AnalyticNormal {
        vector,
        form,
        degenerate: vector.max_abs() <= EPS_CAUSAL,
    })
}

/// Largest `|u|, |v|, |w|` at `t0` over the grid.
pub fn check_isoparametric(msf: &MarchingScale, s_grid: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &s in s_grid {
        for x in msf.values(s, msf.t0)? {
            worst = worst.max(x.abs());
        }
    }
    Ok(worst)
}

/// How the numeric normal at `P(s, t0)` relates to the lift frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alignment {
    pub s: f64,
    /// Euclidean distance from `P(s, t0)` to `a~(s)`.
    pub gap: f64,
    pub g_tangent: f64,
    pub g_normal: f64,
    pub g_binormal: f64,
}

impl Alignment {
    pub fn on_curve(&self) -> bool {
        self.gap <= TOL_ON_CURVE
    }

    pub fn parallel(&self) -> bool {
        self.g_tangent.abs() <= TOL_PARALLEL
            && self.g_normal.abs() <= TOL_PARALLEL
            && self.g_binormal.abs() >= MIN_BINORMAL_COMPONENT
    }

    /// The lift passes through this point and the surface normal there is
    /// parallel to `B~`.
    pub fn asymptotic(&self) -> bool {
        self.on_curve() && self.parallel()
    }
}

/// Compares the numeric normal along `t = t0` with the lift frame at `s`.
/// A vanishing normal is reported with zero components.
pub fn alignment_at(surf: &SurfaceFamily, s: f64) -> Result<Alignment> {
    let t0 = surf.marching.t0;
    let gap = (surf.eval(s, t0)? - surf.lift_point(s)?).euclidean_norm();
    let (p_s, p_t) = surf.partials(s, t0)?;
    let n = p_s.cross(&p_t);
    let f = surf.lift_frame(s)?;
    Ok(Alignment {
        s,
        gap,
        g_tangent: n.dot(&f.tangent),
        g_normal: n.dot(&f.normal),
        g_binormal: n.dot(&f.binormal),
    })
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct NumericResiduals {
    pub iso: f64,
    #[serde(rename = "g_n_T")]
    pub g_n_tangent: f64,
    #[serde(rename = "g_n_N")]
    pub g_n_normal: f64,
    #[serde(rename = "min_abs_g_n_B")]
    pub min_abs_g_n_binormal: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TheoremReport {
    pub iso_ok: bool,
    pub dw_dt_zero_ok: bool,
    pub dv_dt_nonzero_ok: bool,
    pub failing_s_values: Vec<f64>,
    pub symbolic_notes: String,
    pub numeric_max_residuals: NumericResiduals,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.iso_ok && self.dw_dt_zero_ok && self.dv_dt_nonzero_ok
    }
}

fn at_t0(e: &Expr, t0: f64) -> Expr {
    simplify(&substitute(e, Var::T, &Expr::Constant(t0)))
}

fn describe_at_t0(name: &str, e: &Expr, t0: f64) -> String {
    let restricted = at_t0(e, t0);
    if restricted.as_constant() == Some(0.0) {
        format!("{name}(s,t0) = 0 identically")
    } else {
        format!("{name}(s,t0) = {restricted}")
    }
}

/// Checks, on `s_grid`, that the lift is an isoparametric asymptotic curve:
/// `u = v = w = w_t = 0` and `v_t != 0` at `t0`.
///
/// Derivatives are symbolic. Points where evaluation fails count as
/// failures. The numeric normal residuals are informational.
pub fn check_asymptotic(surf: &SurfaceFamily, s_grid: &[f64]) -> TheoremReport {
    let m = &surf.marching;
    let t0 = m.t0;
    let mut notes: Vec<String> = Vec::new();
    for (name, e) in ["u", "v", "w"].iter().zip(m.exprs()) {
        notes.push(describe_at_t0(name, e, t0));
    }
    notes.push(describe_at_t0("dw/dt", m.dw_dt(), t0));
    notes.push(describe_at_t0("dv/dt", m.dv_dt(), t0));

    let mut report = TheoremReport {
        iso_ok: true,
        dw_dt_zero_ok: true,
        dv_dt_nonzero_ok: true,
        ..Default::default()
    };
    let mut residuals = NumericResiduals {
        min_abs_g_n_binormal: f64::MAX,
        ..Default::default()
    };
    let mut form = None;
    let mut eval_failures = 0usize;

    for &s in s_grid {
        let point = (|| -> Result<(f64, f64, f64)> {
            let iso = m.values(s, t0)?.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            let [_, v_t, w_t] = m.d_dt(s, t0)?;
            Ok((iso, v_t, w_t))
        })();
        let (iso, v_t, w_t) = match point {
            Ok(p) => p,
            Err(_) => {
                eval_failures += 1;
                report.iso_ok = false;
                report.failing_s_values.push(s);
                continue;
            }
        };
        residuals.iso = residuals.iso.max(iso);
        let mut failing = false;
        if iso > TOL_ZERO {
            report.iso_ok = false;
            failing = true;
        }
        if w_t.abs() > TOL_ZERO {
            report.dw_dt_zero_ok = false;
            failing = true;
        }
        if v_t.abs() < TOL_NONZERO {
            report.dv_dt_nonzero_ok = false;
            failing = true;
        }
        if failing {
            report.failing_s_values.push(s);
        }

        match alignment_at(surf, s) {
            Ok(a) => {
                residuals.g_n_tangent = residuals.g_n_tangent.max(a.g_tangent.abs());
                residuals.g_n_normal = residuals.g_n_normal.max(a.g_normal.abs());
                residuals.min_abs_g_n_binormal =
                    residuals.min_abs_g_n_binormal.min(a.g_binormal.abs());
            }
            Err(e) => notes.push(format!("normal unavailable at s = {s}: {e}")),
        }
        if form.is_none() {
            if let Ok(f) = surf.lift_frame(s) {
                form = Some(NormalForm::for_relation(f.case.relation));
            }
        }
    }
    if residuals.min_abs_g_n_binormal == f64::MAX {
        residuals.min_abs_g_n_binormal = 0.0;
    }
    if let Some(form) = form {
        notes.push(format!("normal along the lift: {}", form.describe()));
    }
    if eval_failures > 0 {
        notes.push(format!(
            "{eval_failures} grid point(s) could not be evaluated"
        ));
    }
    if !report.dv_dt_nonzero_ok {
        notes.push("dv/dt vanishes at some s; the normal degenerates there".into());
    }
    report.symbolic_notes = notes.join("; ");
    report.numeric_max_residuals = residuals;
    report
}
