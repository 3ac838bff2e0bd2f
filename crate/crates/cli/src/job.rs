//! Job files: everything one run needs, as JSON with expression strings.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use minkowski_lift::frenet::CurveSpec;
use minkowski_lift::lift::Orientation;
use minkowski_lift::presets::Example;
use minkowski_lift::surface::{MarchingScale, SurfaceFamily};
use serde::{Deserialize, Serialize};

pub const DEFAULT_GRID: usize = 81;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveJob {
    pub x: String,
    pub y: String,
    pub z: String,
    pub s_range: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarchingJob {
    pub u: String,
    pub v: String,
    pub w: String,
    #[serde(default)]
    pub t0: f64,
    pub t_range: [f64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridJob {
    pub ns: usize,
    pub nt: usize,
}

impl Default for GridJob {
    fn default() -> Self {
        Self {
            ns: DEFAULT_GRID,
            nt: DEFAULT_GRID,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OutputJob {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mesh: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(default = "default_id")]
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveJob>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marching: Option<MarchingJob>,
    #[serde(default)]
    pub grid: GridJob,
    #[serde(default)]
    pub orientation: Orientation,
    #[serde(default)]
    pub outputs: OutputJob,
    /// Copied verbatim into the report.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn default_id() -> String {
    "surface".to_string()
}

impl Default for JobSpec {
    fn default() -> Self {
        Self {
            id: default_id(),
            curve: None,
            marching: None,
            grid: GridJob::default(),
            orientation: Orientation::default(),
            outputs: OutputJob::default(),
            notes: Vec::new(),
        }
    }
}

/// Inline values that replace fields of a job file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub curve: [Option<String>; 3],
    pub s_range: Option<[f64; 2]>,
    pub marching: [Option<String>; 3],
    pub t0: Option<f64>,
    pub t_range: Option<[f64; 2]>,
    pub ns: Option<usize>,
    pub nt: Option<usize>,
    pub orientation: Option<Orientation>,
    pub mesh_out: Option<PathBuf>,
    pub report_out: Option<PathBuf>,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("invalid job file")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read job file {}", path.display()))?;
        Self::from_json(&text)
    }

    pub fn from_example(ex: &Example) -> Self {
        let [x, y, z] = ex.curve.map(str::to_string);
        let [u, v, w] = ex.marching.map(str::to_string);
        Self {
            id: format!("example-{}", ex.id),
            curve: Some(CurveJob {
                x,
                y,
                z,
                s_range: [ex.s_range.0, ex.s_range.1],
            }),
            marching: Some(MarchingJob {
                u,
                v,
                w,
                t0: ex.t0,
                t_range: [ex.t_range.0, ex.t_range.1],
            }),
            grid: GridJob::default(),
            orientation: ex.orientation,
            outputs: OutputJob::default(),
            notes: ex.notes.iter().map(|n| n.to_string()).collect(),
        }
    }

    /// Applies overrides. A curve or marching block can be created from
    /// flags alone, but only when every field of it is given.
    pub fn apply(&mut self, o: Overrides) -> Result<()> {
        let [x, y, z] = o.curve;
        if x.is_some() || y.is_some() || z.is_some() || o.s_range.is_some() {
            let curve = match self.curve.take() {
                Some(mut c) => {
                    if let Some(x) = x {
                        c.x = x;
                    }
                    if let Some(y) = y {
                        c.y = y;
                    }
                    if let Some(z) = z {
                        c.z = z;
                    }
                    if let Some(r) = o.s_range {
                        c.s_range = r;
                    }
                    c
                }
                None => match (x, y, z, o.s_range) {
                    (Some(x), Some(y), Some(z), Some(s_range)) => CurveJob { x, y, z, s_range },
                    _ => bail!("a curve needs --curve-x, --curve-y, --curve-z and --s-range"),
                },
            };
            self.curve = Some(curve);
        }

        let [u, v, w] = o.marching;
        if u.is_some() || v.is_some() || w.is_some() || o.t0.is_some() || o.t_range.is_some() {
            let marching = match self.marching.take() {
                Some(mut m) => {
                    if let Some(u) = u {
                        m.u = u;
                    }
                    if let Some(v) = v {
                        m.v = v;
                    }
                    if let Some(w) = w {
                        m.w = w;
                    }
                    if let Some(t0) = o.t0 {
                        m.t0 = t0;
                    }
                    if let Some(r) = o.t_range {
                        m.t_range = r;
                    }
                    m
                }
                None => match (u, v, w, o.t_range) {
                    (Some(u), Some(v), Some(w), Some(t_range)) => MarchingJob {
                        u,
                        v,
                        w,
                        t0: o.t0.unwrap_or(0.0),
                        t_range,
                    },
                    _ => bail!("marching functions need --u, --v, --w and --t-range"),
                },
            };
            self.marching = Some(marching);
        }

        if let Some(ns) = o.ns {
            self.grid.ns = ns;
        }
        if let Some(nt) = o.nt {
            self.grid.nt = nt;
        }
        if let Some(orientation) = o.orientation {
            self.orientation = orientation;
        }
        if o.mesh_out.is_some() {
            self.outputs.mesh = o.mesh_out;
        }
        if o.report_out.is_some() {
            self.outputs.report = o.report_out;
        }
        Ok(())
    }

    pub fn curve_spec(&self) -> Result<CurveSpec> {
        let Some(c) = &self.curve else {
            bail!("no curve given");
        };
        let [a, b] = c.s_range;
        Ok(CurveSpec::parse([&c.x, &c.y, &c.z], a, b)?)
    }

    pub fn marching_scale(&self) -> Result<MarchingScale> {
        let Some(m) = &self.marching else {
            bail!("no marching functions given");
        };
        let [a, b] = m.t_range;
        Ok(MarchingScale::parse([&m.u, &m.v, &m.w], m.t0, a, b)?)
    }

    pub fn surface(&self) -> Result<SurfaceFamily> {
        Ok(SurfaceFamily::new(
            self.curve_spec()?,
            self.marching_scale()?,
            self.orientation,
        ))
    }

    pub fn mesh_path(&self) -> PathBuf {
        self.outputs
            .mesh
            .clone()
            .unwrap_or_else(|| PathBuf::from(format!("{}.obj", self.id)))
    }

    pub fn report_path(&self) -> PathBuf {
        self.outputs
            .report
            .clone()
            .unwrap_or_else(|| PathBuf::from(format!("{}.json", self.id)))
    }
}

/// Parses `a:b` into `[a, b]`.
pub fn parse_range(text: &str) -> std::result::Result<[f64; 2], String> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| format!("expected `a:b`, got `{text}`"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad number `{x}`: {e}"))
    };
    Ok([parse(a)?, parse(b)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-1:0.5"), Ok([-1.0, 0.5]));
        assert_eq!(parse_range("1.05:2"), Ok([1.05, 2.0]));
        assert!(parse_range("1").is_err());
        assert!(parse_range("a:1").is_err());
    }

    #[test]
    fn minimal_json() {
        let job = JobSpec::from_json(
            r#"{"curve": {"x": "sinh(s)", "y": "0", "z": "cosh(s)", "s_range": [-1, 1]}}"#,
        )
        .unwrap();
        assert_eq!(job.grid, GridJob { ns: 81, nt: 81 });
        assert_eq!(job.orientation, Orientation::Canonical);
        assert!(job.marching.is_none());
        assert_eq!(job.mesh_path(), PathBuf::from("surface.obj"));
    }

    #[test]
    fn overrides_patch_fields() {
        let mut job = JobSpec::from_example(minkowski_lift::presets::example(2).unwrap());
        job.apply(Overrides {
            s_range: Some([-1.0, 1.0]),
            orientation: Some(Orientation::PaperSigns),
            ns: Some(5),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(job.curve.as_ref().unwrap().s_range, [-1.0, 1.0]);
        assert_eq!(job.curve.as_ref().unwrap().x, "sinh(s)");
        assert_eq!(job.grid.ns, 5);
        assert_eq!(job.orientation, Orientation::PaperSigns);
    }

    #[test]
    fn partial_block_from_flags_is_rejected() {
        let mut job = JobSpec::default();
        let err = job
            .apply(Overrides {
                curve: [Some("s".into()), None, None],
                ..Default::default()
            })
            .unwrap_err();
        assert!(err.to_string().contains("--curve-y"));
    }

    #[test]
    fn json_round_trip() {
        let job = JobSpec::from_example(minkowski_lift::presets::example(4).unwrap());
        let text = serde_json::to_string(&job).unwrap();
        assert!(text.contains("\"paper-signs\""));
        assert_eq!(JobSpec::from_json(&text).unwrap(), job);
    }
}
