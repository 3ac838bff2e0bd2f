//! Grid sampling and export to Wavefront OBJ and JSON reports.
//!
//! Vertices are stored s-major: vertex `(i, j)` (the `i`-th `s` value and
//! `j`-th `t` value) has index `i * nt + j`. Each grid quad is split along
//! the diagonal from `(i, j)` to `(i + 1, j + 1)`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frenet::linspace;
use crate::lift::Orientation;
use crate::lorentz::Vec3;
use crate::surface::{SurfaceFamily, TheoremReport};

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Vec3>,
    pub ns: usize,
    pub nt: usize,
    pub faces: Vec<[usize; 3]>,
}

impl Mesh {
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.nt + j
    }
}

/// Triangles for an `ns x nt` grid, two per quad.
pub fn grid_faces(ns: usize, nt: usize) -> Vec<[usize; 3]> {
    let mut faces = Vec::with_capacity(2 * ns.saturating_sub(1) * nt.saturating_sub(1));
    for i in 0..ns.saturating_sub(1) {
        for j in 0..nt.saturating_sub(1) {
            let a = i * nt + j;
            let b = (i + 1) * nt + j;
            let c = (i + 1) * nt + j + 1;
            let d = i * nt + j + 1;
            faces.push([a, b, c]);
            faces.push([a, c, d]);
        }
    }
    faces
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridDomain {
    pub s_min: f64,
    pub s_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub ns: usize,
    pub nt: usize,
}

impl GridDomain {
    pub fn s_values(&self) -> Vec<f64> {
        linspace(self.s_min, self.s_max, self.ns)
    }

    pub fn t_values(&self) -> Vec<f64> {
        linspace(self.t_min, self.t_max, self.nt)
    }
}

pub fn sample_grid(surf: &SurfaceFamily, domain: &GridDomain) -> Result<Mesh> {
    let GridDomain { ns, nt, .. } = *domain;
    if ns < 2 || nt < 2 {
        return Err(Error::InvalidGrid { ns, nt });
    }
    let ts = domain.t_values();
    let mut vertices = Vec::with_capacity(ns * nt);
    for s in domain.s_values() {
        for &t in &ts {
            let p = surf.eval(s, t).map_err(|e| Error::SampleDomain {
                s,
                t,
                source: Box::new(e),
            })?;
            vertices.push(p);
        }
    }
    Ok(Mesh {
        vertices,
        ns,
        nt,
        faces: grid_faces(ns, nt),
    })
}

/// Fixed nine-decimal formatting; negative zero prints as zero.
fn coord(x: f64) -> String {
    let text = format!("{x:.9}");
    match text.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => text,
    }
}

/// Writes `v x y z` lines followed by 1-based `f i j k` lines. Returns the
/// number of bytes written.
pub fn export_obj<W: Write>(mesh: &Mesh, mut sink: W) -> std::io::Result<usize> {
    let mut out = String::with_capacity(mesh.vertices.len() * 40 + mesh.faces.len() * 24);
    for v in &mesh.vertices {
        out.push_str(&format!(
            "v {} {} {}\n",
            coord(v.x1),
            coord(v.x2),
            coord(v.x3)
        ));
    }
    for f in &mesh.faces {
        out.push_str(&format!("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1));
    }
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(out.len())
}

/// Everything `build` and `example` record about a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub curve_id: String,
    pub tool: String,
    pub tool_version: String,
    pub orientation: Orientation,
    pub grid: GridDomain,
    pub t0: f64,
    pub passed: bool,
    pub theorem: TheoremReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Seconds since the Unix epoch; omitted for reproducible runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_unix_time: Option<u64>,
}

impl ValidationReport {
    pub fn new(
        curve_id: impl Into<String>,
        orientation: Orientation,
        grid: GridDomain,
        t0: f64,
        theorem: TheoremReport,
    ) -> Self {
        Self {
            curve_id: curve_id.into(),
            tool: env!("CARGO_PKG_NAME").to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            orientation,
            grid,
            t0,
            passed: theorem.passed(),
            theorem,
            notes: Vec::new(),
            generated_unix_time: None,
        }
    }
}

/// Pretty-printed JSON with keys in declaration order, newline-terminated.
pub fn export_report<W: Write>(report: &ValidationReport, mut sink: W) -> std::io::Result<usize> {
    let mut bytes = serde_json::to_vec_pretty(report).map_err(std::io::Error::other)?;
    bytes.push(b'\n');
    sink.write_all(&bytes)?;
    sink.flush()?;
    Ok(bytes.len())
}

pub fn read_report(json: &str) -> serde_json::Result<ValidationReport> {
    serde_json::from_str(json)
}
