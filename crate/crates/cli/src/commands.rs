use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use minkowski_lift::frenet::{
    darboux_vector, frenet_apparatus_timelike, lift_case, verify_unit_speed, CurveSpec,
    FrenetApparatus, LiftCase,
};
use minkowski_lift::lorentz::CausalTag;
use minkowski_lift::mesh::{export_obj, export_report, sample_grid, GridDomain, ValidationReport};
use minkowski_lift::surface::check_asymptotic;

use crate::job::JobSpec;

/// Successful outcome of a command. Errors map to exit code 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    TheoremFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::TheoremFailed => 1,
        }
    }
}

pub const EXIT_PRECONDITION: u8 = 2;

const SAMPLE_ROWS: usize = 5;

struct CurveCheck {
    unit_speed_residual: f64,
    points: usize,
    darboux: Vec<CausalTag>,
    cases: Vec<LiftCase>,
    samples: Vec<(FrenetApparatus, LiftCase)>,
}

/// Runs every precondition on `n` evenly spaced parameters.
fn check_curve(curve: &CurveSpec, n: usize) -> Result<CurveCheck> {
    let grid = curve.grid(n);
    let mut darboux = Vec::new();
    let mut cases = Vec::new();
    for &s in &grid {
        let app = frenet_apparatus_timelike(curve, s)?;
        let w = darboux_vector(&app)?;
        darboux.push(w.character.tag);
        cases.push(lift_case(app.curvature, app.torsion)?);
    }
    let stride = (grid.len() - 1) as f64 / (SAMPLE_ROWS - 1) as f64;
    let samples = (0..SAMPLE_ROWS)
        .map(|k| {
            let i = (k as f64 * stride).round() as usize;
            (
                frenet_apparatus_timelike(curve, grid[i]).expect("checked above"),
                cases[i],
            )
        })
        .collect();
    Ok(CurveCheck {
        unit_speed_residual: verify_unit_speed(curve, n)?,
        points: grid.len(),
        darboux,
        cases,
        samples,
    })
}

fn summarize<T: PartialEq + Copy>(items: &[T], name: impl Fn(T) -> String) -> String {
    let first = items[0];
    if items.iter().all(|&x| x == first) {
        name(first)
    } else {
        let mut seen: Vec<T> = Vec::new();
        for &x in items {
            if !seen.contains(&x) {
                seen.push(x);
            }
        }
        let names: Vec<String> = seen.into_iter().map(name).collect();
        format!("mixed: {}", names.join(" / "))
    }
}

fn tag_name(tag: CausalTag) -> String {
    match tag {
        CausalTag::Timelike => "timelike",
        CausalTag::Spacelike => "spacelike",
        CausalTag::Lightlike => "lightlike",
    }
    .to_string()
}

pub fn curve_info<W: Write>(job: &JobSpec, out: &mut W) -> Result<Status> {
    let curve = job.curve_spec()?;
    let check = check_curve(&curve, job.grid.ns.max(2))?;
    let (a, b) = curve.range();
    let [x, y, z] = curve.components();

    writeln!(out, "curve          ({x}, {y}, {z})")?;
    writeln!(out, "s range        [{a}, {b}], {} points", check.points)?;
    writeln!(
        out,
        "unit speed     max |g(a', a') + 1| = {:.3e}",
        check.unit_speed_residual
    )?;
    writeln!(out, "causal         timelike at every point")?;
    writeln!(
        out,
        "darboux W      {}",
        summarize(&check.darboux, tag_name)
    )?;
    let relations: Vec<_> = check.cases.iter().map(|c| c.relation).collect();
    writeln!(
        out,
        "lift case      {}",
        summarize(&relations, |r| r.label().to_string())
    )?;
    writeln!(out)?;
    writeln!(
        out,
        "{:>10} {:>14} {:>14} {:>14} {:>14}",
        "s", "kappa", "tau", "g(W,W)", "theta"
    )?;
    for (app, case) in &check.samples {
        let (k, t) = (app.curvature, app.torsion);
        writeln!(
            out,
            "{:>10.4} {:>14.9} {:>14.9} {:>14.9} {:>14.9}",
            clean(app.s),
            clean(k),
            clean(t),
            clean(k * k - t * t),
            clean(case.theta)
        )?;
    }
    Ok(Status::Pass)
}

pub fn build_validate<W: Write>(job: &JobSpec, reproducible: bool, out: &mut W) -> Result<Status> {
    let surf = job.surface()?;
    let check = check_curve(&surf.curve, job.grid.ns.max(2))?;
    let (s_min, s_max) = surf.curve.range();
    let domain = GridDomain {
        s_min,
        s_max,
        t_min: surf.marching.t_min,
        t_max: surf.marching.t_max,
        ns: job.grid.ns,
        nt: job.grid.nt,
    };
    let mesh = sample_grid(&surf, &domain)?;
    let theorem = check_asymptotic(&surf, &domain.s_values());

    let mut report = ValidationReport::new(
        job.id.clone(),
        job.orientation,
        domain,
        surf.marching.t0,
        theorem,
    );
    report.notes = job.notes.clone();
    if !reproducible {
        report.generated_unix_time = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }

    let mesh_path = job.mesh_path();
    let file = File::create(&mesh_path)
        .with_context(|| format!("cannot create {}", mesh_path.display()))?;
    export_obj(&mesh, BufWriter::new(file))
        .with_context(|| format!("cannot write {}", mesh_path.display()))?;
    let report_path = job.report_path();
    let file = File::create(&report_path)
        .with_context(|| format!("cannot create {}", report_path.display()))?;
    export_report(&report, BufWriter::new(file))
        .with_context(|| format!("cannot write {}", report_path.display()))?;

    let status = if report.passed {
        Status::Pass
    } else {
        Status::TheoremFailed
    };
    writeln!(
        out,
        "mesh      {} ({} vertices, {} triangles)",
        mesh_path.display(),
        mesh.vertices.len(),
        mesh.faces.len()
    )?;
    writeln!(out, "report    {}", report_path.display())?;
    writeln!(out, "unit speed residual {:.3e}", check.unit_speed_residual)?;
    let t = &report.theorem;
    writeln!(
        out,
        "iso {} | dw/dt = 0 {} | dv/dt != 0 {}",
        ok(t.iso_ok),
        ok(t.dw_dt_zero_ok),
        ok(t.dv_dt_nonzero_ok)
    )?;
    if !t.failing_s_values.is_empty() {
        writeln!(out, "failing at {} s value(s)", t.failing_s_values.len())?;
    }
    writeln!(
        out,
        "{}",
        if status == Status::Pass {
            "PASS"
        } else {
            "FAIL"
        }
    )?;
    Ok(status)
}

/// Drops rounding noise around zero so the table never shows `-0.0`.
fn clean(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAILED"
    }
}
