use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use minkowski_lift::lift::Orientation;
use minkowski_lift::presets;
use minkowski_lift_cli::job::parse_range;
use minkowski_lift_cli::{
    build_validate, curve_info, JobSpec, Overrides, Status, EXIT_PRECONDITION,
};

/// Surface families through the natural lift of a timelike curve in
/// Minkowski 3-space.
#[derive(Parser)]
#[command(name = "mlift", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the curve preconditions and print its Frenet data.
    CurveInfo(JobArgs),
    /// Build the surface, validate the asymptotic conditions and write
    /// the mesh and report.
    Build(JobArgs),
    /// Reproduce one of the four reference surfaces.
    Example {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        #[command(flatten)]
        job: JobArgs,
    },
}

#[derive(Args)]
struct JobArgs {
    /// JSON job file; flags override its fields.
    #[arg(long)]
    job: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    curve_x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    curve_y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    curve_z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t0: Option<f64>,
    /// Parameter range as `a:b`.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    s_range: Option<[f64; 2]>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    t_range: Option<[f64; 2]>,
    #[arg(long)]
    ns: Option<usize>,
    #[arg(long)]
    nt: Option<usize>,
    /// `canonical` or `paper-signs`.
    #[arg(long)]
    orientation: Option<Orientation>,
    #[arg(long)]
    mesh_out: Option<PathBuf>,
    #[arg(long)]
    report_out: Option<PathBuf>,
    /// Leave the timestamp out of the report.
    #[arg(long)]
    reproducible: bool,
}

impl JobArgs {
    fn into_job(self, base: Option<JobSpec>) -> Result<(JobSpec, bool)> {
        let mut job = match (&self.job, base) {
            (Some(path), _) => JobSpec::load(path)?,
            (None, Some(base)) => base,
            (None, None) => JobSpec::default(),
        };
        job.apply(Overrides {
            curve: [self.curve_x, self.curve_y, self.curve_z],
            s_range: self.s_range,
            marching: [self.u, self.v, self.w],
            t0: self.t0,
            t_range: self.t_range,
            ns: self.ns,
            nt: self.nt,
            orientation: self.orientation,
            mesh_out: self.mesh_out,
            report_out: self.report_out,
        })?;
        Ok((job, self.reproducible))
    }
}

fn run(cli: Cli) -> Result<Status> {
    let mut stdout = std::io::stdout().lock();
    let status = match cli.command {
        Command::CurveInfo(args) => {
            let (job, _) = args.into_job(None)?;
            curve_info(&job, &mut stdout)?
        }
        Command::Build(args) => {
            let (job, reproducible) = args.into_job(None)?;
            build_validate(&job, reproducible, &mut stdout)?
        }
        Command::Example { id, job } => {
            let ex = presets::example(id).ok_or_else(|| anyhow!("no example {id}"))?;
            let (job, reproducible) = job.into_job(Some(JobSpec::from_example(ex)))?;
            writeln!(stdout, "example {id}: {}", ex.name)?;
            build_validate(&job, reproducible, &mut stdout)?
        }
    };
    stdout.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_PRECONDITION)
        }
    }
}
