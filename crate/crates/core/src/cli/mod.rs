//! Command-line front end. Human text goes to stdout, the JSON report to
//! `--json PATH`. Exit codes: 0 ok, 1 parse, 2 hypothesis, 3 oracle
//! mismatch, 4 inconclusive truncation.

mod commands;
mod job;

pub use commands::{
    cmd_dual_limit, cmd_equiv_check, cmd_limit, cmd_ramification, Overrides, Report, Settings,
};
pub use job::{Job, JobSpec, System};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::limits::Engine;

#[derive(Parser, Debug)]
#[command(name = "ramlimit", version, about = "Ramification cycles of plane curves and their limits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ramification cycle of a linear system on one curve.
    Ramification(Common),
    /// Limit of the ramification cycles of a family.
    Limit(Common),
    /// Limit of the dual curves, sliced by the dual line of the pencil point.
    DualLimit(Common),
    /// Projective equivalence of two derivations modulo a curve.
    EquivCheck(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Job file (JSON).
    job: PathBuf,
    #[arg(long, value_parser = parse_engine)]
    engine: Option<Engine>,
    /// Truncation order for the type search and series checks.
    #[arg(long)]
    order: Option<usize>,
    /// Oracle trials for --verify.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Compare the engine output with the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn parse_engine(s: &str) -> std::result::Result<Engine, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn execute(command: &Command) -> Result<(Report, Option<PathBuf>)> {
    let (args, f): (&Common, fn(&Job, &Settings) -> Result<Report>) = match command {
        Command::Ramification(a) => (a, cmd_ramification),
        Command::Limit(a) => (a, cmd_limit),
        Command::DualLimit(a) => (a, cmd_dual_limit),
        Command::EquivCheck(a) => (a, cmd_equiv_check),
    };
    let text = std::fs::read_to_string(&args.job)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", args.job.display())))?;
    let job = JobSpec::from_json(&text)?.resolve()?;
    let overrides = Overrides {
        engine: args.engine,
        order: args.order,
        trials: args.trials,
        seed: args.seed,
        verify: args.verify,
    };
    let settings = Settings::new(&job, &overrides);
    Ok((f(&job, &settings)?, args.json.clone()))
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = write!(if code == 0 { out as &mut dyn Write } else { err as &mut dyn Write }, "{e}");
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, json_path)) => {
            let _ = out.write_all(report.text.as_bytes());
            if let Some(p) = json_path {
                let body = serde_json::to_string_pretty(&report.json).expect("report serializes") + "\n";
                if let Err(e) = std::fs::write(&p, body) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
                    return 1;
                }
            }
            report.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::TruncationExhausted { .. }) {
                let _ = writeln!(err, "hint: raise --order");
            }
            e.exit_code()
        }
    }
}
