//! Command-line front end for the `lsfan` library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod job;
pub mod render;

pub use job::{Format, IposetSpec, JobSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lib(#[from] lsfan::Error),
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Parser)]
#[command(name = "lsfan", version, about = "Defining chain posets, LS-tableaux and LS-fans for Schubert varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the defining chain poset (JSON or DOT).
    Dcp(JobArgs),
    /// Build the poset of pairs (theta, I) that the DCP maps onto.
    UnderlineW(JobArgs),
    /// Decide tau-standardness and evaluate the criteria for tau = w0.
    Check(JobArgs),
    /// List standard LS-tableaux and their fan vectors per degree.
    Enumerate(JobArgs),
    /// Compare tableaux and fan points with Demazure characters.
    Verify(JobArgs),
    /// Compare chain multidegrees with the fitted Hilbert polynomial.
    Conjecture(JobArgs),
    /// Run the command named in the job file.
    Run(JobArgs),
}

#[derive(Debug, Default, Args)]
struct JobArgs {
    /// JSON job file; other flags override its fields.
    #[arg(long)]
    job: Option<PathBuf>,
    /// Dynkin type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    dynkin_type: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// A dominant weight in fundamental-weight coordinates, e.g. 0,1. Repeat in order.
    #[arg(long = "lambda")]
    lambdas: Vec<String>,
    /// w0, e, a 1-based reduced word such as 2,1, or oneline:3412 in type A.
    #[arg(long)]
    tau: Option<String>,
    /// chain, powerset, chain:3,1,2 or explicit sets such as "1;2;1,2".
    #[arg(long)]
    iposet: Option<String>,
    /// A degree, e.g. 1,2. Repeatable.
    #[arg(long = "degree")]
    degrees: Vec<String>,
    /// All degrees componentwise up to this bound.
    #[arg(long = "box")]
    degree_box: Option<String>,
    /// Largest total degree for the Hilbert polynomial fit.
    #[arg(long)]
    grid: Option<usize>,
    /// Include the multidegree comparison in `verify`.
    #[arg(long)]
    conjecture: bool,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl JobArgs {
    fn into_job(self) -> Result<JobSpec, CliError> {
        let mut job = match &self.job {
            Some(p) => {
                let text = fs::read_to_string(p).map_err(|source| CliError::Io { path: p.clone(), source })?;
                serde_json::from_str(&text)?
            }
            None => JobSpec {
                tau: "w0".into(),
                ..Default::default()
            },
        };
        if let Some(t) = self.dynkin_type {
            job.dynkin_type = t;
        }
        if let Some(r) = self.rank {
            job.rank = r;
        }
        if !self.lambdas.is_empty() {
            job.lambdas = self.lambdas.iter().map(|s| job::parse_list(s)).collect::<Result<_, _>>()?;
        }
        if let Some(t) = self.tau {
            job.tau = t;
        }
        if let Some(i) = self.iposet {
            job.iposet = IposetSpec::parse(&i)?;
        }
        if !self.degrees.is_empty() {
            job.degrees = self.degrees.iter().map(|s| job::parse_list(s)).collect::<Result<_, _>>()?;
        }
        if let Some(b) = self.degree_box {
            job.degree_box = Some(job::parse_list(&b)?);
        }
        if self.grid.is_some() {
            job.grid = self.grid;
        }
        job.conjecture |= self.conjecture;
        if self.out.is_some() {
            job.output = self.out;
        }
        if let Some(f) = self.format {
            job.format = f;
        }
        if job.dynkin_type.is_empty() || job.rank == 0 || job.lambdas.is_empty() {
            return Err(CliError::Input("a job needs a type, a rank and at least one weight".into()));
        }
        Ok(job)
    }
}

/// Dispatch on a command name as used in job files.
pub fn execute(command: &str, job: &JobSpec) -> Result<commands::Outcome, CliError> {
    match command {
        "dcp" => commands::cmd_dcp(job),
        "underline-w" => commands::cmd_underline_w(job),
        "check" => commands::cmd_check(job),
        "enumerate" => commands::cmd_enumerate(job),
        "verify" => commands::cmd_verify(job),
        "conjecture" => commands::cmd_conjecture(job),
        other => Err(CliError::Input(format!("unknown command {other:?}"))),
    }
}

/// Write via a temporary file in the same directory, then rename.
fn write_atomic(path: &Path, body: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, body).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn run_job(args: JobArgs, name: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let job = args.into_job()?;
    let command = match name {
        Some(n) => n.to_string(),
        None => job
            .command
            .clone()
            .ok_or_else(|| CliError::Input("the job file names no command".into()))?,
    };
    let outcome = execute(&command, &job)?;
    match &job.output {
        Some(p) => write_atomic(p, &outcome.body)?,
        None => {
            let _ = out.write_all(outcome.body.as_bytes());
        }
    }
    for n in &outcome.notes {
        let _ = writeln!(err, "{n}");
    }
    Ok(if outcome.passed { EXIT_OK } else { EXIT_VERIFY })
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (args, name) = match cli.command {
        Command::Dcp(a) => (a, Some("dcp")),
        Command::UnderlineW(a) => (a, Some("underline-w")),
        Command::Check(a) => (a, Some("check")),
        Command::Enumerate(a) => (a, Some("enumerate")),
        Command::Verify(a) => (a, Some("verify")),
        Command::Conjecture(a) => (a, Some("conjecture")),
        Command::Run(a) => (a, None),
    };
    match run_job(args, name, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
