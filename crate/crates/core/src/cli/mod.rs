//! The `gbd` command-line front end.
//!
//! Exit codes: `0` yes / success, `1` no, `2` error. With `--json` every
//! successful run prints a [`RunReport`] instead of the text summary.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::detect::DEFAULT_CAP;
use crate::error::Error;

pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(
    name = "gbd",
    version,
    about = "Gröbner basis detection with exact arithmetic"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on enumerated candidates.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,

    /// Seed for randomly generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the primary output to this file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Gröbner basis of a zero-dimensional ideal, pure-power subset search.
    ZeroDim,
    /// Pairwise coprime leading terms.
    Sgbd,
    /// Gröbner basis, exhaustive over leading-term selections.
    Brute,
    /// Zero-dimensional Gröbner basis, exhaustive over leading-term selections.
    BruteZeroDim,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::ZeroDim => "zero-dim",
            Mode::Sgbd => "sgbd",
            Mode::Brute => "brute",
            Mode::BruteZeroDim => "brute-zero-dim",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a term order making the system a Gröbner basis.
    Detect {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "zero-dim")]
        mode: Mode,
    },
    /// Check the system under a given weight vector.
    Verify {
        input: PathBuf,
        /// Comma-separated positive rationals, e.g. `2,1` or `1/2,3`.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Generate reduction instances.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Adjoin every monomial of degree 2m+1 to a homogeneous degree-m system.
    Elevate {
        input: PathBuf,
        /// Common degree m; inferred from the first polynomial when omitted.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Solve a set-packing instance by exhaustion.
    PackSolve { input: PathBuf },
    /// Find a weight vector realizing chosen leading terms.
    OrderSolve {
        input: PathBuf,
        /// One monomial per polynomial, separated by `;`.
        #[arg(long)]
        targets: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Encode set packing as a homogeneous structural-detection instance.
    SetPacking {
        /// Instance file; a random instance is drawn from `--seed` when omitted.
        input: Option<PathBuf>,
        /// Degree m of the encoding; defaults to the size cap plus one.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 4)]
        universe: usize,
        #[arg(long, default_value_t = 4)]
        sets: usize,
        #[arg(long, default_value_t = 2)]
        goal: usize,
        #[arg(long, default_value_t = 2)]
        size_cap: usize,
    },
}

/// What a finished invocation printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Runs one invocation. `args` excludes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once(OsString::from("gbd")).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: 0,
                        stdout: rendered,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let echo: Vec<String> = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();

    let start = Instant::now();
    let result = commands::execute(&cli);
    let elapsed = start.elapsed();

    let done = match result {
        Ok(done) => done,
        Err(e) => {
            return Outcome {
                code: EXIT_ERROR,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let primary = if cli.json {
        let report = RunReport::new(echo, &done.input, elapsed, done.json);
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        done.text
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &primary) {
            Ok(()) => Outcome {
                code: done.code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_ERROR,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code: done.code,
            stdout: primary,
            stderr: String::new(),
        },
    }
}

/// Output of a successful command before formatting.
struct Done {
    code: i32,
    text: String,
    json: serde_json::Value,
    /// Bytes the digest is taken over.
    input: Vec<u8>,
}

fn read_input(path: &PathBuf) -> Result<(String, Vec<u8>), Error> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::InvalidArgument(format!("{} is not UTF-8", path.display())))?;
    Ok((text, bytes))
}
