//! Command-line front end: reads a problem document, runs one command and
//! renders the result as text, JSON or TSV.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use crate::document::{read_document, LimitOverrides, ParsedProblem};
use crate::error::{Error, Result};
use crate::hilbert::{AchillesManaresi, HilbertKind};
use crate::multiplicity::{achilles_manaresi_sequence, buchsbaum_rim, hilbert_samuel, multiplicity_sequence};
use crate::reduction::{compare, height_positive, is_reduction_direct};
use crate::selftest::run_selftest;

pub use report::{Body, Report, Timings};

/// Exit status when the self-test corpus has a failing case.
pub const SELFTEST_FAILURE: i32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Multiplicity sequence c_k(E, N)
    Mult,
    /// Achilles-Manaresi sequence of an ideal J of R
    Am,
    /// Buchsbaum-Rim multiplicity of E
    Br,
    /// Hilbert-Samuel multiplicity of an ideal J of R
    Hs,
    /// Raw Hilbert table of the kind named in the document options
    Hilbert,
    /// Direct reduction check of E in F
    Reduce,
    /// Direct and numerical reduction checks together
    Compare,
    /// Built-in corpus of hand-checked values
    Selftest,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Mult => "mult",
            Command::Am => "am",
            Command::Br => "br",
            Command::Hs => "hs",
            Command::Hilbert => "hilbert",
            Command::Reduce => "reduce",
            Command::Compare => "compare",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "reesmult", version, about = "Multiplicity sequences and reduction checks for graded modules")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Problem document (JSON); standard input when omitted
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Prime characteristic, overriding the document
    #[arg(long)]
    pub prime: Option<u32>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub window_cap: Option<u32>,
    #[arg(long)]
    pub gen_cap: Option<usize>,
    /// Record that N is known to be quasi-unmixed
    #[arg(long)]
    pub assert_quasi_unmixed: bool,
    /// Include wall-clock timings in the report
    #[arg(long)]
    pub timings: bool,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

impl Cli {
    fn overrides(&self) -> LimitOverrides {
        LimitOverrides { gen_cap: self.gen_cap, window_cap: self.window_cap, n_max: self.n_max }
    }

    fn read_input(&self) -> Result<String> {
        let mut text = String::new();
        match &self.input {
            Some(path) => {
                text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            None => {
                std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Io(format!("stdin: {e}")))?;
            }
        }
        Ok(text)
    }

    /// Runs the command, reading the document from `--input` or stdin.
    pub fn execute(&self) -> Outcome {
        let started = Instant::now();
        let result = if self.command == Command::Selftest {
            Ok(run_selftest_report())
        } else {
            self.read_input().and_then(|text| self.run_text(&text))
        };
        self.finish(result, started)
    }

    /// Runs the command on document text.
    pub fn run_text(&self, text: &str) -> Result<Report> {
        if self.command == Command::Selftest {
            return Ok(run_selftest_report());
        }
        let mut doc = read_document(text)?;
        if let Some(q) = self.prime {
            doc.ring.prime = q;
        }
        let problem = doc.parse()?;
        run_command(self.command, &problem, self)
    }

    fn finish(&self, result: Result<Report>, started: Instant) -> Outcome {
        match result {
            Ok(mut report) => {
                if self.timings {
                    report.timings = Some(Timings { total_ms: started.elapsed().as_secs_f64() * 1e3 });
                }
                let status = match &report.body {
                    Body::Selftest(s) if !s.all_passed() => SELFTEST_FAILURE,
                    _ => 0,
                };
                match report.render(self.output) {
                    Ok(stdout) => Outcome { stdout, stderr: String::new(), status },
                    Err(e) => self.failure(e),
                }
            }
            Err(e) => self.failure(e),
        }
    }

    fn failure(&self, e: Error) -> Outcome {
        let status = e.exit_status();
        match self.output {
            OutputFormat::Json => Outcome { stdout: report::error_json(&e), stderr: String::new(), status },
            _ => Outcome { stdout: String::new(), stderr: format!("error[{}]: {e}\n", e.code()), status },
        }
    }
}

fn run_selftest_report() -> Report {
    Report::new(Command::Selftest, None, Body::Selftest(run_selftest()))
}

fn run_command(command: Command, problem: &ParsedProblem, cli: &Cli) -> Result<Report> {
    let limits = problem.limits(&cli.overrides());
    let ring = Some(problem.spec.to_string());
    let inst = problem.instance(limits)?;
    let body = match command {
        Command::Mult => {
            let (seq, height) = rayon::join(|| multiplicity_sequence(&inst), || height_positive(&inst));
            Body::Sequence { sequence: seq?, height: Some(height?) }
        }
        Command::Am => {
            let seq = achilles_manaresi_sequence(inst.ambient(), problem.ideal()?, limits.window_cap)?;
            Body::Sequence { sequence: seq, height: None }
        }
        Command::Br => Body::Multiplicity { name: "buchsbaum_rim", value: buchsbaum_rim(&inst)? },
        Command::Hs => Body::Multiplicity {
            name: "hilbert_samuel",
            value: hilbert_samuel(inst.ambient(), problem.ideal()?, limits.window_cap)?,
        },
        Command::Hilbert => {
            let kind = problem.table_kind();
            let window = problem.table_window();
            let table = if kind == HilbertKind::AchillesManaresi {
                AchillesManaresi::new(inst.ambient(), problem.ideal()?)?.table(window)?
            } else {
                inst.pair()?.table(kind, window)?
            };
            Body::Table(table)
        }
        Command::Reduce => Body::Direct { direct: is_reduction_direct(&inst, limits.n_max)?, n_max: limits.n_max },
        Command::Compare => Body::Verdict(compare(&inst, limits.n_max, cli.assert_quasi_unmixed)?),
        Command::Selftest => return Ok(run_selftest_report()),
    };
    Ok(Report::new(command, ring, body))
}

/// Parses `args` (including the program name) and runs; clap's own
/// help and usage errors are returned as outcomes too.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => cli.execute(),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, status }
            } else {
                Outcome { stdout: text, stderr: String::new(), status }
            }
        }
    }
}
