use std::fmt::Write as _;

use serde::Serialize;

use super::{Command, OutputFormat};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertTable, MultiplicitySequence};
use crate::reduction::{DirectVerdict, HeightCheck, ReductionVerdict};
use crate::selftest::SelftestReport;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Body {
    Sequence {
        #[serde(flatten)]
        sequence: MultiplicitySequence,
        #[serde(skip_serializing_if = "Option::is_none")]
        height: Option<HeightCheck>,
    },
    Multiplicity {
        name: &'static str,
        value: u64,
    },
    Table(HilbertTable),
    Direct {
        direct: DirectVerdict,
        n_max: usize,
    },
    Verdict(ReductionVerdict),
    Selftest(SelftestReport),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(flatten)]
    pub body: Body,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    pub fn new(command: Command, ring: Option<String>, body: Body) -> Self {
        Report { command: command.name(), ring, body, timings: None }
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Inconsistent(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Tsv => match &self.body {
                Body::Table(t) => Ok(t.to_tsv(self.ring.as_deref().unwrap_or(""))),
                _ => Err(Error::Precondition(format!("tsv output is only available for tables, not {}", self.command))),
            },
            OutputFormat::Text => Ok(self.render_text()),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Sequence { sequence, height } => {
                let _ = writeln!(out, "{}: c = {}", self.command, sequence);
                let w = sequence.window;
                let _ = writeln!(
                    out,
                    "  D = {}, kind = {}, window origin ({},{}) size {}x{}",
                    sequence.dimension_bound, sequence.kind, w.origin.0, w.origin.1, w.size.0, w.size.1
                );
                if let Some(h) = height {
                    let verdict = if h.positive { "positive" } else { "not confirmed" };
                    let q = h.quotient_dimension.map_or("?".to_string(), |q| q.to_string());
                    let _ = writeln!(out, "  height check (advisory): {verdict} (dim M/IM = {q}, dim M = {})", h.module_dimension);
                    if let Some(d) = &h.diagnostic {
                        let _ = writeln!(out, "  diagnostic: {d}");
                    }
                }
            }
            Body::Multiplicity { name, value } => {
                let _ = writeln!(out, "{}: {name} = {value}", self.command);
            }
            Body::Table(t) => out.push_str(&t.to_tsv(self.ring.as_deref().unwrap_or(""))),
            Body::Direct { direct, .. } => {
                let _ = writeln!(out, "{}: {}", self.command, direct_text(*direct));
            }
            Body::Verdict(v) => {
                let _ = writeln!(out, "{}: {}", self.command, v.conclusion);
                let _ = writeln!(out, "  direct: {}", direct_text(v.direct));
                if let Some(num) = &v.numerical {
                    let rel = if num.equal { "=" } else { "!=" };
                    let _ = writeln!(out, "  sequences: c(E) = {} {rel} c(F) = {}", num.e, num.f);
                }
                for c in &v.caveats {
                    let _ = writeln!(out, "  caveat: {c}");
                }
            }
            Body::Selftest(s) => out.push_str(&s.render_text()),
        }
        if let Some(ring) = &self.ring {
            if !matches!(self.body, Body::Table(_)) {
                let _ = writeln!(out, "  ring: {ring}");
            }
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(out, "  time: {:.1} ms", t.total_ms);
        }
        out
    }
}

fn direct_text(d: DirectVerdict) -> String {
    match d {
        DirectVerdict::Yes { witness } => format!("reduction, I J^n M = J^(n+1) M at n = {witness}"),
        DirectVerdict::No { searched_up_to } => format!("no witness for n <= {searched_up_to}"),
        DirectVerdict::Skipped => "skipped".to_string(),
    }
}

/// `{"error": {"code", "message", "exit_status"}}`
pub fn error_json(e: &Error) -> String {
    let body = serde_json::json!({
        "error": { "code": e.code(), "message": e.to_string(), "exit_status": e.exit_status() }
    });
    let mut s = serde_json::to_string_pretty(&body).unwrap_or_default();
    s.push('\n');
    s
}
