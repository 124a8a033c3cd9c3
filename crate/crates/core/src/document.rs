//! JSON problem documents.
//!
//! ```json
//! {"ring": {"prime": 32003, "x_vars": ["x"], "p": 2},
//!  "N": {"free_rank": 1, "relations": []},
//!  "E": [["x", "0"], ["0", "x"]]}
//! ```
//!
//! `N` defaults to `R` itself. `F` is the larger module for reduction
//! checks; `J` is an ideal of `R` for the Achilles-Manaresi and
//! Hilbert-Samuel commands (when absent and `p = 1`, the entries of `E`
//! are used). `options` may carry `n_max`, `window_cap`, `gen_cap`, and for
//! raw tables `kind`, `origin` and `size`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::parse::VariableNames;
use crate::algebra::{BiPolynomial, Homogeneity, ModuleVector, Ring, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertKind, Window};
use crate::modules::ModulePresentation;
use crate::multiplicity::{Limits, ProblemInstance};

fn default_prime() -> u32 {
    DEFAULT_PRIME
}

fn default_rank() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default = "default_prime")]
    pub prime: u32,
    pub x_vars: Vec<String>,
    pub p: usize,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "prime={} x_vars={} p={}", self.prime, self.x_vars.join(","), self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default = "default_rank")]
    pub free_rank: usize,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

impl Default for ModuleSpec {
    fn default() -> Self {
        ModuleSpec { free_rank: 1, relations: Vec::new() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub n_max: Option<usize>,
    pub window_cap: Option<u32>,
    pub gen_cap: Option<usize>,
    pub kind: Option<String>,
    pub origin: Option<(u32, u32)>,
    pub size: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub ring: RingSpec,
    #[serde(rename = "N", default)]
    pub n: ModuleSpec,
    #[serde(rename = "E", default)]
    pub e: Vec<Vec<String>>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<Vec<String>>>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<String>>,
    #[serde(default)]
    pub options: Options,
}

/// A document with every polynomial parsed and checked.
#[derive(Debug)]
pub struct ParsedProblem {
    pub spec: RingSpec,
    pub ring: Ring,
    pub names: VariableNames,
    pub presentation: ModulePresentation,
    pub e: Vec<ModuleVector>,
    pub f: Option<Vec<ModuleVector>>,
    pub j: Option<Vec<BiPolynomial>>,
    pub options: Options,
}

/// Reads the JSON structure of a document without checking polynomials.
pub fn read_document(text: &str) -> Result<ProblemDocument> {
    serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("document line {} column {}", e.line(), e.column()), e.to_string()))
}

/// Parses and validates a problem document.
pub fn parse_problem(text: &str) -> Result<ParsedProblem> {
    read_document(text)?.parse()
}

impl ProblemDocument {
    pub fn from_json(text: &str) -> Result<ParsedProblem> {
        parse_problem(text)
    }

    pub fn parse(&self) -> Result<ParsedProblem> {
        let spec = self.ring.clone();
        if spec.x_vars.is_empty() {
            return Err(Error::parse("ring.x_vars", "at least one base variable is needed"));
        }
        let ring = Ring::new(spec.x_vars.len(), spec.p, spec.prime).map_err(|e| Error::parse("ring", e.to_string()))?;
        let names = VariableNames::new(&ring, &spec.x_vars)?;
        let poly = |field: &str, text: &str| -> Result<BiPolynomial> {
            names.parse(&ring, text).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(field, message),
                other => other,
            })
        };
        let vectors = |field: &str, rows: &[Vec<String>], rank: usize| -> Result<Vec<ModuleVector>> {
            rows.iter()
                .enumerate()
                .map(|(i, row)| {
                    if row.len() != rank {
                        return Err(Error::parse(
                            format!("{field}[{i}]"),
                            format!("expected {rank} entries, found {}", row.len()),
                        ));
                    }
                    let entries = row
                        .iter()
                        .enumerate()
                        .map(|(k, s)| poly(&format!("{field}[{i}][{k}]"), s))
                        .collect::<Result<Vec<_>>>()?;
                    let v = ModuleVector::new(entries);
                    match v.homogeneity() {
                        Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous {
                            index: i,
                            detail: format!("{field}[{i}] mixes degrees across its entries"),
                        }),
                        Homogeneity::Bihomogeneous(_, t) if t > 0 => Err(Error::parse(
                            format!("{field}[{i}]"),
                            "entries must not involve the fiber variables T",
                        )),
                        _ => Ok(v),
                    }
                })
                .collect()
        };
        if self.n.free_rank == 0 {
            return Err(Error::parse("N.free_rank", "must be at least 1"));
        }
        let relations = vectors("N.relations", &self.n.relations, self.n.free_rank)?;
        let presentation = ModulePresentation::new(self.n.free_rank, relations)?;
        let e = vectors("E", &self.e, spec.p)?;
        let f = self.f.as_ref().map(|f| vectors("F", f, spec.p)).transpose()?;
        let j = self
            .j
            .as_ref()
            .map(|j| {
                j.iter()
                    .enumerate()
                    .map(|(i, s)| {
                        let g = poly(&format!("J[{i}]"), s)?;
                        match g.homogeneity() {
                            Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous {
                                index: i,
                                detail: format!("J[{i}] is not homogeneous"),
                            }),
                            Homogeneity::Bihomogeneous(_, t) if t > 0 => {
                                Err(Error::parse(format!("J[{i}]"), "must not involve the fiber variables T"))
                            }
                            _ => Ok(g),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        if let Some(kind) = &self.options.kind {
            if HilbertKind::from_name(kind).is_none() {
                return Err(Error::parse("options.kind", format!("unknown table kind {kind:?}")));
            }
        }
        Ok(ParsedProblem { spec, ring, names, presentation, e, f, j, options: self.options.clone() })
    }
}

impl ParsedProblem {
    /// Document options, each overridden by the matching field of `overrides`.
    pub fn limits(&self, overrides: &LimitOverrides) -> Limits {
        let d = Limits::default();
        Limits {
            gen_cap: overrides.gen_cap.or(self.options.gen_cap).unwrap_or(d.gen_cap),
            window_cap: overrides.window_cap.or(self.options.window_cap).unwrap_or(d.window_cap),
            n_max: overrides.n_max.or(self.options.n_max).unwrap_or(d.n_max),
        }
    }

    pub fn instance(&self, limits: Limits) -> Result<ProblemInstance> {
        ProblemInstance::new(self.ring.clone(), self.presentation.clone(), self.e.clone(), self.f.clone(), limits)
    }

    /// `J` from the document, or the entries of `E` when `p = 1`.
    pub fn ideal(&self) -> Result<Vec<BiPolynomial>> {
        if let Some(j) = &self.j {
            return Ok(j.clone());
        }
        if self.spec.p == 1 {
            return Ok(self.e.iter().map(|v| v.entries()[0].clone()).collect());
        }
        Err(Error::Precondition("this command needs an ideal J (or E with p = 1)".into()))
    }

    pub fn table_kind(&self) -> HilbertKind {
        self.options.kind.as_deref().and_then(HilbertKind::from_name).unwrap_or(HilbertKind::HSharp)
    }

    /// The requested table window, `6 x 6` at `(0, 0)` by default.
    pub fn table_window(&self) -> Window {
        Window { origin: self.options.origin.unwrap_or((0, 0)), size: self.options.size.unwrap_or((6, 6)) }
    }
}

/// Command-line values that take precedence over document options.
#[derive(Clone, Copy, Debug, Default)]
pub struct LimitOverrides {
    pub gen_cap: Option<usize>,
    pub window_cap: Option<u32>,
    pub n_max: Option<usize>,
}
