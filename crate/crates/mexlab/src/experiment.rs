//! Experiment spec files and CSV output.
//!
//! A spec is a JSON object naming a family and its parameter lists:
//!
//! ```json
//! {"family": "norm_graph", "qs": [5, 7, 11, 13], "s": 2, "u": 2, "r": 3}
//! {"family": "tripartite", "ns": [64, 256, 1024]}
//! {"family": "deletion", "pattern": "K3_4", "ns": [60, 120, 240], "seeds": [1, 2, 3], "c": 1.0}
//! ```
//!
//! `u` and `r` default to 2 and 3, `c` to 1. A pattern path is resolved
//! relative to the spec file.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use mexlab_core::experiment::{build_row, check_spec, instances, predicted_exponent, summarize};
use mexlab_core::experiment::{ExperimentResult, ExperimentSpec, Family};
use mexlab_core::Pattern;

use crate::error::CliError;
use crate::literal::load_graph_in;

pub const CSV_HEADER: [&str; 9] = [
    "family",
    "param",
    "n",
    "m",
    "k2",
    "k3",
    "k4",
    "predicted_exponent",
    "fitted_slope",
];

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyFile {
    NormGraph { qs: Vec<u32>, s: usize },
    Tripartite { ns: Vec<usize> },
    Deletion {
        pattern: String,
        ns: Vec<usize>,
        seeds: Vec<u64>,
        #[serde(default = "default_c")]
        c: f64,
    },
}

fn default_c() -> f64 {
    1.0
}

fn default_u() -> usize {
    2
}

fn default_r() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct SpecFile {
    #[serde(flatten)]
    pub family: FamilyFile,
    #[serde(default = "default_u")]
    pub u: usize,
    #[serde(default = "default_r")]
    pub r: usize,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Validation {
            code: "parse_error",
            message: format!("experiment spec: {e}"),
            failed_condition: None,
        })
    }

    pub fn resolve(self, base: &Path) -> Result<ExperimentSpec, CliError> {
        let family = match self.family {
            FamilyFile::NormGraph { qs, s } => Family::NormGraph { qs, s },
            FamilyFile::Tripartite { ns } => Family::Tripartite { ns },
            FamilyFile::Deletion { pattern, ns, seeds, c } => Family::Deletion {
                pattern: Pattern::new(load_graph_in(&pattern, base)?)?,
                ns,
                seeds,
                c,
            },
        };
        Ok(ExperimentSpec {
            family,
            u: self.u,
            r: self.r,
        })
    }
}

pub fn load_spec(path: &Path) -> Result<ExperimentSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    SpecFile::parse(&text)?.resolve(base)
}

/// Builds the instances in parallel on the current rayon pool. Rows come back
/// in instance order whatever the worker count.
pub fn run(spec: &ExperimentSpec) -> Result<ExperimentResult, CliError> {
    check_spec(spec)?;
    predicted_exponent(spec)?;
    let rows = instances(&spec.family)
        .into_par_iter()
        .map(|inst| build_row(spec, inst))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(summarize(spec, rows)?)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: &'a str,
    param: &'a str,
    n: usize,
    m: usize,
    k2: u64,
    k3: u64,
    k4: u64,
    predicted_exponent: f64,
    fitted_slope: f64,
}

pub fn write_csv<W: Write>(res: &ExperimentResult, w: W) -> Result<(), csv::Error> {
    let mut out = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    out.write_record(CSV_HEADER)?;
    for row in &res.rows {
        out.serialize(CsvRow {
            family: row.family,
            param: &row.param,
            n: row.n,
            m: row.m,
            k2: row.cliques.k(2),
            k3: row.cliques.k(3),
            k4: row.cliques.k(4),
            predicted_exponent: res.predicted,
            fitted_slope: res.slope,
        })?;
    }
    out.flush()?;
    Ok(())
}
