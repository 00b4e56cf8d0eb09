//! JSON report types. Every report carries a `kind` tag; field names are
//! camelCase and match `schema/report.schema.json`.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use mexlab_core::bounds::{CondStatus, ExponentReport, ParamValue, Value};
use mexlab_core::construct::DeletionRun;
use mexlab_core::extraction::{ExtractionReport, GuaranteeStatus};
use mexlab_core::experiment::ExperimentResult;
use mexlab_core::oracle::{OracleMode, OracleResult};
use mexlab_core::{CliqueVector, Graph, Pattern, Rational};

use crate::edgelist;

/// The schema every report validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Serializes as `{"k1": .., "k2": .., ...}`.
#[derive(Debug, Clone, Copy)]
pub struct Cliques<'a>(pub &'a CliqueVector);

impl Serialize for Cliques<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.max_size()))?;
        for r in 1..=self.0.max_size() {
            map.serialize_entry(&format!("k{r}"), &self.0.k(r))?;
        }
        map.end()
    }
}

fn rational_string(r: &Option<Rational>) -> Option<String> {
    r.map(|r| r.to_string())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CountReport<'a> {
    pub kind: &'static str,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub cliques: Cliques<'a>,
}

impl<'a> CountReport<'a> {
    pub fn new(g: &Graph, cliques: &'a CliqueVector) -> Self {
        CountReport {
            kind: "count",
            n: g.n(),
            m: g.m(),
            cliques: Cliques(cliques),
        }
    }
}

#[derive(Serialize)]
pub struct EdgeCount {
    pub u: usize,
    pub v: usize,
    pub count: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParticipationReport {
    pub kind: &'static str,
    pub r: usize,
    pub edges: Vec<EdgeCount>,
}

impl ParticipationReport {
    pub fn new(r: usize, counts: &[((usize, usize), u64)]) -> Self {
        ParticipationReport {
            kind: "participation",
            r,
            edges: counts
                .iter()
                .map(|&((u, v), count)| EdgeCount { u, v, count })
                .collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PatternCountReport {
    pub kind: &'static str,
    #[serde(rename = "vF")]
    pub v_f: usize,
    #[serde(rename = "eF")]
    pub e_f: usize,
    pub aut_count: u64,
    pub count: u64,
}

impl PatternCountReport {
    pub fn new(f: &Pattern, count: u64) -> Self {
        PatternCountReport {
            kind: "pattern_count",
            v_f: f.order(),
            e_f: f.size(),
            aut_count: f.aut_count(),
            count,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FreeCheckReport {
    pub kind: &'static str,
    #[serde(rename = "vF")]
    pub v_f: usize,
    #[serde(rename = "eF")]
    pub e_f: usize,
    pub free: bool,
}

impl FreeCheckReport {
    pub fn new(f: &Pattern, free: bool) -> Self {
        FreeCheckReport {
            kind: "free_check",
            v_f: f.order(),
            e_f: f.size(),
            free,
        }
    }
}

#[derive(Serialize)]
pub struct ExtractionParamsDto {
    pub r: usize,
    pub alpha: f64,
    #[serde(rename = "C")]
    pub c: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstantsDto {
    pub c0: f64,
    /// `C_2..C_r`.
    pub ci: Vec<f64>,
    pub e2: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GuaranteeDto {
    pub name: String,
    pub statement: String,
    pub bound: f64,
    pub observed: f64,
    pub status: &'static str,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtractionReportDto<'a> {
    pub kind: &'static str,
    pub params: ExtractionParamsDto,
    pub m: usize,
    pub threshold: f64,
    pub e1_count: usize,
    pub e2_count: usize,
    pub n0: usize,
    pub cliques: Cliques<'a>,
    pub input_kr: u64,
    pub e1_participation: u64,
    pub hypothesis_met: bool,
    pub constants: ConstantsDto,
    pub guarantees: Vec<GuaranteeDto>,
    pub all_pass: bool,
}

fn guarantee_status(s: GuaranteeStatus) -> &'static str {
    match s {
        GuaranteeStatus::Pass => "pass",
        GuaranteeStatus::Fail => "fail",
        GuaranteeStatus::NotApplicable => "not_applicable",
    }
}

impl<'a> From<&'a ExtractionReport> for ExtractionReportDto<'a> {
    fn from(r: &'a ExtractionReport) -> Self {
        ExtractionReportDto {
            kind: "extraction",
            params: ExtractionParamsDto {
                r: r.params.r(),
                alpha: r.params.alpha(),
                c: r.params.c(),
            },
            m: r.m,
            threshold: r.threshold,
            e1_count: r.e1_count,
            e2_count: r.e2_count,
            n0: r.n0,
            cliques: Cliques(&r.cliques),
            input_kr: r.input_kr,
            e1_participation: r.e1_participation,
            hypothesis_met: r.hypothesis_met,
            constants: ConstantsDto {
                c0: r.constants.c0,
                ci: r.constants.ci.clone(),
                e2: r.constants.e2,
            },
            guarantees: r
                .guarantees
                .iter()
                .map(|g| GuaranteeDto {
                    name: g.name.clone(),
                    statement: g.statement.clone(),
                    bound: g.bound,
                    observed: g.observed,
                    status: guarantee_status(g.status),
                })
                .collect(),
            all_pass: r.all_pass(),
        }
    }
}

/// A bound parameter as it appears in JSON: integers and reals as numbers,
/// rationals as `"p/q"`, lists as arrays.
pub struct ParamDto<'a>(pub &'a ParamValue);

impl Serialize for ParamDto<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            ParamValue::Int(i) => s.serialize_i64(*i),
            ParamValue::Real(x) => s.serialize_f64(*x),
            ParamValue::Ratio(r) => s.serialize_str(&r.to_string()),
            ParamValue::List(l) => l.serialize(s),
        }
    }
}

struct Params<'a>(&'a [(String, ParamValue)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, &ParamDto(v))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum ValueDto {
    Real(f64),
    Bool(bool),
}

#[derive(Serialize)]
pub struct ConditionDto {
    pub text: String,
    pub status: &'static str,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtraDto {
    pub name: String,
    pub value: f64,
    pub value_rational: Option<String>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExponentReportDto<'a> {
    pub kind: &'static str,
    pub formula_id: &'static str,
    params: Params<'a>,
    pub value: Option<ValueDto>,
    pub value_rational: Option<String>,
    pub conditions: Vec<ConditionDto>,
    pub tight: bool,
    pub extra: Vec<ExtraDto>,
}

impl<'a> From<&'a ExponentReport> for ExponentReportDto<'a> {
    fn from(r: &'a ExponentReport) -> Self {
        ExponentReportDto {
            kind: "exponent",
            formula_id: r.formula.as_str(),
            params: Params(&r.params),
            value: r.value.map(|v| match v {
                Value::Real(x) => ValueDto::Real(x),
                Value::Bool(b) => ValueDto::Bool(b),
            }),
            value_rational: rational_string(&r.value_rational),
            conditions: r
                .conditions
                .iter()
                .map(|c| ConditionDto {
                    text: c.text.clone(),
                    status: match c.status {
                        CondStatus::Pass => "pass",
                        CondStatus::Fail => "fail",
                        CondStatus::Assumed => "assumed",
                    },
                })
                .collect(),
            tight: r.tight,
            extra: r
                .extra
                .iter()
                .map(|e| ExtraDto {
                    name: e.name.clone(),
                    value: e.value,
                    value_rational: rational_string(&e.rational),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NormGraphReport {
    pub kind: &'static str,
    pub q: u32,
    pub s: usize,
    pub n: usize,
    pub m: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DeletionReport<'a> {
    pub kind: &'static str,
    pub u: usize,
    pub r: usize,
    pub n: usize,
    pub seed: u64,
    pub c: f64,
    pub rho: f64,
    pub p: f64,
    pub clamped: bool,
    /// Achieved `t = k_u` of the output.
    pub t: u64,
    pub before: Cliques<'a>,
    pub after: Cliques<'a>,
    pub copies_found: u64,
    pub edges_deleted: u64,
    pub f_free: bool,
}

impl<'a> From<&'a DeletionRun> for DeletionReport<'a> {
    fn from(run: &'a DeletionRun) -> Self {
        DeletionReport {
            kind: "deletion",
            u: run.u,
            r: run.r,
            n: run.n,
            seed: run.seed,
            c: run.c,
            rho: run.rho,
            p: run.p,
            clamped: run.clamped,
            t: run.ku_after(),
            before: Cliques(&run.before),
            after: Cliques(&run.after),
            copies_found: run.copies_found,
            edges_deleted: run.edges_deleted,
            f_free: run.f_free,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub kind: &'static str,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub value: u64,
    /// The witness in edge-list format.
    pub witness: String,
    pub graphs_examined: u64,
    pub iso_classes_examined: u64,
}

impl OracleReport {
    pub fn new(mode: OracleMode, res: &OracleResult) -> Self {
        let (name, m, n) = match mode {
            OracleMode::Mex { m } => ("mex", Some(m), None),
            OracleMode::Ex { n } => ("ex", None, Some(n)),
        };
        OracleReport {
            kind: "oracle",
            mode: name,
            m,
            n,
            value: res.value,
            witness: edgelist::write(&res.witness),
            graphs_examined: res.graphs_examined,
            iso_classes_examined: res.iso_classes_examined,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentReport {
    pub kind: &'static str,
    pub family: &'static str,
    pub u: usize,
    pub r: usize,
    pub rows: usize,
    pub predicted_exponent: f64,
    pub predicted_rational: Option<String>,
    pub fitted_slope: f64,
}

impl ExperimentReport {
    pub fn new(family: &'static str, u: usize, r: usize, res: &ExperimentResult) -> Self {
        ExperimentReport {
            kind: "experiment",
            family,
            u,
            r,
            rows: res.rows.len(),
            predicted_exponent: res.predicted,
            predicted_rational: rational_string(&res.predicted_rational),
            fitted_slope: res.slope,
        }
    }
}
