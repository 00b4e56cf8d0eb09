//! Scaling experiments: build a family of graphs, count cliques and fit the
//! log-log slope of `k_r` against `k_u`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{cor14_kst, thm15_general};
use crate::cliques::{count_cliques, CliqueVector};
use crate::construct::{deletion_method, norm_graph, NormGraphParams};
use crate::error::{Error, Result};
use crate::generate::complete_multipartite;
use crate::pattern::Pattern;
use crate::Rational;

/// Clique sizes reported per row: `k_1` through `k_4`.
pub const ROW_CLIQUES: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `H(q, s)` for each `q`.
    NormGraph { qs: Vec<u32>, s: usize },
    /// `K_{n, ⌊√n⌋, ⌊∛n⌋}` for each `n`.
    Tripartite { ns: Vec<usize> },
    /// Deletion-method outputs for every `(n, seed)` pair.
    Deletion {
        pattern: Pattern,
        ns: Vec<usize>,
        seeds: Vec<u64>,
        c: f64,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::NormGraph { .. } => "norm_graph",
            Family::Tripartite { .. } => "tripartite",
            Family::Deletion { .. } => "deletion",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub family: Family,
    /// Clique size on the horizontal axis.
    pub u: usize,
    /// Clique size on the vertical axis.
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub family: &'static str,
    pub param: String,
    pub n: usize,
    pub m: usize,
    /// `k_1..k_max(4, r)`.
    pub cliques: CliqueVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub rows: Vec<ExperimentRow>,
    pub predicted: f64,
    pub predicted_rational: Option<Rational>,
    pub slope: f64,
}

/// Exponent of `k_r` against `k_u` predicted for the family.
pub fn predicted_exponent(spec: &ExperimentSpec) -> Result<(f64, Option<Rational>)> {
    let ExperimentSpec { family, u, r } = spec;
    match family {
        Family::NormGraph { s, .. } => {
            if *u != 2 {
                return Err(Error::invalid("norm-graph prediction is for u = 2"));
            }
            let rep = cor14_kst(*r, *s, None)?;
            Ok((rep.real().unwrap_or(f64::NAN), rep.value_rational))
        }
        Family::Tripartite { .. } => {
            if (*u, *r) != (2, 3) {
                return Err(Error::invalid("tripartite prediction is for u = 2, r = 3"));
            }
            Ok((11.0 / 9.0, Some(Rational::new(11, 9))))
        }
        Family::Deletion { pattern, .. } => {
            let rep = thm15_general(*u, *r, pattern)?;
            Ok((rep.real().unwrap_or(f64::NAN), rep.value_rational))
        }
    }
}

pub fn isqrt(n: usize) -> usize {
    let mut x = libm::sqrt(n as f64) as usize;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn icbrt(n: usize) -> usize {
    let mut x = libm::cbrt(n as f64) as usize;
    while x * x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Least-squares slope of `y` on `x`.
pub fn fit_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::invalid(format!(
            "slope needs at least 3 points, got {}",
            points.len()
        )));
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::invalid("slope undefined: all x values coincide"));
    }
    Ok(sxy / sxx)
}

/// One graph of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    NormGraph { q: u32, s: usize },
    Tripartite { n: usize },
    Deletion { n: usize, seed: u64 },
}

/// The family's instances in output order.
pub fn instances(family: &Family) -> Vec<Instance> {
    match family {
        Family::NormGraph { qs, s } => qs.iter().map(|&q| Instance::NormGraph { q, s: *s }).collect(),
        Family::Tripartite { ns } => ns.iter().map(|&n| Instance::Tripartite { n }).collect(),
        Family::Deletion { ns, seeds, .. } => ns
            .iter()
            .flat_map(|&n| seeds.iter().map(move |&seed| Instance::Deletion { n, seed }))
            .collect(),
    }
}

/// Builds one instance and counts its cliques up to `max(4, r)`.
pub fn build_row(spec: &ExperimentSpec, inst: Instance) -> Result<ExperimentRow> {
    let depth = ROW_CLIQUES.max(spec.r);
    let (g, param) = match (inst, &spec.family) {
        (Instance::NormGraph { q, s }, _) => (norm_graph(NormGraphParams::new(q, s)?)?, format!("q={q};s={s}")),
        (Instance::Tripartite { n }, _) => {
            let parts = [n, isqrt(n), icbrt(n)];
            let g = complete_multipartite(&parts)?;
            (g, format!("parts={}x{}x{}", parts[0], parts[1], parts[2]))
        }
        (Instance::Deletion { n, seed }, Family::Deletion { pattern, c, .. }) => {
            let (g, _) = deletion_method(pattern, spec.u, spec.r, n, seed, *c)?;
            (g, format!("n={n};seed={seed}"))
        }
        (Instance::Deletion { .. }, _) => {
            return Err(Error::invalid("deletion instance outside a deletion family"))
        }
    };
    Ok(ExperimentRow {
        family: spec.family.name(),
        param,
        n: g.n(),
        m: g.m(),
        cliques: count_cliques(&g, depth),
    })
}

/// Builds every instance of the family, in order.
pub fn build_rows(spec: &ExperimentSpec) -> Result<Vec<ExperimentRow>> {
    instances(&spec.family).into_iter().map(|inst| build_row(spec, inst)).collect()
}

pub fn check_spec(spec: &ExperimentSpec) -> Result<()> {
    if spec.u < 1 || spec.r <= spec.u {
        return Err(Error::invalid(format!("need r > u >= 1, got u={}, r={}", spec.u, spec.r)));
    }
    let count = instances(&spec.family).len();
    if count < 3 {
        return Err(Error::invalid(format!("experiment needs at least 3 instances, got {count}")));
    }
    Ok(())
}

/// Fits the slope of `ln k_r` on `ln k_u`; rows where either count is zero
/// are left out of the fit.
pub fn summarize(spec: &ExperimentSpec, rows: Vec<ExperimentRow>) -> Result<ExperimentResult> {
    let (predicted, predicted_rational) = predicted_exponent(spec)?;
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|row| row.cliques.k(spec.u) > 0 && row.cliques.k(spec.r) > 0)
        .map(|row| {
            (
                libm::log(row.cliques.k(spec.u) as f64),
                libm::log(row.cliques.k(spec.r) as f64),
            )
        })
        .collect();
    let slope = fit_slope(&points)?;
    Ok(ExperimentResult {
        rows,
        predicted,
        predicted_rational,
        slope,
    })
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult> {
    check_spec(spec)?;
    predicted_exponent(spec)?;
    let rows = build_rows(spec)?;
    summarize(spec, rows)
}
