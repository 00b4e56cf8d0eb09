//! One-pass filtering of edges by clique participation.
//!
//! With `τ = C/2 · m^{(αr−2)/2}`, the edges in at most `τ` copies of `K_r`
//! form `E_1` and are discarded; the rest, `E_2`, span the output. Every
//! `K_r` of the input that avoids `E_1` survives, so at most
//! `Σ_{e∈E_1} N_e(K_r)` cliques are lost.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bounds::lemma_constant;
use crate::cliques::{count_cliques, edge_clique_participation, CliqueVector};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative slack applied to every floating-point guarantee check.
pub const GUARANTEE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractionParams {
    r: usize,
    alpha: f64,
    c: f64,
}

impl ExtractionParams {
    pub fn new(r: usize, alpha: f64, c: f64) -> Result<Self> {
        if r < 3 {
            return Err(Error::invalid(format!("r must be at least 3, got {r}")));
        }
        if !(alpha > 2.0 / r as f64 && alpha <= 1.0) {
            return Err(Error::invalid(format!("α must lie in (2/r, 1], got {alpha}")));
        }
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::invalid(format!("C must be positive, got {c}")));
        }
        Ok(ExtractionParams { r, alpha, c })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `((2−α)r−2) / (2(r−2))`, the exponent of `m` in the bound on `n_0`.
    pub fn order_exponent(&self) -> f64 {
        let r = self.r as f64;
        ((2.0 - self.alpha) * r - 2.0) / (2.0 * (r - 2.0))
    }

    /// `r(r−2)α / ((2−α)r−2)`, the exponent of `n_0` in the bound on `k_r`.
    pub fn density_exponent(&self) -> f64 {
        let r = self.r as f64;
        r * (r - 2.0) * self.alpha / ((2.0 - self.alpha) * r - 2.0)
    }

    /// `τ` for a graph with `m` edges.
    pub fn threshold(&self, m: usize) -> f64 {
        0.5 * self.c * libm::pow(m as f64, (self.alpha * self.r as f64 - 2.0) / 2.0)
    }

    /// The constants `C_0`, `C_2..C_r` and the `E_2` size constant.
    pub fn constants(&self) -> Result<ExtractionConstants> {
        let r = self.r;
        let half_c = self.c / 2.0;
        let fact: f64 = (1..=r - 2).map(|i| i as f64).product();
        let c0 = 2.0 * libm::pow(fact * half_c, -1.0 / (r as f64 - 2.0));
        let cr = half_c * libm::pow(c0, -self.density_exponent());
        let mut ci = Vec::with_capacity(r - 1);
        for i in 2..r {
            ci.push(libm::pow(cr / lemma_constant(i, r)?, i as f64 / r as f64));
        }
        ci.push(cr);
        let e2 = libm::pow(self.c / (2.0 * lemma_constant(2, r)?), 2.0 / r as f64);
        Ok(ExtractionConstants { c0, ci, e2 })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionConstants {
    pub c0: f64,
    /// `C_2, …, C_r`.
    pub ci: Vec<f64>,
    /// `(C / (2 C(2,r)))^{2/r}`.
    pub e2: f64,
}

impl ExtractionConstants {
    /// `C_i` for `2 <= i <= r`.
    pub fn c(&self, i: usize) -> f64 {
        self.ci[i - 2]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuaranteeStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Guarantee {
    /// `a`, `b`, `c`, `d2`..`dr` or `e`.
    pub name: String,
    pub statement: String,
    pub bound: f64,
    pub observed: f64,
    pub status: GuaranteeStatus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionReport {
    pub params: ExtractionParams,
    pub m: usize,
    pub threshold: f64,
    pub e1_count: usize,
    pub e2_count: usize,
    pub n0: usize,
    /// Clique counts of the output, `k_1..k_r`.
    pub cliques: CliqueVector,
    /// `k_r` of the input.
    pub input_kr: u64,
    /// `Σ_{e∈E_1} N_e(K_r)`.
    pub e1_participation: u64,
    pub hypothesis_met: bool,
    pub constants: ExtractionConstants,
    pub guarantees: Vec<Guarantee>,
}

impl ExtractionReport {
    pub fn guarantee(&self, name: &str) -> Option<&Guarantee> {
        self.guarantees.iter().find(|g| g.name == name)
    }

    /// No guarantee failed.
    pub fn all_pass(&self) -> bool {
        self.guarantees.iter().all(|g| g.status != GuaranteeStatus::Fail)
    }
}

#[derive(Clone, Copy)]
enum Cmp {
    AtLeast,
    Above,
    AtMost,
}

fn judge(applies: bool, observed: f64, bound: f64, cmp: Cmp) -> GuaranteeStatus {
    if !applies {
        return GuaranteeStatus::NotApplicable;
    }
    let slack = GUARANTEE_SLACK * bound.abs();
    let ok = match cmp {
        Cmp::AtLeast => observed >= bound - slack,
        Cmp::Above => observed > bound - slack,
        Cmp::AtMost => observed <= bound + slack,
    };
    if ok {
        GuaranteeStatus::Pass
    } else {
        GuaranteeStatus::Fail
    }
}

/// Keeps the edges in more than `τ` copies of `K_r`, drops the vertices left
/// isolated and relabels the rest in increasing order of their input label.
pub fn extract_dense(g: &Graph, p: &ExtractionParams) -> Result<(Graph, ExtractionReport)> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let r = p.r;
    let m = g.m();
    let tau = p.threshold(m);
    let participation = edge_clique_participation(g, r)?;
    let mut kept = Vec::new();
    let mut e1_participation = 0;
    for &(e, n_e) in &participation {
        if n_e as f64 > tau {
            kept.push(e);
        } else {
            e1_participation += n_e;
        }
    }
    let mut used = alloc::vec![false; g.n()];
    for &(u, v) in &kept {
        used[u] = true;
        used[v] = true;
    }
    let mut label = alloc::vec![usize::MAX; g.n()];
    let mut n0 = 0;
    for v in 0..g.n() {
        if used[v] {
            label[v] = n0;
            n0 += 1;
        }
    }
    let edges: Vec<(usize, usize)> = kept.iter().map(|&(u, v)| (label[u], label[v])).collect();
    let out = Graph::from_edges(n0, &edges)?;

    let input_kr = count_cliques(g, r).k(r);
    let cliques = count_cliques(&out, r);
    let hypothesis_met = input_kr as f64 >= p.c * libm::pow(m as f64, p.alpha * r as f64 / 2.0);
    let constants = p.constants()?;
    let guarantees = guarantees(p, m, n0, &cliques, &constants, hypothesis_met);

    let report = ExtractionReport {
        params: *p,
        m,
        threshold: tau,
        e1_count: m - kept.len(),
        e2_count: kept.len(),
        n0,
        cliques,
        input_kr,
        e1_participation,
        hypothesis_met,
        constants,
        guarantees,
    };
    Ok((out, report))
}

fn guarantees(
    p: &ExtractionParams,
    m: usize,
    n0: usize,
    cliques: &CliqueVector,
    k: &ExtractionConstants,
    on: bool,
) -> Vec<Guarantee> {
    let (r, alpha, c) = (p.r, p.alpha, p.c);
    let mf = m as f64;
    let nf = n0 as f64;
    let e2 = cliques.k(2) as f64;
    let mut out = Vec::with_capacity(r + 3);
    let mut push = |name: String, statement: String, bound: f64, observed: f64, cmp: Cmp, applies: bool| {
        out.push(Guarantee {
            name,
            statement,
            bound,
            observed,
            status: judge(applies, observed, bound, cmp),
        });
    };
    push(
        "a".into(),
        "|E_2| ≥ (C/(2C(2,r)))^{2/r} m^α".into(),
        k.e2 * libm::pow(mf, alpha),
        e2,
        Cmp::AtLeast,
        on,
    );
    push(
        "b".into(),
        "k_r(G_2) > (C/2) m^{αr/2}".into(),
        c / 2.0 * libm::pow(mf, alpha * r as f64 / 2.0),
        cliques.k(r) as f64,
        Cmp::Above,
        on,
    );
    push(
        "c".into(),
        "n_0 ≤ C_0 m^{((2−α)r−2)/(2(r−2))}".into(),
        k.c0 * libm::pow(mf, p.order_exponent()),
        nf,
        Cmp::AtMost,
        on,
    );
    for i in 2..=r {
        let exp = i as f64 * p.density_exponent() / r as f64;
        push(
            format!("d{i}"),
            format!("k_{i}(G_2) ≥ C_{i} n_0^{{{}}}", trim(exp)),
            k.c(i) * libm::pow(nf, exp),
            cliques.k(i) as f64,
            Cmp::AtLeast,
            on,
        );
    }
    push(
        "e".into(),
        "m_0 ≥ C_2 n_0^2 when α = 1".into(),
        k.c(2) * nf * nf,
        e2,
        Cmp::AtLeast,
        on && alpha == 1.0,
    );
    out
}

fn trim(x: f64) -> String {
    let s = format!("{x:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
