//! Lower-bound constructions: projective norm graphs and random deletion.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::bounds::thm15_general;
use crate::cliques::{count_cliques, CliqueVector};
use crate::error::{Error, Result};
use crate::field::{field_make, is_prime};
use crate::generate::gnp;
use crate::graph::Graph;
use crate::pattern::{count_copies, enumerate_copies, is_free, Pattern};

/// Largest vertex count `q^{s−1}(q−1)` accepted by [`norm_graph`].
pub const NORM_GRAPH_MAX: usize = 50_000;
pub const DELETION_MAX_N: usize = 500;
pub const DELETION_MAX_R: usize = 5;
/// Largest number of forbidden copies the deletion method will enumerate.
pub const DELETION_MAX_COPIES: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormGraphParams {
    pub q: u32,
    pub s: usize,
}

impl NormGraphParams {
    pub fn new(q: u32, s: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::invalid(format!("q must be prime, got {q}")));
        }
        if s < 2 {
            return Err(Error::invalid(format!("s must be at least 2, got {s}")));
        }
        let n = norm_graph_order(q, s);
        if n > NORM_GRAPH_MAX as u128 {
            return Err(Error::cap("norm graph order", NORM_GRAPH_MAX, n.min(usize::MAX as u128) as usize));
        }
        Ok(NormGraphParams { q, s })
    }

    /// `q^{s−1}(q−1)`.
    pub fn order(&self) -> usize {
        norm_graph_order(self.q, self.s) as usize
    }
}

fn norm_graph_order(q: u32, s: usize) -> u128 {
    (q as u128).saturating_pow(s as u32 - 1) * (q as u128 - 1)
}

/// Vertex id of `(A, a)` in `H(q, s)`: `index(A) · (q−1) + (a − 1)`, where
/// `index` is the field's dense element index.
pub fn norm_graph_vertex(q: u32, a_index: u64, a: u32) -> usize {
    a_index as usize * (q as usize - 1) + (a as usize - 1)
}

/// The projective norm graph `H(q, s)` on `GF(q^{s−1}) × GF(q)^*`:
/// distinct `(A,a)` and `(B,b)` are adjacent iff `N(A+B) = ab`.
pub fn norm_graph(params: NormGraphParams) -> Result<Graph> {
    let NormGraphParams { q, s } = NormGraphParams::new(params.q, params.s)?;
    let field = field_make(q, s - 1)?;
    let size = field.order();
    let elems: Vec<_> = field.elements().collect();
    let norms: Vec<u32> = elems.iter().map(|x| field.norm_to_base(x)).collect();
    let qm = q as usize - 1;
    // inverse table in GF(q)
    let mut inv = vec![0u32; q as usize];
    for a in 1..q {
        inv[a as usize] = (1..q).find(|b| a * b % q == 1).expect("prime field");
    }
    let mut g = Graph::empty(size as usize * qm);
    for ai in 0..size {
        for bi in ai..size {
            let c = norms[field.index(&field.add(&elems[ai as usize], &elems[bi as usize])) as usize];
            if c == 0 {
                continue;
            }
            for a in 1..q {
                let b = c * inv[a as usize] % q;
                let (x, y) = (norm_graph_vertex(q, ai, a), norm_graph_vertex(q, bi, b));
                // x > y only for ai == bi, where the pair is met again with a, b swapped
                if x < y {
                    g.add_edge(x, y);
                }
            }
        }
    }
    Ok(g)
}

/// Statistics of one deletion-method run.
#[derive(Debug, Clone, PartialEq)]
pub struct DeletionRun {
    pub u: usize,
    pub r: usize,
    pub n: usize,
    pub seed: u64,
    pub c: f64,
    /// `(v(F)−2)/(e(F)−C(r,2))`, the exponent in `p = c·n^{−ρ}`.
    pub rho: f64,
    pub p: f64,
    /// True when `c·n^{−ρ} > 1` and `p` was clamped to 1.
    pub clamped: bool,
    pub before: CliqueVector,
    pub after: CliqueVector,
    pub copies_found: u64,
    pub edges_deleted: u64,
    pub f_free: bool,
}

impl DeletionRun {
    pub fn ku_before(&self) -> u64 {
        self.before.k(self.u)
    }

    pub fn kr_before(&self) -> u64 {
        self.before.k(self.r)
    }

    pub fn ku_after(&self) -> u64 {
        self.after.k(self.u)
    }

    pub fn kr_after(&self) -> u64 {
        self.after.k(self.r)
    }
}

/// Samples `G(n, p)` and deletes edges until no copy of `f` remains,
/// always removing the edge that lies in the most surviving copies
/// (smallest edge on ties).
///
/// Refuses to run unless both hypotheses of [`thm15_general`] hold.
pub fn deletion_method(
    f: &Pattern,
    u: usize,
    r: usize,
    n: usize,
    seed: u64,
    c: f64,
) -> Result<(Graph, DeletionRun)> {
    if r > DELETION_MAX_R {
        return Err(Error::cap("clique size r", DELETION_MAX_R, r));
    }
    if n > DELETION_MAX_N {
        return Err(Error::cap("vertex count n", DELETION_MAX_N, n));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::invalid("leading constant c must be positive"));
    }
    let report = thm15_general(u, r, f)?;
    if let Some(failed) = report.failed_conditions().next() {
        let detail = match report.extra("madc") {
            Some(madc) if failed == crate::bounds::COND_MADC => format!(
                "madc = {} is not below {}",
                madc.rational.expect("exact madc"),
                report.extra("madc_bound").and_then(|b| b.rational).expect("exact bound"),
            ),
            _ => format!("v = {}, e = {}, r = {r}", f.order(), f.size()),
        };
        return Err(Error::ConditionFailed {
            condition: failed.into(),
            detail,
        });
    }
    let cr = r * (r - 1) / 2;
    let rho = (f.order() as f64 - 2.0) / (f.size() as f64 - cr as f64);
    let raw = c * libm::pow(n as f64, -rho);
    let p = raw.min(1.0);
    let mut g = gnp(n, p, seed)?;
    let before = count_cliques(&g, r);

    let total = count_copies(f, &g)?;
    if total > DELETION_MAX_COPIES {
        return Err(Error::cap("forbidden copies", DELETION_MAX_COPIES as usize, total as usize));
    }
    let copies = enumerate_copies(f, &g);
    let edges_deleted = greedy_cover(&mut g, &copies);
    let after = count_cliques(&g, r);
    let f_free = is_free(f, &g);
    Ok((
        g,
        DeletionRun {
            u,
            r,
            n,
            seed,
            c,
            rho,
            p,
            clamped: raw > 1.0,
            before,
            after,
            copies_found: copies.len() as u64,
            edges_deleted,
            f_free,
        },
    ))
}

/// Deletes edges of `g` until every copy has lost one; returns the number deleted.
fn greedy_cover(g: &mut Graph, copies: &[Vec<(usize, usize)>]) -> u64 {
    let mut holders: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (id, copy) in copies.iter().enumerate() {
        for &e in copy {
            holders.entry(e).or_default().push(id);
        }
    }
    let mut live: BTreeMap<(usize, usize), usize> =
        holders.iter().map(|(&e, ids)| (e, ids.len())).collect();
    let mut heap: BinaryHeap<(usize, Reverse<(usize, usize)>)> =
        live.iter().map(|(&e, &k)| (k, Reverse(e))).collect();
    let mut alive = vec![true; copies.len()];
    let mut deleted = 0;
    while let Some((k, Reverse(e))) = heap.pop() {
        if k == 0 || live[&e] != k {
            continue;
        }
        g.remove_edge(e.0, e.1);
        deleted += 1;
        for &id in &holders[&e] {
            if !core::mem::replace(&mut alive[id], false) {
                continue;
            }
            for other in &copies[id] {
                let cnt = live.get_mut(other).expect("edge of a copy");
                *cnt -= 1;
                if *other != e && *cnt > 0 {
                    heap.push((*cnt, Reverse(*other)));
                }
            }
        }
    }
    deleted
}
