//! Deterministic graph generators.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Graph families understood by [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    /// Parts are laid out consecutively: part 0 gets vertices `0..s_0`, etc.
    CompleteMultipartite(Vec<usize>),
    /// `n` vertices in `k` parts whose sizes differ by at most one, larger parts first.
    Turan { n: usize, k: usize },
    /// `K_{1,leaves}` with the centre at vertex 0.
    Star(usize),
    Cycle(usize),
    Path(usize),
    /// Each base vertex `i` becomes the independent set `i*s..(i+1)*s`.
    Blowup { base: Graph, s: usize },
    /// Erdős–Rényi `G(n, p)`; see [`gnp`].
    Gnp { n: usize, p: f64, seed: u64 },
}

pub fn generate(kind: &GraphKind) -> Result<Graph> {
    match kind {
        GraphKind::Complete(n) => Ok(complete(*n)),
        GraphKind::CompleteMultipartite(parts) => complete_multipartite(parts),
        GraphKind::Turan { n, k } => turan(*n, *k),
        GraphKind::Star(m) => Ok(star(*m)),
        GraphKind::Cycle(l) => cycle(*l),
        GraphKind::Path(n) => Ok(path(*n)),
        GraphKind::Blowup { base, s } => Ok(blowup(base, *s)),
        GraphKind::Gnp { n, p, seed } => gnp(*n, *p, *seed),
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::invalid("part sizes must be a non-empty list of positive integers"));
    }
    Ok(multipartite_unchecked(parts))
}

fn multipartite_unchecked(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Part sizes of the Turán graph `T(n, k)`, non-increasing.
pub fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

pub fn turan(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("Turán graph needs at least one part"));
    }
    let parts: Vec<usize> = turan_parts(n, k).into_iter().filter(|&s| s > 0).collect();
    Ok(multipartite_unchecked(&parts))
}

pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

pub fn cycle(l: usize) -> Result<Graph> {
    if l < 3 {
        return Err(Error::invalid("cycle length must be at least 3"));
    }
    let mut g = path(l);
    g.add_edge(0, l - 1);
    Ok(g)
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

pub fn blowup(base: &Graph, s: usize) -> Graph {
    let mut g = Graph::empty(base.n() * s);
    for (i, j) in base.edges() {
        for a in 0..s {
            for b in 0..s {
                g.add_edge(i * s + a, j * s + b);
            }
        }
    }
    g
}

/// Erdős–Rényi `G(n, p)` driven by [`SplitMix64`] seeded with `seed`.
///
/// Pairs are visited in lexicographic order `(0,1), (0,2), …, (n-2,n-1)`;
/// each consumes exactly one draw `x` and becomes an edge iff `x < p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("edge probability must lie in [0, 1]"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
