//! Exact clique counting.
//!
//! Vertices are first relabeled in degeneracy order so every vertex has few
//! later neighbours; cliques are then enumerated once each, from their
//! earliest vertex, by intersecting candidate bitsets.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Clique counts `k_1, …, k_R` of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueVector {
    counts: Vec<u64>,
}

impl CliqueVector {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        CliqueVector { counts }
    }

    /// Largest clique size counted.
    pub fn max_size(&self) -> usize {
        self.counts.len()
    }

    /// `k_r`; panics unless `1 <= r <= max_size()`.
    pub fn k(&self, r: usize) -> u64 {
        assert!(r >= 1 && r <= self.counts.len(), "clique size {r} not counted");
        self.counts[r - 1]
    }

    /// Counts indexed from `k_1`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Vertices in degeneracy order: repeatedly remove a vertex of minimum
/// remaining degree, ties broken by smallest label.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let maxd = deg.iter().copied().max().unwrap_or(0);
    // bucket[d] holds vertices of current degree d; stale entries are skipped.
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
    for v in (0..n).rev() {
        bucket[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while order.len() < n {
        let Some(v) = bucket[d].pop() else {
            d += 1;
            continue;
        };
        if removed[v] || deg[v] != d {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                bucket[deg[w]].push(w);
                if deg[w] < d {
                    d = deg[w];
                }
            }
        }
    }
    order
}

/// Relabels `g` so vertex `i` is the `i`-th vertex of the degeneracy order.
fn degeneracy_relabel(g: &Graph) -> Graph {
    let order = degeneracy_order(g);
    let mut perm = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.relabel(&perm)
}

/// Exact counts `k_1..k_max` of complete subgraphs.
pub fn count_cliques(g: &Graph, max: usize) -> CliqueVector {
    let mut counts = vec![0u64; max];
    if max == 0 {
        return CliqueVector { counts };
    }
    counts[0] = g.n() as u64;
    if max == 1 {
        return CliqueVector { counts };
    }
    let h = degeneracy_relabel(g);
    let words = h.words();
    let mut bufs = vec![vec![0u64; words]; max];
    for v in 0..h.n() {
        bufs[0].copy_from_slice(h.row(v));
        bitset::clear_through(&mut bufs[0], v);
        extend(&h, &mut bufs, 0, max, &mut counts);
    }
    CliqueVector { counts }
}

/// `bufs[0]` holds the candidates extending a clique of size `level + 1`.
fn extend(h: &Graph, bufs: &mut [Vec<u64>], level: usize, max: usize, counts: &mut [u64]) {
    let (cand, rest) = bufs.split_first_mut().expect("buffer depth");
    counts[level + 1] += bitset::count(cand);
    if level + 2 >= max {
        return;
    }
    for w in bitset::ones(cand) {
        bitset::and_into(&mut rest[0], cand, h.row(w));
        bitset::clear_through(&mut rest[0], w);
        if !bitset::is_empty(&rest[0]) {
            extend(h, rest, level + 1, max, counts);
        }
    }
}

/// Number of `k`-cliques of `g` inside the vertex set `cand`.
pub(crate) fn count_k_in(g: &Graph, cand: &[u64], k: usize, scratch: &mut [Vec<u64>]) -> u64 {
    match k {
        0 => 1,
        1 => bitset::count(cand),
        _ => {
            let (next, rest) = scratch.split_first_mut().expect("scratch depth");
            let mut total = 0;
            for w in bitset::ones(cand) {
                bitset::and_into(next, cand, g.row(w));
                bitset::clear_through(next, w);
                total += count_k_in(g, next, k - 1, rest);
            }
            total
        }
    }
}

/// `N_e(K_r, g)` for every edge, in lexicographic edge order.
pub fn edge_clique_participation(g: &Graph, r: usize) -> Result<Vec<((usize, usize), u64)>> {
    if r < 3 {
        return Err(Error::invalid("participation needs clique size r >= 3"));
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let words = g.words();
    let mut common = vec![0u64; words];
    let mut scratch = vec![vec![0u64; words]; r];
    let mut out = Vec::with_capacity(g.m());
    for (u, v) in g.edges() {
        bitset::and_into(&mut common, g.row(u), g.row(v));
        out.push(((u, v), count_k_in(g, &common, r - 2, &mut scratch)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_multipartite, gnp, petersen, star};

    fn brute_cliques(g: &Graph, r: usize) -> u64 {
        fn rec(g: &Graph, chosen: &mut Vec<usize>, start: usize, r: usize) -> u64 {
            if chosen.len() == r {
                return 1;
            }
            let mut t = 0;
            for v in start..g.n() {
                if chosen.iter().all(|&u| g.has_edge(u, v)) {
                    chosen.push(v);
                    t += rec(g, chosen, v + 1, r);
                    chosen.pop();
                }
            }
            t
        }
        rec(g, &mut Vec::new(), 0, r)
    }

    #[test]
    fn named_examples() {
        assert_eq!(count_cliques(&complete(5), 3).k(3), 10);
        assert_eq!(count_cliques(&complete_multipartite(&[2, 2, 2]).unwrap(), 3).k(3), 8);
        assert_eq!(count_cliques(&petersen(), 3).k(3), 0);
        assert_eq!(brute_cliques(&petersen(), 3), 0);
    }

    #[test]
    fn first_two_entries_are_n_and_m() {
        let g = gnp(40, 0.3, 5).unwrap();
        let c = count_cliques(&g, 6);
        assert_eq!(c.k(1), 40);
        assert_eq!(c.k(2), g.m() as u64);
        assert_eq!(count_cliques(&Graph::empty(0), 3).counts(), &[0, 0, 0]);
        assert_eq!(count_cliques(&g, 0).max_size(), 0);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..30 {
            let g = gnp(11, 0.6, seed).unwrap();
            let c = count_cliques(&g, 6);
            for r in 1..=6 {
                assert_eq!(c.k(r), brute_cliques(&g, r), "seed {seed} r {r}");
            }
        }
    }

    #[test]
    fn wide_graph_crosses_word_boundaries() {
        let g = complete(70);
        let c = count_cliques(&g, 4);
        assert_eq!(c.k(3), 70 * 69 * 68 / 6);
        assert_eq!(c.k(4), 70 * 69 * 68 * 67 / 24);
    }

    #[test]
    fn participation_examples() {
        let p = edge_clique_participation(&complete(4), 3).unwrap();
        assert!(p.iter().all(|&(_, c)| c == 2));
        let p = edge_clique_participation(&complete_multipartite(&[2, 2, 2]).unwrap(), 3).unwrap();
        assert!(p.iter().all(|&(_, c)| c == 2));
        let p = edge_clique_participation(&star(5), 3).unwrap();
        assert!(p.iter().all(|&(_, c)| c == 0));
        assert_eq!(edge_clique_participation(&Graph::empty(3), 3), Err(Error::NoEdges));
        assert!(edge_clique_participation(&complete(3), 2).is_err());
    }

    #[test]
    fn participation_sums_to_binomial_times_count() {
        for seed in 0..20 {
            let g = gnp(12, 0.7, seed).unwrap();
            if g.m() == 0 {
                continue;
            }
            let c = count_cliques(&g, 5);
            for r in 3..=5 {
                let s: u64 = edge_clique_participation(&g, r).unwrap().iter().map(|x| x.1).sum();
                assert_eq!(s, (r * (r - 1) / 2) as u64 * c.k(r));
            }
        }
    }

    #[test]
    fn degeneracy_order_is_permutation() {
        let g = gnp(50, 0.2, 1).unwrap();
        let mut o = degeneracy_order(&g);
        o.sort_unstable();
        assert_eq!(o, (0..50).collect::<Vec<_>>());
    }
}
