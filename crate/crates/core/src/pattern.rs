//! Small patterns and subgraph search.
//!
//! Copies are counted as injective edge-preserving maps divided by the
//! number of automorphisms. The search maps pattern vertices in an order
//! where every vertex after the first of its component has an already
//! mapped neighbour, so candidates are intersections of adjacency rows.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Rational;

/// Largest pattern order accepted by [`Pattern::new`].
pub const PATTERN_MAX: usize = 12;
/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_MAX: usize = 16;

/// A small graph with cached invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    graph: Graph,
    aut_count: u64,
    chi: usize,
    madc: Option<Rational>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.n() > PATTERN_MAX {
            return Err(Error::cap("pattern order", PATTERN_MAX, graph.n()));
        }
        let aut_count = injective_count(&graph, &graph) as u64;
        let chi = chromatic_number(&graph)?;
        let madc = if graph.m() > 0 { Some(madc_of(&graph)) } else { None };
        Ok(Pattern {
            graph,
            aut_count,
            chi,
            madc,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `v(F)`
    pub fn order(&self) -> usize {
        self.graph.n()
    }

    /// `e(F)`
    pub fn size(&self) -> usize {
        self.graph.m()
    }

    pub fn aut_count(&self) -> u64 {
        self.aut_count
    }

    pub fn chromatic_number(&self) -> usize {
        self.chi
    }

    /// Maximum average degree; `None` when the pattern has no edges.
    pub fn max_avg_degree(&self) -> Option<Rational> {
        self.madc
    }
}

/// Order in which pattern vertices are mapped, plus for each position the
/// earlier positions adjacent to it.
struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl Plan {
    fn new(f: &Graph) -> Plan {
        let n = f.n();
        let deg = f.degrees();
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| {
                    (links[a], deg[a])
                        .cmp(&(links[b], deg[b]))
                        .then(b.cmp(&a))
                })
                .expect("unplaced vertex");
            placed[v] = true;
            order.push(v);
            for w in f.neighbors(v) {
                links[w] += 1;
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = f.neighbors(v).map(|w| pos[w]).filter(|&j| j < i).collect();
                b.sort_unstable();
                b
            })
            .collect();
        Plan { order, back }
    }
}

/// Backtracking state for maps from a pattern into a host graph.
struct Search<'a> {
    plan: Plan,
    host: &'a Graph,
    injective: bool,
    images: Vec<usize>,
    used: Vec<u64>,
    all: Vec<u64>,
    bufs: Vec<Vec<u64>>,
}

impl<'a> Search<'a> {
    fn new(f: &Graph, host: &'a Graph, injective: bool) -> Self {
        let w = host.words();
        let mut all = vec![0u64; w];
        bitset::fill(&mut all, host.n());
        Search {
            plan: Plan::new(f),
            host,
            injective,
            images: vec![0; f.n()],
            used: vec![0; w],
            all,
            bufs: vec![vec![0; w]; f.n()],
        }
    }

    fn candidates(&mut self, depth: usize) {
        let buf = &mut self.bufs[depth];
        buf.copy_from_slice(&self.all);
        for &j in &self.plan.back[depth] {
            bitset::and_assign(buf, self.host.row(self.images[j]));
        }
        if self.injective {
            bitset::and_not_assign(buf, &self.used);
        }
    }

    fn count(&mut self, depth: usize) -> u128 {
        self.candidates(depth);
        if depth + 1 == self.plan.order.len() {
            return bitset::count(&self.bufs[depth]) as u128;
        }
        let cand = core::mem::take(&mut self.bufs[depth]);
        let mut total = 0;
        for c in bitset::ones(&cand) {
            self.images[depth] = c;
            bitset::set(&mut self.used, c);
            total += self.count(depth + 1);
            bitset::clear(&mut self.used, c);
        }
        self.bufs[depth] = cand;
        total
    }

    /// Calls `visit` with `map[pattern vertex] = host vertex` for each map.
    fn visit<F>(&mut self, depth: usize, map: &mut [usize], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.plan.order.len() {
            return visit(map);
        }
        self.candidates(depth);
        let cand = core::mem::take(&mut self.bufs[depth]);
        let v = self.plan.order[depth];
        let mut flow = ControlFlow::Continue(());
        for c in bitset::ones(&cand) {
            self.images[depth] = c;
            map[v] = c;
            bitset::set(&mut self.used, c);
            flow = self.visit(depth + 1, map, visit);
            bitset::clear(&mut self.used, c);
            if flow.is_break() {
                break;
            }
        }
        self.bufs[depth] = cand;
        flow
    }
}

/// Number of injective edge-preserving maps `f -> g`.
pub fn injective_count(f: &Graph, g: &Graph) -> u128 {
    if f.n() == 0 {
        return 1;
    }
    if f.n() > g.n() {
        return 0;
    }
    Search::new(f, g, true).count(0)
}

/// Visits every injective edge-preserving map `f -> g` until `visit` breaks.
pub fn for_each_embedding<F>(f: &Graph, g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if f.n() > g.n() {
        return ControlFlow::Continue(());
    }
    let mut map = vec![0; f.n()];
    Search::new(f, g, true).visit(0, &mut map, &mut visit)
}

/// `N(F, G)`: copies of `f` in `g` as (not necessarily induced) subgraphs.
pub fn count_copies(f: &Pattern, g: &Graph) -> Result<u64> {
    if f.order() == 0 {
        return Err(Error::EmptyPattern);
    }
    let maps = injective_count(f.graph(), g);
    let aut = f.aut_count() as u128;
    debug_assert_eq!(maps % aut, 0);
    Ok((maps / aut) as u64)
}

/// True iff `g` has no subgraph isomorphic to `f`; stops at the first embedding.
pub fn is_free(f: &Pattern, g: &Graph) -> bool {
    for_each_embedding(f.graph(), g, |_| ControlFlow::Break(())).is_continue()
}

/// One entry per copy of `f` in `g`: the host edges of that copy, sorted.
///
/// Copies are distinct subgraphs, so two maps that differ by an automorphism
/// of `f` yield one entry. Intended for patterns without isolated vertices.
pub fn enumerate_copies(f: &Pattern, g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = f.graph().edges().collect();
    let mut seen = BTreeSet::new();
    let _ = for_each_embedding(f.graph(), g, |map| {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map[a], map[b]);
                if x < y { (x, y) } else { (y, x) }
            })
            .collect();
        e.sort_unstable();
        seen.insert(e);
        ControlFlow::Continue(())
    });
    seen.into_iter().collect()
}

/// True iff some edge-preserving (not necessarily injective) map `f -> t`
/// exists, i.e. `f` is a subgraph of a blow-up of `t`.
pub fn hom_exists(f: &Pattern, t: &Pattern) -> bool {
    if f.order() == 0 {
        return true;
    }
    if t.order() == 0 {
        return false;
    }
    let mut s = Search::new(f.graph(), t.graph(), false);
    let mut map = vec![0; f.order()];
    s.visit(0, &mut map, &mut |_| ControlFlow::Break(())).is_break()
}

/// Exact chromatic number by incremental k-colourability backtracking.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > CHROMATIC_MAX {
        return Err(Error::cap("graph order for chromatic number", CHROMATIC_MAX, g.n()));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let order = Plan::new(g).order;
    let mut colors = vec![usize::MAX; g.n()];
    let mut k = 2;
    while !colorable(g, &order, 0, k, 0, &mut colors) {
        k += 1;
    }
    Ok(k)
}

fn colorable(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // New colours are introduced in increasing order only.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|w| colors[w] != c) {
            colors[v] = c;
            if colorable(g, order, i + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Maximum of `2 e(F0) / v(F0)` over subgraphs with at least one edge.
///
/// Only induced subgraphs need checking: removing edges from a vertex set
/// can only lower the ratio.
pub fn max_avg_degree(f: &Pattern) -> Result<Rational> {
    f.max_avg_degree().ok_or(Error::NoEdges)
}

fn madc_of(f: &Graph) -> Rational {
    let n = f.n();
    let rows: Vec<u64> = (0..n).map(|v| f.row(v)[0]).collect();
    let mut best = Rational::from_integer(0);
    for mask in 1u64..(1 << n) {
        let mut twice_e = 0i64;
        for v in bitset::ones(&[mask]) {
            twice_e += (rows[v] & mask).count_ones() as i64;
        }
        if twice_e > 0 {
            let r = Rational::new(twice_e, mask.count_ones() as i64);
            if r > best {
                best = r;
            }
        }
    }
    best
}
