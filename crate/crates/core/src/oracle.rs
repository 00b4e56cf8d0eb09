//! Exhaustive ground truth for tiny extremal problems.
//!
//! Graphs are generated one edge at a time, one representative per
//! isomorphism class: a child is kept only when deleting its canonically
//! largest edge gives back its parent's class. Children containing the
//! forbidden pattern are dropped, which loses nothing because every
//! subgraph of an `F`-free graph is `F`-free.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{count_copies, is_free, Pattern};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX: usize = 16;
/// Largest `m` for edge-count searches.
pub const MEX_MAX_EDGES: usize = 8;
/// Largest `n` for vertex-count searches.
pub const EX_MAX_VERTICES: usize = 8;
/// Largest `n` for the unfiltered vertex-count cross-check.
pub const EX_BRUTE_MAX_VERTICES: usize = 7;

/// Canonical form and the labeling producing it: `labels[v]` is the
/// canonical position of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub form: Vec<u8>,
    pub labels: Vec<usize>,
}

/// A byte string equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_labeling(g)?.form)
}

/// Components are labeled separately and ordered by size, then by form.
/// Within a component, vertices are placed in non-increasing degree order and
/// the upper-triangle adjacency string, read column by column, is maximized.
pub fn canonical_labeling(g: &Graph) -> Result<Canonical> {
    let n = g.n();
    if n > CANON_MAX {
        return Err(Error::cap("graph order", CANON_MAX, n));
    }
    let mut parts: Vec<(usize, Vec<u16>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let local: Vec<u32> = comp
                .iter()
                .map(|&v| {
                    comp.iter()
                        .enumerate()
                        .filter(|&(_, &w)| g.has_edge(v, w))
                        .fold(0u32, |acc, (i, _)| acc | 1 << i)
                })
                .collect();
            let (cols, order) = Search::new(&local).run();
            let order: Vec<usize> = order.into_iter().map(|i| comp[i]).collect();
            (comp.len(), cols, order)
        })
        .collect();
    parts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let mut form = vec![n as u8];
    let mut labels = vec![0; n];
    let mut next = 0;
    for (k, cols, order) in &parts {
        form.push(*k as u8);
        for c in cols {
            form.extend_from_slice(&c.to_be_bytes());
        }
        for &v in order {
            labels[v] = next;
            next += 1;
        }
    }
    Ok(Canonical { form, labels })
}

/// `g` relabeled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Result<(Vec<u8>, Graph)> {
    let c = canonical_labeling(g)?;
    Ok((c.form, g.relabel(&c.labels)))
}

/// Branch and bound over degree-respecting orders of one component.
struct Search<'a> {
    adj: &'a [u32],
    deg: Vec<u32>,
    /// Degree required at each position.
    slot: Vec<u32>,
    order: Vec<usize>,
    cols: Vec<u16>,
    best_cols: Vec<u16>,
    best_order: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Prefix {
    Equal,
    Greater,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u32]) -> Self {
        let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
        let mut slot = deg.clone();
        slot.sort_unstable_by(|a, b| b.cmp(a));
        Search {
            adj,
            deg,
            slot,
            order: Vec::with_capacity(adj.len()),
            cols: Vec::with_capacity(adj.len()),
            best_cols: Vec::new(),
            best_order: Vec::new(),
        }
    }

    fn run(mut self) -> (Vec<u16>, Vec<usize>) {
        self.go(0, Prefix::Greater);
        // column 0 is always empty
        self.best_cols.remove(0);
        (self.best_cols, self.best_order)
    }

    fn col(&self, v: usize) -> u16 {
        let j = self.order.len();
        self.order
            .iter()
            .enumerate()
            .filter(|&(_, &u)| self.adj[u] >> v & 1 == 1)
            .fold(0u16, |acc, (i, _)| acc | 1 << (j - 1 - i))
    }

    /// Returns true if the best string was replaced somewhere below.
    fn go(&mut self, j: usize, state: Prefix) -> bool {
        let k = self.adj.len();
        if j == k {
            if state == Prefix::Greater {
                self.best_cols.clone_from(&self.cols);
                self.best_order.clone_from(&self.order);
                return true;
            }
            return false;
        }
        let placed = self.order.iter().fold(0u32, |acc, &v| acc | 1 << v);
        let mut cands: Vec<(u16, usize)> = (0..k)
            .filter(|&v| placed >> v & 1 == 0 && self.deg[v] == self.slot[j])
            .map(|v| (self.col(v), v))
            .collect();
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut state = state;
        let mut updated = false;
        let mut tried: Vec<usize> = Vec::new();
        for (col, v) in cands {
            // swapping two unplaced twins is an automorphism fixing the prefix
            let twin = tried.iter().any(|&u| {
                self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
            });
            if twin {
                continue;
            }
            tried.push(v);
            let child = match state {
                Prefix::Greater => Prefix::Greater,
                Prefix::Equal => match col.cmp(&self.best_cols[j]) {
                    core::cmp::Ordering::Less => break,
                    core::cmp::Ordering::Equal => Prefix::Equal,
                    core::cmp::Ordering::Greater => Prefix::Greater,
                },
            };
            self.order.push(v);
            self.cols.push(col);
            if self.go(j + 1, child) {
                updated = true;
                state = Prefix::Equal;
            }
            self.order.pop();
            self.cols.pop();
        }
        updated
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Graphs with exactly `m` edges and no isolated vertices.
    Mex { m: usize },
    /// Graphs on exactly `n` vertices.
    Ex { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleQuery {
    pub mode: OracleMode,
    pub target: Pattern,
    pub forbidden: Pattern,
    pub max_edges: usize,
    pub max_vertices: usize,
}

impl OracleQuery {
    /// Default caps: `max_edges = 8`, `max_vertices = min(2m, 16)`.
    pub fn mex(m: usize, target: Pattern, forbidden: Pattern) -> Self {
        OracleQuery {
            mode: OracleMode::Mex { m },
            target,
            forbidden,
            max_edges: MEX_MAX_EDGES,
            max_vertices: (2 * m).min(CANON_MAX),
        }
    }

    pub fn ex(n: usize, target: Pattern, forbidden: Pattern) -> Self {
        OracleQuery {
            mode: OracleMode::Ex { n },
            target,
            forbidden,
            max_edges: n * n.saturating_sub(1) / 2,
            max_vertices: n,
        }
    }

    pub fn run(&self) -> Result<OracleResult> {
        match self.mode {
            OracleMode::Mex { .. } => mex_exact(self),
            OracleMode::Ex { n } => ex_exact(n, &self.target, &self.forbidden),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: u64,
    /// The maximizer with the least canonical form, in canonical labeling.
    pub witness: Graph,
    /// Candidate graphs built, including rejected ones.
    pub graphs_examined: u64,
    /// `F`-free isomorphism classes over which the maximum was taken.
    pub iso_classes_examined: u64,
}

fn check_forbidden(f: &Pattern) -> Result<()> {
    if f.order() < 3 && f.size() == 0 {
        return Err(Error::invalid("forbidden pattern needs an edge or at least 3 vertices"));
    }
    Ok(())
}

struct Best {
    value: u64,
    form: Vec<u8>,
    witness: Option<Graph>,
}

impl Best {
    fn new() -> Self {
        Best {
            value: 0,
            form: Vec::new(),
            witness: None,
        }
    }

    fn offer(&mut self, value: u64, form: &[u8], g: &Graph) {
        let better = match &self.witness {
            None => true,
            Some(_) => value > self.value || (value == self.value && form < self.form.as_slice()),
        };
        if better {
            self.value = value;
            self.form = form.to_vec();
            self.witness = Some(g.clone());
        }
    }
}

/// Last edge of a canonically labeled graph.
fn canonical_edge(c: &Graph) -> (usize, usize) {
    c.edges().last().expect("graph has an edge")
}

/// `mex(m, target, forbidden)` over graphs with exactly `m` edges.
pub fn mex_exact(q: &OracleQuery) -> Result<OracleResult> {
    let OracleMode::Mex { m } = q.mode else {
        return Err(Error::invalid("query is not an edge-count query"));
    };
    if q.max_edges > MEX_MAX_EDGES {
        return Err(Error::cap("edge cap", MEX_MAX_EDGES, q.max_edges));
    }
    if m > q.max_edges {
        return Err(Error::cap("edge count m", q.max_edges, m));
    }
    if m == 0 {
        return Err(Error::invalid("m must be at least 1"));
    }
    if q.max_vertices > CANON_MAX {
        return Err(Error::cap("vertex cap", CANON_MAX, q.max_vertices));
    }
    if q.target.size() == 0 {
        return Err(Error::NoEdges);
    }
    check_forbidden(&q.forbidden)?;

    let mut examined = 0u64;
    let mut level: Vec<(Vec<u8>, Graph)> = Vec::new();
    if q.max_vertices >= 2 {
        let k2 = Graph::from_edges(2, &[(0, 1)])?;
        examined += 1;
        if is_free(&q.forbidden, &k2) {
            level.push(canonical_graph(&k2)?);
        }
    }
    for _ in 1..m {
        let mut next = Vec::new();
        for (pform, parent) in &level {
            let mut seen = BTreeSet::new();
            for child in mex_children(parent, q.max_vertices) {
                examined += 1;
                if !is_free(&q.forbidden, &child) {
                    continue;
                }
                let (form, c) = canonical_graph(&child)?;
                if seen.contains(&form) {
                    continue;
                }
                let (a, b) = canonical_edge(&c);
                let mut back = c.clone();
                back.remove_edge(a, b);
                let (back, _) = back.without_isolated();
                if canonical_form(&back)? == *pform {
                    seen.insert(form.clone());
                    next.push((form, c));
                }
            }
        }
        level = next;
    }
    finish(level, &q.target, examined)
}

fn mex_children(p: &Graph, max_vertices: usize) -> Vec<Graph> {
    let n = p.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !p.has_edge(u, v) {
                let mut c = p.clone();
                c.add_edge(u, v);
                out.push(c);
            }
        }
    }
    if n < max_vertices {
        for u in 0..n {
            let mut c = p.disjoint_union(&Graph::empty(1));
            c.add_edge(u, n);
            out.push(c);
        }
    }
    if n + 2 <= max_vertices {
        let mut c = p.disjoint_union(&Graph::empty(2));
        c.add_edge(n, n + 1);
        out.push(c);
    }
    out
}

fn finish(classes: Vec<(Vec<u8>, Graph)>, target: &Pattern, examined: u64) -> Result<OracleResult> {
    let mut best = Best::new();
    for (form, g) in &classes {
        best.offer(count_copies(target, g)?, form, g);
    }
    let witness = best.witness.ok_or(Error::NoFeasibleGraph)?;
    Ok(OracleResult {
        value: best.value,
        witness,
        graphs_examined: examined,
        iso_classes_examined: classes.len() as u64,
    })
}

/// `ex(n, target, forbidden)` over all graphs on `n` vertices.
pub fn ex_exact(n: usize, target: &Pattern, forbidden: &Pattern) -> Result<OracleResult> {
    if n > EX_MAX_VERTICES {
        return Err(Error::cap("vertex count n", EX_MAX_VERTICES, n));
    }
    if target.order() == 0 {
        return Err(Error::EmptyPattern);
    }
    check_forbidden(forbidden)?;
    let empty = Graph::empty(n);
    let mut examined = 1u64;
    if !is_free(forbidden, &empty) {
        return Err(Error::NoFeasibleGraph);
    }
    let mut level = vec![canonical_graph(&empty)?];
    let mut all = level.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for (pform, parent) in &level {
            let mut seen = BTreeSet::new();
            for u in 0..n {
                for v in u + 1..n {
                    if parent.has_edge(u, v) {
                        continue;
                    }
                    let mut child = parent.clone();
                    child.add_edge(u, v);
                    examined += 1;
                    if !is_free(forbidden, &child) {
                        continue;
                    }
                    let (form, c) = canonical_graph(&child)?;
                    if seen.contains(&form) {
                        continue;
                    }
                    let (a, b) = canonical_edge(&c);
                    let mut back = c.clone();
                    back.remove_edge(a, b);
                    if canonical_form(&back)? == *pform {
                        seen.insert(form.clone());
                        next.push((form, c));
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    finish(all, target, examined)
}

/// Edge-count maximum by scanning every `m`-subset of the edges of
/// `K_{min(2m, max_vertices)}`, with no isomorph rejection.
pub fn mex_brute(m: usize, target: &Pattern, forbidden: &Pattern, max_vertices: usize) -> Result<u64> {
    if m == 0 || m > MEX_MAX_EDGES {
        return Err(Error::invalid("m must be in 1..=8"));
    }
    if target.size() == 0 {
        return Err(Error::NoEdges);
    }
    check_forbidden(forbidden)?;
    let n = (2 * m).min(max_vertices);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut best: Option<u64> = None;
    let mut pick: Vec<usize> = (0..m).collect();
    if pairs.len() < m {
        return Err(Error::NoFeasibleGraph);
    }
    loop {
        let edges: Vec<(usize, usize)> = pick.iter().map(|&i| pairs[i]).collect();
        let (g, _) = Graph::from_edges(n, &edges)?.without_isolated();
        if is_free(forbidden, &g) {
            let v = count_copies(target, &g)?;
            best = Some(best.map_or(v, |b| b.max(v)));
        }
        if !next_combination(&mut pick, pairs.len()) {
            break;
        }
    }
    best.ok_or(Error::NoFeasibleGraph)
}

/// Vertex-count maximum over all `2^{C(n,2)}` labeled graphs.
pub fn ex_brute(n: usize, target: &Pattern, forbidden: &Pattern) -> Result<u64> {
    if n > EX_BRUTE_MAX_VERTICES {
        return Err(Error::cap("vertex count n", EX_BRUTE_MAX_VERTICES, n));
    }
    check_forbidden(forbidden)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut best: Option<u64> = None;
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges)?;
        if is_free(forbidden, &g) {
            let v = count_copies(target, &g)?;
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    }
    best.ok_or(Error::NoFeasibleGraph)
}

/// Advances `pick` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
