//! Exact independence and transversal numbers of 4-graphs.
//!
//! Two engines back every α claim in the crate:
//!
//! - [`alpha_bruteforce`] - subset enumeration in decreasing size order
//!   with early exit; the oracle, enforced to n <= 24.
//! - [`alpha_exact`] - bitset branch-and-bound with unit propagation and
//!   a disjoint-constraint upper bound; exact on unbounded budgets,
//!   degrades to a certified lower bound (`LowerBoundOnly`) when a node
//!   or wall-time cap is hit.
//!
//! The search is sequential and fully deterministic: the branch vertex
//! is the maximum-degree residual vertex (ties to the lowest index) and
//! the exclude branch is explored first.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{FourGraph, GraphError, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("brute force is limited to 24 vertices (got {0})")]
    TooLargeForBruteForce(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SolveStatus {
    /// The returned alpha is the independence number.
    Exact,
    /// Budget exhausted; the returned witness is still a valid
    /// independent set, so alpha is a certified lower bound.
    LowerBoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaResult {
    pub alpha: usize,
    pub witness: Vec<Vertex>,
    pub status: SolveStatus,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
}

/// Node and wall-time caps for [`alpha_exact`]; absent caps mean
/// unbounded search.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveBudget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl SolveBudget {
    pub fn unbounded() -> Self {
        SolveBudget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SolveBudget { max_nodes: Some(max_nodes), max_seconds: None }
    }

    /// Default policy: unbounded up to 48 vertices, 10^8 nodes above.
    pub fn default_for(n: usize) -> Self {
        if n <= 48 {
            SolveBudget::unbounded()
        } else {
            SolveBudget::nodes(100_000_000)
        }
    }
}

// --- bitsets --------------------------------------------------------------

/// Growable word-array bitset; all solver state lives in these.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

fn subset_mask(n: usize, a: &[Vertex]) -> Result<BitSet, GraphError> {
    let mut m = BitSet::new(n);
    for &v in a {
        if v as usize >= n {
            return Err(GraphError::IndexOutOfRange { index: v as u64, n });
        }
        m.insert(v as usize);
    }
    Ok(m)
}

/// True iff no edge of `h` lies entirely inside `a`.
pub fn is_independent(h: &FourGraph, a: &[Vertex]) -> Result<bool, SolveError> {
    let mask = subset_mask(h.n(), a)?;
    Ok(!h.edges().iter().any(|e| e.iter().all(|&v| mask.contains(v as usize))))
}

// --- brute force oracle ----------------------------------------------------

/// Exact alpha by enumerating subsets in decreasing size order.
pub fn alpha_bruteforce(h: &FourGraph) -> Result<AlphaResult, SolveError> {
    let n = h.n();
    if n > 24 {
        return Err(SolveError::TooLargeForBruteForce(n));
    }
    let edge_masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut nodes = 0u64;
    for size in (0..=n).rev() {
        let mut found = None;
        for_each_subset(n, size, |mask| {
            nodes += 1;
            if edge_masks.iter().all(|&em| em & mask != em) {
                found = Some(mask);
                true
            } else {
                false
            }
        });
        if let Some(mask) = found {
            let witness = (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
            return Ok(AlphaResult { alpha: size, witness, status: SolveStatus::Exact, nodes_explored: nodes });
        }
    }
    unreachable!("the empty set is always independent")
}

/// Visit all `size`-subsets of `0..n` as bitmasks (Gosper's hack),
/// stopping early when the callback returns true.
fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(u32) -> bool) {
    if size == 0 {
        f(0);
        return;
    }
    if size > n {
        return;
    }
    let limit: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut mask: u32 = (1 << size) - 1;
    loop {
        if f(mask) {
            return;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if mask > limit {
            return;
        }
    }
}

/// True iff every `size`-subset of vertices contains an edge
/// (exhaustive check; the positive form of "alpha < size").
pub fn no_independent_of_size(h: &FourGraph, size: usize) -> Result<bool, SolveError> {
    let n = h.n();
    if n > 24 {
        return Err(SolveError::TooLargeForBruteForce(n));
    }
    let edge_masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut all_covered = true;
    for_each_subset(n, size, |mask| {
        if edge_masks.iter().all(|&em| em & mask != em) {
            all_covered = false;
            true
        } else {
            false
        }
    });
    Ok(all_covered)
}

// --- branch and bound ------------------------------------------------------

struct SearchGraph {
    n: usize,
    /// edge -> its 4 vertices
    edge_verts: Vec<[Vertex; 4]>,
    /// vertex -> incident edge ids
    incidence: Vec<Vec<u32>>,
}

impl SearchGraph {
    fn build(h: &FourGraph) -> Self {
        let n = h.n();
        let edge_verts: Vec<[Vertex; 4]> = h.edges().to_vec();
        let mut incidence = vec![Vec::new(); n];
        for (ei, e) in edge_verts.iter().enumerate() {
            for &v in e {
                incidence[v as usize].push(ei as u32);
            }
        }
        SearchGraph { n, edge_verts, incidence }
    }
}

struct Search<'a> {
    g: &'a SearchGraph,
    selected: BitSet,
    excluded: BitSet,
    sel_cnt: Vec<u8>,
    exc_cnt: Vec<u16>,
    /// per-vertex count of live constraints (edges with no excluded
    /// vertex and at most 2 selected), maintained incrementally
    deg: Vec<u32>,
    /// bitset of live constraints, kept in lockstep with `deg`
    live: BitSet,
    arity_scratch: [Vec<u32>; 3],
    n_selected: usize,
    n_free: usize,
    best: usize,
    best_witness: Vec<Vertex>,
    nodes: u64,
    truncated: bool,
    max_nodes: u64,
    deadline: Option<Instant>,
    used_scratch: BitSet,
}

enum Move {
    Select(u32),
    Exclude(u32),
}

impl<'a> Search<'a> {
    fn new(g: &'a SearchGraph, budget: SolveBudget) -> Self {
        Search {
            g,
            selected: BitSet::new(g.n),
            excluded: BitSet::new(g.n),
            sel_cnt: vec![0; g.edge_verts.len()],
            exc_cnt: vec![0; g.edge_verts.len()],
            deg: (0..g.n).map(|v| g.incidence[v].len() as u32).collect(),
            live: {
                let mut all = BitSet::new(g.edge_verts.len());
                for e in 0..g.edge_verts.len() {
                    all.insert(e);
                }
                all
            },
            arity_scratch: Default::default(),
            n_selected: 0,
            n_free: g.n,
            best: 0,
            best_witness: Vec::new(),
            nodes: 0,
            truncated: false,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: None,
            used_scratch: BitSet::new(g.n),
        }
    }

    fn is_free(&self, v: usize) -> bool {
        !self.selected.contains(v) && !self.excluded.contains(v)
    }

    fn retire_edge(&mut self, e: usize) {
        self.live.remove(e);
        for &w in &self.g.edge_verts[e] {
            self.deg[w as usize] -= 1;
        }
    }

    fn revive_edge(&mut self, e: usize) {
        self.live.insert(e);
        for &w in &self.g.edge_verts[e] {
            self.deg[w as usize] += 1;
        }
    }

    fn apply(&mut self, mv: &Move) {
        match *mv {
            Move::Select(v) => {
                self.selected.insert(v as usize);
                self.n_selected += 1;
                self.n_free -= 1;
                for i in 0..self.g.incidence[v as usize].len() {
                    let e = self.g.incidence[v as usize][i] as usize;
                    if self.exc_cnt[e] == 0 && self.sel_cnt[e] == 2 {
                        self.retire_edge(e);
                    }
                    self.sel_cnt[e] += 1;
                }
            }
            Move::Exclude(v) => {
                self.excluded.insert(v as usize);
                self.n_free -= 1;
                for i in 0..self.g.incidence[v as usize].len() {
                    let e = self.g.incidence[v as usize][i] as usize;
                    if self.exc_cnt[e] == 0 && self.sel_cnt[e] <= 2 {
                        self.retire_edge(e);
                    }
                    self.exc_cnt[e] += 1;
                }
            }
        }
    }

    fn undo(&mut self, mv: &Move) {
        match *mv {
            Move::Select(v) => {
                self.selected.remove(v as usize);
                self.n_selected -= 1;
                self.n_free += 1;
                for i in 0..self.g.incidence[v as usize].len() {
                    let e = self.g.incidence[v as usize][i] as usize;
                    self.sel_cnt[e] -= 1;
                    if self.exc_cnt[e] == 0 && self.sel_cnt[e] == 2 {
                        self.revive_edge(e);
                    }
                }
            }
            Move::Exclude(v) => {
                self.excluded.remove(v as usize);
                self.n_free += 1;
                for i in 0..self.g.incidence[v as usize].len() {
                    let e = self.g.incidence[v as usize][i] as usize;
                    self.exc_cnt[e] -= 1;
                    if self.exc_cnt[e] == 0 && self.sel_cnt[e] <= 2 {
                        self.revive_edge(e);
                    }
                }
            }
        }
    }

    /// Selecting `v` is legal iff it completes no live edge.
    fn can_select(&self, v: usize) -> bool {
        self.g.incidence[v]
            .iter()
            .all(|&e| self.exc_cnt[e as usize] > 0 || self.sel_cnt[e as usize] < 3)
    }

    fn budget_exceeded(&self) -> bool {
        if self.nodes >= self.max_nodes {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(1024) && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }

    fn record_if_better(&mut self, extra_free: bool) {
        let total = self.n_selected + if extra_free { self.n_free } else { 0 };
        if total > self.best {
            self.best = total;
            let mut w: Vec<Vertex> = self.selected.iter_ones().map(|v| v as Vertex).collect();
            if extra_free {
                w.extend((0..self.g.n).filter(|&v| self.is_free(v)).map(|v| v as Vertex));
            }
            w.sort_unstable();
            self.best_witness = w;
        }
    }

    /// Upper bound on reachable set size: free vertices minus a greedy
    /// packing of vertex-disjoint live constraints. A live edge with k
    /// selected vertices restricts its 4-k free vertices to at most
    /// 3-k picks, i.e. costs one. Smaller residual arities pack first.
    fn upper_bound(&mut self) -> usize {
        for bucket in &mut self.arity_scratch {
            bucket.clear();
        }
        for ei in self.live.iter_ones() {
            let arity = 4 - self.sel_cnt[ei] as usize;
            debug_assert!((2..=4).contains(&arity));
            self.arity_scratch[arity - 2].push(ei as u32);
        }
        let buckets = std::mem::take(&mut self.arity_scratch);
        let used = &mut self.used_scratch;
        for w in &mut used.words {
            *w = 0;
        }
        let mut packed = 0usize;
        for bucket in &buckets {
            'edges: for &ei in bucket {
                let e = &self.g.edge_verts[ei as usize];
                for &v in e {
                    let v = v as usize;
                    if !self.selected.contains(v) && used.contains(v) {
                        continue 'edges;
                    }
                }
                for &v in e {
                    let v = v as usize;
                    if !self.selected.contains(v) {
                        used.insert(v);
                    }
                }
                packed += 1;
            }
        }
        self.arity_scratch = buckets;
        self.n_free - packed
    }

    /// Max-degree free vertex, degree counted over live constraints;
    /// returns None when no live constraint touches a free vertex.
    fn pick_branch_vertex(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for v in 0..self.g.n {
            if self.deg[v] == 0 || !self.is_free(v) {
                continue;
            }
            match best {
                Some((bd, _)) if bd >= self.deg[v] => {}
                _ => best = Some((self.deg[v], v)),
            }
        }
        best.map(|(_, v)| v)
    }

    fn dive(&mut self) {
        self.nodes += 1;
        if self.budget_exceeded() {
            self.truncated = true;
            return;
        }

        let bound = self.n_selected + self.upper_bound();
        if bound <= self.best {
            return;
        }
        match self.pick_branch_vertex() {
            None => {
                // no live constraints touch a free vertex: all of them
                // join the selection
                self.record_if_better(true);
            }
            Some(v) => {
                self.record_if_better(false);
                let mv = Move::Exclude(v as u32);
                self.apply(&mv);
                self.dive();
                self.undo(&mv);

                if !self.truncated && self.can_select(v) {
                    let mv = Move::Select(v as u32);
                    self.apply(&mv);
                    // unit propagation: edges of v that reached 3
                    // selected vertices force their free vertex out
                    // (excludes never cascade further)
                    let mut forced: Vec<Move> = Vec::new();
                    for i in 0..self.g.incidence[v].len() {
                        let e = self.g.incidence[v][i] as usize;
                        if self.exc_cnt[e] > 0 || self.sel_cnt[e] != 3 {
                            continue;
                        }
                        let u = self.g.edge_verts[e]
                            .iter()
                            .copied()
                            .find(|&u| self.is_free(u as usize))
                            .expect("a live 3-selected edge has one free vertex");
                        let fmv = Move::Exclude(u);
                        self.apply(&fmv);
                        forced.push(fmv);
                    }
                    self.dive();
                    for fmv in forced.iter().rev() {
                        self.undo(fmv);
                    }
                    self.undo(&mv);
                }
            }
        }
    }
}

/// Deterministic greedy independent set; the initial incumbent.
fn greedy_seed(g: &SearchGraph) -> Vec<Vertex> {
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| (g.incidence[v].len(), v));
    let mut cnt = vec![0u8; g.edge_verts.len()];
    let mut chosen = Vec::new();
    for v in order {
        if g.incidence[v].iter().all(|&e| cnt[e as usize] < 3) {
            chosen.push(v as Vertex);
            for &e in &g.incidence[v] {
                cnt[e as usize] += 1;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Certified independence number under a budget.
pub fn alpha_exact(h: &FourGraph, budget: SolveBudget) -> AlphaResult {
    let g = SearchGraph::build(h);
    let mut search = Search::new(&g, budget);
    if let Some(secs) = budget.max_seconds {
        search.deadline = Some(Instant::now() + std::time::Duration::from_secs_f64(secs));
    }
    // greedy incumbent: the search then only has to beat it or prove
    // it optimal
    let seed = greedy_seed(&g);
    search.best = seed.len();
    search.best_witness = seed;
    search.dive();
    let status = if search.truncated { SolveStatus::LowerBoundOnly } else { SolveStatus::Exact };
    debug_assert!(is_independent(h, &search.best_witness).unwrap());
    AlphaResult {
        alpha: search.best,
        witness: search.best_witness,
        status,
        nodes_explored: search.nodes,
    }
}

/// Transversal number `v(H) - alpha(H)`, with the same status semantics
/// as [`alpha_exact`] (for `LowerBoundOnly` the value is an upper bound
/// on tau).
pub fn tau(h: &FourGraph, budget: SolveBudget) -> (usize, SolveStatus) {
    let r = alpha_exact(h, budget);
    (h.n() - r.alpha, r.status)
}

/// Transversal bound `tau(H) <= (5 v(H) + 4 e(H)) / 21` that every
/// exact solve must satisfy.
pub fn thomasse_yeo_holds(h: &FourGraph, alpha: usize) -> bool {
    let tau = (h.n() - alpha) as u64;
    21 * tau <= 5 * h.n() as u64 + 4 * h.edge_count() as u64
}
