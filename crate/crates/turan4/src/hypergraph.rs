//! Canonical representation and algebra of 4-uniform hypergraphs.
//!
//! A [`FourGraph`] is a vertex count plus a lexicographically sorted,
//! duplicate-free list of 4-element edges; every constructor
//! re-canonicalizes, so two graphs are equal iff they compare equal
//! field-wise. Vertex indices are dense 0-based integers (the solver
//! wants bitsets); construction provenance lives in the separate label
//! vector of a [`LabeledFourGraph`], which survives serialization but
//! never participates in graph algebra.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: u64, n: usize },
    #[error("edge {0:?} must have exactly 4 distinct vertices")]
    EdgeArityNot4(Vec<u64>),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCountMismatch { labels: usize, n: usize },
    #[error("labels must be pairwise distinct (duplicate at vertex {0})")]
    DuplicateLabel(usize),
    #[error("labels must have uniform arity (vertex {0} differs)")]
    MixedLabelArity(usize),
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
}

/// 4-uniform hypergraph in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FourGraph {
    n: usize,
    edges: Vec<[Vertex; 4]>,
}

impl FourGraph {
    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        FourGraph { n, edges: Vec::new() }
    }

    /// Complete 4-graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        let n4 = n as Vertex;
        for a in 0..n4 {
            for b in a + 1..n4 {
                for c in b + 1..n4 {
                    for d in c + 1..n4 {
                        edges.push([a, b, c, d]);
                    }
                }
            }
        }
        FourGraph { n, edges }
    }

    /// Canonical graph from arbitrary edge input. Each edge must list 4
    /// distinct in-range vertices (in any order); duplicate edges
    /// collapse to one.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        let mut set: BTreeSet<[Vertex; 4]> = BTreeSet::new();
        for e in edges {
            let e = e.as_ref();
            if e.len() != 4 {
                return Err(GraphError::EdgeArityNot4(e.iter().map(|&v| v as u64).collect()));
            }
            let mut q = [e[0], e[1], e[2], e[3]];
            q.sort_unstable();
            if q[0] == q[1] || q[1] == q[2] || q[2] == q[3] {
                return Err(GraphError::EdgeArityNot4(e.iter().map(|&v| v as u64).collect()));
            }
            if q[3] as usize >= n {
                return Err(GraphError::IndexOutOfRange { index: q[3] as u64, n });
            }
            set.insert(q);
        }
        Ok(FourGraph { n, edges: set.into_iter().collect() })
    }

    /// Like [`FourGraph::from_edges`] for edges that are already known
    /// to be valid quadruples (still sorts and dedups).
    pub fn from_quads(n: usize, quads: Vec<[Vertex; 4]>) -> Self {
        Self::from_edges(n, quads.iter().map(|q| &q[..])).expect("invalid quadruple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[Vertex; 4]] {
        &self.edges
    }

    pub fn contains_edge(&self, q: &[Vertex; 4]) -> bool {
        let mut s = *q;
        s.sort_unstable();
        self.edges.binary_search(&s).is_ok()
    }

    fn check_subset(&self, a: &[Vertex]) -> Result<(), GraphError> {
        for &v in a {
            if v as usize >= self.n {
                return Err(GraphError::IndexOutOfRange { index: v as u64, n: self.n });
            }
        }
        Ok(())
    }

    /// Subgraph induced by the vertex subset `a`, reindexed to dense
    /// indices `0..a.len()`. The second component maps old indices to
    /// new ones (`None` for dropped vertices).
    pub fn induced(&self, a: &[Vertex]) -> Result<(FourGraph, Vec<Option<Vertex>>), GraphError> {
        self.check_subset(a)?;
        let keep: BTreeSet<Vertex> = a.iter().copied().collect();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old as usize] = Some(new as Vertex);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| keep.contains(v)))
            .map(|e| {
                let mut q = [0; 4];
                for (slot, &v) in q.iter_mut().zip(e.iter()) {
                    *slot = old_to_new[v as usize].unwrap();
                }
                q
            })
            .collect();
        Ok((FourGraph { n: keep.len(), edges }, old_to_new))
    }

    /// Subgraph induced by the complement of `a`.
    pub fn remove(&self, a: &[Vertex]) -> Result<(FourGraph, Vec<Option<Vertex>>), GraphError> {
        self.check_subset(a)?;
        let drop: BTreeSet<Vertex> = a.iter().copied().collect();
        let rest: Vec<Vertex> = (0..self.n as Vertex).filter(|v| !drop.contains(v)).collect();
        self.induced(&rest)
    }

    /// Disjoint union; vertex indices of part `j` are offset by the
    /// total vertex count of the earlier parts.
    pub fn disjoint_union(parts: &[FourGraph]) -> FourGraph {
        let n = parts.iter().map(|g| g.n).sum();
        let mut edges = Vec::with_capacity(parts.iter().map(|g| g.edges.len()).sum());
        let mut offset: Vertex = 0;
        for g in parts {
            for e in &g.edges {
                edges.push([e[0] + offset, e[1] + offset, e[2] + offset, e[3] + offset]);
            }
            offset += g.n as Vertex;
        }
        // parts are canonical and offsets increase, so the result is
        // already sorted and duplicate-free
        FourGraph { n, edges }
    }

    /// Number of edges with at least one vertex in `a`.
    pub fn edges_meeting(&self, a: &[Vertex]) -> Result<usize, GraphError> {
        self.check_subset(a)?;
        let set: BTreeSet<Vertex> = a.iter().copied().collect();
        Ok(self.edges.iter().filter(|e| e.iter().any(|v| set.contains(v))).count())
    }
}

impl fmt::Debug for FourGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FourGraph(n={}, e={})", self.n, self.edges.len())
    }
}

/// Structured per-vertex label: a small tuple of coordinates from the
/// construction that produced the vertex, e.g. `(i, x, y, z)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label(pub Vec<u32>);

impl Label {
    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[macro_export]
macro_rules! label {
    ($($c:expr),+ $(,)?) => { $crate::hypergraph::Label(vec![$($c as u32),+]) };
}

/// A [`FourGraph`] plus one structured label per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledFourGraph {
    graph: FourGraph,
    labels: Vec<Label>,
}

impl LabeledFourGraph {
    pub fn new(graph: FourGraph, labels: Vec<Label>) -> Result<Self, GraphError> {
        if labels.len() != graph.n() {
            return Err(GraphError::LabelCountMismatch { labels: labels.len(), n: graph.n() });
        }
        if let Some(first) = labels.first() {
            let arity = first.arity();
            for (i, l) in labels.iter().enumerate() {
                if l.arity() != arity {
                    return Err(GraphError::MixedLabelArity(i));
                }
            }
            let mut seen = BTreeSet::new();
            for (i, l) in labels.iter().enumerate() {
                if !seen.insert(l) {
                    return Err(GraphError::DuplicateLabel(i));
                }
            }
        }
        Ok(LabeledFourGraph { graph, labels })
    }

    pub fn graph(&self) -> &FourGraph {
        &self.graph
    }

    pub fn into_graph(self) -> FourGraph {
        self.graph
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Vertex index carrying the given label, if any.
    pub fn index_of(&self, label: &Label) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label).map(|i| i as Vertex)
    }
}

// --- serialization ------------------------------------------------------

/// JSON mirror of the text format: `{n, edges, labels}`.
#[derive(Serialize, Deserialize)]
struct GraphWire {
    n: usize,
    edges: Vec<[Vertex; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Vec<u32>>>,
}

/// Text format ("t4g"):
///
/// ```text
/// n 8
/// e 14
/// 0 1 2 3
/// ...
/// # label 0 (0,0)
/// ```
///
/// Unrecognized `#` lines are ignored by the parser, so writers may put
/// run metadata in leading comments.
pub fn to_t4g(g: &FourGraph, labels: Option<&[Label]>) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", g.n()));
    out.push_str(&format!("e {}\n", g.edge_count()));
    for e in g.edges() {
        out.push_str(&format!("{} {} {} {}\n", e[0], e[1], e[2], e[3]));
    }
    if let Some(labels) = labels {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("# label {i} {l}\n"));
        }
    }
    out
}

pub fn parse_t4g(text: &str) -> Result<(FourGraph, Option<Vec<Label>>), GraphError> {
    let mut n: Option<usize> = None;
    let mut expected_e: Option<usize> = None;
    let mut edges: Vec<[Vertex; 4]> = Vec::new();
    let mut labels: Vec<(usize, Label)> = Vec::new();
    let err = |line: usize, msg: &str| GraphError::ParseError { line, msg: msg.to_string() };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(spec) = rest.strip_prefix("label ") {
                let (i_str, tuple) = spec
                    .split_once(' ')
                    .ok_or_else(|| err(lineno, "malformed label line"))?;
                let i: usize = i_str.parse().map_err(|_| err(lineno, "bad label index"))?;
                let tuple = tuple.trim();
                let inner = tuple
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| err(lineno, "label tuple must be parenthesized"))?;
                let coords: Result<Vec<u32>, _> =
                    inner.split(',').map(|c| c.trim().parse::<u32>()).collect();
                let coords = coords.map_err(|_| err(lineno, "bad label coordinate"))?;
                labels.push((i, Label(coords)));
            }
            continue;
        }
        if let Some(v) = line.strip_prefix("n ") {
            n = Some(v.trim().parse().map_err(|_| err(lineno, "bad vertex count"))?);
            continue;
        }
        if let Some(v) = line.strip_prefix("e ") {
            expected_e = Some(v.trim().parse().map_err(|_| err(lineno, "bad edge count"))?);
            continue;
        }
        let parts: Result<Vec<Vertex>, _> = line.split_whitespace().map(|t| t.parse()).collect();
        let parts = parts.map_err(|_| err(lineno, "bad edge line"))?;
        if parts.len() != 4 {
            return Err(err(lineno, "edge line must have 4 indices"));
        }
        edges.push([parts[0], parts[1], parts[2], parts[3]]);
    }

    let n = n.ok_or_else(|| err(0, "missing 'n' header"))?;
    let g = FourGraph::from_edges(n, edges.iter().map(|e| &e[..]))?;
    if let Some(e) = expected_e {
        if e != g.edge_count() {
            return Err(err(0, "edge count header does not match edge lines"));
        }
    }
    let labels = if labels.is_empty() {
        None
    } else {
        if labels.len() != n {
            return Err(GraphError::LabelCountMismatch { labels: labels.len(), n });
        }
        labels.sort_by_key(|(i, _)| *i);
        if labels.iter().enumerate().any(|(pos, (i, _))| pos != *i) {
            return Err(err(0, "label indices must cover 0..n"));
        }
        Some(labels.into_iter().map(|(_, l)| l).collect())
    };
    Ok((g, labels))
}

pub fn to_json(g: &FourGraph, labels: Option<&[Label]>) -> String {
    let wire = GraphWire {
        n: g.n(),
        edges: g.edges().to_vec(),
        labels: labels.map(|ls| ls.iter().map(|l| l.0.clone()).collect()),
    };
    serde_json::to_string(&wire).expect("graph serialization cannot fail")
}

pub fn parse_json(text: &str) -> Result<(FourGraph, Option<Vec<Label>>), GraphError> {
    let wire: GraphWire = serde_json::from_str(text)
        .map_err(|e| GraphError::ParseError { line: 0, msg: e.to_string() })?;
    let g = FourGraph::from_edges(wire.n, wire.edges.iter().map(|e| &e[..]))?;
    let labels = wire.labels.map(|ls| ls.into_iter().map(Label).collect());
    Ok((g, labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 8-vertex graph whose edges are the zero-XOR quadruples of
    /// 3-bit vertex indices; used across the test suite.
    pub fn zero_sum_cube() -> FourGraph {
        let quads: Vec<[Vertex; 4]> = (0u32..8)
            .flat_map(|a| (a + 1..8).flat_map(move |b| {
                ((b + 1)..8).flat_map(move |c| ((c + 1)..8).map(move |d| [a, b, c, d]))
            }))
            .filter(|q| q[0] ^ q[1] ^ q[2] ^ q[3] == 0)
            .collect();
        FourGraph::from_quads(8, quads)
    }

    #[test]
    fn from_edges_canonicalizes() {
        let g = FourGraph::from_edges(5, [[3u32, 2, 1, 0], [0, 1, 2, 3]]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), &[[0, 1, 2, 3]]);
        let k4 = FourGraph::from_edges(4, [[0u32, 1, 2, 3]]).unwrap();
        assert_eq!(k4.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            FourGraph::from_edges(4, [[0u32, 1, 2, 4]]),
            Err(GraphError::IndexOutOfRange { index: 4, n: 4 })
        );
        assert!(matches!(
            FourGraph::from_edges(5, [[0u32, 1, 2, 2]]),
            Err(GraphError::EdgeArityNot4(_))
        ));
        assert!(matches!(
            FourGraph::from_edges(5, [vec![0u32, 1, 2]]),
            Err(GraphError::EdgeArityNot4(_))
        ));
    }

    #[test]
    fn zero_sum_cube_has_14_edges() {
        assert_eq!(zero_sum_cube().edge_count(), 14);
    }

    #[test]
    fn induced_examples() {
        let k5 = FourGraph::complete(5);
        let (sub, _) = k5.induced(&[0, 2, 3, 4]).unwrap();
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(sub.n(), 4);

        // vertices {1,2,3,4} 1-based = {0,1,2,3} 0-based form an edge
        let h = zero_sum_cube();
        let (sub, map) = h.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(map[0], Some(0));
        assert_eq!(map[7], None);

        let (empty, _) = h.induced(&[]).unwrap();
        assert_eq!(empty.n(), 0);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn remove_is_identity_on_empty_set() {
        let h = zero_sum_cube();
        let (same, _) = h.remove(&[]).unwrap();
        assert_eq!(same, h);
    }

    #[test]
    fn remove_meets_edge_accounting() {
        let h = zero_sum_cube();
        let a = [0u32, 5];
        let (rest, _) = h.remove(&a).unwrap();
        assert_eq!(rest.edge_count() + h.edges_meeting(&a).unwrap(), h.edge_count());
    }

    #[test]
    fn disjoint_union_adds() {
        let single = FourGraph::from_edges(5, [[0u32, 1, 2, 3]]).unwrap();
        let u = FourGraph::disjoint_union(&[single.clone(), single]);
        assert_eq!(u.n(), 10);
        assert_eq!(u.edge_count(), 2);
        assert!(u.contains_edge(&[5, 6, 7, 8]));

        let k5 = FourGraph::complete(5);
        let u = FourGraph::disjoint_union(&[k5.clone(), k5]);
        assert_eq!((u.n(), u.edge_count()), (10, 10));

        let none = FourGraph::disjoint_union(&[]);
        assert_eq!(none.n(), 0);
    }

    #[test]
    fn t4g_round_trip() {
        let h = zero_sum_cube();
        let labels: Vec<Label> = (0..8).map(|i| Label(vec![i as u32 & 3, i as u32 >> 2])).collect();
        let text = to_t4g(&h, Some(&labels));
        let (h2, l2) = parse_t4g(&text).unwrap();
        assert_eq!(h2, h);
        assert_eq!(l2.as_deref(), Some(&labels[..]));
        // canonical text is a fixed point
        assert_eq!(to_t4g(&h2, l2.as_deref()), text);
    }

    #[test]
    fn json_round_trip() {
        let h = zero_sum_cube();
        let text = to_json(&h, None);
        let (h2, l2) = parse_json(&text).unwrap();
        assert_eq!(h2, h);
        assert!(l2.is_none());
        assert_eq!(to_json(&h2, None), text);
    }

    #[test]
    fn labeled_graph_invariants() {
        let g = FourGraph::empty(2);
        let err = LabeledFourGraph::new(g.clone(), vec![Label(vec![0]), Label(vec![0])]);
        assert_eq!(err, Err(GraphError::DuplicateLabel(1)));
        let err = LabeledFourGraph::new(g.clone(), vec![Label(vec![0]), Label(vec![0, 1])]);
        assert_eq!(err, Err(GraphError::MixedLabelArity(1)));
        let err = LabeledFourGraph::new(g, vec![Label(vec![0])]);
        assert_eq!(err, Err(GraphError::LabelCountMismatch { labels: 1, n: 2 }));
    }
}
