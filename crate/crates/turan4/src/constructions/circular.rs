//! Circular construction over a cyclic sequence of bipartitioned
//! 4-graphs. Part `i` contributes the block `W_i = head_i x tail_{i+1}`
//! and three edge families:
//!
//! - `E1(i)`: quadruples in `W_i ∪ W_{i+1}` touching exactly one row of
//!   `W_i`, whose projections (tail coordinate on the `W_i` side, head
//!   coordinate on the `W_{i+1}` side) form an edge of `G_{i+1}`;
//! - `E2(i)`: two vertices from each of two distinct rows of `W_i`;
//! - `E4(i)`: four distinct rows of `W_i` whose head coordinates form
//!   an edge of `G_i` inside `head_i`.
//!
//! If `alpha(G_i) = a_i + 1` and `alpha(G_i ∩ head_i) <= a_i`, the
//! result has independence number at most `sum a_i`.

use std::collections::BTreeSet;

use crate::hypergraph::{FourGraph, Label, Vertex};
use crate::solver::{alpha_exact, SolveBudget};

use super::{zero_sum_cube, Build, BuildError, FamilyAccumulator};

#[derive(Clone, Debug)]
pub struct CircularPart {
    pub graph: FourGraph,
    /// The primed class (rows of the block this part heads).
    pub head: Vec<Vertex>,
    /// The double-primed class (columns of the previous block).
    pub tail: Vec<Vertex>,
    /// `a_i` with `alpha(graph) = a_i + 1`.
    pub alpha_minus: usize,
}

#[derive(Clone, Debug)]
pub struct CircularSpec {
    pub parts: Vec<CircularPart>,
}

impl CircularSpec {
    /// Validates the partition and both solver-checkable hypotheses.
    pub fn new(parts: Vec<CircularPart>) -> Result<Self, BuildError> {
        if parts.len() < 2 {
            return Err(BuildError::MTooSmall {
                m: parts.len(),
                reason: "the circular construction needs at least 2 parts".into(),
            });
        }
        for (i, p) in parts.iter().enumerate() {
            let mut seen: BTreeSet<Vertex> = BTreeSet::new();
            for &v in p.head.iter().chain(p.tail.iter()) {
                if (v as usize) >= p.graph.n() || !seen.insert(v) {
                    return Err(BuildError::PartitionMismatch { i });
                }
            }
            if seen.len() != p.graph.n() {
                return Err(BuildError::PartitionMismatch { i });
            }
            let whole = alpha_exact(&p.graph, SolveBudget::unbounded());
            if whole.alpha != p.alpha_minus + 1 {
                return Err(BuildError::HypothesisViolated {
                    i,
                    reason: format!(
                        "alpha(G_{i}) = {} but alpha_minus + 1 = {}",
                        whole.alpha,
                        p.alpha_minus + 1
                    ),
                });
            }
            let (head_sub, _) = p.graph.induced(&p.head)?;
            let head_alpha = alpha_exact(&head_sub, SolveBudget::unbounded()).alpha;
            if head_alpha > p.alpha_minus {
                return Err(BuildError::HypothesisViolated {
                    i,
                    reason: format!(
                        "alpha(G_{i} ∩ head) = {head_alpha} exceeds alpha_minus = {}",
                        p.alpha_minus
                    ),
                });
            }
        }
        Ok(CircularSpec { parts })
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the per-part alpha budgets; the certified upper bound on
    /// the independence number of the built graph.
    pub fn alpha_bound(&self) -> usize {
        self.parts.iter().map(|p| p.alpha_minus).sum()
    }
}

/// Dense vertex ids: blocks in order, block `i` laid out row-major as
/// `head_i x tail_{i+1}`.
struct Layout {
    block_offset: Vec<usize>,
    total: usize,
}

impl Layout {
    fn build(spec: &CircularSpec) -> Self {
        let m = spec.m();
        let mut block_offset = Vec::with_capacity(m);
        let mut total = 0usize;
        for i in 0..m {
            block_offset.push(total);
            total += spec.parts[i].head.len() * spec.parts[(i + 1) % m].tail.len();
        }
        Layout { block_offset, total }
    }

    fn id(&self, spec: &CircularSpec, block: usize, row: usize, col: usize) -> Vertex {
        let tail_len = spec.parts[(block + 1) % spec.m()].tail.len();
        (self.block_offset[block] + row * tail_len + col) as Vertex
    }
}

/// Materialize the circular construction.
pub fn circular_build(spec: &CircularSpec) -> Result<Build, BuildError> {
    let m = spec.m();
    let layout = Layout::build(spec);
    let mut acc = FamilyAccumulator::new(layout.total);

    for i in 0..m {
        let part = &spec.parts[i];
        let next = &spec.parts[(i + 1) % m];
        let after = &spec.parts[(i + 2) % m];
        let head = &part.head;
        let next_tail = &next.tail;
        let after_tail_len = after.tail.len();

        // E1(i): for each edge e of G_{i+1}, split e into its head part
        // P (matched by W_{i+1} rows) and tail part Q (matched inside
        // one row of W_i); |P| = 4 would leave the W_i side empty.
        let mut e1: Vec<[Vertex; 4]> = Vec::new();
        for e in next.graph.edges() {
            let p_side: Vec<usize> = e
                .iter()
                .filter_map(|v| next.head.iter().position(|h| h == v))
                .collect();
            let q_side: Vec<usize> = e
                .iter()
                .filter_map(|v| next.tail.iter().position(|t| t == v))
                .collect();
            if p_side.len() == 4 {
                continue;
            }
            debug_assert_eq!(p_side.len() + q_side.len(), 4);
            for row in 0..head.len() {
                // the W_i side is forced; the W_{i+1} side ranges over
                // all column choices per head vertex of the edge
                let base: Vec<Vertex> =
                    q_side.iter().map(|&col| layout.id(spec, i, row, col)).collect();
                let mut cols = vec![0usize; p_side.len()];
                loop {
                    let mut quad: Vec<Vertex> = base.clone();
                    for (pi, &prow) in p_side.iter().enumerate() {
                        quad.push(layout.id(spec, (i + 1) % m, prow, cols[pi]));
                    }
                    let mut q = [quad[0], quad[1], quad[2], quad[3]];
                    q.sort_unstable();
                    e1.push(q);
                    // odometer over cols
                    let mut carry = true;
                    for c in cols.iter_mut() {
                        if carry {
                            *c += 1;
                            if *c == after_tail_len {
                                *c = 0;
                            } else {
                                carry = false;
                            }
                        }
                    }
                    if carry || p_side.is_empty() {
                        break;
                    }
                }
            }
        }
        acc.family(&format!("E1({i})"), e1);

        // E2(i): two full-row pairs from two distinct rows
        let mut e2 = Vec::new();
        let ncols = next_tail.len();
        for r1 in 0..head.len() {
            for r2 in r1 + 1..head.len() {
                for c1 in 0..ncols {
                    for c2 in c1 + 1..ncols {
                        for c3 in 0..ncols {
                            for c4 in c3 + 1..ncols {
                                e2.push([
                                    layout.id(spec, i, r1, c1),
                                    layout.id(spec, i, r1, c2),
                                    layout.id(spec, i, r2, c3),
                                    layout.id(spec, i, r2, c4),
                                ]);
                            }
                        }
                    }
                }
            }
        }
        acc.family(&format!("E2({i})"), e2);

        // E4(i): head edges of G_i fanned over all column choices
        let mut e4 = Vec::new();
        for e in part.graph.edges() {
            let rows: Vec<usize> = e
                .iter()
                .filter_map(|v| head.iter().position(|h| h == v))
                .collect();
            if rows.len() != 4 {
                continue;
            }
            let mut cols = [0usize; 4];
            loop {
                let quad = [
                    layout.id(spec, i, rows[0], cols[0]),
                    layout.id(spec, i, rows[1], cols[1]),
                    layout.id(spec, i, rows[2], cols[2]),
                    layout.id(spec, i, rows[3], cols[3]),
                ];
                e4.push(quad);
                let mut carry = true;
                for c in cols.iter_mut() {
                    if carry {
                        *c += 1;
                        if *c == ncols {
                            *c = 0;
                        } else {
                            carry = false;
                        }
                    }
                }
                if carry {
                    break;
                }
            }
        }
        acc.family(&format!("E4({i})"), e4);
    }

    let mut labels = Vec::with_capacity(layout.total);
    for i in 0..m {
        let head = &spec.parts[i].head;
        let tail = &spec.parts[(i + 1) % m].tail;
        for &x in head {
            for &y in tail {
                labels.push(Label(vec![i as u32, x, y]));
            }
        }
    }
    Ok(acc.finish(labels))
}

/// Closed-form edge count of the circular construction, evaluated
/// symbolically from part shapes: for each `i`, edges of `G_i` grouped
/// by head-intersection size `j` contribute `|head_{i-1}| * |tail_{i+1}|^j`,
/// plus the two product terms.
pub fn eq2_edge_count(spec: &CircularSpec) -> u128 {
    let m = spec.m();
    let mut total: u128 = 0;
    for i in 0..m {
        let part = &spec.parts[i];
        let prev_head = spec.parts[(i + m - 1) % m].head.len() as u128;
        let next_tail = spec.parts[(i + 1) % m].tail.len() as u128;

        let mut by_j = [0u128; 4];
        let mut head_edges = 0u128;
        for e in part.graph.edges() {
            let j = e.iter().filter(|v| part.head.contains(v)).count();
            if j == 4 {
                head_edges += 1;
            } else {
                by_j[j] += 1;
            }
        }
        for (j, cnt) in by_j.iter().enumerate() {
            total += prev_head * cnt * next_tail.pow(j as u32);
        }
        let c2 = |x: u128| x * x.saturating_sub(1) / 2;
        total += c2(part.head.len() as u128) * c2(next_tail) * c2(next_tail);
        total += head_edges * next_tail.pow(4);
    }
    total
}

/// The worked circular example: `m` copies of the zero-sum cube, each
/// split by the leading bit. Every block has 16 vertices and the three
/// families count 772, 216 and 256 per index.
pub fn zcube_circular_spec(m: usize) -> Result<CircularSpec, BuildError> {
    let g = zero_sum_cube().into_graph();
    let parts = (0..m)
        .map(|_| CircularPart {
            graph: g.clone(),
            head: (0..4).collect(),
            tail: (4..8).collect(),
            alpha_minus: 3,
        })
        .collect();
    CircularSpec::new(parts)
}
