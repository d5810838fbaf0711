//! Blow-up expansion of a host 4-graph. Each host vertex `w` becomes a
//! part `V_w`; a critical subset is a vertex set whose removal lowers
//! the host's independence number. With two critical subsets per vertex
//! (and a flag `d(w)` recording whether removing both drops alpha by 2)
//! the expansion has independence number at most `alpha(host) + 1`.
//!
//! Edge families:
//! - `E1111`: host edges fanned over the four parts;
//! - `E22`: 2+2 over every unordered pair of parts;
//! - `E31`: a triple inside `V_w` plus one vertex from a part of
//!   `I_w^0` or `I_w^1`, routed by the parity of the triple against the
//!   internal split;
//! - `internal`: inside each part, a complete 4-graph when `d(w) = 0`
//!   and the two-part parity graph (zero matrix, halves as equal as
//!   possible) when `d(w) = 1`.

use crate::hypergraph::{FourGraph, Label, Vertex};
use crate::solver::{alpha_exact, SolveBudget};

use super::{Build, BuildError, FamilyAccumulator};

#[derive(Clone, Debug)]
pub struct ExpansionSpec {
    host: FourGraph,
    host_alpha: usize,
    crit0: Vec<Vec<Vertex>>,
    crit1: Vec<Vec<Vertex>>,
    d: Vec<bool>,
    sizes: Vec<usize>,
}

impl ExpansionSpec {
    /// Validate a spec with the solver: both subsets of every vertex
    /// must be critical and avoid the vertex, and `d(w) = 1` requires
    /// removing their union to drop alpha by at least 2.
    pub fn new(
        host: FourGraph,
        crit0: Vec<Vec<Vertex>>,
        crit1: Vec<Vec<Vertex>>,
        d: Vec<bool>,
        sizes: Vec<usize>,
    ) -> Result<Self, BuildError> {
        let n = host.n();
        assert!(
            crit0.len() == n && crit1.len() == n && d.len() == n && sizes.len() == n,
            "per-vertex arrays must have host length"
        );
        assert!(sizes.iter().all(|&s| s >= 1), "part sizes must be positive");
        let host_alpha = alpha_exact(&host, SolveBudget::unbounded()).alpha;
        for w in 0..n as Vertex {
            for set in [&crit0[w as usize], &crit1[w as usize]] {
                if set.contains(&w) {
                    return Err(BuildError::InvalidCriticalSet {
                        w,
                        reason: "subset contains the vertex itself".into(),
                    });
                }
                let (sub, _) = host.remove(set)?;
                let alpha = alpha_exact(&sub, SolveBudget::unbounded()).alpha;
                if alpha >= host_alpha {
                    return Err(BuildError::InvalidCriticalSet {
                        w,
                        reason: format!("alpha stays at {alpha} after removal"),
                    });
                }
            }
            if d[w as usize] {
                let both: Vec<Vertex> = {
                    let mut u = crit0[w as usize].clone();
                    u.extend_from_slice(&crit1[w as usize]);
                    u.sort_unstable();
                    u.dedup();
                    u
                };
                let (sub, _) = host.remove(&both)?;
                let alpha_after = alpha_exact(&sub, SolveBudget::unbounded()).alpha;
                if alpha_after + 2 > host_alpha {
                    return Err(BuildError::DFlagUnjustified { w, alpha_after });
                }
            }
        }
        Ok(ExpansionSpec { host, host_alpha, crit0, crit1, d, sizes })
    }

    /// Convenience spec in the style of the worked example: for every
    /// vertex take the first two host edges avoiding it as critical
    /// subsets, flag `d(w)` from what the solver certifies, and use a
    /// uniform part size.
    pub fn edges_as_critical_sets(host: &FourGraph, part_size: usize) -> Result<Self, BuildError> {
        let n = host.n();
        let host_alpha = alpha_exact(host, SolveBudget::unbounded()).alpha;
        let mut crit0 = Vec::with_capacity(n);
        let mut crit1 = Vec::with_capacity(n);
        let mut d = Vec::with_capacity(n);
        for w in 0..n as Vertex {
            let mut avoiding = host.edges().iter().filter(|e| !e.contains(&w));
            let (e0, e1) = match (avoiding.next(), avoiding.next()) {
                (Some(a), Some(b)) => (a.to_vec(), b.to_vec()),
                _ => {
                    return Err(BuildError::InvalidCriticalSet {
                        w,
                        reason: "fewer than two host edges avoid this vertex".into(),
                    })
                }
            };
            let both: Vec<Vertex> = {
                let mut u = e0.clone();
                u.extend_from_slice(&e1);
                u.sort_unstable();
                u.dedup();
                u
            };
            let (sub, _) = host.remove(&both)?;
            let alpha_after = alpha_exact(&sub, SolveBudget::unbounded()).alpha;
            d.push(alpha_after + 2 <= host_alpha);
            crit0.push(e0);
            crit1.push(e1);
        }
        ExpansionSpec::new(host.clone(), crit0, crit1, d, vec![part_size; n])
    }

    pub fn host(&self) -> &FourGraph {
        &self.host
    }

    pub fn host_alpha(&self) -> usize {
        self.host_alpha
    }

    pub fn total_vertices(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `c = sum |I_w^0|` when both subsets have equal size per vertex.
    pub fn critical_mass(&self) -> usize {
        self.crit0.iter().map(|s| s.len()).sum()
    }

    pub fn d_total(&self) -> usize {
        self.d.iter().filter(|&&f| f).count()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn crit_pair(&self, w: usize) -> (&[Vertex], &[Vertex]) {
        (&self.crit0[w], &self.crit1[w])
    }

    pub fn d_flag(&self, w: usize) -> bool {
        self.d[w]
    }
}

/// Split a part into the two internal halves (larger first).
fn halves(size: usize) -> (usize, usize) {
    (size.div_ceil(2), size / 2)
}

/// Triple parity against the internal split: 0 when the first half
/// contains an even number of the triple.
fn triple_parity(first_half: usize, t: [usize; 3]) -> usize {
    t.iter().filter(|&&j| j < first_half).count() % 2
}

/// Materialize the expansion. Labels are `(w, j)` for the `j`-th vertex
/// of part `V_w`.
pub fn expansion_build(spec: &ExpansionSpec) -> Build {
    let n = spec.host.n();
    let total = spec.total_vertices();
    let offsets: Vec<usize> = spec
        .sizes
        .iter()
        .scan(0usize, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let vid = |w: usize, j: usize| (offsets[w] + j) as Vertex;

    let mut acc = FamilyAccumulator::new(total);

    // E1111: host edges fanned over their four parts
    let mut e1111 = Vec::new();
    for e in spec.host.edges() {
        let [w, x, y, z] = [e[0] as usize, e[1] as usize, e[2] as usize, e[3] as usize];
        for a in 0..spec.sizes[w] {
            for b in 0..spec.sizes[x] {
                for c in 0..spec.sizes[y] {
                    for dd in 0..spec.sizes[z] {
                        e1111.push([vid(w, a), vid(x, b), vid(y, c), vid(z, dd)]);
                    }
                }
            }
        }
    }
    acc.family("E1111", e1111);

    // E22: 2+2 over every pair of parts
    let mut e22 = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for a in 0..spec.sizes[u] {
                for b in a + 1..spec.sizes[u] {
                    for c in 0..spec.sizes[v] {
                        for dd in c + 1..spec.sizes[v] {
                            e22.push([vid(u, a), vid(u, b), vid(v, c), vid(v, dd)]);
                        }
                    }
                }
            }
        }
    }
    acc.family("E22", e22);

    // E31: triples inside a part, one vertex from the routed critical set
    let mut e31 = Vec::new();
    for w in 0..n {
        let size = spec.sizes[w];
        let (h1, _) = halves(size);
        for a in 0..size {
            for b in a + 1..size {
                for c in b + 1..size {
                    let parity = if spec.d[w] { triple_parity(h1, [a, b, c]) } else { 0 };
                    let targets = if parity == 0 { &spec.crit0[w] } else { &spec.crit1[w] };
                    for &x in targets {
                        for dd in 0..spec.sizes[x as usize] {
                            e31.push([vid(w, a), vid(w, b), vid(w, c), vid(x as usize, dd)]);
                        }
                    }
                }
            }
        }
    }
    acc.family("E31", e31);

    // internal parts
    let mut internal = Vec::new();
    for w in 0..n {
        let size = spec.sizes[w];
        if spec.d[w] {
            let (h1, _) = halves(size);
            // two-part parity graph with the zero matrix: all
            // quadruples inside each half plus every 2+2 quadruple
            for a in 0..size {
                for b in a + 1..size {
                    for c in b + 1..size {
                        for dd in c + 1..size {
                            let in_first = [a, b, c, dd].iter().filter(|&&j| j < h1).count();
                            if in_first != 1 && in_first != 3 {
                                internal.push([vid(w, a), vid(w, b), vid(w, c), vid(w, dd)]);
                            }
                        }
                    }
                }
            }
        } else {
            for a in 0..size {
                for b in a + 1..size {
                    for c in b + 1..size {
                        for dd in c + 1..size {
                            internal.push([vid(w, a), vid(w, b), vid(w, c), vid(w, dd)]);
                        }
                    }
                }
            }
        }
    }
    acc.family("internal", internal);

    let labels = (0..n)
        .flat_map(|w| (0..spec.sizes[w]).map(move |j| Label(vec![w as u32, j as u32])))
        .collect();
    acc.finish(labels)
}

fn c2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

fn c3(x: u128) -> u128 {
    x * x.saturating_sub(1) * x.saturating_sub(2) / 6
}

fn c4(x: u128) -> u128 {
    x * x.saturating_sub(1) * x.saturating_sub(2) * x.saturating_sub(3) / 24
}

/// Closed-form edge count assembled from the four family sizes; equals
/// the census total of [`expansion_build`].
pub fn expansion_edge_count(spec: &ExpansionSpec) -> u128 {
    let n = spec.host.n();
    let sizes: Vec<u128> = spec.sizes.iter().map(|&s| s as u128).collect();
    let mut total: u128 = 0;
    for e in spec.host.edges() {
        total += e.iter().map(|&v| sizes[v as usize]).product::<u128>();
    }
    for u in 0..n {
        for v in u + 1..n {
            total += c2(sizes[u]) * c2(sizes[v]);
        }
    }
    for w in 0..n {
        let size = spec.sizes[w];
        let (h1, h2) = halves(size);
        let mass = |set: &[Vertex]| set.iter().map(|&x| sizes[x as usize]).sum::<u128>();
        if spec.d[w] {
            // even triples: 0 or 2 vertices in the first half
            let even = c3(h2 as u128) + c2(h1 as u128) * h2 as u128;
            let odd = c3(h1 as u128) + c2(h2 as u128) * h1 as u128;
            debug_assert_eq!(even + odd, c3(size as u128));
            total += even * mass(&spec.crit0[w]) + odd * mass(&spec.crit1[w]);
            total += c4(h1 as u128) + c4(h2 as u128) + c2(h1 as u128) * c2(h2 as u128);
        } else {
            total += c3(size as u128) * mass(&spec.crit0[w]);
            total += c4(size as u128);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zero_sum_cube;
    use crate::solver::{alpha_exact, SolveBudget, SolveStatus};

    #[test]
    fn example_host_all_parts_of_two() {
        let host = zero_sum_cube().into_graph();
        let spec = ExpansionSpec::edges_as_critical_sets(&host, 2).unwrap();
        assert_eq!(spec.host_alpha(), 4);
        assert_eq!(spec.d_total(), 8, "every vertex earns d=1 on this host");
        assert_eq!(spec.critical_mass(), 32);
        let b = expansion_build(&spec);
        assert_eq!(b.four_graph().n(), 16);
        assert_eq!(b.four_graph().edge_count() as u128, expansion_edge_count(&spec));
        let r = alpha_exact(b.four_graph(), SolveBudget::unbounded());
        assert_eq!(r.status, SolveStatus::Exact);
        assert!(r.alpha <= spec.host_alpha() + 1, "alpha {} too large", r.alpha);
        assert_eq!(r.alpha, 5);
    }

    #[test]
    fn closed_form_matches_enumeration_for_uniform_sizes() {
        let host = zero_sum_cube().into_graph();
        for size in 2..=6usize {
            let spec = ExpansionSpec::edges_as_critical_sets(&host, size).unwrap();
            let built = expansion_build(&spec);
            let n = size as u128;
            // 14 N^4 + C(8,2) C(N,2)^2 + 8*4*N*C(N,3) + 8*e_parity(N)
            let (h1, h2) = halves(size);
            let e_parity = c4(h1 as u128) + c4(h2 as u128) + c2(h1 as u128) * c2(h2 as u128);
            let reference =
                14 * n.pow(4) + 28 * c2(n) * c2(n) + 8 * 4 * n * c3(n) + 8 * e_parity;
            assert_eq!(built.four_graph().edge_count() as u128, reference, "N={size}");
            assert_eq!(expansion_edge_count(&spec), reference, "N={size}");
        }
    }

    #[test]
    fn irregular_part_sizes_stay_within_the_alpha_bound() {
        let host = zero_sum_cube().into_graph();
        let sizes = vec![1usize, 2, 3, 2, 1, 2, 3, 2]; // 16 vertices
        let base = ExpansionSpec::edges_as_critical_sets(&host, 1).unwrap();
        let spec = ExpansionSpec::new(
            host,
            (0..8).map(|w| base.crit_pair(w).0.to_vec()).collect(),
            (0..8).map(|w| base.crit_pair(w).1.to_vec()).collect(),
            (0..8).map(|w| base.d_flag(w)).collect(),
            sizes,
        )
        .unwrap();
        let b = expansion_build(&spec);
        assert_eq!(b.four_graph().n(), 16);
        assert_eq!(b.four_graph().edge_count() as u128, expansion_edge_count(&spec));
        let r = alpha_exact(b.four_graph(), SolveBudget::unbounded());
        assert_eq!(r.status, SolveStatus::Exact);
        assert!(r.alpha <= spec.host_alpha() + 1);
    }

    #[test]
    fn single_edge_host_has_no_usable_critical_sets() {
        let host = FourGraph::from_edges(4, [[0u32, 1, 2, 3]]).unwrap();
        let err = ExpansionSpec::edges_as_critical_sets(&host, 2);
        assert!(matches!(err, Err(BuildError::InvalidCriticalSet { .. })));
    }

    #[test]
    fn non_critical_subset_is_rejected() {
        let host = zero_sum_cube().into_graph();
        // the empty set never lowers alpha
        let crit: Vec<Vec<u32>> = vec![vec![]; 8];
        let err = ExpansionSpec::new(host, crit.clone(), crit, vec![false; 8], vec![2; 8]);
        assert!(matches!(err, Err(BuildError::InvalidCriticalSet { w: 0, .. })));
    }

    #[test]
    fn unjustified_d_flag_is_rejected() {
        let host = zero_sum_cube().into_graph();
        // use the same edge twice: removing the union only drops alpha by 1
        let mut crit0 = Vec::new();
        for w in 0..8u32 {
            let e = host.edges().iter().find(|e| !e.contains(&w)).unwrap();
            crit0.push(e.to_vec());
        }
        let err = ExpansionSpec::new(
            host.clone(),
            crit0.clone(),
            crit0.clone(),
            vec![true; 8],
            vec![2; 8],
        );
        assert!(matches!(err, Err(BuildError::DFlagUnjustified { w: 0, .. })));
        // with d = 0 the same spec is fine
        let ok = ExpansionSpec::new(host, crit0.clone(), crit0, vec![false; 8], vec![2; 8]);
        assert!(ok.is_ok());
    }
}
