//! Two-part parity construction: vertex classes `X` (size n) and `Y`
//! (size m) and a binary matrix `A`. Edges are all quadruples inside
//! `X`, all quadruples inside `Y`, and the mixed quadruples
//! `{x_i, x_j, y_k, y_l}` whose 2x2 minor `a_ik + a_il + a_jk + a_jl`
//! is even. Any 5 vertices contain an edge, so alpha <= 4 for every
//! matrix; a random matrix keeps roughly 1/2 of the mixed quadruples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{Label, Vertex};

use super::{Build, FamilyAccumulator};

#[derive(Clone, Debug)]
pub struct ParitySpec {
    pub n: usize,
    pub m: usize,
    matrix: Vec<Vec<u8>>,
}

impl ParitySpec {
    /// All-zero matrix: every mixed quadruple is an edge.
    pub fn zero(n: usize, m: usize) -> Self {
        ParitySpec { n, m, matrix: vec![vec![0; m]; n] }
    }

    /// Matrix with independent fair-coin entries drawn from `seed`.
    pub fn seeded(n: usize, m: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let matrix = (0..n).map(|_| (0..m).map(|_| rng.gen_range(0..2u8)).collect()).collect();
        ParitySpec { n, m, matrix }
    }

    /// Explicit matrix; dimensions must be n x m with 0/1 entries.
    pub fn explicit(matrix: Vec<Vec<u8>>) -> Option<Self> {
        let n = matrix.len();
        let m = matrix.first().map_or(0, |r| r.len());
        if matrix.iter().any(|r| r.len() != m || r.iter().any(|&b| b > 1)) {
            return None;
        }
        Some(ParitySpec { n, m, matrix })
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    fn minor_even(&self, i: usize, j: usize, k: usize, l: usize) -> bool {
        (self.matrix[i][k] + self.matrix[i][l] + self.matrix[j][k] + self.matrix[j][l]).is_multiple_of(2)
    }
}

/// Build the two-part graph. Vertices `0..n` are the `X` class
/// (labels `(0, i)`), vertices `n..n+m` the `Y` class (labels `(1, k)`).
pub fn parity_construction(spec: &ParitySpec) -> Build {
    let (n, m) = (spec.n, spec.m);
    let total = n + m;
    let mut acc = FamilyAccumulator::new(total);

    acc.family("E40", quadruples_within(0, n));
    acc.family("E04", quadruples_within(n, m));

    let mut mixed = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..m {
                for l in k + 1..m {
                    if spec.minor_even(i, j, k, l) {
                        mixed.push([
                            i as Vertex,
                            j as Vertex,
                            (n + k) as Vertex,
                            (n + l) as Vertex,
                        ]);
                    }
                }
            }
        }
    }
    acc.family("E22", mixed);

    let labels = (0..n)
        .map(|i| Label(vec![0, i as u32]))
        .chain((0..m).map(|k| Label(vec![1, k as u32])))
        .collect();
    acc.finish(labels)
}

fn quadruples_within(offset: usize, size: usize) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            for c in b + 1..size {
                for d in c + 1..size {
                    out.push([
                        (offset + a) as Vertex,
                        (offset + b) as Vertex,
                        (offset + c) as Vertex,
                        (offset + d) as Vertex,
                    ]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::no_independent_of_size;

    #[test]
    fn zero_matrix_counts() {
        // n=m=3: no within-class quadruples, all 9 mixed quadruples even
        let b = parity_construction(&ParitySpec::zero(3, 3));
        assert_eq!(b.four_graph().edge_count(), 9);
        assert_eq!(b.census.get("E22"), Some(9));

        // n=m=4: 1 + 1 + C(4,2)^2 = 38
        let b = parity_construction(&ParitySpec::zero(4, 4));
        assert_eq!(b.four_graph().edge_count(), 38);
    }

    #[test]
    fn every_five_subset_contains_an_edge() {
        for seed in 0..5u64 {
            let b = parity_construction(&ParitySpec::seeded(4, 5, seed));
            assert!(no_independent_of_size(b.four_graph(), 5).unwrap(), "seed {seed}");
        }
        // degenerate shapes
        let b = parity_construction(&ParitySpec::zero(0, 0));
        assert_eq!(b.four_graph().n(), 0);
        let b = parity_construction(&ParitySpec::seeded(5, 0, 1));
        assert_eq!(b.four_graph().edge_count(), 5);
    }

    #[test]
    fn eight_by_eight_seeded_has_alpha_at_most_four() {
        // exhaustive over all C(16,5) subsets
        let b = parity_construction(&ParitySpec::seeded(8, 8, 7));
        assert!(no_independent_of_size(b.four_graph(), 5).unwrap());
    }

    #[test]
    fn seeded_matrix_is_reproducible() {
        let a = parity_construction(&ParitySpec::seeded(6, 6, 7));
        let b = parity_construction(&ParitySpec::seeded(6, 6, 7));
        assert_eq!(a.four_graph(), b.four_graph());
        let c = parity_construction(&ParitySpec::seeded(6, 6, 8));
        assert_ne!(a.four_graph(), c.four_graph());
    }

    #[test]
    fn explicit_matrix_validation() {
        assert!(ParitySpec::explicit(vec![vec![0, 1], vec![1, 0]]).is_some());
        assert!(ParitySpec::explicit(vec![vec![0, 1], vec![1]]).is_none());
        assert!(ParitySpec::explicit(vec![vec![0, 2]]).is_none());
    }
}
