//! Small fixed constructions certifying upper bounds on `T(n,6,4)`:
//! the K5-line graph (10 vertices), the paired-K6 graph (12 vertices)
//! and the `Z_2^2 + Z_2` two-block graph (16 vertices).

use crate::hypergraph::{Label, Vertex};
use crate::solver::no_independent_of_size;

use super::{Build, BuildError, FamilyAccumulator};

/// Vertices are the 10 edges of K5; hyperedges are the 5 four-arm stars
/// and the 15 four-cycles of K5 (any 5-vertex simple graph with 6 edges
/// contains one of the two). 20 edges, alpha 5.
pub fn k5_line_construction() -> Build {
    let pairs: Vec<(u32, u32)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let index = |a: u32, b: u32| -> Vertex {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap() as Vertex
    };

    let mut acc = FamilyAccumulator::new(10);

    let stars = (0..5u32).map(|c| {
        let mut q: Vec<Vertex> = (0..5u32).filter(|&x| x != c).map(|x| index(c, x)).collect();
        q.sort_unstable();
        [q[0], q[1], q[2], q[3]]
    });
    acc.family("stars", stars);

    let mut cycles = std::collections::BTreeSet::new();
    for a in 0..5u32 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                for d in c + 1..5 {
                    // the 3 distinct 4-cycles on {a,b,c,d}
                    for [p, q, r, s] in [[a, b, c, d], [a, c, b, d], [a, b, d, c]] {
                        let mut quad =
                            [index(p, q), index(q, r), index(r, s), index(s, p)];
                        quad.sort_unstable();
                        cycles.insert(quad);
                    }
                }
            }
        }
    }
    acc.family("four_cycles", cycles);

    let labels = pairs.iter().map(|&(a, b)| Label(vec![a, b])).collect();
    acc.finish(labels)
}

/// Proper 5-coloring of the edges of K6 where each color class is a
/// perfect matching (the round-robin schedule on vertices 0..4 plus 5).
fn k6_one_factorization() -> Vec<Vec<(u32, u32)>> {
    (0..5u32)
        .map(|r| {
            let mut m = vec![(r.min(5), r.max(5))];
            for i in 1..=2u32 {
                let a = (r + i) % 5;
                let b = (r + 5 - i) % 5;
                m.push((a.min(b), a.max(b)));
            }
            m
        })
        .collect()
}

/// Perfect matchings of K6 in lexicographic order. A triple of
/// quadruples covering every vertex exactly twice is the same thing as
/// the complements of a perfect matching, so these enumerate the
/// candidate quadruple systems.
fn k6_perfect_matchings() -> Vec<[(u32, u32); 3]> {
    let mut out = Vec::new();
    for b in 1..6u32 {
        let p1 = (0, b);
        let rest: Vec<u32> = (1..6).filter(|&v| v != b).collect();
        for (ci, &c) in rest.iter().enumerate().skip(1) {
            let p2 = (rest[0], c);
            let others: Vec<u32> =
                rest.iter().enumerate().filter(|&(i, _)| i != 0 && i != ci).map(|(_, &v)| v).collect();
            let p3 = (others[0], others[1]);
            out.push([p1, p2, p3]);
        }
    }
    out
}

fn quads_from_matching(m: &[(u32, u32); 3], offset: u32) -> Vec<[Vertex; 4]> {
    m.iter()
        .map(|&(a, b)| {
            let mut q: Vec<Vertex> =
                (0..6u32).filter(|&v| v != a && v != b).map(|v| v + offset).collect();
            q.sort_unstable();
            [q[0], q[1], q[2], q[3]]
        })
        .collect()
}

fn two_k6_base_cross() -> Vec<[Vertex; 4]> {
    let colors = k6_one_factorization();
    let mut cross = Vec::new();
    for m in &colors {
        for &(a, b) in m {
            for &(c, d) in m {
                cross.push([a, b, c + 6, d + 6]);
            }
        }
    }
    cross
}

fn two_k6_with(m0: &[(u32, u32); 3], m1: &[(u32, u32); 3]) -> Build {
    let mut acc = FamilyAccumulator::new(12);
    acc.family("same_color_cross", two_k6_base_cross());
    acc.family("quadruples_first", quads_from_matching(m0, 0));
    acc.family("quadruples_second", quads_from_matching(m1, 6));
    let labels = (0..2u32).flat_map(|c| (0..6u32).map(move |v| Label(vec![c, v]))).collect();
    acc.finish(labels)
}

/// Indices of (matching, matching) pairs whose graph has alpha 5,
/// in enumeration order.
fn two_k6_valid_pairs() -> Vec<(usize, usize)> {
    let matchings = k6_perfect_matchings();
    let mut valid = Vec::new();
    for (i, m0) in matchings.iter().enumerate() {
        for (j, m1) in matchings.iter().enumerate() {
            let b = two_k6_with(m0, m1);
            let g = b.four_graph();
            if no_independent_of_size(g, 6).unwrap() && !no_independent_of_size(g, 5).unwrap() {
                valid.push((i, j));
            }
        }
    }
    valid
}

pub fn two_k6_variant_count() -> usize {
    two_k6_valid_pairs().len()
}

/// Two disjoint K6 copies sharing a 1-factorization: 45 same-color
/// cross edges plus 3 quadruples per copy covering each vertex twice.
/// `variant` indexes the enumerated systems with alpha = 5.
/// 12 vertices, 51 edges.
pub fn two_k6_construction(variant: usize) -> Result<Build, BuildError> {
    let valid = two_k6_valid_pairs();
    let &(i, j) = valid
        .get(variant)
        .ok_or(BuildError::VariantOutOfRange { index: variant, count: valid.len() })?;
    let matchings = k6_perfect_matchings();
    Ok(two_k6_with(&matchings[i], &matchings[j]))
}

/// Two blocks A and B, each a copy of `Z_2^2 + Z_2` with elements
/// `(x, a)`. Quadruples of distinct vertices are edges when:
/// all in A with the x's summing to zero; all in B with the a's summing
/// to zero; an A-pair sharing x with a B-pair of distinct a; or an
/// A-pair with a B-pair of equal a and all four x's summing to zero.
/// 16 vertices, 220 edges, alpha 5.
pub fn z2cube_construction() -> Build {
    // vertex index: part*8 + x*2 + a; label (part, x, a)
    let part = |v: Vertex| v / 8;
    let x_of = |v: Vertex| (v % 8) / 2;
    let a_of = |v: Vertex| v % 2;

    let mut within_a = Vec::new();
    let mut within_b = Vec::new();
    let mut shared_x = Vec::new();
    let mut zero_sum_mixed = Vec::new();
    for p in 0..16u32 {
        for q in p + 1..16 {
            for r in q + 1..16 {
                for s in r + 1..16 {
                    let quad = [p, q, r, s];
                    let a_side: Vec<Vertex> = quad.iter().copied().filter(|&v| part(v) == 0).collect();
                    let b_side: Vec<Vertex> = quad.iter().copied().filter(|&v| part(v) == 1).collect();
                    match (a_side.len(), b_side.len()) {
                        (4, 0) => {
                            if a_side.iter().fold(0, |acc, &v| acc ^ x_of(v)) == 0 {
                                within_a.push(quad);
                            }
                        }
                        (0, 4) => {
                            if b_side.iter().fold(0, |acc, &v| acc ^ a_of(v)) == 0 {
                                within_b.push(quad);
                            }
                        }
                        (2, 2) => {
                            let same_x = x_of(a_side[0]) == x_of(a_side[1]);
                            let b_a_equal = a_of(b_side[0]) == a_of(b_side[1]);
                            if same_x && !b_a_equal {
                                shared_x.push(quad);
                            } else if b_a_equal
                                && quad.iter().fold(0, |acc, &v| acc ^ x_of(v)) == 0
                            {
                                zero_sum_mixed.push(quad);
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
    }

    let mut acc = FamilyAccumulator::new(16);
    acc.family("within_A", within_a);
    acc.family("within_B", within_b);
    acc.family("shared_x_cross", shared_x);
    acc.family("zero_sum_cross", zero_sum_mixed);

    let labels = (0..16u32).map(|v| Label(vec![part(v), x_of(v), a_of(v)])).collect();
    acc.finish(labels)
}
