//! Rainbow-coloring construction on `V' ∪ V''` where `V'` is a single
//! copy of `Z_2^2` and `V''` the space of `k`-dimensional vectors over
//! `Z_2^2`. Pairs of distinct vectors are colored by the sum of their
//! entries at the first disagreeing position; a triple is *rainbow*
//! when its three pairwise colors are distinct (equivalently, all three
//! pairwise disagreement positions coincide), and otherwise has a
//! unique *apex* vertex whose two incident positions are strictly
//! smaller.
//!
//! Four edge families make every 5-subset contain an edge (alpha = 4):
//! `E4` is `V'` itself; `E2` joins same-colored pairs across `V'` and
//! `V''`; `E1` attaches each non-rainbow triple to the two `V'`
//! elements of its pair map; `E0` is every `V''`-quadruple meeting the
//! first half of `V''` in an even count.

use crate::hypergraph::{Label, Vertex};
use crate::rational::binomial_u128;

use super::{Build, BuildError, FamilyAccumulator};

/// Largest depth the build mode materializes (4 + 4^3 = 68 vertices);
/// beyond it use [`rainbow_counts`].
pub const MAX_BUILD_DEPTH: u32 = 3;

/// Entry `i` (1-based) of a big-endian crumb vector.
fn crumb(v: u32, k: u32, i: u32) -> u32 {
    (v >> (2 * (k - i))) & 3
}

/// First disagreeing position and the color there; `None` for equal
/// vectors.
fn first_diff(a: u32, b: u32, k: u32) -> Option<(u32, u32)> {
    if a == b {
        return None;
    }
    let d = a ^ b;
    let top_bit = 31 - d.leading_zeros();
    let pos_from_low = top_bit / 2; // crumb index counted from the low end
    let i = k - pos_from_low;
    Some((i, crumb(a, k, i) ^ crumb(b, k, i)))
}

/// Classification of a `V''` triple: rainbow, or apex + pair data.
enum Triple {
    Rainbow,
    /// (apex position in the input, shared first coordinate of the
    /// non-apex pair, color of the non-apex pair)
    Apex { apex: usize, pair_first: u32, pair_color: u32 },
}

fn classify_triple(t: [u32; 3], k: u32) -> Triple {
    let (i01, _) = first_diff(t[0], t[1], k).expect("distinct");
    let (i02, _) = first_diff(t[0], t[2], k).expect("distinct");
    let (i12, _) = first_diff(t[1], t[2], k).expect("distinct");
    if i01 == i02 && i02 == i12 {
        return Triple::Rainbow;
    }
    // exactly one vertex sees the two smaller (equal) positions
    let apex = if i01 == i02 {
        0
    } else if i01 == i12 {
        1
    } else {
        debug_assert_eq!(i02, i12);
        2
    };
    let (y, z) = match apex {
        0 => (t[1], t[2]),
        1 => (t[0], t[2]),
        _ => (t[0], t[1]),
    };
    let (_, pair_color) = first_diff(y, z, k).expect("distinct");
    Triple::Apex { apex, pair_first: crumb(y, k, 1), pair_color }
}

/// The two `V'` elements a non-rainbow triple attaches to: the pair
/// `{y_1, y_1 + c(y,z)}` when the apex and the pair lie in different
/// halves of `V'`, and its complement when they share a half. Halves
/// of `V'` are `{0,1}` and `{2,3}`.
///
/// The branch selection is forced by the covering argument behind
/// `alpha(H_k) = 4`: a one-apex quadruple over a rainbow triple needs
/// the plain pair on split halves, and the apex-swap step needs the
/// complement on shared halves. (Selecting the other way around leaves
/// 5-sets of the form `{y_1} ∪ rainbow-triple ∪ one far vertex`
/// uncovered; exhaustive search confirms alpha would become 5.)
fn pair_map(apex_first: u32, pair_first: u32, pair_color: u32) -> [u32; 2] {
    let base = [pair_first, pair_first ^ pair_color];
    let same_half = (apex_first ^ pair_first) < 2;
    if !same_half {
        base
    } else {
        let mut out = [0u32; 2];
        let mut idx = 0;
        for c in 0..4u32 {
            if c != base[0] && c != base[1] {
                out[idx] = c;
                idx += 1;
            }
        }
        out
    }
}

/// Exact family sizes of the depth-`k` graph, independent of
/// materialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RainbowCounts {
    pub e0: u128,
    pub e1: u128,
    pub e2: u128,
    pub e4: u128,
    pub rainbow_triples: u128,
}

impl RainbowCounts {
    pub fn total(&self) -> u128 {
        self.e0 + self.e1 + self.e2 + self.e4
    }
}

/// Rainbow triple count by the positional recursion: triples either
/// disagree pairwise at position 1 (4 first-coordinate choices and free
/// tails) or share position 1 and recurse.
fn rainbow_triple_count(k: u32) -> u128 {
    let mut r: u128 = 4; // k = 1: every triple of distinct elements
    let mut depth = 1;
    while depth < k {
        depth += 1;
        let tails = 4u128.pow(3 * (depth - 1));
        r = 4 * tails + 4 * r;
    }
    r
}

/// Closed-form family sizes for any depth `k >= 1`.
pub fn rainbow_counts(k: u32) -> RainbowCounts {
    assert!(k >= 1, "depth must be at least 1");
    let v2 = 4u128.pow(k);
    let half = (v2 / 2) as u64;
    let rainbow = rainbow_triple_count(k);
    let triples = binomial_u128(v2 as u64, 3);
    RainbowCounts {
        e0: 2 * binomial_u128(half, 4) + binomial_u128(half, 2).pow(2),
        e1: 2 * (triples - rainbow),
        e2: v2 * (v2 - 1),
        e4: 1,
        rainbow_triples: rainbow,
    }
}

/// Materialize the depth-`k` graph. `V'` occupies vertices `0..4`
/// (labels `(0, c)`), `V''` the rest (labels `(1, vector)`).
pub fn rainbow_build(k: u32) -> Result<Build, BuildError> {
    if !(1..=MAX_BUILD_DEPTH).contains(&k) {
        return Err(BuildError::DepthTooLargeToMaterialize { k, limit: MAX_BUILD_DEPTH });
    }
    let v2 = 4usize.pow(k);
    let total = 4 + v2;
    let second = |v: usize| (4 + v) as Vertex;

    let mut acc = FamilyAccumulator::new(total);

    // E0: V'' quadruples with even intersection with the first half
    let half = v2 / 2;
    let mut e0 = Vec::new();
    for a in 0..v2 {
        for b in a + 1..v2 {
            for c in b + 1..v2 {
                for d in c + 1..v2 {
                    let in_first = [a, b, c, d].iter().filter(|&&v| v < half).count();
                    if in_first % 2 == 0 {
                        e0.push([second(a), second(b), second(c), second(d)]);
                    }
                }
            }
        }
    }
    acc.family("E0", e0);

    // E1: non-rainbow triples joined to their pair map
    let mut e1 = Vec::new();
    for a in 0..v2 {
        for b in a + 1..v2 {
            for c in b + 1..v2 {
                let t = [a as u32, b as u32, c as u32];
                if let Triple::Apex { apex, pair_first, pair_color } = classify_triple(t, k) {
                    let apex_first = crumb(t[apex], k, 1);
                    for w in pair_map(apex_first, pair_first, pair_color) {
                        e1.push([w as Vertex, second(a), second(b), second(c)]);
                    }
                }
            }
        }
    }
    acc.family("E1", e1);

    // E2: same-color 2+2 across the classes
    let mut e2 = Vec::new();
    for a in 0..v2 {
        for b in a + 1..v2 {
            let (_, color) = first_diff(a as u32, b as u32, k).expect("distinct");
            for w1 in 0..4u32 {
                let w2 = w1 ^ color;
                if w1 < w2 {
                    e2.push([w1 as Vertex, w2 as Vertex, second(a), second(b)]);
                }
            }
        }
    }
    acc.family("E2", e2);

    acc.family("E4", [[0 as Vertex, 1, 2, 3]]);

    let labels = (0..4u32)
        .map(|c| Label(vec![0, c]))
        .chain((0..v2 as u32).map(|v| Label(vec![1, v])))
        .collect();
    Ok(acc.finish(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{alpha_bruteforce, no_independent_of_size};

    #[test]
    fn counts_small_depths() {
        let c1 = rainbow_counts(1);
        assert_eq!(c1.e2, 12);
        assert_eq!(c1.e0, 1);
        assert_eq!(c1.e1, 0);
        assert_eq!(c1.rainbow_triples, 4);

        let c2 = rainbow_counts(2);
        assert_eq!(c2.e0, 924);
        assert_eq!(c2.e1, 576);
        assert_eq!(c2.e2, 240);
        assert_eq!(c2.rainbow_triples, 272);
    }

    #[test]
    fn recursion_matches_closed_form() {
        for k in 1..=8u32 {
            let expected = (4u128.pow(3 * k) - 4u128.pow(k)) / 15;
            assert_eq!(rainbow_triple_count(k), expected, "k={k}");
        }
    }

    #[test]
    fn triple_classifier_matches_brute_force_at_k2() {
        // independent oracle: count rainbow triples by testing the
        // color-distinctness definition directly
        let k = 2u32;
        let v2 = 16u32;
        let mut rainbow = 0u128;
        let mut non_rainbow = 0u128;
        for a in 0..v2 {
            for b in a + 1..v2 {
                for c in b + 1..v2 {
                    let cab = first_diff(a, b, k).unwrap().1;
                    let cac = first_diff(a, c, k).unwrap().1;
                    let cbc = first_diff(b, c, k).unwrap().1;
                    let distinct = cab != cac && cab != cbc && cac != cbc;
                    if distinct {
                        rainbow += 1;
                    } else {
                        non_rainbow += 1;
                    }
                    // the positional classification must agree
                    match classify_triple([a, b, c], k) {
                        Triple::Rainbow => assert!(distinct),
                        Triple::Apex { .. } => assert!(!distinct),
                    }
                }
            }
        }
        assert_eq!(rainbow, rainbow_triple_count(k));
        assert_eq!(2 * non_rainbow, rainbow_counts(k).e1);
    }

    #[test]
    fn build_matches_counts() {
        for k in 1..=2u32 {
            let b = rainbow_build(k).unwrap();
            let c = rainbow_counts(k);
            assert_eq!(b.census.get("E0"), Some(c.e0 as u64));
            assert_eq!(b.census.get("E1"), Some(c.e1 as u64));
            assert_eq!(b.census.get("E2"), Some(c.e2 as u64));
            assert_eq!(b.census.get("E4"), Some(1));
            assert_eq!(b.four_graph().n(), 4 + 4usize.pow(k));
        }
    }

    #[test]
    fn alpha_is_four_exhaustively() {
        for k in 1..=2u32 {
            let b = rainbow_build(k).unwrap();
            let r = alpha_bruteforce(b.four_graph()).unwrap();
            assert_eq!(r.alpha, 4, "k={k}");
            assert!(no_independent_of_size(b.four_graph(), 5).unwrap());
        }
    }

    #[test]
    fn depth_cap() {
        assert!(matches!(rainbow_build(4), Err(BuildError::DepthTooLargeToMaterialize { .. })));
        assert!(matches!(rainbow_build(0), Err(BuildError::DepthTooLargeToMaterialize { .. })));
        // counting mode keeps going
        let c = rainbow_counts(6);
        assert!(c.total() > 0);
    }

    #[test]
    fn e1_ratio_approaches_six_fifths() {
        // |E1| / C(4^k, 3) -> 6/5
        let k = 10u32;
        let c = rainbow_counts(k);
        let triples = binomial_u128(4u64.pow(k), 3);
        let ratio = c.e1 as f64 / triples as f64;
        assert!((ratio - 1.2).abs() < 1e-4, "ratio {ratio}");
    }
}
