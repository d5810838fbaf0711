//! Exact values of `T(n, alpha+1, 4)` for small ratios `n/alpha`, and
//! the disjoint-union upper bounds that prove them.
//!
//! For `1 <= n/alpha <= 4/3` the value is `n - alpha`; for
//! `4/3 <= n/alpha <= 3/2` it is `ceil(5n/2 - 3 alpha)`; for
//! `3/2 <= n/alpha <= 7/4` it is `ceil(4n - 21 alpha / 4)` (the lower
//! bound is the transversal inequality), except on the line
//! `n = (7/4) alpha - 1/2` where the union construction gives `7m + 3`
//! and equality is conjectured, not proved.

use serde::Serialize;

use super::BoundError;

/// Outcome of the piecewise exact formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Section8 {
    Value(u64),
    /// The excluded line `n = 7m+3, alpha = 4m+2`: reports the union
    /// upper bound, which is conjectured (not proved) to be exact.
    Exceptional { union_value: u64 },
    OutOfRange,
}

/// Piecewise exact `T(n, alpha+1, 4)`.
pub fn section8_exact(n: u64, alpha: u64) -> Section8 {
    if alpha == 0 || n < alpha {
        return Section8::OutOfRange;
    }
    if 3 * n <= 4 * alpha {
        return Section8::Value(n - alpha);
    }
    if 2 * n <= 3 * alpha {
        // ceil(5n/2 - 3 alpha); nonnegative here since n/alpha > 4/3
        return Section8::Value((5 * n - 6 * alpha).div_ceil(2));
    }
    if 4 * n <= 7 * alpha {
        if 4 * n + 2 == 7 * alpha {
            let m = (alpha - 2) / 4;
            return Section8::Exceptional { union_value: 7 * m + 3 };
        }
        return Section8::Value((16 * n - 21 * alpha).div_ceil(4));
    }
    Section8::OutOfRange
}

/// Building blocks for the disjoint-union upper bound:
/// `(vertices, alpha, exact Turán value)`.
const BLOCKS: [(u64, u64, u64); 4] = [
    (7, 4, 7), // 7-vertex block with alpha 4 and 7 edges
    (6, 4, 3),
    (8, 5, 6),
    (5, 3, 5), // complete 4-graph on 5 vertices
];

/// Best disjoint-union upper bound on `T(n, alpha+1, 4)` over the
/// block patterns `a x (7,4) + b x (6,4) + c x (8,5) + e x (5,3)` with
/// `c, e <= 2`. `Ok(None)` when no pattern fits (this happens exactly
/// on the line `n = 3 alpha / 2` with `alpha = 2 mod 4`).
pub fn union_upper(n: u64, alpha: u64) -> Result<Option<u64>, BoundError> {
    if alpha == 0 || 2 * n < 3 * alpha || 4 * n > 7 * alpha {
        return Err(BoundError::RatioOutOfRange { n, alpha });
    }
    let mut best: Option<u64> = None;
    for c in 0..=2u64 {
        for e in 0..=2u64 {
            let used_a = BLOCKS[2].1 * c + BLOCKS[3].1 * e;
            let used_n = BLOCKS[2].0 * c + BLOCKS[3].0 * e;
            if used_a > alpha || used_n > n {
                continue;
            }
            let rem_a = alpha - used_a;
            let rem_n = n - used_n;
            if !rem_a.is_multiple_of(4) {
                continue;
            }
            let ab = rem_a / 4; // blocks of alpha 4, split between 7- and 6-vertex
            if rem_n < 6 * ab || rem_n > 7 * ab {
                continue;
            }
            let sevens = rem_n - 6 * ab;
            let sixes = ab - sevens;
            let value = BLOCKS[0].2 * sevens
                + BLOCKS[1].2 * sixes
                + BLOCKS[2].2 * c
                + BLOCKS[3].2 * e;
            best = Some(best.map_or(value, |b| b.min(value)));
        }
    }
    Ok(best)
}
