//! Cyclic construction on `Z_m ⊕ Z_2^6`, restricted to a chosen subset
//! `B` of the last coordinate. Vertices are tuples `(i, x, y, z)` with
//! `i` in `Z_m`, `x, y` in `Z_2^2` and `z` in `B` (|B| = lambda), and
//! six edge types connect levels `i`, `i+1`, `i+2` and `i+3`:
//!
//! 1. four vertices sharing `(i, x, y)` (all four z values);
//! 2. four vertices at level `i` with pairwise distinct `(x, y)` and
//!    x-coordinates summing to zero;
//! 3. a same-x pair at level `i` with distinct y, plus a pair at level
//!    `i+1` whose x-coordinates sum to the y-difference;
//! 4. a same-`(x, y)` pair at level `i` with distinct z, plus
//!    (a) another such pair at level `i` with a different `(x, y)`,
//!    (b) a same-x distinct-y pair at level `i+2`, or
//!    (c) a pair at level `i+3` whose x-coordinates sum to the
//!    z-difference.
//!
//! The offsets alias for m < 4, so smaller m is refused. Every maximal
//! independent set satisfies three counting inequalities (checked by
//! [`hm_invariant_suite`]) that cap the independence number at `3m`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::hypergraph::{Label, Vertex};

use super::{Build, BuildError, Census, FamilyAccumulator};

#[derive(Clone, Debug)]
pub struct HmLambdaSpec {
    pub m: usize,
    pub lambda: usize,
    b_set: Vec<u32>,
}

impl HmLambdaSpec {
    pub fn new(m: usize, lambda: usize, b_set: Vec<u32>) -> Result<Self, BuildError> {
        if !(1..=4).contains(&lambda) {
            return Err(BuildError::LambdaOutOfRange(lambda));
        }
        let mut b = b_set;
        b.sort_unstable();
        b.dedup();
        if b.len() != lambda || b.iter().any(|&z| z > 3) {
            return Err(BuildError::LambdaOutOfRange(lambda));
        }
        if m < 4 {
            return Err(BuildError::MTooSmall {
                m,
                reason: "levels i+2 and i+3 would alias".into(),
            });
        }
        Ok(HmLambdaSpec { m, lambda, b_set: b })
    }

    /// Default z-subset `{0, .., lambda-1}`.
    pub fn first_lambda(m: usize, lambda: usize) -> Result<Self, BuildError> {
        Self::new(m, lambda, (0..lambda as u32).collect())
    }

    pub fn b_set(&self) -> &[u32] {
        &self.b_set
    }

    pub fn vertex_count(&self) -> usize {
        16 * self.m * self.lambda
    }
}

/// Dense vertex ids, lexicographic in `(i, x, y, z-position)`.
fn vid(spec: &HmLambdaSpec, i: usize, x: u32, y: u32, zpos: usize) -> Vertex {
    ((i * 16 + (x as usize) * 4 + y as usize) * spec.lambda + zpos) as Vertex
}

/// Unordered pairs `{a, b}` of `Z_2^2` with `a ^ b = s` (s != 0).
fn xor_pairs(s: u32) -> [(u32, u32); 2] {
    debug_assert!(s != 0 && s < 4);
    let mut out = [(0, 0); 2];
    let mut idx = 0;
    for a in 0..4u32 {
        let b = a ^ s;
        if a < b {
            out[idx] = (a, b);
            idx += 1;
        }
    }
    debug_assert_eq!(idx, 2);
    out
}

/// Materialize `H_{m,lambda}`; labels are the tuples `(i, x, y, z)`.
pub fn hm_build(spec: &HmLambdaSpec) -> Build {
    let (m, lambda) = (spec.m, spec.lambda);
    let zs: Vec<usize> = (0..lambda).collect();
    let mut acc = FamilyAccumulator::new(spec.vertex_count());

    // type 1: one (x, y) cell, all four z values
    let mut t1 = Vec::new();
    if lambda == 4 {
        for i in 0..m {
            for x in 0..4u32 {
                for y in 0..4u32 {
                    t1.push([
                        vid(spec, i, x, y, 0),
                        vid(spec, i, x, y, 1),
                        vid(spec, i, x, y, 2),
                        vid(spec, i, x, y, 3),
                    ]);
                }
            }
        }
    }
    acc.family("type1", t1);

    // type 2: pair-distinct (x, y) cells with zero x-sum
    let cells: Vec<(u32, u32)> = (0..4u32).flat_map(|x| (0..4u32).map(move |y| (x, y))).collect();
    let mut zero_sum_cells = Vec::new();
    for a in 0..16 {
        for b in a + 1..16 {
            for c in b + 1..16 {
                for d in c + 1..16 {
                    if cells[a].0 ^ cells[b].0 ^ cells[c].0 ^ cells[d].0 == 0 {
                        zero_sum_cells.push([cells[a], cells[b], cells[c], cells[d]]);
                    }
                }
            }
        }
    }
    let mut t2 = Vec::new();
    for i in 0..m {
        for quad in &zero_sum_cells {
            for &za in &zs {
                for &zb in &zs {
                    for &zc in &zs {
                        for &zd in &zs {
                            t2.push([
                                vid(spec, i, quad[0].0, quad[0].1, za),
                                vid(spec, i, quad[1].0, quad[1].1, zb),
                                vid(spec, i, quad[2].0, quad[2].1, zc),
                                vid(spec, i, quad[3].0, quad[3].1, zd),
                            ]);
                        }
                    }
                }
            }
        }
    }
    acc.family("type2", t2);

    // type 3: same-x distinct-y pair at i, cross pair at i+1
    let mut t3 = Vec::new();
    for i in 0..m {
        let up = (i + 1) % m;
        for x1 in 0..4u32 {
            for ya in 0..4u32 {
                for yb in ya + 1..4 {
                    let s = ya ^ yb;
                    for &za in &zs {
                        for &zb in &zs {
                            for (x2a, x2b) in xor_pairs(s) {
                                for y2a in 0..4u32 {
                                    for y2b in 0..4u32 {
                                        for &z2a in &zs {
                                            for &z2b in &zs {
                                                t3.push([
                                                    vid(spec, i, x1, ya, za),
                                                    vid(spec, i, x1, yb, zb),
                                                    vid(spec, up, x2a, y2a, z2a),
                                                    vid(spec, up, x2b, y2b, z2b),
                                                ]);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    acc.family("type3", t3);

    // type 4a: two same-cell z-pairs at the same level
    let mut t4a = Vec::new();
    for i in 0..m {
        for ca in 0..16 {
            for cb in ca + 1..16 {
                for za in 0..lambda {
                    for zb in za + 1..lambda {
                        for zc in 0..lambda {
                            for zd in zc + 1..lambda {
                                t4a.push([
                                    vid(spec, i, cells[ca].0, cells[ca].1, za),
                                    vid(spec, i, cells[ca].0, cells[ca].1, zb),
                                    vid(spec, i, cells[cb].0, cells[cb].1, zc),
                                    vid(spec, i, cells[cb].0, cells[cb].1, zd),
                                ]);
                            }
                        }
                    }
                }
            }
        }
    }
    acc.family("type4a", t4a);

    // type 4b: same-cell z-pair at i, same-x distinct-y pair at i+2
    let mut t4b = Vec::new();
    for i in 0..m {
        let up = (i + 2) % m;
        for &(x1, y1) in &cells {
            for za in 0..lambda {
                for zb in za + 1..lambda {
                    for x2 in 0..4u32 {
                        for y2a in 0..4u32 {
                            for y2b in y2a + 1..4 {
                                for &z2a in &zs {
                                    for &z2b in &zs {
                                        t4b.push([
                                            vid(spec, i, x1, y1, za),
                                            vid(spec, i, x1, y1, zb),
                                            vid(spec, up, x2, y2a, z2a),
                                            vid(spec, up, x2, y2b, z2b),
                                        ]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    acc.family("type4b", t4b);

    // type 4c: same-cell z-pair at i, cross pair at i+3 keyed by the
    // z-difference
    let mut t4c = Vec::new();
    for i in 0..m {
        let up = (i + 3) % m;
        for &(x1, y1) in &cells {
            for za in 0..lambda {
                for zb in za + 1..lambda {
                    let s = spec.b_set[za] ^ spec.b_set[zb];
                    for (x2a, x2b) in xor_pairs(s) {
                        for y2a in 0..4u32 {
                            for y2b in 0..4u32 {
                                for &z2a in &zs {
                                    for &z2b in &zs {
                                        t4c.push([
                                            vid(spec, i, x1, y1, za),
                                            vid(spec, i, x1, y1, zb),
                                            vid(spec, up, x2a, y2a, z2a),
                                            vid(spec, up, x2b, y2b, z2b),
                                        ]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    acc.family("type4c", t4c);

    let mut labels = Vec::with_capacity(spec.vertex_count());
    for i in 0..m {
        for x in 0..4u32 {
            for y in 0..4u32 {
                for &z in &spec.b_set {
                    labels.push(Label(vec![i as u32, x, y, z]));
                }
            }
        }
    }
    acc.finish(labels)
}

fn c2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn c4(x: u64) -> u64 {
    x * x.saturating_sub(1) * x.saturating_sub(2) * x.saturating_sub(3) / 24
}

/// Per-type totals predicted by the stated multiplicities (already
/// multiplied by m).
pub fn hm_type_counts(m: usize, lambda: usize) -> [(&'static str, u64); 6] {
    let m = m as u64;
    let l = lambda as u64;
    [
        ("type1", m * 16 * c4(l)),
        ("type2", m * 476 * l.pow(4)),
        ("type3", m * 768 * l.pow(4)),
        ("type4a", m * 120 * c2(l) * c2(l)),
        ("type4b", m * 384 * c2(l) * l * l),
        ("type4c", m * 512 * c2(l) * l * l),
    ]
}

/// Closed-form edge count `(m/3)(5168 l^4 - 1536 l^3 + 112 l^2 - 12 l)`;
/// the polynomial part is divisible by 3 for every integer lambda.
pub fn hm_edge_formula(m: usize, lambda: usize) -> Result<u64, BuildError> {
    if !(1..=4).contains(&lambda) {
        return Err(BuildError::LambdaOutOfRange(lambda));
    }
    if m < 4 {
        return Err(BuildError::MTooSmall { m, reason: "formula needs m >= 4".into() });
    }
    let l = lambda as u64;
    let poly = 5168 * l.pow(4) - 1536 * l.pow(3) + 112 * l * l - 12 * l;
    debug_assert_eq!(poly % 3, 0);
    Ok(m as u64 * (poly / 3))
}

/// Independent oracle: enumerate quadruples window by window and
/// classify each against the raw type definitions, never consulting the
/// generators. Panics if any quadruple matches two types (the types
/// are disjoint for m >= 4).
pub fn hm_enumerate_by_scan(spec: &HmLambdaSpec) -> Census {
    #[derive(Clone, Copy)]
    struct Lbl {
        x: u32,
        y: u32,
        z: u32,
    }
    let (m, lambda) = (spec.m, spec.lambda);
    let level_size = 16 * lambda;
    let lbl = |local: usize| {
        let cell = local / lambda;
        Lbl {
            x: (cell / 4) as u32,
            y: (cell % 4) as u32,
            z: spec.b_set[local % lambda],
        }
    };

    let mut counts = [0u64; 6]; // type1, type2, type3, type4a, type4b, type4c

    // same-level classification
    let classify_same = |q: [Lbl; 4]| -> Option<usize> {
        let mut hits = Vec::new();
        let same_cell =
            |a: &Lbl, b: &Lbl| a.x == b.x && a.y == b.y;
        if same_cell(&q[0], &q[1]) && same_cell(&q[0], &q[2]) && same_cell(&q[0], &q[3]) {
            hits.push(0);
        }
        let cells_distinct = (0..4).all(|a| (a + 1..4).all(|b| !same_cell(&q[a], &q[b])));
        if cells_distinct && q[0].x ^ q[1].x ^ q[2].x ^ q[3].x == 0 {
            hits.push(1);
        }
        // type 4a: two cells, each holding a z-pair
        let (mates, others): (Vec<usize>, Vec<usize>) =
            (1..4).partition(|&j| same_cell(&q[0], &q[j]));
        if mates.len() == 1 && others.len() == 2 && same_cell(&q[others[0]], &q[others[1]]) {
            hits.push(3);
        }
        assert!(hits.len() <= 1, "same-level quadruple matches two types");
        hits.pop()
    };

    // cross-level classification for a 2+2 split at directed offset d
    let classify_cross = |lo: [Lbl; 2], hi: [Lbl; 2], d: usize| -> Option<usize> {
        match d {
            1 => {
                // type 3
                if lo[0].x == lo[1].x
                    && lo[0].y != lo[1].y
                    && lo[0].y ^ lo[1].y ^ hi[0].x ^ hi[1].x == 0
                {
                    Some(2)
                } else {
                    None
                }
            }
            2 => {
                if lo[0].x == lo[1].x
                    && lo[0].y == lo[1].y
                    && hi[0].x == hi[1].x
                    && hi[0].y != hi[1].y
                {
                    Some(4)
                } else {
                    None
                }
            }
            3 => {
                if lo[0].x == lo[1].x
                    && lo[0].y == lo[1].y
                    && lo[0].z ^ lo[1].z ^ hi[0].x ^ hi[1].x == 0
                {
                    Some(5)
                } else {
                    None
                }
            }
            _ => None,
        }
    };

    // windows of a single level
    for _level in 0..m {
        for a in 0..level_size {
            for b in a + 1..level_size {
                for c in b + 1..level_size {
                    for d in c + 1..level_size {
                        let q = [lbl(a), lbl(b), lbl(c), lbl(d)];
                        if let Some(t) = classify_same(q) {
                            counts[t] += 1;
                        }
                    }
                }
            }
        }
    }

    // windows of two levels: only 2+2 splits can be edges
    for lo in 0..m {
        for hi in lo + 1..m {
            let d_fwd = (hi - lo) % m;
            let d_rev = (lo + m - hi) % m;
            if !(1..=3).contains(&d_fwd) && !(1..=3).contains(&d_rev) {
                continue;
            }
            for a in 0..level_size {
                for b in a + 1..level_size {
                    let pa = [lbl(a), lbl(b)];
                    for c in 0..level_size {
                        for d in c + 1..level_size {
                            let pb = [lbl(c), lbl(d)];
                            let mut hits = Vec::new();
                            if (1..=3).contains(&d_fwd) {
                                if let Some(t) = classify_cross(pa, pb, d_fwd) {
                                    hits.push(t);
                                }
                            }
                            if (1..=3).contains(&d_rev) {
                                if let Some(t) = classify_cross(pb, pa, d_rev) {
                                    hits.push(t);
                                }
                            }
                            assert!(hits.len() <= 1, "cross quadruple matches two types");
                            if let Some(t) = hits.pop() {
                                counts[t] += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut census = Census::default();
    for (idx, name) in ["type1", "type2", "type3", "type4a", "type4b", "type4c"]
        .iter()
        .enumerate()
    {
        census.push(*name, counts[idx]);
    }
    census
}

/// Report from [`hm_invariant_suite`].
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub samples: usize,
    pub violations: usize,
    pub max_set_size: usize,
    pub theorem_cap: usize,
    /// Largest `rhs - lhs` seen for the per-level inequality.
    pub max_slack_level: i64,
    /// Largest `rhs - lhs` seen for the summed inequality.
    pub max_slack_sum: i64,
    /// Largest `rhs - |A|` seen for the size bound.
    pub max_slack_size: i64,
}

/// Draw `samples` random maximal independent sets (greedy over seeded
/// random vertex orders) and check the three counting inequalities on
/// each. A violation is reported as an error: it would mean the build
/// is wrong, not the inequalities.
pub fn hm_invariant_suite(
    spec: &HmLambdaSpec,
    samples: usize,
    seed: u64,
) -> Result<InvariantReport, BuildError> {
    let built = hm_build(spec);
    let g = built.four_graph();
    let n = g.n();
    let mut incidence: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (ei, e) in g.edges().iter().enumerate() {
        for &v in e {
            incidence[v as usize].push(ei as u32);
        }
    }

    let mut report = InvariantReport {
        samples,
        violations: 0,
        max_set_size: 0,
        theorem_cap: 3 * spec.m,
        max_slack_level: i64::MIN,
        max_slack_sum: i64::MIN,
        max_slack_size: i64::MIN,
    };
    if samples == 0 {
        report.max_slack_level = 0;
        report.max_slack_sum = 0;
        report.max_slack_size = 0;
        return Ok(report);
    }

    let mut order: Vec<usize> = (0..n).collect();
    for sample in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(sample as u64);
        order.shuffle(&mut rng);

        let mut cnt = vec![0u8; g.edge_count()];
        let mut chosen = Vec::new();
        for &v in &order {
            if incidence[v].iter().all(|&e| cnt[e as usize] < 3) {
                chosen.push(v as Vertex);
                for &e in &incidence[v] {
                    cnt[e as usize] += 1;
                }
            }
        }
        check_inequalities(spec, &built, &chosen, &mut report)?;
    }
    Ok(report)
}

/// Evaluate the level sets of an independent set and assert the three
/// inequalities; updates slack statistics.
pub fn check_inequalities(
    spec: &HmLambdaSpec,
    built: &Build,
    set: &[Vertex],
    report: &mut InvariantReport,
) -> Result<(), BuildError> {
    let m = spec.m;
    // a3[i][x][y] = |A_3(i,x,y)|
    let mut a3 = vec![[[0u32; 4]; 4]; m];
    for &v in set {
        let l = &built.graph.labels()[v as usize].0;
        a3[l[0] as usize][l[1] as usize][l[2] as usize] += 1;
    }
    let a2 = |i: usize, x: usize| -> u32 { (0..4).filter(|&y| a3[i][x][y] > 0).count() as u32 };
    let a1_nonempty = |i: usize| (0..4).any(|x| a2(i, x) > 0);
    let a1_size = |i: usize| -> u32 { (0..4).filter(|&x| a2(i, x) > 0).count() as u32 };
    let eps = |i: usize| -> u32 {
        (0..4).map(|x| (0..4).map(|y| a3[i][x][y].saturating_sub(1)).sum::<u32>()).sum()
    };

    let chi = |b: bool| u32::from(b);

    for i in 0..m {
        let i2 = (i + 2) % m;
        let i3 = (i + 3) % m;
        let lhs = eps(i) + (0..4).map(|x| a2(i2, x)).max().unwrap() + a1_size(i3);
        let rhs = 2 + chi(a1_nonempty(i2)) + chi(a1_nonempty(i3));
        if lhs > rhs {
            report.violations += 1;
            return Err(BuildError::InvariantViolated(format!(
                "level inequality fails at i={i}: lhs {lhs} > rhs {rhs}"
            )));
        }
        report.max_slack_level = report.max_slack_level.max(rhs as i64 - lhs as i64);
    }

    let lhs: u32 =
        (0..m).map(eps).sum::<u32>() + (0..m).map(|i| (0..4).map(|x| a2(i, x)).sum::<u32>()).sum::<u32>();
    let rhs: u32 = 2 * m as u32 + (0..m).map(|i| chi(a1_nonempty(i))).sum::<u32>();
    if lhs > rhs {
        report.violations += 1;
        return Err(BuildError::InvariantViolated(format!(
            "summed inequality fails: lhs {lhs} > rhs {rhs}"
        )));
    }
    report.max_slack_sum = report.max_slack_sum.max(rhs as i64 - lhs as i64);

    let size_rhs = rhs; // the size bound shares the same right-hand side
    if (set.len() as u32) > size_rhs {
        report.violations += 1;
        return Err(BuildError::InvariantViolated(format!(
            "size bound fails: |A| = {} > {size_rhs}",
            set.len()
        )));
    }
    report.max_slack_size = report.max_slack_size.max(size_rhs as i64 - set.len() as i64);
    report.max_set_size = report.max_set_size.max(set.len());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_one_is_the_circular_example() {
        let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
        let b = hm_build(&spec);
        assert_eq!(b.four_graph().n(), 64);
        assert_eq!(b.four_graph().edge_count(), 4976);
        assert_eq!(hm_edge_formula(4, 1).unwrap(), 4976);
    }

    #[test]
    fn formula_values() {
        assert_eq!(hm_edge_formula(4, 2).unwrap(), 94_432);
        assert_eq!(hm_edge_formula(21, 3).unwrap(), 2_646_756);
        assert_eq!(hm_edge_formula(10, 1).unwrap(), 12_440);
        assert!(matches!(hm_edge_formula(3, 1), Err(BuildError::MTooSmall { .. })));
        assert!(matches!(hm_edge_formula(4, 5), Err(BuildError::LambdaOutOfRange(5))));
    }

    #[test]
    fn census_matches_stated_multiplicities_small() {
        for (m, lambda) in [(4, 1), (4, 2), (5, 1)] {
            let spec = HmLambdaSpec::first_lambda(m, lambda).unwrap();
            let b = hm_build(&spec);
            for (name, expected) in hm_type_counts(m, lambda) {
                assert_eq!(b.census.get(name), Some(expected), "m={m} lambda={lambda} {name}");
            }
            assert_eq!(b.census.total(), hm_edge_formula(m, lambda).unwrap());
        }
    }

    #[test]
    fn scan_oracle_agrees_at_lambda_one() {
        let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
        let b = hm_build(&spec);
        let scanned = hm_enumerate_by_scan(&spec);
        for (name, _) in hm_type_counts(4, 1) {
            assert_eq!(scanned.get(name), b.census.get(name), "{name}");
        }
    }

    #[test]
    fn scan_oracle_skips_far_level_pairs() {
        // at m = 8 the level pairs at circular distance 4 host no edge
        // types and the scan must skip them without losing anything
        let spec = HmLambdaSpec::first_lambda(8, 1).unwrap();
        let b = hm_build(&spec);
        let scanned = hm_enumerate_by_scan(&spec);
        assert_eq!(scanned, b.census);
        assert_eq!(scanned.total(), hm_edge_formula(8, 1).unwrap());
    }

    #[test]
    fn b_set_choice_preserves_counts() {
        let e0 = hm_build(&HmLambdaSpec::new(5, 1, vec![0]).unwrap()).four_graph().edge_count();
        let e3 = hm_build(&HmLambdaSpec::new(5, 1, vec![3]).unwrap()).four_graph().edge_count();
        assert_eq!(e0, e3);
        assert_eq!(e0, 6220);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            HmLambdaSpec::first_lambda(3, 1),
            Err(BuildError::MTooSmall { m: 3, .. })
        ));
        assert!(matches!(
            HmLambdaSpec::first_lambda(4, 0),
            Err(BuildError::LambdaOutOfRange(0))
        ));
        assert!(matches!(
            HmLambdaSpec::new(4, 2, vec![1, 1]),
            Err(BuildError::LambdaOutOfRange(2))
        ));
    }

    #[test]
    fn empty_set_satisfies_inequalities() {
        let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
        let built = hm_build(&spec);
        let mut report = InvariantReport {
            samples: 0,
            violations: 0,
            max_set_size: 0,
            theorem_cap: 12,
            max_slack_level: i64::MIN,
            max_slack_sum: i64::MIN,
            max_slack_size: i64::MIN,
        };
        check_inequalities(&spec, &built, &[], &mut report).unwrap();
        assert_eq!(report.violations, 0);
        assert_eq!(report.max_slack_size, 2 * 4);
    }

    #[test]
    fn one_level_seed_repaired_to_independence_satisfies_inequalities() {
        let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
        let built = hm_build(&spec);
        let g = built.four_graph();
        let mut incidence: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
        for (ei, e) in g.edges().iter().enumerate() {
            for &v in e {
                incidence[v as usize].push(ei as u32);
            }
        }
        // greedily keep level-0 vertices while independence survives
        let mut cnt = vec![0u8; g.edge_count()];
        let mut set = Vec::new();
        for v in 0..16u32 {
            if incidence[v as usize].iter().all(|&e| cnt[e as usize] < 3) {
                set.push(v);
                for &e in &incidence[v as usize] {
                    cnt[e as usize] += 1;
                }
            }
        }
        let mut report = InvariantReport {
            samples: 1,
            violations: 0,
            max_set_size: 0,
            theorem_cap: 12,
            max_slack_level: i64::MIN,
            max_slack_sum: i64::MIN,
            max_slack_size: i64::MIN,
        };
        check_inequalities(&spec, &built, &set, &mut report).unwrap();
        assert_eq!(report.violations, 0);
        assert!(!set.is_empty());
    }

    #[test]
    fn invariant_suite_small_run() {
        let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
        let report = hm_invariant_suite(&spec, 50, 0).unwrap();
        assert_eq!(report.violations, 0);
        assert!(report.max_set_size <= report.theorem_cap);
        assert!(report.max_set_size >= 8, "greedy sets should not be tiny");
    }
}
