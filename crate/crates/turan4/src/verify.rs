//! Machine-checkable verification suites behind `t4 verify`: tables
//! (small constructions against the integer table), formulas (census
//! and closed-form equalities), and invariants (solver/oracle
//! equivalence and sampled structural inequalities).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{
    circular_expansion_bound, expansion_density_bound, lift_lower, rainbow_finite_bound,
    section8_exact, union_upper, Section8, TuranValueTable,
};
use crate::constructions::{
    circular_build, eq2_edge_count, expansion_build, expansion_edge_count, hm_build,
    hm_edge_formula, hm_enumerate_by_scan, hm_invariant_suite, hm_type_counts,
    k5_line_construction, parity_construction, rainbow_build, rainbow_counts, two_k6_construction,
    zcube_circular_spec, zero_sum_cube, CircularPart, CircularSpec, ExpansionSpec, HmLambdaSpec,
    ParitySpec,
};
use crate::hypergraph::{FourGraph, Vertex};
use crate::rational::Rat;
use crate::solver::{
    alpha_bruteforce, alpha_exact, is_independent, no_independent_of_size, thomasse_yeo_holds,
    SolveBudget, SolveStatus,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Formulas,
    Invariants,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tables" => Ok(Suite::Tables),
            "formulas" => Ok(Suite::Formulas),
            "invariants" => Ok(Suite::Invariants),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}' (tables|formulas|invariants|all)")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, samples: 200 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {} - {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Seeded random 4-graph: each quadruple kept with probability
/// `density`.
pub fn random_four_graph(n: usize, density: f64, seed: u64) -> FourGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut quads = Vec::new();
    for a in 0..n as Vertex {
        for b in a + 1..n as Vertex {
            for c in b + 1..n as Vertex {
                for d in c + 1..n as Vertex {
                    if rng.gen::<f64>() < density {
                        quads.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    FourGraph::from_quads(n, quads)
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    match suite {
        Suite::Tables => suite_tables(&mut report),
        Suite::Formulas => suite_formulas(&mut report),
        Suite::Invariants => suite_invariants(&mut report, opts),
        Suite::All => {
            suite_tables(&mut report);
            suite_formulas(&mut report);
            suite_invariants(&mut report, opts);
        }
    }
    report
}

fn suite_tables(r: &mut VerifyReport) {
    let table = match TuranValueTable::with_external_constants() {
        Ok(t) => t,
        Err(e) => {
            r.check("external_constants_load", false, e.to_string());
            return;
        }
    };

    // construction upper bounds must reproduce the table rows
    let k5 = k5_line_construction();
    let a = alpha_bruteforce(k5.four_graph()).unwrap();
    r.check(
        "k5_line_matches_T(10,6,4)",
        a.alpha == 5 && k5.four_graph().edge_count() == 20 && table.exact(10, 6) == Some(20),
        format!("alpha={}, e={}", a.alpha, k5.four_graph().edge_count()),
    );
    let (g9, _) = k5.four_graph().remove(&[0]).unwrap();
    r.check(
        "k5_line_minus_vertex_matches_T(9,6,4)",
        g9.edge_count() == 12 && table.exact(9, 6) == Some(12),
        format!("e={}", g9.edge_count()),
    );

    match two_k6_construction(0) {
        Ok(b) => {
            let alpha = alpha_exact(b.four_graph(), SolveBudget::unbounded()).alpha;
            r.check(
                "two_k6_matches_T(12,6,4)",
                alpha == 5 && b.four_graph().edge_count() == 51 && table.exact(12, 6) == Some(51),
                format!("alpha={alpha}, e={}", b.four_graph().edge_count()),
            );
            let (g11, _) = b.four_graph().remove(&[0]).unwrap();
            r.check(
                "two_k6_minus_vertex_matches_T(11,6,4)",
                g11.edge_count() == 34 && table.exact(11, 6) == Some(34),
                format!("e={}", g11.edge_count()),
            );
        }
        Err(e) => r.check("two_k6_matches_T(12,6,4)", false, e.to_string()),
    }

    let z = z2cube_construction_check();
    let upper = |n: u64, k: u64| table.get(n, k).and_then(|e| e.upper);
    r.check(
        "z2cube_matches_T(16,6,4)_upper",
        z.0 == 220 && upper(16, 6) == Some(220),
        format!("e={}", z.0),
    );
    r.check(
        "z2cube_minus_one_matches_T(15,6,4)_upper",
        z.1 == 161 && upper(15, 6) == Some(161),
        format!("e={}", z.1),
    );
    r.check(
        "z2cube_minus_pair_matches_T(14,6,4)_upper",
        z.2 == 115 && upper(14, 6) == Some(115),
        format!("e={}", z.2),
    );

    let cube = zero_sum_cube();
    let a = alpha_bruteforce(cube.graph()).unwrap();
    r.check(
        "zero_sum_cube_matches_T(8,5,4)",
        a.alpha == 4 && cube.graph().edge_count() == 14 && table.exact(8, 5) == Some(14),
        format!("alpha={}, e={}", a.alpha, cube.graph().edge_count()),
    );

    // recursive lift reproduces the (18,5) lower bound
    let mut t = table.clone();
    match lift_lower(&mut t, 18, 5) {
        Ok(v) => r.check("lift_T(18,5,4)_from_627", v == 807, format!("lifted {v}")),
        Err(e) => r.check("lift_T(18,5,4)_from_627", false, e.to_string()),
    }

    // the ambiguous 16-vertex slice: report, never assert
    let spec = zcube_circular_spec(2).unwrap();
    let g2 = circular_build(&spec).unwrap();
    let w0: Vec<Vertex> = (0..16).collect();
    let (slice, _) = g2.four_graph().induced(&w0).unwrap();
    let sa = alpha_exact(&slice, SolveBudget::unbounded());
    r.check(
        "t16_k7_slice_reported",
        sa.status == SolveStatus::Exact,
        format!(
            "induced block slice: v={}, e={}, alpha={} (literature upper 108 left unasserted)",
            slice.n(),
            slice.edge_count(),
            sa.alpha
        ),
    );
}

fn z2cube_construction_check() -> (usize, usize, usize) {
    let b = crate::constructions::z2cube_construction();
    let e = b.four_graph().edge_count();
    let (g15, _) = b.four_graph().remove(&[8]).unwrap();
    let (g14, _) = b.four_graph().remove(&[8, 9]).unwrap();
    (e, g15.edge_count(), g14.edge_count())
}

fn suite_formulas(r: &mut VerifyReport) {
    // circular census and closed form
    for m in [2usize, 3, 4] {
        let spec = zcube_circular_spec(m).unwrap();
        let b = circular_build(&spec).unwrap();
        let per_index_ok = (0..m).all(|i| {
            b.census.get(&format!("E1({i})")) == Some(772)
                && b.census.get(&format!("E2({i})")) == Some(216)
                && b.census.get(&format!("E4({i})")) == Some(256)
        });
        r.check(
            &format!("circular_zcube_m{m}_census"),
            per_index_ok
                && b.four_graph().edge_count() == 1244 * m
                && eq2_edge_count(&spec) == (1244 * m) as u128,
            format!("e={}", b.four_graph().edge_count()),
        );
    }

    // expansion closed form vs direct build
    let host = zero_sum_cube().into_graph();
    for size in [2usize, 3] {
        let spec = ExpansionSpec::edges_as_critical_sets(&host, size).unwrap();
        let built = expansion_build(&spec);
        r.check(
            &format!("expansion_edge_formula_N{size}"),
            built.four_graph().edge_count() as u128 == expansion_edge_count(&spec),
            format!("e={}", built.four_graph().edge_count()),
        );
    }

    // two-path equality of the circular density bound
    let two_path = (3..=8u64).all(|m| {
        let direct = circular_expansion_bound(m).unwrap();
        let assembled = expansion_density_bound(16 * m, 1244 * m, 3 * m, 256 * m, 16 * m);
        direct.t_star == assembled.t_star
    });
    r.check("circular_bound_two_path_equality", two_path, "m in 3..=8");

    // rainbow counts against materialization and the bracket formula
    for k in [1u32, 2] {
        let b = rainbow_build(k).unwrap();
        let c = rainbow_counts(k);
        r.check(
            &format!("rainbow_k{k}_census"),
            b.census.get("E0") == Some(c.e0 as u64)
                && b.census.get("E1") == Some(c.e1 as u64)
                && b.census.get("E2") == Some(c.e2 as u64)
                && b.census.get("E4") == Some(1),
            format!("e={}", b.four_graph().edge_count()),
        );
    }
    r.check(
        "rainbow_circular_bracket_k1_m2",
        rainbow_bracket_matches_materialization(),
        "families of C_2[H_1,H_1] match the bracket terms",
    );
    let b6 = rainbow_finite_bound(6, 2).unwrap();
    let target = Rat::new(443, 5120);
    let rel = (target.clone() - &b6) / &target;
    r.check(
        "rainbow_finite_k6_within_0.1pct",
        rel.abs() < Rat::new(1, 1000),
        format!("relative gap {:.6}", rel.to_f64()),
    );

    // cyclic Z2^6 family: census vs stated multiplicities and formula
    for m in [4usize, 5] {
        for lambda in 1..=4usize {
            let spec = HmLambdaSpec::first_lambda(m, lambda).unwrap();
            let b = hm_build(&spec);
            let ok = hm_type_counts(m, lambda)
                .iter()
                .all(|(name, expected)| b.census.get(name) == Some(*expected))
                && b.census.total() == hm_edge_formula(m, lambda).unwrap();
            r.check(
                &format!("hm_m{m}_lambda{lambda}_census_vs_multiplicities"),
                ok,
                format!("e={}", b.census.total()),
            );
        }
    }
    // independent scan oracle on the small cases (the full sweep lives
    // in the acceptance suite)
    for (m, lambda) in [(4usize, 1usize), (4, 2)] {
        let spec = HmLambdaSpec::first_lambda(m, lambda).unwrap();
        let b = hm_build(&spec);
        let scanned = hm_enumerate_by_scan(&spec);
        r.check(
            &format!("hm_m{m}_lambda{lambda}_scan_oracle"),
            scanned == b.census,
            format!("scanned total {}", scanned.total()),
        );
    }

    // small-ratio exact values: sweep agreement
    let mut sweep_ok = true;
    let mut detail = String::new();
    for n in 1..=60u64 {
        for alpha in 1..=n {
            if 2 * n < 3 * alpha || 4 * n > 7 * alpha {
                continue;
            }
            let u = union_upper(n, alpha).unwrap();
            match (section8_exact(n, alpha), u) {
                (Section8::Value(v), Some(uu)) if uu != v => {
                    sweep_ok = false;
                    detail = format!("mismatch at n={n}, alpha={alpha}: {uu} vs {v}");
                }
                (Section8::Exceptional { union_value }, u) if u != Some(union_value) => {
                    sweep_ok = false;
                    detail = format!("exceptional mismatch at n={n}");
                }
                _ => {}
            }
        }
    }
    r.check(
        "section8_union_agreement_n_le_60",
        sweep_ok,
        if detail.is_empty() { "all points agree".to_string() } else { detail },
    );
    r.check(
        "section8_small_table_values",
        section8_exact(6, 4) == Section8::Value(3) && section8_exact(7, 4) == Section8::Value(7),
        "T(6,5,4)=3, T(7,5,4)=7",
    );
}

fn rainbow_bracket_matches_materialization() -> bool {
    let h1 = rainbow_build(1).unwrap();
    let c = rainbow_counts(1);
    let part = || CircularPart {
        graph: h1.four_graph().clone(),
        head: (0..4).collect(),
        tail: (4..8).collect(),
        alpha_minus: 3,
    };
    let spec = match CircularSpec::new(vec![part(), part()]) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let b = match circular_build(&spec) {
        Ok(b) => b,
        Err(_) => return false,
    };
    // bracket: per index, E1 = 4(|E0| + |E1| 4 + |E2| 16),
    // E2 = 6 C(4,2)^2, E4 = 4^4
    let e1_expect = 4 * (c.e0 + c.e1 * 4 + c.e2 * 16) as u64;
    (0..2).all(|i| {
        b.census.get(&format!("E1({i})")) == Some(e1_expect)
            && b.census.get(&format!("E2({i})")) == Some(216)
            && b.census.get(&format!("E4({i})")) == Some(256)
    }) && b.four_graph().edge_count() == 2488
}

fn suite_invariants(r: &mut VerifyReport, opts: VerifyOptions) {
    // solver vs brute force on random instances; samples = 0 leaves
    // the sampled checks vacuously green
    let instances = opts.samples;
    let mut mismatches = 0usize;
    let mut ty_failures = 0usize;
    let mut witness_failures = 0usize;
    for i in 0..instances {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
        rng.set_stream(i as u64);
        let n = rng.gen_range(4..=14usize);
        let density = rng.gen_range(0.02..0.4);
        let g = random_four_graph(n, density, opts.seed.wrapping_add(i as u64));
        let brute = alpha_bruteforce(&g).unwrap();
        let exact = alpha_exact(&g, SolveBudget::unbounded());
        if exact.status != SolveStatus::Exact || exact.alpha != brute.alpha {
            mismatches += 1;
        }
        if !is_independent(&g, &exact.witness).unwrap() {
            witness_failures += 1;
        }
        if !thomasse_yeo_holds(&g, exact.alpha) {
            ty_failures += 1;
        }
    }
    let sampled = |count: usize| {
        if instances == 0 {
            "vacuous (0 samples)".to_string()
        } else {
            format!("{instances} random instances, {count} failures")
        }
    };
    r.check("solver_equals_bruteforce", mismatches == 0, sampled(mismatches));
    r.check("solver_witnesses_independent", witness_failures == 0, sampled(witness_failures));
    r.check("thomasse_yeo_on_exact_solves", ty_failures == 0, sampled(ty_failures));

    // monotonicity: adding an edge never increases alpha
    let mut mono_ok = true;
    for i in 0..20u64 {
        let g = random_four_graph(10, 0.05, opts.seed.wrapping_add(1000 + i));
        let a1 = alpha_bruteforce(&g).unwrap().alpha;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ i);
        let mut quad = [0u32; 4];
        let mut attempts = 0;
        loop {
            attempts += 1;
            if attempts > 100 {
                break;
            }
            let mut vs: Vec<u32> = (0..10).collect();
            for slot in quad.iter_mut() {
                let pick = rng.gen_range(0..vs.len());
                *slot = vs.swap_remove(pick);
            }
            quad.sort_unstable();
            if !g.contains_edge(&quad) {
                break;
            }
        }
        let mut edges: Vec<[u32; 4]> = g.edges().to_vec();
        edges.push(quad);
        let g2 = FourGraph::from_quads(10, edges);
        let a2 = alpha_bruteforce(&g2).unwrap().alpha;
        if a2 > a1 {
            mono_ok = false;
        }
    }
    r.check("alpha_monotone_under_edge_addition", mono_ok, "20 random pairs");

    // induced subgraphs never gain independence; disjoint unions add
    let mut induced_ok = true;
    let mut union_ok = true;
    for i in 0..20u64 {
        let g = random_four_graph(12, 0.08, opts.seed.wrapping_add(2000 + i));
        let a = alpha_bruteforce(&g).unwrap().alpha;
        let keep: Vec<u32> = (0..12).filter(|v| v % 3 != (i % 3) as u32).collect();
        let (sub, _) = g.induced(&keep).unwrap();
        if alpha_bruteforce(&sub).unwrap().alpha > a {
            induced_ok = false;
        }
        let h = random_four_graph(8, 0.1, opts.seed.wrapping_add(3000 + i));
        let u = FourGraph::disjoint_union(&[g.clone(), h.clone()]);
        let au = alpha_exact(&u, SolveBudget::unbounded()).alpha;
        if au != a + alpha_bruteforce(&h).unwrap().alpha {
            union_ok = false;
        }
    }
    r.check("alpha_induced_never_grows", induced_ok, "20 random instances");
    r.check("alpha_additive_on_disjoint_union", union_ok, "20 random pairs");

    // union additivity on the 7-vertex exact block
    let seven = union_of_seven_blocks(2);
    let a = alpha_exact(&seven, SolveBudget::unbounded());
    r.check(
        "seven_vertex_block_union_additivity",
        a.alpha == 8 && seven.edge_count() == 14,
        format!("alpha={}, e={}", a.alpha, seven.edge_count()),
    );

    // parity construction: every 5-subset contains an edge
    let mut parity_ok = true;
    for seed in 0..20u64 {
        for n in 0..=12usize {
            for m in 0..=(12 - n) {
                let spec = ParitySpec::seeded(n, m, opts.seed.wrapping_add(seed));
                let b = parity_construction(&spec);
                if !no_independent_of_size(b.four_graph(), 5).unwrap() {
                    parity_ok = false;
                }
            }
        }
    }
    r.check("parity_five_subsets_always_covered", parity_ok, "n+m <= 12, 20 seeds");

    // sampled structural inequalities of the cyclic Z2^6 graph
    let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
    match hm_invariant_suite(&spec, opts.samples, opts.seed) {
        Ok(rep) => r.check(
            "hm_sampled_inequalities",
            rep.violations == 0,
            format!(
                "{} samples, max set {} of cap {}",
                rep.samples, rep.max_set_size, rep.theorem_cap
            ),
        ),
        Err(e) => r.check("hm_sampled_inequalities", false, e.to_string()),
    }
}

/// Disjoint union of `k` copies of the 7-vertex, 7-edge block whose
/// independence number is 4.
pub fn union_of_seven_blocks(k: usize) -> FourGraph {
    let block = seven_vertex_block();
    FourGraph::disjoint_union(&vec![block; k])
}

/// A 7-vertex 4-graph with 7 edges and alpha 4 (the Steiner-style
/// block used by the disjoint-union patterns).
pub fn seven_vertex_block() -> FourGraph {
    // complements of the 7 lines of the Fano plane
    let lines: [[u32; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let quads: Vec<[u32; 4]> = lines
        .iter()
        .map(|line| {
            let mut q: Vec<u32> = (0..7).filter(|v| !line.contains(v)).collect();
            q.sort_unstable();
            [q[0], q[1], q[2], q[3]]
        })
        .collect();
    FourGraph::from_quads(7, quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_block_profile() {
        let b = seven_vertex_block();
        assert_eq!(b.n(), 7);
        assert_eq!(b.edge_count(), 7);
        assert_eq!(alpha_bruteforce(&b).unwrap().alpha, 4);
    }

    #[test]
    fn suites_pass_with_small_samples() {
        let opts = VerifyOptions { seed: 0, samples: 10 };
        let tables = run_suite(Suite::Tables, opts);
        assert!(tables.all_passed(), "{}", tables.render_text());
        let invariants = run_suite(Suite::Invariants, opts);
        assert!(invariants.all_passed(), "{}", invariants.render_text());
    }

    #[test]
    fn vacuous_invariant_run_passes() {
        let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
        let rep = hm_invariant_suite(&spec, 0, 0).unwrap();
        assert_eq!(rep.violations, 0);
        assert_eq!(rep.samples, 0);
    }
}
