//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its measured runtime. Tolerances are exact equality
//! for rationals and integers, stated decimal strings for renderings,
//! and the stated wall-clock budgets.

use std::time::Instant;

use turan4::bounds::{
    corollary74_bound, expansion_density_bound, rainbow_finite_bound, rainbow_limit_bound,
    section8_exact, union_upper, Section8,
};
use turan4::constructions::{
    circular_build, hm_build, hm_edge_formula, hm_enumerate_by_scan, hm_invariant_suite,
    hm_type_counts, k5_line_construction, parity_construction, rainbow_build,
    two_k6_construction, two_k6_variant_count, z2cube_construction, zcube_circular_spec,
    HmLambdaSpec, ParitySpec,
};
use turan4::optimize::{example2_objective, gradient_check, minimize};
use turan4::rational::{Rat, Round};
use turan4::solver::{
    alpha_bruteforce, alpha_exact, is_independent, no_independent_of_size, thomasse_yeo_holds,
    SolveBudget, SolveStatus,
};
use turan4::verify::random_four_graph;

fn pass(criterion: &str, started: Instant, limit_s: f64, detail: &str) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("PASS {criterion} ({elapsed:.2}s of {limit_s}s budget) - {detail}");
    assert!(elapsed < limit_s, "{criterion} exceeded its {limit_s}s budget: {elapsed:.2}s");
}

#[test]
fn criterion_01_exact_expansion_rationals() {
    let t0 = Instant::now();
    let r = expansion_density_bound(8, 14, 4, 32, 8);
    assert_eq!(r.t_value, Some(Rat::new(1269, 8192)));
    assert_eq!(r.t_star, Rat::new(52875, 65536));
    pass("1 exact expansion rationals", t0, 1.0, "t(6,4) <= 1269/8192, t* = 52875/65536");
}

#[test]
fn criterion_02_circular_census() {
    let t0 = Instant::now();
    for m in [2usize, 3, 4] {
        let spec = zcube_circular_spec(m).expect("hypotheses hold");
        let built = circular_build(&spec).expect("builds");
        assert_eq!(built.four_graph().edge_count(), 1244 * m, "m={m}");
        for i in 0..m {
            assert_eq!(built.census.get(&format!("E1({i})")), Some(772), "m={m} i={i}");
            assert_eq!(built.census.get(&format!("E2({i})")), Some(216), "m={m} i={i}");
            assert_eq!(built.census.get(&format!("E4({i})")), Some(256), "m={m} i={i}");
        }
    }
    pass("2 circular census", t0, 5.0, "families (772, 216, 256) per index, e = 1244m, m in 2..=4");
}

#[test]
fn criterion_03_solver_certification() {
    let t0 = Instant::now();
    let g2 = circular_build(&zcube_circular_spec(2).unwrap()).unwrap();
    assert_eq!((g2.four_graph().n(), g2.four_graph().edge_count()), (32, 2488));
    let r = alpha_exact(g2.four_graph(), SolveBudget::unbounded());
    assert_eq!(r.status, SolveStatus::Exact);
    assert_eq!(r.alpha, 6);
    assert!(is_independent(g2.four_graph(), &r.witness).unwrap());
    let circular_elapsed = t0.elapsed().as_secs_f64();
    assert!(circular_elapsed < 60.0);

    let t1 = Instant::now();
    let h2 = rainbow_build(2).unwrap();
    let oracle = alpha_bruteforce(h2.four_graph()).unwrap();
    assert_eq!(oracle.alpha, 4);
    assert!(no_independent_of_size(h2.four_graph(), 5).unwrap());
    let rainbow_elapsed = t1.elapsed().as_secs_f64();
    assert!(rainbow_elapsed < 60.0);
    pass(
        "3 solver certification",
        t0,
        120.0,
        &format!("alpha(circular x2) = 6 exact in {circular_elapsed:.2}s; alpha(rainbow depth 2) = 4 exhaustive in {rainbow_elapsed:.2}s"),
    );
}

#[test]
fn criterion_04_rainbow_limit_and_convergence() {
    let t0 = Instant::now();
    let r = rainbow_limit_bound(2).unwrap();
    assert_eq!(r.t_value, Some(Rat::new(443, 5120)));
    assert_eq!(r.t_star, Rat::new(3987, 5120));
    assert!(r.t_star < Rat::new(778711, 1_000_000));
    assert_eq!(r.decimal, "0.778711");
    let finite = rainbow_finite_bound(6, 2).unwrap();
    let target = Rat::new(443, 5120);
    let rel = ((target.clone() - &finite) / &target).abs();
    assert!(rel < Rat::new(1, 1000), "relative gap {} >= 0.1%", rel.to_f64());
    pass(
        "4 rainbow limit",
        t0,
        5.0,
        &format!("443/5120 exact; depth-6 gap {:.5}% < 0.1%", 100.0 * rel.to_f64()),
    );
}

#[test]
fn criterion_05_hm_formula_equivalence() {
    let t0 = Instant::now();
    for m in [4usize, 5] {
        for lambda in 1..=4usize {
            let spec = HmLambdaSpec::first_lambda(m, lambda).unwrap();
            let built = hm_build(&spec);
            let scanned = hm_enumerate_by_scan(&spec);
            let formula = hm_edge_formula(m, lambda).unwrap();
            assert_eq!(scanned.total(), formula, "scan total m={m} lambda={lambda}");
            assert_eq!(built.census.total(), formula, "census total m={m} lambda={lambda}");
            for (name, expected) in hm_type_counts(m, lambda) {
                assert_eq!(scanned.get(name), Some(expected), "scan {name} m={m} lambda={lambda}");
                assert_eq!(built.census.get(name), Some(expected), "build {name} m={m} lambda={lambda}");
            }
        }
    }
    pass(
        "5 cyclic-z26 formula equivalence",
        t0,
        120.0,
        "independent scan = census = (m/3)(5168l^4 - 1536l^3 + 112l^2 - 12l) for m in {4,5}, lambda in 1..=4",
    );
}

#[test]
fn criterion_06_headline_bound() {
    let t0 = Instant::now();
    let headline = corollary74_bound(21, 3).unwrap();
    assert_eq!(headline.decimal, "0.706335");
    for (m, lambda, expect) in [
        (10u64, 2u64, "0.711838"),
        (11, 2, "0.709199"),
        (12, 2, "0.707575"),
        (13, 2, "0.706727"),
        (14, 2, "0.706485"),
        (20, 3, "0.706452"),
        (21, 3, "0.706335"),
    ] {
        let r = corollary74_bound(m, lambda).unwrap();
        assert_eq!(r.decimal, expect, "m={m} lambda={lambda}");
        assert_eq!(r.k, 3 * m + 2);
    }
    pass("6 headline bound", t0, 1.0, "t*(65,4) renders 0.706335; all seven family rows match");
}

#[test]
fn criterion_07_small_ratio_formulas() {
    let t0 = Instant::now();
    assert_eq!(section8_exact(6, 4), Section8::Value(3));
    assert_eq!(section8_exact(7, 4), Section8::Value(7));
    for n in 1..=60u64 {
        for alpha in 1..=n {
            if 2 * n < 3 * alpha || 4 * n > 7 * alpha {
                continue;
            }
            let union = union_upper(n, alpha).unwrap();
            match section8_exact(n, alpha) {
                Section8::Value(v) => {
                    if let Some(u) = union {
                        assert_eq!(u, v, "n={n} alpha={alpha}");
                    }
                }
                Section8::Exceptional { union_value } => {
                    // n = 7m+3, alpha = 4m+2: the union pattern returns 7m+3
                    let m = (alpha - 2) / 4;
                    assert_eq!(union_value, 7 * m + 3);
                    assert_eq!(union, Some(7 * m + 3), "n={n}");
                }
                Section8::OutOfRange => panic!("in-range point (n={n}, alpha={alpha})"),
            }
        }
    }
    pass("7 small-ratio formulas", t0, 5.0, "T(6,5,4)=3, T(7,5,4)=7; union agreement on n <= 60");
}

#[test]
fn criterion_08_optimizer() {
    let t0 = Instant::now();
    let obj = example2_objective();
    let result = minimize(&obj, 1, 32);
    let uniform = Rat::new(52875, 65536);
    assert!(result.value_certified < Rat::new(80262, 100_000), "certified {}", result.value_certified.to_f64());
    assert!(result.value_certified <= uniform);
    let grad = gradient_check(&obj, &[0.125; 8], 1e-6).unwrap();
    assert!(grad < 1e-4, "gradient check {grad}");
    pass(
        "8 optimizer",
        t0,
        60.0,
        &format!(
            "certified {} < 0.80262 with 32 restarts; gradient check {grad:.2e}",
            result.value_certified.decimal(6, Round::Up)
        ),
    );
}

#[test]
fn criterion_09_small_constructions() {
    let t0 = Instant::now();
    let k5 = k5_line_construction();
    assert_eq!((k5.four_graph().n(), k5.four_graph().edge_count()), (10, 20));
    let r = alpha_exact(k5.four_graph(), SolveBudget::unbounded());
    assert_eq!((r.alpha, r.status), (5, SolveStatus::Exact));

    let variants = two_k6_variant_count();
    assert!(variants >= 1);
    let tk6 = two_k6_construction(0).unwrap();
    assert_eq!((tk6.four_graph().n(), tk6.four_graph().edge_count()), (12, 51));
    let r = alpha_exact(tk6.four_graph(), SolveBudget::unbounded());
    assert_eq!((r.alpha, r.status), (5, SolveStatus::Exact));

    let z = z2cube_construction();
    assert_eq!((z.four_graph().n(), z.four_graph().edge_count()), (16, 220));
    let r = alpha_exact(z.four_graph(), SolveBudget::unbounded());
    assert_eq!((r.alpha, r.status), (5, SolveStatus::Exact));
    pass(
        "9 small constructions",
        t0,
        30.0,
        &format!("k5line 10v/20e, two-k6 12v/51e ({variants} variants), z2cube 16v/220e, all alpha 5"),
    );
}

#[test]
fn criterion_10_property_suites() {
    let t0 = Instant::now();

    // exact solver matches the brute-force oracle on 200 random graphs
    use rand::{Rng, SeedableRng};
    let mut meta = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    for i in 0..200u64 {
        let n = meta.gen_range(4..=14usize);
        let density = meta.gen_range(0.02..0.5);
        let g = random_four_graph(n, density, 9000 + i);
        let brute = alpha_bruteforce(&g).unwrap();
        let exact = alpha_exact(&g, SolveBudget::unbounded());
        assert_eq!(exact.status, SolveStatus::Exact);
        assert_eq!(exact.alpha, brute.alpha, "instance {i} (n={n})");
        assert!(is_independent(&g, &exact.witness).unwrap());
        assert!(thomasse_yeo_holds(&g, exact.alpha), "instance {i}");
    }

    // parity construction: exhaustive 5-subset coverage
    for seed in 0..20u64 {
        for n in 0..=12usize {
            for m in 0..=(12 - n) {
                let b = parity_construction(&ParitySpec::seeded(n, m, seed));
                assert!(
                    no_independent_of_size(b.four_graph(), 5).unwrap(),
                    "n={n} m={m} seed={seed}"
                );
            }
        }
    }

    // sampled structural inequalities, 1000 samples
    let spec = HmLambdaSpec::first_lambda(4, 1).unwrap();
    let report = hm_invariant_suite(&spec, 1000, 0).unwrap();
    assert_eq!(report.violations, 0);
    assert!(report.max_set_size <= report.theorem_cap);

    pass(
        "10 property suites",
        t0,
        300.0,
        &format!(
            "200 solver/oracle matches; parity coverage for n+m <= 12 x 20 seeds; {} samples, 0 violations, max set {} <= {}",
            report.samples, report.max_set_size, report.theorem_cap
        ),
    );
}
