//! Build every construction once and print its shape and per-family
//! census, cross-checking each census against its closed form.
//!
//! ```sh
//! cargo run --release --example constructions
//! ```

use turan4::constructions::{
    circular_build, eq2_edge_count, expansion_build, expansion_edge_count, hm_build,
    hm_edge_formula, k5_line_construction, parity_construction, rainbow_build, rainbow_counts,
    two_k6_construction, z2cube_construction, zcube_circular_spec, zero_sum_cube, Build,
    ExpansionSpec, HmLambdaSpec, ParitySpec,
};

fn show(name: &str, b: &Build) {
    let g = b.four_graph();
    print!("{name}: v={} e={}", g.n(), g.edge_count());
    for fc in &b.census.0 {
        print!(" {}={}", fc.family, fc.count);
    }
    println!();
}

fn main() {
    let cube = zero_sum_cube();
    println!("zero-sum cube: v={} e={}", cube.graph().n(), cube.graph().edge_count());

    show("parity 8x8 (seed 7)", &parity_construction(&ParitySpec::seeded(8, 8, 7)));
    show("parity 4x4 (zero matrix)", &parity_construction(&ParitySpec::zero(4, 4)));

    show("k5 lines", &k5_line_construction());
    show("two k6 (variant 0)", &two_k6_construction(0).expect("variant exists"));
    show("z2 cube blocks", &z2cube_construction());

    let host = cube.into_graph();
    let spec = ExpansionSpec::edges_as_critical_sets(&host, 2).expect("valid spec");
    let b = expansion_build(&spec);
    show("expansion of the cube, parts of 2", &b);
    assert_eq!(b.four_graph().edge_count() as u128, expansion_edge_count(&spec));

    for m in [2usize, 3] {
        let spec = zcube_circular_spec(m).expect("hypotheses hold");
        let b = circular_build(&spec).expect("builds");
        show(&format!("circular x{m}"), &b);
        assert_eq!(b.four_graph().edge_count() as u128, eq2_edge_count(&spec));
    }

    for k in [1u32, 2] {
        let b = rainbow_build(k).expect("depth in range");
        show(&format!("rainbow depth {k}"), &b);
        let c = rainbow_counts(k);
        assert_eq!(b.four_graph().edge_count() as u128, c.total());
    }

    for (m, lambda) in [(4usize, 1usize), (4, 2)] {
        let spec = HmLambdaSpec::first_lambda(m, lambda).expect("valid");
        let b = hm_build(&spec);
        show(&format!("cyclic z26 m={m} lambda={lambda}"), &b);
        assert_eq!(b.census.total(), hm_edge_formula(m, lambda).unwrap());
    }
}
