//! Certify independence numbers of the named constructions with the
//! branch-and-bound solver and the brute-force oracle.
//!
//! ```sh
//! cargo run --release --example certify_alpha
//! ```

use turan4::constructions::{
    circular_build, k5_line_construction, rainbow_build, two_k6_construction,
    z2cube_construction, zcube_circular_spec,
};
use turan4::solver::{alpha_bruteforce, alpha_exact, thomasse_yeo_holds, SolveBudget};

fn main() {
    let named: Vec<(&str, turan4::FourGraph)> = vec![
        ("k5 lines (expect 5)", k5_line_construction().four_graph().clone()),
        ("two k6 (expect 5)", two_k6_construction(0).unwrap().four_graph().clone()),
        ("z2 cube blocks (expect 5)", z2cube_construction().four_graph().clone()),
        ("rainbow depth 2 (expect 4)", rainbow_build(2).unwrap().four_graph().clone()),
        (
            "circular x2 (expect 6)",
            circular_build(&zcube_circular_spec(2).unwrap()).unwrap().four_graph().clone(),
        ),
    ];

    for (name, g) in named {
        let r = alpha_exact(&g, SolveBudget::unbounded());
        assert!(thomasse_yeo_holds(&g, r.alpha));
        println!(
            "{name}: alpha={} status={:?} nodes={} witness={:?}",
            r.alpha, r.status, r.nodes_explored, r.witness
        );
        if g.n() <= 20 {
            let oracle = alpha_bruteforce(&g).unwrap();
            assert_eq!(oracle.alpha, r.alpha, "oracle disagrees on {name}");
            println!("  oracle agrees after {} subsets", oracle.nodes_explored);
        }
    }
}
