//! Sample maximal independent sets of the cyclic Z_m + Z_2^6 graph and
//! check the three counting inequalities that cap its independence
//! number at 3m.
//!
//! ```sh
//! cargo run --release --example hm_invariants
//! ```

use turan4::constructions::{hm_invariant_suite, HmLambdaSpec};

fn main() {
    let spec = HmLambdaSpec::first_lambda(4, 1).expect("valid parameters");
    let report = hm_invariant_suite(&spec, 1000, 0).expect("no violations");
    println!(
        "{} samples on 16*m*lambda = {} vertices: {} violations",
        report.samples,
        spec.vertex_count(),
        report.violations
    );
    println!(
        "largest sampled set: {} (cap {}), slack: level {}, sum {}, size {}",
        report.max_set_size,
        report.theorem_cap,
        report.max_slack_level,
        report.max_slack_sum,
        report.max_slack_size
    );
}
