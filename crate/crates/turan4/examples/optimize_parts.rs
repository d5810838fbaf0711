//! Minimize the asymmetric expansion objective over the simplex and
//! certify the result in exact rationals.
//!
//! ```sh
//! cargo run --release --example optimize_parts
//! ```

use turan4::optimize::{example2_objective, example2_published_point, gradient_check, minimize};
use turan4::rational::{Rat, Round};

fn main() {
    let obj = example2_objective();

    let uniform = vec![Rat::new(1, 8); 8];
    println!("uniform point (exact): {}", obj.eval_exact(&uniform));

    let published = example2_published_point();
    println!("published weights (float): {:.7}", obj.eval(&published).unwrap());

    let r = minimize(&obj, 1, 32);
    println!("optimized weights: {:?}", r.x.iter().map(|v| (v * 1e5).round() / 1e5).collect::<Vec<_>>());
    println!("optimized value (float): {:.7}", r.value);
    println!(
        "certified bound: {} <= {}",
        r.value_certified,
        r.value_certified.decimal(6, Round::Up)
    );
    let err = gradient_check(&obj, &r.x, 1e-6).unwrap();
    println!("gradient check at the minimizer: {err:.2e}");
    assert!(r.value_certified < Rat::new(52875, 65536));
}
