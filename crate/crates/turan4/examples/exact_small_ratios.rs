//! Exact Turán values for small n/alpha ratios: the piecewise formula
//! against the disjoint-union block patterns, plus the conjectured
//! exceptional line.
//!
//! ```sh
//! cargo run --release --example exact_small_ratios
//! ```

use turan4::bounds::{section8_exact, union_upper, Section8};

fn main() {
    println!("n alpha  formula  union");
    for n in 6..=24u64 {
        for alpha in 1..=n {
            if 2 * n < 3 * alpha || 4 * n > 7 * alpha {
                continue;
            }
            let u = union_upper(n, alpha).unwrap();
            match section8_exact(n, alpha) {
                Section8::Value(v) => {
                    let u_str = u.map_or("-".to_string(), |x| x.to_string());
                    println!("{n:>2} {alpha:>4}  {v:>7}  {u_str:>5}");
                    if let Some(u) = u {
                        assert_eq!(u, v);
                    }
                }
                Section8::Exceptional { union_value } => {
                    println!("{n:>2} {alpha:>4}  conj.={union_value} (excluded line, equality conjectured)");
                }
                Section8::OutOfRange => unreachable!(),
            }
        }
    }
}
