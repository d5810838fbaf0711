//! Regenerate the rescaled-density summary table and the integer
//! Turán-value table.
//!
//! ```sh
//! cargo run --release --example density_report
//! ```

use turan4::bounds::{
    lift_lower, render_markdown, report::ReportConfig, table9_report, thomasse_yeo_lower,
    TuranValueTable,
};

fn main() {
    let rows = table9_report(ReportConfig::default());
    print!("{}", render_markdown(&rows));

    let ty = thomasse_yeo_lower();
    println!("\nlower bound on the limit: t_* >= {} ({})", ty.t_star, ty.decimal);

    let mut table = TuranValueTable::with_external_constants().expect("constants load");
    let lifted = lift_lower(&mut table, 18, 5).expect("base entry present");
    println!("lifted: T(18,5,4) >= {lifted}");
}
