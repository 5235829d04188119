//! Per-coefficient periods need not shrink as the power grows. For the
//! triangle (-1/2,-1/2), (1/2,-1/2), (0,3/2) the n² and n⁰ coefficients
//! have period 1 while the n¹ coefficient has period 2.
//!
//! ```sh
//! cargo run --example coefficient_periods
//! ```

use ehrhart::counting::CountOptions;
use ehrhart::{example_triangle, period_report};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    let spec = example_triangle(2)?;
    println!("triangle vertices:");
    for v in spec.polytope.vertices() {
        println!("  {v}");
    }

    let report = period_report(&spec.polytope, &opts)?;
    println!("constituents (period {}):", report.minimal_period);
    for line in report.quasipolynomial.to_string().lines() {
        println!("  {line}");
    }

    println!("per-coefficient periods [s_0, s_1, s_2]: {:?}", report.coefficient_periods);
    let s = &report.coefficient_periods;
    assert!(s[1] > s[0]);
    println!(
        "s_1 = {} exceeds s_0 = {}: the linear coefficient alternates while \
         the constant term does not",
        s[1], s[0]
    );
    Ok(())
}
