//! In dimension 1 there is no period collapse: the counting function of a
//! segment [p/q, r/s] always has period exactly lcm(q, s). The closed-form
//! constituents come from interpolating the floor/ceiling count, and their
//! constant term is 1 exactly once per period.
//!
//! ```sh
//! cargo run --example segment_periods
//! ```

use ehrhart::counting::{count_segment_1d, CountOptions};
use ehrhart::{period_report, rat, segment_constituents, RationalPolytope};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    for (lo, hi) in [
        (rat(1, 2), rat(3, 2)),
        (rat(1, 3), rat(1, 2)),
        (rat(-2, 5), rat(1, 4)),
    ] {
        println!("segment [{lo}, {hi}]");
        let counts: Vec<u64> = (1..=8)
            .map(|n| count_segment_1d(&lo, &hi, n).unwrap())
            .collect();
        println!("  counts n = 1..8: {counts:?}");

        let closed_form = segment_constituents(&lo, &hi)?;
        println!("  constituents (period {}):", closed_form.period());
        for line in closed_form.to_string().lines() {
            println!("    {line}");
        }

        let polytope = RationalPolytope::segment(lo.clone(), hi.clone())?;
        let report = period_report(&polytope, &opts)?;
        println!(
            "  denominator {} = minimal period {} (full period, no collapse)",
            report.denominator, report.minimal_period
        );
        assert_eq!(report.denominator as usize, report.minimal_period);
        println!();
    }
    Ok(())
}
