//! The polytope text format: write a construction to disk, read it back,
//! and get the same period analysis. The same files drive the `ehrhart`
//! binary (`ehrhart period <file>`).
//!
//! ```sh
//! cargo run --example polytope_files
//! ```

use ehrhart::counting::CountOptions;
use ehrhart::{parse_polytope, pentagon, period_report, render_polytope};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    let spec = pentagon(6, 3)?;
    let text = render_polytope(&spec.polytope);
    println!("pentagon(D = 6, s = 3) in the file format:");
    println!("{text}");

    let reloaded = parse_polytope(&text)?;
    let original = period_report(&spec.polytope, &opts)?;
    let round_tripped = period_report(&reloaded, &opts)?;
    assert_eq!(original, round_tripped);
    println!("period report after a file round trip is identical:");
    println!("{round_tripped}");
    Ok(())
}
