//! When is a polygon's counting function a plain polynomial? Exactly when
//! every dilate up to the denominator satisfies Pick's theorem AND boundary
//! counts grow linearly. Each report below checks the finite conditions,
//! fits the quasi-polynomial, and asserts the two verdicts agree.
//!
//! ```sh
//! cargo run --example characterize_polygons
//! ```

use ehrhart::counting::CountOptions;
use ehrhart::{characterize, example_triangle, triangle, RationalPoint, RationalPolytope};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    let cases: Vec<(&str, RationalPolytope)> = vec![
        ("collapsing triangle (D = 4)", triangle(4)?.polytope),
        ("Pick holds, linearity fails", example_triangle(2)?.polytope),
        ("linearity holds, Pick fails", example_triangle(3)?.polytope),
        (
            "integral square",
            RationalPolytope::polygon(vec![
                RationalPoint::from_ints(&[0, 0]),
                RationalPoint::from_ints(&[1, 0]),
                RationalPoint::from_ints(&[1, 1]),
                RationalPoint::from_ints(&[0, 1]),
            ])?,
        ),
    ];
    for (label, polygon) in cases {
        println!("== {label}");
        println!("{}", characterize(&polygon, &opts)?);
        println!();
    }
    Ok(())
}
