//! Generators for the polytope families with known counting functions, each
//! paired with its closed-form expected quasi-polynomial for golden testing.

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::polytope::{HalfSpace, RationalPoint, RationalPolytope};
use crate::quasipolynomial::QuasiPolynomial;
use crate::rational::{rat, rat_int, Rational};

/// A named polytope together with its expected counting quasi-polynomial.
#[derive(Debug, Clone)]
pub struct ConstructionSpec {
    pub name: String,
    pub parameters: Vec<(String, i64)>,
    pub polytope: RationalPolytope,
    pub expected: QuasiPolynomial,
}

fn triangle_polytope(d: i64) -> Result<RationalPolytope> {
    RationalPolytope::polygon(vec![
        RationalPoint::from_ints(&[0, 0]),
        RationalPoint::new(vec![rat_int(1), rat(d - 1, d)]),
        RationalPoint::from_ints(&[d, 0]),
    ])
}

fn triangle_polynomial(d: i64) -> Polynomial {
    Polynomial::new(vec![rat_int(1), rat(d + 1, 2), rat(d - 1, 2)])
}

/// The triangle `(0,0), (1,(D−1)/D), (D,0)`: denominator `D`, but its
/// counting function is the polynomial `((D−1)/2)n² + ((D+1)/2)n + 1` —
/// period collapse all the way to 1, for every `D ≥ 2`.
pub fn triangle(d: i64) -> Result<ConstructionSpec> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "triangle parameter D must be ≥ 2, got {d}"
        )));
    }
    Ok(ConstructionSpec {
        name: "triangle".into(),
        parameters: vec![("D".into(), d)],
        polytope: triangle_polytope(d)?,
        expected: QuasiPolynomial::from_polynomial(triangle_polynomial(d))
            .with_dimension_hint(2)?,
    })
}

/// Per-residue expansion of `⌊n/s⌋·(Dn+1)`: for `n ≡ j (mod s)` with
/// residue representative `r = j mod s ∈ {0, …, s−1}`, `⌊n/s⌋ = (n−r)/s`.
fn pentagon_constituent(d: i64, s: i64, j: i64) -> Polynomial {
    let r = j % s;
    let extra = Polynomial::new(vec![
        rat(-r, s),
        Rational::new((1 - d * r).into(), s.into()),
        rat(d, s),
    ]);
    &triangle_polynomial(d) + &extra
}

/// The pentagon `(0,0), (1,(D−1)/D), (D,0), (D,−1/s), (0,−1/s)` for `s | D`:
/// denominator `D`, counting function `i_triangle(n) + ⌊n/s⌋·(Dn+1)` with
/// minimum period exactly `s`.
pub fn pentagon(d: i64, s: i64) -> Result<ConstructionSpec> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "pentagon parameter D must be ≥ 2, got {d}"
        )));
    }
    if s < 1 || d % s != 0 {
        return Err(Error::InvalidParameter(format!(
            "pentagon parameter s must be a positive divisor of D, got s = {s}, D = {d}"
        )));
    }
    let polytope = RationalPolytope::polygon(vec![
        RationalPoint::from_ints(&[0, 0]),
        RationalPoint::new(vec![rat_int(1), rat(d - 1, d)]),
        RationalPoint::from_ints(&[d, 0]),
        RationalPoint::new(vec![rat_int(d), rat(-1, s)]),
        RationalPoint::new(vec![rat_int(0), rat(-1, s)]),
    ])?;
    let constituents = (1..=s).map(|j| pentagon_constituent(d, s, j)).collect();
    Ok(ConstructionSpec {
        name: "pentagon".into(),
        parameters: vec![("D".into(), d), ("s".into(), s)],
        polytope,
        expected: QuasiPolynomial::new(constituents)?.with_dimension_hint(2)?,
    })
}

/// The prism `pentagon(D, s) × [0,1]^(dim−2)`: dimension `dim ≥ 3`,
/// denominator `D`, counting function `(n+1)^(dim−2) · i_pentagon(n)`,
/// minimum period `s`.
pub fn prism(d: i64, s: i64, dim: i64) -> Result<ConstructionSpec> {
    if dim < 3 {
        return Err(Error::InvalidParameter(format!(
            "prism dimension must be ≥ 3, got {dim}"
        )));
    }
    let base = pentagon(d, s)?;
    let box_dims = (dim - 2) as usize;
    let slab = Polynomial::from_ints(&[1, 1]).pow(box_dims);
    let constituents = base
        .expected
        .constituents()
        .iter()
        .map(|c| c * &slab)
        .collect();
    Ok(ConstructionSpec {
        name: "prism".into(),
        parameters: vec![("D".into(), d), ("s".into(), s), ("dim".into(), dim)],
        polytope: base.polytope.product_with_box(box_dims),
        expected: QuasiPolynomial::new(constituents)?.with_dimension_hint(dim as usize)?,
    })
}

/// The 3-D pyramid with vertices `(0,0,0)`, `(1,0,0)`, `(0,1,0)`, `(1,1,0)`,
/// `(1/2,0,1/2)`: denominator 2, yet `i_P(n) = C(n+3, 3)` — a polynomial.
/// Facets are fixture data validated against the vertices.
pub fn stanley_pyramid() -> ConstructionSpec {
    let vertices = vec![
        RationalPoint::from_ints(&[0, 0, 0]),
        RationalPoint::from_ints(&[1, 0, 0]),
        RationalPoint::from_ints(&[0, 1, 0]),
        RationalPoint::from_ints(&[1, 1, 0]),
        RationalPoint::new(vec![rat(1, 2), rat_int(0), rat(1, 2)]),
    ];
    let facets = vec![
        HalfSpace::from_ints(&[0, 0, -1], 0),
        HalfSpace::from_ints(&[0, -1, 0], 0),
        HalfSpace::from_ints(&[0, 1, 2], 1),
        HalfSpace::from_ints(&[-1, 0, 1], 0),
        HalfSpace::from_ints(&[1, 0, 1], 1),
    ];
    let polytope = RationalPolytope::with_facets(3, vertices, facets)
        .expect("pyramid fixture is consistent");
    // C(n+3, 3) = (n^3 + 6n^2 + 11n + 6) / 6
    let binomial = Polynomial::new(vec![rat_int(1), rat(11, 6), rat_int(1), rat(1, 6)]);
    ConstructionSpec {
        name: "stanley-pyramid".into(),
        parameters: Vec::new(),
        polytope,
        expected: QuasiPolynomial::from_polynomial(binomial)
            .with_dimension_hint(3)
            .expect("degree 3"),
    }
}

/// Three workhorse triangles:
///
/// 1. the collapsing triangle (`triangle(3)`);
/// 2. `(−1/2,−1/2), (1/2,−1/2), (0,3/2)` — satisfies Pick's theorem at every
///    dilation but not boundary linearity; its `n¹` coefficient has period 2
///    while the `n²` and `n⁰` coefficients have period 1;
/// 3. `(0,0), (1,0), (0,1/2)` — boundary counts are linear but Pick's
///    theorem fails at odd dilations.
pub fn example_triangle(id: u32) -> Result<ConstructionSpec> {
    match id {
        1 => {
            let mut spec = triangle(3)?;
            spec.name = "example1".into();
            Ok(spec)
        }
        2 => {
            let polytope = RationalPolytope::polygon(vec![
                RationalPoint::new(vec![rat(-1, 2), rat(-1, 2)]),
                RationalPoint::new(vec![rat(1, 2), rat(-1, 2)]),
                RationalPoint::new(vec![rat_int(0), rat(3, 2)]),
            ])?;
            let expected = QuasiPolynomial::new(vec![
                Polynomial::from_ints(&[1, 0, 1]),
                Polynomial::from_ints(&[1, 1, 1]),
            ])?
            .with_dimension_hint(2)?;
            Ok(ConstructionSpec {
                name: "example2".into(),
                parameters: Vec::new(),
                polytope,
                expected,
            })
        }
        3 => {
            let polytope = RationalPolytope::polygon(vec![
                RationalPoint::from_ints(&[0, 0]),
                RationalPoint::from_ints(&[1, 0]),
                RationalPoint::new(vec![rat_int(0), rat(1, 2)]),
            ])?;
            let expected = QuasiPolynomial::new(vec![
                Polynomial::new(vec![rat(3, 4), rat_int(1), rat(1, 4)]),
                Polynomial::new(vec![rat_int(1), rat_int(1), rat(1, 4)]),
            ])?
            .with_dimension_hint(2)?;
            Ok(ConstructionSpec {
                name: "example3".into(),
                parameters: Vec::new(),
                polytope,
                expected,
            })
        }
        other => Err(Error::InvalidParameter(format!(
            "example id must be 1, 2 or 3, got {other}"
        ))),
    }
}

/// Construction names addressable from the CLI.
pub fn construction_names() -> &'static [&'static str] {
    &[
        "triangle",
        "pentagon",
        "prism",
        "stanley-pyramid",
        "example1",
        "example2",
        "example3",
    ]
}

/// Builds a construction from its CLI name and parameters. Unused parameters
/// are rejected so a typo cannot silently change the polytope.
pub fn build_by_name(
    name: &str,
    d: Option<i64>,
    s: Option<i64>,
    dim: Option<i64>,
) -> Result<ConstructionSpec> {
    let missing = |flag: &str| {
        Error::InvalidParameter(format!("construction `{name}` requires --{flag}"))
    };
    let reject = |given: bool, flag: &str| {
        if given {
            Err(Error::InvalidParameter(format!(
                "construction `{name}` does not take --{flag}"
            )))
        } else {
            Ok(())
        }
    };
    match name {
        "triangle" => {
            reject(s.is_some(), "s")?;
            reject(dim.is_some(), "dim")?;
            triangle(d.ok_or_else(|| missing("D"))?)
        }
        "pentagon" => {
            reject(dim.is_some(), "dim")?;
            pentagon(d.ok_or_else(|| missing("D"))?, s.ok_or_else(|| missing("s"))?)
        }
        "prism" => prism(
            d.ok_or_else(|| missing("D"))?,
            s.ok_or_else(|| missing("s"))?,
            dim.ok_or_else(|| missing("dim"))?,
        ),
        "stanley-pyramid" => {
            reject(d.is_some(), "D")?;
            reject(s.is_some(), "s")?;
            reject(dim.is_some(), "dim")?;
            Ok(stanley_pyramid())
        }
        "example1" => {
            reject(s.is_some(), "s")?;
            reject(dim.is_some(), "dim")?;
            match d {
                Some(d) => {
                    let mut spec = triangle(d)?;
                    spec.name = "example1".into();
                    Ok(spec)
                }
                None => example_triangle(1),
            }
        }
        "example2" | "example3" => {
            reject(d.is_some(), "D")?;
            reject(s.is_some(), "s")?;
            reject(dim.is_some(), "dim")?;
            example_triangle(if name == "example2" { 2 } else { 3 })
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown construction `{other}` (expected one of {})",
            construction_names().join(", ")
        ))),
    }
}
