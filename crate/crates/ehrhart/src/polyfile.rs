//! The polytope text format.
//!
//! ```text
//! dim <d>
//! vertex <c1> <c2> ... <cd>
//! facet <a1> ... <ad> <b>       # a·x <= b, optional for d <= 2
//! ```
//!
//! Coordinates are rationals written `p/q` (integers without the `/1`).
//! Everything from `#` to the end of a line is a comment. Vertices may be in
//! any order for d ≤ 2; explicit polytopes of dimension ≥ 3 require facet
//! lines.

use crate::error::{Error, Result};
use crate::polytope::{HalfSpace, RationalPoint, RationalPolytope};
use crate::quasipolynomial::QuasiPolynomial;
use crate::rational::{parse_rational, Rational};
use std::path::Path;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn rational_at(line: usize, token: &str) -> Result<Rational> {
    parse_rational(token).map_err(|message| parse_err(line, message))
}

/// Parses the text format into a polytope (validating facets when present).
pub fn parse_polytope(text: &str) -> Result<RationalPolytope> {
    let mut dim: Option<usize> = None;
    let mut vertices: Vec<RationalPoint> = Vec::new();
    let mut facets: Vec<HalfSpace> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(line_no, "duplicate `dim` line"));
                }
                if rest.len() != 1 {
                    return Err(parse_err(line_no, "`dim` takes exactly one value"));
                }
                let d: usize = rest[0]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("malformed dimension `{}`", rest[0])))?;
                if d == 0 {
                    return Err(parse_err(line_no, "dimension must be ≥ 1"));
                }
                dim = Some(d);
            }
            "vertex" => {
                let d = dim.ok_or_else(|| parse_err(line_no, "`vertex` before `dim`"))?;
                if rest.len() != d {
                    return Err(parse_err(
                        line_no,
                        format!("vertex has {} coordinates, expected {}", rest.len(), d),
                    ));
                }
                let coords = rest
                    .iter()
                    .map(|t| rational_at(line_no, t))
                    .collect::<Result<Vec<_>>>()?;
                vertices.push(RationalPoint::new(coords));
            }
            "facet" => {
                let d = dim.ok_or_else(|| parse_err(line_no, "`facet` before `dim`"))?;
                if rest.len() != d + 1 {
                    return Err(parse_err(
                        line_no,
                        format!("facet has {} values, expected {}", rest.len(), d + 1),
                    ));
                }
                let mut values = rest
                    .iter()
                    .map(|t| rational_at(line_no, t))
                    .collect::<Result<Vec<_>>>()?;
                let offset = values.pop().expect("d+1 values");
                facets.push(
                    HalfSpace::new(values, offset)
                        .map_err(|e| parse_err(line_no, e.to_string()))?,
                );
            }
            other => {
                return Err(parse_err(line_no, format!("unknown keyword `{other}`")));
            }
        }
    }

    let dim = dim.ok_or_else(|| parse_err(1, "missing `dim` line"))?;
    if vertices.is_empty() {
        return Err(Error::InvalidPolytope("no vertex lines given".into()));
    }
    if facets.is_empty() {
        RationalPolytope::from_vertices(dim, vertices)
    } else {
        RationalPolytope::with_facets(dim, vertices, facets)
    }
}

/// Reads and parses a polytope file.
pub fn read_polytope_file(path: impl AsRef<Path>) -> Result<RationalPolytope> {
    let text = std::fs::read_to_string(path)?;
    parse_polytope(&text)
}

/// Renders a polytope in the text format: vertices in stored (canonical)
/// order followed by the facet list. Product structure is flattened.
pub fn render_polytope(polytope: &RationalPolytope) -> String {
    let mut out = String::new();
    render_into(&mut out, polytope);
    out
}

fn render_into(out: &mut String, polytope: &RationalPolytope) {
    out.push_str(&format!("dim {}\n", polytope.ambient_dim()));
    for v in polytope.vertices() {
        out.push_str("vertex");
        for c in v.coords() {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    for f in polytope.facets() {
        out.push_str("facet");
        for a in f.normal() {
            out.push_str(&format!(" {a}"));
        }
        out.push_str(&format!(" {}\n", f.offset()));
    }
}

/// Renders a polytope file with the expected quasi-polynomial attached as
/// trailing comment lines (ignored by the parser), as emitted by
/// `ehrhart construct`.
pub fn render_polytope_with_expectation(
    polytope: &RationalPolytope,
    expected: &QuasiPolynomial,
) -> String {
    let mut out = render_polytope(polytope);
    out.push_str(&format!(
        "# expected quasi-polynomial (period {}):\n",
        expected.period()
    ));
    for line in expected.to_string().lines() {
        out.push_str(&format!("# {line}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn parses_triangle() {
        let text = "# a triangle\ndim 2\nvertex 0 0\nvertex 1 2/3\nvertex 3 0\n";
        let p = parse_polytope(text).unwrap();
        assert_eq!(p.ambient_dim(), 2);
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.denominator(), num_bigint::BigInt::from(3));
    }

    #[test]
    fn round_trip_is_stable() {
        let text = "dim 2\nvertex 0 0\nvertex 1 2/3\nvertex 3 0\n";
        let p = parse_polytope(text).unwrap();
        let rendered = render_polytope(&p);
        let q = parse_polytope(&rendered).unwrap();
        assert_eq!(render_polytope(&q), rendered);
        assert_eq!(q.vertices(), p.vertices());
    }

    #[test]
    fn reports_line_numbers() {
        let text = "dim 2\nvertex 0 0\nvertex 1//2 0\nvertex 0 1\n";
        match parse_polytope(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("1//2"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_keywords_and_bad_shapes() {
        assert!(matches!(
            parse_polytope("dim 2\nvortex 0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_polytope("dim 2\nvertex 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_polytope("vertex 0 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_polytope("dim 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn dim3_requires_facets() {
        let text = "dim 3\nvertex 0 0 0\nvertex 1 0 0\nvertex 0 1 0\nvertex 0 0 1\n";
        assert!(matches!(
            parse_polytope(text),
            Err(Error::InvalidPolytope(_))
        ));
    }

    #[test]
    fn parses_pyramid_with_facets() {
        let text = "\
dim 3
vertex 0 0 0
vertex 1 0 0
vertex 0 1 0
vertex 1 1 0
vertex 1/2 0 1/2
facet 0 0 -1 0
facet 0 -1 0 0
facet 0 1 2 1
facet -1 0 1 0
facet 1 0 1 1
";
        let p = parse_polytope(text).unwrap();
        assert_eq!(p.ambient_dim(), 3);
        assert_eq!(p.denominator(), num_bigint::BigInt::from(2));
        let rendered = render_polytope(&p);
        let q = parse_polytope(&rendered).unwrap();
        assert_eq!(render_polytope(&q), rendered);
    }

    #[test]
    fn expectation_comments_are_ignored_by_parser() {
        let seg = RationalPolytope::segment(rat(1, 2), rat(3, 2)).unwrap();
        let qp = QuasiPolynomial::from_polynomial(crate::polynomial::Polynomial::from_ints(&[1, 1]));
        let text = render_polytope_with_expectation(&seg, &qp);
        let p = parse_polytope(&text).unwrap();
        assert_eq!(p.vertices()[0].coord(0), &rat(1, 2));
        assert_eq!(p.vertices()[1].coord(0), &rat(3, 2));
    }
}
