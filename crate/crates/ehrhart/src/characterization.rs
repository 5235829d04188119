//! Deciding polynomiality of a polygon's counting function.
//!
//! For a rational polygon with area `A` and denominator `D`, the following
//! are equivalent: `i_P` is a polynomial; `i_P(n) = An² + ½∂_P(1)n + 1`;
//! every dilate satisfies Pick's theorem and boundary counts are linear;
//! the same two conditions hold just for `n = 1..D`. The report checks the
//! finite conditions, fits the quasi-polynomial, and asserts that the two
//! verdicts agree — a disagreement is an internal bug, never data.

use crate::counting::{count_boundary, count_closed, CountOptions};
use crate::engine::{period_report, PeriodReport};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::polytope::RationalPolytope;
use crate::quasipolynomial::QuasiPolynomial;
use crate::rational::{rat, rat_int, Rational};
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Outcome of one Pick's-theorem check: `i_P(n) = An² + ½∂_P(n) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PickCheck {
    pub holds: bool,
    /// `i_P(n) − (An² + ½∂_P(n) + 1)`, exactly.
    pub residual: Rational,
}

/// Outcome of one boundary-linearity check: `∂_P(n) = n·∂_P(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLinearity {
    pub holds: bool,
    pub boundary: u64,
    pub expected: u64,
}

/// Per-dilation record in a [`CharacterizationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationRecord {
    pub n: i64,
    pub count: u64,
    pub boundary: u64,
    pub pick_holds: bool,
    pub linear_holds: bool,
}

/// The polynomiality analysis of one polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub area: Rational,
    pub denominator: u64,
    pub per_dilation: Vec<DilationRecord>,
    /// Pick's theorem and boundary linearity hold for all `n = 1..D`.
    pub verdict_conditions: bool,
    /// The fitted quasi-polynomial has minimal period 1.
    pub verdict_polynomial: bool,
    /// `An² + ½∂_P(1)n + 1`: the only polynomial `i_P` can be.
    pub predicted: Polynomial,
    /// The fitted quasi-polynomial, reduced to its minimal period.
    pub fitted: QuasiPolynomial,
}

fn pick_residual(count: u64, boundary: u64, area: &Rational, n: i64) -> Rational {
    let rhs = area * rat_int(n * n) + rat(boundary as i64, 2) + rat_int(1);
    rat_int(count as i64) - rhs
}

/// Checks Pick's theorem on the `n`-th dilate of a polygon.
pub fn check_pick(polytope: &RationalPolytope, n: i64, options: &CountOptions) -> Result<PickCheck> {
    let area = polytope.area()?;
    let count = count_closed(polytope, n, options)?;
    let boundary = count_boundary(polytope, n, options)?;
    let residual = pick_residual(count, boundary, &area, n);
    Ok(PickCheck {
        holds: residual.is_zero(),
        residual,
    })
}

/// Checks boundary-count linearity on the `n`-th dilate of a polygon.
pub fn check_boundary_linear(
    polytope: &RationalPolytope,
    n: i64,
    options: &CountOptions,
) -> Result<BoundaryLinearity> {
    if polytope.ambient_dim() != 2 {
        return Err(Error::InvalidParameter(
            "boundary linearity is a polygon check".into(),
        ));
    }
    let boundary = count_boundary(polytope, n, options)?;
    let expected = (n as u64) * count_boundary(polytope, 1, options)?;
    Ok(BoundaryLinearity {
        holds: boundary == expected,
        boundary,
        expected,
    })
}

/// Runs the full equivalence: the finite conditions for `n = 1..D`, the
/// fitted minimal period, and the predicted polynomial. Errors with
/// [`Error::Inconsistency`] if the two verdicts disagree or a polynomial
/// verdict does not match the prediction — both are proved impossible for
/// correct counting, so either indicates a bug.
pub fn characterize(
    polytope: &RationalPolytope,
    options: &CountOptions,
) -> Result<CharacterizationReport> {
    let area = polytope.area()?;
    let denominator = polytope
        .denominator()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("denominator too large".into()))?;
    let boundary_first = count_boundary(polytope, 1, options)?;

    let mut per_dilation = Vec::with_capacity(denominator as usize);
    for n in 1..=denominator as i64 {
        let count = count_closed(polytope, n, options)?;
        let boundary = count_boundary(polytope, n, options)?;
        per_dilation.push(DilationRecord {
            n,
            count,
            boundary,
            pick_holds: pick_residual(count, boundary, &area, n).is_zero(),
            linear_holds: boundary == (n as u64) * boundary_first,
        });
    }
    let verdict_conditions = per_dilation
        .iter()
        .all(|r| r.pick_holds && r.linear_holds);

    let report: PeriodReport = period_report(polytope, options)?;
    let verdict_polynomial = report.minimal_period == 1;

    if verdict_conditions != verdict_polynomial {
        return Err(Error::Inconsistency(format!(
            "finite conditions say polynomial = {verdict_conditions}, \
             fitted minimal period {} says polynomial = {verdict_polynomial}",
            report.minimal_period
        )));
    }

    let predicted = Polynomial::new(vec![
        rat_int(1),
        rat(boundary_first as i64, 2),
        area.clone(),
    ]);
    if verdict_polynomial && report.quasipolynomial.constituent(1) != &predicted {
        return Err(Error::Inconsistency(format!(
            "fitted polynomial {} differs from predicted {}",
            report.quasipolynomial.constituent(1),
            predicted
        )));
    }

    Ok(CharacterizationReport {
        area,
        denominator,
        per_dilation,
        verdict_conditions,
        verdict_polynomial,
        predicted,
        fitted: report.quasipolynomial,
    })
}

impl fmt::Display for CharacterizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "area: {}", self.area)?;
        writeln!(f, "denominator: {}", self.denominator)?;
        writeln!(f, "{:>4} {:>10} {:>10} {:>6} {:>7}", "n", "count", "boundary", "pick", "linear")?;
        for r in &self.per_dilation {
            writeln!(
                f,
                "{:>4} {:>10} {:>10} {:>6} {:>7}",
                r.n,
                r.count,
                r.boundary,
                if r.pick_holds { "yes" } else { "no" },
                if r.linear_holds { "yes" } else { "no" },
            )?;
        }
        writeln!(
            f,
            "pick and linearity for n = 1..{}: {}",
            self.denominator,
            if self.verdict_conditions { "hold" } else { "fail" }
        )?;
        writeln!(f, "fitted minimal period: {}", self.fitted.period())?;
        writeln!(
            f,
            "verdict: {}",
            if self.verdict_polynomial {
                "polynomial"
            } else {
                "NOT polynomial"
            }
        )?;
        writeln!(f, "predicted polynomial: {}", self.predicted)?;
        writeln!(f, "fitted constituents:")?;
        write!(f, "{}", self.fitted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_triangle, triangle};
    use crate::polytope::RationalPoint;

    fn opts() -> CountOptions {
        CountOptions::default()
    }

    fn unit_square() -> RationalPolytope {
        RationalPolytope::polygon(vec![
            RationalPoint::from_ints(&[0, 0]),
            RationalPoint::from_ints(&[1, 0]),
            RationalPoint::from_ints(&[1, 1]),
            RationalPoint::from_ints(&[0, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn pick_checks() {
        let e2 = example_triangle(2).unwrap().polytope;
        assert!(check_pick(&e2, 1, &opts()).unwrap().holds);

        let e3 = example_triangle(3).unwrap().polytope;
        let check = check_pick(&e3, 1, &opts()).unwrap();
        assert!(!check.holds);
        assert_eq!(check.residual, rat(-1, 4));

        let square = unit_square();
        for n in 1..=5 {
            assert!(check_pick(&square, n, &opts()).unwrap().holds);
        }
    }

    #[test]
    fn linearity_checks() {
        let e2 = example_triangle(2).unwrap().polytope;
        let check = check_boundary_linear(&e2, 2, &opts()).unwrap();
        assert!(!check.holds);
        assert_eq!((check.boundary, check.expected), (4, 0));

        let e3 = example_triangle(3).unwrap().polytope;
        let check = check_boundary_linear(&e3, 2, &opts()).unwrap();
        assert!(check.holds);
        assert_eq!((check.boundary, check.expected), (4, 4));

        let t3 = triangle(3).unwrap().polytope;
        for n in 1..=3 {
            assert!(check_boundary_linear(&t3, n, &opts()).unwrap().holds);
        }
    }

    #[test]
    fn characterize_collapsing_triangle() {
        let t4 = triangle(4).unwrap().polytope;
        let report = characterize(&t4, &opts()).unwrap();
        assert!(report.verdict_conditions);
        assert!(report.verdict_polynomial);
        let expected = Polynomial::new(vec![rat_int(1), rat(5, 2), rat(3, 2)]);
        assert_eq!(report.predicted, expected);
        assert_eq!(report.fitted.constituent(1), &expected);
    }

    #[test]
    fn characterize_pick_only_triangle() {
        let e2 = example_triangle(2).unwrap().polytope;
        let report = characterize(&e2, &opts()).unwrap();
        assert!(!report.verdict_conditions);
        assert!(!report.verdict_polynomial);
        assert!(report.per_dilation.iter().all(|r| r.pick_holds));
        assert!(report.per_dilation[0].linear_holds); // 0 = 1·0
        assert!(!report.per_dilation[1].linear_holds);
    }

    #[test]
    fn characterize_linear_only_triangle() {
        let e3 = example_triangle(3).unwrap().polytope;
        let report = characterize(&e3, &opts()).unwrap();
        assert!(!report.verdict_conditions);
        assert!(!report.verdict_polynomial);
        assert!(report.per_dilation.iter().all(|r| r.linear_holds));
        assert!(!report.per_dilation[0].pick_holds);
        assert!(report.per_dilation[1].pick_holds);
    }

    #[test]
    fn characterize_integral_polygon() {
        let report = characterize(&unit_square(), &opts()).unwrap();
        assert!(report.verdict_conditions);
        assert!(report.verdict_polynomial);
        assert_eq!(report.predicted, Polynomial::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn report_table_rendering() {
        let e2 = example_triangle(2).unwrap().polytope;
        let report = characterize(&e2, &opts()).unwrap();
        let text = report.to_string();
        assert!(text.contains("verdict: NOT polynomial"), "{text}");
        assert!(text.contains("pick and linearity for n = 1..2: fail"), "{text}");
        assert!(text.lines().any(|l| l.trim_start().starts_with("2") && l.contains("no")));
    }
}
