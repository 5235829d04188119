//! Fitting Ehrhart quasi-polynomials from count series by exact
//! interpolation, period reports, and reciprocity verification.

use crate::counting::{count_closed, count_interior, CountKind, CountMethod, CountOptions, CountSeries};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::polytope::RationalPolytope;
use crate::quasipolynomial::QuasiPolynomial;
use crate::rational::{rat_int, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::fmt;

/// The period analysis of one polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    /// Denominator `D` of the polytope (always a period).
    pub denominator: u64,
    /// Smallest period of the fitted quasi-polynomial; divides `D`.
    pub minimal_period: usize,
    /// Per-coefficient periods `[s_0, …, s_d]`; their lcm is the minimal
    /// period.
    pub coefficient_periods: Vec<usize>,
    /// Whether the minimal period is strictly smaller than `D`.
    pub collapse: bool,
    /// The fitted quasi-polynomial, reduced to its minimal period.
    pub quasipolynomial: QuasiPolynomial,
}

impl fmt::Display for PeriodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "denominator: {}", self.denominator)?;
        writeln!(f, "minimal period: {}", self.minimal_period)?;
        writeln!(f, "collapse: {}", if self.collapse { "yes" } else { "no" })?;
        write!(f, "coefficient periods:")?;
        for s in &self.coefficient_periods {
            write!(f, " {s}")?;
        }
        writeln!(f)?;
        writeln!(f, "constituents:")?;
        write!(f, "{}", self.quasipolynomial)
    }
}

/// Counts `i_P(1..=n_max)` by enumeration.
pub fn sample_counts(
    polytope: &RationalPolytope,
    n_max: i64,
    options: &CountOptions,
) -> Result<CountSeries> {
    if n_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "sample horizon must be ≥ 1, got {n_max}"
        )));
    }
    let values = (1..=n_max)
        .map(|n| count_closed(polytope, n, options))
        .collect::<Result<Vec<u64>>>()?;
    Ok(CountSeries::new(
        values,
        CountKind::Closed,
        CountMethod::Enumeration,
    ))
}

/// Exact Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
fn interpolate(points: &[(i64, Rational)]) -> Polynomial {
    let mut result = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Polynomial::constant(rat_int(1));
        let mut denom = rat_int(1);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::new(vec![rat_int(-xj), rat_int(1)]);
                denom *= rat_int(xi - xj);
            }
        }
        result = &result + &basis.scaled(&(yi / &denom));
    }
    result
}

/// Fits the period-`period_hint` quasi-polynomial of degree ≤ `dim` through
/// a closed count series: residue class `j` is interpolated through the
/// samples at `j, j+D, …, j+dim·D`, and every remaining sample is checked
/// against the fit.
///
/// Errors when extra samples disagree with the interpolation — the hint does
/// not divide a true period, or the series is not polytope counting data.
pub fn fit_quasipolynomial(
    series: &CountSeries,
    dim: usize,
    period_hint: usize,
) -> Result<QuasiPolynomial> {
    if period_hint == 0 {
        return Err(Error::InvalidParameter("period hint must be ≥ 1".into()));
    }
    if series.kind() != CountKind::Closed {
        return Err(Error::InvalidParameter(
            "fitting expects a closed count series".into(),
        ));
    }
    let needed = period_hint * (dim + 1);
    if series.len() < needed {
        return Err(Error::InvalidParameter(format!(
            "need at least {needed} samples to fit period {period_hint} at degree {dim}, got {}",
            series.len()
        )));
    }
    let mut constituents = Vec::with_capacity(period_hint);
    for j in 1..=period_hint {
        let points: Vec<(i64, Rational)> = (0..=dim)
            .map(|i| {
                let n = j + i * period_hint;
                (n as i64, rat_int(series.value(n) as i64))
            })
            .collect();
        constituents.push(interpolate(&points));
    }
    let qp = QuasiPolynomial::new(constituents)?.with_dimension_hint(dim)?;
    for n in 1..=series.len() {
        let predicted = qp.eval(n as i64);
        if predicted != rat_int(series.value(n) as i64) {
            return Err(Error::PeriodHint {
                n: n as i64,
                actual: series.value(n),
                predicted: predicted.to_string(),
            });
        }
    }
    Ok(qp)
}

/// Closed-form constituents of a 1-D segment `[lo, hi]` with `lo < hi`:
/// period `lcm(q, s)` of the reduced denominators, and
/// `f_j(n) = (hi − lo)·n + 1 − (⌈j·lo⌉ − j·lo) − (j·hi − ⌊j·hi⌋)`.
pub fn segment_constituents(lo: &Rational, hi: &Rational) -> Result<QuasiPolynomial> {
    if lo >= hi {
        return Err(Error::Degenerate(format!(
            "segment [{lo}, {hi}] is empty or a point"
        )));
    }
    let period = lo
        .denom()
        .lcm(hi.denom())
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter("segment denominator too large".into()))?;
    let slope = hi - lo;
    let mut constituents = Vec::with_capacity(period);
    for j in 1..=period {
        let j_rat = rat_int(j as i64);
        let jlo = &j_rat * lo;
        let jhi = &j_rat * hi;
        let constant = rat_int(1) - (jlo.ceil() - &jlo) - (&jhi - jhi.floor());
        constituents.push(Polynomial::new(vec![constant, slope.clone()]));
    }
    QuasiPolynomial::new(constituents)?.with_dimension_hint(1)
}

/// One reciprocity failure: the interior count at `n` differs from
/// `(−1)^dim · q(−n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityWitness {
    pub n: i64,
    pub interior: u64,
    pub expected: Rational,
}

/// Result of a reciprocity verification over `n = 1..=checked_up_to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityOutcome {
    pub checked_up_to: i64,
    pub witnesses: Vec<ReciprocityWitness>,
}

impl ReciprocityOutcome {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks `#(interior(nP) ∩ ℤ^d) = (−1)^dim · q(−n)` for `n = 1..=n_max`.
/// Failures are returned as witnesses, not errors.
pub fn verify_reciprocity(
    polytope: &RationalPolytope,
    qp: &QuasiPolynomial,
    n_max: i64,
    options: &CountOptions,
) -> Result<ReciprocityOutcome> {
    let sign = if polytope.dim().is_multiple_of(2) { 1 } else { -1 };
    let mut witnesses = Vec::new();
    for n in 1..=n_max {
        let interior = count_interior(polytope, n, options)?;
        let expected = qp.eval(-n) * rat_int(sign);
        if rat_int(interior as i64) != expected {
            witnesses.push(ReciprocityWitness {
                n,
                interior,
                expected,
            });
        }
    }
    Ok(ReciprocityOutcome {
        checked_up_to: n_max,
        witnesses,
    })
}

/// Number of samples `period_report` takes (the fitting minimum plus one
/// extra period of validation points).
pub fn default_sample_horizon(denominator: u64, dim: usize) -> i64 {
    (denominator as i64) * (dim as i64 + 1) + denominator as i64
}

/// Samples, fits with the denominator as the period hint (a true period),
/// reduces to the minimal period, and reports the per-coefficient periods.
pub fn period_report(polytope: &RationalPolytope, options: &CountOptions) -> Result<PeriodReport> {
    let denominator = polytope.denominator().to_u64().ok_or_else(|| {
        Error::InvalidParameter("denominator too large for period analysis".into())
    })?;
    let dim = polytope.dim();
    let series = sample_counts(polytope, default_sample_horizon(denominator, dim), options)?;
    let fitted = fit_quasipolynomial(&series, dim, denominator as usize)?;
    let reduced = fitted.reduced();
    let minimal_period = reduced.period();
    Ok(PeriodReport {
        denominator,
        minimal_period,
        coefficient_periods: fitted.coefficient_periods(),
        collapse: (minimal_period as u64) < denominator,
        quasipolynomial: reduced,
    })
}
