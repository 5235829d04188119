//! Line-oriented machine-readable rendering of reports, and its parser.
//!
//! The format is a sequence of `key value ...` lines. Rationals are written
//! `p/q` (integers without the `/1`), booleans as `true`/`false`, and
//! quasi-polynomials as a `quasipolynomial <period>` line followed by one
//! `constituent <j> <c_0> <c_1> ... <c_d>` line per constituent (ascending
//! powers, trailing zeros trimmed). Reports start with `report <kind>` and
//! end with `end`. Parsing a rendered report reproduces it exactly.

use crate::characterization::{CharacterizationReport, DilationRecord};
use crate::engine::PeriodReport;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::quasipolynomial::QuasiPolynomial;
use crate::rational::{parse_rational, Rational};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(idx, raw)| {
                let tokens: Vec<&str> = raw.split_whitespace().collect();
                if tokens.is_empty() {
                    None
                } else {
                    Some((idx + 1, tokens))
                }
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek_key(&self) -> Option<&str> {
        self.items.get(self.pos).map(|(_, t)| t[0])
    }

    fn next_expect(&mut self, key: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.items.get(self.pos) {
            Some((line, tokens)) if tokens[0] == key => {
                self.pos += 1;
                Ok((*line, tokens[1..].to_vec()))
            }
            Some((line, tokens)) => Err(parse_err(
                *line,
                format!("expected `{key}`, found `{}`", tokens[0]),
            )),
            None => Err(parse_err(0, format!("expected `{key}`, found end of input"))),
        }
    }
}

fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("malformed integer `{token}`")))
}

fn parse_u64(line: usize, token: &str) -> Result<u64> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("malformed integer `{token}`")))
}

fn parse_i64(line: usize, token: &str) -> Result<i64> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("malformed integer `{token}`")))
}

fn parse_bool(line: usize, token: &str) -> Result<bool> {
    match token {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(parse_err(line, format!("malformed boolean `{other}`"))),
    }
}

fn parse_rat(line: usize, token: &str) -> Result<Rational> {
    parse_rational(token).map_err(|m| parse_err(line, m))
}

fn one_token(line: usize, tokens: &[&str]) -> Result<()> {
    if tokens.len() == 1 {
        Ok(())
    } else {
        Err(parse_err(line, format!("expected one value, got {}", tokens.len())))
    }
}

fn write_polynomial_tokens(out: &mut String, p: &Polynomial) {
    for c in p.coeffs() {
        out.push(' ');
        out.push_str(&c.to_string());
    }
}

fn write_quasipolynomial(out: &mut String, qp: &QuasiPolynomial) {
    out.push_str(&format!("quasipolynomial {}\n", qp.period()));
    for (i, c) in qp.constituents().iter().enumerate() {
        out.push_str(&format!("constituent {}", i + 1));
        write_polynomial_tokens(out, c);
        out.push('\n');
    }
}

fn read_polynomial(line: usize, tokens: &[&str]) -> Result<Polynomial> {
    let coeffs = tokens
        .iter()
        .map(|t| parse_rat(line, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

fn read_quasipolynomial(lines: &mut Lines) -> Result<QuasiPolynomial> {
    let (line, tokens) = lines.next_expect("quasipolynomial")?;
    one_token(line, &tokens)?;
    let period = parse_usize(line, tokens[0])?;
    if period == 0 {
        return Err(parse_err(line, "period must be ≥ 1"));
    }
    let mut constituents = Vec::with_capacity(period);
    for j in 1..=period {
        let (line, tokens) = lines.next_expect("constituent")?;
        if tokens.is_empty() {
            return Err(parse_err(line, "constituent line needs an index"));
        }
        if parse_usize(line, tokens[0])? != j {
            return Err(parse_err(line, format!("expected constituent {j}")));
        }
        constituents.push(read_polynomial(line, &tokens[1..])?);
    }
    QuasiPolynomial::new(constituents)
}

/// Machine-readable form of a bare quasi-polynomial.
pub fn render_quasipolynomial(qp: &QuasiPolynomial) -> String {
    let mut out = String::new();
    write_quasipolynomial(&mut out, qp);
    out
}

/// Parses [`render_quasipolynomial`] output.
pub fn parse_quasipolynomial(text: &str) -> Result<QuasiPolynomial> {
    let mut lines = Lines::new(text);
    read_quasipolynomial(&mut lines)
}

/// Machine-readable form of a [`PeriodReport`].
pub fn render_period_report(report: &PeriodReport) -> String {
    let mut out = String::from("report period\n");
    out.push_str(&format!("denominator {}\n", report.denominator));
    out.push_str(&format!("minimal_period {}\n", report.minimal_period));
    out.push_str(&format!("collapse {}\n", report.collapse));
    out.push_str("coefficient_periods");
    for s in &report.coefficient_periods {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    write_quasipolynomial(&mut out, &report.quasipolynomial);
    out.push_str("end\n");
    out
}

/// Parses [`render_period_report`] output.
pub fn parse_period_report(text: &str) -> Result<PeriodReport> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next_expect("report")?;
    if tokens != ["period"] {
        return Err(parse_err(line, "expected `report period`"));
    }
    let (line, tokens) = lines.next_expect("denominator")?;
    one_token(line, &tokens)?;
    let denominator = parse_u64(line, tokens[0])?;
    let (line, tokens) = lines.next_expect("minimal_period")?;
    one_token(line, &tokens)?;
    let minimal_period = parse_usize(line, tokens[0])?;
    let (line, tokens) = lines.next_expect("collapse")?;
    one_token(line, &tokens)?;
    let collapse = parse_bool(line, tokens[0])?;
    let (line, tokens) = lines.next_expect("coefficient_periods")?;
    let coefficient_periods = tokens
        .iter()
        .map(|t| parse_usize(line, t))
        .collect::<Result<Vec<_>>>()?;
    let quasipolynomial = read_quasipolynomial(&mut lines)?;
    lines.next_expect("end")?;
    Ok(PeriodReport {
        denominator,
        minimal_period,
        coefficient_periods,
        collapse,
        quasipolynomial,
    })
}

/// Machine-readable form of a [`CharacterizationReport`].
pub fn render_characterization(report: &CharacterizationReport) -> String {
    let mut out = String::from("report characterization\n");
    out.push_str(&format!("area {}\n", report.area));
    out.push_str(&format!("denominator {}\n", report.denominator));
    for r in &report.per_dilation {
        out.push_str(&format!(
            "row {} {} {} {} {}\n",
            r.n, r.count, r.boundary, r.pick_holds, r.linear_holds
        ));
    }
    out.push_str(&format!("verdict_conditions {}\n", report.verdict_conditions));
    out.push_str(&format!("verdict_polynomial {}\n", report.verdict_polynomial));
    out.push_str("predicted");
    write_polynomial_tokens(&mut out, &report.predicted);
    out.push('\n');
    write_quasipolynomial(&mut out, &report.fitted);
    out.push_str("end\n");
    out
}

/// Parses [`render_characterization`] output.
pub fn parse_characterization(text: &str) -> Result<CharacterizationReport> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next_expect("report")?;
    if tokens != ["characterization"] {
        return Err(parse_err(line, "expected `report characterization`"));
    }
    let (line, tokens) = lines.next_expect("area")?;
    one_token(line, &tokens)?;
    let area = parse_rat(line, tokens[0])?;
    let (line, tokens) = lines.next_expect("denominator")?;
    one_token(line, &tokens)?;
    let denominator = parse_u64(line, tokens[0])?;
    let mut per_dilation = Vec::new();
    while lines.peek_key() == Some("row") {
        let (line, tokens) = lines.next_expect("row")?;
        if tokens.len() != 5 {
            return Err(parse_err(line, "row needs 5 values"));
        }
        per_dilation.push(DilationRecord {
            n: parse_i64(line, tokens[0])?,
            count: parse_u64(line, tokens[1])?,
            boundary: parse_u64(line, tokens[2])?,
            pick_holds: parse_bool(line, tokens[3])?,
            linear_holds: parse_bool(line, tokens[4])?,
        });
    }
    let (line, tokens) = lines.next_expect("verdict_conditions")?;
    one_token(line, &tokens)?;
    let verdict_conditions = parse_bool(line, tokens[0])?;
    let (line, tokens) = lines.next_expect("verdict_polynomial")?;
    one_token(line, &tokens)?;
    let verdict_polynomial = parse_bool(line, tokens[0])?;
    let (line, tokens) = lines.next_expect("predicted")?;
    let predicted = read_polynomial(line, &tokens)?;
    let fitted = read_quasipolynomial(&mut lines)?;
    lines.next_expect("end")?;
    Ok(CharacterizationReport {
        area,
        denominator,
        per_dilation,
        verdict_conditions,
        verdict_polynomial,
        predicted,
        fitted,
    })
}
