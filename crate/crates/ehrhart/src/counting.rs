//! Exact lattice-point counting by bounding-box enumeration with exact
//! membership, plus closed forms for 1-D segments and the half-open
//! parallelogram tile.
//!
//! The enumerator is deliberately the dumbest trustworthy thing: scan the
//! integer bounding box of the dilate and test each point against the facet
//! constraints in exact integer arithmetic. It doubles as the brute-force
//! oracle for everything the rest of the crate claims.

use crate::error::{Error, Result};
use crate::polytope::{RationalPoint, RationalPolytope};
use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

/// Default bound on enumeration box cells before counting refuses to run.
pub const DEFAULT_CELL_LIMIT: u64 = 100_000_000;

/// Knobs for the enumerator.
#[derive(Debug, Clone)]
pub struct CountOptions {
    /// Maximum number of bounding-box cells a single count may scan.
    pub cell_limit: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            cell_limit: DEFAULT_CELL_LIMIT,
        }
    }
}

/// Which point set a series counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    Closed,
    Interior,
    Boundary,
}

/// How a series was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Enumeration,
    Formula,
}

/// The sequence `i_P(1), …, i_P(N)` with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    values: Vec<u64>,
    kind: CountKind,
    method: CountMethod,
}

impl CountSeries {
    pub fn new(values: Vec<u64>, kind: CountKind, method: CountMethod) -> Self {
        CountSeries {
            values,
            kind,
            method,
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn method(&self) -> CountMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `i_P(n)` for `n` in `1..=len`.
    pub fn value(&self, n: usize) -> u64 {
        self.values[n - 1]
    }
}

/// `a · x {<, ≤} num/den` over integer points, with `den > 0`, so the test
/// is `den·(a·x) {<, ≤} num` in integers.
#[derive(Debug, Clone)]
struct Constraint {
    normal: Vec<BigInt>,
    num: BigInt,
    den: BigInt,
    strict: bool,
}

fn polytope_constraints(polytope: &RationalPolytope, strict: bool) -> Vec<Constraint> {
    polytope
        .facets()
        .iter()
        .map(|f| Constraint {
            normal: f.normal().to_vec(),
            num: f.offset().numer().clone(),
            den: f.offset().denom().clone(),
            strict,
        })
        .collect()
}

/// Counts integer points in a box subject to constraints. Uses a native
/// i128 scan when every bound is small enough to rule out overflow and
/// falls back to big-integer arithmetic otherwise.
fn enumerate_box(
    constraints: &[Constraint],
    bbox: &[(BigInt, BigInt)],
    cell_limit: u64,
) -> Result<u64> {
    let mut cells = BigInt::one();
    for (lo, hi) in bbox {
        if hi < lo {
            return Ok(0);
        }
        cells *= hi - lo + 1;
    }
    match cells.to_u128() {
        Some(c) if c <= cell_limit as u128 => {}
        _ => {
            return Err(Error::ResourceLimit {
                cells: cells.to_u128().unwrap_or(u128::MAX),
                limit: cell_limit,
            });
        }
    }

    if let Some((small_constraints, small_box)) = downcast_to_i128(constraints, bbox) {
        return Ok(scan_i128(&small_constraints, &small_box));
    }
    Ok(scan_big(constraints, bbox))
}

struct ConstraintI128 {
    normal: Vec<i128>,
    num: i128,
    den: i128,
    strict: bool,
}

type SmallProblem = (Vec<ConstraintI128>, Vec<(i128, i128)>);

fn downcast_to_i128(constraints: &[Constraint], bbox: &[(BigInt, BigInt)]) -> Option<SmallProblem> {
    let small_box: Option<Vec<(i128, i128)>> = bbox
        .iter()
        .map(|(lo, hi)| Some((lo.to_i128()?, hi.to_i128()?)))
        .collect();
    let small_box = small_box?;
    let axis_mag: Vec<i128> = small_box
        .iter()
        .map(|(lo, hi)| lo.abs().max(hi.abs()))
        .collect();
    let mut out = Vec::with_capacity(constraints.len());
    for c in constraints {
        let normal: Option<Vec<i128>> = c.normal.iter().map(ToPrimitive::to_i128).collect();
        let normal = normal?;
        let num = c.num.to_i128()?;
        let den = c.den.to_i128()?;
        // overflow bound for den·(a·x) against num
        let mut bound: i128 = 0;
        for (a, m) in normal.iter().zip(&axis_mag) {
            bound = bound.checked_add(a.checked_abs()?.checked_mul(*m)?)?;
        }
        bound = bound.checked_mul(den)?;
        bound.checked_add(num.checked_abs()?)?;
        out.push(ConstraintI128 {
            normal,
            num,
            den,
            strict: c.strict,
        });
    }
    Some((out, small_box))
}

fn scan_i128(constraints: &[ConstraintI128], bbox: &[(i128, i128)]) -> u64 {
    let dims = bbox.len();
    let mut x: Vec<i128> = bbox.iter().map(|b| b.0).collect();
    let mut count = 0u64;
    'outer: loop {
        let inside = constraints.iter().all(|c| {
            let dot: i128 = c.normal.iter().zip(&x).map(|(a, xi)| a * xi).sum();
            let lhs = c.den * dot;
            if c.strict {
                lhs < c.num
            } else {
                lhs <= c.num
            }
        });
        if inside {
            count += 1;
        }
        let mut axis = dims;
        while axis > 0 {
            axis -= 1;
            if x[axis] < bbox[axis].1 {
                x[axis] += 1;
                for later in axis + 1..dims {
                    x[later] = bbox[later].0;
                }
                continue 'outer;
            }
        }
        return count;
    }
}

fn scan_big(constraints: &[Constraint], bbox: &[(BigInt, BigInt)]) -> u64 {
    let dims = bbox.len();
    let mut x: Vec<BigInt> = bbox.iter().map(|b| b.0.clone()).collect();
    let mut count = 0u64;
    'outer: loop {
        let inside = constraints.iter().all(|c| {
            let dot: BigInt = c.normal.iter().zip(&x).map(|(a, xi)| a * xi).sum();
            let lhs = &c.den * dot;
            if c.strict {
                lhs < c.num
            } else {
                lhs <= c.num
            }
        });
        if inside {
            count += 1;
        }
        let mut axis = dims;
        while axis > 0 {
            axis -= 1;
            if x[axis] < bbox[axis].1 {
                x[axis] += BigInt::one();
                for later in axis + 1..dims {
                    x[later] = bbox[later].0.clone();
                }
                continue 'outer;
            }
        }
        return count;
    }
}

fn count_with_mode(
    polytope: &RationalPolytope,
    n: i64,
    strict: bool,
    options: &CountOptions,
) -> Result<u64> {
    let dilated = polytope.dilate(n)?;
    let constraints = polytope_constraints(&dilated, strict);
    enumerate_box(&constraints, &dilated.bounding_box(), options.cell_limit)
}

/// `#(nP ∩ ℤ^d)`.
pub fn count_closed(polytope: &RationalPolytope, n: i64, options: &CountOptions) -> Result<u64> {
    count_with_mode(polytope, n, false, options)
}

/// `#(interior(nP) ∩ ℤ^d)` (full-dimensional polytopes).
pub fn count_interior(polytope: &RationalPolytope, n: i64, options: &CountOptions) -> Result<u64> {
    count_with_mode(polytope, n, true, options)
}

/// `#(boundary(nP) ∩ ℤ^d)`, as closed minus interior.
pub fn count_boundary(polytope: &RationalPolytope, n: i64, options: &CountOptions) -> Result<u64> {
    let closed = count_closed(polytope, n, options)?;
    let interior = count_interior(polytope, n, options)?;
    Ok(closed - interior)
}

/// Independent 2-D boundary count: lattice points per closed edge, with
/// doubly counted lattice vertices subtracted.
pub fn count_boundary_edge_walk(polytope: &RationalPolytope, n: i64) -> Result<u64> {
    if polytope.ambient_dim() != 2 {
        return Err(Error::InvalidParameter(
            "edge-walk boundary counting is 2-D only".into(),
        ));
    }
    let dilated = polytope.dilate(n)?;
    let vertices = dilated.vertices();
    let m = vertices.len();
    let mut total = 0u64;
    for i in 0..m {
        total += count_lattice_on_segment(&vertices[i], &vertices[(i + 1) % m]);
    }
    let lattice_vertices = vertices
        .iter()
        .filter(|v| v.coords().iter().all(Rational::is_integer))
        .count() as u64;
    Ok(total - lattice_vertices)
}

/// Lattice points on the closed segment between two rational 2-D points.
pub fn count_lattice_on_segment(a: &RationalPoint, b: &RationalPoint) -> u64 {
    assert_eq!(a.dim(), 2);
    assert_eq!(b.dim(), 2);
    let (ax, ay) = (a.coord(0), a.coord(1));
    let (bx, by) = (b.coord(0), b.coord(1));
    if ax == bx {
        if !ax.is_integer() {
            return 0;
        }
        let (lo, hi) = if ay <= by { (ay, by) } else { (by, ay) };
        return integers_in_interval(lo, hi);
    }
    let slope = (by - ay) / (bx - ax);
    let (lo, hi) = if ax <= bx { (ax, bx) } else { (bx, ax) };
    let mut x = lo.ceil().to_integer();
    let end = hi.floor().to_integer();
    let mut count = 0u64;
    while x <= end {
        let y = ay + (Rational::from_integer(x.clone()) - ax) * &slope;
        if y.is_integer() {
            count += 1;
        }
        x += 1;
    }
    count
}

fn integers_in_interval(lo: &Rational, hi: &Rational) -> u64 {
    let span: BigInt = hi.floor().to_integer() - lo.ceil().to_integer() + 1;
    if span.is_positive() {
        span.to_u64().expect("desk-scale interval")
    } else {
        0
    }
}

/// Closed-form count for the segment `[lo, hi]` dilated by `n`:
/// `⌊n·hi⌋ − ⌈n·lo⌉ + 1`. Errors when `lo > hi`.
pub fn count_segment_1d(lo: &Rational, hi: &Rational, n: i64) -> Result<u64> {
    if lo > hi {
        return Err(Error::Degenerate(format!("segment [{lo}, {hi}] is empty")));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "dilation factor must be ≥ 1, got {n}"
        )));
    }
    let factor = rat_int(n);
    Ok(integers_in_interval(&(lo * &factor), &(hi * &factor)))
}

fn parallelogram_params(d: i64, n: i64, t: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "parallelogram parameter D must be ≥ 2, got {d}"
        )));
    }
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "dilation factor must be ≥ 1, got {n}"
        )));
    }
    if !(0..d).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "translate index t must lie in [0, D-1], got {t}"
        )));
    }
    Ok(())
}

/// Lattice points of the translated dilate `nQ − (0, t/D)` of the half-open
/// parallelogram `Q` with vertices `(0,0)`, `(1,(D−1)/D)`, `(D,0)`,
/// `(D−1,−(D−1)/D)`.
///
/// Membership is mixed-strictness half-space containment: the two edges
/// adjacent to `(1,(D−1)/D)` are open (their entire closed segments,
/// endpoints included, are removed), the other two are closed. With `t = 0`
/// this counts `nQ`; with `n = 1` it counts the translate `Q_t`.
pub fn count_halfopen_parallelogram(d: i64, n: i64, t: i64) -> Result<u64> {
    parallelogram_params(d, n, t)?;
    let (d, n, t) = (d as i128, n as i128, t as i128);
    let mut count = 0u64;
    for x in 0..=n * d {
        for y in -n - 1..=n {
            let upper_left = -(d - 1) * x + d * y + t < 0;
            let upper_right = x + d * y + t < n * d;
            let lower_right = (d - 1) * x - d * y - t <= n * d * (d - 1);
            let lower_left = -x - d * y - t <= 0;
            if upper_left && upper_right && lower_right && lower_left {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Lattice points of the closure of the parallelogram, dilated by `n`.
pub fn count_parallelogram_closure(d: i64, n: i64) -> Result<u64> {
    parallelogram_params(d, n, 0)?;
    let (d, n) = (d as i128, n as i128);
    let mut count = 0u64;
    for x in 0..=n * d {
        for y in -n - 1..=n {
            if -(d - 1) * x + d * y <= 0
                && x + d * y <= n * d
                && (d - 1) * x - d * y <= n * d * (d - 1)
                && -x - d * y <= 0
            {
                count += 1;
            }
        }
    }
    Ok(count)
}
