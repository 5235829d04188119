//! Exact rational polytopes: vertices, half-space facets, dilation,
//! 2-D convex hull ordering and V→H conversion, and products with unit boxes.
//!
//! Polytopes are full-dimensional in their ambient space: segments in ℝ¹,
//! polygons in ℝ², and explicit d ≥ 3 polytopes whose facets are supplied
//! (and validated) rather than computed. Products with `[0,1]^k` boxes carry
//! their structure so membership and dilation stay exact without a general
//! hull algorithm.

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// A point with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalPoint::new(coords.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The constraint `normal · x ≤ offset`, with the normal normalized to
/// coprime integer entries so that equal facets compare equal syntactically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpace {
    normal: Vec<BigInt>,
    offset: Rational,
}

impl HalfSpace {
    /// Normalizes a rational normal vector to coprime integers (positive
    /// scaling only, so the orientation is preserved). Errors on the zero
    /// vector.
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidPolytope(
                "half-space normal must be nonzero".into(),
            ));
        }
        let lcm_den = normal
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = Rational::from_integer(lcm_den);
        let scaled: Vec<BigInt> = normal.iter().map(|c| (c * &scale).to_integer()).collect();
        let g = scaled
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let normal: Vec<BigInt> = scaled.iter().map(|c| c / &g).collect();
        let offset = offset * &scale / Rational::from_integer(g);
        Ok(HalfSpace { normal, offset })
    }

    /// Builds directly from integer data (already coprime after reduction).
    pub fn from_ints(normal: &[i64], offset: i64) -> Self {
        HalfSpace::new(
            normal.iter().map(|&c| rat_int(c)).collect(),
            rat_int(offset),
        )
        .expect("nonzero integer normal")
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal · x`.
    pub fn eval(&self, point: &RationalPoint) -> Rational {
        self.normal
            .iter()
            .zip(point.coords())
            .map(|(a, x)| Rational::from_integer(a.clone()) * x)
            .fold(rat_int(0), |acc, t| acc + t)
    }

    pub fn satisfies(&self, point: &RationalPoint, strict: bool) -> bool {
        let v = self.eval(point);
        if strict {
            v < self.offset
        } else {
            v <= self.offset
        }
    }

    pub fn is_tight_at(&self, point: &RationalPoint) -> bool {
        self.eval(point) == self.offset
    }

    /// The same constraint on the `n`-fold dilate.
    pub fn dilated(&self, n: i64) -> HalfSpace {
        HalfSpace {
            normal: self.normal.clone(),
            offset: &self.offset * rat_int(n),
        }
    }

    /// Embeds into a higher ambient dimension by padding zero coordinates.
    fn extended(&self, ambient_dim: usize) -> HalfSpace {
        let mut normal = self.normal.clone();
        normal.resize(ambient_dim, BigInt::zero());
        HalfSpace {
            normal,
            offset: self.offset.clone(),
        }
    }

    /// `coeff · x_axis ≤ offset` in `ambient_dim` coordinates.
    fn axis(ambient_dim: usize, axis: usize, coeff: i64, offset: Rational) -> HalfSpace {
        let mut normal = vec![BigInt::zero(); ambient_dim];
        normal[axis] = BigInt::from(coeff);
        HalfSpace { normal, offset }
    }
}

/// Closed membership or strict (interior) membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainmentMode {
    Closed,
    Open,
}

/// How the polytope was built: directly from vertices/facets, or as a
/// product `base × [0, side]^k`.
#[derive(Debug, Clone)]
pub enum Structure {
    Explicit,
    Product {
        base: Box<RationalPolytope>,
        box_dims: usize,
        box_side: Rational,
    },
}

/// A full-dimensional rational polytope.
#[derive(Debug, Clone)]
pub struct RationalPolytope {
    ambient_dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<HalfSpace>,
    structure: Structure,
}

impl RationalPolytope {
    /// The segment `[lo, hi]` in ℝ¹ with `lo < hi`.
    pub fn segment(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Degenerate(format!(
                "segment [{lo}, {hi}] is empty or a point"
            )));
        }
        let facets = vec![
            HalfSpace::new(vec![rat_int(-1)], -&lo)?,
            HalfSpace::new(vec![rat_int(1)], hi.clone())?,
        ];
        Ok(RationalPolytope {
            ambient_dim: 1,
            vertices: vec![RationalPoint::new(vec![lo]), RationalPoint::new(vec![hi])],
            facets,
            structure: Structure::Explicit,
        })
    }

    /// The polygon spanned by `points` (any order; non-extreme points are
    /// dropped). Errors when all points are collinear.
    pub fn polygon(points: Vec<RationalPoint>) -> Result<Self> {
        let vertices = hull_order_2d(&points)?;
        let facets = vrep_to_hrep_2d(&vertices)?;
        Ok(RationalPolytope {
            ambient_dim: 2,
            vertices,
            facets,
            structure: Structure::Explicit,
        })
    }

    /// Builds from vertices alone: a segment for ambient dimension 1, a
    /// polygon for 2. Explicit polytopes of dimension ≥ 3 need facets.
    pub fn from_vertices(ambient_dim: usize, points: Vec<RationalPoint>) -> Result<Self> {
        check_point_dims(ambient_dim, &points)?;
        match ambient_dim {
            0 => Err(Error::InvalidParameter("ambient dimension must be ≥ 1".into())),
            1 => {
                let lo = points.iter().map(|p| p.coord(0)).min().cloned();
                let hi = points.iter().map(|p| p.coord(0)).max().cloned();
                match (lo, hi) {
                    (Some(lo), Some(hi)) => RationalPolytope::segment(lo, hi),
                    _ => Err(Error::InvalidPolytope("no vertices given".into())),
                }
            }
            2 => RationalPolytope::polygon(points),
            _ => Err(Error::InvalidPolytope(
                "facets are required for explicit polytopes of dimension ≥ 3".into(),
            )),
        }
    }

    /// Builds from vertices plus facets. For ambient dimension ≤ 2 the
    /// supplied facets are validated and then replaced by the canonical ones;
    /// for dimension ≥ 3 they are kept as given (deduplicated). Validation
    /// requires every vertex to satisfy every facet, every facet to be tight
    /// at ≥ d vertices, and every vertex to be tight at ≥ d facets.
    pub fn with_facets(
        ambient_dim: usize,
        points: Vec<RationalPoint>,
        facets: Vec<HalfSpace>,
    ) -> Result<Self> {
        check_point_dims(ambient_dim, &points)?;
        for f in &facets {
            if f.dim() != ambient_dim {
                return Err(Error::InvalidPolytope(format!(
                    "facet has {} coefficients, expected {}",
                    f.dim(),
                    ambient_dim
                )));
            }
        }
        let mut deduped: Vec<HalfSpace> = Vec::new();
        for f in facets {
            if !deduped.contains(&f) {
                deduped.push(f);
            }
        }
        let built = match ambient_dim {
            0 => return Err(Error::InvalidParameter("ambient dimension must be ≥ 1".into())),
            1 | 2 => RationalPolytope::from_vertices(ambient_dim, points)?,
            _ => RationalPolytope {
                ambient_dim,
                vertices: points,
                facets: deduped.clone(),
                structure: Structure::Explicit,
            },
        };
        validate_facets(&deduped, &built.vertices, ambient_dim)?;
        if built.ambient_dim >= 3 {
            validate_facets(&built.facets, &built.vertices, ambient_dim)?;
        }
        Ok(built)
    }

    /// The product `self × [0, 1]^k`.
    pub fn product_with_box(&self, k: usize) -> Self {
        assert!(k >= 1, "box dimension must be positive");
        let ambient_dim = self.ambient_dim + k;
        let side = rat_int(1);
        let mut vertices = Vec::with_capacity(self.vertices.len() << k);
        for v in &self.vertices {
            for corner in 0..(1u32 << k) {
                let mut coords = v.coords().to_vec();
                for bit in 0..k {
                    coords.push(if (corner >> bit) & 1 == 1 {
                        side.clone()
                    } else {
                        rat_int(0)
                    });
                }
                vertices.push(RationalPoint::new(coords));
            }
        }
        let mut facets: Vec<HalfSpace> =
            self.facets.iter().map(|f| f.extended(ambient_dim)).collect();
        for bit in 0..k {
            let axis = self.ambient_dim + bit;
            facets.push(HalfSpace::axis(ambient_dim, axis, 1, side.clone()));
            facets.push(HalfSpace::axis(ambient_dim, axis, -1, rat_int(0)));
        }
        RationalPolytope {
            ambient_dim,
            vertices,
            facets,
            structure: Structure::Product {
                base: Box::new(self.clone()),
                box_dims: k,
                box_side: side,
            },
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Intrinsic dimension. Explicit polytopes are full-dimensional by
    /// construction (a contract for supplied d ≥ 3 facets); products add
    /// their box dimensions.
    pub fn dim(&self) -> usize {
        match &self.structure {
            Structure::Explicit => self.ambient_dim,
            Structure::Product { base, box_dims, .. } => base.dim() + box_dims,
        }
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn is_product(&self) -> bool {
        matches!(self.structure, Structure::Product { .. })
    }

    /// Least positive integer `n` such that the `n`-fold dilate is integral;
    /// equals the lcm of the reduced denominators of all vertex coordinates.
    pub fn denominator(&self) -> BigInt {
        let mut acc = BigInt::one();
        for v in &self.vertices {
            for c in v.coords() {
                acc = acc.lcm(c.denom());
            }
        }
        acc
    }

    /// Scales by a positive integer about the origin.
    pub fn dilate(&self, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!(
                "dilation factor must be ≥ 1, got {n}"
            )));
        }
        let factor = rat_int(n);
        let vertices = self
            .vertices
            .iter()
            .map(|v| RationalPoint::new(v.coords().iter().map(|c| c * &factor).collect()))
            .collect();
        let facets = self.facets.iter().map(|f| f.dilated(n)).collect();
        let structure = match &self.structure {
            Structure::Explicit => Structure::Explicit,
            Structure::Product {
                base,
                box_dims,
                box_side,
            } => Structure::Product {
                base: Box::new(base.dilate(n)?),
                box_dims: *box_dims,
                box_side: box_side * &factor,
            },
        };
        Ok(RationalPolytope {
            ambient_dim: self.ambient_dim,
            vertices,
            facets,
            structure,
        })
    }

    /// Membership test. `Closed` uses `normal·x ≤ offset` on every facet,
    /// `Open` uses strict inequalities (the correct interior test for
    /// full-dimensional polytopes). Products test the base and the box
    /// factors componentwise with matching strictness.
    pub fn contains(&self, point: &RationalPoint, mode: ContainmentMode) -> bool {
        assert_eq!(
            point.dim(),
            self.ambient_dim,
            "point dimension {} does not match ambient dimension {}",
            point.dim(),
            self.ambient_dim
        );
        let strict = mode == ContainmentMode::Open;
        match &self.structure {
            Structure::Explicit => self.facets.iter().all(|f| f.satisfies(point, strict)),
            Structure::Product {
                base,
                box_dims,
                box_side,
            } => {
                let split = base.ambient_dim;
                let base_point = RationalPoint::new(point.coords()[..split].to_vec());
                if !base.contains(&base_point, mode) {
                    return false;
                }
                let zero = rat_int(0);
                point.coords()[split..split + box_dims].iter().all(|c| {
                    if strict {
                        c > &zero && c < box_side
                    } else {
                        c >= &zero && c <= box_side
                    }
                })
            }
        }
    }

    /// Exact area of a polygon (shoelace over the hull-ordered vertices).
    pub fn area(&self) -> Result<Rational> {
        if self.ambient_dim != 2 {
            return Err(Error::InvalidParameter(format!(
                "area is defined for polygons, not ambient dimension {}",
                self.ambient_dim
            )));
        }
        let a = shoelace_double(&self.vertices) / rat_int(2);
        if a.is_zero() {
            return Err(Error::Degenerate("polygon has zero area".into()));
        }
        Ok(a)
    }

    /// Per-axis integer bounds `[⌈min⌉ … ⌊max⌋]`-style box around the
    /// polytope: `(⌊min⌋, ⌈max⌉)` of the vertex coordinates on each axis.
    pub fn bounding_box(&self) -> Vec<(BigInt, BigInt)> {
        (0..self.ambient_dim)
            .map(|axis| {
                let lo = self
                    .vertices
                    .iter()
                    .map(|v| v.coord(axis))
                    .min()
                    .expect("nonempty vertex list");
                let hi = self
                    .vertices
                    .iter()
                    .map(|v| v.coord(axis))
                    .max()
                    .expect("nonempty vertex list");
                (lo.floor().to_integer(), hi.ceil().to_integer())
            })
            .collect()
    }
}

fn check_point_dims(ambient_dim: usize, points: &[RationalPoint]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidPolytope("no vertices given".into()));
    }
    for p in points {
        if p.dim() != ambient_dim {
            return Err(Error::InvalidPolytope(format!(
                "vertex {p} has {} coordinates, expected {}",
                p.dim(),
                ambient_dim
            )));
        }
    }
    Ok(())
}

fn validate_facets(
    facets: &[HalfSpace],
    vertices: &[RationalPoint],
    ambient_dim: usize,
) -> Result<()> {
    if facets.is_empty() {
        return Err(Error::InvalidPolytope("no facets given".into()));
    }
    for (i, f) in facets.iter().enumerate() {
        let mut tight = 0usize;
        for v in vertices {
            if !f.satisfies(v, false) {
                return Err(Error::InvalidPolytope(format!(
                    "vertex {v} violates facet {}",
                    i + 1
                )));
            }
            if f.is_tight_at(v) {
                tight += 1;
            }
        }
        if tight < ambient_dim {
            return Err(Error::InvalidPolytope(format!(
                "facet {} is tight at only {tight} vertices (need ≥ {ambient_dim})",
                i + 1
            )));
        }
    }
    for v in vertices {
        let tight = facets.iter().filter(|f| f.is_tight_at(v)).count();
        if tight < ambient_dim {
            return Err(Error::InvalidPolytope(format!(
                "vertex {v} is tight at only {tight} facets (need ≥ {ambient_dim})"
            )));
        }
    }
    Ok(())
}

/// Twice the signed area (positive for counterclockwise order).
fn shoelace_double(vertices: &[RationalPoint]) -> Rational {
    let m = vertices.len();
    let mut acc = rat_int(0);
    for i in 0..m {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % m];
        acc = acc + a.coord(0) * b.coord(1) - b.coord(0) * a.coord(1);
    }
    acc
}

fn cross(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Rational {
    (a.coord(0) - o.coord(0)) * (b.coord(1) - o.coord(1))
        - (a.coord(1) - o.coord(1)) * (b.coord(0) - o.coord(0))
}

/// Orders the convex-hull vertices counterclockwise starting from the
/// lexicographically smallest point; interior and edge-interior points are
/// dropped. Errors when all points are collinear.
pub fn hull_order_2d(points: &[RationalPoint]) -> Result<Vec<RationalPoint>> {
    for p in points {
        if p.dim() != 2 {
            return Err(Error::InvalidParameter(
                "hull ordering expects 2-D points".into(),
            ));
        }
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let zero = rat_int(0);
    let chain = |iter: &mut dyn Iterator<Item = &RationalPoint>| {
        let mut hull: Vec<RationalPoint> = Vec::new();
        for p in iter {
            while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= zero
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull
    };
    let mut lower = chain(&mut pts.iter());
    let mut upper = chain(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::Degenerate(
            "points are collinear (no 2-D polytope)".into(),
        ));
    }
    Ok(lower)
}

/// One half-space per edge of a counterclockwise-ordered polygon: outward
/// normal with coprime integer entries, offset tight on the edge.
pub fn vrep_to_hrep_2d(vertices: &[RationalPoint]) -> Result<Vec<HalfSpace>> {
    if vertices.len() < 3 || shoelace_double(vertices) <= rat_int(0) {
        return Err(Error::InvalidParameter(
            "facet conversion expects counterclockwise hull-ordered vertices".into(),
        ));
    }
    let m = vertices.len();
    let mut facets = Vec::with_capacity(m);
    for i in 0..m {
        let v = &vertices[i];
        let w = &vertices[(i + 1) % m];
        let dx = w.coord(0) - v.coord(0);
        let dy = w.coord(1) - v.coord(1);
        // outward normal of a CCW edge
        let normal = vec![dy.clone(), -dx.clone()];
        let offset = &normal[0] * v.coord(0) + &normal[1] * v.coord(1);
        facets.push(HalfSpace::new(normal, offset)?);
    }
    Ok(facets)
}
