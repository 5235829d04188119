//! Exact computation of Ehrhart quasi-polynomials of rational polytopes.
//!
//! For a rational polytope `P ⊂ ℝ^d`, the counting function
//! `i_P(n) = #(nP ∩ ℤ^d)` is a quasi-polynomial whose period divides the
//! denominator of `P` (the least `n` making `nP` integral) — but the minimum
//! period can be strictly smaller. This crate computes everything involved
//! exactly, with arbitrary-precision rational arithmetic end to end:
//!
//! - lattice-point counting (closed, interior, boundary) by brute-force
//!   enumeration with exact membership tests;
//! - quasi-polynomial fitting from count series by exact interpolation,
//!   minimum periods, and per-coefficient periods;
//! - polytope families exhibiting period collapse in every dimension ≥ 2
//!   (triangles, pentagons, prisms, a classic pyramid), each paired with its
//!   closed-form counting function;
//! - closed forms for 1-D segments, which always have full period;
//! - the polynomiality characterization for polygons via Pick's theorem and
//!   boundary-count linearity;
//! - Ehrhart–Macdonald reciprocity checks relating interior counts to the
//!   quasi-polynomial at negative arguments.
//!
//! Start with the runnable programs in `examples/`; each demonstrates one
//! capability. The `ehrhart` binary exposes the same pipelines on polytope
//! files (see [`polyfile`] for the format).

pub mod characterization;
pub mod cli;
pub mod constructions;
pub mod counting;
mod error;
pub mod engine;
pub mod polyfile;
pub mod polynomial;
pub mod polytope;
pub mod quasipolynomial;
pub mod rational;
pub mod structured;

pub use characterization::{
    characterize, check_boundary_linear, check_pick, BoundaryLinearity, CharacterizationReport,
    DilationRecord, PickCheck,
};
pub use constructions::{
    example_triangle, pentagon, prism, stanley_pyramid, triangle, ConstructionSpec,
};
pub use counting::{
    count_boundary, count_boundary_edge_walk, count_closed, count_halfopen_parallelogram,
    count_interior, count_lattice_on_segment, count_parallelogram_closure, count_segment_1d,
    CountKind, CountMethod, CountOptions, CountSeries, DEFAULT_CELL_LIMIT,
};
pub use engine::{
    fit_quasipolynomial, period_report, sample_counts, segment_constituents, verify_reciprocity,
    PeriodReport, ReciprocityOutcome, ReciprocityWitness,
};
pub use error::{Error, Result};
pub use polyfile::{parse_polytope, read_polytope_file, render_polytope};
pub use polynomial::Polynomial;
pub use polytope::{
    hull_order_2d, vrep_to_hrep_2d, ContainmentMode, HalfSpace, RationalPoint, RationalPolytope,
    Structure,
};
pub use quasipolynomial::QuasiPolynomial;
pub use rational::{parse_rational, rat, rat_int, Rational};
