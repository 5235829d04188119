//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, geometry construction, counting and fitting.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (polytope files, structured reports).
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A parameter outside its documented domain (D < 2, s not dividing D, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Geometrically degenerate input: collinear point sets, empty segments,
    /// zero-area polygons.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A vertex/facet description that does not describe a valid polytope.
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    /// The enumeration bounding box exceeds the configured cell limit.
    #[error("enumeration box of {cells} cells exceeds the limit of {limit}")]
    ResourceLimit { cells: u128, limit: u64 },

    /// Samples disagree with the interpolated quasi-polynomial.
    #[error(
        "period hint too small or not an Ehrhart series: \
         sample at n = {n} is {actual}, interpolation predicts {predicted}"
    )]
    PeriodHint {
        n: i64,
        actual: u64,
        predicted: String,
    },

    /// A proved identity failed at runtime; indicates a bug in this crate.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status for the CLI: 1 usage/parse, 2 computation,
    /// 3 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::InvalidParameter(_)
            | Error::InvalidPolytope(_)
            | Error::Io(_) => 1,
            Error::Degenerate(_) | Error::ResourceLimit { .. } | Error::PeriodHint { .. } => 2,
            Error::Inconsistency(_) => 3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_class() {
        let parse = Error::Parse {
            line: 3,
            message: "bad".into(),
        };
        assert_eq!(parse.exit_code(), 1);
        assert_eq!(Error::InvalidParameter("x".into()).exit_code(), 1);
        assert_eq!(Error::Degenerate("x".into()).exit_code(), 2);
        assert_eq!(
            Error::ResourceLimit {
                cells: 100,
                limit: 10
            }
            .exit_code(),
            2
        );
        assert_eq!(Error::Inconsistency("x".into()).exit_code(), 3);
    }
}
