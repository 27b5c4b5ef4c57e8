//! Error type shared by the reconstruction pipeline.

use std::fmt;

/// Everything that can go wrong while validating data or driving a study.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Abscissas are not strictly increasing at `index` (duplicate or
    /// out-of-order node).
    NotStrictlyIncreasing { index: usize },
    /// Abscissa and ordinate lists have different lengths.
    LengthMismatch { abscissas: usize, ordinates: usize },
    /// Fewer than four points; no stencil can be formed.
    TooFewPoints { count: usize },
    /// A non-finite value where a finite one is required.
    NonFinite { what: &'static str, index: usize },
    /// A spacing too small relative to the grid span for the coefficient
    /// formulas to stay well conditioned.
    DegenerateSpacing { index: usize, spacing: f64 },
    /// Interval index without a full four-point stencil inside the grid.
    OutOfRange { interval: usize, first: usize, last: usize },
    /// A sampler returned a non-finite value during refinement.
    SamplerFailure { x: f64 },
    /// A spacing that must be strictly positive was not.
    NonPositiveSpacing { spacing: f64 },
    /// Convexity analysis requires second divided differences of one
    /// strict sign.
    NotConvexData { d_left: f64, d_right: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotStrictlyIncreasing { index } => {
                write!(f, "abscissas not strictly increasing at index {index}")
            }
            Error::LengthMismatch { abscissas, ordinates } => write!(
                f,
                "length mismatch: {abscissas} abscissas vs {ordinates} ordinates"
            ),
            Error::TooFewPoints { count } => {
                write!(f, "need at least 4 points, got {count}")
            }
            Error::NonFinite { what, index } => {
                write!(f, "non-finite {what} at index {index}")
            }
            Error::DegenerateSpacing { index, spacing } => write!(
                f,
                "spacing {spacing:e} at index {index} is degenerate relative to the grid span"
            ),
            Error::OutOfRange { interval, first, last } => write!(
                f,
                "interval {interval} has no full stencil (reconstructible intervals are {first}..={last})"
            ),
            Error::SamplerFailure { x } => {
                write!(f, "sampler returned a non-finite value at x = {x}")
            }
            Error::NonPositiveSpacing { spacing } => {
                write!(f, "spacing must be strictly positive, got {spacing}")
            }
            Error::NotConvexData { d_left, d_right } => write!(
                f,
                "second divided differences ({d_left}, {d_right}) do not have one strict sign"
            ),
        }
    }
}

impl std::error::Error for Error {}
