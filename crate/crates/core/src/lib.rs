//! Nonlinear piecewise-cubic reconstruction on non-uniform grids.
//!
//! Given point data on a strictly increasing grid, every interior interval
//! owns a four-point stencil from which a centered cubic is built. The
//! classical Lagrange cubic uses the weighted arithmetic mean of the two
//! second-order divided differences; the PPH variant swaps that mean for a
//! weighted harmonic mean (optionally translation-corrected), which bounds
//! the polynomial near jump discontinuities and widens the region where
//! convexity of the data is preserved.
//!
//! The crate is organised around the pipeline:
//!
//! * [`grid`] — grid validation, stencil extraction, second divided
//!   differences, dyadic refinement;
//! * [`means`] — the weighted arithmetic, harmonic and translated means;
//! * [`lagrange`] — the linear baseline reconstructions;
//! * [`pph`] — the nonlinear reconstruction and its diagnostics;
//! * [`analysis`] — convexity thresholds and grid-refinement order studies;
//! * [`datasets`] — the built-in demonstration data sets;
//! * [`io`] — plain-text ingestion of `x,f` point data.
//!
//! All operations are pure functions of their inputs; every public type is
//! an immutable value that can be shared freely across threads.

pub mod analysis;
pub mod datasets;
pub mod error;
pub mod grid;
pub mod io;
pub mod lagrange;
pub mod means;
pub mod pph;

pub use analysis::{ConvexityReport, IntervalError, Operator, OrderStudy};
pub use error::Error;
pub use grid::{NonUniformGrid, SecondDiffs, Stencil};
pub use lagrange::{CenteredCubic, CenteredQuadratic};
pub use means::{MeanKind, TranslationParams, Weights};
pub use pph::{PphCase, PphReconstruction};
