//! Non-uniform grids, four-point stencils and second divided differences.

use crate::error::Error;

/// Fraction of the grid span below which a spacing is rejected as
/// degenerate; the reconstruction coefficients divide by spacings and by
/// sums of spacings.
const DEGENERATE_SPAN_FACTOR: f64 = 1e3 * f64::EPSILON;

/// Point data on strictly increasing abscissas.
///
/// The grid is immutable once built; refinement returns a new grid.
#[derive(Debug, Clone, PartialEq)]
pub struct NonUniformGrid {
    x: Vec<f64>,
    f: Vec<f64>,
}

impl NonUniformGrid {
    /// Validates and wraps point data.
    ///
    /// Requires equal lengths, at least four points, finite values,
    /// strictly increasing abscissas and no spacing degenerate relative to
    /// the total span.
    pub fn new(abscissas: Vec<f64>, ordinates: Vec<f64>) -> Result<Self, Error> {
        if abscissas.len() != ordinates.len() {
            return Err(Error::LengthMismatch {
                abscissas: abscissas.len(),
                ordinates: ordinates.len(),
            });
        }
        if abscissas.len() < 4 {
            return Err(Error::TooFewPoints { count: abscissas.len() });
        }
        for (i, &x) in abscissas.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite { what: "abscissa", index: i });
            }
        }
        for (i, &v) in ordinates.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { what: "ordinate", index: i });
            }
        }
        for i in 0..abscissas.len() - 1 {
            if abscissas[i + 1] <= abscissas[i] {
                return Err(Error::NotStrictlyIncreasing { index: i + 1 });
            }
        }
        let span = abscissas[abscissas.len() - 1] - abscissas[0];
        for i in 0..abscissas.len() - 1 {
            let h = abscissas[i + 1] - abscissas[i];
            if h < DEGENERATE_SPAN_FACTOR * span {
                return Err(Error::DegenerateSpacing { index: i, spacing: h });
            }
        }
        Ok(Self { x: abscissas, f: ordinates })
    }

    /// Number of nodes; always at least four.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn abscissas(&self) -> &[f64] {
        &self.x
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.f
    }

    /// Indices of the intervals that own a full four-point stencil.
    ///
    /// Interval `j` spans `[x_j, x_{j+1}]`; it is reconstructible when one
    /// extra node exists on each side, i.e. `1 <= j <= n - 3`.
    pub fn reconstructible_intervals(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.x.len() - 3
    }

    /// Index of the interval `[x_j, x_{j+1})` containing `x`, with the last
    /// interval closed on the right. `None` outside the grid span.
    pub fn interval_containing(&self, x: f64) -> Option<usize> {
        let n = self.x.len();
        if x < self.x[0] || x > self.x[n - 1] {
            return None;
        }
        match self.x.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => Some(i.min(n - 2)),
            Err(i) => Some(i - 1),
        }
    }

    /// The four-point window centred on interval `j`.
    pub fn stencil(&self, j: usize) -> Result<Stencil, Error> {
        let first = 1;
        let last = self.x.len() - 3;
        if j < first || j > last {
            return Err(Error::OutOfRange { interval: j, first, last });
        }
        let x = [self.x[j - 1], self.x[j], self.x[j + 1], self.x[j + 2]];
        let f = [self.f[j - 1], self.f[j], self.f[j + 1], self.f[j + 2]];
        Ok(Stencil::from_parts(x, f))
    }

    /// Inserts the midpoint of every interval and re-samples `sampler` at
    /// every node, original abscissas included. The node count becomes
    /// `2n - 1`.
    pub fn refine_dyadic<F: Fn(f64) -> f64>(&self, sampler: F) -> Result<Self, Error> {
        let n = self.x.len();
        let mut x = Vec::with_capacity(2 * n - 1);
        for i in 0..n - 1 {
            x.push(self.x[i]);
            x.push(0.5 * (self.x[i] + self.x[i + 1]));
        }
        x.push(self.x[n - 1]);
        let mut f = Vec::with_capacity(x.len());
        for &xi in &x {
            let v = sampler(xi);
            if !v.is_finite() {
                return Err(Error::SamplerFailure { x: xi });
            }
            f.push(v);
        }
        Self::new(x, f)
    }
}

/// One four-point window: the unit of all reconstruction.
///
/// Nodes are `x[0..4]` with `x[1], x[2]` bounding the central interval,
/// spacings `h[k] = x[k+1] - x[k]`, and `midpoint` the centre of the
/// central interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stencil {
    pub x: [f64; 4],
    pub f: [f64; 4],
    pub h: [f64; 3],
    pub midpoint: f64,
}

impl Stencil {
    /// Builds a stencil from four raw points, validating finiteness and
    /// strictly positive, non-degenerate spacings.
    pub fn new(x: [f64; 4], f: [f64; 4]) -> Result<Self, Error> {
        for (i, &v) in x.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { what: "abscissa", index: i });
            }
        }
        for (i, &v) in f.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { what: "ordinate", index: i });
            }
        }
        let span = x[3] - x[0];
        for k in 0..3 {
            let h = x[k + 1] - x[k];
            if h <= 0.0 {
                return Err(Error::NonPositiveSpacing { spacing: h });
            }
            if h < DEGENERATE_SPAN_FACTOR * span {
                return Err(Error::DegenerateSpacing { index: k, spacing: h });
            }
        }
        Ok(Self::from_parts(x, f))
    }

    fn from_parts(x: [f64; 4], f: [f64; 4]) -> Self {
        let h = [x[1] - x[0], x[2] - x[1], x[3] - x[2]];
        let midpoint = 0.5 * (x[1] + x[2]);
        Stencil { x, f, h, midpoint }
    }

    /// Second-order divided differences of the left and right three-point
    /// subsets.
    pub fn second_diffs(&self) -> SecondDiffs {
        let [h0, h1, h2] = self.h;
        let [f0, f1, f2, f3] = self.f;
        let d_left = f0 / (h0 * (h0 + h1)) - f1 / (h0 * h1) + f2 / (h1 * (h0 + h1));
        let d_right = f1 / (h1 * (h1 + h2)) - f2 / (h1 * h2) + f3 / (h2 * (h1 + h2));
        SecondDiffs { d_left, d_right }
    }
}

/// The pair of second divided differences feeding every mean: `d_left` is
/// built on the left three stencil points, `d_right` on the right three.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondDiffs {
    pub d_left: f64,
    pub d_right: f64,
}

impl SecondDiffs {
    pub fn new(d_left: f64, d_right: f64) -> Self {
        SecondDiffs { d_left, d_right }
    }

    pub fn product(&self) -> f64 {
        self.d_left * self.d_right
    }
}
