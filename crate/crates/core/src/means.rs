//! Means on pairs of second divided differences.
//!
//! Three means share the same weights, derived from the stencil spacings:
//! the weighted arithmetic mean (which yields the classical Lagrange
//! cubic), the weighted harmonic mean (which caps the influence of a large
//! difference and zeroes out on sign changes), and the translated harmonic
//! mean (which shifts both differences onto one strict sign before taking
//! the harmonic mean, recovering accuracy near inflection points).

use crate::error::Error;
use crate::grid::{SecondDiffs, Stencil};

/// The pair of weights attached to the left and right second divided
/// differences. They always sum to one and are strictly positive for
/// positive spacings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    pub w_left: f64,
    pub w_right: f64,
}

/// Computes the weights from the three stencil spacings:
///
/// ```text
/// w_left  = (h_mid + 2 h_right) / (2 (h_left + h_mid + h_right))
/// w_right = (h_mid + 2 h_left)  / (2 (h_left + h_mid + h_right))
/// ```
///
/// On a uniform stencil both weights are 1/2.
pub fn weights(h_left: f64, h_mid: f64, h_right: f64) -> Result<Weights, Error> {
    for h in [h_left, h_mid, h_right] {
        let positive = h.is_finite() && h > 0.0;
        if !positive {
            return Err(Error::NonPositiveSpacing { spacing: h });
        }
    }
    let total = 2.0 * (h_left + h_mid + h_right);
    Ok(Weights {
        w_left: (h_mid + 2.0 * h_right) / total,
        w_right: (h_mid + 2.0 * h_left) / total,
    })
}

impl Stencil {
    /// Weights induced by this stencil's spacings.
    pub fn weights(&self) -> Weights {
        // Spacings are validated positive at construction.
        weights(self.h[0], self.h[1], self.h[2]).expect("stencil spacings are positive")
    }
}

/// Strictly positive shift constant for the translated mean.
///
/// The constant sets the trade-off between accuracy in smooth regions
/// (larger values) and adaptation near singularities (smaller values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationParams {
    epsilon: f64,
}

impl TranslationParams {
    pub fn new(epsilon: f64) -> Result<Self, Error> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::NonPositiveSpacing { spacing: epsilon });
        }
        Ok(Self { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Selects which mean the nonlinear reconstruction substitutes for the
/// arithmetic one. `Arithmetic` reproduces the Lagrange cubic and is kept
/// as a built-in cross-check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind {
    Arithmetic,
    Harmonic,
    Translated(TranslationParams),
}

impl MeanKind {
    /// Applies the selected mean to a pair of second divided differences.
    pub fn apply(&self, d: SecondDiffs, w: Weights) -> f64 {
        match self {
            MeanKind::Arithmetic => arithmetic_mean(d, w),
            MeanKind::Harmonic => harmonic_mean(d, w),
            MeanKind::Translated(p) => translated_mean(d, w, *p),
        }
    }
}

/// Weighted arithmetic mean `w_left * d_left + w_right * d_right`.
pub fn arithmetic_mean(d: SecondDiffs, w: Weights) -> f64 {
    w.w_left * d.d_left + w.w_right * d.d_right
}

/// Weighted harmonic mean.
///
/// For a strictly same-sign pair this is
/// `d_left * d_right / (w_left * d_right + w_right * d_left)`; otherwise
/// (opposite signs, or either difference zero) it is exactly 0. The
/// magnitude never exceeds `min(|d_left| / w_left, |d_right| / w_right)`.
pub fn harmonic_mean(d: SecondDiffs, w: Weights) -> f64 {
    if d.d_left * d.d_right > 0.0 {
        d.d_left * d.d_right / (w.w_left * d.d_right + w.w_right * d.d_left)
    } else {
        0.0
    }
}

/// The shift that moves both differences strictly onto one sign.
///
/// Let sigma be the sign of whichever difference has the larger magnitude
/// (ties take the sign of `d_right`, and +1 when both are zero). For a
/// strictly same-sign pair the shift is `sigma * epsilon`; otherwise it is
/// `sigma * (min(|d_left|, |d_right|) + epsilon)`. In both branches
/// `(d_left + T) * (d_right + T) > 0`.
pub fn translation(d: SecondDiffs, p: TranslationParams) -> f64 {
    let eps = p.epsilon();
    let sigma = if d.d_left.abs() > d.d_right.abs() {
        d.d_left.signum()
    } else if d.d_left.abs() < d.d_right.abs() || d.d_right != 0.0 {
        d.d_right.signum()
    } else {
        1.0
    };
    if d.d_left * d.d_right > 0.0 {
        sigma * eps
    } else {
        sigma * (d.d_left.abs().min(d.d_right.abs()) + eps)
    }
}

/// Translated harmonic mean: shift both differences by the translation,
/// take the weighted harmonic mean (always on its same-sign branch), shift
/// back.
pub fn translated_mean(d: SecondDiffs, w: Weights, p: TranslationParams) -> f64 {
    let t = translation(d, p);
    let shifted = SecondDiffs::new(d.d_left + t, d.d_right + t);
    harmonic_mean(shifted, w) - t
}
