//! Linear baseline reconstructions on a four-point stencil.
//!
//! Both the closed coefficient forms and an explicit 4x4 coefficient
//! matrix are provided; the matrix path exists as an independent second
//! derivation used for cross-validation, the closed forms are primary.

use crate::grid::Stencil;
use crate::means::{arithmetic_mean, Weights};

/// A cubic `a0 + a1 t + a2 t^2 + a3 t^3` in the shifted variable
/// `t = x - center`, with `center` the midpoint of the stencil's central
/// interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenteredCubic {
    pub center: f64,
    pub coeffs: [f64; 4],
}

impl CenteredCubic {
    /// Horner evaluation at `x`.
    pub fn eval(&self, x: f64) -> f64 {
        let t = x - self.center;
        let [a0, a1, a2, a3] = self.coeffs;
        a0 + t * (a1 + t * (a2 + t * a3))
    }

    /// Second derivative `2 a2 + 6 a3 (x - center)`.
    pub fn second_derivative(&self, x: f64) -> f64 {
        2.0 * self.coeffs[2] + 6.0 * self.coeffs[3] * (x - self.center)
    }

    /// Root of the second derivative, if the cubic term does not vanish.
    pub fn inflection(&self) -> Option<f64> {
        if self.coeffs[3] == 0.0 {
            None
        } else {
            Some(self.center - self.coeffs[2] / (3.0 * self.coeffs[3]))
        }
    }
}

/// A quadratic in the same shifted variable as [`CenteredCubic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenteredQuadratic {
    pub center: f64,
    pub coeffs: [f64; 3],
}

impl CenteredQuadratic {
    pub fn eval(&self, x: f64) -> f64 {
        let t = x - self.center;
        let [a0, a1, a2] = self.coeffs;
        a0 + t * (a1 + t * a2)
    }
}

/// The interpolating cubic through all four stencil points, via the closed
/// coefficient forms
///
/// ```text
/// a0 = (f1 + f2)/2 - h1^2/4 * M
/// a1 = (f2 - f1)/h1 + h1^2 / (2 (2 h0 + h1)) * (D_left - M)
/// a2 = M
/// a3 = -2 / (2 h0 + h1) * (D_left - M)
/// ```
///
/// where `M` is the weighted arithmetic mean of the two second divided
/// differences and `h0, h1` the left and central spacings.
pub fn lagrange_cubic(st: &Stencil) -> CenteredCubic {
    let d = st.second_diffs();
    let w = st.weights();
    let m = arithmetic_mean(d, w);
    let [h0, h1, _] = st.h;
    let f1 = st.f[1];
    let f2 = st.f[2];
    let a0 = 0.5 * (f1 + f2) - 0.25 * h1 * h1 * m;
    let a1 = (f2 - f1) / h1 + h1 * h1 / (2.0 * (2.0 * h0 + h1)) * (d.d_left - m);
    let a2 = m;
    let a3 = -2.0 / (2.0 * h0 + h1) * (d.d_left - m);
    CenteredCubic { center: st.midpoint, coeffs: [a0, a1, a2, a3] }
}

/// The same cubic computed as `coeffs = C * f` with the explicit 4x4
/// matrix from [`coefficient_matrix`]. Kept as an independent derivation
/// for cross-validation against [`lagrange_cubic`].
pub fn lagrange_cubic_via_matrix(st: &Stencil) -> CenteredCubic {
    let c = coefficient_matrix(st);
    let mut coeffs = [0.0; 4];
    for (row, coeff) in c.iter().zip(coeffs.iter_mut()) {
        *coeff = row.iter().zip(st.f.iter()).map(|(cij, fj)| cij * fj).sum();
    }
    CenteredCubic { center: st.midpoint, coeffs }
}

/// Entries of the matrix mapping the four ordinates to the four centred
/// cubic coefficients. Row `i` gives the coefficient of `t^i`.
pub fn coefficient_matrix(st: &Stencil) -> [[f64; 4]; 4] {
    let [h0, h1, h2] = st.h;
    let s01 = h0 + h1;
    let s12 = h1 + h2;
    let s = h0 + h1 + h2;
    [
        [
            -h1 * h1 * (h1 + 2.0 * h2) / (8.0 * h0 * s01 * s),
            (2.0 * h0 + h1) * (h1 + 2.0 * h2) / (8.0 * h0 * s12),
            (2.0 * h0 + h1) * (h1 + 2.0 * h2) / (8.0 * s01 * h2),
            -h1 * h1 * (2.0 * h0 + h1) / (8.0 * h2 * s12 * s),
        ],
        [
            h1 * h1 / (4.0 * h0 * s01 * s),
            -(h1 * h1 + 4.0 * h0 * s12) / (4.0 * h0 * h1 * s12),
            (h1 * h1 + 4.0 * h2 * h1 + 4.0 * h0 * h2) / (4.0 * h2 * h1 * h1 + 4.0 * h0 * h2 * h1),
            -h1 * h1 / (4.0 * h2 * s12 * s),
        ],
        [
            (h1 + 2.0 * h2) / (2.0 * h0 * s01 * s),
            -(-2.0 * h0 + h1 + 2.0 * h2) / (2.0 * h0 * h1 * h1 + 2.0 * h0 * h2 * h1),
            -(2.0 * h0 + h1 - 2.0 * h2) / (2.0 * h2 * h1 * h1 + 2.0 * h0 * h2 * h1),
            (2.0 * h0 + h1) / (2.0 * h2 * s12 * s),
        ],
        [
            -1.0 / (h0 * s01 * s),
            1.0 / (h0 * h1 * h1 + h0 * h2 * h1),
            -1.0 / (h2 * h1 * h1 + h0 * h2 * h1),
            1.0 / (h2 * s12 * s),
        ],
    ]
}

/// The quadratic through the left three stencil points.
pub fn lagrange_quadratic_left(st: &Stencil) -> CenteredQuadratic {
    let d = st.second_diffs();
    let h1 = st.h[1];
    let f1 = st.f[1];
    let f2 = st.f[2];
    CenteredQuadratic {
        center: st.midpoint,
        coeffs: [
            0.5 * (f1 + f2) - 0.25 * h1 * h1 * d.d_left,
            (f2 - f1) / h1,
            d.d_left,
        ],
    }
}

/// Coefficients `k` of the weighted arithmetic mean as a linear form in
/// the ordinates: `M = k[0] f0 + k[1] f1 + k[2] f2 + k[3] f3`. Obtained by
/// expanding the mean in the two divided-difference formulas.
pub fn mean_linear_coefficients(st: &Stencil) -> [f64; 4] {
    let [h0, h1, h2] = st.h;
    let Weights { w_left, w_right } = st.weights();
    let s01 = h0 + h1;
    let s12 = h1 + h2;
    [
        w_left / (h0 * s01),
        -w_left / (h0 * h1) + w_right / (h1 * s12),
        w_left / (h1 * s01) - w_right / (h1 * h2),
        w_right / (h2 * s12),
    ]
}
