//! Built-in demonstration data sets used by the command-line experiments.

use std::f64::consts::PI;

use crate::grid::{NonUniformGrid, Stencil};

/// Convex four-point set used by the convexity experiment.
pub fn fig1_points() -> ([f64; 4], [f64; 4]) {
    ([0.0, 8.0, 25.0, 30.0], [10.0, 9.0, 12.0, 30.0])
}

pub fn fig1_stencil() -> Stencil {
    let (x, f) = fig1_points();
    Stencil::new(x, f).expect("built-in stencil is valid")
}

pub fn fig1_grid() -> NonUniformGrid {
    let (x, f) = fig1_points();
    NonUniformGrid::new(x.to_vec(), f.to_vec()).expect("built-in grid is valid")
}

/// The ten-node non-uniform grid on `[0, 2*pi]` used by the order and
/// singularity experiments: steps (0, 3, 8, 11, 17, 23, 25, 30, 37, 40)
/// scaled by `pi / 20`.
pub fn sine_abscissas() -> Vec<f64> {
    [0.0, 3.0, 8.0, 11.0, 17.0, 23.0, 25.0, 30.0, 37.0, 40.0]
        .iter()
        .map(|s| s * PI / 20.0)
        .collect()
}

/// The grid above sampled from `sin`.
pub fn sine_grid() -> NonUniformGrid {
    let x = sine_abscissas();
    let f = x.iter().map(|&v| v.sin()).collect();
    NonUniformGrid::new(x, f).expect("built-in grid is valid")
}

/// Location of the jump of [`jump_function`].
pub fn jump_abscissa() -> f64 {
    1.2 * PI
}

/// Piecewise function with an order-one jump: `sin(x)` up to `1.2*pi`,
/// `cos(x) + 10` beyond.
pub fn jump_function(x: f64) -> f64 {
    if x <= jump_abscissa() {
        x.sin()
    } else {
        x.cos() + 10.0
    }
}

/// The sine-grid abscissas sampled from [`jump_function`].
pub fn jump_grid() -> NonUniformGrid {
    let x = sine_abscissas();
    let f = x.iter().map(|&v| jump_function(v)).collect();
    NonUniformGrid::new(x, f).expect("built-in grid is valid")
}

/// Plain parabola; every reconstruction reproduces it exactly, which
/// drives order estimates to the rounding floor.
pub fn quadratic_function(x: f64) -> f64 {
    x * x
}

/// The sine-grid abscissas sampled from [`quadratic_function`].
pub fn quadratic_grid() -> NonUniformGrid {
    let x = sine_abscissas();
    let f = x.iter().map(|&v| quadratic_function(v)).collect();
    NonUniformGrid::new(x, f).expect("built-in grid is valid")
}
