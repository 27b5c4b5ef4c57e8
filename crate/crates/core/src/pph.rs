//! The nonlinear reconstruction: case classification, modified outer
//! ordinate and the resulting cubic.
//!
//! The construction keeps the three stencil points on the smooth side and
//! replaces the outer ordinate nearest a possible singularity with the
//! value that the selected nonlinear mean implies, so the cubic never
//! interpolates the suspect point. Which side is replaced follows from the
//! magnitudes of the two second divided differences alone.

use serde::Serialize;

use crate::grid::{SecondDiffs, Stencil};
use crate::lagrange::{mean_linear_coefficients, CenteredCubic};
use crate::means::{arithmetic_mean, MeanKind};

/// Which outer ordinate the reconstruction replaces.
///
/// `ReplaceRight` when `|d_left| <= |d_right|` (a possible singularity sits
/// in the right outer interval); `ReplaceLeft` otherwise. Ties replace on
/// the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PphCase {
    ReplaceRight,
    ReplaceLeft,
}

/// Output of the nonlinear reconstruction on one stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PphReconstruction {
    /// The centred cubic; its quadratic coefficient equals `mean_used`.
    pub poly: CenteredCubic,
    pub case: PphCase,
    /// Value of the selected mean of the two second divided differences.
    pub mean_used: f64,
    /// The replacement value for the outer ordinate on the suspect side.
    pub modified_endpoint: f64,
}

/// Picks the replacement side from the divided-difference magnitudes.
pub fn classify(d: SecondDiffs) -> PphCase {
    if d.d_left.abs() <= d.d_right.abs() {
        PphCase::ReplaceRight
    } else {
        PphCase::ReplaceLeft
    }
}

/// The outer ordinate that, combined with the three kept points, makes the
/// weighted arithmetic mean of the stencil's second divided differences
/// equal to `mean`.
///
/// With `mean` equal to the arithmetic mean of the original data this
/// returns the original ordinate; with a nonlinear mean it returns the
/// value the reconstruction interpolates instead.
pub fn modified_endpoint(st: &Stencil, mean: f64, case: PphCase) -> f64 {
    let k = mean_linear_coefficients(st);
    let f = st.f;
    match case {
        PphCase::ReplaceRight => (mean - (k[0] * f[0] + k[1] * f[1] + k[2] * f[2])) / k[3],
        PphCase::ReplaceLeft => (mean - (k[1] * f[1] + k[2] * f[2] + k[3] * f[3])) / k[0],
    }
}

/// Nonlinear reconstruction on one stencil.
///
/// Computes the divided differences and weights, applies the selected
/// mean, classifies the replacement side and assembles the cubic:
///
/// ```text
/// a0 = (f1 + f2)/2 - h1^2/4 * V
/// a1 = (f2 - f1)/h1 + h1^2 / (4 h0 + 2 h1) * (d_left - V)     (right case)
/// a2 = V
/// a3 = -2 / (2 h0 + h1) * (d_left - V)                        (right case)
/// ```
///
/// with the mirrored `(-d_right + V)` forms and right-side spacings in the
/// left case. `MeanKind::Arithmetic` reproduces the Lagrange cubic.
pub fn pph_reconstruct(st: &Stencil, kind: MeanKind) -> PphReconstruction {
    let d = st.second_diffs();
    let case = classify(d);
    reconstruct_with_case(st, kind, case)
}

/// Case-forced variant of [`pph_reconstruct`]; the public entry point
/// derives the case from the data.
pub(crate) fn reconstruct_with_case(
    st: &Stencil,
    kind: MeanKind,
    case: PphCase,
) -> PphReconstruction {
    let d = st.second_diffs();
    let w = st.weights();
    let v = kind.apply(d, w);
    let [h0, h1, h2] = st.h;
    let f1 = st.f[1];
    let f2 = st.f[2];
    let a0 = 0.5 * (f1 + f2) - 0.25 * h1 * h1 * v;
    let slope = (f2 - f1) / h1;
    let (a1, a3) = match case {
        PphCase::ReplaceRight => (
            slope + h1 * h1 / (4.0 * h0 + 2.0 * h1) * (d.d_left - v),
            -2.0 / (2.0 * h0 + h1) * (d.d_left - v),
        ),
        PphCase::ReplaceLeft => (
            slope + h1 * h1 / (2.0 * h1 + 4.0 * h2) * (-d.d_right + v),
            -2.0 / (h1 + 2.0 * h2) * (-d.d_right + v),
        ),
    };
    PphReconstruction {
        poly: CenteredCubic { center: st.midpoint, coeffs: [a0, a1, v, a3] },
        case,
        mean_used: v,
        modified_endpoint: modified_endpoint(st, v, case),
    }
}

/// Coefficient differences against the Lagrange cubic, from the closed
/// forms: every entry is a spacing factor times the gap between the
/// arithmetic mean and the selected mean.
pub fn coefficient_gap(st: &Stencil, kind: MeanKind) -> [f64; 4] {
    let d = st.second_diffs();
    let w = st.weights();
    let m = arithmetic_mean(d, w);
    let v = kind.apply(d, w);
    let gap = m - v;
    let [h0, h1, h2] = st.h;
    match classify(d) {
        PphCase::ReplaceRight => [
            0.25 * h1 * h1 * gap,
            h1 * h1 / (4.0 * h0 + 2.0 * h1) * gap,
            -gap,
            -2.0 / (2.0 * h0 + h1) * gap,
        ],
        PphCase::ReplaceLeft => [
            0.25 * h1 * h1 * gap,
            -h1 * h1 / (2.0 * h1 + 4.0 * h2) * gap,
            -gap,
            2.0 / (2.0 * h2 + h1) * gap,
        ],
    }
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::lagrange::lagrange_cubic;
    use crate::means::{harmonic_mean, TranslationParams};
    use rand::{Rng, SeedableRng};

    fn fig1_stencil() -> Stencil {
        Stencil::new([0.0, 8.0, 25.0, 30.0], [10.0, 9.0, 12.0, 30.0]).unwrap()
    }

    fn random_stencil(rng: &mut impl Rng) -> Stencil {
        let x0: f64 = rng.gen_range(-2.0..2.0);
        let mut x = [x0, 0.0, 0.0, 0.0];
        for k in 1..4 {
            x[k] = x[k - 1] + 10f64.powf(rng.gen_range(-1.0..1.0));
        }
        let f: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
        Stencil::new(x, f).unwrap()
    }

    fn translated(eps: f64) -> MeanKind {
        MeanKind::Translated(TranslationParams::new(eps).unwrap())
    }

    #[test]
    fn classify_cases() {
        let d = fig1_stencil().second_diffs();
        assert_eq!(classify(d), PphCase::ReplaceRight);
        assert_eq!(classify(SecondDiffs::new(5.0, -5.0)), PphCase::ReplaceRight);
        assert_eq!(classify(SecondDiffs::new(3.0, 1.0)), PphCase::ReplaceLeft);
    }

    #[test]
    fn arithmetic_mean_returns_original_endpoint() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(71);
        for _ in 0..1000 {
            let st = random_stencil(&mut rng);
            let m = arithmetic_mean(st.second_diffs(), st.weights());
            let scale = st.f.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
            let right = modified_endpoint(&st, m, PphCase::ReplaceRight);
            let left = modified_endpoint(&st, m, PphCase::ReplaceLeft);
            assert!((right - st.f[3]).abs() < 1e-10 * scale);
            assert!((left - st.f[0]).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn quadratic_data_keeps_endpoint() {
        let q = |x: f64| 0.8 * x * x - x + 2.0;
        let st = Stencil::new([0.0, 1.0, 2.5, 3.1], [q(0.0), q(1.0), q(2.5), q(3.1)]).unwrap();
        let r = pph_reconstruct(&st, MeanKind::Harmonic);
        assert!((r.modified_endpoint - st.f[3]).abs() < 1e-12 * st.f[3].abs());
    }

    #[test]
    fn endpoint_gap_identity() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(73);
        for _ in 0..1000 {
            let st = random_stencil(&mut rng);
            let d = st.second_diffs();
            let w = st.weights();
            let m = arithmetic_mean(d, w);
            let v = harmonic_mean(d, w);
            let [h0, h1, h2] = st.h;
            let s = h0 + h1 + h2;
            let f_tilde = modified_endpoint(&st, v, PphCase::ReplaceRight);
            let closed = 2.0 * h2 * (h1 + h2) * s / (2.0 * h0 + h1) * (m - v).abs();
            let actual = (f_tilde - st.f[3]).abs();
            assert!((actual - closed).abs() < 1e-10 * closed.max(1.0));
        }
    }

    #[test]
    fn quadratic_data_reproduces_lagrange_both_cases_and_kinds() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(79);
        for _ in 0..200 {
            let a = rng.gen_range(0.5..2.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
            let b: f64 = rng.gen_range(-3.0..3.0);
            let c: f64 = rng.gen_range(-3.0..3.0);
            let q = |x: f64| a * x * x + b * x + c;
            let st = random_stencil(&mut rng);
            let st = Stencil::new(st.x, st.x.map(q)).unwrap();
            let lag = lagrange_cubic(&st);
            for kind in [MeanKind::Harmonic, translated(0.5), translated(0.05)] {
                for case in [PphCase::ReplaceRight, PphCase::ReplaceLeft] {
                    let r = reconstruct_with_case(&st, kind, case);
                    for i in 0..4 {
                        let scale = lag.coeffs[i].abs().max(a.abs());
                        assert!(
                            (r.poly.coeffs[i] - lag.coeffs[i]).abs() < 1e-10 * scale,
                            "coeff {i} case {case:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn uniform_harmonic_matches_uniform_closed_forms() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(83);
        for _ in 0..300 {
            let h: f64 = 10f64.powf(rng.gen_range(-1.0..1.0));
            let x0: f64 = rng.gen_range(-2.0..2.0);
            let x = [x0, x0 + h, x0 + 2.0 * h, x0 + 3.0 * h];
            let mut f: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
            let dl = (f[0] - 2.0 * f[1] + f[2]) / (2.0 * h * h);
            let dr = (f[1] - 2.0 * f[2] + f[3]) / (2.0 * h * h);
            if dl.abs() > dr.abs() {
                f.reverse(); // keep the replace-right case active
            }
            let st = Stencil::new(x, f).unwrap();
            let dl = (f[0] - 2.0 * f[1] + f[2]) / (2.0 * h * h);
            let dr = (f[1] - 2.0 * f[2] + f[3]) / (2.0 * h * h);
            let dt = if dl * dr > 0.0 { 2.0 * dl * dr / (dl + dr) } else { 0.0 };
            let expected = [
                0.5 * (f[1] + f[2]) - 0.25 * h * h * dt,
                (f[2] - f[1]) / h + h / 6.0 * (dl - dt),
                dt,
                -2.0 / (3.0 * h) * (dl - dt),
            ];
            let r = pph_reconstruct(&st, MeanKind::Harmonic);
            assert_eq!(r.case, PphCase::ReplaceRight);
            for i in 0..4 {
                let scale = expected[i].abs().max(1.0);
                assert!((r.poly.coeffs[i] - expected[i]).abs() < 1e-11 * scale, "coeff {i}");
            }
        }
    }

    #[test]
    fn fig1_harmonic_inflection() {
        let r = pph_reconstruct(&fig1_stencil(), MeanKind::Harmonic);
        let root = r.poly.inflection().unwrap();
        assert!((root - 5.66).abs() < 0.005, "root = {root}");
    }

    #[test]
    fn quadratic_coefficient_is_mean_exactly() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(89);
        for _ in 0..200 {
            let st = random_stencil(&mut rng);
            for kind in [MeanKind::Arithmetic, MeanKind::Harmonic, translated(0.5)] {
                let r = pph_reconstruct(&st, kind);
                assert_eq!(r.poly.coeffs[2], r.mean_used);
                let expected_a0 =
                    0.5 * (st.f[1] + st.f[2]) - 0.25 * st.h[1] * st.h[1] * r.mean_used;
                assert_eq!(r.poly.coeffs[0], expected_a0);
            }
        }
    }

    #[test]
    fn interpolates_three_kept_points() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(97);
        for _ in 0..1000 {
            let st = random_stencil(&mut rng);
            for kind in [MeanKind::Harmonic, translated(0.5)] {
                let r = pph_reconstruct(&st, kind);
                let scale = st.f.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
                let kept: [usize; 3] = match r.case {
                    PphCase::ReplaceRight => [0, 1, 2],
                    PphCase::ReplaceLeft => [1, 2, 3],
                };
                for i in kept {
                    assert!(
                        (r.poly.eval(st.x[i]) - st.f[i]).abs() < 1e-10 * scale,
                        "node {i} case {:?}",
                        r.case
                    );
                }
            }
        }
    }

    #[test]
    fn cubic_passes_through_modified_endpoint() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(101);
        for _ in 0..1000 {
            let st = random_stencil(&mut rng);
            let r = pph_reconstruct(&st, MeanKind::Harmonic);
            let x_mod = match r.case {
                PphCase::ReplaceRight => st.x[3],
                PphCase::ReplaceLeft => st.x[0],
            };
            let scale = st
                .f
                .iter()
                .fold(r.modified_endpoint.abs(), |a, &b| a.max(b.abs()))
                .max(1.0);
            assert!((r.poly.eval(x_mod) - r.modified_endpoint).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn equals_lagrange_on_modified_data() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(103);
        for _ in 0..500 {
            let st = random_stencil(&mut rng);
            for kind in [MeanKind::Harmonic, translated(0.5)] {
                let r = pph_reconstruct(&st, kind);
                let mut f = st.f;
                match r.case {
                    PphCase::ReplaceRight => f[3] = r.modified_endpoint,
                    PphCase::ReplaceLeft => f[0] = r.modified_endpoint,
                }
                let lag = lagrange_cubic(&Stencil::new(st.x, f).unwrap());
                for i in 0..4 {
                    let scale = lag.coeffs[i].abs().max(r.poly.coeffs[i].abs()).max(1e-300);
                    assert!((r.poly.coeffs[i] - lag.coeffs[i]).abs() < 1e-9 * scale.max(1.0));
                }
            }
        }
    }

    #[test]
    fn tie_reproduces_lagrange() {
        // Equal divided differences: both case formulas coincide with the
        // Lagrange cubic; classification stays on the right.
        let q = |x: f64| 1.5 * x * x;
        let st = Stencil::new([0.0, 1.0, 2.0, 4.0], [q(0.0), q(1.0), q(2.0), q(4.0)]).unwrap();
        let r = pph_reconstruct(&st, MeanKind::Harmonic);
        assert_eq!(r.case, PphCase::ReplaceRight);
        let lag = lagrange_cubic(&st);
        for i in 0..4 {
            assert!((r.poly.coeffs[i] - lag.coeffs[i]).abs() < 1e-12 * lag.coeffs[i].abs().max(1.0));
        }
    }

    #[test]
    fn central_coefficients_do_not_depend_on_the_case() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(91);
        for _ in 0..300 {
            let st = random_stencil(&mut rng);
            for kind in [MeanKind::Harmonic, translated(0.5)] {
                let right = reconstruct_with_case(&st, kind, PphCase::ReplaceRight);
                let left = reconstruct_with_case(&st, kind, PphCase::ReplaceLeft);
                assert_eq!(right.poly.coeffs[0], left.poly.coeffs[0]);
                assert_eq!(right.poly.coeffs[2], left.poly.coeffs[2]);
            }
        }
    }

    #[test]
    fn gap_vanishes_on_quadratic_data() {
        let q = |x: f64| -2.0 * x * x + 3.0 * x;
        let st = Stencil::new([0.0, 0.5, 1.7, 3.0], [q(0.0), q(0.5), q(1.7), q(3.0)]).unwrap();
        let gap = coefficient_gap(&st, MeanKind::Harmonic);
        for (i, g) in gap.iter().enumerate() {
            assert!(g.abs() < 1e-12, "gap[{i}] = {g}");
        }
    }

    #[test]
    fn gap_quadratic_entry_is_negated_mean_difference() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(107);
        for _ in 0..300 {
            // Convex data keeps the harmonic branch active.
            let st = random_stencil(&mut rng);
            let f: [f64; 4] = st.x.map(|x| x * x + rng.gen_range(-0.1..0.1));
            let st = Stencil::new(st.x, f).unwrap();
            let d = st.second_diffs();
            if d.product() <= 0.0 {
                continue;
            }
            let w = st.weights();
            let m = arithmetic_mean(d, w);
            let v = harmonic_mean(d, w);
            let gap = coefficient_gap(&st, MeanKind::Harmonic);
            assert_eq!(gap[2], -(m - v));
        }
    }

    #[test]
    fn gap_matches_polynomial_subtraction() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(109);
        for _ in 0..1000 {
            let st = random_stencil(&mut rng);
            for kind in [MeanKind::Harmonic, translated(0.5)] {
                let gap = coefficient_gap(&st, kind);
                let lag = lagrange_cubic(&st);
                let r = pph_reconstruct(&st, kind);
                for i in 0..4 {
                    let direct = r.poly.coeffs[i] - lag.coeffs[i];
                    let scale = gap[i].abs().max(lag.coeffs[i].abs()).max(1.0);
                    assert!((gap[i] - direct).abs() < 1e-10 * scale, "coeff {i}");
                }
            }
        }
    }
}
