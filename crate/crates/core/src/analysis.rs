//! Convexity thresholds and grid-refinement order studies.

use serde::Serialize;

use crate::error::Error;
use crate::grid::{NonUniformGrid, Stencil};
use crate::lagrange::{lagrange_cubic, CenteredCubic};
use crate::means::{arithmetic_mean, MeanKind, TranslationParams};
use crate::pph::{classify, pph_reconstruct, PphCase};

/// A reconstruction operator acting stencil by stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Operator {
    /// The linear four-point cubic.
    Lagrange,
    /// The nonlinear cubic with the weighted harmonic mean.
    Pph,
    /// The nonlinear cubic with the translated harmonic mean.
    Translated(TranslationParams),
}

impl Operator {
    /// Translated operator with a validated shift constant.
    pub fn translated(epsilon: f64) -> Result<Self, Error> {
        Ok(Operator::Translated(TranslationParams::new(epsilon)?))
    }

    /// Column label used in emitted tables.
    pub fn label(&self) -> String {
        match self {
            Operator::Lagrange => "lagrange".to_string(),
            Operator::Pph => "pph".to_string(),
            Operator::Translated(p) => format!("translated(eps={})", p.epsilon()),
        }
    }

    /// The cubic this operator assigns to one stencil.
    pub fn cubic_for(&self, st: &Stencil) -> CenteredCubic {
        match self {
            Operator::Lagrange => lagrange_cubic(st),
            Operator::Pph => pph_reconstruct(st, MeanKind::Harmonic).poly,
            Operator::Translated(p) => pph_reconstruct(st, MeanKind::Translated(*p)).poly,
        }
    }
}

/// One interval of a piecewise reconstruction.
#[derive(Debug, Clone, Copy)]
pub struct IntervalPoly {
    /// Interval index `j`, spanning `[x_j, x_{j+1}]`.
    pub interval: usize,
    pub x_left: f64,
    pub x_right: f64,
    pub poly: CenteredCubic,
}

/// Piecewise reconstruction: one cubic per reconstructible interval, each
/// used only on its own central interval.
///
/// With `include_boundary`, the first and last grid intervals borrow the
/// nearest interior polynomial, evaluated outside its central interval;
/// error norms never include those borrowed intervals.
pub fn piecewise(
    grid: &NonUniformGrid,
    op: Operator,
    include_boundary: bool,
) -> Result<Vec<IntervalPoly>, Error> {
    let x = grid.abscissas();
    let range = grid.reconstructible_intervals();
    let (first, last) = (*range.start(), *range.end());
    let mut out = Vec::with_capacity(last - first + 1 + 2 * include_boundary as usize);
    if include_boundary {
        out.push(IntervalPoly {
            interval: 0,
            x_left: x[0],
            x_right: x[1],
            poly: op.cubic_for(&grid.stencil(first)?),
        });
    }
    for j in first..=last {
        out.push(IntervalPoly {
            interval: j,
            x_left: x[j],
            x_right: x[j + 1],
            poly: op.cubic_for(&grid.stencil(j)?),
        });
    }
    if include_boundary {
        let j = grid.len() - 2;
        out.push(IntervalPoly {
            interval: j,
            x_left: x[j],
            x_right: x[j + 1],
            poly: op.cubic_for(&grid.stencil(last)?),
        });
    }
    Ok(out)
}

/// Sup-norm error of one interval of a piecewise reconstruction.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IntervalError {
    pub interval: usize,
    pub x_left: f64,
    pub x_right: f64,
    pub sup_error: f64,
}

/// Per-interval sup-norm errors against `sampler` over the reconstructible
/// intervals, each sampled at `samples_per_interval` equispaced points,
/// endpoints included.
pub fn interval_sup_errors<F: Fn(f64) -> f64>(
    grid: &NonUniformGrid,
    sampler: F,
    op: Operator,
    samples_per_interval: usize,
) -> Result<Vec<IntervalError>, Error> {
    assert!(samples_per_interval >= 2, "need at least two samples per interval");
    let pieces = piecewise(grid, op, false)?;
    let mut out = Vec::with_capacity(pieces.len());
    for piece in pieces {
        let mut sup = 0.0f64;
        for s in 0..samples_per_interval {
            let t = s as f64 / (samples_per_interval - 1) as f64;
            let x = piece.x_left + t * (piece.x_right - piece.x_left);
            sup = sup.max((sampler(x) - piece.poly.eval(x)).abs());
        }
        out.push(IntervalError {
            interval: piece.interval,
            x_left: piece.x_left,
            x_right: piece.x_right,
            sup_error: sup,
        });
    }
    Ok(out)
}

/// Discrete sup-norm error over all reconstructible intervals; boundary
/// intervals are excluded.
pub fn sup_error<F: Fn(f64) -> f64>(
    grid: &NonUniformGrid,
    sampler: F,
    op: Operator,
    samples_per_interval: usize,
) -> Result<f64, Error> {
    Ok(interval_sup_errors(grid, sampler, op, samples_per_interval)?
        .iter()
        .map(|e| e.sup_error)
        .fold(0.0, f64::max))
}

/// Errors below this fraction of the data scale count as rounding floor;
/// order estimates near the floor are noise.
const FLOOR_FRACTION: f64 = 1e-12;

/// Result of a dyadic-refinement order study for one operator.
///
/// `errors[s]` is the sup-norm error after `s` refinements of the base
/// grid; `orders[s-1] = log2(errors[s-1] / errors[s])`. Orders touching a
/// rounding-floor error are reported as NaN and the study is flagged.
#[derive(Debug, Clone, Serialize)]
pub struct OrderStudy {
    pub operator: String,
    pub errors: Vec<f64>,
    pub orders: Vec<f64>,
    pub levels: usize,
    pub at_floor: bool,
}

impl OrderStudy {
    /// JSON record with the fields as named.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("order study serializes")
    }

    /// CSV rows `level,error,order`, one per refinement level.
    pub fn csv_rows(&self) -> String {
        let mut out = String::from("level,error,order\n");
        for (s, e) in self.errors.iter().enumerate() {
            if s == 0 {
                out.push_str(&format!("0,{e:.16e},\n"));
            } else {
                out.push_str(&format!("{s},{e:.16e},{:.4}\n", self.orders[s - 1]));
            }
        }
        out
    }
}

/// Refines `base` dyadically `levels` times, measuring the sup-norm error
/// of `op` against `sampler` at every level.
pub fn order_study<F: Fn(f64) -> f64>(
    base: &NonUniformGrid,
    sampler: F,
    op: Operator,
    levels: usize,
    samples_per_interval: usize,
) -> Result<OrderStudy, Error> {
    assert!(levels >= 1, "an order study needs at least one refinement");
    let mut grid = base.clone();
    let mut errors = Vec::with_capacity(levels + 1);
    let mut floors = Vec::with_capacity(levels + 1);
    for s in 0..=levels {
        let err = sup_error(&grid, &sampler, op, samples_per_interval)?;
        let scale = grid.ordinates().iter().fold(1.0f64, |a, &b| a.max(b.abs()));
        errors.push(err);
        floors.push(err <= FLOOR_FRACTION * scale);
        if s < levels {
            grid = grid.refine_dyadic(&sampler)?;
        }
    }
    let orders: Vec<f64> = (1..=levels)
        .map(|s| {
            if floors[s - 1] || floors[s] {
                f64::NAN
            } else {
                (errors[s - 1] / errors[s]).log2()
            }
        })
        .collect();
    let at_floor = floors.iter().any(|&b| b);
    Ok(OrderStudy { operator: op.label(), errors, orders, levels, at_floor })
}

/// Convexity analysis of one stencil with second divided differences of a
/// single strict sign.
///
/// `x_pph` and `x_pl` are the abscissas where the second derivative of the
/// nonlinear and of the Lagrange cubic changes sign. In the replace-right
/// case both polynomials are convex above their threshold and `gap =
/// x_pl - x_pph`; in the replace-left case convexity holds below and
/// `gap = x_pph - x_pl`. The gap is positive either way: the nonlinear
/// reconstruction preserves convexity on a wider interval.
#[derive(Debug, Clone, Serialize)]
pub struct ConvexityReport {
    pub x_pph: f64,
    pub x_pl: f64,
    pub gap: f64,
    /// Second derivative keeps the data's sign on `[x_1, x_3]`
    /// (replace-right) or `[x_0, x_2]` (replace-left) of the stencil.
    pub preserved_on_central: bool,
    /// Same over the whole stencil span.
    pub preserved_on_full: bool,
    pub case: PphCase,
    /// Spacing-sum reading of the Lagrange threshold validated by the
    /// derivative cross-check in the replace-left case.
    pub case2_pl_reading: Option<String>,
}

impl ConvexityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("convexity report serializes")
    }

    /// CSV rows `key,value`.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("x_pph,{:.16e}\n", self.x_pph));
        out.push_str(&format!("x_pl,{:.16e}\n", self.x_pl));
        out.push_str(&format!("gap,{:.16e}\n", self.gap));
        out.push_str(&format!("preserved_on_central,{}\n", self.preserved_on_central));
        out.push_str(&format!("preserved_on_full,{}\n", self.preserved_on_full));
        out.push_str(&format!("case,{:?}\n", self.case));
        if let Some(reading) = &self.case2_pl_reading {
            out.push_str(&format!("case2_pl_reading,{reading}\n"));
        }
        out
    }
}

/// Builds the convexity report for a stencil whose second divided
/// differences share one strict sign.
///
/// The thresholds come from the inflection abscissas of the two cubics;
/// for the harmonic mean they reduce to closed forms in the divided
/// differences and spacings alone, and the gap to a closed form in the
/// spacings only. Equal divided differences degenerate both cubics to a
/// parabola: the thresholds escape to infinity on the convex side and the
/// gap keeps its closed-form spacing value.
pub fn convexity_report(st: &Stencil, kind: MeanKind) -> Result<ConvexityReport, Error> {
    let d = st.second_diffs();
    let one_strict_sign = d.product() > 0.0;
    if !one_strict_sign {
        return Err(Error::NotConvexData { d_left: d.d_left, d_right: d.d_right });
    }
    let case = classify(d);
    let w = st.weights();
    let v = kind.apply(d, w);
    let m = arithmetic_mean(d, w);
    let [h0, h1, h2] = st.h;
    let xc = st.midpoint;

    // Positive orientation for the preservation inequalities; the
    // threshold formulas are invariant under negating both differences.
    let (p, q) = if d.d_left > 0.0 {
        (d.d_left, d.d_right)
    } else {
        (-d.d_left, -d.d_right)
    };

    let tie = d.d_left == d.d_right;
    let (x_pph, x_pl, gap, preserved_on_central, preserved_on_full, reading) = match case {
        PphCase::ReplaceRight => {
            let gap_closed = (h1 + 2.0 * h2) / 6.0;
            let (x_pph, x_pl, gap) = if tie {
                (f64::NEG_INFINITY, f64::NEG_INFINITY, gap_closed)
            } else {
                let scale = (2.0 * h0 + h1) / 6.0;
                let x_pph = xc - scale * v / (v - d.d_left);
                let x_pl = xc - scale * m / (m - d.d_left);
                (x_pph, x_pl, x_pl - x_pph)
            };
            let central = (h1 - 2.0 * (h0 + h2)) * q < 3.0 * h1 * p;
            let full = (4.0 * h0 + h1 - 2.0 * h2) * q < 3.0 * (2.0 * h0 + h1) * p;
            (x_pph, x_pl, gap, central, full, None)
        }
        PphCase::ReplaceLeft => {
            let scale = (h1 + 2.0 * h2) / 6.0;
            let x_pph = xc + scale * v / (v - d.d_right);
            let x_pl = xc + scale * m / (m - d.d_right);
            let central = (h1 - 2.0 * (h0 + h2)) * p < 3.0 * h1 * q;
            let full = (4.0 * h2 + h1 - 2.0 * h0) * p < 3.0 * (2.0 * h2 + h1) * q;
            (
                x_pph,
                x_pl,
                x_pph - x_pl,
                central,
                full,
                Some("full-spacing-sum".to_string()),
            )
        }
    };

    Ok(ConvexityReport {
        x_pph,
        x_pl,
        gap,
        preserved_on_central,
        preserved_on_full,
        case,
        case2_pl_reading: reading,
    })
}
