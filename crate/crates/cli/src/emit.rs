//! Shared output assembly: curve sampling and number formatting.
//!
//! CSV values carry 17 significant digits so a parsed value reproduces the
//! computed one bit for bit.

use pph_core::analysis::{piecewise, Operator};
use pph_core::NonUniformGrid;

use crate::CliError;

/// Round-trip-safe CSV number.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Dense samples of every selected operator over the full grid span.
///
/// The boundary intervals borrow the nearest interior polynomial, so the
/// curves cover the whole data range; error norms elsewhere stay
/// interior-only.
pub struct Curves {
    pub xs: Vec<f64>,
    pub f_true: Option<Vec<f64>>,
    pub columns: Vec<(String, Vec<f64>)>,
}

pub fn sample_curves(
    grid: &NonUniformGrid,
    ops: &[Operator],
    sampler: Option<fn(f64) -> f64>,
    samples: usize,
) -> Result<Curves, CliError> {
    let per_op: Vec<_> = ops
        .iter()
        .map(|op| piecewise(grid, *op, true).map_err(|e| CliError::Numeric(e.to_string())))
        .collect::<Result<_, _>>()?;
    let mut xs = Vec::new();
    for (pi, piece) in per_op[0].iter().enumerate() {
        let start = if pi == 0 { 0 } else { 1 }; // shared interval endpoints appear once
        for s in start..samples {
            let t = s as f64 / (samples - 1) as f64;
            xs.push(piece.x_left + t * (piece.x_right - piece.x_left));
        }
    }
    let mut columns = Vec::with_capacity(ops.len());
    for (op, pieces) in ops.iter().zip(per_op.iter()) {
        let mut values = Vec::with_capacity(xs.len());
        for (pi, piece) in pieces.iter().enumerate() {
            let start = if pi == 0 { 0 } else { 1 };
            for s in start..samples {
                let t = s as f64 / (samples - 1) as f64;
                let x = piece.x_left + t * (piece.x_right - piece.x_left);
                values.push(piece.poly.eval(x));
            }
        }
        columns.push((op.label(), values));
    }
    let f_true = sampler.map(|f| xs.iter().map(|&x| f(x)).collect());
    Ok(Curves { xs, f_true, columns })
}

impl Curves {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x");
        if self.f_true.is_some() {
            out.push_str(",f_true");
        }
        for (label, _) in &self.columns {
            out.push(',');
            out.push_str(label);
        }
        out.push('\n');
        for (i, &x) in self.xs.iter().enumerate() {
            out.push_str(&num(x));
            if let Some(f) = &self.f_true {
                out.push(',');
                out.push_str(&num(f[i]));
            }
            for (_, values) in &self.columns {
                out.push(',');
                out.push_str(&num(values[i]));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("x".to_string(), serde_json::json!(self.xs));
        if let Some(f) = &self.f_true {
            obj.insert("f_true".to_string(), serde_json::json!(f));
        }
        for (label, values) in &self.columns {
            obj.insert(label.clone(), serde_json::json!(values));
        }
        serde_json::Value::Object(obj)
    }
}
