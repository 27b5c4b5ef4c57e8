//! The four experiment commands.

use pph_core::analysis::{convexity_report, interval_sup_errors, order_study as run_order_study};
use pph_core::means::MeanKind;
use pph_core::Error;

use crate::dataset;
use crate::emit::{num, sample_curves};
use crate::{resolve_samples, CliError, Format, RunArgs};

fn numeric(e: Error) -> CliError {
    CliError::Numeric(e.to_string())
}

/// Dense reconstruction curves over the grid span.
pub fn reconstruct(args: &RunArgs) -> Result<String, CliError> {
    let format = Format::parse(&args.format)?;
    let samples = resolve_samples(args)?;
    let data = dataset::resolve(args, None)?;
    let ops = dataset::operators(args)?;
    let curves = sample_curves(&data.grid, &ops, data.sampler, samples)?;
    Ok(match format {
        Format::Csv => curves.to_csv(),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&curves.to_json_value())
                .expect("curves serialize");
            text.push('\n');
            text
        }
    })
}

/// Order table under dyadic refinement, one column per operator.
pub fn order_study(args: &RunArgs) -> Result<String, CliError> {
    let format = Format::parse(&args.format)?;
    let samples = resolve_samples(args)?;
    if args.levels < 1 {
        return Err(CliError::Config("order studies need --levels >= 1".to_string()));
    }
    let data = dataset::resolve(args, Some("sine-nonuniform"))?;
    let sampler = data.sampler.ok_or_else(|| {
        CliError::Config(format!(
            "order studies need an analytic dataset (got {:?}); use --dataset",
            data.name
        ))
    })?;
    let ops = dataset::operators(args)?;
    let studies: Vec<_> = ops
        .iter()
        .map(|op| run_order_study(&data.grid, sampler, *op, args.levels, samples).map_err(numeric))
        .collect::<Result<_, _>>()?;

    Ok(match format {
        Format::Json => {
            let mut text =
                serde_json::to_string_pretty(&studies).expect("order studies serialize");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut out = String::from("s");
            for study in &studies {
                out.push(',');
                out.push_str(&study.operator);
            }
            out.push('\n');
            for s in 0..args.levels {
                out.push_str(&format!("{}", s + 1));
                for study in &studies {
                    out.push_str(&format!(",{:.4}", study.orders[s]));
                }
                out.push('\n');
            }
            let flagged: Vec<&str> = studies
                .iter()
                .filter(|st| st.at_floor)
                .map(|st| st.operator.as_str())
                .collect();
            if !flagged.is_empty() {
                out.push_str(&format!("# at_floor: {}\n", flagged.join(" ")));
            }
            out
        }
    })
}

/// Convexity report plus second-derivative curves for one stencil.
pub fn convexity(args: &RunArgs) -> Result<String, CliError> {
    let format = Format::parse(&args.format)?;
    let samples = resolve_samples(args)?;
    let data = dataset::resolve(args, Some("fig1"))?;
    if data.grid.len() != 4 {
        return Err(CliError::Config(format!(
            "convexity analysis needs exactly 4 points, got {} in {:?}",
            data.grid.len(),
            data.name
        )));
    }
    let ops = dataset::operators(args)?;
    let st = data.grid.stencil(1).map_err(numeric)?;
    let report = convexity_report(&st, MeanKind::Harmonic).map_err(numeric)?;

    let span_points = 3 * samples;
    let xs: Vec<f64> = (0..span_points)
        .map(|s| st.x[0] + (st.x[3] - st.x[0]) * s as f64 / (span_points - 1) as f64)
        .collect();
    let columns: Vec<(String, Vec<f64>)> = ops
        .iter()
        .map(|op| {
            let poly = op.cubic_for(&st);
            (
                format!("d2_{}", op.label()),
                xs.iter().map(|&x| poly.second_derivative(x)).collect(),
            )
        })
        .collect();

    Ok(match format {
        Format::Json => {
            let mut samples_obj = serde_json::Map::new();
            samples_obj.insert("x".to_string(), serde_json::json!(xs));
            for (label, values) in &columns {
                samples_obj.insert(label.clone(), serde_json::json!(values));
            }
            let value = serde_json::json!({
                "report": report,
                "samples": serde_json::Value::Object(samples_obj),
            });
            let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# x_pph={}\n", num(report.x_pph)));
            out.push_str(&format!("# x_pl={}\n", num(report.x_pl)));
            out.push_str(&format!("# gap={}\n", num(report.gap)));
            out.push_str(&format!("# preserved_on_central={}\n", report.preserved_on_central));
            out.push_str(&format!("# preserved_on_full={}\n", report.preserved_on_full));
            out.push_str(&format!("# case={:?}\n", report.case));
            if let Some(reading) = &report.case2_pl_reading {
                out.push_str(&format!("# case2_pl_reading={reading}\n"));
            }
            out.push('x');
            for (label, _) in &columns {
                out.push(',');
                out.push_str(label);
            }
            out.push('\n');
            for (i, &x) in xs.iter().enumerate() {
                out.push_str(&num(x));
                for (_, values) in &columns {
                    out.push(',');
                    out.push_str(&num(values[i]));
                }
                out.push('\n');
            }
            out
        }
    })
}

/// Curves plus per-interval sup errors around a jump.
pub fn singularity(args: &RunArgs) -> Result<String, CliError> {
    let format = Format::parse(&args.format)?;
    let samples = resolve_samples(args)?;
    let data = dataset::resolve(args, Some("jump"))?;
    let sampler = data.sampler.ok_or_else(|| {
        CliError::Config(format!(
            "the singularity experiment needs an analytic dataset (got {:?}); use --dataset",
            data.name
        ))
    })?;
    let ops = dataset::operators(args)?;
    let curves = sample_curves(&data.grid, &ops, Some(sampler), samples)?;

    let jump_interval = data.jump.and_then(|x| data.grid.interval_containing(x));
    let per_op: Vec<_> = ops
        .iter()
        .map(|op| interval_sup_errors(&data.grid, sampler, *op, samples).map_err(numeric))
        .collect::<Result<_, _>>()?;
    Ok(match format {
        Format::Json => {
            let intervals: Vec<serde_json::Value> = per_op[0]
                .iter()
                .enumerate()
                .map(|(row, base)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("interval".to_string(), serde_json::json!(base.interval));
                    obj.insert("x_left".to_string(), serde_json::json!(base.x_left));
                    obj.insert("x_right".to_string(), serde_json::json!(base.x_right));
                    obj.insert(
                        "contains_jump".to_string(),
                        serde_json::json!(jump_interval == Some(base.interval)),
                    );
                    for (op, errs) in ops.iter().zip(per_op.iter()) {
                        obj.insert(
                            format!("sup_{}", op.label()),
                            serde_json::json!(errs[row].sup_error),
                        );
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            let value = serde_json::json!({
                "curves": curves.to_json_value(),
                "intervals": intervals,
            });
            let mut text = serde_json::to_string_pretty(&value).expect("singularity serializes");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut out = curves.to_csv();
            out.push('\n');
            out.push_str("interval,x_left,x_right,contains_jump");
            for op in &ops {
                out.push_str(&format!(",sup_{}", op.label()));
            }
            out.push('\n');
            for (row, base) in per_op[0].iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{}",
                    base.interval,
                    num(base.x_left),
                    num(base.x_right),
                    u8::from(jump_interval == Some(base.interval)),
                ));
                for errs in &per_op {
                    out.push(',');
                    out.push_str(&num(errs[row].sup_error));
                }
                out.push('\n');
            }
            out
        }
    })
}
