//! Input resolution: built-in datasets and point-data files.

use std::path::Path;

use pph_core::analysis::Operator;
use pph_core::{datasets, io, NonUniformGrid};

use crate::{CliError, RunArgs};

/// A resolved input: the grid, the analytic sampler when one exists, and
/// the jump location when the dataset has one.
pub struct Dataset {
    pub name: String,
    pub grid: NonUniformGrid,
    pub sampler: Option<fn(f64) -> f64>,
    pub jump: Option<f64>,
}

fn builtin(name: &str) -> Option<Dataset> {
    match name {
        "fig1" => Some(Dataset {
            name: name.to_string(),
            grid: datasets::fig1_grid(),
            sampler: None,
            jump: None,
        }),
        "sine-nonuniform" => Some(Dataset {
            name: name.to_string(),
            grid: datasets::sine_grid(),
            sampler: Some(f64::sin),
            jump: None,
        }),
        "jump" => Some(Dataset {
            name: name.to_string(),
            grid: datasets::jump_grid(),
            sampler: Some(datasets::jump_function),
            jump: Some(datasets::jump_abscissa()),
        }),
        "quadratic" => Some(Dataset {
            name: name.to_string(),
            grid: datasets::quadratic_grid(),
            sampler: Some(datasets::quadratic_function),
            jump: None,
        }),
        _ => None,
    }
}

fn from_file(path: &Path) -> Result<Dataset, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let json = path.extension().and_then(|e| e.to_str()) == Some("json");
    let (x, f) = if json {
        io::parse_xy_json(&text).map_err(|e| CliError::Parse(e.to_string()))?
    } else {
        io::parse_xy_csv(&text).map_err(|e| CliError::Parse(e.to_string()))?
    };
    let grid = NonUniformGrid::new(x, f).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(Dataset {
        name: path.display().to_string(),
        grid,
        sampler: None,
        jump: None,
    })
}

/// Resolves `--input`/`--dataset`, falling back to `default_dataset` when
/// neither is given.
pub fn resolve(args: &RunArgs, default_dataset: Option<&str>) -> Result<Dataset, CliError> {
    match (&args.input, &args.dataset) {
        (Some(path), None) => from_file(path),
        (None, Some(name)) => builtin(name).ok_or_else(|| {
            CliError::Config(format!(
                "unknown dataset {name:?} (fig1|sine-nonuniform|jump|quadratic)"
            ))
        }),
        (None, None) => match default_dataset {
            Some(name) => Ok(builtin(name).expect("default datasets exist")),
            None => Err(CliError::Config("need --input or --dataset".to_string())),
        },
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

/// Parses the operator list, expanding `translated` over the epsilon list.
pub fn operators(args: &RunArgs) -> Result<Vec<Operator>, CliError> {
    let epsilons: Vec<f64> = if args.epsilon.trim().is_empty() {
        Vec::new()
    } else {
        args.epsilon
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<f64>()
                    .ok()
                    .filter(|e| e.is_finite() && *e > 0.0)
                    .ok_or_else(|| {
                        CliError::Config(format!("epsilon must be a positive number, got {tok:?}"))
                    })
            })
            .collect::<Result<_, _>>()?
    };
    let mut out = Vec::new();
    for token in args.operators.split(',').map(str::trim) {
        match token {
            "lagrange" => out.push(Operator::Lagrange),
            "pph" => out.push(Operator::Pph),
            "translated" => {
                if epsilons.is_empty() {
                    return Err(CliError::Config(
                        "the translated operator needs a non-empty --epsilon list".to_string(),
                    ));
                }
                for &eps in &epsilons {
                    out.push(
                        Operator::translated(eps)
                            .map_err(|e| CliError::Config(e.to_string()))?,
                    );
                }
            }
            other => {
                return Err(CliError::Config(format!(
                    "unknown operator {other:?} (lagrange|pph|translated)"
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Config("empty operator list".to_string()));
    }
    Ok(out)
}
