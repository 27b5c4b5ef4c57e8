//! Ingestion of `x,f` point data.
//!
//! Two plain-text formats are accepted: CSV with two columns `x,f`
//! (header optional, decimal point, rows sorted by `x`) and a JSON object
//! with two equally long number arrays `"x"` and `"f"`.

use std::fmt;

/// Parse failure with an optional 1-based line number.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError { line: Some(line), message: message.into() }
    }

    fn whole(message: impl Into<String>) -> Self {
        ParseError { line: None, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses two-column CSV into abscissa and ordinate vectors.
///
/// Empty lines and lines starting with `#` are skipped. A first row whose
/// initial field is not a number is treated as a header.
pub fn parse_xy_csv(text: &str) -> Result<(Vec<f64>, Vec<f64>), ParseError> {
    let mut xs = Vec::new();
    let mut fs = Vec::new();
    let mut saw_data_or_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(ParseError::at(
                idx + 1,
                format!("expected 2 comma-separated columns, got {}", fields.len()),
            ));
        }
        if !saw_data_or_header {
            saw_data_or_header = true;
            if fields[0].parse::<f64>().is_err() {
                continue; // header row
            }
        }
        let x: f64 = fields[0]
            .parse()
            .map_err(|_| ParseError::at(idx + 1, format!("bad abscissa {:?}", fields[0])))?;
        let f: f64 = fields[1]
            .parse()
            .map_err(|_| ParseError::at(idx + 1, format!("bad ordinate {:?}", fields[1])))?;
        xs.push(x);
        fs.push(f);
    }
    if xs.is_empty() {
        return Err(ParseError::whole("no data rows"));
    }
    Ok((xs, fs))
}

/// Parses a JSON object `{"x": [...], "f": [...]}`.
pub fn parse_xy_json(text: &str) -> Result<(Vec<f64>, Vec<f64>), ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| ParseError::whole(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError::whole("expected a JSON object with \"x\" and \"f\""))?;
    let pull = |key: &str| -> Result<Vec<f64>, ParseError> {
        obj.get(key)
            .and_then(|v| v.as_array())
            .ok_or_else(|| ParseError::whole(format!("missing number array \"{key}\"")))?
            .iter()
            .map(|v| {
                v.as_f64()
                    .ok_or_else(|| ParseError::whole(format!("non-numeric entry in \"{key}\"")))
            })
            .collect()
    };
    Ok((pull("x")?, pull("f")?))
}
