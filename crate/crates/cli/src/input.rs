//! CSV ingestion.

use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use hardness_core::{build_dataset, Dataset};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelColumn {
    Name(String),
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvSpec {
    pub path: PathBuf,
    pub label: LabelColumn,
    pub delimiter: u8,
    pub has_header: bool,
}

impl CsvSpec {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        CsvSpec {
            path: path.into(),
            label: LabelColumn::Last,
            delimiter: b',',
            has_header: true,
        }
    }
}

pub fn load(spec: &CsvSpec) -> Result<Dataset, CliError> {
    let file = File::open(&spec.path).map_err(|e| CliError::Io {
        path: spec.path.clone(),
        source: e,
    })?;
    parse(file, spec, &spec.path)
}

/// Parses CSV text. Numeric labels are ordered numerically, anything else
/// lexicographically.
pub fn parse<R: Read>(reader: R, spec: &CsvSpec, origin: &Path) -> Result<Dataset, CliError> {
    let invalid = |msg: String| CliError::Invalid(format!("{}: {msg}", origin.display()));
    let mut csv = csv::ReaderBuilder::new()
        .delimiter(spec.delimiter)
        .has_headers(spec.has_header)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let header: Option<Vec<String>> = if spec.has_header {
        let h = csv.headers().map_err(|e| invalid(e.to_string()))?;
        Some(h.iter().map(str::to_owned).collect())
    } else {
        None
    };

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut label_index: Option<usize> = None;
    let mut width = header.as_ref().map(Vec::len);

    for record in csv.records() {
        let record = record.map_err(|e| invalid(csv_message(&e)))?;
        let line = record.position().map_or(0, |p| p.line());
        let columns = *width.get_or_insert(record.len());
        let label_at = match label_index {
            Some(k) => k,
            None => {
                let k = resolve_label(&spec.label, header.as_deref(), columns).map_err(invalid)?;
                label_index = Some(k);
                k
            }
        };
        let column_name = |k: usize| match &header {
            Some(h) => format!("column '{}'", h[k]),
            None => format!("column {}", k + 1),
        };

        let mut row = Vec::with_capacity(columns - 1);
        for (k, cell) in record.iter().enumerate() {
            if k == label_at {
                if cell.is_empty() {
                    return Err(invalid(format!(
                        "row {line}, {}: empty label",
                        column_name(k)
                    )));
                }
                labels.push(cell.to_owned());
                continue;
            }
            if cell.is_empty() {
                return Err(invalid(format!(
                    "row {line}, {}: empty cell",
                    column_name(k)
                )));
            }
            let value: f64 = cell.parse().map_err(|_| {
                invalid(format!(
                    "row {line}, {}: '{cell}' is not a number",
                    column_name(k)
                ))
            })?;
            if !value.is_finite() {
                return Err(invalid(format!(
                    "row {line}, {}: non-finite value '{cell}'",
                    column_name(k)
                )));
            }
            row.push(value);
        }
        rows.push(row);
    }

    if rows.is_empty() {
        return Err(invalid("no data rows".into()));
    }
    if rows[0].is_empty() {
        return Err(invalid("no feature columns besides the label".into()));
    }

    let numeric: Option<Vec<f64>> = labels
        .iter()
        .map(|l| l.parse::<f64>().ok().filter(|v| v.is_finite()))
        .collect();
    let built = match numeric {
        Some(values) => build_dataset(&rows, &values),
        None => build_dataset(&rows, &labels),
    };
    built.map_err(|e| invalid(e.to_string()))
}

fn resolve_label(
    label: &LabelColumn,
    header: Option<&[String]>,
    columns: usize,
) -> Result<usize, String> {
    if columns < 2 {
        return Err(format!(
            "need a label column and at least one feature, found {columns} column(s)"
        ));
    }
    match label {
        LabelColumn::Last => Ok(columns - 1),
        LabelColumn::Name(name) => {
            let Some(header) = header else {
                return Err(format!(
                    "label column '{name}' given but the file has no header"
                ));
            };
            header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| format!("label column '{name}' not found in header"))
        }
    }
}

fn csv_message(e: &csv::Error) -> String {
    match e.kind() {
        csv::ErrorKind::UnequalLengths {
            pos,
            expected_len,
            len,
        } => {
            let line = pos.as_ref().map_or(0, |p| p.line());
            format!("row {line}: {len} fields, expected {expected_len}")
        }
        _ => e.to_string(),
    }
}
