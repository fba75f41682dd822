//! JSON form of the complexity report.

use hardness_core::calculator::weighted_mean;
use hardness_core::ComplexityReport;
use serde_json::{Map, Number, Value};

use crate::CliError;

/// Rounds to 6 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().expect("formatted float parses")
}

fn number(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

// Integer-looking class names stay numbers, as they were in the input.
fn class_value(name: &str) -> Value {
    if let Ok(i) = name.parse::<i64>() {
        return Value::from(i);
    }
    match name.parse::<f64>() {
        Ok(x) if x.is_finite() => number(x),
        _ => Value::from(name),
    }
}

/// Builds the report object. Complexities are rounded to 6 significant
/// digits and `score` is the aggregate of those rounded values, so a reader
/// can recompute it from the file.
pub fn to_json(report: &ComplexityReport, weights: Option<&[f64]>) -> Result<Value, CliError> {
    let rounded: Vec<f64> = report
        .complexities
        .iter()
        .map(|&(_, v)| round_sig(v))
        .collect();
    let score = weighted_mean(&rounded, weights).map_err(|e| CliError::Invalid(e.to_string()))?;

    let mut complexities = Map::new();
    for ((id, _), v) in report.complexities.iter().zip(&rounded) {
        complexities.insert(id.name().to_owned(), number(*v));
    }

    let mut out = Map::new();
    out.insert("n_samples".into(), Value::from(report.n_samples));
    out.insert("n_features".into(), Value::from(report.n_features));
    out.insert("n_classes".into(), Value::from(report.n_classes));
    out.insert(
        "classes".into(),
        Value::Array(report.classes.iter().map(|c| class_value(c)).collect()),
    );
    out.insert(
        "prior_probability".into(),
        Value::Array(
            report
                .prior_probability
                .iter()
                .map(|&p| number(round_sig(p)))
                .collect(),
        ),
    );
    out.insert("score".into(), number(score));
    out.insert("complexities".into(), Value::Object(complexities));
    Ok(Value::Object(out))
}

pub fn to_json_string(
    report: &ComplexityReport,
    weights: Option<&[f64]>,
) -> Result<String, CliError> {
    let value = to_json(report, weights)?;
    let mut text = serde_json::to_string_pretty(&value).expect("json values serialize");
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hardness_core::{fixture, ComplexityCalculator};

    #[test]
    fn rounding() {
        assert_eq!(round_sig(0.22718432436798314), 0.227184);
        assert_eq!(round_sig(5.6830952489656924e-11), 5.68310e-11);
        assert_eq!(round_sig(1.0 / 569.0), 0.00175747);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(12.0), 12.0);
    }

    #[test]
    fn key_order_and_types() {
        let mut calc = ComplexityCalculator::default();
        calc.fit(&fixture("SEP4").unwrap()).unwrap();
        let value = to_json(&calc.report().unwrap(), None).unwrap();
        let keys: Vec<&str> = value
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        assert_eq!(
            keys,
            [
                "n_samples",
                "n_features",
                "n_classes",
                "classes",
                "prior_probability",
                "score",
                "complexities"
            ]
        );
        assert_eq!(value["classes"], serde_json::json!([0, 1]));
        assert_eq!(value["complexities"].as_object().unwrap().len(), 22);
    }

    #[test]
    fn class_names_keep_their_type() {
        assert_eq!(class_value("0"), Value::from(0));
        assert_eq!(class_value("2.5"), Value::from(2.5));
        assert_eq!(class_value("B"), Value::from("B"));
    }
}
