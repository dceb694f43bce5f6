//! Tabular output as CSV or JSON.
//!
//! Reals are printed with 17 significant digits in the style of C's `%.17g`;
//! integers and rationals are exact decimal strings.

use std::fmt::Write as _;

use serde_json::{json, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    /// Exact integer or rational, already rendered in decimal.
    Exact(String),
    Bool(bool),
    Text(String),
    Empty,
}

impl Value {
    pub fn exact(v: impl ToString) -> Self {
        Value::Exact(v.to_string())
    }

    pub fn text(v: impl Into<String>) -> Self {
        Value::Text(v.into())
    }

    fn csv(&self) -> String {
        match self {
            Value::Real(x) => format_real(*x),
            Value::Exact(s) | Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Empty => String::new(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Real(x) if x.is_finite() => {
                // round-trip through the %.17g text so both formats agree
                format_real(*x).parse::<f64>().map(Json::from).unwrap_or(Json::Null)
            }
            Value::Real(_) | Value::Empty => Json::Null,
            Value::Exact(s) | Value::Text(s) => Json::String(s.clone()),
            Value::Bool(b) => Json::Bool(*b),
        }
    }
}

/// `%.17g`: fixed notation for exponents in [-5, 17), scientific otherwise,
/// trailing zeros removed.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("exponent");
    if (-5..17).contains(&exponent) {
        let decimals = (16 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exponent.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub schema: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl OutputRecord {
    pub fn new(schema: &[&str]) -> Self {
        OutputRecord {
            schema: schema.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.schema.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.schema.join(",");
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Value::csv).collect();
                    let _ = writeln!(out, "{}", cells.join(","));
                }
                out
            }
            Format::Json => {
                let rows: Vec<Json> = self
                    .rows
                    .iter()
                    .map(|r| Json::Array(r.iter().map(Value::json).collect()))
                    .collect();
                let mut s = serde_json::to_string_pretty(&json!({
                    "schema": self.schema,
                    "rows": rows,
                }))
                .expect("JSON encoding");
                s.push('\n');
                s
            }
        }
    }
}
