use std::time::Duration;

use rook_harmonics::linalg::Rational;
use rook_harmonics::symfunc::GradedDoublySchurSeries;
use serde::Serialize;
use serde_json::{json, Value};

pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// Envelope written to stdout by every command.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub format_version: u32,
    pub engine_version: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub passed: bool,
    pub results: Value,
    pub timing: Timing,
}

impl ReportDocument {
    pub fn new(command: &'static str, inputs: Value, passed: bool, results: Value, elapsed: Duration) -> Self {
        ReportDocument {
            format_version: REPORT_FORMAT_VERSION,
            engine_version: env!("CARGO_PKG_VERSION"),
            command,
            inputs,
            passed,
            results,
            timing: Timing { elapsed_ms: elapsed.as_millis() },
        }
    }
}

/// Integers as JSON numbers, anything else as `"p/q"`.
pub fn rational_value(c: &Rational) -> Value {
    if c.is_integer() {
        if let Ok(v) = c.to_integer().to_string().parse::<i64>() {
            return json!(v);
        }
    }
    json!(c.to_string())
}

/// `(degree, λ, μ, coefficient)` tuples, by degree then partition order.
pub fn series_terms(series: &GradedDoublySchurSeries) -> Vec<Value> {
    series
        .layers()
        .iter()
        .enumerate()
        .flat_map(|(d, layer)| {
            layer.terms().map(move |((lambda, mu), c)| {
                json!({ "degree": d, "lambda": lambda, "mu": mu, "coefficient": rational_value(c) })
            })
        })
        .collect()
}
