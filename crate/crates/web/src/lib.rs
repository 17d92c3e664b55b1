//! wasm-bindgen bindings for the static page in `www/`.
//!
//! Every export takes and returns plain strings or numbers so the page needs
//! no glue beyond what `wasm-bindgen --target web` generates. Failures come
//! back as `{"error": "..."}` rather than thrown exceptions.

use borwein_core::{
    classical_freqs, classify_dominance, evaluate, integral_coefficient, integrand,
    pi_multiple_decimal, EnumerationStrategy, EvaluateOptions, FrequencyList,
};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Keeps one evaluation, including the engine re-check, interactive.
const MAX_BROWSER_FREQS: usize = 24;
const MAX_SAMPLES: usize = 20_000;

#[derive(Serialize)]
struct Check {
    label: String,
    lhs: String,
    relation: &'static str,
    rhs: String,
}

#[derive(Serialize)]
struct EvaluateRecord {
    freqs: Vec<String>,
    n: usize,
    coefficient: String,
    decimal: String,
    classification: String,
    provenance: String,
    verified: bool,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    coefficient: String,
    decimal: String,
    classification: String,
}

fn error_json(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

/// Splits on whitespace and commas.
fn parse_freqs(text: &str) -> Result<FrequencyList, String> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let freqs = FrequencyList::parse(&tokens).map_err(|e| e.to_string())?;
    if freqs.len() > MAX_BROWSER_FREQS {
        return Err(format!(
            "{} frequencies; the demo stops at {MAX_BROWSER_FREQS}",
            freqs.len()
        ));
    }
    Ok(freqs)
}

pub fn evaluate_record(text: &str, digits: usize) -> Result<String, String> {
    let freqs = parse_freqs(text)?;
    let options = EvaluateOptions {
        strategy: EnumerationStrategy::MeetInMiddle,
        verify: true,
    };
    let eval = evaluate(&freqs, options).map_err(|e| e.to_string())?;
    let coefficient = eval.value.coefficient();
    let record = EvaluateRecord {
        freqs: freqs.entries().iter().map(ToString::to_string).collect(),
        n: freqs.len(),
        coefficient: coefficient.to_string(),
        decimal: pi_multiple_decimal(coefficient, digits),
        classification: eval.class.kind.to_string(),
        provenance: eval.provenance.to_string(),
        verified: eval.verified,
        checks: eval
            .class
            .checks
            .iter()
            .map(|c| Check {
                label: c.label.clone(),
                lhs: c.lhs.to_string(),
                relation: c.relation(),
                rhs: c.rhs.to_string(),
            })
            .collect(),
    };
    Ok(serde_json::to_string(&record).expect("serializable"))
}

/// `count` evenly spaced values of the integrand on `[0, x_max]`.
pub fn integrand_values(text: &str, x_max: f64, count: usize) -> Result<Vec<f64>, String> {
    let freqs = parse_freqs(text)?;
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(format!("x_max must be positive, got {x_max}"));
    }
    let count = count.clamp(2, MAX_SAMPLES);
    let step = x_max / (count - 1) as f64;
    Ok((0..count)
        .map(|i| integrand(&freqs, i as f64 * step))
        .collect())
}

pub fn classic_rows(max_n: usize, digits: usize) -> Result<String, String> {
    if !(1..=12).contains(&max_n) {
        return Err(format!("max_n must be in 1..=12, got {max_n}"));
    }
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let freqs = classical_freqs(n).map_err(|e| e.to_string())?;
        let value = integral_coefficient(&freqs, EnumerationStrategy::MeetInMiddle)
            .map_err(|e| e.to_string())?;
        rows.push(TableRow {
            n,
            coefficient: value.coefficient().to_string(),
            decimal: pi_multiple_decimal(value.coefficient(), digits),
            classification: classify_dominance(&freqs).kind.to_string(),
        });
    }
    Ok(serde_json::to_string(&rows).expect("serializable"))
}

#[wasm_bindgen(js_name = evaluateFrequencies)]
pub fn evaluate_frequencies(text: &str, digits: usize) -> String {
    evaluate_record(text, digits).unwrap_or_else(error_json)
}

/// Empty on bad input; the page reports the error from `evaluateFrequencies`.
#[wasm_bindgen(js_name = integrandSamples)]
pub fn integrand_samples(text: &str, x_max: f64, count: usize) -> Vec<f64> {
    integrand_values(text, x_max, count).unwrap_or_default()
}

#[wasm_bindgen(js_name = classicTable)]
pub fn classic_table(max_n: usize, digits: usize) -> String {
    classic_rows(max_n, digits).unwrap_or_else(error_json)
}
