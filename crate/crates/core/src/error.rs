use thiserror::Error;

use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{token}` (expected integer, p/q or finite decimal)")]
    Malformed { token: String },
    #[error("zero denominator in `{token}`")]
    ZeroDenominator { token: String },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrequencyError {
    #[error("frequency list is empty")]
    Empty,
    #[error("frequency at index {index} is {value}, must be strictly positive")]
    NonPositive { index: usize, value: ExactRational },
    #[error("scale factor {0} must be strictly positive")]
    NonPositiveScale(ExactRational),
    #[error("sign vector has length {signs}, frequency list has {freqs}")]
    LengthMismatch { signs: usize, freqs: usize },
    #[error("sign vector entry {index} is {value}, expected -1 or +1")]
    InvalidSign { index: usize, value: i8 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("{n} frequencies exceed the enumeration capacity of {max}")]
    Capacity { n: usize, max: usize },
    #[error(transparent)]
    Frequency(#[from] FrequencyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{form} does not apply: {reason}")]
    NotApplicable { form: &'static str, reason: String },
    #[error("{form} gave {closed_form} but the residue sum gives {engine}")]
    Mismatch {
        form: &'static str,
        closed_form: Box<ExactRational>,
        engine: Box<ExactRational>,
    },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("a single sinc factor is only conditionally integrable; need at least 2 frequencies")]
    SingleFactor,
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("target error {0:e} is not reachable in double precision (minimum 1e-12)")]
    UnreachableTolerance(f64),
    #[error("adaptive refinement exhausted its panel budget before reaching {target:e}")]
    RefinementExhausted { target: f64 },
    #[error(transparent)]
    Engine(#[from] EngineError),
}
