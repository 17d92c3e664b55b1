//! Exact evaluation of Borwein-type integrals `∫ Π sinc(a_j x) dx` for
//! positive rational frequencies.
//!
//! Every such integral is a rational multiple of π. [`residue`] computes
//! that multiple exactly from the residue sum, [`closed_forms`] provides
//! the dominant-frequency formulas and a dispatcher, and [`quadrature`]
//! checks results numerically with a rigorous tail bound.
//!
//! ```
//! use borwein_core::{classical_freqs, integral_coefficient, EnumerationStrategy};
//!
//! let seven = classical_freqs(7).unwrap();
//! let value = integral_coefficient(&seven, EnumerationStrategy::BruteForce).unwrap();
//! assert_eq!(value.coefficient().to_string(), "1");
//! ```

pub mod closed_forms;
pub mod decimal;
pub mod error;
pub mod freqs;
pub mod quadrature;
pub mod rational;
pub mod residue;

pub use closed_forms::{
    classical_freqs, classify_dominance, evaluate, factorial_example_truncation,
    first_dominant_correction, first_dominant_value, lambda_star, n3_value,
    three_dominant_equal_first_two, three_dominant_value, BoundaryFlags, CorrectionTerm,
    DominanceClass, DominanceKind, EvaluateOptions, Evaluation, InequalityCheck, Provenance,
};
pub use decimal::pi_multiple_decimal;
pub use error::{ClosedFormError, EngineError, FrequencyError, ParseError, QuadratureError};
pub use freqs::{FrequencyList, PiMultiple, SignVector};
pub use quadrature::{
    crosscheck, crosscheck_against, integrand, quadrature_estimate, tail_bound, CrosscheckReport,
    QuadratureResult,
};
pub use rational::{double_factorial, factorial, rational_parse, ExactRational};
pub use residue::{
    integral_coefficient, lambda_of, signed_moment_sum, signed_moment_sum_mitm,
    EnumerationStrategy, SignedMomentSum,
};
