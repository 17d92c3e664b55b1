//! Closed forms for dominant-frequency lists and the dispatcher that picks
//! one, falling back to the residue engine.
//!
//! All formulas index the frequencies in non-increasing order
//! `a_1 >= a_2 >= ... >= a_n`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{ClosedFormError, FrequencyError};
use crate::freqs::{FrequencyList, PiMultiple};
use crate::rational::{factorial, ExactRational};
use crate::residue::{integral_coefficient, EnumerationStrategy};

/// Lists up to this size are re-checked against the engine by [`evaluate`].
pub const VERIFY_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominanceKind {
    /// `a_1 > a_2 + ... + a_n`.
    FirstDominant,
    /// `a_1 > a_2 + ... + a_{n-1}` but `a_1 < a_2 + ... + a_n`.
    FirstDominantBoundary,
    /// `a_2 + a_3 - a_1 > a_4 + ... + a_n`.
    ThreeDominant,
    /// No closed form applies, including every case of exact equality.
    Unclassified,
}

impl DominanceKind {
    pub fn name(self) -> &'static str {
        match self {
            DominanceKind::FirstDominant => "FirstDominant",
            DominanceKind::FirstDominantBoundary => "FirstDominantBoundary",
            DominanceKind::ThreeDominant => "ThreeDominant",
            DominanceKind::Unclassified => "None",
        }
    }
}

impl fmt::Display for DominanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which defining comparisons came out as exact equalities.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundaryFlags {
    /// `a_1 = a_2 + ... + a_n`.
    pub first_total: bool,
    /// `a_1 = a_2 + ... + a_k` for some `k < n`.
    pub break_point: bool,
    /// `a_2 + a_3 - a_1 = a_4 + ... + a_n`.
    pub three_condition: bool,
}

impl BoundaryFlags {
    pub fn any(&self) -> bool {
        self.first_total || self.break_point || self.three_condition
    }
}

/// One comparison `lhs ? rhs` the classifier evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub label: String,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub ordering: Ordering,
}

impl InequalityCheck {
    fn new(label: impl Into<String>, lhs: ExactRational, rhs: ExactRational) -> Self {
        let ordering = lhs.cmp(&rhs);
        Self {
            label: label.into(),
            lhs,
            rhs,
            ordering,
        }
    }

    pub fn relation(&self) -> &'static str {
        match self.ordering {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceClass {
    pub kind: DominanceKind,
    /// `N` for [`DominanceKind::FirstDominantBoundary`] (always `n - 1`).
    pub break_index: Option<usize>,
    pub boundary: BoundaryFlags,
    pub checks: Vec<InequalityCheck>,
}

/// `a_j = 1/(2j - 1)` for `j = 1..=n`.
pub fn classical_freqs(n: usize) -> Result<FrequencyList, FrequencyError> {
    FrequencyList::new(
        (1..=n as i64)
            .map(|j| ExactRational::new(1, 2 * j - 1))
            .collect(),
    )
}

pub fn classify_dominance(freqs: &FrequencyList) -> DominanceClass {
    let a = freqs.sorted();
    let n = a.len();
    let mut checks = Vec::new();
    let mut boundary = BoundaryFlags::default();
    let class = |kind, break_index, boundary, checks| DominanceClass {
        kind,
        break_index,
        boundary,
        checks,
    };

    let tail: ExactRational = a[1..].iter().sum();
    let first = InequalityCheck::new("a1 > a2 + ... + an", a[0].clone(), tail.clone());
    let first_ordering = first.ordering;
    checks.push(first);
    match first_ordering {
        Ordering::Greater => {
            return class(DominanceKind::FirstDominant, None, boundary, checks);
        }
        Ordering::Equal => boundary.first_total = true,
        Ordering::Less => {
            // Largest N with a_2 + ... + a_N < a_1; the prefix through
            // a_{N+1} is the first one that reaches a_1.
            let mut prefix = ExactRational::zero();
            let mut last_below = 1;
            for (k, value) in a.iter().enumerate().skip(1) {
                let next = &prefix + value;
                if next >= a[0] {
                    if next == a[0] {
                        boundary.break_point = true;
                    }
                    checks.push(InequalityCheck::new(
                        format!("a1 > {}", prefix_label(last_below)),
                        a[0].clone(),
                        prefix.clone(),
                    ));
                    checks.push(InequalityCheck::new(
                        format!("a1 < {}", prefix_label(k + 1)),
                        a[0].clone(),
                        next.clone(),
                    ));
                    let is_boundary = k + 1 == n && last_below >= 2 && next > a[0];
                    if is_boundary {
                        return class(
                            DominanceKind::FirstDominantBoundary,
                            Some(last_below),
                            boundary,
                            checks,
                        );
                    }
                    break;
                }
                prefix = next;
                last_below = k + 1;
            }
        }
    }

    if n >= 3 {
        let lhs = &a[1] + &a[2] - &a[0];
        let rhs: ExactRational = a[3..].iter().sum();
        let check = InequalityCheck::new("a2 + a3 - a1 > a4 + ... + an", lhs, rhs);
        let ordering = check.ordering;
        checks.push(check);
        match ordering {
            Ordering::Greater => {
                return class(DominanceKind::ThreeDominant, None, boundary, checks);
            }
            Ordering::Equal => boundary.three_condition = true,
            Ordering::Less => {}
        }
    }

    class(DominanceKind::Unclassified, None, boundary, checks)
}

/// `a2 + ... + ak` written out for short prefixes.
fn prefix_label(k: usize) -> String {
    match k {
        0 | 1 => "0".to_string(),
        2 => "a2".to_string(),
        3 => "a2 + a3".to_string(),
        _ => format!("a2 + ... + a{k}"),
    }
}

fn not_applicable(
    form: &'static str,
    class: &DominanceClass,
    wanted: DominanceKind,
) -> ClosedFormError {
    let failed = class
        .checks
        .iter()
        .map(|c| format!("{} is {} {} {}", c.label, c.lhs, c.relation(), c.rhs))
        .collect::<Vec<_>>()
        .join("; ");
    ClosedFormError::NotApplicable {
        form,
        reason: format!("needs {wanted}, list is {} ({failed})", class.kind),
    }
}

fn require(
    form: &'static str,
    freqs: &FrequencyList,
    wanted: DominanceKind,
) -> Result<DominanceClass, ClosedFormError> {
    let class = classify_dominance(freqs);
    if class.kind == wanted {
        Ok(class)
    } else {
        Err(not_applicable(form, &class, wanted))
    }
}

/// Checks `a_2 + a_3 - a_1 > a_4 + ... + a_n` directly. Lists that also meet
/// the single-break condition (e.g. `(3, 2, 2)`) classify as
/// `FirstDominantBoundary`, yet the three-dominant forms hold for them too.
fn require_three_condition(
    form: &'static str,
    freqs: &FrequencyList,
) -> Result<(), ClosedFormError> {
    let a = freqs.sorted();
    if a.len() < 3 {
        return Err(ClosedFormError::NotApplicable {
            form,
            reason: format!("needs at least 3 frequencies, got {}", a.len()),
        });
    }
    let lhs = &a[1] + &a[2] - &a[0];
    let rhs: ExactRational = a[3..].iter().sum();
    if lhs > rhs {
        Ok(())
    } else {
        Err(ClosedFormError::NotApplicable {
            form,
            reason: format!("needs a2 + a3 - a1 > a4 + ... + an, got {lhs} vs {rhs}"),
        })
    }
}

/// `I = π / a_1` when the first frequency dominates the rest.
pub fn first_dominant_value(freqs: &FrequencyList) -> Result<PiMultiple, ClosedFormError> {
    require("first-dominant value", freqs, DominanceKind::FirstDominant)?;
    Ok(PiMultiple::new(freqs.leading().recip()))
}

/// `λ* = 1 - (a_2 + ... + a_{N+1}) / a_1` at the first break point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionTerm {
    pub lambda_star: ExactRational,
    pub break_index: usize,
}

/// Applies when `a_1 >= a_2 + ... + a_{n-1}` and `a_1 < a_2 + ... + a_n`
/// with `n >= 3`. This admits `FirstDominantBoundary` lists plus the
/// equality case of the first inequality (e.g. `(1, 1, 1/10)`): flipping
/// any single sign of `λ*` still lands above zero, so the one-term
/// correction stays exact there.
pub fn lambda_star(freqs: &FrequencyList) -> Result<CorrectionTerm, ClosedFormError> {
    const FORM: &str = "lambda*";
    let a = freqs.sorted();
    let n = a.len();
    if n < 3 {
        return Err(ClosedFormError::NotApplicable {
            form: FORM,
            reason: format!("needs at least 3 frequencies, got {n}"),
        });
    }
    let head: ExactRational = a[1..n - 1].iter().sum();
    let tail = &head + &a[n - 1];
    if a[0] < head || a[0] >= tail {
        return Err(ClosedFormError::NotApplicable {
            form: FORM,
            reason: format!(
                "needs a1 >= a2 + ... + a{} and a1 < a2 + ... + a{n}; got a1 = {}, sums {head} and {tail}",
                n - 1,
                a[0]
            ),
        });
    }
    Ok(CorrectionTerm {
        lambda_star: ExactRational::one() - tail / &a[0],
        break_index: n - 1,
    })
}

/// `I_{N+1} = π (1/a_1 - |a_1 λ*|^N / (2^{N-1} N! Π a_j))`.
///
/// Exactly one sign vector with `σ_1 = +1` has a negative signed sum at the
/// break point, so swapping its residue for its mirror's is the whole
/// correction.
pub fn first_dominant_correction(freqs: &FrequencyList) -> Result<PiMultiple, ClosedFormError> {
    let term = lambda_star(freqs)?;
    let big_n = term.break_index;
    let a1 = freqs.leading();
    let shifted = (a1 * &term.lambda_star).abs().pow(big_n as u32);
    let denom = ExactRational::from_integer(factorial(big_n as u64))
        * ExactRational::from_integer(1i64 << (big_n - 1))
        * freqs.product();
    Ok(PiMultiple::new(a1.recip() - shifted / denom))
}

/// `I = π (-Σ a_k² - 2(a_1² + a_2² + a_3²) + 6(a_1a_2 + a_2a_3 + a_1a_3)) / (12 a_1 a_2 a_3)`.
pub fn three_dominant_value(freqs: &FrequencyList) -> Result<PiMultiple, ClosedFormError> {
    require_three_condition("three-dominant value", freqs)?;
    let a = freqs.sorted();
    let (a1, a2, a3) = (&a[0], &a[1], &a[2]);
    let squares: ExactRational = a.iter().map(|x| x * x).sum();
    let head_squares = a1 * a1 + a2 * a2 + a3 * a3;
    let pairs = a1 * a2 + a2 * a3 + a1 * a3;
    let numer = -squares - ExactRational::from(2) * head_squares + ExactRational::from(6) * pairs;
    let denom = ExactRational::from(12) * a1 * a2 * a3;
    Ok(PiMultiple::new(numer / denom))
}

/// Three-dominant value specialised to `a_1 = a_2`:
/// `1/a_1 - a_3/(4a_1²) - Σ_{k>=4} a_k² / (12 a_3 a_1²)`.
pub fn three_dominant_equal_first_two(
    freqs: &FrequencyList,
) -> Result<PiMultiple, ClosedFormError> {
    require_three_condition("three-dominant (a1 = a2) value", freqs)?;
    let a = freqs.sorted();
    if a[0] != a[1] {
        return Err(ClosedFormError::NotApplicable {
            form: "three-dominant (a1 = a2) value",
            reason: format!("a1 = {} differs from a2 = {}", a[0], a[1]),
        });
    }
    let (a1, a3) = (&a[0], &a[2]);
    let a1_sq = a1 * a1;
    let rest: ExactRational = a[3..].iter().map(|x| x * x).sum();
    let value = a1.recip()
        - a3 / (ExactRational::from(4) * &a1_sq)
        - rest / (ExactRational::from(12) * a3 * &a1_sq);
    Ok(PiMultiple::new(value))
}

/// The three-frequency integral:
/// `(2(a_1a_2 + a_2a_3 + a_3a_1) - (a_1² + a_2² + a_3²)) / (4 a_1 a_2 a_3)`.
pub fn n3_value(freqs: &FrequencyList) -> Result<PiMultiple, ClosedFormError> {
    if freqs.len() != 3 {
        return Err(ClosedFormError::NotApplicable {
            form: "three-frequency value",
            reason: format!("needs exactly 3 frequencies, got {}", freqs.len()),
        });
    }
    require_three_condition("three-frequency value", freqs)?;
    let a = freqs.sorted();
    let (a1, a2, a3) = (&a[0], &a[1], &a[2]);
    let pairs = a1 * a2 + a2 * a3 + a3 * a1;
    let squares = a1 * a1 + a2 * a2 + a3 * a3;
    let value =
        (ExactRational::from(2) * pairs - squares) / (ExactRational::from(4) * a1 * a2 * a3);
    Ok(PiMultiple::new(value))
}

/// Where an [`Evaluation`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    FirstDominant,
    FirstDominantCorrection,
    ThreeDominant,
    Engine(EnumerationStrategy),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::FirstDominant => f.write_str("closed-form:first-dominant"),
            Provenance::FirstDominantCorrection => {
                f.write_str("closed-form:first-dominant-correction")
            }
            Provenance::ThreeDominant => f.write_str("closed-form:three-dominant"),
            Provenance::Engine(s) => write!(f, "engine:{s}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvaluateOptions {
    /// Strategy for the engine fallback.
    pub strategy: EnumerationStrategy,
    /// Cross-check closed forms against the engine for `n <= VERIFY_LIMIT`.
    pub verify: bool,
}

impl Default for EvaluateOptions {
    fn default() -> Self {
        Self {
            strategy: EnumerationStrategy::BruteForce,
            verify: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: PiMultiple,
    pub provenance: Provenance,
    pub class: DominanceClass,
    /// A closed form was confirmed against the engine.
    pub verified: bool,
}

/// Uses the applicable closed form, otherwise the residue engine.
pub fn evaluate(
    freqs: &FrequencyList,
    options: EvaluateOptions,
) -> Result<Evaluation, ClosedFormError> {
    let class = classify_dominance(freqs);
    let (closed, provenance, form) = match class.kind {
        DominanceKind::FirstDominant => (
            first_dominant_value(freqs)?,
            Provenance::FirstDominant,
            "first-dominant value",
        ),
        DominanceKind::FirstDominantBoundary => (
            first_dominant_correction(freqs)?,
            Provenance::FirstDominantCorrection,
            "first-dominant correction",
        ),
        DominanceKind::ThreeDominant => (
            three_dominant_value(freqs)?,
            Provenance::ThreeDominant,
            "three-dominant value",
        ),
        DominanceKind::Unclassified => {
            let value = integral_coefficient(freqs, options.strategy)?;
            return Ok(Evaluation {
                value,
                provenance: Provenance::Engine(options.strategy),
                class,
                verified: false,
            });
        }
    };

    let mut verified = false;
    if options.verify && freqs.len() <= VERIFY_LIMIT {
        let engine = integral_coefficient(freqs, EnumerationStrategy::MeetInMiddle)?;
        if engine != closed {
            return Err(ClosedFormError::Mismatch {
                form,
                closed_form: Box::new(closed.into_coefficient()),
                engine: Box::new(engine.into_coefficient()),
            });
        }
        verified = true;
    }
    Ok(Evaluation {
        value: closed,
        provenance,
        class,
        verified,
    })
}

/// The truncated factorial list `a_j = 1/j!`, `j = 0..n_terms`, with its
/// value `5/4 - (1/6) Σ 1/(j!)²`.
pub fn factorial_example_truncation(
    n_terms: usize,
) -> Result<(FrequencyList, PiMultiple), ClosedFormError> {
    const FORM: &str = "factorial truncation";
    if n_terms < 3 {
        return Err(ClosedFormError::NotApplicable {
            form: FORM,
            reason: format!("needs at least 3 terms, got {n_terms}"),
        });
    }
    let entries: Vec<ExactRational> = (0..n_terms as u64)
        .map(|j| ExactRational::from_integer(factorial(j)).recip())
        .collect();
    let squares: ExactRational = entries.iter().map(|a| a * a).sum();
    let freqs = FrequencyList::new(entries).expect("factorial reciprocals are positive");
    let class = classify_dominance(&freqs);
    if class.kind != DominanceKind::ThreeDominant {
        return Err(not_applicable(FORM, &class, DominanceKind::ThreeDominant));
    }
    let value = ExactRational::new(5, 4) - squares / ExactRational::from(6);
    Ok((freqs, PiMultiple::new(value)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    fn list(v: &[(i64, i64)]) -> FrequencyList {
        FrequencyList::new(v.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
    }

    fn coef(p: Result<PiMultiple, ClosedFormError>) -> ExactRational {
        p.unwrap().into_coefficient()
    }

    fn engine(f: &FrequencyList) -> ExactRational {
        integral_coefficient(f, EnumerationStrategy::BruteForce)
            .unwrap()
            .into_coefficient()
    }

    #[test]
    fn classical_lists() {
        assert_eq!(classical_freqs(1).unwrap().entries(), &[q(1, 1)]);
        assert_eq!(
            classical_freqs(4).unwrap().entries(),
            &[q(1, 1), q(1, 3), q(1, 5), q(1, 7)]
        );
        assert_eq!(classical_freqs(8).unwrap().entries()[7], q(1, 15));
        assert!(classical_freqs(0).is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_dominance(&classical_freqs(7).unwrap()).kind,
            DominanceKind::FirstDominant
        );
        let eight = classify_dominance(&classical_freqs(8).unwrap());
        assert_eq!(eight.kind, DominanceKind::FirstDominantBoundary);
        assert_eq!(eight.break_index, Some(7));
        assert!(!eight.boundary.any());

        let three = classify_dominance(&list(&[(1, 1), (1, 1), (1, 1), (1, 2)]));
        assert_eq!(three.kind, DominanceKind::ThreeDominant);

        let tie = classify_dominance(&list(&[(1, 1), (1, 2), (1, 2)]));
        assert_eq!(tie.kind, DominanceKind::Unclassified);
        assert!(tie.boundary.first_total);

        assert_eq!(
            classify_dominance(&list(&[(4, 1)])).kind,
            DominanceKind::FirstDominant
        );
        assert_eq!(
            classify_dominance(&list(&[(1, 1), (1, 1)])).kind,
            DominanceKind::Unclassified
        );
    }

    #[test]
    fn break_before_the_last_term_is_not_a_boundary() {
        // 1 < 3/4 + 3/4 already at N + 1 = 3 < n = 4; the tail is small
        // enough that the three-dominant condition takes over.
        let f = list(&[(1, 1), (3, 4), (3, 4), (1, 10)]);
        assert_eq!(classify_dominance(&f).kind, DominanceKind::ThreeDominant);
        let g = list(&[(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]);
        let class = classify_dominance(&g);
        assert_eq!(class.kind, DominanceKind::Unclassified);
    }

    #[test]
    fn first_dominant_examples() {
        assert_eq!(
            coef(first_dominant_value(&list(&[(2, 1), (1, 1), (1, 2)]))),
            q(1, 2)
        );
        assert_eq!(
            coef(first_dominant_value(&classical_freqs(7).unwrap())),
            q(1, 1)
        );
        assert_eq!(coef(first_dominant_value(&list(&[(5, 1)]))), q(1, 5));
        let err = first_dominant_value(&list(&[(1, 1), (1, 1), (1, 1)])).unwrap_err();
        assert!(err.to_string().contains("a1 > a2 + ... + an"), "{err}");
    }

    #[test]
    fn lambda_star_examples() {
        let t = lambda_star(&classical_freqs(8).unwrap()).unwrap();
        assert_eq!(t.lambda_star, q(-982, 45045));
        assert_eq!(t.break_index, 7);
        let t = lambda_star(&list(&[(1, 1), (3, 4), (3, 4)])).unwrap();
        assert_eq!((t.lambda_star, t.break_index), (q(-1, 2), 2));
        let t = lambda_star(&list(&[(1, 1), (1, 1), (1, 10)])).unwrap();
        assert_eq!((t.lambda_star, t.break_index), (q(-1, 10), 2));
        assert!(lambda_star(&classical_freqs(7).unwrap()).is_err());
        assert!(lambda_star(&list(&[(1, 1), (1, 2)])).is_err());
        // Break before the last entry.
        assert!(lambda_star(&list(&[(1, 1), (3, 4), (3, 4), (1, 10)])).is_err());
    }

    #[test]
    fn correction_examples() {
        let i8 = ExactRational::one()
            - "6879714958723010531/467807924720320453655260875000"
                .parse::<ExactRational>()
                .unwrap();
        assert_eq!(
            coef(first_dominant_correction(&classical_freqs(8).unwrap())),
            i8
        );
        let f = list(&[(1, 1), (3, 4), (3, 4)]);
        assert_eq!(coef(first_dominant_correction(&f)), q(8, 9));
        assert_eq!(engine(&f), q(8, 9));
    }

    #[test]
    fn equal_leading_pair_goes_to_three_dominant() {
        // a1 = a2: the classifier reports ThreeDominant, and the one-term
        // correction agrees with it as well.
        let f = list(&[(1, 1), (1, 1), (1, 10)]);
        assert_eq!(classify_dominance(&f).kind, DominanceKind::ThreeDominant);
        assert_eq!(coef(three_dominant_value(&f)), q(39, 40));
        assert_eq!(coef(first_dominant_correction(&f)), q(39, 40));
        assert_eq!(engine(&f), q(39, 40));
    }

    #[test]
    fn three_dominant_examples() {
        let c = |v: &[(i64, i64)]| coef(three_dominant_value(&list(v)));
        assert_eq!(c(&[(1, 1), (1, 1), (1, 1)]), q(3, 4));
        assert_eq!(c(&[(1, 1), (1, 1), (1, 1), (1, 2)]), q(35, 48));
        assert_eq!(c(&[(1, 1), (1, 1), (1, 2)]), q(7, 8));
        assert!(three_dominant_value(&classical_freqs(3).unwrap()).is_err());
    }

    #[test]
    fn equal_pair_and_three_term_forms() {
        let e = |v: &[(i64, i64)]| coef(three_dominant_equal_first_two(&list(v)));
        assert_eq!(e(&[(1, 1), (1, 1), (1, 2)]), q(7, 8));
        assert_eq!(e(&[(1, 1), (1, 1), (1, 1), (1, 2)]), q(35, 48));
        assert_eq!(e(&[(2, 1), (2, 1), (1, 1)]), q(7, 16));
        assert!(three_dominant_equal_first_two(&list(&[(3, 1), (2, 1), (2, 1)])).is_err());

        // Also a single-break list, but the three-dominant condition holds.
        assert_eq!(
            classify_dominance(&list(&[(3, 1), (2, 1), (2, 1)])).kind,
            DominanceKind::FirstDominantBoundary
        );
        let t = |v: &[(i64, i64)]| coef(n3_value(&list(v)));
        assert_eq!(t(&[(1, 1), (1, 1), (1, 1)]), q(3, 4));
        assert_eq!(t(&[(1, 1), (1, 1), (1, 2)]), q(7, 8));
        assert_eq!(t(&[(3, 1), (2, 1), (2, 1)]), q(5, 16));
        assert_eq!(engine(&list(&[(3, 1), (2, 1), (2, 1)])), q(5, 16));
        assert!(n3_value(&list(&[(1, 1), (1, 1), (1, 1), (1, 2)])).is_err());
    }

    #[test]
    fn evaluate_dispatch() {
        let opts = EvaluateOptions::default();
        let five = evaluate(&classical_freqs(5).unwrap(), opts).unwrap();
        assert_eq!(five.value.coefficient(), &q(1, 1));
        assert_eq!(five.provenance, Provenance::FirstDominant);
        assert!(five.verified);

        let eight = evaluate(&classical_freqs(8).unwrap(), opts).unwrap();
        assert_eq!(eight.provenance, Provenance::FirstDominantCorrection);

        let nine_list = classical_freqs(9).unwrap();
        let nine = evaluate(&nine_list, opts).unwrap();
        assert_eq!(
            nine.provenance,
            Provenance::Engine(EnumerationStrategy::BruteForce)
        );
        assert_eq!(
            nine.value.coefficient(),
            &"17708695183056190642497315530628422295569865119/17708695394150597647449176493763755467520000000"
                .parse::<ExactRational>()
                .unwrap()
        );

        let unchecked = evaluate(
            &classical_freqs(5).unwrap(),
            EvaluateOptions {
                verify: false,
                ..opts
            },
        )
        .unwrap();
        assert!(!unchecked.verified);
    }

    #[test]
    fn factorial_truncation_examples() {
        let (f3, v3) = factorial_example_truncation(3).unwrap();
        assert_eq!(v3.coefficient(), &q(7, 8));
        assert_eq!(coef(three_dominant_value(&f3)), q(7, 8));

        let (f5, v5) = factorial_example_truncation(5).unwrap();
        let expected = q(5, 4) - (q(2, 1) + q(1, 4) + q(1, 36) + q(1, 576)) / q(6, 1);
        assert_eq!(v5.coefficient(), &expected);
        assert_eq!(engine(&f5), expected);

        let (f8, v8) = factorial_example_truncation(8).unwrap();
        assert_eq!(v8.coefficient(), &q(66303443, 76204800));
        assert_eq!(coef(three_dominant_value(&f8)), q(66303443, 76204800));
        assert_eq!(engine(&f8), q(66303443, 76204800));

        assert!(factorial_example_truncation(2).is_err());
    }
}
