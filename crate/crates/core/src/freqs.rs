//! Validated frequency lists, sign vectors and exact multiples of pi.

use std::fmt;

use crate::error::{FrequencyError, ParseError};
use crate::rational::{rational_parse, ExactRational};

/// An ordered, non-empty list of strictly positive frequencies.
///
/// The user-supplied order is kept for reporting; all mathematics reads
/// [`FrequencyList::sorted`], which is non-increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyList {
    entries: Vec<ExactRational>,
    sorted: Vec<ExactRational>,
    // sorted[i] == entries[permutation[i]]
    permutation: Vec<usize>,
}

impl FrequencyList {
    pub fn new(entries: Vec<ExactRational>) -> Result<Self, FrequencyError> {
        if entries.is_empty() {
            return Err(FrequencyError::Empty);
        }
        if let Some((index, value)) = entries.iter().enumerate().find(|(_, a)| !a.is_positive()) {
            return Err(FrequencyError::NonPositive {
                index,
                value: value.clone(),
            });
        }
        let mut permutation: Vec<usize> = (0..entries.len()).collect();
        // Stable, so equal entries keep their relative user order.
        permutation.sort_by(|&i, &j| entries[j].cmp(&entries[i]));
        let sorted = permutation.iter().map(|&i| entries[i].clone()).collect();
        Ok(Self {
            entries,
            sorted,
            permutation,
        })
    }

    /// Parses each token with [`rational_parse`].
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Self, FrequencyError> {
        let entries = tokens
            .iter()
            .map(|t| rational_parse(t.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(entries)
    }

    /// Reads the line-oriented file format: one rational per line, blank
    /// lines and `#` comments skipped.
    pub fn parse_file_contents(text: &str) -> Result<Self, FrequencyError> {
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let value = rational_parse(line).map_err(|e| ParseError::Line {
                line: idx + 1,
                source: Box::new(e),
            })?;
            entries.push(value);
        }
        Self::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// User order.
    pub fn entries(&self) -> &[ExactRational] {
        &self.entries
    }

    /// Non-increasing order.
    pub fn sorted(&self) -> &[ExactRational] {
        &self.sorted
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// The largest frequency.
    pub fn leading(&self) -> &ExactRational {
        &self.sorted[0]
    }

    pub fn product(&self) -> ExactRational {
        self.sorted.iter().product()
    }

    /// Every frequency multiplied by `factor`.
    pub fn scaled(&self, factor: &ExactRational) -> Result<Self, FrequencyError> {
        if !factor.is_positive() {
            return Err(FrequencyError::NonPositiveScale(factor.clone()));
        }
        Self::new(self.entries.iter().map(|a| a * factor).collect())
    }

    /// The same list with frequencies appended in order.
    pub fn extended(&self, extra: &[ExactRational]) -> Result<Self, FrequencyError> {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(extra);
        Self::new(entries)
    }

    pub fn to_f64_sorted(&self) -> Vec<f64> {
        self.sorted.iter().map(ExactRational::to_f64).collect()
    }
}

impl fmt::Display for FrequencyList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// A choice of sign for every frequency, indexed like
/// [`FrequencyList::sorted`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self, FrequencyError> {
        if let Some((index, &value)) = signs.iter().enumerate().find(|(_, s)| !matches!(s, -1 | 1))
        {
            return Err(FrequencyError::InvalidSign { index, value });
        }
        Ok(Self(signs))
    }

    pub fn all_positive(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// Product of all signs.
    pub fn parity(&self) -> i8 {
        self.0.iter().product()
    }
}

/// The exact value `coefficient * pi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiMultiple {
    coefficient: ExactRational,
}

impl PiMultiple {
    pub fn new(coefficient: ExactRational) -> Self {
        Self { coefficient }
    }

    pub fn coefficient(&self) -> &ExactRational {
        &self.coefficient
    }

    pub fn into_coefficient(self) -> ExactRational {
        self.coefficient
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64() * std::f64::consts::PI
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·π", self.coefficient)
    }
}
