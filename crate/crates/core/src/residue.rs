//! Exact residue-sum evaluation of `∫ Π sinc(a_j x) dx`.
//!
//! Expanding each `sinc(a_j z) = (e^{i a_j z} - e^{-i a_j z}) / (2 i a_j z)`
//! turns the product into `2^n` terms `Π σ_j e^{i λ_σ z} / ((2i)^n Π a_j z^n)`
//! with `λ_σ = Σ σ_j a_j`. Closing the contour in the upper half plane for
//! the terms with `λ_σ > 0` leaves a single pole of order `n` at the origin,
//! and the integral collapses to
//!
//! ```text
//! I = π / (2^{n-1} (n-1)! Π a_j) · S,    S = Σ_{λ_σ > 0} (Π σ_j) λ_σ^{n-1}
//! ```
//!
//! Terms with `λ_σ = 0` are left out of `S`; for `n >= 2` they carry the
//! factor `0^{n-1} = 0`, and for `n = 1` no sign vector has `λ_σ = 0`.
//!
//! Three enumerators compute `S`. All of them first clear denominators so
//! the inner loops work on integers:
//!
//! * [`EnumerationStrategy::BruteForce`] walks all `2^n` sign vectors in
//!   Gray-code order. It is the reference.
//! * [`EnumerationStrategy::MirrorHalved`] walks only `σ_1 = +1` and folds
//!   in the mirrored vector `-σ` whenever `λ_σ < 0`.
//! * [`EnumerationStrategy::MeetInMiddle`] splits the frequencies in two
//!   halves and combines the half sums through binomial moment sums.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{EngineError, FrequencyError};
use crate::freqs::{FrequencyList, PiMultiple, SignVector};
use crate::rational::{factorial, ExactRational};

/// Largest list any enumerator accepts.
pub const MAX_FREQUENCIES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumerationStrategy {
    BruteForce,
    MirrorHalved,
    MeetInMiddle,
}

impl EnumerationStrategy {
    pub const ALL: [EnumerationStrategy; 3] = [
        EnumerationStrategy::BruteForce,
        EnumerationStrategy::MirrorHalved,
        EnumerationStrategy::MeetInMiddle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EnumerationStrategy::BruteForce => "brute",
            EnumerationStrategy::MirrorHalved => "mirror",
            EnumerationStrategy::MeetInMiddle => "mitm",
        }
    }
}

impl fmt::Display for EnumerationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnumerationStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(EnumerationStrategy::BruteForce),
            "mirror" => Ok(EnumerationStrategy::MirrorHalved),
            "mitm" => Ok(EnumerationStrategy::MeetInMiddle),
            other => Err(format!(
                "unknown strategy `{other}` (expected brute, mirror or mitm)"
            )),
        }
    }
}

/// `S = Σ_{λ_σ > 0} (Π σ_j) λ_σ^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMomentSum {
    pub value: ExactRational,
}

/// `λ_σ = Σ σ_j a_j` over the sorted frequencies.
pub fn lambda_of(freqs: &FrequencyList, signs: &SignVector) -> Result<ExactRational, EngineError> {
    if signs.len() != freqs.len() {
        return Err(FrequencyError::LengthMismatch {
            signs: signs.len(),
            freqs: freqs.len(),
        }
        .into());
    }
    Ok(freqs
        .sorted()
        .iter()
        .zip(signs.signs())
        .fold(
            ExactRational::zero(),
            |acc, (a, &s)| if s > 0 { acc + a } else { acc - a },
        ))
}

pub fn signed_moment_sum(
    freqs: &FrequencyList,
    strategy: EnumerationStrategy,
) -> Result<SignedMomentSum, EngineError> {
    check_capacity(freqs.len())?;
    let scaled = ScaledFrequencies::new(freqs);
    let raw = match strategy {
        EnumerationStrategy::BruteForce => brute_force(&scaled.ints),
        EnumerationStrategy::MirrorHalved => mirror_halved(&scaled.ints),
        EnumerationStrategy::MeetInMiddle => meet_in_middle(&scaled.ints),
    };
    Ok(scaled.unscale(raw))
}

/// Meet-in-the-middle evaluation of `S`; same value as brute force.
pub fn signed_moment_sum_mitm(freqs: &FrequencyList) -> Result<SignedMomentSum, EngineError> {
    signed_moment_sum(freqs, EnumerationStrategy::MeetInMiddle)
}

/// The integral as an exact multiple of pi.
pub fn integral_coefficient(
    freqs: &FrequencyList,
    strategy: EnumerationStrategy,
) -> Result<PiMultiple, EngineError> {
    let sum = signed_moment_sum(freqs, strategy)?;
    Ok(PiMultiple::new(sum.value / normalization(freqs)))
}

/// `2^{n-1} (n-1)! Π a_j`.
pub fn normalization(freqs: &FrequencyList) -> ExactRational {
    let m = freqs.len() as u64 - 1;
    let ints = BigInt::from(factorial(m)) << m as usize;
    ExactRational::from_integer(ints) * freqs.product()
}

/// Every distinct `λ_σ` with the summed sign parity of the vectors that
/// produce it, sorted ascending. Entries whose parities cancel are kept.
pub fn lambda_spectrum(freqs: &FrequencyList) -> Result<Vec<(ExactRational, i64)>, EngineError> {
    const MAX_SPECTRUM: usize = 24;
    if freqs.len() > MAX_SPECTRUM {
        return Err(EngineError::Capacity {
            n: freqs.len(),
            max: MAX_SPECTRUM,
        });
    }
    let scaled = ScaledFrequencies::new(freqs);
    let scale = ExactRational::from_integer(scaled.scale.clone());
    Ok(half_sums(&scaled.ints)
        .into_iter()
        .map(|(lambda, w)| (ExactRational::from_integer(lambda) / &scale, w))
        .collect())
}

fn check_capacity(n: usize) -> Result<(), EngineError> {
    if n > MAX_FREQUENCIES {
        Err(EngineError::Capacity {
            n,
            max: MAX_FREQUENCIES,
        })
    } else {
        Ok(())
    }
}

/// Frequencies multiplied by the lcm of their denominators.
struct ScaledFrequencies {
    ints: Vec<BigInt>,
    scale: BigInt,
}

impl ScaledFrequencies {
    fn new(freqs: &FrequencyList) -> Self {
        let scale = freqs
            .sorted()
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints = freqs
            .sorted()
            .iter()
            .map(|a| a.numer() * (&scale / a.denom()))
            .collect();
        Self { ints, scale }
    }

    /// Brings an integer moment sum of degree `n - 1` back to the original units.
    fn unscale(&self, raw: BigInt) -> SignedMomentSum {
        let degree = self.ints.len() as u32 - 1;
        SignedMomentSum {
            value: ExactRational::new(raw, num_traits::pow(self.scale.clone(), degree as usize)),
        }
    }
}

fn add_signed(acc: &mut BigInt, positive: bool, term: BigInt) {
    if positive {
        *acc += term;
    } else {
        *acc -= term;
    }
}

fn brute_force(ints: &[BigInt]) -> BigInt {
    let n = ints.len();
    let degree = n as u32 - 1;
    let doubled: Vec<BigInt> = ints.iter().map(|a| a << 1).collect();
    let mut plus = vec![true; n];
    let mut lambda: BigInt = ints.iter().sum();
    let mut parity = true;
    let mut acc = BigInt::zero();

    for k in 0u64..(1u64 << n) {
        if k > 0 {
            let j = k.trailing_zeros() as usize;
            if plus[j] {
                lambda -= &doubled[j];
            } else {
                lambda += &doubled[j];
            }
            plus[j] = !plus[j];
            parity = !parity;
        }
        if lambda.is_positive() {
            add_signed(&mut acc, parity, lambda.pow(degree));
        }
    }
    acc
}

fn mirror_halved(ints: &[BigInt]) -> BigInt {
    let n = ints.len();
    let degree = n as u32 - 1;
    let doubled: Vec<BigInt> = ints.iter().map(|a| a << 1).collect();
    let mut plus = vec![true; n];
    let mut lambda: BigInt = ints.iter().sum();
    let mut parity = true;
    let mut acc = BigInt::zero();
    // The mirror -σ has parity (-1)^n Π σ and moment |λ|^{n-1}.
    let mirror_flips = n % 2 == 1;

    for k in 0u64..(1u64 << (n - 1)) {
        if k > 0 {
            let j = 1 + k.trailing_zeros() as usize;
            if plus[j] {
                lambda -= &doubled[j];
            } else {
                lambda += &doubled[j];
            }
            plus[j] = !plus[j];
            parity = !parity;
        }
        if lambda.is_positive() {
            add_signed(&mut acc, parity, lambda.pow(degree));
        } else if lambda.is_negative() {
            add_signed(&mut acc, parity != mirror_flips, lambda.abs().pow(degree));
        }
    }
    acc
}

/// All signed sums of `ints` as `(λ, Σ parity)` pairs, merged on equal `λ`
/// and sorted ascending.
fn half_sums(ints: &[BigInt]) -> Vec<(BigInt, i64)> {
    let mut sums: Vec<(BigInt, i64)> = vec![(BigInt::zero(), 1)];
    for a in ints {
        let mut next = Vec::with_capacity(sums.len() * 2);
        for (lambda, w) in &sums {
            next.push((lambda + a, *w));
            next.push((lambda - a, -*w));
        }
        sums = next;
    }
    sums.sort_unstable_by(|x, y| x.0.cmp(&y.0));
    let mut merged: Vec<(BigInt, i64)> = Vec::with_capacity(sums.len());
    for (lambda, w) in sums {
        match merged.last_mut() {
            Some(last) if last.0 == lambda => last.1 += w,
            _ => merged.push((lambda, w)),
        }
    }
    merged
}

fn binomials(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..m {
        let next = row[k as usize].clone() * (m - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Combines the two halves through
/// `Σ_{λ_A + λ_B > 0} w_A w_B (λ_A + λ_B)^m
///   = Σ_A w_A Σ_k C(m, k) λ_A^k · Σ_{λ_B > -λ_A} w_B λ_B^{m-k}`.
///
/// The inner sums are suffix moments of the sorted B half. A visits its
/// sums in ascending order, so the threshold `-λ_A` only decreases and
/// the suffix can be grown with a single pointer instead of stored.
fn meet_in_middle(ints: &[BigInt]) -> BigInt {
    let n = ints.len();
    let degree = n as u32 - 1;
    let (left, right) = ints.split_at(n / 2);
    let side_a = half_sums(left);
    let side_b = half_sums(right);
    let binom = binomials(degree);

    // moments[j] = Σ w_B λ_B^j over the B sums admitted so far.
    let mut moments = vec![BigInt::zero(); degree as usize + 1];
    let mut next_b = side_b.len();
    let mut acc = BigInt::zero();

    for (lambda_a, w_a) in &side_a {
        let threshold = -lambda_a;
        while next_b > 0 && side_b[next_b - 1].0 > threshold {
            next_b -= 1;
            let (lambda_b, w_b) = &side_b[next_b];
            if *w_b == 0 {
                continue;
            }
            let mut power = BigInt::from(*w_b);
            for slot in moments.iter_mut() {
                *slot += &power;
                power *= lambda_b;
            }
        }
        if *w_a == 0 || next_b == side_b.len() {
            continue;
        }
        let mut inner = BigInt::zero();
        let mut power_a = BigInt::one();
        for k in 0..=degree as usize {
            inner += &binom[k] * &power_a * &moments[degree as usize - k];
            power_a *= lambda_a;
        }
        acc += inner * w_a;
    }
    acc
}
