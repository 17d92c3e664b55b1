//! Decimal rendering of `q·π` for exact `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::ExactRational;

const GUARD_DIGITS: usize = 10;

/// `floor(π · 10^digits)` up to an error of a few units in the last place,
/// from Machin's formula `π = 16 atan(1/5) - 4 atan(1/239)`.
fn pi_scaled(digits: usize) -> BigInt {
    let extra = 8;
    let unit = num_traits::pow(BigInt::from(10), digits + extra);
    let pi = atan_inverse(5, &unit) * 16 - atan_inverse(239, &unit) * 4;
    pi / num_traits::pow(BigInt::from(10), extra)
}

/// `atan(1/x) · unit`, truncated term by term.
fn atan_inverse(x: u32, unit: &BigInt) -> BigInt {
    let x_sq = BigInt::from(x) * x;
    let mut power = unit / x;
    let mut sum = power.clone();
    let mut k = 1u64;
    while !power.is_zero() {
        power /= &x_sq;
        let term = &power / (2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// `coefficient · π` rounded half-to-even to `digits` places after the point.
pub fn pi_multiple_decimal(coefficient: &ExactRational, digits: usize) -> String {
    if coefficient.is_zero() {
        return format_fixed(&BigInt::zero(), digits, false);
    }
    // Enough guard digits that |p/q| times the error in π stays below them.
    let magnitude = (coefficient.numer().abs() / coefficient.denom())
        .to_string()
        .len();
    let guard = GUARD_DIGITS + magnitude;
    let pi = pi_scaled(digits + guard);
    let scaled = coefficient.numer().abs() * pi;
    // value · 10^digits = scaled / (denom · 10^guard)
    let divisor = coefficient.denom() * num_traits::pow(BigInt::from(10), guard);
    let (quotient, remainder) = scaled.div_rem(&divisor);
    let twice = remainder * 2;
    let rounded = if twice > divisor || (twice == divisor && quotient.is_odd()) {
        quotient + BigInt::one()
    } else {
        quotient
    };
    format_fixed(&rounded, digits, coefficient.is_negative())
}

fn format_fixed(scaled: &BigInt, digits: usize, negative: bool) -> String {
    let mut text = scaled.to_string();
    if text.len() <= digits {
        text = format!("{}{text}", "0".repeat(digits + 1 - text.len()));
    }
    let sign = if negative && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{text}");
    }
    let (int, frac) = text.split_at(text.len() - digits);
    format!("{sign}{int}.{frac}")
}
