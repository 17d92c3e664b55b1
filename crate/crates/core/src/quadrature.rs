//! Floating-point cross-check of exact results.
//!
//! The integrand is even, so `[-R, R]` is integrated as twice `[0, R]` on
//! panels no wider than a quarter period of the fastest factor, each panel
//! refined by Gauss-Kronrod 7/15 bisection. The remainder `|x| > R` is
//! covered by a rigorous bound.
//!
//! Two tail bounds are available. [`tail_bound`] uses `|sinc(a x)| <= 1/(a|x|)`
//! and decays like `R^{1-n}`. Expanding the product into exponentials
//! `Σ c_λ e^{iλx} / x^n` gives a sharper one: every `λ != 0` term obeys
//! `|∫_R^∞ e^{iλx} x^{-n} dx| <= 2 / (|λ| R^n)` after one integration by
//! parts, and the `λ = 0` term has the closed-form tail
//! `2 c_0 R^{1-n} / (n-1)`, which is added to the estimate. The radius is
//! chosen from whichever bound reaches half the target first.

use std::f64::consts::PI;

use crate::error::QuadratureError;
use crate::freqs::{FrequencyList, PiMultiple};
use crate::rational::ExactRational;
use crate::residue::{integral_coefficient, lambda_spectrum, EnumerationStrategy};

/// Smallest accepted target.
pub const MIN_TARGET: f64 = 1e-12;

const TAYLOR_THRESHOLD: f64 = 1e-4;
const MAX_PANELS: usize = 20_000_000;
const MAX_DEPTH: u32 = 24;
/// Largest list for which the exponential expansion is enumerated.
const SPECTRUM_LIMIT: usize = 20;

/// `sin(t)/t`, with `1 - t²/6 + t⁴/120` near zero.
pub fn sinc(t: f64) -> f64 {
    if t.abs() < TAYLOR_THRESHOLD {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}

/// `Π sinc(a_j x)`.
pub fn integrand(freqs: &FrequencyList, x: f64) -> f64 {
    Integrand::new(freqs).eval(x)
}

struct Integrand {
    freqs: Vec<f64>,
}

impl Integrand {
    fn new(freqs: &FrequencyList) -> Self {
        Self {
            freqs: freqs.to_f64_sorted(),
        }
    }

    fn eval(&self, x: f64) -> f64 {
        let x = x.abs();
        self.freqs.iter().map(|a| sinc(a * x)).product()
    }
}

/// `2 / ((n-1) R^{n-1} Π a_j)`, bounding `|∫_{|x|>R} Π sinc(a_j x) dx|`.
pub fn tail_bound(freqs: &FrequencyList, radius: f64) -> Result<f64, QuadratureError> {
    if freqs.len() < 2 {
        return Err(QuadratureError::SingleFactor);
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(QuadratureError::BadRadius(radius));
    }
    let m = (freqs.len() - 1) as f64;
    Ok(2.0 / (m * radius.powf(m) * freqs.product().to_f64()))
}

/// Output of [`quadrature_estimate`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub discretization_error_estimate: f64,
    pub tail_bound: f64,
    pub radius: f64,
    pub total_error_bound: f64,
    pub panels: usize,
    /// Exact tail of the non-oscillating part, already included in `value`.
    pub tail_correction: f64,
}

/// Tail data from the exponential expansion.
struct Spectrum {
    /// `c_0`, the coefficient of `x^{-n}` with no oscillation.
    zero_mode: f64,
    /// `4 Σ_{λ≠0} |c_λ| / |λ|`; the two-sided tail is at most this over `R^n`.
    oscillating: f64,
}

impl Spectrum {
    fn new(freqs: &FrequencyList) -> Result<Self, QuadratureError> {
        let n = freqs.len();
        // |c_λ| = |w_λ| / (2^n Π a_j); c_0 is real, (2i)^n = 2^n (-1)^{n/2}.
        let norm =
            ExactRational::from_integer(num_bigint::BigInt::from(1u8) << n) * freqs.product();
        let mut zero_weight = 0i64;
        let mut oscillating = ExactRational::zero();
        for (lambda, weight) in lambda_spectrum(freqs)? {
            if lambda.is_zero() {
                zero_weight = weight;
            } else if weight != 0 {
                oscillating = oscillating + ExactRational::from(weight.abs()) / lambda.abs();
            }
        }
        let zero_mode = if n.is_multiple_of(2) {
            let sign = if (n / 2).is_multiple_of(2) { 1 } else { -1 };
            (ExactRational::from(sign * zero_weight) / &norm).to_f64()
        } else {
            0.0
        };
        Ok(Self {
            zero_mode,
            oscillating: 4.0 * (oscillating / norm).to_f64(),
        })
    }

    fn zero_tail(&self, n: usize, radius: f64) -> f64 {
        if self.zero_mode == 0.0 {
            return 0.0;
        }
        let m = (n - 1) as f64;
        2.0 * self.zero_mode / (m * radius.powf(m))
    }

    fn bound(&self, n: usize, radius: f64) -> f64 {
        self.oscillating / radius.powi(n as i32)
    }
}

enum TailChoice {
    Crude,
    Sharp(Spectrum),
}

/// Approximates `∫ Π sinc(a_j x) dx` to within `target` (absolute).
pub fn quadrature_estimate(
    freqs: &FrequencyList,
    target: f64,
) -> Result<QuadratureResult, QuadratureError> {
    let n = freqs.len();
    if n < 2 {
        return Err(QuadratureError::SingleFactor);
    }
    if !(target >= MIN_TARGET && target.is_finite()) {
        return Err(QuadratureError::UnreachableTolerance(target));
    }
    let half = target / 2.0;
    let product = freqs.product().to_f64();
    let m = (n - 1) as f64;
    let crude_radius = (2.0 / (m * product * half)).powf(1.0 / m);

    let mut choice = TailChoice::Crude;
    let mut radius = crude_radius;
    if n <= SPECTRUM_LIMIT {
        let spectrum = Spectrum::new(freqs)?;
        let sharp_radius = (spectrum.oscillating / half).powf(1.0 / n as f64);
        if sharp_radius < crude_radius {
            radius = sharp_radius;
            choice = TailChoice::Sharp(spectrum);
        }
    }

    let fastest = freqs.leading().to_f64();
    let width = PI / (2.0 * fastest);
    let panels = ((radius / width).ceil() as usize).max(1);
    if panels > MAX_PANELS {
        return Err(QuadratureError::RefinementExhausted { target });
    }
    let radius = panels as f64 * width;

    let (tail, tail_correction) = match &choice {
        TailChoice::Crude => (tail_bound(freqs, radius)?, 0.0),
        TailChoice::Sharp(s) => (s.bound(n, radius), s.zero_tail(n, radius)),
    };

    let f = Integrand::new(freqs);
    // [0, R] is doubled, so each panel gets a quarter of the target spread
    // evenly.
    let panel_tol = half / (2.0 * panels as f64);
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut err = 0.0;
    for i in 0..panels {
        let lo = i as f64 * width;
        let (v, e) = adaptive(&f, lo, lo + width, panel_tol, MAX_DEPTH)
            .ok_or(QuadratureError::RefinementExhausted { target })?;
        sum += v;
        abs_sum += v.abs();
        err += e;
    }
    let rounding = 64.0 * f64::EPSILON * abs_sum * 2.0;
    let discretization = 2.0 * err + rounding;
    Ok(QuadratureResult {
        value: 2.0 * sum + tail_correction,
        discretization_error_estimate: discretization,
        tail_bound: tail,
        radius,
        total_error_bound: tail + discretization,
        panels,
        tail_correction,
    })
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Kronrod-15 value and `|K15 - G7|` on `[lo, hi]`.
fn gauss_kronrod(f: &Integrand, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f.eval(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f.eval(center - dx) + f.eval(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adaptive(f: &Integrand, lo: f64, hi: f64, tol: f64, depth: u32) -> Option<(f64, f64)> {
    let (value, err) = gauss_kronrod(f, lo, hi);
    if err <= tol {
        return Some((value, err));
    }
    if depth == 0 {
        return None;
    }
    let mid = 0.5 * (lo + hi);
    let (lv, le) = adaptive(f, lo, mid, tol / 2.0, depth - 1)?;
    let (rv, re) = adaptive(f, mid, hi, tol / 2.0, depth - 1)?;
    Some((lv + rv, le + re))
}

/// Exact value against quadrature.
#[derive(Clone, Debug, PartialEq)]
pub struct CrosscheckReport {
    pub exact: PiMultiple,
    pub exact_value: f64,
    pub quadrature: QuadratureResult,
    pub deviation: f64,
    pub passed: bool,
}

/// Compares the engine's exact value with [`quadrature_estimate`].
pub fn crosscheck(freqs: &FrequencyList, target: f64) -> Result<CrosscheckReport, QuadratureError> {
    let exact = integral_coefficient(freqs, EnumerationStrategy::MeetInMiddle)?;
    crosscheck_against(freqs, &exact, target)
}

/// Compares a known exact value with [`quadrature_estimate`].
pub fn crosscheck_against(
    freqs: &FrequencyList,
    exact: &PiMultiple,
    target: f64,
) -> Result<CrosscheckReport, QuadratureError> {
    let quadrature = quadrature_estimate(freqs, target)?;
    let exact_value = exact.to_f64();
    let deviation = (quadrature.value - exact_value).abs();
    Ok(CrosscheckReport {
        exact: exact.clone(),
        exact_value,
        passed: deviation <= quadrature.total_error_bound,
        deviation,
        quadrature,
    })
}
