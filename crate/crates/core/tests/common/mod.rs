//! Test-only oracle and list generators, kept independent of the engine's
//! integer scaling and Gray-code walk.

#![allow(dead_code)]

use borwein_core::{ExactRational, FrequencyList};
use rand::Rng;

pub fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

/// `Σ_{λ_σ > 0} (Π σ) λ_σ^{n-1}` by plain rational enumeration, sign
/// vectors taken from the bits of a counter.
pub fn naive_moment_sum(freqs: &[ExactRational]) -> ExactRational {
    let n = freqs.len();
    let mut total = ExactRational::zero();
    for mask in 0u64..(1 << n) {
        let mut lambda = ExactRational::zero();
        let mut negatives = 0;
        for (j, a) in freqs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                lambda = lambda - a;
                negatives += 1;
            } else {
                lambda = lambda + a;
            }
        }
        if lambda.is_positive() {
            let term = lambda.pow(n as u32 - 1);
            total = if negatives % 2 == 0 {
                total + term
            } else {
                total - term
            };
        }
    }
    total
}

/// Coefficient of π from the naive moment sum.
pub fn naive_coefficient(freqs: &[ExactRational]) -> ExactRational {
    let n = freqs.len() as u64;
    let mut norm = ExactRational::one();
    for k in 1..n {
        norm = norm * ExactRational::from(2 * k as i64);
    }
    for a in freqs {
        norm = norm * a;
    }
    naive_moment_sum(freqs) / norm
}

pub fn sum(values: &[ExactRational]) -> ExactRational {
    values.iter().sum()
}

pub fn rand_rational(rng: &mut impl Rng, max: i64) -> ExactRational {
    q(rng.gen_range(1..=max), rng.gen_range(1..=max))
}

pub fn sorted_desc(mut v: Vec<ExactRational>) -> Vec<ExactRational> {
    v.sort_by(|a, b| b.cmp(a));
    v
}

pub fn first_dominant(a: &[ExactRational]) -> bool {
    let a = sorted_desc(a.to_vec());
    a[0] > sum(&a[1..])
}

pub fn first_dominant_boundary(a: &[ExactRational]) -> bool {
    let a = sorted_desc(a.to_vec());
    let n = a.len();
    n >= 3 && a[0] > sum(&a[1..n - 1]) && a[0] < sum(&a[1..]) && a[0] > a[1]
}

pub fn three_dominant(a: &[ExactRational]) -> bool {
    let a = sorted_desc(a.to_vec());
    a.len() >= 3 && &a[1] + &a[2] - &a[0] > sum(&a[3..])
}

/// `a_1` plus a tail summing below it; `n` in `2..=max_n`.
pub fn gen_first_dominant(rng: &mut impl Rng, max_n: usize, max: i64) -> Vec<ExactRational> {
    loop {
        let n = rng.gen_range(2..=max_n);
        let lead = q(rng.gen_range(max / 2..=max), rng.gen_range(1..=3));
        let tail: Vec<_> = (1..n)
            .map(|_| q(rng.gen_range(1..=4), rng.gen_range(1..=max)))
            .collect();
        let mut v = vec![lead];
        v.extend(tail);
        if first_dominant(&v) {
            return v;
        }
    }
}

/// Tail prefix below `a_1`, last entry pushing the total past it, then a
/// random rescale.
pub fn gen_first_dominant_boundary(
    rng: &mut impl Rng,
    max_n: usize,
    max: i64,
) -> Vec<ExactRational> {
    let bound = num_bigint::BigInt::from(max);
    loop {
        let n = rng.gen_range(3..=max_n);
        let mut v = vec![q(1, 1)];
        for _ in 1..n {
            v.push(q(rng.gen_range(1..=3), rng.gen_range(2..=max)));
        }
        let scale = q(rng.gen_range(1..=5), rng.gen_range(1..=5));
        let v: Vec<_> = v.iter().map(|a| a * &scale).collect();
        if v.iter().any(|a| a.numer() > &bound || a.denom() > &bound) {
            continue;
        }
        if first_dominant_boundary(&v) {
            return v;
        }
    }
}

/// Three comparable leaders with a small tail.
pub fn gen_three_dominant(rng: &mut impl Rng, max_n: usize, max: i64) -> Vec<ExactRational> {
    loop {
        let n = rng.gen_range(3..=max_n);
        let base = rng.gen_range(max / 2..=max);
        let mut v: Vec<_> = (0..3)
            .map(|_| q(rng.gen_range(base * 2 / 3..=base), rng.gen_range(1..=2)))
            .collect();
        for _ in 3..n {
            v.push(q(rng.gen_range(1..=3), rng.gen_range(1..=max)));
        }
        if three_dominant(&v) {
            return v;
        }
    }
}

pub fn list(v: Vec<ExactRational>) -> FrequencyList {
    FrequencyList::new(v).expect("positive frequencies")
}
