//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs without the libtest harness so the lines always print.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use borwein_core::{
    classical_freqs, classify_dominance, crosscheck_against, factorial,
    factorial_example_truncation, first_dominant_correction, first_dominant_value,
    integral_coefficient, lambda_star, n3_value, three_dominant_equal_first_two,
    three_dominant_value, DominanceKind, EnumerationStrategy, ExactRational, FrequencyList,
    PiMultiple,
};
use common::{list, q, sum};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn engine(f: &FrequencyList, s: EnumerationStrategy) -> ExactRational {
    integral_coefficient(f, s)
        .expect("engine")
        .into_coefficient()
}

fn brute(f: &FrequencyList) -> ExactRational {
    engine(f, EnumerationStrategy::BruteForce)
}

fn i8_coefficient() -> ExactRational {
    ExactRational::one()
        - "6879714958723010531/467807924720320453655260875000"
            .parse::<ExactRational>()
            .unwrap()
}

fn classical_pattern() -> Check {
    for n in 1..=7 {
        let value = brute(&classical_freqs(n).unwrap());
        ensure(value == ExactRational::one(), || {
            format!("n = {n} gave {value}")
        })?;
    }
    Ok("I_1..I_7 = π exactly".into())
}

fn the_break() -> Check {
    let eight = classical_freqs(8).unwrap();
    let value = brute(&eight);
    ensure(value == i8_coefficient(), || format!("engine gave {value}"))?;
    let closed = first_dominant_correction(&eight).map_err(|e| e.to_string())?;
    ensure(closed.coefficient() == &value, || {
        format!("correction gave {closed}")
    })?;
    Ok(format!("I_8 = ({value})·π from engine and correction"))
}

fn lambda_star_reproduction() -> Check {
    // 1 - 1/3 - 1/5 - ... - 1/15, summed on its own.
    let independent = (2..=8).fold(ExactRational::one(), |acc, j| acc - q(1, 2 * j - 1));
    ensure(independent == q(-982, 45045), || {
        format!("independent sum {independent}")
    })?;
    let term = lambda_star(&classical_freqs(8).unwrap()).map_err(|e| e.to_string())?;
    ensure(
        term.lambda_star == independent && term.break_index == 7,
        || format!("lambda* = {}, N = {}", term.lambda_star, term.break_index),
    )?;
    Ok("lambda* = -982/45045, N = 7".into())
}

fn first_dominant_lists() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7431);
    for i in 0..50 {
        let f = list(common::gen_first_dominant(&mut rng, 12, 50));
        let class = classify_dominance(&f).kind;
        ensure(class == DominanceKind::FirstDominant, || {
            format!("list {i} {f} classified {class}")
        })?;
        let closed = first_dominant_value(&f).map_err(|e| e.to_string())?;
        let value = brute(&f);
        ensure(closed.coefficient() == &value, || {
            format!("{f}: {closed} vs {value}")
        })?;
    }
    for i in 0..50 {
        let f = list(common::gen_first_dominant_boundary(&mut rng, 12, 50));
        let class = classify_dominance(&f);
        ensure(class.kind == DominanceKind::FirstDominantBoundary, || {
            format!("list {i} {f} classified {}", class.kind)
        })?;
        let closed = first_dominant_correction(&f).map_err(|e| e.to_string())?;
        let value = brute(&f);
        ensure(closed.coefficient() == &value, || {
            format!("{f}: {closed} vs {value}")
        })?;
    }
    Ok("50 first-dominant + 50 boundary lists match the engine".into())
}

fn three_dominant_lists() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7432);
    let (mut equal_pair, mut three) = (0, 0);
    for i in 0..50 {
        let mut v = common::sorted_desc(common::gen_three_dominant(&mut rng, 12, 50));
        if i % 4 == 0 {
            // Copying a_1 onto a_2 only widens the margin a_2 + a_3 - a_1.
            v[1] = v[0].clone();
        }
        if i % 5 == 0 {
            v.truncate(3);
        }
        let f = list(v);
        let class = classify_dominance(&f).kind;
        ensure(
            matches!(
                class,
                DominanceKind::ThreeDominant | DominanceKind::FirstDominantBoundary
            ),
            || format!("list {i} {f} classified {class}"),
        )?;
        let value = brute(&f);
        let closed = three_dominant_value(&f).map_err(|e| format!("{f}: {e}"))?;
        ensure(closed.coefficient() == &value, || {
            format!("{f}: {closed} vs {value}")
        })?;
        if f.sorted()[0] == f.sorted()[1] {
            let special = three_dominant_equal_first_two(&f).map_err(|e| e.to_string())?;
            ensure(special.coefficient() == &value, || {
                format!("{f}: a1 = a2 form {special}")
            })?;
            equal_pair += 1;
        }
        if f.len() == 3 {
            let special = n3_value(&f).map_err(|e| e.to_string())?;
            ensure(special.coefficient() == &value, || {
                format!("{f}: n = 3 form {special}")
            })?;
            three += 1;
        }
    }
    ensure(equal_pair > 0 && three > 0, || {
        "special forms never exercised".into()
    })?;
    Ok(format!(
        "50 three-dominant lists match; a1 = a2 form on {equal_pair}, n = 3 form on {three}"
    ))
}

fn example_one_family() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7433);
    let mut done = 0;
    while done < 20 {
        let extra = rng.gen_range(0..=9);
        let tail: Vec<_> = (0..extra)
            .map(|_| q(rng.gen_range(1..=3), rng.gen_range(2..=40)))
            .collect();
        if sum(&tail) >= ExactRational::one() || tail.iter().any(|a| a > &ExactRational::one()) {
            continue;
        }
        let mut v = vec![ExactRational::one(); 3];
        v.extend(tail);
        let expected =
            ExactRational::one() - sum(&v.iter().map(|a| a * a).collect::<Vec<_>>()) / q(12, 1);
        let f = list(v);
        let value = brute(&f);
        ensure(value == expected, || format!("{f}: {value} vs {expected}"))?;
        done += 1;
    }
    Ok("20 tails: coefficient = 1 - |a|²/12".into())
}

fn example_two_truncation() -> Check {
    let entries: Vec<_> = (0..8)
        .map(|j| ExactRational::from_integer(factorial(j)).recip())
        .collect();
    let squares: ExactRational = entries.iter().map(|a| a * a).sum();
    let expected = q(5, 4) - squares / q(6, 1);
    let f = list(entries);
    let value = brute(&f);
    ensure(value == expected, || {
        format!("engine {value} vs {expected}")
    })?;
    let (_, formula) = factorial_example_truncation(8).map_err(|e| e.to_string())?;
    ensure(formula.coefficient() == &expected, || {
        format!("truncation gave {formula}")
    })?;
    Ok(format!("1/j!, j = 0..7: ({value})·π"))
}

fn strategy_equivalence() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7434);
    for i in 0..200 {
        let n = rng.gen_range(1..=16);
        let f = list(
            (0..n)
                .map(|_| common::rand_rational(&mut rng, 100))
                .collect(),
        );
        let reference = brute(&f);
        for s in [
            EnumerationStrategy::MirrorHalved,
            EnumerationStrategy::MeetInMiddle,
        ] {
            let other = engine(&f, s);
            ensure(other == reference, || {
                format!("list {i} {f}: {s} gave {other}, brute {reference}")
            })?;
        }
    }
    let start = Instant::now();
    let big = classical_freqs(24).unwrap();
    let value = engine(&big, EnumerationStrategy::MeetInMiddle);
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("n = 24 took {elapsed:?}")
    })?;
    ensure(value.is_positive() && value < ExactRational::one(), || {
        format!("n = 24 coefficient {value} outside (0, 1)")
    })?;
    Ok(format!(
        "200 lists agree across strategies; mitm n = 24 in {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn scaling_and_permutation() -> Check {
    let mut rng = StdRng::seed_from_u64(0x7435);
    for i in 0..100 {
        let n = rng.gen_range(1..=10);
        let mut v: Vec<_> = (0..n)
            .map(|_| common::rand_rational(&mut rng, 100))
            .collect();
        let c = common::rand_rational(&mut rng, 100);
        let base = list(v.clone());
        let value = engine(&base, EnumerationStrategy::MeetInMiddle);
        let scaled = engine(&base.scaled(&c).unwrap(), EnumerationStrategy::MeetInMiddle);
        ensure(scaled == &value / &c, || {
            format!("pair {i}: {base} scaled by {c}")
        })?;
        v.shuffle(&mut rng);
        let permuted = engine(&list(v), EnumerationStrategy::MeetInMiddle);
        ensure(permuted == value, || {
            format!("pair {i}: permutation of {base} gave {permuted}")
        })?;
    }
    Ok("100 (list, c) pairs obey scaling and permutation laws".into())
}

fn quadrature_crosscheck() -> Check {
    let mut cases: Vec<(String, FrequencyList, PiMultiple)> = Vec::new();
    for n in 2..=8 {
        let f = classical_freqs(n).unwrap();
        let exact = integral_coefficient(&f, EnumerationStrategy::BruteForce).unwrap();
        cases.push((format!("classical n = {n}"), f, exact));
    }
    let three_dominant: Vec<FrequencyList> = vec![
        list(vec![q(1, 1), q(1, 1), q(1, 1)]),
        list(vec![q(1, 1), q(1, 1), q(1, 1), q(1, 2)]),
        list(vec![q(1, 1), q(1, 1), q(1, 2)]),
        list(vec![q(3, 1), q(2, 1), q(2, 1)]),
        factorial_example_truncation(5).unwrap().0,
    ];
    for f in three_dominant {
        let exact = three_dominant_value(&f).unwrap();
        cases.push((format!("three-dominant {f}"), f, exact));
    }

    let mut worst = 0.0f64;
    for (label, f, exact) in &cases {
        let start = Instant::now();
        let report = crosscheck_against(f, exact, 1e-8).map_err(|e| format!("{label}: {e}"))?;
        let elapsed = start.elapsed();
        ensure(report.passed, || {
            format!(
                "{label}: |{} - {}| = {:e} > {:e}",
                report.quadrature.value,
                report.exact_value,
                report.deviation,
                report.quadrature.total_error_bound
            )
        })?;
        ensure(report.quadrature.total_error_bound <= 1e-8, || {
            format!(
                "{label}: bound {:e} above target",
                report.quadrature.total_error_bound
            )
        })?;
        ensure(elapsed < Duration::from_secs(10), || {
            format!("{label} took {elapsed:?}")
        })?;
        worst = worst.max(elapsed.as_secs_f64());
    }
    Ok(format!(
        "{} cases within bound at target 1e-8, slowest {worst:.2}s",
        cases.len()
    ))
}

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "classical pattern I_1..I_7",
            budget: Some(Duration::from_secs(1)),
            run: classical_pattern,
        },
        Criterion {
            name: "the break at n = 8",
            budget: Some(Duration::from_millis(100)),
            run: the_break,
        },
        Criterion {
            name: "lambda* reproduction",
            budget: None,
            run: lambda_star_reproduction,
        },
        Criterion {
            name: "first-dominant oracle equivalence",
            budget: Some(Duration::from_secs(30)),
            run: first_dominant_lists,
        },
        Criterion {
            name: "three-dominant oracle equivalence",
            budget: Some(Duration::from_secs(30)),
            run: three_dominant_lists,
        },
        Criterion {
            name: "(1, 1, 1, tail) family",
            budget: None,
            run: example_one_family,
        },
        Criterion {
            name: "1/j! truncation",
            budget: None,
            run: example_two_truncation,
        },
        Criterion {
            name: "strategy equivalence",
            budget: None,
            run: strategy_equivalence,
        },
        Criterion {
            name: "scaling and permutation laws",
            budget: None,
            run: scaling_and_permutation,
        },
        Criterion {
            name: "quadrature crosscheck",
            budget: None,
            run: quadrature_crosscheck,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(budget)) = (&outcome, c.budget) {
            if elapsed > budget {
                outcome = Err(format!("took {elapsed:?}, budget {budget:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!(
                "PASS  {:<36} {detail} [{:.3}s]",
                c.name,
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "FAIL  {:<36} {detail} [{:.3}s]",
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
