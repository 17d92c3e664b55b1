use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use borwein_core::{
    classical_freqs, classify_dominance, crosscheck_against, evaluate, first_dominant_correction,
    first_dominant_value, integral_coefficient, n3_value, pi_multiple_decimal,
    three_dominant_equal_first_two, three_dominant_value, ClosedFormError, DominanceClass,
    EngineError, EnumerationStrategy, EvaluateOptions, ExactRational, FrequencyList, PiMultiple,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Above this size the default strategy switches from brute force to
/// meet-in-the-middle.
const BRUTE_DEFAULT_LIMIT: usize = 20;
/// `verify` skips the 2^n and 2^(n-1) walks past these sizes.
const VERIFY_BRUTE_LIMIT: usize = 20;
const VERIFY_MIRROR_LIMIT: usize = 22;
const MIN_TOLERANCE: f64 = 1e-10;

type ClosedForm = fn(&FrequencyList) -> Result<PiMultiple, ClosedFormError>;

#[derive(Parser)]
#[command(name = "borwein", version)]
#[command(about = "Exact values of ∫ Π sinc(a_j x) dx as rational multiples of π")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(clap::Args)]
struct FreqInput {
    /// Frequencies: integers, fractions (3/4) or decimals (0.25)
    #[arg(allow_negative_numbers = true, conflicts_with = "file")]
    freqs: Vec<String>,

    /// Read one frequency per line; blank and `#` lines are skipped
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Brute,
    Mirror,
    Mitm,
}

impl From<StrategyArg> for EnumerationStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Brute => EnumerationStrategy::BruteForce,
            StrategyArg::Mirror => EnumerationStrategy::MirrorHalved,
            StrategyArg::Mitm => EnumerationStrategy::MeetInMiddle,
        }
    }
}

#[derive(Subcommand)]
enum Commands {
    /// Compute the exact π-coefficient of one integral
    Integrate {
        #[command(flatten)]
        input: FreqInput,

        /// Engine strategy [default: brute up to 20 frequencies, mitm above]
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,

        /// Decimal places for coefficient·π
        #[arg(long, default_value_t = 15)]
        digits: usize,

        #[arg(long)]
        json: bool,

        /// Skip re-checking a closed form against the engine
        #[arg(long)]
        no_verify: bool,
    },
    /// Tabulate I_n for a_j = 1/(2j - 1), j = 1..n
    ClassicTable {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u8).range(1..=12))]
        max_n: u8,

        #[arg(long, default_value_t = 15)]
        digits: usize,

        #[arg(long)]
        json: bool,
    },
    /// Show which closed form applies and the exact comparisons behind it
    Classify {
        #[command(flatten)]
        input: FreqInput,

        #[arg(long)]
        json: bool,
    },
    /// Compare closed forms, every engine strategy and quadrature
    Verify {
        #[command(flatten)]
        input: FreqInput,

        /// Absolute target for the quadrature error bound
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,

        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Verification(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct OutputRecord {
    freqs: Vec<String>,
    n: usize,
    coefficient: String,
    decimal: String,
    classification: String,
    provenance: String,
    verified: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Commands::Integrate {
            input,
            strategy,
            digits,
            json,
            no_verify,
        } => cmd_integrate(&input, strategy, digits, json, !no_verify),
        Commands::ClassicTable {
            max_n,
            digits,
            json,
        } => cmd_classic_table(max_n as usize, digits, json),
        Commands::Classify { input, json } => cmd_classify(&input, json),
        Commands::Verify {
            input,
            tolerance,
            json,
        } => cmd_verify(&input, tolerance, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn load(input: &FreqInput) -> Result<FrequencyList, Failure> {
    let parsed = match &input.file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            FrequencyList::parse_file_contents(&text)
        }
        None => FrequencyList::parse(&input.freqs),
    };
    parsed.map_err(|e| Failure::Input(e.to_string()))
}

fn default_strategy(n: usize) -> EnumerationStrategy {
    if n <= BRUTE_DEFAULT_LIMIT {
        EnumerationStrategy::BruteForce
    } else {
        EnumerationStrategy::MeetInMiddle
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn warn_if_nonpositive(coefficient: &ExactRational) {
    if !coefficient.is_positive() {
        eprintln!("warning: coefficient {coefficient} is not positive");
    }
}

fn cmd_integrate(
    input: &FreqInput,
    strategy: Option<StrategyArg>,
    digits: usize,
    json: bool,
    verify: bool,
) -> Result<(), Failure> {
    let freqs = load(input)?;
    let options = EvaluateOptions {
        strategy: strategy.map_or_else(|| default_strategy(freqs.len()), Into::into),
        verify,
    };
    let eval = evaluate(&freqs, options).map_err(|e| match e {
        ClosedFormError::Mismatch { .. } => Failure::Verification(e.to_string()),
        other => Failure::Input(other.to_string()),
    })?;
    let coefficient = eval.value.coefficient();
    warn_if_nonpositive(coefficient);
    let record = OutputRecord {
        freqs: freqs.entries().iter().map(ToString::to_string).collect(),
        n: freqs.len(),
        coefficient: coefficient.to_string(),
        decimal: pi_multiple_decimal(coefficient, digits),
        classification: eval.class.kind.to_string(),
        provenance: eval.provenance.to_string(),
        verified: eval.verified.then(|| {
            format!(
                "closed form equals engine:{}",
                EnumerationStrategy::MeetInMiddle
            )
        }),
    };
    if json {
        print_json(&record);
    } else {
        println!("freqs          {}", record.freqs.join(" "));
        println!("n              {}", record.n);
        println!("coefficient    {}", record.coefficient);
        println!("decimal        {}", record.decimal);
        println!("classification {}", record.classification);
        println!("provenance     {}", record.provenance);
        if let Some(v) = &record.verified {
            println!("verified       {v}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    coefficient: String,
    decimal: String,
    classification: String,
}

fn cmd_classic_table(max_n: usize, digits: usize, json: bool) -> Result<(), Failure> {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let freqs = classical_freqs(n).map_err(|e| Failure::Input(e.to_string()))?;
        let value = integral_coefficient(&freqs, EnumerationStrategy::BruteForce)?;
        rows.push(TableRow {
            n,
            coefficient: value.coefficient().to_string(),
            decimal: pi_multiple_decimal(value.coefficient(), digits),
            classification: classify_dominance(&freqs).kind.to_string(),
        });
    }
    if json {
        #[derive(Serialize)]
        struct Table {
            rows: Vec<TableRow>,
        }
        print_json(&Table { rows });
        return Ok(());
    }
    println!(
        "{:>2}  {:<22} {:<width$}  coefficient",
        "n",
        "class",
        "decimal",
        width = digits + 2
    );
    for r in &rows {
        println!(
            "{:>2}  {:<22} {:<width$}  {}",
            r.n,
            r.classification,
            r.decimal,
            r.coefficient,
            width = digits + 2
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckRecord {
    label: String,
    lhs: String,
    relation: &'static str,
    rhs: String,
}

#[derive(Serialize)]
struct ClassReport {
    freqs: Vec<String>,
    sorted: Vec<String>,
    classification: String,
    break_index: Option<usize>,
    boundary_first_total: bool,
    boundary_break_point: bool,
    boundary_three_condition: bool,
    checks: Vec<CheckRecord>,
}

fn class_report(freqs: &FrequencyList, class: &DominanceClass) -> ClassReport {
    ClassReport {
        freqs: freqs.entries().iter().map(ToString::to_string).collect(),
        sorted: freqs.sorted().iter().map(ToString::to_string).collect(),
        classification: class.kind.to_string(),
        break_index: class.break_index,
        boundary_first_total: class.boundary.first_total,
        boundary_break_point: class.boundary.break_point,
        boundary_three_condition: class.boundary.three_condition,
        checks: class
            .checks
            .iter()
            .map(|c| CheckRecord {
                label: c.label.clone(),
                lhs: c.lhs.to_string(),
                relation: c.relation(),
                rhs: c.rhs.to_string(),
            })
            .collect(),
    }
}

fn cmd_classify(input: &FreqInput, json: bool) -> Result<(), Failure> {
    let freqs = load(input)?;
    let class = classify_dominance(&freqs);
    let report = class_report(&freqs, &class);
    if json {
        print_json(&report);
        return Ok(());
    }
    println!("sorted         {}", report.sorted.join(" "));
    match report.break_index {
        Some(k) => println!("classification {} (N = {k})", report.classification),
        None => println!("classification {}", report.classification),
    }
    for c in &report.checks {
        let wanted = format!(" {} ", c.relation);
        let holds = if c.label.contains(&wanted) {
            "holds"
        } else {
            "fails"
        };
        println!(
            "  {:<32} {} {} {}  [{holds}]",
            c.label, c.lhs, c.relation, c.rhs
        );
    }
    let b = &class.boundary;
    if b.any() {
        let mut flags = Vec::new();
        if b.first_total {
            flags.push("a1 = a2 + ... + an");
        }
        if b.break_point {
            flags.push("a1 equals a partial tail sum");
        }
        if b.three_condition {
            flags.push("a2 + a3 - a1 = a4 + ... + an");
        }
        println!("boundary       {}", flags.join("; "));
    } else {
        println!("boundary       none");
    }
    Ok(())
}

#[derive(Serialize)]
struct MethodValue {
    method: String,
    coefficient: String,
}

#[derive(Serialize)]
struct Disagreement {
    left: String,
    right: String,
}

#[derive(Serialize)]
struct QuadratureRecord {
    value: f64,
    exact_value: f64,
    deviation: f64,
    total_error_bound: f64,
    radius: f64,
    panels: usize,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    freqs: Vec<String>,
    classification: String,
    values: Vec<MethodValue>,
    skipped: Vec<String>,
    disagreements: Vec<Disagreement>,
    quadrature: QuadratureRecord,
    all_agree: bool,
}

fn cmd_verify(input: &FreqInput, tolerance: f64, json: bool) -> Result<(), Failure> {
    if tolerance.is_nan() || tolerance < MIN_TOLERANCE || tolerance.is_infinite() {
        return Err(Failure::Input(format!(
            "tolerance must be a finite value >= {MIN_TOLERANCE:e}, got {tolerance}"
        )));
    }
    let freqs = load(input)?;
    let n = freqs.len();
    if n < 2 {
        return Err(Failure::Input("verify needs at least 2 frequencies".into()));
    }

    let mut values: Vec<(String, PiMultiple)> = Vec::new();
    let mut skipped = Vec::new();
    let closed_forms: [(&str, ClosedForm); 5] = [
        ("closed-form:first-dominant", first_dominant_value),
        (
            "closed-form:first-dominant-correction",
            first_dominant_correction,
        ),
        ("closed-form:three-dominant", three_dominant_value),
        (
            "closed-form:three-dominant-equal-pair",
            three_dominant_equal_first_two,
        ),
        ("closed-form:three-frequency", n3_value),
    ];
    for (name, form) in closed_forms {
        if let Ok(v) = form(&freqs) {
            values.push((name.to_string(), v));
        }
    }
    for s in EnumerationStrategy::ALL {
        let limit = match s {
            EnumerationStrategy::BruteForce => VERIFY_BRUTE_LIMIT,
            EnumerationStrategy::MirrorHalved => VERIFY_MIRROR_LIMIT,
            EnumerationStrategy::MeetInMiddle => usize::MAX,
        };
        if n > limit {
            skipped.push(format!("engine:{s} (n > {limit})"));
            continue;
        }
        values.push((format!("engine:{s}"), integral_coefficient(&freqs, s)?));
    }

    let mut disagreements = Vec::new();
    for (i, (left, a)) in values.iter().enumerate() {
        for (right, b) in &values[i + 1..] {
            if a != b {
                disagreements.push(Disagreement {
                    left: left.clone(),
                    right: right.clone(),
                });
            }
        }
    }

    let reference = &values.last().expect("meet-in-the-middle always runs").1;
    warn_if_nonpositive(reference.coefficient());
    let check = crosscheck_against(&freqs, reference, tolerance)
        .map_err(|e| Failure::Verification(format!("quadrature: {e}")))?;
    let quadrature = QuadratureRecord {
        value: check.quadrature.value,
        exact_value: check.exact_value,
        deviation: check.deviation,
        total_error_bound: check.quadrature.total_error_bound,
        radius: check.quadrature.radius,
        panels: check.quadrature.panels,
        passed: check.passed,
    };
    let all_agree = disagreements.is_empty() && quadrature.passed;
    let report = VerifyReport {
        freqs: freqs.entries().iter().map(ToString::to_string).collect(),
        classification: classify_dominance(&freqs).kind.to_string(),
        values: values
            .iter()
            .map(|(m, v)| MethodValue {
                method: m.clone(),
                coefficient: v.coefficient().to_string(),
            })
            .collect(),
        skipped,
        disagreements,
        quadrature,
        all_agree,
    };

    if json {
        print_json(&report);
    } else {
        print_verify_text(&report, tolerance);
    }
    if let Some(d) = report.disagreements.first() {
        return Err(Failure::Verification(format!(
            "{} disagrees with {}",
            d.left, d.right
        )));
    }
    if !report.quadrature.passed {
        return Err(Failure::Verification(format!(
            "quadrature deviates by {:e}, bound {:e}",
            report.quadrature.deviation, report.quadrature.total_error_bound
        )));
    }
    Ok(())
}

fn print_verify_text(report: &VerifyReport, tolerance: f64) {
    println!("freqs          {}", report.freqs.join(" "));
    println!("classification {}", report.classification);
    let width = report
        .values
        .iter()
        .map(|v| v.method.len())
        .max()
        .unwrap_or(0);
    for v in &report.values {
        println!("  {:<width$}  {}", v.method, v.coefficient);
    }
    for s in &report.skipped {
        println!("  skipped {s}");
    }
    // Pairwise agreement matrix, methods numbered in the order listed above.
    print!("\n    ");
    for j in 0..report.values.len() {
        print!("{:>3}", j + 1);
    }
    println!();
    for (i, a) in report.values.iter().enumerate() {
        print!("{:>3} ", i + 1);
        for b in &report.values {
            print!(
                "{:>3}",
                if a.coefficient == b.coefficient {
                    "="
                } else {
                    "x"
                }
            );
        }
        println!();
    }
    let q = &report.quadrature;
    println!(
        "\nquadrature     {:.12}  exact {:.12}  |diff| {:.2e}  bound {:.2e}  target {tolerance:.1e}  R {:.3e}  {}",
        q.value,
        q.exact_value,
        q.deviation,
        q.total_error_bound,
        q.radius,
        if q.passed { "within bound" } else { "OUTSIDE BOUND" }
    );
    println!(
        "{}",
        if report.all_agree {
            "all agree"
        } else {
            "DISAGREEMENT"
        }
    );
}
