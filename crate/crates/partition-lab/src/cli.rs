//! Command-line interface.
//!
//! Subcommands:
//!
//! * `compute`: one `p(n)` by a chosen method, optionally cross-checked;
//! * `table`: the level/index-vector table for `n = 1 ..= max_n`;
//! * `verify`: the named verification suites;
//! * `qbinom`: one Gaussian binomial, optionally with coefficient witnesses;
//! * `bench`: wall-clock timings, anchored against known values first.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check fails,
//! 2 for usage errors (bad arguments, cap and domain refusals, unreadable
//! cache files).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::binomial;

use crate::error::Error;
use crate::estimate::hr_leading_estimate;
use crate::euler::PartitionTable;
use crate::identities::coefficient_witnesses;
use crate::levels::{
    index_vectors, isqrt, p_combinatorial, p_combinatorial_parallel, s_inner, s_level,
    LevelBreakdown, LevelIndexVector,
};
use crate::partition::enumerate_partitions;
use crate::qpoly::{qbinom, QPolynomial};
use crate::verify::{run_default_suites, run_suite, SuiteId, DEFAULT_SUITES};
use crate::CountValue;

/// `table` refuses `max_n` beyond this even before counting columns.
pub const TABLE_MAX_N_CAP: u64 = 10_000;
/// `table` refuses layouts with more columns than this; the sub-column
/// count grows super-polynomially with `max_n`.
pub const TABLE_COLUMN_CAP: u64 = 20_000;
/// `verify` sweep bound; full-range suites cost roughly `max_n^3` additions.
pub const VERIFY_MAX_N_CAP: u64 = 1_000;
/// `qbinom` argument bound; the polynomial has `k(n-k) + 1` coefficients.
pub const QBINOM_CLI_CAP: u32 = 200;
/// `bench` size bound.
pub const BENCH_MAX_N_CAP: u64 = 10_000;

/// Landmark values used to anchor benchmarks before timings are reported.
const ANCHORS: &[(u64, &str)] = &[
    (10, "42"),
    (50, "204226"),
    (100, "190569292"),
    (200, "3972999029388"),
    (500, "2300165032574323995027"),
    (1000, "24061467864032622473692149727991"),
];

#[derive(Parser)]
#[command(
    name = "partition-lab",
    version,
    about = "Exact partition counting by independent methods, with verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute p(n) by one method.
    Compute(ComputeArgs),
    /// Print the per-level table for n = 1 ..= max_n.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Print one Gaussian binomial coefficient polynomial.
    Qbinom(QbinomArgs),
    /// Time the core computations, after anchoring them to known values.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Enumerate every partition (capped).
    Bruteforce,
    /// Pentagonal-number recurrence.
    Euler,
    /// Sum of levels S_1 + ... + S_K.
    Combinatorial,
    /// Floating-point leading-term estimate.
    Estimate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFormat {
    Json,
    Text,
}

#[derive(Args)]
struct ComputeArgs {
    /// Target index.
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = Method::Combinatorial)]
    method: Method,
    #[arg(long, value_enum, default_value_t = ComputeFormat::Text)]
    format: ComputeFormat,
    /// Cross-check all exact methods (enumeration joins when n <= 60);
    /// any disagreement exits 1.
    #[arg(long)]
    check: bool,
    /// Euler-table cache file (falls back to PARTITION_LAB_CACHE).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Compute levels in parallel. Affects scheduling only; results are
    /// bit-identical.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Last row of the table.
    #[arg(long)]
    max_n: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// Euler-table cache file (falls back to PARTITION_LAB_CACHE).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep bound; suites with exponential oracles clip it further.
    #[arg(long, default_value_t = 40)]
    max_n: u64,
    /// Run a single suite by name instead of the default set.
    #[arg(long)]
    suite: Option<String>,
}

#[derive(Args)]
struct QbinomArgs {
    /// Upper argument of [n k].
    #[arg(long)]
    n: u32,
    /// Lower argument of [n k].
    #[arg(long)]
    k: u32,
    /// Also list the partitions witnessing the coefficient of q^r.
    #[arg(long, value_name = "R")]
    witness: Option<u64>,
    #[arg(long, value_enum, default_value_t = ComputeFormat::Text)]
    format: ComputeFormat,
}

#[derive(Args)]
struct BenchArgs {
    /// Size of each timed task.
    #[arg(long)]
    max_n: u64,
    /// Use the parallel level scheduler for the combinatorial task.
    #[arg(long)]
    parallel: bool,
    #[arg(long, value_enum, default_value_t = BenchFormat::Json)]
    format: BenchFormat,
}

/// A failed run, carrying its exit code.
enum Failure {
    /// Bad arguments or a refused input: exit 2.
    Usage(String),
    /// A mathematical cross-check failed: exit 1.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

/// Parses `std::env::args` and runs the chosen subcommand.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Table(args) => run_table(args),
        Command::Verify(args) => run_verify(args),
        Command::Qbinom(args) => run_qbinom(args),
        Command::Bench(args) => run_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(message)) => {
            eprintln!("verification failed: {message}");
            ExitCode::from(1)
        }
    }
}

/// The cache path: the `--cache` flag, else `PARTITION_LAB_CACHE`.
fn resolve_cache(flag: &Option<PathBuf>) -> Option<PathBuf> {
    flag.clone()
        .or_else(|| std::env::var_os("PARTITION_LAB_CACHE").map(PathBuf::from))
}

/// Loads (or starts) the Euler table, extends it through `n`, and saves it
/// back when a cache path is in play.
fn euler_table(n: u64, cache: Option<&Path>) -> Result<PartitionTable, Failure> {
    match cache {
        None => Ok(PartitionTable::build(n)),
        Some(path) => {
            let mut table = if path.exists() {
                PartitionTable::load_cache(path)?
            } else {
                PartitionTable::build(0)
            };
            table.extend_to(n);
            table.save_cache(path)?;
            Ok(table)
        }
    }
}

fn breakdown_for(n: u64, parallel: bool) -> LevelBreakdown {
    if parallel {
        p_combinatorial_parallel(n)
    } else {
        p_combinatorial(n)
    }
}

fn run_compute(args: ComputeArgs) -> Result<(), Failure> {
    if args.check && args.method == Method::Estimate {
        return Err(usage(
            "--check compares exact methods; run it with bruteforce, euler, or combinatorial",
        ));
    }
    let cache = resolve_cache(&args.cache);

    if args.check {
        let mut results: Vec<(&str, CountValue)> = Vec::new();
        results.push((
            "euler",
            euler_table(args.n, cache.as_deref())?.p(args.n).clone(),
        ));
        results.push((
            "combinatorial",
            breakdown_for(args.n, args.parallel).total().clone(),
        ));
        if args.n <= 60 {
            let count = enumerate_partitions(args.n)?.len();
            results.push(("bruteforce", CountValue::from(count)));
        }
        let (_, reference) = &results[0];
        if let Some((name, value)) = results.iter().find(|(_, v)| v != reference) {
            return Err(Failure::Verification(format!(
                "methods disagree at n = {}: euler = {reference}, {name} = {value}",
                args.n
            )));
        }
        let names: Vec<&str> = results.iter().map(|(name, _)| *name).collect();
        let line = format!(
            "check: {} agree on p({}) = {reference}",
            names.join(", "),
            args.n
        );
        match args.format {
            ComputeFormat::Text => println!("{line}"),
            // Keep stdout pure JSON; the note still reaches the terminal.
            ComputeFormat::Json => eprintln!("{line}"),
        }
    }

    match args.method {
        Method::Bruteforce => {
            let count = CountValue::from(enumerate_partitions(args.n)?.len());
            print_plain_count(args.n, "bruteforce", &count, args.format);
        }
        Method::Euler => {
            let value = euler_table(args.n, cache.as_deref())?.p(args.n).clone();
            print_plain_count(args.n, "euler", &value, args.format);
        }
        Method::Combinatorial => {
            let breakdown = breakdown_for(args.n, args.parallel);
            match args.format {
                ComputeFormat::Text => {
                    println!("p({}) = {}", breakdown.n(), breakdown.total());
                    for (level, value) in breakdown.per_level() {
                        println!("  S_{level}({}) = {value}", breakdown.n());
                    }
                    if breakdown.zero_convention() {
                        println!("  (no levels; p(0) = 1 by convention)");
                    }
                }
                ComputeFormat::Json => println!("{}", breakdown.to_json_string()),
            }
        }
        Method::Estimate => {
            if args.n == 0 {
                return Err(usage("the estimate is defined for n >= 1"));
            }
            let report = hr_leading_estimate(args.n);
            match args.format {
                ComputeFormat::Text => {
                    println!("p({}) ~ {}", report.n, report.estimate);
                    println!("rounded = {}", report.rounded);
                    println!("lambda = {}", report.lambda);
                }
                ComputeFormat::Json => {
                    let value = serde_json::json!({
                        "n": report.n,
                        "method": "estimate",
                        "lambda": report.lambda,
                        "estimate": report.estimate,
                        "rounded": report.rounded.to_string(),
                    });
                    println!("{value}");
                }
            }
        }
    }
    Ok(())
}

fn print_plain_count(n: u64, method: &str, value: &CountValue, format: ComputeFormat) {
    match format {
        ComputeFormat::Text => println!("p({n}) = {value}"),
        ComputeFormat::Json => {
            let value = serde_json::json!({
                "n": n,
                "method": method,
                "p": value.to_string(),
            });
            println!("{value}");
        }
    }
}

fn run_table(args: TableArgs) -> Result<(), Failure> {
    if args.max_n == 0 {
        return Err(usage("the table starts at n = 1; pass --max-n >= 1"));
    }
    if args.max_n > TABLE_MAX_N_CAP {
        return Err(usage(format!(
            "table max_n is capped at {TABLE_MAX_N_CAP}, got {}",
            args.max_n
        )));
    }
    let k_max = isqrt(args.max_n) as u32;

    // One sub-column per index vector, grouped by level; vectors that are
    // out of bounds for a given row contribute 0 there.
    let mut vector_columns: Vec<(u32, LevelIndexVector)> = Vec::new();
    for k in 3..=k_max {
        for v in index_vectors(k, args.max_n) {
            vector_columns.push((k, v));
        }
    }
    let columns = 2 + u64::from(k_max >= 1) + u64::from(k_max >= 2) + vector_columns.len() as u64;
    if columns > TABLE_COLUMN_CAP {
        return Err(Error::TableTooWide {
            max_n: args.max_n,
            columns,
            cap: TABLE_COLUMN_CAP,
        }
        .into());
    }

    let mut euler = euler_table(args.max_n, resolve_cache(&args.cache).as_deref())?;

    let mut header: Vec<String> = vec!["n".to_string()];
    if k_max >= 1 {
        header.push("S_1".to_string());
    }
    if k_max >= 2 {
        header.push("S_2".to_string());
    }
    header.extend(vector_columns.iter().map(|(_, v)| v.label()));
    header.push("p(n)".to_string());

    let mut rows: Vec<Vec<CountValue>> = Vec::new();
    for n in 1..=args.max_n {
        let mut row: Vec<CountValue> = vec![CountValue::from(n)];
        if k_max >= 1 {
            row.push(s_level(1, n));
        }
        if k_max >= 2 {
            row.push(s_level(2, n));
        }
        for (k, v) in &vector_columns {
            row.push(s_inner(*k, n, v));
        }
        row.push(euler.p(n).clone());
        rows.push(row);
    }

    match args.format {
        TableFormat::Csv => {
            println!("{}", header.join(","));
            for row in &rows {
                let cells: Vec<String> = row.iter().map(CountValue::to_string).collect();
                println!("{}", cells.join(","));
            }
        }
        TableFormat::Text => {
            // Zero cells render blank so the staircase of live columns
            // stays readable.
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|value| {
                            if value == &CountValue::from(0u32) {
                                String::new()
                            } else {
                                value.to_string()
                            }
                        })
                        .collect()
                })
                .collect();
            let mut widths: Vec<usize> = header.iter().map(String::len).collect();
            for row in &cells {
                for (width, cell) in widths.iter_mut().zip(row) {
                    *width = (*width).max(cell.len());
                }
            }
            let render = |fields: &[String]| {
                let padded: Vec<String> = fields
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &width)| format!("{cell:>width$}"))
                    .collect();
                padded.join("  ")
            };
            println!("{}", render(&header));
            for row in &cells {
                println!("{}", render(row));
            }
        }
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.max_n > VERIFY_MAX_N_CAP {
        return Err(usage(format!(
            "verify max_n is capped at {VERIFY_MAX_N_CAP}, got {}",
            args.max_n
        )));
    }
    match &args.suite {
        Some(name) => {
            let id = SuiteId::parse(name).ok_or_else(|| {
                let mut names: Vec<&str> = DEFAULT_SUITES.iter().map(|s| s.name()).collect();
                names.push(SuiteId::Durfee.name());
                usage(format!(
                    "unknown suite {name:?}; available: {}",
                    names.join(", ")
                ))
            })?;
            let outcome = run_suite(id, args.max_n);
            print_outcome_line(&outcome.suite, outcome.passed, &outcome.detail);
            if outcome.passed {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{}: {}",
                    outcome.suite, outcome.detail
                )))
            }
        }
        None => {
            let outcomes = run_default_suites(args.max_n);
            let mut first_failure: Option<String> = None;
            for outcome in &outcomes {
                print_outcome_line(&outcome.suite, outcome.passed, &outcome.detail);
                if !outcome.passed && first_failure.is_none() {
                    first_failure = Some(format!("{}: {}", outcome.suite, outcome.detail));
                }
            }
            // The Durfee census is reported but does not gate the exit code.
            let durfee = run_suite(SuiteId::Durfee, args.max_n);
            println!(
                "{}: {} (informational; {})",
                durfee.suite,
                if durfee.passed { "PASS" } else { "FAIL" },
                durfee.detail
            );
            match first_failure {
                None => Ok(()),
                Some(message) => Err(Failure::Verification(message)),
            }
        }
    }
}

fn print_outcome_line(suite: &str, passed: bool, detail: &str) {
    println!(
        "{suite}: {} ({detail})",
        if passed { "PASS" } else { "FAIL" }
    );
}

/// Renders `c q^e` with the usual conventions (`1` only for the constant
/// term, `q` instead of `q^1`).
fn monomial_string(coeff: &CountValue, exponent: usize) -> String {
    let power = match exponent {
        0 => String::new(),
        1 => "q".to_string(),
        e => format!("q^{e}"),
    };
    if power.is_empty() {
        coeff.to_string()
    } else if coeff == &CountValue::from(1u32) {
        power
    } else {
        format!("{coeff} {power}")
    }
}

fn polynomial_string(poly: &QPolynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| *c != &CountValue::from(0u32))
        .map(|(e, c)| monomial_string(c, e))
        .collect();
    terms.join(" + ")
}

fn run_qbinom(args: QbinomArgs) -> Result<(), Failure> {
    if args.n > QBINOM_CLI_CAP {
        return Err(usage(format!(
            "qbinom n is capped at {QBINOM_CLI_CAP}, got {}",
            args.n
        )));
    }
    let poly = qbinom(args.n, args.k);

    let witnesses = match args.witness {
        None => None,
        Some(r) => {
            if args.k > args.n {
                return Err(usage("witnesses need k <= n (the polynomial is zero)"));
            }
            // Read [n k] as [a+b a] with a = n - k, b = k.
            Some(coefficient_witnesses(
                u64::from(args.n - args.k),
                u64::from(args.k),
                r,
            )?)
        }
    };

    match args.format {
        ComputeFormat::Text => {
            println!("[{} {}] = {}", args.n, args.k, polynomial_string(&poly));
            match poly.degree() {
                Some(degree) => println!("degree = {degree}"),
                None => println!("degree = (zero polynomial)"),
            }
            if args.k <= args.n {
                println!(
                    "coefficient sum = {} = C({}, {})",
                    poly.coeff_sum(),
                    args.n,
                    args.k
                );
            }
            if let Some(w) = &witnesses {
                let r = w.report.r;
                println!();
                println!(
                    "coefficient of q^{r} in [{} {}] = {}",
                    args.n, args.k, w.report.coefficient
                );
                println!(
                    "partitions of {} into exactly {} parts, greatest part {}: {}",
                    w.report.n + w.report.m + 1 + r,
                    w.report.n + 1,
                    w.report.m + 1,
                    witness_list(&w.new_witnesses)
                );
                println!(
                    "partitions of {r} into at most {} parts, each at most {}: {}",
                    w.report.m,
                    w.report.n,
                    witness_list(&w.classical_witnesses)
                );
            }
        }
        ComputeFormat::Json => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(CountValue::to_string).collect();
            let mut value = serde_json::json!({
                "n": args.n,
                "k": args.k,
                "coeffs": coeffs,
                "degree": poly.degree(),
                "coeff_sum": poly.coeff_sum().to_string(),
            });
            if let Some(w) = &witnesses {
                let lists = serde_json::json!({
                    "r": w.report.r,
                    "coefficient": w.report.coefficient.to_string(),
                    "new_witnesses": strings_of(&w.new_witnesses),
                    "classical_witnesses": strings_of(&w.classical_witnesses),
                });
                value["witness"] = lists;
            }
            println!("{value}");
        }
    }
    Ok(())
}

fn strings_of(partitions: &[crate::partition::Partition]) -> Vec<String> {
    partitions
        .iter()
        .map(crate::partition::Partition::ascending_string)
        .collect()
}

fn witness_list(partitions: &[crate::partition::Partition]) -> String {
    if partitions.is_empty() {
        "(none)".to_string()
    } else {
        strings_of(partitions).join(", ")
    }
}

fn run_bench(args: BenchArgs) -> Result<(), Failure> {
    if args.max_n > BENCH_MAX_N_CAP {
        return Err(usage(format!(
            "bench max_n is capped at {BENCH_MAX_N_CAP}, got {}",
            args.max_n
        )));
    }

    // Anchor every timed computation against an independent value before
    // reporting any numbers.
    let table = PartitionTable::build(args.max_n);
    for &(n, expected) in ANCHORS.iter().filter(|(n, _)| *n <= args.max_n) {
        let got = table.get(n).expect("table covers the anchor");
        if got.to_string() != expected {
            return Err(Failure::Verification(format!(
                "euler_table anchor p({n}) = {got}, expected {expected}"
            )));
        }
    }
    let breakdown = breakdown_for(args.max_n, args.parallel);
    let reference = table.get(args.max_n).expect("table covers max_n");
    if breakdown.total() != reference {
        return Err(Failure::Verification(format!(
            "p_combinatorial({}) = {}, euler gives {reference}",
            args.max_n,
            breakdown.total(),
        )));
    }
    let k = isqrt(args.max_n) as u32;
    let qb = qbinom(2 * k, k);
    if qb.coeff_sum() != binomial(CountValue::from(2 * k), CountValue::from(k)) {
        return Err(Failure::Verification(format!(
            "qbinom(2K, K) coefficient sum mismatch at K = {k}"
        )));
    }

    let mut timings: Vec<(&str, u64, u128)> = Vec::new();
    let start = Instant::now();
    let rebuilt = PartitionTable::build(args.max_n);
    timings.push(("euler_table", args.max_n, start.elapsed().as_millis()));
    std::hint::black_box(&rebuilt);

    let start = Instant::now();
    let rerun = breakdown_for(args.max_n, args.parallel);
    timings.push(("p_combinatorial", args.max_n, start.elapsed().as_millis()));
    std::hint::black_box(&rerun);

    let start = Instant::now();
    let repoly = qbinom(2 * k, k);
    timings.push(("qbinom", u64::from(2 * k), start.elapsed().as_millis()));
    std::hint::black_box(&repoly);

    match args.format {
        BenchFormat::Json => {
            let entries: Vec<serde_json::Value> = timings
                .iter()
                .map(|(task, n, millis)| {
                    serde_json::json!({
                        "task": task,
                        "n": n,
                        "millis": *millis as u64,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(entries));
        }
        BenchFormat::Text => {
            for (task, n, millis) in &timings {
                println!("{task} (n = {n}): {millis} ms");
            }
        }
    }
    Ok(())
}
