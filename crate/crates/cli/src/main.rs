//! `latcount`: exact lattice-walk endpoint counts from the command line.
//!
//! Exit codes: 0 success, 1 usage or guard error, 2 verification or digest
//! mismatch.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latcount_core::coefficients::CoeffVector;
use latcount_core::{
    digests_agree, format_rational, run_bench, series_counts, verify, BernoulliTable, BruteLimit,
    Counter, Engine, Error, WalkSpec,
};
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "latcount",
    version,
    about = "Count distinct endpoints of lattice walks exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count endpoints of n-step walks in d dimensions.
    Count {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: u64,
        /// brute, parity, recurrence, closed, series, poly, or all
        #[arg(long, default_value = "closed")]
        engine: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Plain)]
        format: TextFormat,
    },
    /// Counts for n = 0..=n_max at fixed d.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Polynomial coefficients c(d,d), ..., c(d,0).
    Poly {
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Cross-check every engine and coefficient route.
    Verify {
        #[arg(long = "d-max", default_value_t = 4)]
        d_max: usize,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
    /// Time engines against each other.
    Bench {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: u64,
        /// Comma-separated engine names.
        #[arg(long, value_delimiter = ',', required = true)]
        engines: Vec<String>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Bernoulli numbers B_0..=B_k_max (B_1 = -1/2).
    Bernoulli {
        #[arg(long = "k-max")]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Json,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Json,
    Latex,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage_error { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}

fn counter() -> Result<Counter, Failure> {
    Ok(Counter::new(BruteLimit::from_env()?))
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Count {
            d,
            n,
            engine,
            format,
        } => cmd_count(d, n, &engine, format),
        Command::Table { d, n_max, format } => cmd_table(d, n_max, format),
        Command::Poly { d, format } => cmd_poly(d, format),
        Command::Verify {
            d_max,
            n_max,
            format,
        } => cmd_verify(d_max, n_max, format),
        Command::Bench {
            d,
            n,
            engines,
            reps,
        } => cmd_bench(d, n, &engines, reps),
        Command::Bernoulli { k_max, format } => cmd_bernoulli(k_max, format),
    }
}

#[derive(Serialize)]
struct CountOutput {
    d: usize,
    n: u64,
    engine: &'static str,
    count: String,
}

#[derive(Serialize)]
struct AllCountsOutput {
    d: usize,
    n: u64,
    engine: &'static str,
    counts: BTreeMap<&'static str, String>,
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    count: String,
}

#[derive(Serialize)]
struct TableOutput {
    d: usize,
    counts: Vec<TableRow>,
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serializable output")
    );
}

fn cmd_count(d: usize, n: u64, engine: &str, format: TextFormat) -> CmdResult {
    let spec = WalkSpec::new(d, n)?;
    let counter = counter()?;
    if engine != "all" {
        let engine: Engine = engine.parse()?;
        let count = counter.count(engine, spec)?.to_string();
        match format {
            TextFormat::Json => print_json(&CountOutput {
                d,
                n,
                engine: engine.name(),
                count,
            }),
            TextFormat::Plain => println!("{count}"),
        }
        return Ok(());
    }

    // `all` skips the enumerator outside its guard instead of failing.
    let mut counts = Vec::new();
    for engine in Engine::ALL {
        if engine == Engine::Brute && !counter.brute_limit.allows(spec) {
            continue;
        }
        counts.push((engine.name(), counter.count(engine, spec)?.to_string()));
    }
    counts.sort();
    match format {
        TextFormat::Json => {
            print_json(&AllCountsOutput {
                d,
                n,
                engine: "all",
                counts: counts.iter().cloned().collect(),
            });
        }
        TextFormat::Plain => {
            for (name, count) in &counts {
                println!("{name} {count}");
            }
        }
    }
    if counts.windows(2).any(|w| w[0].1 != w[1].1) {
        return Err(Failure::Mismatch(format!(
            "engines disagree at d={d}, n={n}"
        )));
    }
    Ok(())
}

fn cmd_table(d: usize, n_max: u64, format: TableFormat) -> CmdResult {
    let table = series_counts(d, n_max)?;
    match format {
        TableFormat::Csv => {
            let mut out = String::from("n,count\n");
            for (n, count) in table.counts.iter().enumerate() {
                out.push_str(&format!("{n},{count}\n"));
            }
            print!("{out}");
        }
        TableFormat::Json => {
            let rows: Vec<_> = table
                .counts
                .iter()
                .enumerate()
                .map(|(n, count)| TableRow {
                    n: n as u64,
                    count: count.to_string(),
                })
                .collect();
            print_json(&TableOutput { d, counts: rows });
        }
    }
    Ok(())
}

fn latex_term(coeff: &latcount_core::Rational, power: usize) -> String {
    let magnitude = coeff.abs();
    let number = if magnitude.is_integer() {
        magnitude.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom())
    };
    let unit = magnitude.numer() == magnitude.denom();
    match power {
        0 => number,
        1 if unit => "n".to_string(),
        1 => format!("{number} n"),
        _ if unit => format!("n^{{{power}}}"),
        _ => format!("{number} n^{{{power}}}"),
    }
}

fn latex_polynomial(c: &CoeffVector) -> String {
    let d = c.d();
    let mut out = String::new();
    for (i, coeff) in c.entries().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        let term = latex_term(coeff, d - i);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn cmd_poly(d: usize, format: PolyFormat) -> CmdResult {
    let c = counter()?.coeffs.get(d)?;
    match format {
        PolyFormat::Json => {
            let entries: Vec<String> = c.entries().iter().map(format_rational).collect();
            print_json(&entries);
        }
        PolyFormat::Latex => println!("{}", latex_polynomial(&c)),
    }
    Ok(())
}

fn cmd_verify(d_max: usize, n_max: u64, format: TextFormat) -> CmdResult {
    let report = verify(d_max, n_max, &counter()?)?;
    match format {
        TextFormat::Json => print_json(&report),
        TextFormat::Plain => {
            println!(
                "grid: {} cells over d=1..={}, n=0..={}",
                report.grid.len(),
                report.d_max,
                report.n_max
            );
            println!("coefficient checks: {}", report.coefficient_checks.len());
            println!("mismatches: {}", report.mismatches.len());
            for m in &report.mismatches {
                println!("  {m}");
            }
            for note in &report.notes {
                println!("note: {note}");
            }
        }
    }
    if !report.is_ok() {
        return Err(Failure::Mismatch(format!(
            "{} verification mismatches",
            report.mismatches.len()
        )));
    }
    Ok(())
}

fn cmd_bench(d: usize, n: u64, engines: &[String], reps: usize) -> CmdResult {
    let spec = WalkSpec::new(d, n)?;
    let engines = engines
        .iter()
        .map(|name| name.trim().parse::<Engine>())
        .collect::<Result<Vec<_>, _>>()?;
    let records = run_bench(spec, &engines, reps, &counter()?)?;
    print_json(&records);
    if !digests_agree(&records) {
        return Err(Failure::Mismatch(format!(
            "engine digests disagree at d={d}, n={n}"
        )));
    }
    Ok(())
}

fn cmd_bernoulli(k_max: usize, format: TextFormat) -> CmdResult {
    let table = BernoulliTable::new(k_max);
    let values: Vec<String> = table.values().iter().map(format_rational).collect();
    match format {
        TextFormat::Json => print_json(&values),
        TextFormat::Plain => {
            for (k, v) in values.iter().enumerate() {
                println!("{k} {v}");
            }
        }
    }
    Ok(())
}
