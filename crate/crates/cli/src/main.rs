use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use polyeuler::table::{FamilyName, ParamKind, Table};
use polyeuler::verify::{self, SweepConfig, TheoremId};
use polyeuler::{rational, Error};

/// Exact poly-Euler, poly-Bernoulli and related numbers.
#[derive(Parser)]
#[command(name = "polyeuler", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a range of values as a table (rows n, columns k or N).
    Seq {
        #[arg(value_parser = parse_family)]
        family: FamilyName,
        /// Index range, `a..b` inclusive or a single integer.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        n: IndexRange,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        k: Option<IndexRange>,
        #[arg(long = "N", allow_hyphen_values = true, value_parser = parse_range)]
        level: Option<IndexRange>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Print a single value.
    Value {
        #[arg(value_parser = parse_family)]
        family: FamilyName,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long = "N")]
        level: Option<u32>,
    },
    /// Run identity checkers and print one JSON report per checker.
    Verify {
        /// One of recurrence-e2, denominator, sum1, duality, pb-expansion,
        /// positivity, congruences, products, oracle, or `all`.
        #[arg(value_parser = parse_theorems)]
        theorem: Theorems,
        #[arg(long, default_value_t = SweepConfig::default().nmax)]
        nmax: usize,
        #[arg(long, default_value_t = SweepConfig::default().kmax)]
        kmax: usize,
        #[arg(long, default_value_t = SweepConfig::default().pmax)]
        pmax: u64,
        #[arg(long = "Nmax", default_value_t = SweepConfig::default().level_max)]
        level_max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone)]
struct Theorems(Vec<TheoremId>);

#[derive(Clone, Debug, PartialEq)]
struct IndexRange(Vec<i64>);

fn parse_family(s: &str) -> Result<FamilyName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorems(s: &str) -> Result<Theorems, String> {
    if s == "all" {
        return Ok(Theorems(TheoremId::ALL.to_vec()));
    }
    s.parse().map(|t| Theorems(vec![t])).map_err(|e: Error| e.to_string())
}

/// `a..b` (inclusive, either direction) or a single integer.
fn parse_range(s: &str) -> Result<IndexRange, String> {
    let bad = || format!("expected an integer or a range `a..b`, got `{s}`");
    let values = match s.split_once("..") {
        None => s.trim().parse().map(|v| vec![v]).map_err(|_| bad())?,
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if a <= b {
                (a..=b).collect()
            } else {
                (b..=a).rev().collect()
            }
        }
    };
    Ok(IndexRange(values))
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

fn param_for(family: FamilyName, k: Option<i64>, level: Option<i64>) -> i64 {
    match family.param() {
        ParamKind::None => 0,
        ParamKind::K => k.unwrap_or_else(|| usage_error(format!("family `{}` requires --k", family.as_str()))),
        ParamKind::Level => level.unwrap_or_else(|| usage_error(format!("family `{}` requires --N", family.as_str()))),
    }
}

fn cmd_seq(
    family: FamilyName,
    n: IndexRange,
    k: Option<IndexRange>,
    level: Option<IndexRange>,
    format: Format,
) -> ExitCode {
    let ns: Vec<usize> = n
        .0
        .into_iter()
        .map(|v| usize::try_from(v).unwrap_or_else(|_| usage_error(format!("--n must be nonnegative, got {v}"))))
        .collect();
    let params = match family.param() {
        ParamKind::None => Vec::new(),
        ParamKind::K => k.unwrap_or_else(|| usage_error(format!("family `{}` requires --k", family.as_str()))).0,
        ParamKind::Level => {
            level.unwrap_or_else(|| usage_error(format!("family `{}` requires --N", family.as_str()))).0
        }
    };
    let table = Table::for_family(family, &params, &ns).unwrap_or_else(|e| usage_error(e));
    let out = match format {
        Format::Md => table.to_markdown(),
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json() + "\n",
    };
    print!("{out}");
    ExitCode::SUCCESS
}

fn cmd_value(family: FamilyName, n: usize, k: Option<i64>, level: Option<u32>) -> ExitCode {
    let param = param_for(family, k, level.map(i64::from));
    let value = family
        .bind(param)
        .and_then(|f| f.value(n))
        .unwrap_or_else(|e| usage_error(e));
    println!("{}", rational::render(&value));
    ExitCode::SUCCESS
}

fn cmd_verify(theorems: &[TheoremId], cfg: SweepConfig) -> ExitCode {
    let reports = verify::run_many(theorems, &cfg);
    let mut stdout = std::io::stdout().lock();
    let mut all_passed = true;
    for report in reports {
        match report {
            Ok(r) => {
                all_passed &= r.passed;
                let _ = writeln!(stdout, "{}", r.to_json());
            }
            Err(e) => usage_error(e),
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Seq { family, n, k, level, format } => cmd_seq(family, n, k, level, format),
        Command::Value { family, n, k, level } => cmd_value(family, n, k, level),
        Command::Verify { theorem, nmax, kmax, pmax, level_max } => {
            cmd_verify(&theorem.0, SweepConfig { nmax, kmax, pmax, level_max })
        }
    }
}
