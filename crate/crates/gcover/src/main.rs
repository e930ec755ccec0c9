//! Command-line front end: single-group analysis, catalog listing, and the
//! named verification suites.
//!
//! Exit codes: 0 success, 1 failed verification assertion, 2 parse error,
//! 3 cap exceeded.

use clap::{Parser, Subcommand};
use groupcover::cover::DEFAULT_SIGMA_CAP;
use groupcover::{
    all_subgroups, analyze, catalog, csv_header, enumerate_three_covers, parse_group_spec, sigma,
    GroupError, SigmaValue, SpecError, Suite,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gcover", version, about = "Finite-group covering analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group and print its full report
    Analyze {
        /// Group spec, e.g. "C12", "C2 x C2", "Q8 x C3", "E(2,3)", "SD(5,4,2)"
        spec: String,
        /// Emit the report as a single JSON line
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit the report as CSV, header plus one row
        #[arg(long)]
        csv: bool,
    },
    /// Run a named verification suite over the built-in catalog
    Verify {
        /// One of: theorem-a, theorem-b, corollary-c, theorem-d, corollary-e,
        /// corollary-f, c3-formulas, all
        suite: String,
        /// Only consider groups of order at most this bound
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Emit one JSON line per check instead of the human stream
        #[arg(long)]
        json: bool,
    },
    /// Show the built-in catalog
    Catalog {
        /// List every entry with its expected values
        #[arg(long)]
        list: bool,
    },
    /// Compute the minimal covering number and a witness cover
    Sigma {
        /// Group spec
        spec: String,
        /// Ceiling for the cover-size search
        #[arg(long, default_value_t = DEFAULT_SIGMA_CAP)]
        cap: usize,
    },
    /// Enumerate the coverings by three proper subgroups
    Covers {
        /// Group spec
        spec: String,
        /// Print at most this many triples
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn spec_error_code(err: &SpecError) -> ExitCode {
    match err {
        SpecError::Build {
            source: GroupError::TooLarge { .. },
            ..
        } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { spec, json, csv } => run_analyze(&spec, json, csv),
        Command::Verify {
            suite,
            max_order,
            json,
        } => run_verify(&suite, max_order, json),
        Command::Catalog { list } => run_catalog(list),
        Command::Sigma { spec, cap } => run_sigma(&spec, cap),
        Command::Covers { spec, limit } => run_covers(&spec, limit),
    }
}

fn run_analyze(spec: &str, json: bool, csv: bool) -> ExitCode {
    match analyze(spec) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json_line());
            } else if csv {
                println!("{}", csv_header());
                println!("{}", report.to_csv_row());
            } else {
                print!("{}", report.to_human());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            spec_error_code(&err)
        }
    }
}

fn run_verify(suite_token: &str, max_order: usize, json: bool) -> ExitCode {
    let Some(suite) = Suite::from_token(suite_token) else {
        eprintln!(
            "error: unknown suite {suite_token:?}; expected one of {}",
            Suite::TOKENS.join(", ")
        );
        return ExitCode::from(2);
    };
    let outcomes = groupcover::verify_suites(suite, max_order);
    let mut all_passed = true;
    for outcome in &outcomes {
        if json {
            for c in &outcome.checks {
                println!("{}", serde_json::to_string(c).expect("check serializes"));
            }
        } else {
            println!("[suite {}]", outcome.suite);
            for c in &outcome.checks {
                if c.passed {
                    println!("  ok   {}", c.name);
                } else {
                    println!("  FAIL {}: {}", c.name, c.detail);
                }
            }
            println!(
                "suite {}: {} checks, {} failures",
                outcome.suite,
                outcome.checks.len(),
                outcome.failure_count()
            );
        }
        all_passed &= outcome.all_passed();
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_catalog(list: bool) -> ExitCode {
    let entries = catalog();
    if list {
        for e in entries {
            let sigma = e
                .sigma
                .map(|s| s.to_string())
                .unwrap_or_else(|| "-".into());
            let c3 = e.c3.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
            println!(
                "{:<12} sigma {:<10} c3 {:<4} {}",
                e.spec,
                sigma,
                c3,
                e.note.as_deref().unwrap_or("")
            );
        }
    } else {
        let orders: Vec<usize> = entries
            .iter()
            .map(|e| parse_group_spec(&e.spec).expect("catalog builds").order())
            .collect();
        println!(
            "{} catalog entries, orders {} to {}",
            entries.len(),
            orders.iter().min().unwrap(),
            orders.iter().max().unwrap()
        );
    }
    ExitCode::SUCCESS
}

fn run_sigma(spec: &str, cap: usize) -> ExitCode {
    let g = match parse_group_spec(spec) {
        Ok(g) => g,
        Err(err) => {
            eprintln!("error: {err}");
            return spec_error_code(&err);
        }
    };
    let l = all_subgroups(&g);
    let result = sigma(&l, cap);
    println!("sigma({}) = {}", g.spec(), result.value);
    for &i in &result.witness {
        let h = l.get(i);
        println!("  size {:<5} members {}", h.size(), h.to_hex());
    }
    if result.value == SigmaValue::ExceedsCap {
        println!("  no cover with at most {cap} subgroups; raise --cap");
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_covers(spec: &str, limit: Option<usize>) -> ExitCode {
    let g = match parse_group_spec(spec) {
        Ok(g) => g,
        Err(err) => {
            eprintln!("error: {err}");
            return spec_error_code(&err);
        }
    };
    let l = all_subgroups(&g);
    let triples = enumerate_three_covers(&l);
    println!("c3({}) = {}", g.spec(), triples.len());
    let shown = limit.unwrap_or(triples.len()).min(triples.len());
    for t in triples.iter().take(shown) {
        let [a, b, c] = t.members(&l);
        let meet = t.meet(&l);
        println!(
            "  sizes {}/{}/{} members {} {} {} meet {}",
            a.size(),
            b.size(),
            c.size(),
            a.to_hex(),
            b.to_hex(),
            c.to_hex(),
            meet.to_hex()
        );
    }
    if triples.len() > shown {
        println!("  ... {} more", triples.len() - shown);
    }
    ExitCode::SUCCESS
}
