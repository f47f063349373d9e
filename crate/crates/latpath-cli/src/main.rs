//! Command-line front end for the `latpath` library.
//!
//! Exit codes: 0 when the requested value was produced (or a check came out
//! true), 1 for operational failures and for checks, verifications, or scans
//! that come out false, 2 for command-line usage errors (clap's default).

mod oeis;

use std::io;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use latpath::{
    binomial, count_constrained, count_four_step, count_four_step_upper, count_two_step,
    diag_antidiagonal_sequence, diag_polynomial, is_log_concave, is_q_unimodal, is_unimodal,
    product_sequence, reflect_tail, sagan_sequence, scan_simion, simion_sequence,
    upper_product_sequence, verify_suite, ExactRational, Partition, QPolynomial, ReflectionLine,
    ScanReport, Scope, VerifyReport,
};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "latpath",
    version,
    about = "Exact lattice-path counts, reflections, and unimodality checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count the paths in a family
    #[command(subcommand)]
    Count(CountCmd),
    /// Print a path-counting polynomial in q
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Print a coefficient sequence
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Test terms read from stdin; prints true or false
    #[command(subcommand)]
    Check(CheckCmd),
    /// Rewrite a path by reflecting everything after its last meeting with a line
    Reflect {
        /// Step word over N, E, S, W, D, starting at the origin
        #[arg(long)]
        path: latpath::Path,
        /// Line as JSON, e.g. {"orientation":"diagonal","c":0}
        #[arg(long, value_parser = parse_line)]
        line: ReflectionLine,
    },
    /// Run a verification battery and report per-case results
    Verify {
        /// One of: all, binomial, four-step, qpoly, simion
        #[arg(long)]
        scope: Scope,
        /// Replace every size bound in the battery with this value
        #[arg(long)]
        n_max: Option<u64>,
        /// Print the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively test a conjecture over a box of inputs
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Search the OEIS for matching sequences (network required)
    Oeis {
        /// At least four comma-separated integer terms
        #[arg(long, allow_hyphen_values = true)]
        terms: String,
        /// Maximum number of matches to print
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
}

#[derive(Subcommand)]
enum CountCmd {
    /// Paths from the origin to (i, j) with unit north and east steps
    TwoStep {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
    },
    /// Length-n paths from the origin to (i, j) with unit steps in all four directions
    FourStep {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Keep only paths that never leave the upper half plane
        #[arg(long)]
        upper: bool,
    },
    /// North/east paths to (i, j) that stay clear of the diagram of lambda
    Constrained {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        /// Weakly decreasing positive parts, e.g. 3,2,1; empty for no constraint
        #[arg(long)]
        lambda: Partition,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Distribution of the diagonal-step count over paths to (i, j)
    Diag {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        /// Evaluate at an exact rational such as -2 or 1/2 instead of printing terms
        #[arg(long, allow_hyphen_values = true)]
        at: Option<ExactRational>,
    },
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Row n of the binomial-coefficient triangle
    BinomialRow {
        #[arg(long)]
        n: u64,
    },
    /// C(n, l-k) * C(n, k) for k = 0..l
    Product {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        /// Use upper-half-plane path counts in place of the raw products
        #[arg(long)]
        upper: bool,
    },
    /// Diagonal-count polynomials for paths to (k, n-k), k = 0..n, one per line
    Diag {
        #[arg(long)]
        n: u64,
    },
    /// Diagram-avoiding path counts to (k, n-k) with the same lambda at every k
    Simion {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: u64,
    },
    /// Diagram-avoiding path counts to (k, n-k) with lambda reshaped at each k
    Sagan {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Terms rise then fall: no strict ascent after a strict descent
    Unimodal,
    /// Every interior term's square dominates the product of its neighbors
    LogConcave,
    /// Coefficient-wise unimodality of polynomials, one per line
    QUnimodal,
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Unimodality of fixed-diagram counts for every partition in a box
    Simion {
        #[arg(long)]
        max_part: u64,
        #[arg(long)]
        max_rows: u64,
        #[arg(long)]
        n_max: u64,
        /// Print the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

fn parse_line(s: &str) -> Result<ReflectionLine, String> {
    serde_json::from_str(s).map_err(|e| format!("line must be orientation JSON: {e}"))
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Count(count) => {
            let value = match count {
                CountCmd::TwoStep { i, j } => count_two_step(i, j),
                CountCmd::FourStep {
                    i,
                    j,
                    n,
                    upper: false,
                } => count_four_step(i, j, n),
                CountCmd::FourStep {
                    i,
                    j,
                    n,
                    upper: true,
                } => count_four_step_upper(i, j, n),
                CountCmd::Constrained { i, j, lambda } => count_constrained(i, j, &lambda),
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Poly(PolyCmd::Diag { i, j, at }) => {
            let poly = diag_polynomial(i, j);
            match at {
                Some(point) => println!("{}", poly.evaluate(&point)),
                None => println!("{poly}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Seq(seq) => run_seq(seq),
        Cmd::Check(check) => run_check(check),
        Cmd::Reflect { path, line } => {
            let image = reflect_tail(&path, line)?;
            println!("{image}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { scope, n_max, json } => {
            let report = verify_suite(scope, n_max);
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                print_verify(&report);
            }
            Ok(pass_fail(report.passed()))
        }
        Cmd::Scan(ScanCmd::Simion {
            max_part,
            max_rows,
            n_max,
            json,
        }) => {
            let report = scan_simion(max_part, max_rows, n_max);
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                print_scan(&report);
            }
            Ok(pass_fail(report.passed()))
        }
        Cmd::Oeis { terms, limit } => run_oeis(&terms, limit),
    }
}

fn run_seq(seq: SeqCmd) -> CmdResult {
    let terms = match seq {
        SeqCmd::BinomialRow { n } => {
            let n = n as i64;
            (0..=n).map(|k| binomial(n, k).expect("n >= 0")).collect()
        }
        SeqCmd::Product { n, l, upper: false } => product_sequence(n, l),
        SeqCmd::Product { n, l, upper: true } => upper_product_sequence(n, l),
        SeqCmd::Diag { n } => {
            for poly in diag_antidiagonal_sequence(n) {
                println!("{poly}");
            }
            return Ok(ExitCode::SUCCESS);
        }
        SeqCmd::Simion { lambda, n } => simion_sequence(&lambda, n),
        SeqCmd::Sagan { lambda, n } => sagan_sequence(&lambda, n),
    };
    println!("{}", join_terms(&terms));
    Ok(ExitCode::SUCCESS)
}

fn run_check(check: CheckCmd) -> CmdResult {
    let input = io::read_to_string(io::stdin().lock())?;
    let holds = match check {
        CheckCmd::Unimodal => is_unimodal(&parse_terms(&input)?),
        CheckCmd::LogConcave => is_log_concave(&parse_terms(&input)?),
        CheckCmd::QUnimodal => {
            let polys = input
                .lines()
                .map(str::trim)
                .filter(|line| !line.is_empty())
                .map(QPolynomial::from_str)
                .collect::<Result<Vec<_>, _>>()?;
            is_q_unimodal(&polys)
        }
    };
    println!("{holds}");
    Ok(pass_fail(holds))
}

fn run_oeis(terms: &str, limit: usize) -> CmdResult {
    let terms = match parse_terms(terms) {
        Ok(terms) if terms.len() >= 4 => terms,
        Ok(terms) => {
            eprintln!(
                "error: --terms needs at least 4 comma-separated integers, got {}",
                terms.len()
            );
            return Ok(ExitCode::from(2));
        }
        Err(err) => {
            eprintln!("error: --terms: {err}");
            return Ok(ExitCode::from(2));
        }
    };
    let matches = oeis::search(&terms, limit)?;
    if matches.is_empty() {
        println!("no matches");
    } else {
        for m in matches {
            println!(
                "{}  matched {} terms  {}",
                m.sequence_id, m.matched_terms, m.name
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_terms(text: &str) -> Result<Vec<BigInt>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|piece| {
            BigInt::from_str(piece.trim()).map_err(|e| format!("bad term {:?}: {e}", piece.trim()))
        })
        .collect()
}

fn join_terms(terms: &[BigInt]) -> String {
    terms
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn pass_fail(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_verify(report: &VerifyReport) {
    println!(
        "suite {}: {}/{} cases passed in {} ms",
        report.suite_name, report.cases_passed, report.cases_run, report.wall_time_ms
    );
    for failure in &report.failures {
        println!("FAIL {}", failure.case_id);
        println!("  inputs:   {}", failure.inputs);
        println!("  expected: {}", failure.expected);
        println!("  actual:   {}", failure.actual);
    }
}

fn print_scan(report: &ScanReport) {
    println!(
        "checked {} sequences, {} failed",
        report.checked,
        report.failures.len()
    );
    for failure in &report.failures {
        println!(
            "FAIL lambda=({}) n={}: {}",
            failure.lambda,
            failure.n,
            join_terms(&failure.sequence)
        );
    }
}
