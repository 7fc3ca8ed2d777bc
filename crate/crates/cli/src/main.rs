//! Command-line front end for the exact congruence library: `compute` for
//! single values and rows, `verify` for the congruence check registry,
//! `identities` for the exact-identity suite, and `search` for the Wilson,
//! Kummer, and irregular scans.
//!
//! Reports emit as aligned text, CSV, or JSON and are byte-deterministic
//! for a given invocation. Exit codes follow the verifier contract: 0 when
//! nothing failed, 1 when at least one check failed, 2 on usage or
//! internal errors.

use std::fmt;
use std::io::Write as _;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use congruence_forge_core::bernoulli;
use congruence_forge_core::convolutions::{identity_residual, Identity};
use congruence_forge_core::exactnum::{mod_reduce, odd_primes_in_range, rat_int, PrimeModulus};
use congruence_forge_core::mhs::mhs_row_newton;
use congruence_forge_core::padic_roots::lift_roots;
use congruence_forge_core::search::{
    irregular_pairs, kummer_pairs, wilson_scan, SearchRecord, KUMMER_SCAN_DEFAULT_CAP,
};
use congruence_forge_core::stirling::stirling_row_exact;
use congruence_forge_core::sums::{harmonic_power_sum, power_sum};
use congruence_forge_core::verifier::{run_checks, RunOptions};
use congruence_forge_core::CheckOutcome;

/// An inclusive range of integers written `A..B`, used to select the odd
/// primes inside `[A, B]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PrimeRange {
    lo: u64,
    hi: u64,
}

impl FromStr for PrimeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected an inclusive range A..B, got {s:?}"))?;
        let parse = |part: &str, side: &str| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| format!("{side} bound of {s:?} is not a non-negative integer"))
        };
        let range = PrimeRange {
            lo: parse(lo, "lower")?,
            hi: parse(hi, "upper")?,
        };
        if range.lo > range.hi {
            return Err(format!("range {s:?} is reversed: {} > {}", range.lo, range.hi));
        }
        Ok(range)
    }
}

impl fmt::Display for PrimeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl PrimeRange {
    /// The odd primes inside the range, or a usage error when there are
    /// none (an empty selection almost always means a typo).
    fn odd_primes(&self) -> Result<Vec<u64>, String> {
        let primes = odd_primes_in_range(self.lo, self.hi);
        if primes.is_empty() {
            return Err(format!("prime range {self} contains no odd primes"));
        }
        Ok(primes)
    }
}

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned human-readable columns with a summary footer.
    Text,
    /// Comma-separated values with a header row.
    Csv,
    /// A JSON array of row objects.
    Json,
}

/// Flags shared by every report-emitting subcommand.
#[derive(Debug, Args)]
struct ReportArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to FILE instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(
    name = "congruence-forge",
    version,
    about = "Exact congruence checks on Bernoulli numbers, harmonic sums, and friends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one exact value or row
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Run congruence check families over a range of odd primes
    Verify(VerifyArgs),
    /// Evaluate the exact-identity suite and report residuals
    Identities(IdentitiesArgs),
    /// Scan for rare arithmetic events
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Debug, Subcommand)]
enum ComputeCmd {
    /// Print the Bernoulli number B_N as num/den (B_1 = -1/2)
    Bernoulli {
        /// Index N
        n: usize,
    },
    /// Print the harmonic power sum H_K(P) = sum of 1/a^K over 0 < a < P
    Harmonic {
        /// Odd prime P
        p: u64,
        /// Power K >= 1
        k: u32,
    },
    /// Print the power sum S_K(P) = sum of a^K over 0 < a < P
    Powersum {
        /// Odd prime P
        p: u64,
        /// Power K
        k: u32,
    },
    /// Print the Stirling cycle-number row [P, 1] .. [P, P]
    Stirling {
        /// Odd prime P
        p: u64,
        /// Reduce each entry modulo P^K instead of printing it exactly
        #[arg(long = "mod", value_name = "K", value_parser = clap::value_parser!(u32).range(1..=4))]
        modulus: Option<u32>,
    },
    /// Print the multiple harmonic sum row A*_1 .. A*_{P-1}
    Mhs {
        /// Odd prime P
        p: u64,
    },
    /// Print the roots of X^(P-1) + (P-1)! modulo P^3 with their digit pairs
    Roots {
        /// Odd prime P
        p: u64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Inclusive range A..B of primes to verify
    #[arg(long, default_value = "7..101", value_name = "A..B")]
    primes: PrimeRange,

    /// Restrict to these check ids (comma-separated or repeated)
    #[arg(long, value_delimiter = ',', value_name = "ID[,ID...]")]
    check: Vec<String>,

    /// Worker threads (default: available parallelism)
    #[arg(long, value_name = "N")]
    jobs: Option<NonZeroUsize>,

    /// Evaluate cells that applicability gates would skip, letting
    /// documented boundary cases fail honestly (negative-control audit).
    #[arg(long, hide = true)]
    force: bool,

    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Debug, Args)]
struct IdentitiesArgs {
    /// Cap every family's sweep at N (default: per-family documented caps;
    /// the Chu-Vandermonde lattice is cubic in N)
    #[arg(long, value_name = "N")]
    max: Option<u64>,

    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Debug, Subcommand)]
enum SearchCmd {
    /// Scan for Wilson primes: (p-1)! = -1 (mod p^2)
    Wilson {
        /// Scan all primes p <= N
        #[arg(long, value_name = "N")]
        max: u64,

        #[command(flatten)]
        report: ReportArgs,
    },
    /// Scan for Kummer pairs: the Kummer congruence holding modulo p^2
    Kummer {
        /// Inclusive range A..B of primes to scan
        #[arg(long, value_name = "A..B")]
        primes: PrimeRange,

        /// Raise the Bernoulli index budget (the scan reads B_{2p-6}, so
        /// this lifts the default cap of p <= 199)
        #[arg(long = "max-index", value_name = "N")]
        max_index: Option<usize>,

        #[command(flatten)]
        report: ReportArgs,
    },
    /// Scan for irregular pairs: p dividing the numerator of B_k
    Irregular {
        /// Inclusive range A..B of primes to scan
        #[arg(long, value_name = "A..B")]
        primes: PrimeRange,

        #[command(flatten)]
        report: ReportArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here too; they are not errors.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Dispatches a parsed invocation. `Ok(true)` means the run completed but
/// at least one check failed (exit 1); errors of any kind exit 2.
fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Compute(cmd) => run_compute(cmd).map(|()| false),
        Command::Verify(args) => run_verify(args),
        Command::Identities(args) => run_identities(args),
        Command::Search(cmd) => run_search(cmd).map(|()| false),
    }
}

fn run_compute(cmd: ComputeCmd) -> Result<(), String> {
    let mut text = String::new();
    match cmd {
        ComputeCmd::Bernoulli { n } => {
            text.push_str(&bernoulli::bernoulli(n).map_err(|e| e.to_string())?.to_string());
            text.push('\n');
        }
        ComputeCmd::Harmonic { p, k } => {
            PrimeModulus::new(p, 1).map_err(|e| e.to_string())?;
            text.push_str(&harmonic_power_sum(p, k).map_err(|e| e.to_string())?.to_string());
            text.push('\n');
        }
        ComputeCmd::Powersum { p, k } => {
            PrimeModulus::new(p, 1).map_err(|e| e.to_string())?;
            text.push_str(&power_sum(p, k).to_string());
            text.push('\n');
        }
        ComputeCmd::Stirling { p, modulus } => {
            let row = stirling_row_exact(p).map_err(|e| e.to_string())?;
            match modulus {
                None => {
                    for s in 1..=p {
                        let value = row.bracket(s).map_err(|e| e.to_string())?;
                        text.push_str(&format!("[{p}, {s}] = {value}\n"));
                    }
                }
                Some(k) => {
                    let m = PrimeModulus::new(p, k).map_err(|e| e.to_string())?;
                    for s in 1..=p {
                        let value = row.bracket(s).map_err(|e| e.to_string())?;
                        let residue =
                            mod_reduce(&rat_int(value.clone()), &m).map_err(|e| e.to_string())?;
                        text.push_str(&format!(
                            "[{p}, {s}] = {} (mod {})\n",
                            residue.value(),
                            m.label()
                        ));
                    }
                }
            }
        }
        ComputeCmd::Mhs { p } => {
            let row = mhs_row_newton(p).map_err(|e| e.to_string())?;
            for k in 1..p {
                let value = row.value(k).map_err(|e| e.to_string())?;
                text.push_str(&format!("A*_{k} = {value}\n"));
            }
        }
        ComputeCmd::Roots { p } => {
            let roots = lift_roots(p).map_err(|e| e.to_string())?;
            text.push_str(&format!("f(X) = X^{} + {}!  (mod {p}^3)\n", p - 1, p - 1));
            let mut rows = Vec::new();
            for i in 1..p {
                let root = roots.root(i).map_err(|e| e.to_string())?;
                let (t0, t1) = roots.digit_pair(i).map_err(|e| e.to_string())?;
                rows.push(vec![
                    i.to_string(),
                    root.to_string(),
                    t0.to_string(),
                    t1.to_string(),
                ]);
            }
            text.push_str(&aligned_table(&["I", "ROOT", "T0", "T1"], &rows));
        }
    }
    write_report(&None, text.as_bytes())
}

fn run_verify(args: VerifyArgs) -> Result<bool, String> {
    let primes = args.primes.odd_primes()?;
    let options = RunOptions {
        check_ids: if args.check.is_empty() {
            None
        } else {
            Some(args.check.clone())
        },
        jobs: args.jobs.map(NonZeroUsize::get),
        force: args.force,
    };
    let outcomes = run_checks(&primes, &options).map_err(|e| e.to_string())?;
    let report = render_outcomes(args.report.format, &outcomes)?;
    write_report(&args.report.out, &report)?;
    Ok(outcomes.iter().any(CheckOutcome::is_fail))
}

/// One residual evaluation in the identity suite.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IdentityRow {
    family: &'static str,
    index: String,
    residual: String,
    expected: String,
}

impl IdentityRow {
    fn ok(&self) -> bool {
        self.residual == self.expected
    }
}

/// Per-family sweep caps for the identity suite. The defaults are the
/// documented validation ranges; `--max N` overrides every cap with `N`.
struct IdentityCaps {
    euler: u64,
    miki: u64,
    dunne_schubert: u64,
    spivey: u64,
    chu: u64,
}

impl IdentityCaps {
    fn new(max: Option<u64>) -> Self {
        match max {
            Some(n) => IdentityCaps {
                euler: n,
                miki: n,
                dunne_schubert: n,
                spivey: n,
                chu: n,
            },
            None => IdentityCaps {
                euler: 60,
                miki: 60,
                dunne_schubert: 30,
                spivey: 200,
                chu: 30,
            },
        }
    }
}

fn identity_rows(caps: &IdentityCaps) -> Result<Vec<IdentityRow>, String> {
    let mut rows = Vec::new();
    let mut push = |family: &'static str, index: String, which: Identity, expected: &str| {
        identity_residual(which)
            .map(|residual| {
                rows.push(IdentityRow {
                    family,
                    index,
                    residual: residual.to_string(),
                    expected: expected.to_string(),
                })
            })
            .map_err(|e| e.to_string())
    };
    for n in 1..=caps.euler {
        push("euler", n.to_string(), Identity::Euler { n }, "0")?;
    }
    for n in 3..=caps.miki {
        push("miki", n.to_string(), Identity::Miki { n }, "0")?;
    }
    for n in 1..=caps.dunne_schubert {
        // The n = 1 residual is exactly 1/4: the suite's negative control.
        let expected = if n == 1 { "1/4" } else { "0" };
        push(
            "dunne-schubert",
            n.to_string(),
            Identity::DunneSchubert { n },
            expected,
        )?;
    }
    for n in 1..=caps.spivey {
        push("spivey", n.to_string(), Identity::Spivey { n }, "0")?;
    }
    for m in 0..=caps.chu {
        for n in 0..=caps.chu {
            for r in 0..=caps.chu {
                push(
                    "chu",
                    format!("{m},{n},{r}"),
                    Identity::Chu { m, n, r },
                    "0",
                )?;
            }
        }
    }
    Ok(rows)
}

fn run_identities(args: IdentitiesArgs) -> Result<bool, String> {
    let rows = identity_rows(&IdentityCaps::new(args.max))?;
    let report = render_identities(args.report.format, &rows)?;
    write_report(&args.report.out, &report)?;
    Ok(rows.iter().any(|r| !r.ok()))
}

/// The largest prime the Kummer scan accepts for a given Bernoulli index
/// budget: the scan's top row is `B_{2p-6}`.
fn kummer_prime_cap(max_index: usize) -> u64 {
    (max_index as u64).saturating_add(6) / 2
}

fn run_search(cmd: SearchCmd) -> Result<(), String> {
    let (records, report_args) = match cmd {
        SearchCmd::Wilson { max, report } => (wilson_scan(max), report),
        SearchCmd::Kummer {
            primes,
            max_index,
            report,
        } => {
            let scan = primes.odd_primes()?;
            let cap = match max_index {
                None => KUMMER_SCAN_DEFAULT_CAP,
                Some(n) => {
                    if n > bernoulli::table_cap() {
                        bernoulli::set_table_cap(n);
                    }
                    kummer_prime_cap(n)
                }
            };
            let top = *scan.last().expect("odd_primes is non-empty");
            if top > cap {
                return Err(format!(
                    "kummer scan is capped at p <= {cap} (it reads exact Bernoulli \
                     numbers up to index 2p-6); pass --max-index {} or higher to \
                     scan p = {top}",
                    2 * top - 6
                ));
            }
            let mut records = Vec::new();
            for p in scan {
                records.extend(kummer_pairs(p).map_err(|e| e.to_string())?);
            }
            (records, report)
        }
        SearchCmd::Irregular { primes, report } => {
            let mut records = Vec::new();
            for p in primes.odd_primes()? {
                records.extend(irregular_pairs(p).map_err(|e| e.to_string())?);
            }
            (records, report)
        }
    };
    let report = render_records(report_args.format, &records)?;
    write_report(&report_args.out, &report)
}

/// Pads each column to its widest cell and joins with two spaces; lines
/// carry no trailing whitespace.
fn aligned_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &mut dyn Iterator<Item = &str>| {
        let mut line = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<width$}", width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_row(&mut headers.iter().copied());
    for row in rows {
        push_row(&mut row.iter().map(String::as_str));
    }
    out
}

fn render_outcomes(format: Format, outcomes: &[CheckOutcome]) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => render_json(outcomes),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record([
                    "prime", "check_id", "index", "status", "modulus", "lhs", "rhs", "reason",
                ])
                .map_err(|e| e.to_string())?;
            for o in outcomes {
                writer
                    .write_record([
                        o.prime.to_string(),
                        o.check_id.clone(),
                        o.index.map(|i| i.to_string()).unwrap_or_default(),
                        o.status.to_string(),
                        o.modulus.clone(),
                        o.lhs.clone().unwrap_or_default(),
                        o.rhs.clone().unwrap_or_default(),
                        o.reason.clone().unwrap_or_default(),
                    ])
                    .map_err(|e| e.to_string())?;
            }
            writer.into_inner().map_err(|e| e.to_string())
        }
        Format::Text => {
            let dash = || "-".to_string();
            let rows: Vec<Vec<String>> = outcomes
                .iter()
                .map(|o| {
                    vec![
                        o.prime.to_string(),
                        o.check_id.clone(),
                        o.index.map(|i| i.to_string()).unwrap_or_else(dash),
                        o.status.to_string(),
                        o.modulus.clone(),
                        o.lhs.clone().unwrap_or_else(dash),
                        o.rhs.clone().unwrap_or_else(dash),
                        o.reason.clone().unwrap_or_else(dash),
                    ]
                })
                .collect();
            let mut text = aligned_table(
                &["PRIME", "CHECK", "INDEX", "STATUS", "MODULUS", "LHS", "RHS", "REASON"],
                &rows,
            );
            let pass = outcomes.iter().filter(|o| o.status.to_string() == "pass").count();
            let fail = outcomes.iter().filter(|o| o.is_fail()).count();
            let skipped = outcomes.len() - pass - fail;
            text.push_str(&format!(
                "{} rows: {pass} pass, {fail} fail, {skipped} skipped\n",
                outcomes.len()
            ));
            Ok(text.into_bytes())
        }
    }
}

fn render_records(format: Format, records: &[SearchRecord]) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => render_json(records),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["kind", "p", "index", "witness"])
                .map_err(|e| e.to_string())?;
            for r in records {
                writer
                    .write_record([
                        r.kind.to_string(),
                        r.p.to_string(),
                        r.index.map(|i| i.to_string()).unwrap_or_default(),
                        r.witness.clone(),
                    ])
                    .map_err(|e| e.to_string())?;
            }
            writer.into_inner().map_err(|e| e.to_string())
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.kind.to_string(),
                        r.p.to_string(),
                        r.index.map(|i| i.to_string()).unwrap_or_else(|| "-".to_string()),
                        r.witness.clone(),
                    ]
                })
                .collect();
            let mut text = aligned_table(&["KIND", "PRIME", "INDEX", "WITNESS"], &rows);
            text.push_str(&format!("{} records\n", records.len()));
            Ok(text.into_bytes())
        }
    }
}

fn render_identities(format: Format, rows: &[IdentityRow]) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "family": r.family,
                        "index": r.index,
                        "residual": r.residual,
                        "expected": r.expected,
                        "ok": r.ok(),
                    })
                })
                .collect();
            render_json(&values)
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["family", "index", "residual", "expected", "ok"])
                .map_err(|e| e.to_string())?;
            for r in rows {
                writer
                    .write_record([
                        r.family.to_string(),
                        r.index.clone(),
                        r.residual.clone(),
                        r.expected.clone(),
                        r.ok().to_string(),
                    ])
                    .map_err(|e| e.to_string())?;
            }
            writer.into_inner().map_err(|e| e.to_string())
        }
        Format::Text => {
            let table_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.family.to_string(),
                        r.index.clone(),
                        r.residual.clone(),
                        r.expected.clone(),
                        if r.ok() { "ok".to_string() } else { "MISMATCH".to_string() },
                    ]
                })
                .collect();
            let mut text = aligned_table(
                &["FAMILY", "INDEX", "RESIDUAL", "EXPECTED", "OK"],
                &table_rows,
            );
            let bad = rows.iter().filter(|r| !r.ok()).count();
            text.push_str(&format!(
                "{} identities: {} ok, {bad} mismatched\n",
                rows.len(),
                rows.len() - bad
            ));
            Ok(text.into_bytes())
        }
    }
}

fn render_json<T: serde::Serialize>(rows: &[T]) -> Result<Vec<u8>, String> {
    let mut bytes = serde_json::to_vec_pretty(rows).map_err(|e| e.to_string())?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn write_report(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| format!("cannot write report: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use congruence_forge_core::verifier::Status;

    #[test]
    fn prime_ranges_parse_inclusively() {
        let range: PrimeRange = "7..101".parse().unwrap();
        assert_eq!((range.lo, range.hi), (7, 101));
        assert_eq!(range.odd_primes().unwrap().len(), 23);
        assert_eq!(range.to_string(), "7..101");

        let range: PrimeRange = "13..13".parse().unwrap();
        assert_eq!(range.odd_primes().unwrap(), vec![13]);
    }

    #[test]
    fn degenerate_prime_ranges_are_usage_errors() {
        assert!("101..7".parse::<PrimeRange>().is_err());
        assert!("7".parse::<PrimeRange>().is_err());
        assert!("a..b".parse::<PrimeRange>().is_err());
        assert!("7..-1".parse::<PrimeRange>().is_err());
        let empty: PrimeRange = "8..10".parse().unwrap();
        assert_eq!(
            empty.odd_primes().unwrap_err(),
            "prime range 8..10 contains no odd primes"
        );
    }

    #[test]
    fn kummer_prime_cap_inverts_the_index_need() {
        // The scan needs B_{2p-6}, so a budget of 2p-6 admits exactly p.
        assert_eq!(kummer_prime_cap(392), 199);
        assert_eq!(kummer_prime_cap(416), 211);
        assert_eq!(kummer_prime_cap(3), 4);
        for p in [101u64, 199, 211] {
            assert_eq!(kummer_prime_cap((2 * p - 6) as usize), p);
            assert!(kummer_prime_cap((2 * p - 7) as usize) < p);
        }
    }

    #[test]
    fn aligned_tables_pad_and_trim() {
        let rows = vec![
            vec!["7".to_string(), "long-cell".to_string()],
            vec!["101".to_string(), "x".to_string()],
        ];
        let table = aligned_table(&["P", "NAME"], &rows);
        assert_eq!(table, "P    NAME\n7    long-cell\n101  x\n");
    }

    fn sample_outcome() -> CheckOutcome {
        CheckOutcome {
            prime: 7,
            check_id: "T01".to_string(),
            index: None,
            status: Status::Pass,
            modulus: "7^3".to_string(),
            lhs: Some("252".to_string()),
            rhs: Some("252".to_string()),
            reason: None,
            paper_anchor: "Theorem 0.1".to_string(),
        }
    }

    #[test]
    fn csv_reports_use_the_documented_header_and_lowercase_status() {
        let bytes = render_outcomes(Format::Csv, &[sample_outcome()]).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        assert_eq!(
            text,
            "prime,check_id,index,status,modulus,lhs,rhs,reason\n7,T01,,pass,7^3,252,252,\n"
        );
    }

    #[test]
    fn json_reports_round_trip_and_default_to_empty_arrays() {
        let outcomes = vec![sample_outcome()];
        let bytes = render_outcomes(Format::Json, &outcomes).unwrap();
        let back: Vec<CheckOutcome> = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(back, outcomes);

        let bytes = render_outcomes(Format::Json, &[]).unwrap();
        assert_eq!(bytes, b"[]\n");
    }

    #[test]
    fn text_reports_end_with_a_tally() {
        let bytes = render_outcomes(Format::Text, &[sample_outcome()]).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("PRIME  CHECK"));
        assert!(text.ends_with("1 rows: 1 pass, 0 fail, 0 skipped\n"));
    }

    #[test]
    fn identity_suite_includes_the_negative_control() {
        let caps = IdentityCaps::new(Some(3));
        let rows = identity_rows(&caps).unwrap();
        let control = rows
            .iter()
            .find(|r| r.family == "dunne-schubert" && r.index == "1")
            .unwrap();
        assert_eq!(control.residual, "1/4");
        assert_eq!(control.expected, "1/4");
        assert!(control.ok());
        assert!(rows.iter().all(IdentityRow::ok));
        // euler 1..=3, miki 3..=3, ds 1..=3, spivey 1..=3, chu 4^3 triples.
        assert_eq!(rows.len(), 3 + 1 + 3 + 3 + 64);
    }

    #[test]
    fn identity_default_caps_match_the_documented_suite() {
        let caps = IdentityCaps::new(None);
        assert_eq!(
            (caps.euler, caps.miki, caps.dunne_schubert, caps.spivey, caps.chu),
            (60, 60, 30, 200, 30)
        );
    }
}
