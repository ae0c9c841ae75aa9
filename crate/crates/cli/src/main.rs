//! `gencomp`: count, expand, enumerate, and verify generalized compositions.
//!
//! Exit codes: 0 on success, 1 when an identity check finds a mismatch,
//! 2 on usage errors. All output is deterministic: identical invocations
//! produce byte-identical stdout.

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use gencomp_core::{
    check_identity, count_all, count_compositions, enumerate_compositions,
    weighted_polynomial_coefficient, Count, CountTable, GeneralizedComposition, GridBounds,
    Identity, IdentityReport, WeightVector,
};

#[derive(Parser)]
#[command(
    name = "gencomp",
    version,
    about = "Count, expand, enumerate, and verify generalized compositions",
    long_about = "Generalized compositions are ordered sums of parts where each part of \
                  value i comes in b_i distinguishable types; the weight vector b is given \
                  as a comma-separated list, e.g. --weights 2,1,3."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of generalized compositions of a total into exactly k parts
    Count {
        /// Weight vector, comma-separated (e.g. 2,1,3)
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// Number of parts k
        #[arg(long)]
        parts: usize,
        /// The number being composed
        #[arg(long)]
        total: usize,
    },
    /// Number of all generalized compositions of a total, any number of parts
    Total {
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// The number being composed
        #[arg(long)]
        n: usize,
    },
    /// Coefficient of x^i in (b_1 + b_2 x + ... + b_r x^(r-1))^k
    Coeff {
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// Exponent of the weight polynomial
        #[arg(long)]
        k: usize,
        /// Coefficient index; out-of-range indices are 0
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Table of per-part-count and total counts up to a bound
    Table {
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// Largest total to tabulate
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// List generalized compositions in a fixed deterministic order
    Enumerate {
        #[arg(long, value_parser = parse_weights)]
        weights: WeightVector,
        /// The number being composed
        #[arg(long)]
        total: usize,
        /// Restrict to exactly this many parts
        #[arg(long)]
        parts: Option<usize>,
        /// Stop after this many compositions
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
        format: StreamFormat,
    },
    /// Check the composition/coefficient identities on a bounded grid
    #[command(group = ArgGroup::new("vector").required(true))]
    Verify {
        /// Weight vector to check
        #[arg(long, value_parser = parse_weights, group = "vector")]
        weights: Option<WeightVector>,
        /// Shorthand for the all-ones weight vector of this length
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), group = "vector")]
        r: Option<u64>,
        /// Largest total swept by the total-sum identities
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Largest part count swept by the per-part-count identities
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(ValueEnum, Clone, Copy)]
enum StreamFormat {
    Text,
    Jsonl,
}

#[derive(ValueEnum, Clone, Copy)]
enum ReportFormat {
    Text,
    Jsonl,
}

fn parse_weights(s: &str) -> Result<WeightVector, String> {
    let mut entries = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        let value: i64 = token
            .parse()
            .map_err(|_| format!("'{token}' is not an integer"))?;
        entries.push(value);
    }
    WeightVector::new(&entries).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count {
            weights,
            parts,
            total,
        } => {
            println!("{}", count_compositions(&weights, parts, total));
            ExitCode::SUCCESS
        }
        Command::Total { weights, n } => {
            println!("{}", count_all(&weights, n));
            ExitCode::SUCCESS
        }
        Command::Coeff { weights, k, i } => {
            println!("{}", weighted_polynomial_coefficient(&weights, k, i));
            ExitCode::SUCCESS
        }
        Command::Table {
            weights,
            n_max,
            format,
        } => {
            run_table(&weights, n_max as usize, format);
            ExitCode::SUCCESS
        }
        Command::Enumerate {
            weights,
            total,
            parts,
            limit,
            format,
        } => {
            run_enumerate(&weights, total, parts, limit, format);
            ExitCode::SUCCESS
        }
        Command::Verify {
            weights,
            r,
            n_max,
            k_max,
            format,
        } => {
            let b = weights.unwrap_or_else(|| WeightVector::ones(r.expect("group is required") as usize));
            run_verify(&b, n_max, k_max, format)
        }
    }
}

fn run_table(b: &WeightVector, n_max: usize, format: TableFormat) {
    let table = CountTable::build(b, n_max);
    let zero = Count::from(0u32);
    let mut counts = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            let count = table.get(k, n);
            if *count != zero {
                counts.push((k, n, count));
            }
        }
    }
    let totals: Vec<(usize, Count)> = (1..=n_max).map(|n| (n, count_all(b, n))).collect();
    match format {
        TableFormat::Csv => {
            println!("k,n,count");
            for (k, n, count) in counts {
                println!("{k},{n},{count}");
            }
            for (n, value) in totals {
                println!("total,{n},{value}");
            }
        }
        TableFormat::Jsonl => {
            for (k, n, count) in counts {
                println!("{}", records::count_row(k, n, count));
            }
            for (n, value) in totals {
                println!("{}", records::total_row(n, &value));
            }
        }
    }
}

fn run_enumerate(
    b: &WeightVector,
    total: usize,
    parts: Option<usize>,
    limit: Option<usize>,
    format: StreamFormat,
) {
    let stream = enumerate_compositions(b, total, parts, limit);
    match format {
        StreamFormat::Text => {
            for comp in stream {
                println!("{comp}");
            }
        }
        StreamFormat::Jsonl => {
            for (index, comp) in stream.enumerate() {
                println!("{}", records::composition_row(index, &comp));
            }
        }
    }
}

fn run_verify(b: &WeightVector, n_max: usize, k_max: usize, format: ReportFormat) -> ExitCode {
    let bounds = GridBounds { n_max, k_max };
    let reports: Vec<IdentityReport> = Identity::ALL
        .iter()
        .copied()
        .filter(|id| id.applies_to(b))
        .map(|id| check_identity(id, b, &bounds))
        .collect();
    match format {
        ReportFormat::Text => print_reports_text(&reports),
        ReportFormat::Jsonl => {
            for report in &reports {
                println!("{}", records::report_row(report));
            }
        }
    }
    if reports.iter().all(IdentityReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_reports_text(reports: &[IdentityReport]) {
    for report in reports {
        println!("{}", render_report_line(report));
        for failure in &report.failures {
            let params = failure
                .params
                .iter()
                .map(|(name, value)| format!("{name}={value}"))
                .collect::<Vec<_>>()
                .join(" ");
            println!("  {params}: left={} right={}", failure.left, failure.right);
        }
    }
    let points: usize = reports.iter().map(|r| r.checked).sum();
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let status = if failures == 0 { "ok" } else { "FAILED" };
    println!(
        "verify: {status} ({} identities, {points} points, {failures} failures)",
        reports.len()
    );
}

fn render_report_line(report: &IdentityReport) -> String {
    let status = if report.passed() { "ok" } else { "FAILED" };
    format!(
        "{}: {status} ({} points; {})",
        report.identity.name(),
        report.checked,
        report.grid
    )
}

/// The machine-readable line formats. Counts render as decimal strings so
/// values beyond 64 bits round-trip unchanged.
mod records {
    use super::*;
    use serde_json::{json, Value};

    pub fn count_row(k: usize, n: usize, count: &Count) -> Value {
        json!({ "k": k, "n": n, "count": count.to_string() })
    }

    pub fn total_row(n: usize, value: &Count) -> Value {
        json!({ "total": n, "value": value.to_string() })
    }

    pub fn composition_row(index: usize, comp: &GeneralizedComposition) -> Value {
        let parts: Vec<Value> = comp
            .parts()
            .iter()
            .map(|p| json!({ "value": p.value(), "type": p.type_index() }))
            .collect();
        json!({ "index": index, "parts": parts })
    }

    pub fn report_row(report: &IdentityReport) -> Value {
        let failures: Vec<Value> = report
            .failures
            .iter()
            .map(|f| {
                let params: serde_json::Map<String, Value> = f
                    .params
                    .iter()
                    .map(|(name, value)| (name.to_string(), json!(value)))
                    .collect();
                json!({
                    "params": params,
                    "left": f.left.to_string(),
                    "right": f.right.to_string(),
                })
            })
            .collect();
        json!({
            "identity": report.identity.name(),
            "grid": report.grid,
            "checked": report.checked,
            "failures": failures,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gencomp_core::IdentityFailure;

    #[test]
    fn weights_parse_and_reject() {
        assert_eq!(
            parse_weights("2,1,3").unwrap(),
            WeightVector::new(&[2, 1, 3]).unwrap()
        );
        assert_eq!(parse_weights(" 1 , 0 ").unwrap().weights(), &[1, 0]);
        assert!(parse_weights("1,-2").unwrap_err().contains("negative"));
        assert!(parse_weights("1,x").unwrap_err().contains("not an integer"));
        assert!(parse_weights("").unwrap_err().contains("not an integer"));
    }

    #[test]
    fn record_lines_are_bit_stable() {
        let count = Count::from(12u32);
        let a = records::count_row(2, 5, &count).to_string();
        let b = records::count_row(2, 5, &count).to_string();
        assert_eq!(a, b);
        assert_eq!(a, r#"{"count":"12","k":2,"n":5}"#);
        assert_eq!(
            records::total_row(3, &Count::from(7u32)).to_string(),
            r#"{"total":3,"value":"7"}"#
        );
    }

    #[test]
    fn failing_report_renders_and_exits_nonzero() {
        let report = IdentityReport {
            identity: Identity::CountCoefficient,
            grid: "b=(2,1), k in 1..=6, n in k..=2k".to_string(),
            checked: 27,
            failures: vec![IdentityFailure {
                params: vec![("k", 2), ("n", 3)],
                left: Count::from(99u32),
                right: Count::from(4u32),
            }],
        };
        assert!(!report.passed());
        let line = render_report_line(&report);
        assert!(line.contains("FAILED"));
        assert!(line.contains("27 points"));
        let row = records::report_row(&report).to_string();
        assert!(row.contains(r#""left":"99""#));
        assert!(row.contains(r#""params":{"k":2,"n":3}"#));

        let passing = IdentityReport {
            failures: Vec::new(),
            ..report
        };
        assert!(render_report_line(&passing).contains("ok"));
    }
}
