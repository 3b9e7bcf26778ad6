//! Command-line front end: criticality analysis, the superconformal
//! mechanics table, structure-constant export, and the verification suite.
//!
//! Exit codes: 0 success, 1 internal failure, 2 "no critical point"
//! (informative, not an error), 64 usage.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dmodrep::algebra::ClosedSuperalgebra;
use dmodrep::conformal::{find_critical, ClosureKind, CriticalConfig};
use dmodrep::exact::{format_rational, parse_rational};
use dmodrep::geometry::{build_table, render_table_text};
use dmodrep::multiplet::FieldContent;
use dmodrep::verify::{run_all, VerifyConfig};
use dmodrep_cli::{algebra_record, critical_record, table_doc, to_json};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_INTERNAL: u8 = 1;
const EXIT_NO_CRITICAL: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "dmodrep",
    version,
    about = "Exact closure analysis of one-dimensional superconformal algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the scaling dimensions at which a supermultiplet closes
    Critical {
        #[command(flatten)]
        output: OutputArgs,
        /// Field content: "D,N" shorthand (e.g. "1,8" for (1,8,7)) or the
        /// full list "(1,7,7,1)"
        #[arg(long)]
        content: String,
        /// Degree bound for the rational-function reconstruction
        #[arg(long, default_value_t = 16)]
        degree_bound: usize,
    },
    /// Print the nine-row superconformal mechanics table
    Table {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write a closed superalgebra as a structure-constant record
    Export {
        /// Field content, as for `critical`
        #[arg(long)]
        content: String,
        /// Scaling dimension, required for families that close at every
        /// lambda
        #[arg(long)]
        lambda: Option<String>,
        /// Degree bound for the rational-function reconstruction
        #[arg(long, default_value_t = 16)]
        degree_bound: usize,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and print one line per check
    Verify {
        /// Seed for the randomized checks (affects sample choice, never
        /// the verdict)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Degree bound for the rational-function reconstruction
        #[arg(long, default_value_t = 16)]
        degree_bound: usize,
        /// Test hook: corrupt a Clifford generator entry to prove the
        /// relation check bites
        #[arg(long, hide = true)]
        corrupt_clifford: bool,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Failure> for ExitCode {
    fn from(f: Failure) -> ExitCode {
        match f {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_USAGE)
            }
            Failure::Internal(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_INTERNAL)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => failure.into(),
    }
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Critical { output, content, degree_bound } => {
            cmd_critical(&output, &content, degree_bound)
        }
        Command::Table { output } => cmd_table(&output),
        Command::Export { content, lambda, degree_bound, out } => {
            cmd_export(&content, lambda.as_deref(), degree_bound, out.as_deref())
        }
        Command::Verify { seed, degree_bound, corrupt_clifford } => {
            cmd_verify(seed, degree_bound, corrupt_clifford)
        }
    }
}

/// Accepts the full content list, parenthesized or bare, plus the "D,N"
/// shorthand for the graded (D, N, N-D) family.
fn parse_content(text: &str) -> Result<FieldContent, Failure> {
    let bare = text.trim().trim_start_matches('(').trim_end_matches(')');
    let numbers: Result<Vec<i64>, _> = bare.split(',').map(|p| p.trim().parse()).collect();
    if let Ok(numbers) = numbers {
        if numbers.len() == 2 && numbers[0] != numbers[1] {
            let (d, n) = (numbers[0], numbers[1]);
            if d < 0 || n < d {
                return Err(Failure::Usage(format!(
                    "shorthand D,N needs 0 <= D <= N, got {d},{n}"
                )));
            }
            return FieldContent::new(vec![d as usize, n as usize, (n - d) as usize])
                .map_err(|e| Failure::Usage(e.to_string()));
        }
    }
    FieldContent::parse(text).map_err(|e| Failure::Usage(e.to_string()))
}

fn critical_config(degree_bound: usize) -> CriticalConfig {
    CriticalConfig { degree_bound, ..CriticalConfig::default() }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display()))),
    }
}

fn cmd_critical(output: &OutputArgs, content: &str, degree_bound: usize) -> Result<u8, Failure> {
    let content = parse_content(content)?;
    let result = find_critical(&content, &critical_config(degree_bound))
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let record = critical_record(&result);
    let text = match output.format {
        Format::Json => to_json(&record),
        Format::Text => {
            let mut lines = format!("content: {}\nkind: {}\n", record.content, record.kind);
            if !record.critical_lambdas.is_empty() {
                lines.push_str(&format!(
                    "critical lambdas: {}\n",
                    record.critical_lambdas.join(", ")
                ));
            }
            for w in &record.witnesses {
                lines.push_str(&format!(
                    "witness: lambda = {}, dims {}|{}, algebra {}\n",
                    w.lambda,
                    w.even_dim,
                    w.odd_dim,
                    w.algebra.as_deref().unwrap_or("unidentified")
                ));
            }
            if record.kind == "never" {
                lines.push_str("no scaling dimension closes this multiplet\n");
            }
            lines
        }
    };
    emit(output.out.as_deref(), &text)?;
    Ok(if record.kind == "never" { EXIT_NO_CRITICAL } else { 0 })
}

fn cmd_table(output: &OutputArgs) -> Result<u8, Failure> {
    let rows = build_table().map_err(|e| Failure::Internal(e.to_string()))?;
    let text = match output.format {
        Format::Text => render_table_text(&rows),
        Format::Json => to_json(&table_doc(&rows)),
    };
    emit(output.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_export(
    content: &str,
    lambda: Option<&str>,
    degree_bound: usize,
    out: Option<&std::path::Path>,
) -> Result<u8, Failure> {
    let content = parse_content(content)?;
    let lambda = match lambda {
        Some(text) => parse_rational(text).map_err(|e| Failure::Usage(e.to_string()))?,
        None => {
            let result = find_critical(&content, &critical_config(degree_bound))
                .map_err(|e| Failure::Internal(e.to_string()))?;
            match &result.kind {
                ClosureKind::Critical(values) => values[0].clone(),
                ClosureKind::Never => {
                    eprintln!("{content} has no critical scaling dimension; nothing to export");
                    return Ok(EXIT_NO_CRITICAL);
                }
                ClosureKind::AnyLambda => {
                    eprintln!(
                        "{content} closes at every scaling dimension; pass --lambda to pick one"
                    );
                    return Ok(EXIT_NO_CRITICAL);
                }
            }
        }
    };
    let algebra = ClosedSuperalgebra::at_lambda(&content, &lambda).map_err(|e| {
        Failure::Internal(format!(
            "{content} at lambda = {}: {e}",
            format_rational(&lambda)
        ))
    })?;
    emit(out, &to_json(&algebra_record(&algebra)))?;
    Ok(0)
}

fn cmd_verify(seed: u64, degree_bound: usize, corrupt_clifford: bool) -> Result<u8, Failure> {
    let cfg = VerifyConfig { seed, degree_bound, corrupt_clifford };
    let outcomes = run_all(&cfg);
    let mut first_failure = None;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(detail) => println!("PASS {}: {detail}", outcome.name),
            Err(reason) => {
                println!("FAIL {}: {reason}", outcome.name);
                first_failure.get_or_insert(outcome.name);
            }
        }
    }
    match first_failure {
        None => {
            println!("all {} checks passed", outcomes.len());
            Ok(0)
        }
        Some(name) => {
            println!("first failing check: {name}");
            Ok(EXIT_INTERNAL)
        }
    }
}
