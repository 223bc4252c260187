use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};

use qhopf::cli::{render_json, render_text, run, Backend, CliError, ReportFormat, RunSpec, Source, Suite};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

/// Exact verification of quasi-Hopf identities for k^ω(G) and its
/// Heisenberg doubles.
#[derive(Debug, Parser)]
#[command(name = "qhopf", version)]
#[command(group(ArgGroup::new("source").required(true).args(["example", "input"])))]
struct Args {
    /// Builtin example: zn:<n>:<k>, trivial:<n> or v4:<table-id>
    #[arg(long)]
    example: Option<String>,
    /// Input file describing a group and a cocycle
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated suites: axioms, twist, lemma41, heisenberg, theorems,
    /// section5, invertibility, all
    #[arg(long, default_value = "all")]
    check: String,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportArg,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record per-suite wall-clock time (makes output nondeterministic)
    #[arg(long)]
    timing: bool,
}

fn execute(args: Args) -> Result<i32, CliError> {
    let source = match (args.example, args.input) {
        (Some(id), _) => Source::Builtin(id),
        (None, Some(path)) => Source::File(path),
        (None, None) => unreachable!("clap enforces a source"),
    };
    let spec = RunSpec {
        source,
        suites: Suite::parse_list(&args.check)?,
        backend: match args.backend {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        },
        format: match args.report {
            ReportArg::Text => ReportFormat::Text,
            ReportArg::Json => ReportFormat::Json,
        },
        timing: args.timing,
    };
    let report = run(&spec)?;
    let rendered = match spec.format {
        ReportFormat::Text => render_text(&report),
        ReportFormat::Json => render_json(&report),
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{rendered}"),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match execute(Args::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
