//! `surfent`: volume entropy of geometric surface-group presentations.

mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use surfent::analysis::{bigon_table, AnalysisOptions, Geometry};
use surfent::{analyze, parse, Error, Presentation, SyntaxError};

/// Largest oracle radius inside the supported memory envelope.
const ORACLE_ENVELOPE: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "surfent", version, about = "Volume entropy of geometric surface-group presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the whole pipeline and report the volume entropy.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Include the kneading matrix.
        #[arg(long)]
        dump_matrix: bool,
        /// Include the minimal bigon table.
        #[arg(long)]
        dump_bigons: bool,
        /// Include one-sided itineraries and jumps at every turning point.
        #[arg(long)]
        dump_itineraries: bool,
        /// Also count spheres in the Cayley graph out to this radius and compare growth rates.
        #[arg(long, value_name = "RADIUS")]
        oracle: Option<usize>,
    },
    /// Stop after the geometricity test.
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Print the minimal bigon at every pair of adjacent letters.
    Bigons {
        #[command(flatten)]
        common: Common,
    },
    /// Count vertices at each distance from the identity in the Cayley graph.
    Sigma {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        radius: usize,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Presentation file; reads standard input when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Digits after the decimal point in text output.
    #[arg(long, default_value_t = 9)]
    precision: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn load(common: &Common) -> Result<Presentation> {
    let text = read_input(common.input.as_ref())?;
    Ok(parse(&text)?)
}

/// Writes to standard output; a closed pipe downstream is not an error.
fn emit(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { common, dump_matrix, dump_bigons, dump_itineraries, oracle } => {
            let p = load(&common)?;
            if oracle.is_some_and(|r| r > ORACLE_ENVELOPE) {
                eprintln!("warning: oracle radius beyond {ORACLE_ENVELOPE} may need several GB of memory");
            }
            let options = AnalysisOptions {
                include_matrix: dump_matrix,
                include_itineraries: dump_itineraries,
                oracle_radius: oracle,
                ..AnalysisOptions::default()
            };
            let report = analyze(&p, &options)?;
            match common.format {
                Format::Json => print_json(&report)?,
                Format::Text => emit(&render::analysis(&p, &report, dump_bigons, common.precision))?,
            }
        }
        Command::Check { common } => {
            let p = load(&common)?;
            let g = Geometry::new(&p)?;
            match common.format {
                Format::Json => print_json(&render::check_json(&g))?,
                Format::Text => emit(&render::check(&p, &g))?,
            }
        }
        Command::Bigons { common } => {
            let p = load(&common)?;
            let g = Geometry::new(&p)?;
            let table = bigon_table(&g, &g.bigons()?);
            match common.format {
                Format::Json => print_json(&table)?,
                Format::Text => emit(&render::bigons(&table))?,
            }
        }
        Command::Sigma { common, radius } => {
            let p = load(&common)?;
            if radius > ORACLE_ENVELOPE {
                eprintln!("warning: radius beyond {ORACLE_ENVELOPE} may need several GB of memory");
            }
            let options = AnalysisOptions { oracle_radius: Some(radius), ..AnalysisOptions::default() };
            let report = analyze(&p, &options)?;
            let oracle = report.oracle.as_ref().expect("oracle requested");
            match common.format {
                Format::Json => print_json(oracle)?,
                Format::Text => emit(&render::sigma(oracle, report.lambda, common.precision))?,
            }
        }
    }
    Ok(())
}

/// 1 for unreadable or malformed input, 2 for non-geometric presentations, 3 otherwise.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<SyntaxError>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Syntax(_)) => 1,
        Some(Error::NotGeometric(_)) => 2,
        _ if err.chain().any(|c| c.is::<std::io::Error>()) => 1,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let wants_json = match &cli.command {
        Command::Analyze { common, .. }
        | Command::Check { common }
        | Command::Bigons { common }
        | Command::Sigma { common, .. } => common.format == Format::Json,
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = exit_code(&err);
            // Library errors already embed their cause in the message.
            let message = if err.is::<Error>() || err.is::<SyntaxError>() { err.to_string() } else { format!("{err:#}") };
            if code == 2 && wants_json {
                let _ = emit(&format!("{}\n", serde_json::json!({ "geometric": false, "reason": message })));
            }
            eprintln!("{message}");
            ExitCode::from(code)
        }
    }
}
