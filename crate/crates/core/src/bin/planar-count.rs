use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use planar_count::cache::{self, Validation};
use planar_count::output::{compute_record, table_records, write_records, Format};
use planar_count::verify::{self, DEFAULT_MAX_D};
use planar_count::{CountKey, MemoTable};

/// Exact counts of rational planar curves in P^3.
#[derive(Parser)]
#[command(name = "planar-count", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single count N_d(r, s, theta).
    Compute {
        /// Curve degree.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Number of generic lines met.
        #[arg(long)]
        r: u32,
        /// Number of generic points met.
        #[arg(long)]
        s: u32,
        /// Power of the hyperplane class on the dual space.
        #[arg(long)]
        theta: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Memo cache file, loaded if present and rewritten afterwards.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print every on-shell count up to a degree.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_d: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_D, value_parser = clap::value_parser!(u32).range(2..))]
        max_d: u32,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

fn open_memo(path: Option<&Path>) -> Result<MemoTable, String> {
    match path {
        Some(p) if p.exists() => cache::load(p, Validation::default()).map_err(|e| e.to_string()),
        _ => Ok(MemoTable::new()),
    }
}

fn close_memo(memo: &MemoTable, path: Option<&Path>) -> Result<(), String> {
    match path {
        Some(p) => cache::save(memo, p).map_err(|e| e.to_string()),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let stdout = io::stdout().lock();
    match cli.command {
        Command::Compute { d, r, s, theta, format, cache } => {
            let memo = open_memo(cache.as_deref())?;
            let record = compute_record(CountKey::new(d, r, s, theta), &memo).map_err(|e| e.to_string())?;
            write_records(&[record], format, stdout).map_err(|e| e.to_string())?;
            close_memo(&memo, cache.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { max_d, format, cache } => {
            let memo = open_memo(cache.as_deref())?;
            let records = table_records(max_d, &memo).map_err(|e| e.to_string())?;
            write_records(&records, format, stdout).map_err(|e| e.to_string())?;
            close_memo(&memo, cache.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_d, cache } => {
            let memo = open_memo(cache.as_deref())?;
            let report = verify::run(max_d, &memo).map_err(|e| e.to_string())?;
            print!("{report}");
            close_memo(&memo, cache.as_deref())?;
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
