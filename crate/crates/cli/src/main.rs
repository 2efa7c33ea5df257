use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idealgb_cli::bench::{render_table, run_bench, BenchConfig};
use idealgb_cli::{run_compute, run_verify, CliError, ComputeOptions, OutputFormat, VerifyLevel};

/// Reduced Gröbner bases of ideal-interpolation problems.
#[derive(Parser)]
#[command(name = "idealgb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reduced Gröbner basis for a JSON problem file.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Verify::Spairs)]
        verify: Verify,
        /// Trust that every condition space is closed under differentiation.
        #[arg(long)]
        skip_d_invariance: bool,
    },
    /// Time the pipeline against Buchberger-Moller on random point sets.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "8,16,32")]
        sizes: Vec<usize>,
        /// Random instances per (dimension, size) pair.
        #[arg(long, default_value_t = 3)]
        instances: usize,
    },
    /// Re-certify a result written by `compute --format json`.
    Verify { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Verify {
    None,
    Spairs,
    Oracle,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Compute { file, format, verify, skip_d_invariance } => {
            let opts = ComputeOptions {
                format: match format {
                    Format::Text => OutputFormat::Text,
                    Format::Json => OutputFormat::Json,
                },
                verify: match verify {
                    Verify::None => VerifyLevel::None,
                    Verify::Spairs => VerifyLevel::Spairs,
                    Verify::Oracle => VerifyLevel::Oracle,
                },
                skip_d_invariance,
            };
            run_compute(&file, &opts)
        }
        Command::Bench { seed, dims, sizes, instances } => {
            let config = BenchConfig { seed, dims, sizes, instances, ..BenchConfig::default() };
            let rows = run_bench(&config)?;
            let table = render_table(&rows);
            if rows.iter().all(|r| r.agree) {
                Ok(table)
            } else {
                Err(CliError::Uncertified { summary: "pipeline and Buchberger-Moller disagree".into(), report: table })
            }
        }
        Command::Verify { file } => run_verify(&file),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Uncertified { report, .. } = &e {
                print!("{report}");
            }
            eprintln!("idealgb: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
