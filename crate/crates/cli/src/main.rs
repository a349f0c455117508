use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schmidt::harness::{self, Format, RefinedGrid, DEFAULT_ROUNDTRIP_CUTOFF};
use schmidt::{phi, phi_inverse, Partition, TwoColorPartition};

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "schmidt",
    version,
    about = "Map two-color partitions to partitions with a prescribed alternating sum, and verify the correspondence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply phi to a colored partition such as `2r+1g`
    Map { colored: String },
    /// Apply phi inverse to a partition such as `3+1`
    Unmap { partition: String },
    /// List every (lambda, phi(lambda)) pair of the given weight
    Table {
        #[arg(long)]
        n: u64,
    },
    /// Compare s(n), t(n) and the series coefficient, with exhaustive round trips
    Verify {
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, default_value_t = DEFAULT_ROUNDTRIP_CUTOFF)]
        roundtrip_cutoff: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Tabulate the four-statistic refinement over a grid of (n, r, l, p, q)
    Refined {
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, default_value_t = 3)]
        max_l: usize,
        #[arg(long, default_value_t = 3)]
        max_p: u64,
        #[arg(long, default_value_t = 3)]
        max_q: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print every intermediate of phi for a colored partition
    Render { colored: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn parse_colored(text: &str) -> Result<TwoColorPartition, ExitCode> {
    text.parse()
        .map_err(|e| usage(format!("cannot parse colored partition `{text}`: {e}")))
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Map { colored } => {
            let lambda = parse_colored(&colored)?;
            println!("{}", phi(&lambda));
        }
        Command::Unmap { partition } => {
            let gamma: Partition = partition
                .parse()
                .map_err(|e| usage(format!("cannot parse partition `{partition}`: {e}")))?;
            println!("{}", phi_inverse(&gamma));
        }
        Command::Table { n } => {
            print!("{}", harness::format_table(&harness::table(n)));
        }
        Command::Verify {
            max_n,
            roundtrip_cutoff,
            format,
        } => {
            if max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            let report = harness::verify(max_n, roundtrip_cutoff);
            print!("{}", report.render(format.into()));
            if let Some(bad) = report.first_failure() {
                eprintln!(
                    "first failure at n={}: {}",
                    bad.n,
                    bad.witness.as_deref().unwrap_or("")
                );
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Refined {
            max_n,
            max_r,
            max_l,
            max_p,
            max_q,
            format,
        } => {
            if max_n == 0 || max_r == 0 || max_l == 0 || max_p == 0 || max_q == 0 {
                return Err(usage("all --max-* bounds must be at least 1"));
            }
            let grid = RefinedGrid {
                max_n,
                max_r,
                max_l,
                max_p,
                max_q,
            };
            let report = harness::refined(&grid);
            print!("{}", report.render(format.into()));
            if !report.pass {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Render { colored } => {
            let lambda = parse_colored(&colored)?;
            print!("{}", harness::render(&lambda));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
