//! `graphlim`: command-line access to graph and graphon densities.

mod commands;
mod files;

use std::io::Write;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphlim::density::AnchorAssignment;

#[derive(Debug, Parser)]
#[command(
    name = "graphlim",
    version,
    about = "Homomorphism densities, weak isomorphism and spectra of step graphons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Write the result here instead of standard output.
    #[arg(short = 'o', long = "output")]
    path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact density t(F, H), or a Monte Carlo estimate with --mc.
    Density {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        graphon: PathBuf,
        /// Number of Monte Carlo samples.
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        mc: Option<u64>,
        #[arg(long, default_value_t = 0, requires = "mc")]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Merge twin blocks.
    TwinReduce {
        graphon: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Decide weak isomorphism of two step graphons.
    WeakIso {
        first: PathBuf,
        second: PathBuf,
        /// On a negative verdict, search simple graphs up to this size for
        /// one with different densities.
        #[arg(long)]
        distinguisher_max_nodes: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Split every block into k equal parts.
    Blowup {
        graphon: PathBuf,
        #[arg(long, value_parser = positive)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Quotient by a block partition (one class id per block).
    Quotient {
        graphon: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Eigenvalues of the kernel operator, largest magnitude first.
    Spectrum {
        graphon: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Coupling of the block measures of two weakly isomorphic graphons.
    Couple {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Sample a W-random graph.
    Sample {
        graphon: PathBuf,
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Density error of W-random graphs across sizes, as CSV.
    Converge {
        graphon: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_parser = positive)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Density with labeled nodes pinned to blocks.
    AnchoredDensity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        graphon: PathBuf,
        /// Comma-separated `label=block` pairs, e.g. "1=0,2=3".
        #[arg(long, value_parser = anchors)]
        anchors: AnchorAssignment,
        #[command(flatten)]
        out: Output,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".to_string()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn anchors(s: &str) -> Result<AnchorAssignment, String> {
    AnchorAssignment::parse(s)
        .ok_or_else(|| "expected distinct label=block pairs, e.g. 1=0,2=3".to_string())
}

pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    match panic::catch_unwind(|| commands::run(cli.command)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
