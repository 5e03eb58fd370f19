//! `bcr`: exact BCR invariants of high-dimensional knots from Seifert matrices.
//!
//! Exit status: 0 when every check passes, 1 on a mathematical
//! inconsistency, 2 on bad input or usage.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bcr", version, about = "Exact BCR knot invariants from Seifert matrices")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the weights lambda_{k,nu}.
    Lambda {
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = Route::Recursive)]
        route: Route,
    },
    /// Compute Z_k by both routes for one data set.
    Invariants {
        #[command(flatten)]
        source: Source,
        /// Dimension used when the catalog entry is the unknot.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
    },
    /// Run the randomized identity checks.
    Verify {
        /// Knot dimension.
        #[arg(long)]
        n: usize,
        /// Block sizes b_1,...,b_n; must satisfy b_d = b_{n+1-d}.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        /// Generated V^+ entries lie in [-bound, bound].
        #[arg(long, default_value_t = bcr_core::sweep::DEFAULT_BOUND)]
        bound: u32,
    },
    /// List the BCR diagrams of degree k.
    Diagrams {
        #[arg(value_name = "K", conflicts_with = "k_flag", required_unless_present = "k_flag")]
        k: Option<usize>,
        #[arg(long = "k", value_name = "K")]
        k_flag: Option<usize>,
    },
    /// List the built-in data sets, or print one as an input document.
    Catalog {
        name: Option<String>,
        /// Dimension used for the unknot.
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON input document.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Name of a built-in data set (see `bcr catalog`).
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Brute,
    Recursive,
    Closed,
    All,
}

fn main() -> ExitCode {
    // Let `bcr ... | head` end quietly instead of panicking on a closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.command {
        Command::Lambda { kmax, route } => commands::lambda(kmax, route, json),
        Command::Invariants { source, n, kmax } => {
            let source = match (source.input, source.catalog) {
                (Some(path), _) => commands::DataSource::File(path),
                (None, Some(name)) => commands::DataSource::Catalog(name, n),
                (None, None) => unreachable!("clap enforces one source"),
            };
            commands::invariants(&source, kmax, json)
        }
        Command::Verify {
            n,
            sizes,
            instances,
            seed,
            kmax,
            bound,
        } => commands::verify(
            bcr_core::sweep::SweepConfig {
                n,
                sizes,
                instances,
                seed,
                bound,
            },
            kmax,
            json,
        ),
        Command::Diagrams { k, k_flag } => commands::diagrams(k.or(k_flag).unwrap_or(0), json),
        Command::Catalog { name, n } => commands::catalog(name.as_deref(), n, json),
    };
    match outcome {
        Ok(status) => ExitCode::from(status as u8),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.status as u8)
        }
    }
}
