//! `pdisc`: exact proper disconnection numbers, constructions and census
//! reports from the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdisc_core::solver::SolveBudget;

#[derive(Parser, Debug)]
#[command(name = "pdisc", version, about = "Proper disconnection numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads (0 = one per core). Reports do not depend on it.
    #[arg(long, default_value_t = 0, env = "PDISC_THREADS", global = true)]
    pub threads: usize,

    /// Colored-edge assignments allowed per pd computation.
    #[arg(long, env = "PDISC_NODE_LIMIT", global = true)]
    pub node_limit: Option<u64>,

    /// Wall-clock limit per pd computation, in seconds.
    #[arg(long, env = "PDISC_TIME_LIMIT", global = true)]
    pub time_limit: Option<u64>,

    /// Largest color count the solver tries.
    #[arg(long, global = true)]
    pub max_colors: Option<usize>,

    /// Largest edge count the solver accepts.
    #[arg(long, global = true)]
    pub max_edges: Option<usize>,

    /// Split each pd search across threads.
    #[arg(long, global = true)]
    pub parallel_solver: bool,
}

impl Common {
    pub fn budget(&self) -> SolveBudget {
        let mut b = SolveBudget::default();
        if let Some(n) = self.node_limit {
            b.node_limit = n;
        }
        if let Some(t) = self.time_limit {
            b.time_limit = Duration::from_secs(t);
        }
        if let Some(c) = self.max_colors {
            b.max_colors = c;
        }
        if let Some(m) = self.max_edges {
            b.max_edges = m;
        }
        b.parallel = self.parallel_solver;
        b
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact pd with a certificate, for each graph6 line.
    Exact {
        /// graph6 file, one graph per line; standard input when absent or `-`.
        input: Option<PathBuf>,
    },
    /// Check an edge coloring in the `k=<int>` / `u v color` text format.
    Verify {
        /// The graph, as a graph6 string.
        #[arg(long)]
        graph: String,
        /// Coloring file; standard input when absent or `-`.
        coloring: Option<PathBuf>,
    },
    /// Build a named family with its explicit coloring, e.g. `wheel:6`,
    /// `kmn:3,5`, `extremal:8,3`, `dfam:5;1,3`.
    Construct { family: String },
    /// Lower and upper bounds for each graph6 line.
    Bounds {
        input: Option<PathBuf>,
        /// Also use family formulas and block structure.
        #[arg(long)]
        refined: bool,
    },
    /// Classify outerplanar diameter-2 graphs.
    Classify { input: Option<PathBuf> },
    /// Check every connected graph of order `n`.
    Census {
        /// Graph order, 2 to 7.
        #[arg(long, short)]
        n: usize,
    },
    /// Minimum size of a connected graph of order `n` with pd `k`, for every k.
    Extremal {
        /// Graph order, 2 to 7.
        #[arg(long, short)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.common.threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let result = pool.install(|| commands::run(&cli.command, &cli.common));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.status())
        }
    }
}
