//! `cox`: command-line access to the group computations and exhaustive checks.

mod checks;
mod commands;
mod params;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Output;

#[derive(Parser, Debug)]
#[command(name = "cox", version, about = "Exact computations in finite Coxeter groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, roots, longest element and generator classes.
    Info {
        /// Type string (`B3`, `2A3`, `A2xA1`) or JSON matrix.
        group_type: String,
    },
    /// Twisted conjugacy classes with characteristic polynomials.
    Classes {
        group_type: String,
        /// Only cuspidal classes, labelled by partition where matched.
        #[arg(long)]
        cuspidal: bool,
        /// Twisting automorphism (default: the one attached to the type).
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Decomposition into pieces.
    Pieces {
        group_type: String,
        #[command(flatten)]
        p: params::Params,
    },
    /// Reduction chain of an element to a minimal-length element of its orbit.
    Reduce {
        group_type: String,
        /// Element as comma-separated generators, or `e`.
        word: String,
        #[command(flatten)]
        p: params::Params,
    },
    /// A good element of minimal length in every twisted class.
    GoodElements {
        group_type: String,
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Twisted trace functionals on the Hecke algebra.
    Zeta {
        group_type: String,
        #[command(flatten)]
        p: params::Params,
    },
    /// Run one exhaustive check; exit code 0 iff it passes.
    Verify {
        /// Check id, e.g. `thm3.2`, `cor7.25`, `prop6.8`.
        check: String,
        group_type: String,
        #[command(flatten)]
        p: params::Params,
        #[command(flatten)]
        v: VerifyOpts,
    },
}

#[derive(Args, Debug, Default)]
pub struct VerifyOpts {
    /// Partition for `cor7.25` (default: every valid one).
    #[arg(long)]
    alpha: Option<String>,
    /// Longest word for `garside-oracle`.
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Add the elapsed time to the output.
    #[arg(long)]
    timing: bool,
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Info { group_type } => commands::info(&group_type),
        Command::Classes { group_type, cuspidal, sigma } => commands::classes(&group_type, cuspidal, sigma.as_deref()),
        Command::Pieces { group_type, p } => commands::pieces(&group_type, &p),
        Command::Reduce { group_type, word, p } => commands::reduce(&group_type, &word, &p),
        Command::GoodElements { group_type, sigma } => commands::good_elements(&group_type, sigma.as_deref()),
        Command::Zeta { group_type, p } => commands::zeta(&group_type, &p),
        Command::Verify { check, group_type, p, v } => checks::verify(&check, &group_type, &p, &v),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            if out.pass == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
