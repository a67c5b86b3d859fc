//! `vnreg`: classify, certify and count von Neumann regular cellular automata.
//!
//! Exit status is 0 on success, 1 when a verification or cross-check fails,
//! and 2 on usage or input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "vnreg", version, about = "Von Neumann regularity of cellular automata")]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "VNREG_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the 256 elementary rules into 48 classes.
    Classify(ClassifyArgs),
    /// Re-check every record of a certificate file.
    Verify { path: PathBuf },
    /// Boxes, |R| and CA counts for a finite group.
    Finite(FiniteArgs),
    /// Linear CA over Z_n with alphabet F_p.
    #[command(subcommand)]
    Linear(LinearCommand),
    /// The composite of two regular elementary CA that is not regular.
    #[command(visible_alias = "thm4")]
    Counterexample {
        #[arg(long, value_enum, env = "VNREG_FORMAT", default_value_t = Format::Human)]
        format: Format,
        /// Also write the certificate record here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive the witness and inverse tables.
    Tables,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Radius of the weak-inverse search (1 or 2).
    #[arg(long, env = "VNREG_MAX_RADIUS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=2))]
    max_radius: u64,
    /// Largest least period tried for non-regularity witnesses.
    #[arg(long, env = "VNREG_MAX_PERIOD", default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=16))]
    max_period: u64,
    #[arg(long, value_enum, env = "VNREG_FORMAT", default_value_t = Format::Human)]
    format: Format,
    /// Write one certificate record per rule to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FiniteArgs {
    /// `zn:<n>`, `s3`, `d4`, `klein4` or `cayley:<file>`.
    group: String,
    /// Alphabet size.
    #[arg(long, default_value_t = 2)]
    q: usize,
    /// Largest configuration space for which maps are enumerated.
    #[arg(long, default_value_t = vnreg::finite::DEFAULT_CONFIG_CAP)]
    cap: usize,
    /// Print a certificate for every enumerated map.
    #[arg(long)]
    certificates: bool,
    #[arg(long, value_enum, env = "VNREG_FORMAT", default_value_t = Format::Human)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum LinearCommand {
    /// Factor x^n - 1 and count the regular elements.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Cross-check against exhaustive search.
        #[arg(long)]
        brute: bool,
        /// Largest ring size for the exhaustive search.
        #[arg(long, default_value_t = vnreg::linear::DEFAULT_ELEMENT_CAP)]
        cap: u64,
        #[arg(long, value_enum, env = "VNREG_FORMAT", default_value_t = Format::Human)]
        format: Format,
    },
    /// Test one element for regularity.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Coefficients, lowest degree first, e.g. `1,1`.
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, env = "VNREG_FORMAT", default_value_t = Format::Human)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Classify(args) => commands::classify(&args),
        Command::Verify { path } => commands::verify(&path),
        Command::Finite(args) => commands::finite(&args),
        Command::Linear(LinearCommand::Count { n, p, brute, cap, format }) => {
            commands::linear_count(n, p, brute, cap, format)
        }
        Command::Linear(LinearCommand::Check { n, p, poly, format }) => commands::linear_check(n, p, &poly, format),
        Command::Counterexample { format, out } => commands::counterexample(format, out.as_deref()),
        Command::Tables => commands::tables(),
    };
    match result {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
