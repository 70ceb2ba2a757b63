use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sp4::cli::{cmd_classify, cmd_family, cmd_sweep, cmd_verify_counterexample};

/// Exact analysis of 4x4 symplectic matrices.
#[derive(Parser)]
#[command(name = "sp4", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matrix read from a JSON file.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Print the full verification report for one family member.
    Family {
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// CSV summary for a comma-separated list of eps values.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// Check the family at eps = 0 and eps = 1/2^k, k = 1..=depth.
    VerifyCounterexample {
        #[arg(long, default_value_t = 10)]
        depth: u32,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let out = match args.command {
        Command::Classify { matrix } => cmd_classify(&matrix),
        Command::Family { eps } => cmd_family(&eps),
        Command::Sweep { eps } => cmd_sweep(&eps),
        Command::VerifyCounterexample { depth } => cmd_verify_counterexample(depth),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.exit_code as u8)
}
