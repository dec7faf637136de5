use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "matchmonoid",
    version,
    about = "Special matchings and their monoids on finite graded posets"
)]
pub struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Worker threads for enumeration kernels (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    pub workers: Option<usize>,
    /// Abort with exit code 4 after this many seconds.
    #[arg(long, global = true, value_name = "SECONDS")]
    pub timeout: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a poset.
    Poset {
        #[arg(value_enum)]
        action: PosetAction,
        #[command(flatten)]
        input: PosetInput,
        /// Exit with code 1 unless the poset is Eulerian.
        #[arg(long)]
        require_eulerian: bool,
    },
    /// Enumerate special (partial) matchings.
    Matchings {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: PosetInput,
        /// Report only the number of matchings.
        #[arg(long)]
        count_only: bool,
    },
    /// Generate M^K or M_p^K and report its idempotents.
    Closure {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: PosetInput,
    },
    /// Analyze an idempotent given as endofunction JSON.
    Analyze {
        /// Endofunction JSON file: {"poset": spec-or-inline, "image": [...]}.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Decide special-ness against this closure.
        #[arg(long, value_enum)]
        closure: Option<Kind>,
    },
    /// Reproduce a numeric claim, or all of them.
    Reproduce {
        claim: String,
        /// Number of generators for the table claims.
        #[arg(long)]
        n: Option<usize>,
        /// Include wall-clock runtimes (output is then no longer byte-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args, Debug)]
pub struct PosetInput {
    /// Poset JSON file.
    #[arg(long, value_name = "FILE", conflicts_with = "builtin")]
    pub input: Option<PathBuf>,
    /// Builtin poset, e.g. bruhat:3 or product:(chain:2,chain:3).
    #[arg(long, value_name = "SPEC")]
    pub builtin: Option<String>,
    /// Builtin spec (when neither --input nor --builtin is given), then element arguments.
    #[arg(value_name = "ARGS")]
    pub args: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetAction {
    Check,
    Mobius,
    Eulerian,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Special,
    Partial,
}
