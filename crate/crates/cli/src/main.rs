use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use percode_core::Error;

mod commands;

use commands::Outcome;

#[derive(Parser)]
#[command(
    name = "percode",
    version,
    about = "Extended perfect codes, their components and perfect colorings"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// GF(2^m) tables.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Build and inspect codes.
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// The partition of odd-weight words into extended Hamming codes.
    Partition {
        #[command(subcommand)]
        cmd: PartitionCmd,
    },
    /// Product codes over a permutation of the partition classes.
    Product {
        #[command(subcommand)]
        cmd: ProductCmd,
    },
    Components {
        #[command(subcommand)]
        cmd: ComponentsCmd,
    },
    Coloring {
        #[command(subcommand)]
        cmd: ColoringCmd,
    },
    /// Every check, in dependency order.
    RunAll {
        /// Field degree of the partition census.
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// Random permutations on top of identity and reversal.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// All 8! permutations.
        #[arg(long)]
        exhaustive: bool,
        /// Record per-check timings (reports then differ between runs).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand)]
pub enum FieldCmd {
    /// Log/antilog table and coordinate order.
    Table {
        #[arg(long)]
        m: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeKind {
    /// H_a^p: parity p and Σ(x+a)^3 = 0.
    Hamming,
    /// Even weight and Σx = 0.
    Cyclic,
    /// Even weight, Σx = 0 and Σx^3 = 0.
    Bch,
    /// The perfect Hamming code of length 2^m - 1.
    Perfect,
}

#[derive(Subcommand)]
pub enum CodeCmd {
    /// Writes a code file.
    Build {
        #[arg(long, value_enum)]
        kind: CodeKind,
        #[arg(long)]
        m: u32,
        /// Point a as a coordinate index (0 is the zero element, k+1 is a^k).
        #[arg(long, default_value_t = 0)]
        point: usize,
        #[arg(long, default_value_t = 0)]
        parity: u8,
    },
    /// Size, distance, covering radius, weight spectrum, perfectness.
    Stats { file: PathBuf },
}

#[derive(Subcommand)]
pub enum PartitionCmd {
    /// Class census; with --dir, writes one file per class.
    Build {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Partition laws and, at m = 3, the pair structure checks.
    Verify {
        #[arg(long, default_value_t = 3)]
        m: u32,
    },
}

#[derive(Subcommand)]
pub enum ProductCmd {
    /// Writes the product code for a permutation.
    Build {
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// Space-separated images of 0..8, e.g. "7 6 5 4 3 2 1 0", or identity / reversal.
        #[arg(long, conflicts_with = "perm_seed")]
        perm: Option<String>,
        /// Draw the permutation from a seeded stream.
        #[arg(long)]
        perm_seed: Option<u64>,
    },
    /// The pair-neighborhood formula, exhaustively or on sampled words.
    #[command(alias = "verify-prop1")]
    VerifyNeighborhoods {
        #[arg(long)]
        perm: Option<String>,
        /// Sample this many codewords instead of all 2048.
        #[arg(long, conflicts_with = "exhaustive")]
        samples: Option<usize>,
        /// Every codeword (the default).
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Subcommand)]
pub enum ComponentsCmd {
    /// Component sizes of a code file.
    Census {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"], conflicts_with = "all_pairs")]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        all_pairs: bool,
        /// With --all-pairs: only pairs inside one half.
        #[arg(long, requires = "all_pairs")]
        homogeneous_only: bool,
    },
    /// Every homogeneous pair of every sampled product code gives two halves.
    #[command(alias = "theorem1")]
    TwoHalves {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Covering radius of the i-even and i-odd halves and the distance-3 shell.
    #[command(alias = "prop3")]
    Radius {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// The two completions of the i-even half to a perfect code.
    #[command(alias = "corollary5")]
    Completions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// {(x, |x| mod 2, x)} and its balanced translate.
    Minimal {
        #[arg(long)]
        n: usize,
    },
    /// Random switching walk reporting component sizes and covering radii.
    ExploreRho3 {
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
}

#[derive(Subcommand)]
pub enum ColoringCmd {
    /// Builds the coloring and compares its parameter matrix with the expected one.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 6)]
        colors: usize,
    },
    /// Budgeted search for colorings with the six-color matrix at n = 7.
    SearchConverse {
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let g = &cli.global;
    match &cli.command {
        Command::Field { cmd } => commands::field(cmd),
        Command::Code { cmd } => commands::code(cmd, g),
        Command::Partition { cmd } => commands::partition(cmd),
        Command::Product { cmd } => commands::product(cmd, g),
        Command::Components { cmd } => commands::components(cmd, g),
        Command::Coloring { cmd } => commands::coloring(cmd),
        Command::RunAll {
            m,
            samples,
            exhaustive,
            timings,
        } => Ok(commands::run_all(*m, *samples, *exhaustive, *timings, g)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) if e.is_violation() => Outcome::failed(&e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.global.format {
        Format::Text => outcome.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("json");
            s.push('\n');
            s
        }
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
