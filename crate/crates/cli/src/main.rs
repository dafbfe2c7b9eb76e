//! `symca`: counting, enumeration, lattices, simulation and polynomial
//! checks for symmetric cellular automata.
//!
//! Exit status: 0 on success, 1 when `verify-decomposition` finds a failing
//! relation, 2 on usage or input errors.

mod commands;
mod lattice_spec;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    /// Outer totalistic: the center is kept apart from the leaves.
    Leaves,
    /// Totalistic: the center counts like a leaf.
    Full,
}

impl From<LevelArg> for symca::Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Leaves => symca::Level::Leaves,
            LevelArg::Full => symca::Level::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Report,
    Edges,
    Faces,
    Embedding,
}

#[derive(Parser, Debug)]
#[command(name = "symca", version, about = "Symmetric cellular automata on regular lattices")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of rules, rules fixed by the black-white swap, and orbits.
    Count {
        #[arg(long, default_value_t = 2)]
        q: u8,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = LevelArg::Leaves)]
        level: LevelArg,
        /// Also count orbits by enumerating every rule.
        #[arg(long)]
        bruteforce: bool,
        /// Largest number of rule tables the brute force may visit.
        #[arg(long, default_value_t = symca::rule::DEFAULT_BRUTEFORCE_CAP)]
        cap: u64,
    },
    /// Print one canonical binary rule per black-white orbit.
    Enumerate {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = LevelArg::Leaves)]
        level: LevelArg,
        /// Stop after this many rules.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = symca::rule::DEFAULT_BRUTEFORCE_CAP)]
        cap: u64,
    },
    /// Build a lattice and print a validation report or export it.
    Lattice {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, value_enum, default_value_t = Export::Report)]
        export: Export,
        /// Write the export to a file instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Evolve a state and report the final state, census and cycle.
    Run {
        /// Rule as B/S notation or an α string.
        #[arg(long)]
        rule: String,
        /// Alphabet size for α-string rules.
        #[arg(long, default_value_t = 2)]
        q: u8,
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, default_value_t = 0)]
        steps: u64,
        /// Look for a repeated state within this many steps.
        #[arg(long)]
        max_steps: Option<u64>,
        /// RLE pattern placed on an empty grid.
        #[arg(long, conflicts_with = "state")]
        pattern: Option<std::path::PathBuf>,
        /// Offset of the pattern as X,Y.
        #[arg(long, default_value = "0,0")]
        offset: String,
        /// State file with header `q k V generation`.
        #[arg(long)]
        state: Option<std::path::PathBuf>,
        /// Seed of the random initial state (ChaCha8, one draw per cell in
        /// index order).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Live-cell probability of a random binary initial state.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Restrict the census to non-boundary cells.
        #[arg(long)]
        interior_only: bool,
        /// Write the census time series as CSV.
        #[arg(long)]
        census_csv: Option<std::path::PathBuf>,
        /// Write the final state file.
        #[arg(long)]
        out_state: Option<std::path::PathBuf>,
    },
    /// Algebraic normal form of a binary rule over GF(2).
    Poly {
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 8)]
        k: u32,
    },
    /// Check the published relations of a Life-family rule, or custom ones.
    VerifyDecomposition {
        /// `conway`, `highlife`, `daynight`, or any B/S rule on 8 leaves
        /// together with `--relation`.
        #[arg(long)]
        rule: String,
        /// Extra relation to check; may be repeated.
        #[arg(long)]
        relation: Vec<String>,
    },
    /// Whether the tiling {P,K} is spherical, Euclidean or hyperbolic.
    Classify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(clap::Args, Debug)]
pub struct LatticeArgs {
    /// torus:P,K | klein:P,K | moore:torus | moore:klein | sphere:P,K | c60 |
    /// hyperbolic:P,K | fullerene:FILE
    #[arg(long)]
    pub lattice: String,
    /// Grid size as WxH for wrapped lattices.
    #[arg(long)]
    pub dims: Option<String>,
    /// Rings around the center of a hyperbolic patch.
    #[arg(long)]
    pub layers: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
