use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Heights, Weil functions, Hilbert and Chow weights, and an empirical
/// checker for the subgeneral-position height inequality over ℚ.
#[derive(Debug, Parser)]
#[command(name = "subgen", version, arg_required_else_help = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized search.
    #[arg(long, global = true, env = "SUBGEN_SEED")]
    pub seed: Option<u64>,
    /// Finite place set S, e.g. `inf,2,3,5`.
    #[arg(long, global = true)]
    pub places: Option<String>,
    /// Worker threads for point evaluation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print exact norm products as rationals instead of logarithms.
    #[arg(long, global = true)]
    pub exact: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Height of a projective point `(a0 : … : am)` or of a polynomial.
    Height {
        object: String,
        /// Number of variables of a polynomial (default: inferred).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Weil function λ_{Q,v}(x) at each place of S (or at `--place`).
    Weil {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        place: Option<String>,
    },
    /// Hilbert function H_I(u).
    HilbertFn {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        u: u32,
    },
    /// Hilbert weight S_I(u, c) with a maximizing monomial basis.
    HilbertWeight {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        u: u32,
        /// Weight vector, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Chow weight e_X(c): exact where the Chow form is available,
    /// otherwise an interval from the Hilbert weight at degree `--u`.
    ChowWeight {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Degree for the estimate (default Δ + 1).
        #[arg(long)]
        u: Option<u32>,
        /// `as-printed`, `dimension` or `both`.
        #[arg(long, default_value = "both")]
        convention: String,
        /// Also print the Chow form.
        #[arg(long)]
        form: bool,
    },
    /// Whether the polynomials are in N-subgeneral position on V.
    CheckPosition {
        #[command(flatten)]
        config: ConfigArg,
    },
    /// Seeded search for the triangular replacement combinations.
    Replace {
        #[command(flatten)]
        config: ConfigArg,
    },
    /// Evaluate the height inequality over all points of height ≤ log H.
    Verify {
        #[command(flatten)]
        config: ConfigArg,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        mode: Option<String>,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Margins under all five bound modes, side by side.
    Compare {
        #[command(flatten)]
        config: ConfigArg,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Eliminate variables (`--keep`) or compute the ideal of an image
    /// (`--map`).
    Eliminate {
        #[command(flatten)]
        ideal: IdealArg,
        /// Variable indices to keep; they are renumbered from 0.
        #[arg(long, value_delimiter = ',', conflicts_with = "map", required_unless_present = "map")]
        keep: Vec<usize>,
        /// Homogeneous polynomials of equal degree defining the map.
        #[arg(long, value_delimiter = ',')]
        map: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal JSON file: {"vars": 3, "gens": ["x0*x2 - x1^2"]}.
    #[arg(long)]
    pub ideal: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConfigArg {
    /// Experiment configuration JSON file.
    #[arg(long)]
    pub config: PathBuf,
    /// Override the subgeneral-position index N.
    #[arg(long = "N")]
    pub n_big: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Height bound: coordinates up to H in absolute value.
    #[arg(long = "H")]
    pub height_bound: Option<u64>,
    #[arg(long)]
    pub epsilon: Option<String>,
}
