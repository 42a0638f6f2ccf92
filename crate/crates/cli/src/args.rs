use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "eulerlab", version, about = "Partial Euler products of Dirichlet L-functions")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Directory of `*.zeros` fixtures; `EULERLAB_ZEROS` takes precedence.
    #[arg(long, global = true)]
    pub zeros: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characters mod q with conductor, order, parity, Gauss sum and root number.
    Characters {
        #[arg(long)]
        q: u64,
    },
    /// θ, ψ and π by residue class.
    Sieve {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: String,
    },
    /// Partial Euler product at s.
    Product {
        #[arg(long)]
        chi: String,
        #[command(flatten)]
        s: PointArgs,
        #[arg(long)]
        x: String,
    },
    /// Right-hand side of the general formula: a breakdown at one x, a sweep on a grid.
    Aim {
        #[arg(long)]
        chi: String,
        #[command(flatten)]
        s: PointArgs,
        #[arg(long)]
        x: String,
        /// Chain length bound `[2 + 1/(2σ)]` instead of `[1 + 1/(2σ)]`.
        #[arg(long)]
        wide_chain: bool,
        /// Alternate sign set for Re s < 1/2.
        #[arg(long)]
        alternate_signs: bool,
    },
    /// Ratio of the scaled partial product to its limit on the critical line.
    Drh {
        #[arg(long)]
        chi: String,
        /// Ordinate t of s = 1/2 + it.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        x: String,
    },
    /// The ζ formula at real s.
    Ramanujan {
        #[command(flatten)]
        s: PointArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        wide_chain: bool,
        #[arg(long)]
        alternate_signs: bool,
    },
    /// Σ_{q ≤ Q} max_{y ≤ x} max_a |θ(y; q, a) − y/φ(q)|.
    Bv {
        /// Largest modulus Q.
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: String,
    },
    /// M(x), L(x), the √2 log residual and Σ 1/|ρ| over ζ zeros up to --t.
    Appendix {
        #[arg(long)]
        x: String,
        /// Height for the zero sum; defaults to the fixture's completeness height.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Run the acceptance checks.
    Verify {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// s as "re" or "re,im".
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Mark s as lying on the critical line (requires re = 0.5).
    #[arg(long)]
    pub on_line: bool,
}
