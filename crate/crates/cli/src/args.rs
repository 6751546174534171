use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "braidkit", version, about = "Braid group algorithms")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on super summit set size and on power-search steps.
    #[arg(long, global = true, value_name = "N")]
    pub limit: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Strands {
    /// Number of strands.
    #[arg(short = 'n', long = "strands")]
    pub n: usize,
}

/// `A *_C B` with `σ_k^p = τ_j^r`.
#[derive(Debug, Args)]
pub struct Presentation {
    #[arg(long, default_value_t = 3)]
    pub n1: usize,
    #[arg(long, default_value_t = 3)]
    pub n2: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub j: usize,
    #[arg(long, default_value_t = 2)]
    pub p: i64,
    #[arg(long, default_value_t = 3)]
    pub r: i64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Preset {
    Desk,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left normal form `D^r | F1 | … |`.
    Nf {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether two words are the same braid.
    Eq {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Exponent sum.
    Exp {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Induced permutation, one-based.
    Perm {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether Y is a power of X.
    Gwp {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Whether two braids are conjugate.
    Conj {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Every k with σ_i^-k · a · σ_i^k = b.
    ConjPower {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(short = 'i', long)]
        i: usize,
    },
    /// (m, n) with σ_k^(pm) · u · σ_k^(pn) = v.
    DoubleCoset {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        p: i64,
    },
    /// Super summit set, one normal form per line.
    Sss {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Word problem in the amalgam; words look like "A: 1 2; B: -1".
    AmalgamWp {
        #[command(flatten)]
        pres: Presentation,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Conjugacy in the amalgam.
    AmalgamConj {
        #[command(flatten)]
        pres: Presentation,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Commutator key agreement; prints the transcript as JSON.
    Aag {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "desk")]
        preset: Preset,
    },
    /// Commuting-subgroup key agreement; prints the transcript as JSON.
    Klchkp {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "desk")]
        preset: Preset,
    },
}
