use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

/// Environment variable holding the default state budget of `oracle`.
pub const BUDGET_ENV: &str = "CROSSFAM_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "crossfam", version, about = "Pairwise cross-intersecting uniform families: bounds, scans and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct InstanceArgs {
    #[arg(long)]
    pub n: usize,
    /// Uniformities k_1,...,k_t, non-increasing.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub ks: Vec<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Closed-form maximum and the classical bounds it specializes.
    Bound {
        #[command(flatten)]
        inst: InstanceArgs,
    },
    /// Scan the objective over the ID space of one index, or of all.
    FScan {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        i: Option<usize>,
        /// Include every curve point in JSON output (CSV always has it).
        #[arg(long)]
        curve: bool,
    },
    /// Exhaustive checks of the structural lemmas on one instance.
    Lemmas {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, conflicts_with = "all_i")]
        i: Option<usize>,
        #[arg(long)]
        all_i: bool,
        /// Suffix depth j; every depth when absent.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Exact optimum over tuples of L-initial families.
    Oracle {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, env = BUDGET_ENV, default_value_t = crossfam_core::oracle::DEFAULT_BUDGET,
              value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Unrestricted optimum for two families against the L-initial one.
    KkCheck {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long, env = BUDGET_ENV, default_value_t = crossfam_core::oracle::DEFAULT_BUDGET,
              value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Witness families of every applicable equality case, verified.
    Extremal {
        #[command(flatten)]
        inst: InstanceArgs,
    },
    /// 1-based lex position of a k-set.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated ascending elements.
        #[arg(long)]
        set: String,
    },
    /// k-set at a 1-based lex position.
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        rank: String,
    },
    /// The set meeting the input exactly in its maximum, with union [max].
    Partner {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
    },
    /// Size of the L-initial k-uniform family with the given ID.
    Size {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        id: String,
    },
    /// Every acceptance criterion as one named check.
    Suite {
        #[arg(long, default_value_t = 11)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
    },
}
