//! Command-line front end: space documents, axiom checks, classification,
//! the chain solvers, scans and oracle cross-checks.
//!
//! Exit status 0 means success or feasible, 1 means infeasible or a failed
//! check (the report is still printed), 2 means a usage or input error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use roughspace_core::chain::{BoundMode, ScanRegime};
use roughspace_core::distribution::SlotModel;
use roughspace_core::numeric::ExactRatio;
use roughspace_core::space::{CrispnessConcept, RoughnessConcept};

mod commands;
pub mod document;
pub mod emit;

pub use commands::run;
pub use document::{parse_space_document, DocumentError, SpaceDocument};
pub use emit::{emit_table, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "roughspace", version, about = "Exact tools for higher granular operator spaces")]
pub struct RunConfig {
    /// Output format for tabular results.
    #[arg(long, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify every axiom of a space document.
    Check { document: PathBuf },
    /// Classification matrix, or one crisp set or rough catalog.
    Classify {
        document: PathBuf,
        #[arg(long, conflicts_with = "catalog")]
        crisp: Option<CrispnessConcept>,
        #[arg(long)]
        catalog: Option<RoughnessConcept>,
    },
    /// Check the minimal assumptions F1 to RC2 and the representation.
    Assume {
        document: PathBuf,
        /// Crispness concept used when the document has no profile.
        #[arg(long, default_value_t = CrispnessConcept::Definite)]
        crisp: CrispnessConcept,
    },
    /// Feasibility and counting for one instance.
    #[command(subcommand)]
    Solve(Solve),
    /// Feasibility rows over a range of n.
    Scan(ScanArgs),
    /// Scopes, choice counts, cover plans and consistency.
    #[command(subcommand)]
    Rbo(Rbo),
    /// Cross-check production results against brute force.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Emit the space document of a partition's powerset.
    MakePawlak {
        /// Comma-separated labels, e.g. `1,2,3,4`.
        #[arg(long)]
        universe: String,
        /// Blocks separated by `;`, e.g. `1,2;3,4`.
        #[arg(long)]
        blocks: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RbcArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    /// Parts must be pairwise distinct.
    #[arg(long)]
    pub distinct: bool,
}

#[derive(Debug, Subcommand)]
pub enum Solve {
    Pwc {
        #[arg(long)]
        n: u64,
    },
    Wdc {
        #[arg(long)]
        n: u64,
    },
    Boolean {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        include_x_zero: bool,
    },
    /// `--k` gives pi, `--pi` inverts to k, otherwise lists admissible k.
    Rdc {
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with_all = ["pi", "refine"])]
        k: Option<u64>,
        #[arg(long, conflicts_with = "refine")]
        pi: Option<ExactRatio>,
        #[arg(long, default_value = "1")]
        alpha: ExactRatio,
        #[arg(long, default_value_t = BoundMode::SqrtN)]
        bound_mode: BoundMode,
        /// Search for an admissible alpha on a refining grid.
        #[arg(long)]
        refine: bool,
        #[arg(long, default_value_t = 10)]
        grid: u64,
        #[arg(long, default_value_t = 6)]
        max_depth: u32,
    },
    Rbc {
        #[command(flatten)]
        problem: RbcArgs,
        /// Also list up to this many admissible partitions.
        #[arg(long)]
        list: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub regime: ScanRegime,
    #[arg(long, default_value_t = 1)]
    pub min_n: u64,
    #[arg(long)]
    pub max_n: u64,
    #[arg(long, default_value = "1")]
    pub alpha: ExactRatio,
    #[arg(long, default_value_t = BoundMode::SqrtN)]
    pub bound_mode: BoundMode,
    #[arg(long)]
    pub include_x_zero: bool,
}

#[derive(Debug, Subcommand)]
pub enum Rbo {
    /// Whether t rough objects fit n objects with k crisp ones.
    Consistency {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
    /// n(r, h), or n(r, h) - n(r, h_o) at a branching point.
    Count {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        h_o: Option<u64>,
        #[arg(long, default_value_t = SlotModel::StarsAndBars)]
        model: SlotModel,
    },
    /// Definable scopes of every rough element and the choice count.
    Scopes {
        document: PathBuf,
        #[arg(long, default_value_t = CrispnessConcept::Definite)]
        crisp: CrispnessConcept,
    },
    /// Chain cover plan of the crisp elements.
    Plan {
        document: PathBuf,
        #[arg(long, default_value_t = CrispnessConcept::Definite)]
        crisp: CrispnessConcept,
    },
}

#[derive(Debug, Subcommand)]
pub enum Oracle {
    Pwc {
        #[arg(long)]
        max_n: u64,
    },
    Wdc {
        #[arg(long)]
        max_n: u64,
    },
    Boolean {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        include_x_zero: bool,
    },
    /// Admissible-k counts under every bound mode.
    Rdc {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha: ExactRatio,
    },
    Rbc(RbcArgs),
    /// Order invariants and the sublattice closure of a small document.
    Space { document: PathBuf },
}

/// Exit status and rendered streams of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}
