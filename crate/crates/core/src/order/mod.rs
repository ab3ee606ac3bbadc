//! Finite posets, bounded lattices and the classical combinatorics on them:
//! chain covers (Dilworth), antichain layers (Mirsky), distinct
//! representatives (Hall) and sublattice closure.

use thiserror::Error;

mod lattice;
mod matching;
mod poset;
mod sdr;

pub use lattice::BoundedLattice;
pub use poset::{AntichainPartition, BuildMode, ChainCover, Extremum, FinitePoset};
pub use sdr::{SdrOutcome, SetFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("order contains a cycle: {}", .0.join(" <= "))]
    Cycle(Vec<String>),
    #[error("order is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("order is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("poset is empty")]
    Empty,
    #[error("poset has no least element")]
    NoBottom,
    #[error("poset has no greatest element")]
    NoTop,
    #[error("`{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("join table gives `{2}` for (`{0}`, `{1}`), which is not their least upper bound")]
    BadJoin(String, String, String),
    #[error("meet table gives `{2}` for (`{0}`, `{1}`), which is not their greatest lower bound")]
    BadMeet(String, String, String),
    #[error("operation table must be {0} x {0}")]
    TableShape(usize),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("member {0} of the family is not a subset of the universe")]
    MemberOutsideUniverse(usize),
}
