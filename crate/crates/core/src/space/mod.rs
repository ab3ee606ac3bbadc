//! Higher rough operator spaces (bounded posets with lower/upper operators)
//! and higher granular operator spaces (bounded lattices with an admissible
//! granulation).
//!
//! Construction only checks structure: operator maps are total and the
//! carrier is bounded. Every axiom is checked by [`HigherRoughSpace::verify`]
//! or [`HigherGranularSpace::verify`], which report failures with witnesses
//! instead of rejecting the space.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::order::{BoundedLattice, FinitePoset, OrderError};

mod assumptions;
mod axioms;
mod classify;
mod partition;

pub use assumptions::{
    AssumptionCheck, AssumptionFlag, AssumptionItem, AssumptionProfile, AssumptionReport,
    CheckOutcome, RepresentationMap,
};
pub use axioms::{Axiom, AxiomCheck, AxiomReport, Witness};
pub use classify::{
    ClassificationMatrix, CrispnessConcept, IntervalEntry, MatrixCell, RoughCatalog,
    RoughnessConcept, CatalogShape,
};
pub use partition::{subset_label, MAX_PARTITION_UNIVERSE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("carrier has no least or no greatest element")]
    NotBounded,
    #[error("{map} map has {got} entries, expected {expected}")]
    MapNotTotal {
        map: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{map} map sends element {element} to index {value}, out of range")]
    MapOutOfRange {
        map: &'static str,
        element: usize,
        value: usize,
    },
    #[error("granule index {0} is out of range")]
    GranuleOutOfRange(usize),
    #[error("partition blocks overlap at `{0}`")]
    PartitionOverlap(String),
    #[error("partition blocks miss `{0}`")]
    PartitionMissing(String),
    #[error("partition block {0} is empty")]
    EmptyBlock(usize),
    #[error("`{0}` is not in the universe")]
    UnknownLabel(String),
    #[error("universe of {0} elements is too large for an explicit powerset (max {MAX_PARTITION_UNIVERSE})")]
    UniverseTooLarge(usize),
    #[error("element {0} is outside the space")]
    ElementOutOfRange(usize),
    #[error("`{0}` has no pair of crisp elements a < b to represent it")]
    Unrepresentable(String),
}

fn check_map(map: &'static str, values: &[usize], n: usize) -> Result<(), SpaceError> {
    if values.len() != n {
        return Err(SpaceError::MapNotTotal {
            map,
            expected: n,
            got: values.len(),
        });
    }
    if let Some((element, &value)) = values.iter().enumerate().find(|(_, &v)| v >= n) {
        return Err(SpaceError::MapOutOfRange { map, element, value });
    }
    Ok(())
}

/// A bounded poset with total lower and upper operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherRoughSpace {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
    lower: Vec<usize>,
    upper: Vec<usize>,
}

impl HigherRoughSpace {
    pub fn new(poset: FinitePoset, lower: Vec<usize>, upper: Vec<usize>) -> Result<Self, SpaceError> {
        let bottom = poset.least().ok_or(SpaceError::NotBounded)?;
        let top = poset.greatest().ok_or(SpaceError::NotBounded)?;
        check_map("lower", &lower, poset.len())?;
        check_map("upper", &upper, poset.len())?;
        Ok(HigherRoughSpace {
            poset,
            bottom,
            top,
            lower,
            upper,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn lower(&self, x: usize) -> usize {
        self.lower[x]
    }

    pub fn upper(&self, x: usize) -> usize {
        self.upper[x]
    }

    /// Checks every rough-space axiom pointwise.
    pub fn verify(&self) -> AxiomReport {
        AxiomReport {
            checks: axioms::rough_axioms(&self.poset, self.bottom, self.top, &self.lower, &self.upper),
        }
    }
}

/// A bounded lattice with lower/upper operators and a granulation. The
/// parthood relation is the lattice order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherGranularSpace {
    lattice: BoundedLattice,
    lower: Vec<usize>,
    upper: Vec<usize>,
    granulation: BTreeSet<usize>,
}

impl HigherGranularSpace {
    pub fn new(
        lattice: BoundedLattice,
        lower: Vec<usize>,
        upper: Vec<usize>,
        granulation: BTreeSet<usize>,
    ) -> Result<Self, SpaceError> {
        let n = lattice.len();
        check_map("lower", &lower, n)?;
        check_map("upper", &upper, n)?;
        if let Some(&g) = granulation.iter().find(|&&g| g >= n) {
            return Err(SpaceError::GranuleOutOfRange(g));
        }
        Ok(HigherGranularSpace {
            lattice,
            lower,
            upper,
            granulation,
        })
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    pub fn poset(&self) -> &FinitePoset {
        self.lattice.poset()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset().label(x)
    }

    pub fn lower(&self, x: usize) -> usize {
        self.lower[x]
    }

    pub fn upper(&self, x: usize) -> usize {
        self.upper[x]
    }

    pub fn lower_map(&self) -> &[usize] {
        &self.lower
    }

    pub fn upper_map(&self) -> &[usize] {
        &self.upper
    }

    pub fn granulation(&self) -> &BTreeSet<usize> {
        &self.granulation
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.poset().lt(a, b)
    }

    /// `x^l = x^u = x`.
    pub fn is_definite(&self, x: usize) -> bool {
        self.lower[x] == x && self.upper[x] == x
    }

    /// The underlying rough space, forgetting lattice operations and
    /// granules.
    pub fn rough_view(&self) -> HigherRoughSpace {
        HigherRoughSpace {
            poset: self.poset().clone(),
            bottom: self.lattice.bottom(),
            top: self.lattice.top(),
            lower: self.lower.clone(),
            upper: self.upper.clone(),
        }
    }

    /// Lattice tables, rough-space axioms, then WRA, LS and FU.
    pub fn verify(&self) -> AxiomReport {
        axioms::granular_axioms(self)
    }
}
