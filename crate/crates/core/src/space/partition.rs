//! Pawlak spaces: the powerset of a universe with approximations induced by
//! an equivalence relation given as a partition.

use std::collections::BTreeSet;

use crate::order::{BoundedLattice, FinitePoset};

use super::{HigherGranularSpace, SpaceError};

/// Largest universe for which the powerset lattice is materialised.
pub const MAX_PARTITION_UNIVERSE: usize = 10;

/// Label of the subset with bitmask `mask`, e.g. `{1,2}` or `{}`.
pub fn subset_label<S: AsRef<str>>(universe: &[S], mask: usize) -> String {
    let members: Vec<&str> = universe
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, u)| u.as_ref())
        .collect();
    format!("{{{}}}", members.join(","))
}

impl HigherGranularSpace {
    /// The powerset of `universe` ordered by inclusion, with `x^l` the union
    /// of blocks inside `x`, `x^u` the union of blocks meeting `x`, and the
    /// blocks as granules.
    ///
    /// Element `i` of the lattice is the subset whose bitmask is `i` (bit
    /// `j` set when `universe[j]` belongs to it).
    pub fn from_partition<S: AsRef<str>>(universe: &[S], blocks: &[Vec<S>]) -> Result<Self, SpaceError> {
        let m = universe.len();
        if m > MAX_PARTITION_UNIVERSE {
            return Err(SpaceError::UniverseTooLarge(m));
        }
        let position = |s: &S| {
            universe
                .iter()
                .position(|u| u.as_ref() == s.as_ref())
                .ok_or_else(|| SpaceError::UnknownLabel(s.as_ref().to_string()))
        };
        let mut seen = 0usize;
        let mut block_masks = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(SpaceError::EmptyBlock(b));
            }
            let mut mask = 0usize;
            for e in block {
                let bit = 1 << position(e)?;
                if (seen | mask) & bit != 0 {
                    return Err(SpaceError::PartitionOverlap(e.as_ref().to_string()));
                }
                mask |= bit;
            }
            seen |= mask;
            block_masks.push(mask);
        }
        if let Some(j) = (0..m).find(|j| seen >> j & 1 == 0) {
            return Err(SpaceError::PartitionMissing(universe[j].as_ref().to_string()));
        }

        let size = 1usize << m;
        let labels: Vec<String> = (0..size).map(|s| subset_label(universe, s)).collect();
        let poset = FinitePoset::from_leq_fn(&labels, |a, b| a & b == a)?;
        let table = |f: fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..size).map(|a| (0..size).map(|b| f(a, b)).collect()).collect()
        };
        let lattice = BoundedLattice::with_tables(poset, table(|a, b| a | b), table(|a, b| a & b))?;

        let lower = (0..size)
            .map(|x| block_masks.iter().filter(|&&b| b & x == b).fold(0, |acc, b| acc | b))
            .collect();
        let upper = (0..size)
            .map(|x| block_masks.iter().filter(|&&b| b & x != 0).fold(0, |acc, b| acc | b))
            .collect();
        let granulation: BTreeSet<usize> = block_masks.into_iter().collect();
        HigherGranularSpace::new(lattice, lower, upper, granulation)
    }
}
