use std::collections::BTreeSet;

use super::matching::{alternating_reach, maximum_matching};
use super::OrderError;

/// An indexed family of subsets of a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily<T> {
    universe: Vec<T>,
    members: Vec<BTreeSet<usize>>,
}

/// Result of a search for a system of distinct representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdrOutcome<T> {
    /// `representatives[i]` belongs to member `i`, all distinct.
    Representatives(Vec<T>),
    /// A subfamily whose union is smaller than the subfamily itself.
    HallViolation {
        subfamily: Vec<usize>,
        union_size: usize,
    },
}

impl<T> SdrOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SdrOutcome::Representatives(_))
    }
}

impl<T: PartialEq + Clone> SetFamily<T> {
    pub fn new(universe: Vec<T>, members: Vec<Vec<T>>) -> Result<Self, OrderError> {
        let members = members
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.iter()
                    .map(|x| {
                        universe
                            .iter()
                            .position(|u| u == x)
                            .ok_or(OrderError::MemberOutsideUniverse(i))
                    })
                    .collect::<Result<BTreeSet<usize>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SetFamily { universe, members })
    }

    pub fn universe(&self) -> &[T] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member `i` as universe positions.
    pub fn member(&self, i: usize) -> &BTreeSet<usize> {
        &self.members[i]
    }

    /// Finds distinct representatives via maximum matching. When none exist,
    /// the alternating-path reach of an unmatched member is returned as a
    /// Hall-condition witness.
    pub fn find_sdr(&self) -> SdrOutcome<T> {
        let adj: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|m| m.iter().copied().collect())
            .collect();
        let matching = maximum_matching(self.universe.len(), &adj);
        match matching.left.iter().position(Option::is_none) {
            None => SdrOutcome::Representatives(
                matching
                    .left
                    .iter()
                    .map(|v| self.universe[v.expect("perfect on the left")].clone())
                    .collect(),
            ),
            Some(free) => {
                let subfamily = alternating_reach(free, &adj, &matching);
                let union: BTreeSet<usize> = subfamily
                    .iter()
                    .flat_map(|&i| self.members[i].iter().copied())
                    .collect();
                SdrOutcome::HallViolation {
                    subfamily,
                    union_size: union.len(),
                }
            }
        }
    }
}
