use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::{FinitePoset, OrderError};

/// A finite bounded lattice: a poset together with its join and meet tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLattice {
    poset: FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl BoundedLattice {
    /// Derives join and meet from the order, failing if some pair lacks a
    /// least upper or greatest lower bound.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, OrderError> {
        if poset.is_empty() {
            return Err(OrderError::Empty);
        }
        let n = poset.len();
        // The least element of a set has the strictly smallest down-set.
        let height: Vec<usize> = (0..n).map(|i| poset.down_bits(i).count_ones(..)).collect();
        let depth: Vec<usize> = (0..n).map(|i| poset.up_bits(i).count_ones(..)).collect();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let mut upper = poset.up_bits(a).clone();
                upper.intersect_with(poset.up_bits(b));
                let j = upper
                    .ones()
                    .min_by_key(|&c| height[c])
                    .filter(|&c| *poset.up_bits(c) == upper)
                    .ok_or_else(|| {
                        OrderError::NoJoin(poset.label(a).into(), poset.label(b).into())
                    })?;
                let mut lower = poset.down_bits(a).clone();
                lower.intersect_with(poset.down_bits(b));
                let m = lower
                    .ones()
                    .min_by_key(|&c| depth[c])
                    .filter(|&c| *poset.down_bits(c) == lower)
                    .ok_or_else(|| {
                        OrderError::NoMeet(poset.label(a).into(), poset.label(b).into())
                    })?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        let bottom = poset.least().ok_or(OrderError::NoBottom)?;
        let top = poset.greatest().ok_or(OrderError::NoTop)?;
        Ok(BoundedLattice {
            poset,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// Takes explicit `n × n` join and meet tables and checks them
    /// exhaustively against the order.
    pub fn with_tables(
        poset: FinitePoset,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
    ) -> Result<Self, OrderError> {
        if poset.is_empty() {
            return Err(OrderError::Empty);
        }
        let n = poset.len();
        let flatten = |table: Vec<Vec<usize>>| -> Result<Vec<usize>, OrderError> {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(OrderError::TableShape(n));
            }
            let flat: Vec<usize> = table.into_iter().flatten().collect();
            if let Some(&bad) = flat.iter().find(|&&v| v >= n) {
                return Err(OrderError::IndexOutOfRange(bad));
            }
            Ok(flat)
        };
        let join = flatten(join)?;
        let meet = flatten(meet)?;
        let bottom = poset.least().ok_or(OrderError::NoBottom)?;
        let top = poset.greatest().ok_or(OrderError::NoTop)?;
        let lattice = BoundedLattice {
            poset,
            join,
            meet,
            bottom,
            top,
        };
        lattice.verify_tables()?;
        Ok(lattice)
    }

    /// Checks every table entry: `up(a ∨ b) = up(a) ∩ up(b)` and dually for
    /// meets, which is exactly the least-upper / greatest-lower bound
    /// property.
    pub fn verify_tables(&self) -> Result<(), OrderError> {
        let p = &self.poset;
        let n = p.len();
        let mut scratch = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in 0..n {
                let j = self.join(a, b);
                scratch.clone_from(p.up_bits(a));
                scratch.intersect_with(p.up_bits(b));
                if *p.up_bits(j) != scratch {
                    return Err(OrderError::BadJoin(
                        p.label(a).into(),
                        p.label(b).into(),
                        p.label(j).into(),
                    ));
                }
                let m = self.meet(a, b);
                scratch.clone_from(p.down_bits(a));
                scratch.intersect_with(p.down_bits(b));
                if *p.down_bits(m) != scratch {
                    return Err(OrderError::BadMeet(
                        p.label(a).into(),
                        p.label(b).into(),
                        p.label(m).into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// Join table as rows, for serialisation.
    pub fn join_table(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    pub fn meet_table(&self) -> Vec<Vec<usize>> {
        self.meet.chunks(self.len()).map(<[usize]>::to_vec).collect()
    }

    /// Smallest subset containing `seed` (and `⊥`, `⊤` when `include_bounds`)
    /// closed under join and meet. This is the set of values of lattice
    /// terms over the seed.
    pub fn sublattice_closure(&self, seed: &BTreeSet<usize>, include_bounds: bool) -> BTreeSet<usize> {
        let mut member = FixedBitSet::with_capacity(self.len());
        let mut elems: Vec<usize> = Vec::new();
        let push = |x: usize, member: &mut FixedBitSet, elems: &mut Vec<usize>| {
            if !member.put(x) {
                elems.push(x);
            }
        };
        if include_bounds {
            push(self.bottom, &mut member, &mut elems);
            push(self.top, &mut member, &mut elems);
        }
        for &x in seed {
            push(x, &mut member, &mut elems);
        }
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for k in 0..=i {
                let y = elems[k];
                push(self.join(x, y), &mut member, &mut elems);
                push(self.meet(x, y), &mut member, &mut elems);
            }
            i += 1;
        }
        elems.into_iter().collect()
    }

    /// [`sublattice_closure`](Self::sublattice_closure) with the bounds
    /// admitted as nullary terms.
    pub fn closure(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.sublattice_closure(seed, true)
    }
}
