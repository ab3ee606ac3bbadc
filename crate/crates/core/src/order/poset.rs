use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use super::matching::maximum_matching;
use super::OrderError;

/// How the pairs handed to [`FinitePoset::build`] are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    /// Pairs generate the order; the reflexive-transitive closure is taken.
    Covers,
    /// Pairs already list the whole order (reflexive pairs may be omitted).
    /// Missing transitive pairs are rejected.
    FullOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Max,
    Min,
}

/// A finite partial order over opaque string labels.
///
/// Elements are addressed by their position in the label list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[i]` holds every `j` with `i <= j`.
    up: Vec<FixedBitSet>,
    /// `down[i]` holds every `j` with `j <= i`.
    down: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

/// A partition of the elements into pairwise disjoint chains, each listed
/// bottom-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    pub chains: Vec<Vec<usize>>,
}

impl ChainCover {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn chain_of(&self, x: usize) -> Option<usize> {
        self.chains.iter().position(|c| c.contains(&x))
    }
}

/// A partition of the elements into antichains, listed from the minimal layer
/// upwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainPartition {
    pub antichains: Vec<Vec<usize>>,
}

impl AntichainPartition {
    pub fn len(&self) -> usize {
        self.antichains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.antichains.is_empty()
    }
}

fn index_labels<S: AsRef<str>>(elements: &[S]) -> Result<(Vec<String>, HashMap<String, usize>), OrderError> {
    let mut labels = Vec::with_capacity(elements.len());
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        let label = e.as_ref().to_string();
        if index.insert(label.clone(), i).is_some() {
            return Err(OrderError::DuplicateLabel(label));
        }
        labels.push(label);
    }
    Ok((labels, index))
}

impl FinitePoset {
    /// Builds a poset from labelled pairs `(a, b)` meaning `a <= b`.
    pub fn build<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
        mode: BuildMode,
    ) -> Result<Self, OrderError> {
        let (labels, index) = index_labels(elements)?;
        let n = labels.len();
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| OrderError::UnknownLabel(s.as_ref().to_string()))
        };

        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(i);
                row
            })
            .collect();
        for (a, b) in pairs {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if a != b && !up[a].contains(b) {
                succ[a].push(b);
            }
            up[a].insert(b);
        }

        if let Some(cycle) = find_cycle(&succ) {
            return Err(OrderError::Cycle(
                cycle.into_iter().map(|i| labels[i].clone()).collect(),
            ));
        }

        match mode {
            BuildMode::Covers => transitive_closure(&mut up),
            BuildMode::FullOrder => {
                if let Some((a, b, c)) = transitivity_gap(&up) {
                    return Err(OrderError::NotTransitive(
                        labels[a].clone(),
                        labels[b].clone(),
                        labels[c].clone(),
                    ));
                }
            }
        }

        Ok(Self::from_up_sets(labels, index, up))
    }

    /// Builds a poset from a `<=` predicate over `0..labels.len()`,
    /// validating reflexivity, antisymmetry and transitivity.
    pub fn from_leq_fn<S: AsRef<str>>(
        elements: &[S],
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, OrderError> {
        let (labels, index) = index_labels(elements)?;
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    row.insert(j);
                }
            }
            if !row.contains(i) {
                return Err(OrderError::NotReflexive(labels[i].clone()));
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(OrderError::Cycle(vec![
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[i].clone(),
                    ]));
                }
            }
        }
        if let Some((a, b, c)) = transitivity_gap(&up) {
            return Err(OrderError::NotTransitive(
                labels[a].clone(),
                labels[b].clone(),
                labels[c].clone(),
            ));
        }
        Ok(Self::from_up_sets(labels, index, up))
    }

    fn from_up_sets(labels: Vec<String>, index: HashMap<String, usize>, up: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for a in 0..n {
            for b in up[a].ones() {
                // [a, b] = {a, b} exactly when b covers a.
                if a != b && up[a].intersection(&down[b]).count() == 2 {
                    covers.push((a, b));
                    upper_covers[a].push(b);
                    lower_covers[b].push(a);
                }
            }
        }
        FinitePoset {
            labels,
            index,
            up,
            down,
            covers,
            upper_covers,
            lower_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Covering pairs `(a, b)` with `a ≺ b`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub(crate) fn up_bits(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub(crate) fn down_bits(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// Elements `y` with `x <= y`.
    pub fn up_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[x].ones()
    }

    /// Elements `y` with `y <= x`.
    pub fn down_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.down[x].ones()
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].count_ones(..) == self.len())
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.down[i].count_ones(..) == self.len())
    }

    pub fn is_chain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .enumerate()
            .all(|(i, &a)| elems[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    pub fn is_antichain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .enumerate()
            .all(|(i, &a)| elems[i + 1..].iter().all(|&b| !self.comparable(a, b)))
    }

    /// The subposet induced on `subset`, keeping labels and the relative
    /// input order. Returns the new poset and the map from its indices back
    /// to indices of `self`.
    pub fn restrict(&self, subset: &BTreeSet<usize>) -> (FinitePoset, Vec<usize>) {
        let keep: Vec<usize> = subset.iter().copied().collect();
        let labels: Vec<&str> = keep.iter().map(|&i| self.label(i)).collect();
        let sub = FinitePoset::from_leq_fn(&labels, |i, j| self.leq(keep[i], keep[j]))
            .expect("induced order of a valid poset is a partial order");
        (sub, keep)
    }

    /// Minimum disjoint chain cover, found through a maximum matching on the
    /// split graph of the strict order. Its size is the width.
    pub fn width_with_cover(&self) -> Result<(usize, ChainCover), OrderError> {
        if self.is_empty() {
            return Err(OrderError::Empty);
        }
        let n = self.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|i| self.up[i].ones().filter(|&j| j != i).collect())
            .collect();
        let matching = maximum_matching(n, &adj);
        let mut chains = Vec::new();
        for start in 0..n {
            if matching.right[start].is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = matching.left[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        Ok((chains.len(), ChainCover { chains }))
    }

    /// Partition into antichains by repeatedly peeling off the minimal
    /// elements. The number of layers equals the longest chain length.
    pub fn min_antichain_partition(&self) -> Result<AntichainPartition, OrderError> {
        if self.is_empty() {
            return Err(OrderError::Empty);
        }
        let n = self.len();
        let mut remaining = FixedBitSet::with_capacity(n);
        remaining.insert_range(..);
        let mut antichains = Vec::new();
        while remaining.count_ones(..) > 0 {
            let layer: Vec<usize> = remaining
                .ones()
                .filter(|&x| self.down[x].intersection(&remaining).count() == 1)
                .collect();
            for &x in &layer {
                remaining.set(x, false);
            }
            antichains.push(layer);
        }
        Ok(AntichainPartition { antichains })
    }

    /// Elements with more than one upper cover or more than one lower cover.
    pub fn branching_points(&self) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&x| self.upper_covers[x].len() > 1 || self.lower_covers[x].len() > 1)
            .collect()
    }

    /// Maximal or minimal elements of the subposet induced on `subset`.
    pub fn extremal(&self, subset: &BTreeSet<usize>, which: Extremum) -> BTreeSet<usize> {
        subset
            .iter()
            .copied()
            .filter(|&x| {
                !subset.iter().any(|&y| match which {
                    Extremum::Max => self.lt(x, y),
                    Extremum::Min => self.lt(y, x),
                })
            })
            .collect()
    }

    /// Elements sorted so that `a < b` implies `a` comes first; ties keep
    /// input order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(..), i));
        order
    }
}

fn transitive_closure(up: &mut [FixedBitSet]) {
    let n = up.len();
    for k in 0..n {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
}

/// Some `(a, b, c)` with `a <= b <= c` but not `a <= c`.
fn transitivity_gap(up: &[FixedBitSet]) -> Option<(usize, usize, usize)> {
    for (a, row) in up.iter().enumerate() {
        for b in row.ones() {
            if let Some(c) = up[b].difference(row).next() {
                return Some((a, b, c));
            }
        }
    }
    None
}

/// A directed cycle in `succ`, returned as a closed walk `v0, …, v0`.
fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        mark[root] = Mark::Active;
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < succ[v].len() {
                let w = succ[v][top.1];
                top.1 += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0));
                    }
                    Mark::Active => {
                        let pos = stack.iter().position(|&(u, _)| u == w).unwrap();
                        let mut cycle: Vec<usize> = stack[pos..].iter().map(|&(u, _)| u).collect();
                        cycle.push(w);
                        return Some(cycle);
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    None
}
