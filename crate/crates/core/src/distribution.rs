//! Distributing rough objects over a crisp poset that need not be a chain.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::chain::{count_bounded_partitions, rbc_sum};
use crate::numeric::{BigCount, ExactRatio};
use crate::order::{Extremum, FinitePoset, OrderError};
use crate::space::HigherGranularSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributionError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("the crisp poset needs a least and a greatest element")]
    Unbounded,
    #[error("k = {0} leaves no off-diagonal pairs (k must be at least 2)")]
    KTooSmall(u64),
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { k: u64, n: u64 },
    #[error("h_o = {h_o} exceeds h = {h}")]
    HoExceedsH { h: u64, h_o: u64 },
    #[error("model {model} gives n(r, h_o) > n(r, h) for r = {r}, h = {h}, h_o = {h_o}")]
    NonMonotone { model: SlotModel, r: u64, h: u64, h_o: u64 },
    #[error("element {0} is outside the space")]
    ElementOutOfRange(usize),
}

/// Lower and upper definable scopes of `x`: the maximal crisp elements
/// below it and the minimal crisp elements above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScopePair {
    pub x: usize,
    pub lower: BTreeSet<usize>,
    pub upper: BTreeSet<usize>,
}

impl ScopePair {
    pub fn c(&self) -> usize {
        self.lower.len()
    }

    pub fn v(&self) -> usize {
        self.upper.len()
    }

    /// Pairs `(a, b)` in `SL × SU` with `a ≠ b`.
    pub fn candidates(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lower
            .iter()
            .flat_map(|&a| self.upper.iter().map(move |&b| (a, b)))
            .filter(|(a, b)| a != b)
    }
}

pub fn scope_pair(poset: &FinitePoset, crisp: &BTreeSet<usize>, x: usize) -> ScopePair {
    let below: BTreeSet<usize> = poset.down_set(x).filter(|y| crisp.contains(y)).collect();
    let above: BTreeSet<usize> = poset.up_set(x).filter(|y| crisp.contains(y)).collect();
    ScopePair {
        x,
        lower: poset.extremal(&below, Extremum::Max),
        upper: poset.extremal(&above, Extremum::Min),
    }
}

pub fn scopes(space: &HigherGranularSpace, crisp: &BTreeSet<usize>, x: usize) -> Result<ScopePair, DistributionError> {
    if x >= space.len() {
        return Err(DistributionError::ElementOutOfRange(x));
    }
    if let Some(&c) = crisp.iter().find(|&&c| c >= space.len()) {
        return Err(DistributionError::ElementOutOfRange(c));
    }
    Ok(scope_pair(space.poset(), crisp, x))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceFactor {
    pub scopes: ScopePair,
    pub candidates: u64,
}

/// Joint choice functions `ψ` over the rough elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceCount {
    pub factors: Vec<ChoiceFactor>,
    pub total: BigCount,
    /// Rough elements with no off-diagonal candidate.
    pub unrepresentable: Vec<usize>,
}

pub fn choice_count(
    space: &HigherGranularSpace,
    crisp: &BTreeSet<usize>,
    rough: &BTreeSet<usize>,
) -> Result<ChoiceCount, DistributionError> {
    choice_count_in(space.poset(), crisp, rough)
}

/// [`choice_count`] over a bare poset.
pub fn choice_count_in(
    poset: &FinitePoset,
    crisp: &BTreeSet<usize>,
    rough: &BTreeSet<usize>,
) -> Result<ChoiceCount, DistributionError> {
    if let Some(&x) = crisp.iter().chain(rough).find(|&&x| x >= poset.len()) {
        return Err(DistributionError::ElementOutOfRange(x));
    }
    let rough: Vec<usize> = rough.iter().copied().collect();
    let factors: Vec<ChoiceFactor> = rough
        .par_iter()
        .map(|&x| {
            let scopes = scope_pair(poset, crisp, x);
            let candidates = scopes.candidates().count() as u64;
            ChoiceFactor { scopes, candidates }
        })
        .collect();
    let unrepresentable: Vec<usize> = factors
        .iter()
        .filter(|f| f.candidates == 0)
        .map(|f| f.scopes.x)
        .collect();
    let total = factors.iter().map(|f| BigCount::from(f.candidates)).product();
    Ok(ChoiceCount {
        factors,
        total,
        unrepresentable,
    })
}

/// One chain of a [`CoverPlan`] with the slots it contributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSegment {
    /// Crisp elements of the chain, ascending.
    pub elements: Vec<usize>,
    /// Lower cover of the least element on an earlier chain.
    pub attach: Option<usize>,
    /// First upper cover of the greatest element on another chain.
    pub rejoin: Option<usize>,
    /// Part of an earlier chain, from its least element up to `attach`,
    /// whose slots were already counted there.
    pub excluded: Vec<usize>,
    /// Length of the maximal chain `excluded ++ elements`.
    pub h: u64,
    /// Length of `excluded`.
    pub h_o: u64,
    /// `(h² - h) - (h_o² - h_o)`.
    pub slots: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPlan {
    /// Segments in plan order; the first runs from the least to the greatest
    /// element.
    pub segments: Vec<ChainSegment>,
    /// Elements with more than one upper cover.
    pub branch_points: BTreeSet<usize>,
}

impl CoverPlan {
    pub fn chain_count(&self) -> usize {
        self.segments.len()
    }

    pub fn total_slots(&self) -> u64 {
        self.segments.iter().map(|s| s.slots).sum()
    }
}

fn pair_slots(h: u64) -> u64 {
    h * h.saturating_sub(1)
}

/// A minimum disjoint chain cover of a bounded crisp poset, arranged so that
/// the first chain joins the least and greatest elements and every later
/// chain hangs from a lower cover on an earlier one.
pub fn cover_plan(crisp: &FinitePoset) -> Result<CoverPlan, DistributionError> {
    let (Some(bottom), Some(top)) = (crisp.least(), crisp.greatest()) else {
        return Err(DistributionError::Unbounded);
    };
    let (_, cover) = crisp.width_with_cover()?;
    let mut chains: Vec<Vec<usize>> = cover.chains;
    if bottom != top {
        for chain in &mut chains {
            chain.retain(|&e| e != top);
        }
        let first = chains
            .iter()
            .position(|c| c.contains(&bottom))
            .expect("cover contains the least element");
        chains[first].push(top);
        chains.retain(|c| !c.is_empty());
    }

    let order = crisp.linear_extension();
    let mut rank = vec![0; crisp.len()];
    for (i, &e) in order.iter().enumerate() {
        rank[e] = i;
    }
    for chain in &mut chains {
        chain.sort_by_key(|&e| rank[e]);
    }
    chains.sort_by_key(|c| if c.contains(&bottom) { 0 } else { rank[c[0]] + 1 });

    let mut chain_of = vec![0; crisp.len()];
    for (i, chain) in chains.iter().enumerate() {
        for &e in chain {
            chain_of[e] = i;
        }
    }

    let mut segments = Vec::with_capacity(chains.len());
    for (i, chain) in chains.iter().enumerate() {
        let least = chain[0];
        let greatest = *chain.last().expect("chains are nonempty");
        let rejoin = crisp
            .upper_covers(greatest)
            .iter()
            .copied()
            .filter(|&c| chain_of[c] != i)
            .min_by_key(|&c| (chain_of[c], c));
        let attach = (i > 0)
            .then(|| {
                crisp
                    .lower_covers(least)
                    .iter()
                    .copied()
                    .filter(|&c| chain_of[c] < i)
                    .min_by_key(|&c| (chain_of[c], c))
            })
            .flatten();
        let excluded: Vec<usize> = match attach {
            Some(p) => chains[chain_of[p]].iter().copied().filter(|&e| crisp.leq(e, p)).collect(),
            None => Vec::new(),
        };
        let h_o = excluded.len() as u64;
        let h = h_o + chain.len() as u64;
        segments.push(ChainSegment {
            elements: chain.clone(),
            attach,
            rejoin,
            excluded,
            h,
            h_o,
            slots: pair_slots(h) - pair_slots(h_o),
        });
    }

    Ok(CoverPlan {
        segments,
        branch_points: (0..crisp.len()).filter(|&b| crisp.upper_covers(b).len() > 1).collect(),
    })
}

/// How `r` rough objects are placed over the `g = h² - h` ordered slots of
/// an `h`-element crisp chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotModel {
    /// Occupancy vectors: `C(r + g - 1, g - 1)`.
    StarsAndBars,
    /// Partitions of `r` into at most `g` distinct positive parts.
    Distinct,
    /// Sum over `g`-part partitions with parts in `[a, b]` of the product
    /// of the parts.
    Bounded { a: u64, b: u64 },
}

impl fmt::Display for SlotModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotModel::StarsAndBars => f.write_str("stars-and-bars"),
            SlotModel::Distinct => f.write_str("distinct"),
            SlotModel::Bounded { a, b } => write!(f, "bounded({a},{b})"),
        }
    }
}

impl std::str::FromStr for SlotModel {
    type Err = String;

    /// `stars-and-bars`, `distinct` or `bounded:A:B`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stars-and-bars" => Ok(SlotModel::StarsAndBars),
            "distinct" => Ok(SlotModel::Distinct),
            _ => {
                let parts: Vec<&str> = s.split(':').collect();
                match parts.as_slice() {
                    ["bounded", a, b] => {
                        let a = a.parse().map_err(|_| format!("bad bound `{a}`"))?;
                        let b = b.parse().map_err(|_| format!("bad bound `{b}`"))?;
                        Ok(SlotModel::Bounded { a, b })
                    }
                    _ => Err(format!(
                        "unknown slot model `{s}` (expected stars-and-bars, distinct or bounded:A:B)"
                    )),
                }
            }
        }
    }
}

/// `n(r, h)`. Placing no objects counts as one way under every model.
pub fn n_r_h(r: u64, h: u64, model: SlotModel) -> BigCount {
    if r == 0 {
        return BigCount::one();
    }
    let g = pair_slots(h);
    if g == 0 {
        return BigCount::zero();
    }
    match model {
        SlotModel::StarsAndBars => BigCount::binomial(r + g - 1, g - 1),
        SlotModel::Distinct => (0..=g)
            .take_while(|&m| m * (m + 1) / 2 <= r)
            .map(|m| count_bounded_partitions(r, m as usize, 1, r, true))
            .sum(),
        SlotModel::Bounded { a, b } => rbc_sum(r, g as usize, a, b, false).total,
    }
}

/// `n(r, h) - n(r, h_o)`: placements on a chain of `h` elements once the
/// slots of its first `h_o` elements are omitted.
pub fn branch_adjusted_count(r: u64, h: u64, h_o: u64, model: SlotModel) -> Result<BigCount, DistributionError> {
    if h_o > h {
        return Err(DistributionError::HoExceedsH { h, h_o });
    }
    n_r_h(r, h, model)
        .checked_sub(&n_r_h(r, h_o, model))
        .ok_or(DistributionError::NonMonotone { model, r, h, h_o })
}

/// Parameters `α = (n - k)/(k² - k)` and `β = t/(k² - k)` of a relaxed
/// bounded distribution over a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RboProfile {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub alpha: ExactRatio,
    pub beta: ExactRatio,
    pub t_within_rough: bool,
    pub beta_within_alpha: bool,
}

impl RboProfile {
    pub fn consistent(&self) -> bool {
        self.t_within_rough && self.beta_within_alpha
    }

    pub fn report(&self) -> Vec<String> {
        let mark = |ok: bool| if ok { "ok" } else { "violated" };
        vec![
            format!("t <= n - k: {} <= {}: {}", self.t, self.n - self.k, mark(self.t_within_rough)),
            format!("beta <= alpha: {} <= {}: {}", self.beta, self.alpha, mark(self.beta_within_alpha)),
        ]
    }
}

pub fn rbo_consistency(n: u64, k: u64, t: u64) -> Result<RboProfile, DistributionError> {
    if k < 2 {
        return Err(DistributionError::KTooSmall(k));
    }
    if k > n {
        return Err(DistributionError::KExceedsN { k, n });
    }
    let g = u128::from(k) * u128::from(k - 1);
    let alpha = ExactRatio::new(n - k, g);
    let beta = ExactRatio::new(t, g);
    Ok(RboProfile {
        n,
        k,
        t,
        t_within_rough: t <= n - k,
        beta_within_alpha: beta <= alpha,
        alpha,
        beta,
    })
}
