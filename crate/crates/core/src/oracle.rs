//! Brute-force reference implementations.
//!
//! Each oracle reads its input only through primitive queries (`leq`,
//! labels, raw numbers) and recomputes the answer by exhaustive search. Size
//! guards are hard errors.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::chain::BoundMode;
use crate::numeric::BigCount;
use crate::order::{BoundedLattice, FinitePoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {size} exceeds the oracle limit {limit}")]
    TooLarge { what: &'static str, size: u64, limit: u64 },
    #[error("n must be positive")]
    NoObjects,
    #[error("alpha = {0}/{1} is not in (0, 1]")]
    BadAlpha(u64, u64),
}

fn guard(what: &'static str, size: u64, limit: u64) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

/// Production value, oracle value, and a witness when they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict<T> {
    pub agrees: bool,
    pub production: T,
    pub oracle: T,
    pub witness: Option<String>,
}

impl<T: PartialEq + fmt::Debug> OracleVerdict<T> {
    pub fn compare(production: T, oracle: T, context: impl FnOnce() -> String) -> Self {
        let agrees = production == oracle;
        let witness = (!agrees).then(|| format!("{}: production {:?}, oracle {:?}", context(), production, oracle));
        OracleVerdict {
            agrees,
            production,
            oracle,
            witness,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainRegime {
    Pwc,
    Wdc,
}

/// Scan `k = 1..=n` for `n - k = k²` (PWC) or `n - k = k² - k` (WDC).
pub fn oracle_chain_feasibility(regime: ChainRegime, n: u64) -> Result<Option<u64>, OracleError> {
    if n == 0 {
        return Err(OracleError::NoObjects);
    }
    let mut k = 1u64;
    while k <= n && k.saturating_mul(k) <= n {
        let slots = match regime {
            ChainRegime::Pwc => k * k,
            ChainRegime::Wdc => k * k - k,
        };
        if n - k == slots {
            return Ok(Some(k));
        }
        k += 1;
    }
    Ok(None)
}

/// Even-exponent powers of two up to `limit`, found by testing every `k`
/// with `k² <= limit` for `k²` being a power of two.
pub fn oracle_boolean_models(limit: u64, include_zero: bool) -> Vec<(u32, u64, u64)> {
    let mut out = Vec::new();
    let mut k = 1u64;
    while u128::from(k) * u128::from(k) <= u128::from(limit) {
        let mut sq = k * k;
        let mut x = 0u32;
        while sq.is_multiple_of(2) {
            sq /= 2;
            x += 1;
        }
        if sq == 1 && (x > 0 || include_zero) {
            out.push((x, k, k * k));
        }
        k += 1;
    }
    out
}

/// Number of `k` with `0 < (n - k)/(k² - k) <= p/q` in the mode's range,
/// by integer cross-multiplication.
pub fn oracle_rdc_scan(n: u64, p: u64, q: u64, mode: BoundMode) -> Result<u64, OracleError> {
    if n == 0 {
        return Err(OracleError::NoObjects);
    }
    if p == 0 || q == 0 || p > q {
        return Err(OracleError::BadAlpha(p, q));
    }
    let (n, p, q) = (u128::from(n), u128::from(p), u128::from(q));
    let in_range = |k: u128| match mode {
        BoundMode::SqrtN => k * k <= n,
        BoundMode::SqrtNOverAlpha => k * k * p <= n * q,
        BoundMode::Unbounded => true,
    };
    let mut count = 0;
    let mut k = 2u128;
    while k <= n && in_range(k) {
        let num = n - k;
        let den = k * k - k;
        if num > 0 && num * q <= p * den {
            count += 1;
        }
        k += 1;
    }
    Ok(count)
}

/// Exhaustive optima of a small poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosetOptima {
    /// Size of a largest antichain.
    pub width: usize,
    /// Fewest chains partitioning the poset.
    pub min_chain_partition: usize,
    /// Size of a longest chain.
    pub longest_chain: usize,
    /// Fewest antichains partitioning the poset.
    pub min_antichain_partition: usize,
}

pub const ORACLE_POSET_LIMIT: usize = 8;

pub fn oracle_poset(p: &FinitePoset) -> Result<PosetOptima, OracleError> {
    let n = p.len();
    guard("poset size", n as u64, ORACLE_POSET_LIMIT as u64)?;
    let full = (1usize << n) - 1;
    let members = |mask: usize| (0..n).filter(move |i| mask >> i & 1 == 1);
    let is_chain = |mask: usize| {
        members(mask).all(|a| members(mask).all(|b| a == b || p.leq(a, b) || p.leq(b, a)))
    };
    let is_antichain = |mask: usize| {
        members(mask).all(|a| members(mask).all(|b| a == b || !(p.leq(a, b) || p.leq(b, a))))
    };
    let chains: Vec<bool> = (0..=full).map(is_chain).collect();
    let antichains: Vec<bool> = (0..=full).map(is_antichain).collect();

    let width = (0..=full).filter(|&m| antichains[m]).map(|m| m.count_ones()).max().unwrap_or(0) as usize;
    let longest_chain = (0..=full).filter(|&m| chains[m]).map(|m| m.count_ones()).max().unwrap_or(0) as usize;

    // fewest blocks of the given kind partitioning each subset
    let partition = |ok: &[bool]| -> usize {
        let mut best = vec![usize::MAX; full + 1];
        best[0] = 0;
        for mask in 1..=full {
            let low = mask & mask.wrapping_neg();
            let mut sub = mask;
            while sub > 0 {
                if sub & low != 0 && ok[sub] && best[mask ^ sub] != usize::MAX {
                    best[mask] = best[mask].min(best[mask ^ sub] + 1);
                }
                sub = (sub - 1) & mask;
            }
        }
        best[full]
    };

    Ok(PosetOptima {
        width,
        min_chain_partition: partition(&chains),
        longest_chain,
        min_antichain_partition: partition(&antichains),
    })
}

pub const ORACLE_TERM_DEPTH: u32 = 6;

/// Values of all join/meet terms of depth at most `depth` over `G ∪ {⊥, ⊤}`.
/// Joins and meets are found from `leq` alone.
pub fn oracle_terms(lattice: &BoundedLattice, granules: &BTreeSet<usize>, depth: u32) -> Result<BTreeSet<usize>, OracleError> {
    guard("term depth", u64::from(depth), u64::from(ORACLE_TERM_DEPTH))?;
    let n = lattice.len();
    let leq = |a: usize, b: usize| lattice.leq(a, b);
    let lub = |a: usize, b: usize| {
        (0..n)
            .filter(|&z| leq(a, z) && leq(b, z))
            .find(|&z| (0..n).all(|w| !(leq(a, w) && leq(b, w)) || leq(z, w)))
            .expect("a lattice has all joins")
    };
    let glb = |a: usize, b: usize| {
        (0..n)
            .filter(|&z| leq(z, a) && leq(z, b))
            .find(|&z| (0..n).all(|w| !(leq(w, a) && leq(w, b)) || leq(w, z)))
            .expect("a lattice has all meets")
    };
    let bottom = (0..n).find(|&z| (0..n).all(|w| leq(z, w))).expect("bounded");
    let top = (0..n).find(|&z| (0..n).all(|w| leq(w, z))).expect("bounded");

    let mut level: BTreeSet<usize> = granules.iter().copied().collect();
    level.insert(bottom);
    level.insert(top);
    for _ in 0..depth {
        let current: Vec<usize> = level.iter().copied().collect();
        let mut next = level.clone();
        for &a in &current {
            for &b in &current {
                next.insert(lub(a, b));
                next.insert(glb(a, b));
            }
        }
        if next == level {
            break;
        }
        level = next;
    }
    Ok(level)
}

pub const ORACLE_RBC_MAX_R: u64 = 60;
pub const ORACLE_RBC_MAX_G: u64 = 30;

/// `(B, n_o)`: every nondecreasing vector of `g` parts in `[a, b]` summing
/// to `r` (strictly increasing when `distinct`), with the sum of products.
pub fn oracle_rbc(r: u64, g: u64, a: u64, b: u64, distinct: bool) -> Result<(BigCount, BigCount), OracleError> {
    guard("r", r, ORACLE_RBC_MAX_R)?;
    guard("g", g, ORACLE_RBC_MAX_G)?;

    fn walk(left: u64, sum_left: u64, from: u64, b: u64, distinct: bool, product: u128, acc: &mut (u128, u128)) {
        if left == 0 {
            if sum_left == 0 {
                acc.0 += product;
                acc.1 += 1;
            }
            return;
        }
        let mut v = from;
        while v <= b && v * left <= sum_left {
            let next = if distinct { v + 1 } else { v };
            walk(left - 1, sum_left - v, next, b, distinct, product * u128::from(v), acc);
            v += 1;
        }
    }

    let mut acc = (0u128, 0u128);
    if a <= b {
        walk(g, r, a, b, distinct, 1, &mut acc);
    }
    Ok((BigCount::from(acc.0), BigCount::from(acc.1)))
}

pub const ORACLE_CHOICE_LIMIT: usize = 6;

/// Joint selections of one pair from each `SL(x) × SU(x)` with the two
/// entries different, counted one by one.
pub fn oracle_choice_functions(scopes: &[(Vec<usize>, Vec<usize>)]) -> Result<BigCount, OracleError> {
    guard("rough objects", scopes.len() as u64, ORACLE_CHOICE_LIMIT as u64)?;

    fn walk(scopes: &[(Vec<usize>, Vec<usize>)], count: &mut u128) {
        let Some(((lower, upper), rest)) = scopes.split_first() else {
            *count += 1;
            return;
        };
        for a in lower {
            for b in upper {
                if a != b {
                    walk(rest, count);
                }
            }
        }
    }

    let mut count = 0u128;
    walk(scopes, &mut count);
    Ok(BigCount::from(count))
}

/// `(SL(x), SU(x))` straight from the definition.
pub fn oracle_scopes(p: &FinitePoset, crisp: &BTreeSet<usize>, x: usize) -> (Vec<usize>, Vec<usize>) {
    let below: Vec<usize> = crisp.iter().copied().filter(|&c| p.leq(c, x)).collect();
    let above: Vec<usize> = crisp.iter().copied().filter(|&c| p.leq(x, c)).collect();
    let lower = below
        .iter()
        .copied()
        .filter(|&c| !below.iter().any(|&d| d != c && p.leq(c, d)))
        .collect();
    let upper = above
        .iter()
        .copied()
        .filter(|&c| !above.iter().any(|&d| d != c && p.leq(d, c)))
        .collect();
    (lower, upper)
}

pub const ORACLE_SDR_LIMIT: usize = 14;

/// Hall's condition checked over every nonempty subfamily.
pub fn oracle_hall(members: &[BTreeSet<usize>]) -> Result<bool, OracleError> {
    guard("family size", members.len() as u64, ORACLE_SDR_LIMIT as u64)?;
    let m = members.len();
    Ok((1usize..1 << m).all(|mask| {
        let union: BTreeSet<usize> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .flat_map(|i| members[i].iter().copied())
            .collect();
        union.len() >= mask.count_ones() as usize
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::BuildMode;

    fn diamond() -> FinitePoset {
        FinitePoset::build(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            BuildMode::Covers,
        )
        .unwrap()
    }

    #[test]
    fn chain_feasibility_examples() {
        assert_eq!(oracle_chain_feasibility(ChainRegime::Pwc, 12), Ok(Some(3)));
        assert_eq!(oracle_chain_feasibility(ChainRegime::Wdc, 9), Ok(Some(3)));
        assert_eq!(oracle_chain_feasibility(ChainRegime::Pwc, 7), Ok(None));
        assert_eq!(oracle_chain_feasibility(ChainRegime::Wdc, 1), Ok(Some(1)));
        assert!(oracle_chain_feasibility(ChainRegime::Pwc, 0).is_err());
    }

    #[test]
    fn poset_optima_examples() {
        let d = oracle_poset(&diamond()).unwrap();
        assert_eq!((d.width, d.longest_chain, d.min_antichain_partition), (2, 3, 3));
        assert_eq!(d.min_chain_partition, 2);

        let chain = FinitePoset::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")], BuildMode::Covers).unwrap();
        let c = oracle_poset(&chain).unwrap();
        assert_eq!((c.width, c.longest_chain, c.min_antichain_partition), (1, 4, 4));

        let anti = FinitePoset::build::<&str>(&["a", "b", "c"], &[], BuildMode::Covers).unwrap();
        let a = oracle_poset(&anti).unwrap();
        assert_eq!((a.width, a.longest_chain, a.min_antichain_partition), (3, 1, 1));
    }

    #[test]
    fn poset_guard() {
        let labels: Vec<String> = (0..9).map(|i| i.to_string()).collect();
        let p = FinitePoset::build::<String>(&labels, &[], BuildMode::Covers).unwrap();
        assert!(matches!(oracle_poset(&p), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn term_examples() {
        let labels: Vec<String> = (0..16).map(|i| i.to_string()).collect();
        let p = FinitePoset::from_leq_fn(&labels, |a, b| a & b == a).unwrap();
        let l = BoundedLattice::from_poset(p).unwrap();
        let g: BTreeSet<usize> = [0b0011, 0b1100].into();
        assert_eq!(oracle_terms(&l, &g, 0).unwrap(), [0, 0b0011, 0b1100, 15].into());
        assert_eq!(oracle_terms(&l, &g, 2).unwrap(), [0, 0b0011, 0b1100, 15].into());
        let g: BTreeSet<usize> = [0b0011, 0b0110].into();
        assert_eq!(oracle_terms(&l, &g, 6).unwrap(), l.closure(&g));
        assert!(oracle_terms(&l, &g, 7).is_err());
    }

    #[test]
    fn rbc_examples() {
        let (b, n) = oracle_rbc(4, 2, 1, 3, true).unwrap();
        assert_eq!((b.to_u128(), n.to_u128()), (Some(3), Some(1)));
        let (b, _) = oracle_rbc(4, 2, 1, 3, false).unwrap();
        assert_eq!(b.to_u128(), Some(7));
        assert!(oracle_rbc(1, 2, 1, 1, false).unwrap().0.is_zero());
        let (b, n) = oracle_rbc(9, 3, 3, 3, false).unwrap();
        assert_eq!((b.to_u128(), n.to_u128()), (Some(27), Some(1)));
        assert!(oracle_rbc(61, 2, 0, 61, false).is_err());
    }

    #[test]
    fn choice_examples() {
        assert_eq!(oracle_choice_functions(&[(vec![0], vec![3])]).unwrap().to_u128(), Some(1));
        let two = (vec![0, 1], vec![3]);
        let three = (vec![0, 1, 2], vec![3]);
        assert_eq!(oracle_choice_functions(&[two, three]).unwrap().to_u128(), Some(6));
        assert!(oracle_choice_functions(&[(vec![2], vec![2])]).unwrap().is_zero());
        assert_eq!(oracle_choice_functions(&[]).unwrap().to_u128(), Some(1));
    }

    #[test]
    fn rdc_scan_small() {
        assert_eq!(oracle_rdc_scan(100, 1, 1, BoundMode::SqrtN), Ok(1));
        assert_eq!(oracle_rdc_scan(20, 1, 1, BoundMode::SqrtN), Ok(0));
    }

    #[test]
    fn boolean_small() {
        assert_eq!(oracle_boolean_models(16, false), vec![(2, 2, 4), (4, 4, 16)]);
        assert_eq!(oracle_boolean_models(4, true), vec![(0, 1, 1), (2, 2, 4)]);
    }

    #[test]
    fn hall_small() {
        let fam = |v: &[&[usize]]| -> Vec<BTreeSet<usize>> { v.iter().map(|s| s.iter().copied().collect()).collect() };
        assert!(oracle_hall(&fam(&[&[0, 1], &[1, 2], &[0, 2]])).unwrap());
        assert!(!oracle_hall(&fam(&[&[0], &[0], &[1, 2]])).unwrap());
    }
}
