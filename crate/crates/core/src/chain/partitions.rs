use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ChainError;
use crate::numeric::BigCount;

/// Exact `g`-part partitions of `r` with parts in `[a, b]`, listed in
/// lexicographically decreasing order. Each partition is nonincreasing, or
/// strictly decreasing when `distinct`.
#[derive(Debug, Clone)]
pub struct BoundedPartitions {
    r: u64,
    g: usize,
    a: u64,
    b: u64,
    distinct: bool,
    current: Vec<u64>,
    started: bool,
    done: bool,
}

pub fn bounded_partitions(r: u64, g: usize, a: u64, b: u64, distinct: bool) -> BoundedPartitions {
    BoundedPartitions {
        r,
        g,
        a,
        b,
        distinct,
        current: Vec::with_capacity(g),
        started: false,
        done: a > b && g > 0,
    }
}

/// Can `m` parts, each in `[lo, hi]` and nonincreasing (strictly
/// decreasing when `distinct`), sum to exactly `s`?
fn fits(m: u64, s: u64, lo: u64, hi: u64, distinct: bool) -> bool {
    if m == 0 {
        return s == 0;
    }
    if lo > hi {
        return false;
    }
    let (min, max) = if distinct {
        if hi - lo + 1 < m {
            return false;
        }
        // lo + (lo+1) + ... and hi + (hi-1) + ...
        let tri = u128::from(m) * u128::from(m - 1) / 2;
        (u128::from(m) * u128::from(lo) + tri, u128::from(m) * u128::from(hi) - tri)
    } else {
        (u128::from(m) * u128::from(lo), u128::from(m) * u128::from(hi))
    };
    (min..=max).contains(&u128::from(s))
}

impl BoundedPartitions {
    fn remaining(&self) -> u64 {
        self.r - self.current.iter().sum::<u64>()
    }

    /// Largest admissible part at the next position, below `cap`.
    fn place(&mut self, cap: u64) -> bool {
        let i = self.current.len();
        let m_after = (self.g - i - 1) as u64;
        let s = self.remaining();
        let hi = cap.min(self.b).min(s);
        if hi < self.a {
            return false;
        }
        for v in (self.a..=hi).rev() {
            let next_hi = if self.distinct { v.checked_sub(1) } else { Some(v) };
            let ok = match next_hi {
                Some(h) => fits(m_after, s - v, self.a, h, self.distinct),
                None => m_after == 0 && s == v,
            };
            if ok {
                self.current.push(v);
                return true;
            }
        }
        false
    }

    fn cap_after(&self, i: usize) -> Option<u64> {
        match i.checked_sub(1) {
            None => Some(self.b),
            Some(j) if self.distinct => self.current[j].checked_sub(1),
            Some(j) => Some(self.current[j]),
        }
    }

    /// Greedy completion from the current prefix.
    fn complete(&mut self) -> bool {
        while self.current.len() < self.g {
            let Some(cap) = self.cap_after(self.current.len()) else {
                return false;
            };
            if !self.place(cap) {
                return false;
            }
        }
        self.remaining() == 0
    }
}

impl Iterator for BoundedPartitions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.complete() {
                return Some(self.current.clone());
            }
            self.done = true;
            return None;
        }
        while let Some(v) = self.current.pop() {
            // Retry this position with the largest feasible value below `v`.
            if v > self.a && v > 0 && self.place(v - 1) {
                let ok = self.complete();
                debug_assert!(ok, "feasibility check is exact");
                return Some(self.current.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Number of partitions yielded by [`bounded_partitions`].
pub fn count_bounded_partitions(r: u64, g: usize, a: u64, b: u64, distinct: bool) -> BigCount {
    rbc_sum(r, g, a, b, distinct).admissible
}

/// A relaxed bounded chain: `n` objects, `k` crisp in a chain, and every
/// one of the `g = k² - k` off-diagonal pairs representing between `a` and
/// `b` of the `r = n - k` rough objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RbcProblem {
    pub n: u64,
    pub k: u64,
    pub a: u64,
    pub b: u64,
    pub distinct: bool,
}

impl RbcProblem {
    pub fn new(n: u64, k: u64, a: u64, b: u64, distinct: bool) -> Result<Self, ChainError> {
        if k < 2 {
            return Err(ChainError::KTooSmall(k));
        }
        if k > n {
            return Err(ChainError::KExceedsN { k, n });
        }
        if a > b || b > n - k {
            return Err(ChainError::InvalidBounds { a, b, r: n - k });
        }
        Ok(RbcProblem { n, k, a, b, distinct })
    }

    /// The widest bounded problem containing the relaxed chain `(n, k)`:
    /// parts in `[0, n - k]`.
    pub fn from_rdc(n: u64, k: u64, distinct: bool) -> Result<Self, ChainError> {
        if k > n {
            return Err(ChainError::KExceedsN { k, n });
        }
        RbcProblem::new(n, k, 0, n - k, distinct)
    }

    pub fn r(&self) -> u64 {
        self.n - self.k
    }

    pub fn g(&self) -> u64 {
        self.k * self.k - self.k
    }
}

/// `B` (sum over admissible partitions of the product of parts) and the
/// number `n_o` of admissible partitions, with `n_o a^g <= B <= n_o b^g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbcCount {
    pub total: BigCount,
    pub admissible: BigCount,
    pub lower: BigCount,
    pub upper: BigCount,
}

impl RbcCount {
    pub fn bounds_hold(&self) -> bool {
        self.lower <= self.total && self.total <= self.upper
    }
}

pub fn rbc_count(problem: &RbcProblem) -> RbcCount {
    rbc_sum(problem.r(), problem.g() as usize, problem.a, problem.b, problem.distinct)
}

type Memo = HashMap<(usize, u64, u64), (BigUint, BigUint)>;

/// `(count, sum of products)` over partitions of `s` into `m` parts in
/// `[a, hi]`.
fn tally(m: usize, s: u64, hi: u64, a: u64, distinct: bool, memo: &mut Memo) -> (BigUint, BigUint) {
    if m == 0 {
        return if s == 0 {
            (BigUint::one(), BigUint::one())
        } else {
            (BigUint::zero(), BigUint::zero())
        };
    }
    if !fits(m as u64, s, a, hi, distinct) {
        return (BigUint::zero(), BigUint::zero());
    }
    if let Some(hit) = memo.get(&(m, s, hi)) {
        return hit.clone();
    }
    let mut count = BigUint::zero();
    let mut sum = BigUint::zero();
    for v in a..=hi.min(s) {
        let next_hi = if distinct {
            match v.checked_sub(1) {
                Some(h) => h,
                None if m == 1 => 0,
                None => continue,
            }
        } else {
            v
        };
        let (c, p) = tally(m - 1, s - v, next_hi, a, distinct, memo);
        if c.is_zero() {
            continue;
        }
        sum += p * v;
        count += c;
    }
    memo.insert((m, s, hi), (count.clone(), sum.clone()));
    (count, sum)
}

/// [`RbcCount`] for `r` objects over `g` pairs with parts in `[a, b]`.
pub fn rbc_sum(r: u64, g: usize, a: u64, b: u64, distinct: bool) -> RbcCount {
    let (count, sum) = if a > b && g > 0 {
        (BigUint::zero(), BigUint::zero())
    } else {
        tally(g, r, b, a, distinct, &mut Memo::new())
    };
    let admissible = BigCount::from(count);
    let g64 = g as u64;
    RbcCount {
        total: BigCount::from(sum),
        lower: &admissible * &BigCount::pow(a, g64),
        upper: &admissible * &BigCount::pow(b, g64),
        admissible,
    }
}
