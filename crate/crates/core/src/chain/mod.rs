//! Feasibility and model counting when the crisp objects form a chain.
//!
//! With `n` objects of which `k` are crisp, the `n - k` rough objects are
//! represented by ordered pairs of crisp objects:
//!
//! * pre-well (PWC): all `k²` pairs including the diagonal, so `n = k² + k`;
//! * well (WDC): the `k² - k` off-diagonal pairs, so `n = k²`;
//! * relaxed (RDC): a fraction `π = (n - k)/(k² - k)` of them, `0 < π <= α`;
//! * relaxed bounded (RBC): each of the `k² - k` pairs represents between
//!   `a` and `b` objects.
//!
//! Every decision here is made in exact integer or rational arithmetic.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::numeric::{exact_sqrt, isqrt, ExactRatio};

mod partitions;
mod refine;

pub use partitions::{
    bounded_partitions, count_bounded_partitions, rbc_count, rbc_sum, BoundedPartitions, RbcCount,
    RbcProblem,
};
pub use refine::{admissibility_probe, rdc_refine, Refinement, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("the number of objects must be positive")]
    NoObjects,
    #[error("k = {0} leaves no off-diagonal pairs (k must be at least 2)")]
    KTooSmall(u64),
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { k: u64, n: u64 },
    #[error("{0} is not in (0, 1]")]
    RatioOutOfRange(ExactRatio),
    #[error("{0} is not positive")]
    NotPositive(ExactRatio),
    #[error("part bounds must satisfy 0 <= a <= b <= n - k (got a = {a}, b = {b}, n - k = {r})")]
    InvalidBounds { a: u64, b: u64, r: u64 },
    #[error("refinement grid must be at least 2 (got {0})")]
    GridTooSmall(u64),
    #[error("empty range {0}..={1}")]
    EmptyRange(u64, u64),
}

/// `k` with `n = k² + k`, if any.
pub fn pwc_feasible(n: u64) -> Result<Option<u64>, ChainError> {
    if n == 0 {
        return Err(ChainError::NoObjects);
    }
    let disc = 1 + 4 * u128::from(n);
    Ok(exact_sqrt(disc).map(|s| ((s - 1) / 2) as u64))
}

/// `k` with `n = k²`, if any. `n = 1` gives `k = 1` with no rough objects.
pub fn wdc_feasible(n: u64) -> Result<Option<u64>, ChainError> {
    if n == 0 {
        return Err(ChainError::NoObjects);
    }
    Ok(exact_sqrt(u128::from(n)).map(|k| k as u64))
}

/// A Boolean algebra with `2^x = k²` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BooleanModel {
    pub x: u32,
    pub k: u64,
    pub n: u64,
}

/// All `(x, k, n = 2^x)` with `2^x = k²` and `n <= limit`, sorted by `n`.
/// The one-element algebra (`x = 0`) is listed only when `include_zero`.
pub fn boolean_wdc_models(limit: u64, include_zero: bool) -> Vec<BooleanModel> {
    let start = if include_zero { 0 } else { 2 };
    (start..64)
        .step_by(2)
        .map(|x: u32| BooleanModel {
            x,
            k: 1u64 << (x / 2),
            n: 1u64 << x,
        })
        .take_while(|m| m.n <= limit)
        .collect()
}

/// `π = (n - k)/(k² - k)`. Values outside `(0, 1]` are returned as is;
/// check [`ExactRatio::in_unit_interval`] for admissibility.
pub fn rdc_pi(n: u64, k: u64) -> Result<ExactRatio, ChainError> {
    if k < 2 {
        return Err(ChainError::KTooSmall(k));
    }
    if k > n {
        return Err(ChainError::KExceedsN { k, n });
    }
    Ok(ExactRatio::new(n - k, u128::from(k) * u128::from(k - 1)))
}

/// The positive root `k` of `π k² + (1 - π) k - n = 0`, when it is an
/// integer `>= 2`. Any `π > 0` is inverted; whether `π` is admissible is a
/// separate question (see [`rdc_admissible_set`]).
pub fn rdc_k(n: u64, pi: &ExactRatio) -> Result<Option<u64>, ChainError> {
    if *pi <= ExactRatio::zero() {
        return Err(ChainError::NotPositive(pi.clone()));
    }
    let p = pi.as_rational();
    let one = num_rational::BigRational::from_integer(BigInt::from(1));
    let n = num_rational::BigRational::from_integer(BigInt::from(n));
    let gap = &one - p;
    let disc = ExactRatio::from(&gap * &gap + num_rational::BigRational::from_integer(BigInt::from(4)) * &n * p);
    let Some(root) = disc.sqrt_exact() else {
        return Ok(None);
    };
    let two = num_rational::BigRational::from_integer(BigInt::from(2));
    let k = ExactRatio::from((p - &one + root.as_rational()) / (two * p));
    if !k.is_integer() {
        return Ok(None);
    }
    Ok(k.floor_u64().filter(|&k| k >= 2))
}

/// Which range of `k` an RDC scan considers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundMode {
    /// `2 <= k <= ⌊√n⌋`
    SqrtN,
    /// `2 <= k <= ⌊√(n/α)⌋`
    SqrtNOverAlpha,
    /// `2 <= k <= n`
    Unbounded,
}

impl BoundMode {
    pub const ALL: [BoundMode; 3] = [BoundMode::SqrtN, BoundMode::SqrtNOverAlpha, BoundMode::Unbounded];

    pub fn tag(self) -> &'static str {
        match self {
            BoundMode::SqrtN => "sqrt-n",
            BoundMode::SqrtNOverAlpha => "sqrt-n-over-alpha",
            BoundMode::Unbounded => "unbounded",
        }
    }

    /// Candidate values of `k` for `n` objects and bound `alpha`.
    pub fn k_range(self, n: u64, alpha: &ExactRatio) -> RangeInclusive<u64> {
        let max = match self {
            BoundMode::SqrtN => isqrt(n),
            BoundMode::SqrtNOverAlpha => {
                let quotient = ExactRatio::from(num_rational::BigRational::from_integer(BigInt::from(n)) / alpha.as_rational());
                isqrt(quotient.floor_u64().unwrap_or(u64::MAX))
            }
            BoundMode::Unbounded => n,
        };
        2..=max.min(n)
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BoundMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundMode::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| format!("unknown bound mode `{s}` (expected sqrt-n, sqrt-n-over-alpha or unbounded)"))
    }
}

fn check_alpha(alpha: &ExactRatio) -> Result<(), ChainError> {
    if alpha.in_unit_interval() {
        Ok(())
    } else {
        Err(ChainError::RatioOutOfRange(alpha.clone()))
    }
}

/// `0 < π_k <= α`.
fn admissible_pi(n: u64, k: u64, alpha: &ExactRatio) -> Option<ExactRatio> {
    let pi = rdc_pi(n, k).ok()?;
    (pi.in_unit_interval() && pi <= *alpha).then_some(pi)
}

/// Every `k` in the mode's range with `0 < π_k <= α`, ascending.
pub fn rdc_admissible_set(n: u64, alpha: &ExactRatio, mode: BoundMode) -> Result<Vec<(u64, ExactRatio)>, ChainError> {
    check_alpha(alpha)?;
    Ok(mode
        .k_range(n, alpha)
        .into_par_iter()
        .filter_map(|k| admissible_pi(n, k, alpha).map(|pi| (k, pi)))
        .collect())
}

/// Size of [`rdc_admissible_set`] without materialising the ratios.
pub fn rdc_admissible_count(n: u64, alpha: &ExactRatio, mode: BoundMode) -> Result<u64, ChainError> {
    check_alpha(alpha)?;
    Ok(mode
        .k_range(n, alpha)
        .into_par_iter()
        .filter(|&k| admissible_pi(n, k, alpha).is_some())
        .count() as u64)
}

/// How a count of "values of k that work" may be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiReading {
    /// `0 < π_k <= α`, the admissibility condition.
    AtMostAlpha,
    /// `π_k >= α`.
    AtLeastAlpha,
    /// Every candidate `k`, no condition on `π_k`.
    AnyCandidate,
}

impl PiReading {
    pub const ALL: [PiReading; 3] = [PiReading::AtMostAlpha, PiReading::AtLeastAlpha, PiReading::AnyCandidate];

    pub fn tag(self) -> &'static str {
        match self {
            PiReading::AtMostAlpha => "0<pi<=alpha",
            PiReading::AtLeastAlpha => "pi>=alpha",
            PiReading::AnyCandidate => "any",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KCountReading {
    pub mode: BoundMode,
    pub reading: PiReading,
    pub count: u64,
}

/// Counts of `k` under every bound mode and reading of the `π` condition.
pub fn k_count_readings(n: u64, alpha: &ExactRatio) -> Result<Vec<KCountReading>, ChainError> {
    check_alpha(alpha)?;
    let mut out = Vec::new();
    for mode in BoundMode::ALL {
        for reading in PiReading::ALL {
            let count = mode
                .k_range(n, alpha)
                .into_par_iter()
                .filter(|&k| match reading {
                    PiReading::AtMostAlpha => admissible_pi(n, k, alpha).is_some(),
                    PiReading::AtLeastAlpha => rdc_pi(n, k).is_ok_and(|pi| pi >= *alpha),
                    PiReading::AnyCandidate => true,
                })
                .count() as u64;
            out.push(KCountReading { mode, reading, count });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanRegime {
    Pwc,
    Wdc,
    Boolean,
    /// One row per admissible `(n, k)`.
    Rdc,
    /// One row per `n` with the number of admissible `k`.
    RdcCounts,
}

impl ScanRegime {
    pub const ALL: [ScanRegime; 5] = [
        ScanRegime::Pwc,
        ScanRegime::Wdc,
        ScanRegime::Boolean,
        ScanRegime::Rdc,
        ScanRegime::RdcCounts,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ScanRegime::Pwc => "pwc",
            ScanRegime::Wdc => "wdc",
            ScanRegime::Boolean => "boolean",
            ScanRegime::Rdc => "rdc",
            ScanRegime::RdcCounts => "rdc-counts",
        }
    }
}

impl fmt::Display for ScanRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ScanRegime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScanRegime::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| format!("unknown regime `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanParams {
    pub alpha: ExactRatio,
    pub bound_mode: BoundMode,
    pub include_x_zero: bool,
}

impl Default for ScanParams {
    fn default() -> Self {
        ScanParams {
            alpha: ExactRatio::one(),
            bound_mode: BoundMode::SqrtN,
            include_x_zero: false,
        }
    }
}

/// One line of a feasibility scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityRow {
    pub regime: ScanRegime,
    pub n: u64,
    pub k: Option<u64>,
    pub pi: Option<ExactRatio>,
    pub admissible: bool,
    /// `x` with `n = 2^x`, Boolean scans only.
    pub exponent: Option<u32>,
    /// Number of admissible `k`, `rdc-counts` scans only.
    pub count: Option<u64>,
    pub notes: String,
}

impl FeasibilityRow {
    fn new(regime: ScanRegime, n: u64) -> Self {
        FeasibilityRow {
            regime,
            n,
            k: None,
            pi: None,
            admissible: false,
            exponent: None,
            count: None,
            notes: String::new(),
        }
    }

    pub fn feasible(&self) -> bool {
        self.admissible
    }
}

/// Feasibility rows for every `n` in `range`, in ascending order.
pub fn sequence_scan(
    regime: ScanRegime,
    range: RangeInclusive<u64>,
    params: &ScanParams,
) -> Result<Vec<FeasibilityRow>, ChainError> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo > hi {
        return Err(ChainError::EmptyRange(lo, hi));
    }
    if lo == 0 {
        return Err(ChainError::NoObjects);
    }
    if matches!(regime, ScanRegime::Rdc | ScanRegime::RdcCounts) {
        check_alpha(&params.alpha)?;
    }
    let per_n = |n: u64| -> Vec<FeasibilityRow> {
        let mut row = FeasibilityRow::new(regime, n);
        match regime {
            ScanRegime::Pwc => {
                row.k = pwc_feasible(n).expect("n >= 1");
                row.admissible = row.k.is_some();
                vec![row]
            }
            ScanRegime::Wdc => {
                row.k = wdc_feasible(n).expect("n >= 1");
                row.admissible = row.k.is_some();
                vec![row]
            }
            ScanRegime::Boolean => {
                if n.is_power_of_two() {
                    let x = n.trailing_zeros();
                    if x.is_multiple_of(2) && (x > 0 || params.include_x_zero) {
                        row.exponent = Some(x);
                        row.k = Some(1 << (x / 2));
                        row.admissible = true;
                    }
                }
                vec![row]
            }
            ScanRegime::Rdc => rdc_admissible_set(n, &params.alpha, params.bound_mode)
                .expect("alpha checked")
                .into_iter()
                .map(|(k, pi)| {
                    let mut row = FeasibilityRow::new(regime, n);
                    row.k = Some(k);
                    row.pi = Some(pi);
                    row.admissible = true;
                    row
                })
                .collect(),
            ScanRegime::RdcCounts => {
                let count = rdc_admissible_count(n, &params.alpha, params.bound_mode).expect("alpha checked");
                row.count = Some(count);
                row.admissible = count > 0;
                vec![row]
            }
        }
    };
    Ok((lo..=hi).into_par_iter().flat_map_iter(per_n).collect())
}
