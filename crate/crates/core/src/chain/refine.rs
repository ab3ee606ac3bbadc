use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{rdc_admissible_set, BoundMode, ChainError};
use crate::numeric::ExactRatio;

/// Answer of a refinement predicate at a grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
    /// Rejected, and no accepted value lies below this point.
    SolutionAbove,
    /// Rejected, and no accepted value lies above this point.
    SolutionBelow,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Accept
        } else {
            Verdict::Reject
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    /// The first accepted value and the depth at which it was probed.
    pub found: Option<(ExactRatio, u32)>,
    pub depth_reached: u32,
    /// Width of the brackets at `depth_reached`, `grid^-depth`.
    pub bracket_width: ExactRatio,
    pub evaluations: u64,
}

/// Grid refinement of `(0, 1]`. At depth `d` every live bracket is split
/// into `grid` parts of width `grid^-d` and the interior points are probed in
/// ascending order. The endpoint `1` is probed once, after depth 1.
/// Brackets are pruned only by `SolutionAbove`/`SolutionBelow` hints.
pub fn rdc_refine<F, V>(mut accept: F, grid: u64, max_depth: u32) -> Result<Refinement, ChainError>
where
    F: FnMut(&ExactRatio) -> V,
    V: Into<Verdict>,
{
    if grid < 2 {
        return Err(ChainError::GridTooSmall(grid));
    }
    let grid_big = BigInt::from(grid);
    let mut live: Vec<BigRational> = vec![BigRational::from_integer(BigInt::from(0))];
    let mut width = BigRational::one();
    let mut evaluations = 0u64;
    let mut depth_reached = 0;

    for depth in 1..=max_depth {
        let step = &width / &grid_big;
        let mut next = Vec::new();
        for lo in &live {
            let mut keep = vec![true; grid as usize];
            for i in 1..grid {
                let point = lo + &step * BigInt::from(i);
                let point = ExactRatio::from(point);
                evaluations += 1;
                match accept(&point).into() {
                    Verdict::Accept => {
                        return Ok(Refinement {
                            found: Some((point, depth)),
                            depth_reached: depth,
                            bracket_width: ExactRatio::from(step),
                            evaluations,
                        });
                    }
                    Verdict::Reject => {}
                    Verdict::SolutionAbove => keep[..i as usize].iter_mut().for_each(|k| *k = false),
                    Verdict::SolutionBelow => keep[i as usize..].iter_mut().for_each(|k| *k = false),
                }
            }
            next.extend(
                keep.iter()
                    .enumerate()
                    .filter(|(_, &k)| k)
                    .map(|(j, _)| lo + &step * BigInt::from(j as u64)),
            );
        }
        depth_reached = depth;
        width = step;
        if depth == 1 {
            let one = ExactRatio::one();
            evaluations += 1;
            if accept(&one).into() == Verdict::Accept {
                return Ok(Refinement {
                    found: Some((one, 1)),
                    depth_reached,
                    bracket_width: ExactRatio::from(width),
                    evaluations,
                });
            }
        }
        live = next;
        if live.is_empty() {
            break;
        }
    }
    Ok(Refinement {
        found: None,
        depth_reached,
        bracket_width: ExactRatio::from(width),
        evaluations,
    })
}

/// Predicate "some `k` is admissible for `n` at this `α`". Under `sqrt-n`
/// and `unbounded` admissibility only grows with `α`, so rejections carry a
/// [`Verdict::SolutionAbove`] hint.
pub fn admissibility_probe(n: u64, mode: BoundMode) -> impl FnMut(&ExactRatio) -> Verdict {
    move |alpha| match rdc_admissible_set(n, alpha, mode) {
        Ok(set) if !set.is_empty() => Verdict::Accept,
        Ok(_) if mode != BoundMode::SqrtNOverAlpha => Verdict::SolutionAbove,
        _ => Verdict::Reject,
    }
}
