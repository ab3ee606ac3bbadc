#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use roughspace_core::order::{BuildMode, FinitePoset};
use roughspace_core::space::HigherGranularSpace;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// The poset generated by the pairs `i < j` whose bit is set in `mask`,
/// pairs enumerated row by row.
pub fn poset_from_mask(n: usize, mask: u64) -> FinitePoset {
    let names = labels(n);
    let mut pairs = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                pairs.push((names[i].clone(), names[j].clone()));
            }
            bit += 1;
        }
    }
    FinitePoset::build(&names, &pairs, BuildMode::Covers).expect("upper-triangular pairs are acyclic")
}

/// Every poset on `n` elements up to relabelling, once per distinct
/// naturally labelled order relation.
pub fn all_posets(n: usize) -> Vec<FinitePoset> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs {
        let p = poset_from_mask(n, mask);
        let relation: Vec<bool> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| p.leq(a, b)).collect();
        if seen.insert(relation) {
            out.push(p);
        }
    }
    out
}

pub fn random_poset<R: Rng>(rng: &mut R, max: usize) -> FinitePoset {
    let n = rng.gen_range(1..=max);
    let density: f64 = rng.gen_range(0.1..0.7);
    let pairs = n * (n - 1) / 2;
    let mask = (0..pairs).fold(0u64, |m, b| if rng.gen_bool(density) { m | 1 << b } else { m });
    poset_from_mask(n, mask)
}

/// `p` with a fresh least and greatest element added.
pub fn bounded(p: &FinitePoset) -> FinitePoset {
    let n = p.len();
    let mut names = vec!["bot".to_string()];
    names.extend(p.labels().iter().cloned());
    names.push("top".to_string());
    FinitePoset::from_leq_fn(&names, |a, b| {
        a == 0 || b == n + 1 || (a >= 1 && a <= n && b >= 1 && b <= n && p.leq(a - 1, b - 1))
    })
    .expect("adding bounds keeps a partial order")
}

/// A random partition of `e0..e(m-1)`.
pub fn random_partition<R: Rng>(rng: &mut R, m: usize) -> (Vec<String>, Vec<Vec<String>>) {
    let universe = labels(m);
    let blocks_wanted = rng.gen_range(1..=m);
    let mut blocks: Vec<Vec<String>> = vec![Vec::new(); blocks_wanted];
    for (i, u) in universe.iter().enumerate() {
        let b = if i < blocks_wanted { i } else { rng.gen_range(0..blocks_wanted) };
        blocks[b].push(u.clone());
    }
    (universe, blocks)
}

pub fn partition_space(universe: &[String], blocks: &[Vec<String>]) -> HigherGranularSpace {
    HigherGranularSpace::from_partition(universe, blocks).expect("valid partition")
}
