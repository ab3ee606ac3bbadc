mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roughspace_core::chain::*;
use roughspace_core::distribution::*;
use roughspace_core::numeric::{BigCount, ExactRatio};
use roughspace_core::oracle::*;
use roughspace_core::order::{BoundedLattice, FinitePoset, SdrOutcome, SetFamily};
use roughspace_core::space::{CrispnessConcept, RoughnessConcept};

use common::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn powerset_lattice(m: usize) -> BoundedLattice {
    let names: Vec<String> = (0..1usize << m).map(|i| format!("s{i}")).collect();
    BoundedLattice::from_poset(FinitePoset::from_leq_fn(&names, |a, b| a & b == a).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn width_and_covers_match_exhaustive_search(seed in any::<u64>()) {
        let p = random_poset(&mut rng(seed), 8);
        let opt = oracle_poset(&p).unwrap();
        let (width, cover) = p.width_with_cover().unwrap();
        prop_assert_eq!(width, opt.width);
        prop_assert_eq!(width, opt.min_chain_partition);
        prop_assert_eq!(cover.len(), width);
        let mut seen = BTreeSet::new();
        for chain in &cover.chains {
            prop_assert!(p.is_chain(chain));
            for &e in chain {
                prop_assert!(seen.insert(e));
            }
        }
        prop_assert_eq!(seen.len(), p.len());

        let layers = p.min_antichain_partition().unwrap();
        prop_assert_eq!(layers.len(), opt.longest_chain);
        prop_assert_eq!(layers.len(), opt.min_antichain_partition);
        for block in &layers.antichains {
            prop_assert!(p.is_antichain(block));
        }
    }

    #[test]
    fn sdr_matches_hall(seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = r.gen_range(1..=6usize);
        let m = r.gen_range(0..=8usize);
        let members: Vec<Vec<usize>> = (0..m)
            .map(|_| (0..u).filter(|_| r.gen_bool(0.35)).collect())
            .collect();
        let family = SetFamily::new((0..u).collect(), members.clone()).unwrap();
        let sets: Vec<BTreeSet<usize>> = members.iter().map(|v| v.iter().copied().collect()).collect();
        let hall = oracle_hall(&sets).unwrap();
        match family.find_sdr() {
            SdrOutcome::Representatives(reps) => {
                prop_assert!(hall);
                prop_assert_eq!(reps.len(), m);
                prop_assert_eq!(reps.iter().collect::<BTreeSet<_>>().len(), m);
                for (i, x) in reps.iter().enumerate() {
                    prop_assert!(sets[i].contains(x));
                }
            }
            SdrOutcome::HallViolation { subfamily, union_size } => {
                prop_assert!(!hall);
                let union: BTreeSet<usize> = subfamily.iter().flat_map(|&i| sets[i].iter().copied()).collect();
                prop_assert_eq!(union.len(), union_size);
                prop_assert!(union_size < subfamily.len());
            }
        }
    }

    #[test]
    fn closure_matches_term_enumeration(seed in any::<u64>(), m in 1usize..=4) {
        let lattice = powerset_lattice(m);
        let mut r = rng(seed);
        let seed_set: BTreeSet<usize> = (0..r.gen_range(0..4)).map(|_| r.gen_range(0..lattice.len())).collect();
        prop_assert_eq!(lattice.closure(&seed_set), oracle_terms(&lattice, &seed_set, 6).unwrap());
    }

    #[test]
    fn partition_spaces_are_granular(seed in any::<u64>(), m in 1usize..=6) {
        let (universe, blocks) = random_partition(&mut rng(seed), m);
        let s = partition_space(&universe, &blocks);
        let report = s.verify();
        prop_assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());

        let definite = s.crisp_set(CrispnessConcept::Definite);
        prop_assert_eq!(definite.len(), 1 << blocks.len());
        let unions: BTreeSet<usize> = (0..1usize << blocks.len())
            .map(|sel| {
                blocks.iter().enumerate().filter(|(i, _)| sel >> i & 1 == 1).fold(0, |acc, (_, b)| {
                    b.iter().fold(acc, |acc, e| acc | 1 << universe.iter().position(|u| u == e).unwrap())
                })
            })
            .collect();
        prop_assert_eq!(&definite, &unions);
        prop_assert_eq!(s.rough_catalog(RoughnessConcept::Rough).count() + definite.len(), 1 << m);

        for x in 0..s.len() {
            prop_assert!(s.leq(s.lower(x), x));
            prop_assert_eq!(s.lower(s.lower(x)), s.lower(x));
        }

        let terms = oracle_terms(s.lattice(), s.granulation(), 6).unwrap();
        prop_assert_eq!(&terms, &s.lattice().closure(s.granulation()));

        let rough: BTreeSet<usize> = (0..s.len()).filter(|x| !definite.contains(x)).collect();
        let map = s.canonical_representation(&definite, &rough).unwrap();
        prop_assert!(map.avoids_diagonal());
        prop_assert_eq!(map.assignments.len(), rough.len());
    }

    #[test]
    fn chain_feasibility_matches_scan(n in 1u64..2_000_000) {
        prop_assert_eq!(pwc_feasible(n).unwrap(), oracle_chain_feasibility(ChainRegime::Pwc, n).unwrap());
        prop_assert_eq!(wdc_feasible(n).unwrap(), oracle_chain_feasibility(ChainRegime::Wdc, n).unwrap());
    }

    #[test]
    fn rdc_inversion(k in 2u64..=2000, offset in 0u64..=10_000) {
        let n = k * k + offset;
        let pi = rdc_pi(n, k).unwrap();
        prop_assert_eq!(rdc_k(n, &pi).unwrap(), Some(k));
        prop_assert_eq!(pi == ExactRatio::one(), wdc_feasible(n).unwrap() == Some(k));
    }

    #[test]
    fn rdc_inversion_below_square(k in 2u64..=2000, frac in 0.0f64..1.0) {
        let n = k + ((k * k - k) as f64 * frac) as u64 + 1;
        let pi = rdc_pi(n, k).unwrap();
        prop_assert!(pi.in_unit_interval());
        prop_assert_eq!(rdc_k(n, &pi).unwrap(), Some(k));
    }

    #[test]
    fn rdc_counts_match_brute_force(n in 2u64..5_000, p in 1u64..=8, q in 1u64..=8) {
        prop_assume!(p <= q);
        let alpha = ExactRatio::new(p, q);
        for mode in BoundMode::ALL {
            prop_assert_eq!(rdc_admissible_count(n, &alpha, mode).unwrap(), oracle_rdc_scan(n, p, q, mode).unwrap());
        }
    }

    #[test]
    fn rbc_matches_enumeration(r in 0u64..=14, g in 0u64..=6, a in 0u64..=4, span in 0u64..=8, distinct in any::<bool>()) {
        let b = a + span;
        let production = rbc_sum(r, g as usize, a, b, distinct);
        let (total, count) = oracle_rbc(r, g, a, b, distinct).unwrap();
        prop_assert_eq!(&production.total, &total);
        prop_assert_eq!(&production.admissible, &count);
        prop_assert!(production.bounds_hold());
    }

    #[test]
    fn refine_bracket_width(grid in 2u64..=6, depth in 1u32..=3) {
        let r = rdc_refine(|_: &ExactRatio| false, grid, depth).unwrap();
        prop_assert_eq!(r.depth_reached, depth);
        prop_assert_eq!(r.bracket_width, ExactRatio::new(1u64, grid.pow(depth)));
    }

    #[test]
    fn scopes_and_choices_match_oracles(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = bounded(&random_poset(&mut r, 6));
        let n = p.len();
        let mut crisp: BTreeSet<usize> = (1..n - 1).filter(|_| r.gen_bool(0.5)).collect();
        crisp.insert(0);
        crisp.insert(n - 1);
        let rough: BTreeSet<usize> = (0..n).filter(|x| !crisp.contains(x)).take(6).collect();

        let mut pairs = Vec::new();
        for &x in &rough {
            let sp = scope_pair(&p, &crisp, x);
            let (lo, hi) = oracle_scopes(&p, &crisp, x);
            prop_assert_eq!(sp.lower.iter().copied().collect::<Vec<_>>(), lo.clone());
            prop_assert_eq!(sp.upper.iter().copied().collect::<Vec<_>>(), hi.clone());
            prop_assert!(p.is_antichain(&lo) && p.is_antichain(&hi));
            pairs.push((lo, hi));
        }
        for &c in &crisp {
            let sp = scope_pair(&p, &crisp, c);
            prop_assert_eq!((sp.lower, sp.upper), (BTreeSet::from([c]), BTreeSet::from([c])));
        }
        let counted = choice_count_in(&p, &crisp, &rough).unwrap();
        prop_assert_eq!(counted.total, oracle_choice_functions(&pairs).unwrap());
    }

    #[test]
    fn cover_plan_uses_width_many_chains(seed in any::<u64>()) {
        let p = bounded(&random_poset(&mut rng(seed), 6));
        let plan = cover_plan(&p).unwrap();
        let (width, _) = p.width_with_cover().unwrap();
        prop_assert_eq!(plan.chain_count(), width);
        let first = &plan.segments[0];
        prop_assert_eq!(first.elements[0], 0);
        prop_assert_eq!(*first.elements.last().unwrap(), p.len() - 1);
        let mut seen = BTreeSet::new();
        for seg in &plan.segments {
            prop_assert!(p.is_chain(&seg.elements));
            for &e in &seg.elements {
                prop_assert!(seen.insert(e));
            }
        }
        prop_assert_eq!(seen.len(), p.len());
    }

    #[test]
    fn branch_adjustment_monotone(r in 0u64..=8, h_o in 0u64..=4, extra in 0u64..=3) {
        let h = h_o + extra;
        let sb = SlotModel::StarsAndBars;
        prop_assert!(branch_adjusted_count(r, h_o, h_o, sb).unwrap().is_zero());
        let here = branch_adjusted_count(r, h, h_o, sb).unwrap();
        let next = branch_adjusted_count(r, h + 1, h_o, sb).unwrap();
        prop_assert!(here <= next);
    }
}

/// Occupancy vectors of `g` slots summing to `r`, counted one by one.
fn slot_assignments(r: u64, g: u64) -> u64 {
    if g == 0 {
        return u64::from(r == 0);
    }
    (0..=r).map(|first| slot_assignments(r - first, g - 1)).sum()
}

#[test]
fn stars_and_bars_matches_enumeration() {
    for r in 0..=8 {
        for h in 0..=3 {
            let expected = if r == 0 { 1 } else { slot_assignments(r, h * h - h) };
            assert_eq!(n_r_h(r, h, SlotModel::StarsAndBars), BigCount::from(expected), "r={r} h={h}");
        }
    }
}

#[test]
fn every_small_poset_matches_exhaustive_search() {
    for n in 0..=4 {
        for p in all_posets(n) {
            if n == 0 {
                continue;
            }
            let opt = oracle_poset(&p).unwrap();
            assert_eq!(p.width_with_cover().unwrap().0, opt.width);
            assert_eq!(p.min_antichain_partition().unwrap().len(), opt.longest_chain);
        }
    }
}

#[test]
fn representation_profile_round_trip() {
    let (universe, blocks) = (labels(4), vec![labels(4)[..2].to_vec(), labels(4)[2..].to_vec()]);
    let s = partition_space(&universe, &blocks);
    let crisp = s.crisp_set(CrispnessConcept::Definite);
    let rough: BTreeSet<usize> = (0..s.len()).filter(|x| !crisp.contains(x)).collect();
    let map = s.canonical_representation(&crisp, &rough).unwrap();
    let phi: BTreeMap<usize, (usize, usize)> = map.assignments.clone();
    let profile = roughspace_core::space::AssumptionProfile::asserting_all(&s, crisp, rough, phi);
    assert!(s.verify_assumptions(&profile).all_passed());
}
