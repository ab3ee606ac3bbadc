//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runtime limits are part of each criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use roughspace_core::chain::*;
use roughspace_core::distribution::*;
use roughspace_core::numeric::{BigCount, ExactRatio};
use roughspace_core::oracle::*;
use roughspace_core::order::{FinitePoset, SetFamily};
use roughspace_core::space::{CrispnessConcept, HigherGranularSpace};

use common::*;

type Outcome = Result<Vec<String>, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_pwc() -> Outcome {
    let limit = 100_000u64;
    let mut feasible = Vec::new();
    for n in 1..=limit {
        let got = pwc_feasible(n).map_err(|e| e.to_string())?;
        let want = oracle_chain_feasibility(ChainRegime::Pwc, n).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("n={n}: production {got:?}, oracle {want:?}"))?;
        if got.is_some() {
            feasible.push(n);
        }
    }
    let expected: Vec<u64> = (1..).map(|k: u64| k * k + k).take_while(|&n| n <= limit).collect();
    ensure(feasible == expected, || "feasible set differs from {k²+k}".into())?;
    Ok(vec![format!("{} feasible n up to 10^5, all of the form k²+k", feasible.len())])
}

fn c2_wdc() -> Outcome {
    let limit = 100_000u64;
    let mut feasible = Vec::new();
    for n in 1..=limit {
        let got = wdc_feasible(n).map_err(|e| e.to_string())?;
        let want = oracle_chain_feasibility(ChainRegime::Wdc, n).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("n={n}: production {got:?}, oracle {want:?}"))?;
        if got.is_some() {
            feasible.push(n);
        }
    }
    let expected: Vec<u64> = (1..).map(|k: u64| k * k).take_while(|&n| n <= limit).collect();
    ensure(feasible == expected, || "feasible set differs from the perfect squares".into())?;
    Ok(vec![format!("{} feasible n up to 10^5, exactly the perfect squares", feasible.len())])
}

fn c3_boolean() -> Outcome {
    let limit = 100_000_000u64;
    let models = boolean_wdc_models(limit, false);
    let got: Vec<(u32, u64, u64)> = models.iter().map(|m| (m.x, m.k, m.n)).collect();
    let expected: Vec<(u32, u64, u64)> = (1u32..)
        .take_while(|&m| 4u64.pow(m) <= limit)
        .map(|m| (2 * m, 1u64 << m, 4u64.pow(m)))
        .collect();
    ensure(got == expected, || format!("models {got:?} differ from (2m, 2^m, 4^m)"))?;
    let oracle = oracle_boolean_models(limit, false);
    ensure(got == oracle, || format!("oracle found {oracle:?}"))?;
    let with_zero = boolean_wdc_models(limit, true).len();
    let all_exponents = (0u32..64).take_while(|&x| 1u64 << x <= limit).count();
    Ok(vec![
        format!("even-exponent models with n <= 10^8: {} (x = 2..26); {} counting the one-element algebra", got.len(), with_zero),
        "reference figure: 27 models".into(),
        format!(
            "27 equals the number of exponents x >= 0 with 2^x <= 10^8 ({all_exponents}), i.e. every power of two, \
             without the requirement 2^x = k²; the even-exponent count does not reproduce it"
        ),
    ])
}

fn c4_inversion() -> Outcome {
    let failures: Vec<String> = (2u64..=2000)
        .into_par_iter()
        .flat_map_iter(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(k);
            let mut bad = Vec::new();
            for _ in 0..200 {
                let n = k * k + rng.gen_range(0..=10_000u64);
                let ok = rdc_pi(n, k)
                    .and_then(|pi| rdc_k(n, &pi))
                    .map(|got| got == Some(k))
                    .unwrap_or(false);
                if !ok {
                    bad.push(format!("k={k} n={n}"));
                }
            }
            bad
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} failures, first {}", failures.len(), failures[0]))?;
    Ok(vec!["399800 pairs inverted exactly".into()])
}

fn c5_rdc_scan() -> Outcome {
    let n = 1_000_000u64;
    let alpha = ExactRatio::new(1u8, 2u8);
    let mut lines = Vec::new();
    for mode in BoundMode::ALL {
        let got = rdc_admissible_count(n, &alpha, mode).map_err(|e| e.to_string())?;
        let want = oracle_rdc_scan(n, 1, 2, mode).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{mode}: production {got}, brute force {want}"))?;
        let range = mode.k_range(n, &alpha);
        lines.push(format!("{mode}: k in {}..={}, admissible (0 < pi <= 1/2): {got}", range.start(), range.end()));
    }
    let readings = k_count_readings(n, &alpha).map_err(|e| e.to_string())?;
    let matching: Vec<String> = readings
        .iter()
        .filter(|r| r.count == 1413)
        .map(|r| format!("{} with {}", r.mode, r.reading.tag()))
        .collect();
    for r in &readings {
        lines.push(format!("reading {} / {}: {}", r.mode, r.reading.tag(), r.count));
    }
    lines.push("reference figure: about 1413 values of k".into());
    lines.push(if matching.is_empty() {
        "no reading reproduces 1413".into()
    } else {
        format!(
            "1413 is reproduced only by: {} (the size of the candidate range 2..=floor(sqrt(n/alpha)), not an admissible count)",
            matching.join("; ")
        )
    });
    Ok(lines)
}

fn c6_rbc() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(2..=60u64);
        let k = rng.gen_range(2..=6u64.min(n));
        let r = n - k;
        let a = rng.gen_range(0..=r);
        let b = rng.gen_range(a..=r);
        let distinct = rng.gen_bool(0.5);
        let p = RbcProblem::new(n, k, a, b, distinct).map_err(|e| e.to_string())?;
        let c = rbc_count(&p);
        let (total, count) = oracle_rbc(p.r(), p.g(), a, b, distinct).map_err(|e| e.to_string())?;
        let ctx = || format!("n={n} k={k} a={a} b={b} distinct={distinct}");
        ensure(c.total == total, || format!("{}: B {} vs oracle {}", ctx(), c.total, total))?;
        ensure(c.admissible == count, || format!("{}: n_o {} vs oracle {}", ctx(), c.admissible, count))?;
        ensure(c.bounds_hold(), || format!("{}: bounds {} <= {} <= {} fail", ctx(), c.lower, c.total, c.upper))?;

        let widest = rbc_count(&RbcProblem::from_rdc(n, k, distinct).map_err(|e| e.to_string())?);
        let (w_total, w_count) = oracle_rbc(r, p.g(), 0, r, distinct).map_err(|e| e.to_string())?;
        ensure(widest.total == w_total && widest.admissible == w_count, || format!("{}: a=0,b=n-k reduction", ctx()))?;
        ensure(c.admissible <= widest.admissible, || format!("{}: bounded problem not contained in a=0,b=n-k", ctx()))?;
        checked += 1;
    }
    Ok(vec![format!("{checked} random problems agree with enumeration; bounds and the a=0,b=n-k containment hold")])
}

fn hall_family(p: &FinitePoset, above: bool) -> Vec<BTreeSet<usize>> {
    (0..p.len())
        .map(|x| (0..p.len()).filter(|&y| if above { p.lt(x, y) } else { p.lt(y, x) }).collect())
        .collect()
}

fn check_poset(p: &FinitePoset) -> Result<(), String> {
    let opt = oracle_poset(p).map_err(|e| e.to_string())?;
    let (width, cover) = p.width_with_cover().map_err(|e| e.to_string())?;
    let covered: usize = cover.chains.iter().map(Vec::len).sum();
    ensure(
        width == opt.width && cover.len() == opt.min_chain_partition && covered == p.len() && cover.chains.iter().all(|c| p.is_chain(c)),
        || format!("width/cover mismatch on {:?}", p.covers()),
    )?;
    let layers = p.min_antichain_partition().map_err(|e| e.to_string())?;
    ensure(
        layers.len() == opt.min_antichain_partition && layers.len() == opt.longest_chain && layers.antichains.iter().all(|a| p.is_antichain(a)),
        || format!("antichain partition mismatch on {:?}", p.covers()),
    )?;
    for above in [true, false] {
        let members = hall_family(p, above);
        let family = SetFamily::new(
            (0..p.len()).collect(),
            members.iter().map(|m| m.iter().copied().collect()).collect(),
        )
        .map_err(|e| e.to_string())?;
        let hall = oracle_hall(&members).map_err(|e| e.to_string())?;
        ensure(family.find_sdr().is_found() == hall, || format!("SDR verdict mismatch on {:?}", p.covers()))?;
    }
    Ok(())
}

fn c7_order() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=5 {
        for p in all_posets(n) {
            check_poset(&p)?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        check_poset(&random_poset(&mut rng, 8))?;
    }
    for _ in 0..500 {
        let u = rng.gen_range(1..=7usize);
        let m = rng.gen_range(0..=9usize);
        let members: Vec<BTreeSet<usize>> = (0..m).map(|_| (0..u).filter(|_| rng.gen_bool(0.3)).collect()).collect();
        let family = SetFamily::new((0..u).collect(), members.iter().map(|s| s.iter().copied().collect()).collect())
            .map_err(|e| e.to_string())?;
        ensure(family.find_sdr().is_found() == oracle_hall(&members).map_err(|e| e.to_string())?, || {
            format!("SDR verdict mismatch on {members:?}")
        })?;
    }
    Ok(vec![format!(
        "{exhaustive} posets on 1..=5 elements (every natural labelling) and 500 random posets on <= 8; 500 random set families"
    )])
}

fn c8_spaces() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let m = rng.gen_range(1..=6);
        let (universe, blocks) = random_partition(&mut rng, m);
        let s = HigherGranularSpace::from_partition(&universe, &blocks).map_err(|e| e.to_string())?;
        let ctx = || format!("blocks {blocks:?}");
        let report = s.verify();
        ensure(report.all_passed(), || format!("{}: failing {:?}", ctx(), report.failures().collect::<Vec<_>>()))?;
        ensure(s.crisp_set(CrispnessConcept::Definite).len() == 1 << blocks.len(), || format!("{}: definite count", ctx()))?;
        ensure(s.classification_matrix().cells.len() == 40, || format!("{}: matrix size", ctx()))?;
        let terms = oracle_terms(s.lattice(), s.granulation(), 6).map_err(|e| e.to_string())?;
        ensure(terms == s.lattice().closure(s.granulation()), || format!("{}: closure differs from terms", ctx()))?;
        let wra_by_terms = (0..s.len()).all(|x| terms.contains(&s.lower(x)) && terms.contains(&s.upper(x)));
        ensure(wra_by_terms == report.passed(roughspace_core::space::Axiom::WeakRepresentability), || {
            format!("{}: WRA verdicts differ", ctx())
        })?;
    }
    Ok(vec!["200 random partition spaces pass every axiom; WRA closure matches depth-6 terms".into()])
}

fn c9_rbo() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut posets = Vec::new();
    for _ in 0..100 {
        let p = bounded(&random_poset(&mut rng, 7));
        let n = p.len();
        let mut crisp: BTreeSet<usize> = (1..n - 1).filter(|_| rng.gen_bool(0.5)).collect();
        crisp.insert(0);
        crisp.insert(n - 1);
        let rough: BTreeSet<usize> = (0..n).filter(|x| !crisp.contains(x)).take(6).collect();
        let counted = choice_count_in(&p, &crisp, &rough).map_err(|e| e.to_string())?;
        let mut pairs = Vec::new();
        for f in &counted.factors {
            let (lo, hi) = oracle_scopes(&p, &crisp, f.scopes.x);
            ensure(
                f.scopes.lower.iter().copied().eq(lo.iter().copied()) && f.scopes.upper.iter().copied().eq(hi.iter().copied()),
                || format!("scopes of {} differ", f.scopes.x),
            )?;
            pairs.push((lo, hi));
        }
        let oracle = oracle_choice_functions(&pairs).map_err(|e| e.to_string())?;
        ensure(counted.total == oracle, || format!("choice count {} vs oracle {}", counted.total, oracle))?;
        posets.push(p);
    }
    let adjusted = branch_adjusted_count(2, 3, 2, SlotModel::StarsAndBars).map_err(|e| e.to_string())?;
    ensure(adjusted == BigCount::from(18u64), || format!("branch_adjusted_count(2,3,2) = {adjusted}"))?;
    for n in 0..=4 {
        posets.extend(all_posets(n).iter().map(bounded));
    }
    for p in &posets {
        let plan = cover_plan(p).map_err(|e| e.to_string())?;
        let (width, _) = p.width_with_cover().map_err(|e| e.to_string())?;
        ensure(plan.chain_count() == width, || format!("plan uses {} chains, width {}", plan.chain_count(), width))?;
    }
    Ok(vec![format!(
        "100 random choice instances agree; n(2,3) - n(2,2) = 18; {} crisp posets planned with width-many chains",
        posets.len()
    )])
}

fn c10_refine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut runs = 0;
    for d in 1u32..=4 {
        let w = ExactRatio::new(1u64, 10u64.pow(d));
        for _ in 0..10 {
            let den = 1_000_003u64;
            let c = ExactRatio::new(rng.gen_range(1..den - den / 10u64.pow(d) - 1), den);
            let hi = ExactRatio::from(c.as_rational() + w.as_rational());
            let r = rdc_refine(|a: &ExactRatio| c <= *a && *a <= hi, 10, d).map_err(|e| e.to_string())?;
            let (alpha, depth) = r.found.ok_or_else(|| format!("no point found in [{c}, {hi}] by depth {d}"))?;
            ensure(depth <= d && c <= alpha && alpha <= hi, || format!("bad point {alpha} at depth {depth}"))?;
            runs += 1;
        }
    }
    for max_depth in 1u32..=4 {
        let r = rdc_refine(|_: &ExactRatio| false, 10, max_depth).map_err(|e| e.to_string())?;
        ensure(r.found.is_none() && r.depth_reached == max_depth, || "always-false predicate".into())?;
        ensure(r.bracket_width == ExactRatio::new(1u64, 10u64.pow(max_depth)), || "bracket width".into())?;
        runs += 1;
    }
    for n in [12u64, 20, 100, 1000, 12345] {
        let r = rdc_refine(admissibility_probe(n, BoundMode::SqrtN), 10, 6).map_err(|e| e.to_string())?;
        ensure(r.depth_reached <= 6, || "depth bound".into())?;
        if let Some((alpha, _)) = &r.found {
            ensure(!rdc_admissible_set(n, alpha, BoundMode::SqrtN).unwrap().is_empty(), || format!("n={n}: {alpha} not admissible"))?;
        }
        runs += 1;
    }
    Ok(vec![format!("{runs} refinement runs terminated within max_depth; every interval of width 10^-d hit by depth d")])
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "PWC equivalence", limit: Duration::from_secs(10), run: c1_pwc },
        Criterion { id: 2, name: "WDC equivalence", limit: Duration::from_secs(10), run: c2_wdc },
        Criterion { id: 3, name: "Boolean WDC models", limit: Duration::from_secs(1), run: c3_boolean },
        Criterion { id: 4, name: "RDC inversion", limit: Duration::from_secs(60), run: c4_inversion },
        Criterion { id: 5, name: "RDC scan", limit: Duration::from_secs(60), run: c5_rdc_scan },
        Criterion { id: 6, name: "RBC counting", limit: Duration::from_secs(60), run: c6_rbc },
        Criterion { id: 7, name: "Order theory", limit: Duration::from_secs(120), run: c7_order },
        Criterion { id: 8, name: "Space axioms", limit: Duration::from_secs(120), run: c8_spaces },
        Criterion { id: 9, name: "RBO", limit: Duration::from_secs(60), run: c9_rbo },
        Criterion { id: 10, name: "Refinement convergence", limit: Duration::from_secs(10), run: c10_refine },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (verdict, lines) = match outcome {
            Ok(_) if elapsed > c.limit => ("FAIL", vec![format!("took {:.2?}, limit {:?}", elapsed, c.limit)]),
            Ok(lines) => ("PASS", lines),
            Err(e) => ("FAIL", vec![e]),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} criterion {:>2}: {} ({:.2?}, limit {:?})", c.id, c.name, elapsed, c.limit);
        for line in lines {
            println!("        {line}");
        }
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
