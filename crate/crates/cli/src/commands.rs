use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use roughspace_core::chain::{
    admissibility_probe, bounded_partitions, boolean_wdc_models, pwc_feasible, rbc_count, rdc_admissible_count,
    rdc_admissible_set, rdc_k, rdc_pi, rdc_refine, sequence_scan, wdc_feasible, BoundMode, RbcProblem, ScanParams,
};
use roughspace_core::distribution::{branch_adjusted_count, choice_count, cover_plan, n_r_h, rbo_consistency};
use roughspace_core::numeric::ExactRatio;
use roughspace_core::oracle::{
    oracle_boolean_models, oracle_chain_feasibility, oracle_poset, oracle_rbc, oracle_rdc_scan, oracle_terms,
    ChainRegime, ORACLE_POSET_LIMIT, ORACLE_TERM_DEPTH,
};
use roughspace_core::space::{AssumptionProfile, CheckOutcome, CrispnessConcept, HigherGranularSpace, RoughCatalog};

use crate::document::{parse_partition, parse_space_document, SpaceDocument};
use crate::emit::{emit_table, scan_table, Format, Table};
use crate::{Command, Oracle, Outcome, Rbo, RbcArgs, RunConfig, Solve};

/// An input or usage problem; reported with exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Step = Result<Outcome, Usage>;

fn done(ok: bool, stdout: String) -> Step {
    Ok(Outcome {
        status: if ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

/// Executes one invocation. Nothing is written to the terminal.
pub fn run(config: &RunConfig) -> Outcome {
    let fmt = config.format;
    let step = match &config.command {
        Command::Check { document } => check(document, fmt),
        Command::Classify { document, crisp, catalog } => classify(document, *crisp, *catalog, fmt),
        Command::Assume { document, crisp } => assume(document, *crisp, fmt),
        Command::Solve(s) => solve(s, fmt),
        Command::Scan(a) => {
            let params = ScanParams {
                alpha: a.alpha.clone(),
                bound_mode: a.bound_mode,
                include_x_zero: a.include_x_zero,
            };
            sequence_scan(a.regime, a.min_n..=a.max_n, &params)
                .map_err(Usage::from)
                .and_then(|rows| done(true, emit_table(&scan_table(a.regime, &rows), fmt)))
        }
        Command::Rbo(r) => rbo(r, fmt),
        Command::Oracle(o) => oracle(o),
        Command::MakePawlak { universe, blocks } => {
            let (universe, blocks) = parse_partition(universe, blocks);
            SpaceDocument::pawlak(&universe, &blocks)
                .map_err(Usage::from)
                .and_then(|doc| done(true, doc.to_json() + "\n"))
        }
    };
    step.unwrap_or_else(|Usage(msg)| Outcome {
        status: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    })
}

fn load(path: &Path) -> Result<(HigherGranularSpace, Option<AssumptionProfile>), Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    parse_space_document(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn labels(space: &HigherGranularSpace, set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter().map(|x| space.label(x)).collect::<Vec<_>>().join(" ")
}

fn check(path: &Path, fmt: Format) -> Step {
    let (space, _) = load(path)?;
    let report = space.verify();
    let mut table = Table::new(vec!["axiom", "result", "witness"]);
    for c in &report.checks {
        table.push(vec![
            c.axiom.statement().to_string(),
            if c.passed() { "pass" } else { "FAIL" }.to_string(),
            c.witness.map(|w| w.render(space.poset())).unwrap_or_default(),
        ]);
    }
    let mut out = emit_table(&table, fmt);
    if fmt == Format::Table {
        let failed = report.failures().count();
        out += &if failed == 0 {
            "all axioms hold\n".to_string()
        } else {
            format!("{failed} axiom(s) failed\n")
        };
    }
    done(report.all_passed(), out)
}

fn classify(path: &Path, crisp: Option<CrispnessConcept>, catalog: Option<roughspace_core::space::RoughnessConcept>, fmt: Format) -> Step {
    let (space, _) = load(path)?;
    if let Some(c) = crisp {
        let set = space.crisp_set(c);
        return done(true, format!("{c} ({}): {}\n", set.len(), labels(&space, set)));
    }
    if let Some(r) = catalog {
        let cat = space.rough_catalog(r);
        let mut out = format!("{r} ({}):\n", cat.count());
        match cat {
            RoughCatalog::Elements(e) => {
                for x in e {
                    let _ = writeln!(out, "  {}", space.label(x));
                }
            }
            RoughCatalog::Pairs(p) => {
                for (a, b) in p {
                    let _ = writeln!(out, "  ({}, {})", space.label(a), space.label(b));
                }
            }
            RoughCatalog::Intervals(iv) => {
                for e in iv {
                    let _ = writeln!(
                        out,
                        "  ({}, {}): {}",
                        space.label(e.lower),
                        space.label(e.upper),
                        labels(&space, e.members.iter().copied())
                    );
                }
            }
        }
        return done(true, out);
    }
    let mut table = Table::new(vec!["crisp", "rough", "crisp_count", "rough_count"]);
    for cell in space.classification_matrix().cells {
        table.push(vec![
            cell.crisp.to_string(),
            cell.rough.to_string(),
            cell.crisp_count.to_string(),
            cell.rough_count.to_string(),
        ]);
    }
    done(true, emit_table(&table, fmt))
}

fn default_split(space: &HigherGranularSpace, concept: CrispnessConcept) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let crisp = space.crisp_set(concept);
    let rough = (0..space.len()).filter(|x| !crisp.contains(x)).collect();
    (crisp, rough)
}

fn assume(path: &Path, concept: CrispnessConcept, fmt: Format) -> Step {
    let (space, profile) = load(path)?;
    let mut notes = String::new();
    let profile = match profile {
        Some(p) => p,
        None => {
            let (crisp, rough) = default_split(&space, concept);
            match space.canonical_representation(&crisp, &rough) {
                Ok(map) => {
                    let _ = writeln!(notes, "phi: canonical representation onto {} crisp pairs", map.image.len());
                    AssumptionProfile::asserting_all(&space, crisp, rough, map.assignments)
                }
                Err(e) => {
                    let _ = writeln!(notes, "phi: {e}");
                    AssumptionProfile::asserting_all(&space, crisp, rough, Default::default())
                }
            }
        }
    };
    let report = space.verify_assumptions(&profile);
    let mut table = Table::new(vec!["item", "result", "witness", "detail"]);
    for c in &report.checks {
        table.push(vec![
            c.item.to_string(),
            match c.outcome {
                CheckOutcome::Pass => "pass",
                CheckOutcome::Fail => "FAIL",
                CheckOutcome::NotAsserted => "not asserted",
            }
            .to_string(),
            c.witness.map(|w| w.render(space.poset())).unwrap_or_default(),
            c.detail.clone().unwrap_or_default(),
        ]);
    }
    let mut out = emit_table(&table, fmt);
    if fmt == Format::Table {
        out += &notes;
    }
    done(report.all_passed(), out)
}

fn verdict(k: Option<u64>) -> Step {
    match k {
        Some(k) => done(true, format!("feasible k={k}\n")),
        None => done(false, "infeasible\n".into()),
    }
}

fn solve(s: &Solve, fmt: Format) -> Step {
    match s {
        Solve::Pwc { n } => verdict(pwc_feasible(*n)?),
        Solve::Wdc { n } => verdict(wdc_feasible(*n)?),
        Solve::Boolean { limit, include_x_zero } => {
            let models = boolean_wdc_models(*limit, *include_x_zero);
            let mut table = Table::new(vec!["x", "k", "n"]);
            for m in &models {
                table.push(vec![m.x.to_string(), m.k.to_string(), m.n.to_string()]);
            }
            let mut out = emit_table(&table, fmt);
            if fmt == Format::Table {
                out += &format!("count={}\n", models.len());
            }
            done(!models.is_empty(), out)
        }
        Solve::Rdc { n, k, pi, alpha, bound_mode, refine, grid, max_depth } => {
            if let Some(k) = k {
                let pi = rdc_pi(*n, *k)?;
                let ok = pi.in_unit_interval();
                return done(ok, format!("pi={pi} {}\n", if ok { "admissible" } else { "inadmissible" }));
            }
            if let Some(pi) = pi {
                return verdict(rdc_k(*n, pi)?);
            }
            if *refine {
                let r = rdc_refine(admissibility_probe(*n, *bound_mode), *grid, *max_depth)?;
                return match r.found {
                    Some((a, depth)) => done(
                        true,
                        format!("admissible alpha={a} at depth {depth} ({} evaluations)\n", r.evaluations),
                    ),
                    None => done(
                        false,
                        format!(
                            "no admissible alpha by depth {} (grid spacing {}, {} evaluations)\n",
                            r.depth_reached, r.bracket_width, r.evaluations
                        ),
                    ),
                };
            }
            let set = rdc_admissible_set(*n, alpha, *bound_mode)?;
            let mut table = Table::new(vec!["n", "k", "pi_num", "pi_den", "admissible"]);
            for (k, pi) in &set {
                table.push(vec![
                    n.to_string(),
                    k.to_string(),
                    pi.numer().to_string(),
                    pi.denom().to_string(),
                    "true".into(),
                ]);
            }
            let mut out = emit_table(&table, fmt);
            if fmt == Format::Table {
                out += &format!("count={}\n", set.len());
            }
            done(!set.is_empty(), out)
        }
        Solve::Rbc { problem, list } => {
            let p = rbc_problem(problem)?;
            let c = rbc_count(&p);
            let mut out = format!(
                "r={} g={}\nB={}\nn_o={}\nlower={}\nupper={}\nbounds {}\n",
                p.r(),
                p.g(),
                c.total,
                c.admissible,
                c.lower,
                c.upper,
                if c.bounds_hold() { "hold" } else { "violated" }
            );
            if let Some(limit) = list {
                for parts in bounded_partitions(p.r(), p.g() as usize, p.a, p.b, p.distinct).take(*limit) {
                    let parts: Vec<String> = parts.iter().map(u64::to_string).collect();
                    let _ = writeln!(out, "  {}", parts.join(" "));
                }
            }
            done(!c.admissible.is_zero(), out)
        }
    }
}

fn rbc_problem(a: &RbcArgs) -> Result<RbcProblem, Usage> {
    Ok(RbcProblem::new(a.n, a.k, a.a, a.b, a.distinct)?)
}

fn rbo(r: &Rbo, fmt: Format) -> Step {
    match r {
        Rbo::Consistency { n, k, t } => {
            let p = rbo_consistency(*n, *k, *t)?;
            let mut out = p.report().join("\n") + "\n";
            out += if p.consistent() { "consistent\n" } else { "inconsistent\n" };
            done(p.consistent(), out)
        }
        Rbo::Count { r, h, h_o, model } => {
            let count = match h_o {
                Some(h_o) => branch_adjusted_count(*r, *h, *h_o, *model)?,
                None => n_r_h(*r, *h, *model),
            };
            done(true, format!("{count}\n"))
        }
        Rbo::Scopes { document, crisp } => {
            let (space, profile) = load(document)?;
            let (c, rough) = match profile {
                Some(p) => (p.crisp, p.rough),
                None => default_split(&space, *crisp),
            };
            let counted = choice_count(&space, &c, &rough)?;
            let mut table = Table::new(vec!["x", "lower_scope", "upper_scope", "candidates"]);
            for f in &counted.factors {
                table.push(vec![
                    space.label(f.scopes.x).to_string(),
                    labels(&space, f.scopes.lower.iter().copied()),
                    labels(&space, f.scopes.upper.iter().copied()),
                    f.candidates.to_string(),
                ]);
            }
            let mut out = emit_table(&table, fmt);
            if fmt == Format::Table {
                let _ = writeln!(out, "choice functions: {}", counted.total);
                if !counted.unrepresentable.is_empty() {
                    let _ = writeln!(out, "unrepresentable: {}", labels(&space, counted.unrepresentable.iter().copied()));
                }
            }
            done(counted.unrepresentable.is_empty(), out)
        }
        Rbo::Plan { document, crisp } => {
            let (space, profile) = load(document)?;
            let c = match profile {
                Some(p) => p.crisp,
                None => space.crisp_set(*crisp),
            };
            let (sub, _) = space.poset().restrict(&c);
            let plan = match cover_plan(&sub) {
                Ok(plan) => plan,
                Err(e) => return done(false, format!("no cover plan: {e}\n")),
            };
            let name = |x: usize| sub.label(x).to_string();
            let opt = |x: Option<usize>| x.map(name).unwrap_or_else(|| "-".into());
            let mut table = Table::new(vec!["chain", "elements", "attach", "rejoin", "excluded", "h", "h_o", "slots"]);
            for (i, s) in plan.segments.iter().enumerate() {
                table.push(vec![
                    i.to_string(),
                    s.elements.iter().map(|&x| name(x)).collect::<Vec<_>>().join(" < "),
                    opt(s.attach),
                    opt(s.rejoin),
                    s.excluded.iter().map(|&x| name(x)).collect::<Vec<_>>().join(" "),
                    s.h.to_string(),
                    s.h_o.to_string(),
                    s.slots.to_string(),
                ]);
            }
            let mut out = emit_table(&table, fmt);
            if fmt == Format::Table {
                let bp: Vec<String> = plan.branch_points.iter().map(|&x| name(x)).collect();
                let _ = writeln!(out, "chains: {}  slots: {}", plan.chain_count(), plan.total_slots());
                let _ = writeln!(out, "branch points: {}", if bp.is_empty() { "none".into() } else { bp.join(" ") });
            }
            done(true, out)
        }
    }
}

struct Tally {
    out: String,
    disagreements: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { out: String::new(), disagreements: 0 }
    }

    fn compare<T: std::fmt::Display + PartialEq>(&mut self, what: &str, production: T, oracle: T) {
        if production == oracle {
            let _ = writeln!(self.out, "agree     {what}: {production}");
        } else {
            self.disagreements += 1;
            let _ = writeln!(self.out, "DISAGREE  {what}: production {production}, oracle {oracle}");
        }
    }

    fn finish(mut self) -> Step {
        let _ = writeln!(self.out, "{} disagreement(s)", self.disagreements);
        done(self.disagreements == 0, self.out)
    }
}

fn chain_sweep(regime: ChainRegime, max_n: u64) -> Step {
    let mut tally = Tally::new();
    let mut feasible = 0u64;
    for n in 1..=max_n {
        let production = match regime {
            ChainRegime::Pwc => pwc_feasible(n)?,
            ChainRegime::Wdc => wdc_feasible(n)?,
        };
        let expected = oracle_chain_feasibility(regime, n)?;
        if production != expected {
            let show = |k: Option<u64>| k.map_or("infeasible".to_string(), |k| format!("k={k}"));
            tally.compare(&format!("n={n}"), show(production), show(expected));
        }
        feasible += u64::from(production.is_some());
    }
    let _ = writeln!(tally.out, "checked n=1..={max_n}, {feasible} feasible");
    tally.finish()
}

fn ratio_parts(alpha: &ExactRatio) -> Result<(u64, u64), Usage> {
    let p = u64::try_from(alpha.numer()).map_err(|_| Usage(format!("alpha {alpha} is not in (0, 1]")))?;
    let q = u64::try_from(alpha.denom()).map_err(|_| Usage(format!("alpha {alpha} has too large a denominator")))?;
    Ok((p, q))
}

fn oracle(o: &Oracle) -> Step {
    match o {
        Oracle::Pwc { max_n } => chain_sweep(ChainRegime::Pwc, *max_n),
        Oracle::Wdc { max_n } => chain_sweep(ChainRegime::Wdc, *max_n),
        Oracle::Boolean { limit, include_x_zero } => {
            let mut tally = Tally::new();
            let production: Vec<(u32, u64, u64)> = boolean_wdc_models(*limit, *include_x_zero)
                .iter()
                .map(|m| (m.x, m.k, m.n))
                .collect();
            let show = |models: &[(u32, u64, u64)]| {
                let items: Vec<String> = models.iter().map(|(x, k, n)| format!("({x},{k},{n})")).collect();
                format!("{} models {}", models.len(), items.join(" "))
            };
            tally.compare("(x, k, n)", show(&production), show(&oracle_boolean_models(*limit, *include_x_zero)));
            tally.finish()
        }
        Oracle::Rdc { n, alpha } => {
            let (p, q) = ratio_parts(alpha)?;
            let mut tally = Tally::new();
            for mode in BoundMode::ALL {
                let production = rdc_admissible_count(*n, alpha, mode)?;
                tally.compare(&format!("{mode} admissible k"), production, oracle_rdc_scan(*n, p, q, mode)?);
            }
            tally.finish()
        }
        Oracle::Rbc(args) => {
            let p = rbc_problem(args)?;
            let c = rbc_count(&p);
            let (total, count) = oracle_rbc(p.r(), p.g(), p.a, p.b, p.distinct)?;
            let mut tally = Tally::new();
            tally.compare("bounds hold", c.bounds_hold(), true);
            tally.compare("B", c.total, total);
            tally.compare("n_o", c.admissible, count);
            tally.finish()
        }
        Oracle::Space { document } => {
            let (space, _) = load(document)?;
            let mut tally = Tally::new();
            if space.len() <= ORACLE_POSET_LIMIT {
                let opt = oracle_poset(space.poset())?;
                let (width, cover) = space.poset().width_with_cover()?;
                let layers = space.poset().min_antichain_partition()?;
                tally.compare("width", width, opt.width);
                tally.compare("chains in cover", cover.len(), opt.min_chain_partition);
                tally.compare("antichain layers", layers.len(), opt.min_antichain_partition);
            } else {
                let _ = writeln!(tally.out, "skipped   poset optima: {} elements exceed {ORACLE_POSET_LIMIT}", space.len());
            }
            let closure = space.lattice().closure(space.granulation());
            let terms = oracle_terms(space.lattice(), space.granulation(), ORACLE_TERM_DEPTH)?;
            tally.compare("granule closure", labels(&space, closure), labels(&space, terms));
            tally.finish()
        }
    }
}
