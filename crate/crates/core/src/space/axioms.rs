use std::fmt;

use crate::order::{FinitePoset, OrderError};

use super::HigherGranularSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    JoinTable,
    MeetTable,
    Bounded,
    LowerContractive,
    LowerIdempotent,
    UpperSubIdempotent,
    LowerMonotone,
    UpperMonotone,
    BottomLowerFixed,
    BottomUpperFixed,
    TopLowerBelowTop,
    TopUpperBelowTop,
    WeakRepresentability,
    LowerStability,
    FullUnderlap,
}

impl Axiom {
    pub fn statement(self) -> &'static str {
        match self {
            Axiom::JoinTable => "join is the least upper bound",
            Axiom::MeetTable => "meet is the greatest lower bound",
            Axiom::Bounded => "⊥ <= a <= ⊤",
            Axiom::LowerContractive => "a^l <= a",
            Axiom::LowerIdempotent => "a^ll = a^l",
            Axiom::UpperSubIdempotent => "a^u <= a^uu",
            Axiom::LowerMonotone => "a <= b implies a^l <= b^l",
            Axiom::UpperMonotone => "a <= b implies a^u <= b^u",
            Axiom::BottomLowerFixed => "⊥^l = ⊥",
            Axiom::BottomUpperFixed => "⊥^u = ⊥",
            Axiom::TopLowerBelowTop => "⊤^l <= ⊤",
            Axiom::TopUpperBelowTop => "⊤^u <= ⊤",
            Axiom::WeakRepresentability => "WRA: x^l and x^u are lattice terms over G",
            Axiom::LowerStability => "LS: y in G, y <= x implies y <= x^l",
            Axiom::FullUnderlap => "FU: distinct granules lie strictly below a common definite element",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.statement())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
}

impl Witness {
    pub fn render(&self, poset: &FinitePoset) -> String {
        match *self {
            Witness::Element(x) => poset.label(x).to_string(),
            Witness::Pair(a, b) => format!("({}, {})", poset.label(a), poset.label(b)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// First counterexample found; `None` means the axiom holds.
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.check(axiom).is_some_and(AxiomCheck::passed)
    }
}

fn first_element(n: usize, bad: impl Fn(usize) -> bool) -> Option<Witness> {
    (0..n).find(|&x| bad(x)).map(Witness::Element)
}

fn first_comparable_pair(p: &FinitePoset, bad: impl Fn(usize, usize) -> bool) -> Option<Witness> {
    (0..p.len())
        .flat_map(|a| p.up_set(a).map(move |b| (a, b)))
        .find(|&(a, b)| bad(a, b))
        .map(|(a, b)| Witness::Pair(a, b))
}

pub(super) fn rough_axioms(
    p: &FinitePoset,
    bottom: usize,
    top: usize,
    l: &[usize],
    u: &[usize],
) -> Vec<AxiomCheck> {
    let n = p.len();
    let check = |axiom, witness| AxiomCheck { axiom, witness };
    vec![
        check(
            Axiom::Bounded,
            first_element(n, |a| !(p.leq(bottom, a) && p.leq(a, top))),
        ),
        check(Axiom::LowerContractive, first_element(n, |a| !p.leq(l[a], a))),
        check(Axiom::LowerIdempotent, first_element(n, |a| l[l[a]] != l[a])),
        check(Axiom::UpperSubIdempotent, first_element(n, |a| !p.leq(u[a], u[u[a]]))),
        check(Axiom::LowerMonotone, first_comparable_pair(p, |a, b| !p.leq(l[a], l[b]))),
        check(Axiom::UpperMonotone, first_comparable_pair(p, |a, b| !p.leq(u[a], u[b]))),
        check(
            Axiom::BottomLowerFixed,
            (l[bottom] != bottom).then_some(Witness::Element(bottom)),
        ),
        check(
            Axiom::BottomUpperFixed,
            (u[bottom] != bottom).then_some(Witness::Element(bottom)),
        ),
        check(
            Axiom::TopLowerBelowTop,
            (!p.leq(l[top], top)).then_some(Witness::Element(top)),
        ),
        check(
            Axiom::TopUpperBelowTop,
            (!p.leq(u[top], top)).then_some(Witness::Element(top)),
        ),
    ]
}

pub(super) fn granular_axioms(s: &HigherGranularSpace) -> AxiomReport {
    let lattice = s.lattice();
    let p = lattice.poset();
    let n = p.len();

    let (join_witness, meet_witness) = match lattice.verify_tables() {
        Ok(()) => (None, None),
        Err(OrderError::BadJoin(a, b, _)) => (label_pair(p, &a, &b), None),
        Err(OrderError::BadMeet(a, b, _)) => (None, label_pair(p, &a, &b)),
        Err(_) => unreachable!("verify_tables only reports bad entries"),
    };
    let mut checks = vec![
        AxiomCheck {
            axiom: Axiom::JoinTable,
            witness: join_witness,
        },
        AxiomCheck {
            axiom: Axiom::MeetTable,
            witness: meet_witness,
        },
    ];
    checks.extend(rough_axioms(
        p,
        lattice.bottom(),
        lattice.top(),
        s.lower_map(),
        s.upper_map(),
    ));

    let terms = lattice.closure(s.granulation());
    checks.push(AxiomCheck {
        axiom: Axiom::WeakRepresentability,
        witness: first_element(n, |x| {
            !terms.contains(&s.lower(x)) || !terms.contains(&s.upper(x))
        }),
    });

    let ls = s.granulation().iter().find_map(|&y| {
        p.up_set(y)
            .find(|&x| !p.leq(y, s.lower(x)))
            .map(|x| Witness::Pair(y, x))
    });
    checks.push(AxiomCheck {
        axiom: Axiom::LowerStability,
        witness: ls,
    });

    let definite: Vec<usize> = (0..n).filter(|&z| s.is_definite(z)).collect();
    let granules: Vec<usize> = s.granulation().iter().copied().collect();
    let fu = granules.iter().enumerate().find_map(|(i, &y1)| {
        granules[i + 1..]
            .iter()
            .find(|&&y2| !definite.iter().any(|&z| p.lt(y1, z) && p.lt(y2, z)))
            .map(|&y2| Witness::Pair(y1, y2))
    });
    checks.push(AxiomCheck {
        axiom: Axiom::FullUnderlap,
        witness: fu,
    });

    AxiomReport { checks }
}

fn label_pair(p: &FinitePoset, a: &str, b: &str) -> Option<Witness> {
    Some(Witness::Pair(p.index_of(a)?, p.index_of(b)?))
}
