use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::distribution::scope_pair;

use super::{HigherGranularSpace, SpaceError, Witness};

/// The minimal assumptions that a distribution of rough objects over crisp
/// objects may assert.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AssumptionFlag {
    /// The space is a higher granular operator space.
    F1,
    /// It has exactly `n` elements.
    F2,
    /// `C` is a subset of the space.
    C1,
    /// `#C = k`.
    C2,
    /// `R` is a proper subset of the space.
    R1,
    /// `R ∪ C` is the whole space.
    R2,
    /// `φ` is defined on `R` with values in `C × C`.
    R3,
    /// `R ∩ C = ∅`.
    RC1,
    /// `φ(x) = (a, b)` with `a < b` for every rough `x`.
    RC2,
}

impl AssumptionFlag {
    pub const ALL: [AssumptionFlag; 9] = [
        AssumptionFlag::F1,
        AssumptionFlag::F2,
        AssumptionFlag::C1,
        AssumptionFlag::C2,
        AssumptionFlag::R1,
        AssumptionFlag::R2,
        AssumptionFlag::R3,
        AssumptionFlag::RC1,
        AssumptionFlag::RC2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AssumptionFlag::F1 => "F1",
            AssumptionFlag::F2 => "F2",
            AssumptionFlag::C1 => "C1",
            AssumptionFlag::C2 => "C2",
            AssumptionFlag::R1 => "R1",
            AssumptionFlag::R2 => "R2",
            AssumptionFlag::R3 => "R3",
            AssumptionFlag::RC1 => "RC1",
            AssumptionFlag::RC2 => "RC2",
        }
    }
}

impl fmt::Display for AssumptionFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AssumptionFlag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AssumptionFlag::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown assumption flag `{s}`"))
    }
}

/// Asserted data `(n, k, C, R, φ)` together with the flags to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssumptionProfile {
    pub n: usize,
    pub k: usize,
    pub crisp: BTreeSet<usize>,
    pub rough: BTreeSet<usize>,
    pub phi: BTreeMap<usize, (usize, usize)>,
    pub flags: BTreeSet<AssumptionFlag>,
}

impl AssumptionProfile {
    /// A profile asserting every flag, with `n` and `k` taken from the
    /// space and `C`.
    pub fn asserting_all(
        space: &HigherGranularSpace,
        crisp: BTreeSet<usize>,
        rough: BTreeSet<usize>,
        phi: BTreeMap<usize, (usize, usize)>,
    ) -> Self {
        AssumptionProfile {
            n: space.len(),
            k: crisp.len(),
            crisp,
            rough,
            phi,
            flags: AssumptionFlag::ALL.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssumptionItem {
    Flag(AssumptionFlag),
    /// The image of `φ` lies in `C² ∖ Δ_C`.
    Proposition,
}

impl fmt::Display for AssumptionItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssumptionItem::Flag(flag) => flag.fmt(f),
            AssumptionItem::Proposition => f.write_str("image in C^2 minus diagonal"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    NotAsserted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssumptionCheck {
    pub item: AssumptionItem,
    pub outcome: CheckOutcome,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AssumptionReport {
    pub checks: Vec<AssumptionCheck>,
}

impl AssumptionReport {
    /// No asserted item failed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != CheckOutcome::Fail)
    }

    pub fn outcome(&self, item: AssumptionItem) -> Option<CheckOutcome> {
        self.checks.iter().find(|c| c.item == item).map(|c| c.outcome)
    }
}

/// An assignment of rough objects to ordered pairs of crisp objects.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepresentationMap {
    pub assignments: BTreeMap<usize, (usize, usize)>,
    /// The set `K` of pairs actually used.
    pub image: BTreeSet<(usize, usize)>,
}

impl RepresentationMap {
    pub fn avoids_diagonal(&self) -> bool {
        self.image.iter().all(|(a, b)| a != b)
    }
}

impl HigherGranularSpace {
    pub fn verify_assumptions(&self, profile: &AssumptionProfile) -> AssumptionReport {
        let n = self.len();
        let c = &profile.crisp;
        let r = &profile.rough;
        let in_range = |x: &usize| *x < n;
        let elem = |x: Option<usize>| x.map(Witness::Element);

        let mut checks = Vec::new();
        let mut push = |flag: AssumptionFlag, result: Result<(), (Option<Witness>, Option<String>)>| {
            let (outcome, witness, detail) = if !profile.flags.contains(&flag) {
                (CheckOutcome::NotAsserted, None, None)
            } else {
                match result {
                    Ok(()) => (CheckOutcome::Pass, None, None),
                    Err((w, d)) => (CheckOutcome::Fail, w, d),
                }
            };
            checks.push(AssumptionCheck {
                item: AssumptionItem::Flag(flag),
                outcome,
                witness,
                detail,
            });
        };

        let axioms = self.verify();
        push(
            AssumptionFlag::F1,
            match axioms.failures().next() {
                None => Ok(()),
                Some(f) => Err((f.witness, Some(format!("axiom fails: {}", f.axiom)))),
            },
        );
        push(
            AssumptionFlag::F2,
            if profile.n == n {
                Ok(())
            } else {
                Err((None, Some(format!("space has {n} elements, profile asserts {}", profile.n))))
            },
        );
        push(
            AssumptionFlag::C1,
            match c.iter().find(|x| !in_range(x)) {
                None => Ok(()),
                Some(&x) => Err((None, Some(format!("crisp index {x} is outside the space")))),
            },
        );
        push(
            AssumptionFlag::C2,
            if c.len() == profile.k {
                Ok(())
            } else {
                Err((None, Some(format!("#C = {}, profile asserts k = {}", c.len(), profile.k))))
            },
        );
        push(
            AssumptionFlag::R1,
            if let Some(&x) = r.iter().find(|x| !in_range(x)) {
                Err((None, Some(format!("rough index {x} is outside the space"))))
            } else if r.len() == n && n > 0 {
                Err((None, Some("R is the whole space".into())))
            } else {
                Ok(())
            },
        );
        push(
            AssumptionFlag::R2,
            match (0..n).find(|x| !c.contains(x) && !r.contains(x)) {
                None => Ok(()),
                Some(x) => Err((elem(Some(x)), Some("neither crisp nor rough".into()))),
            },
        );
        push(
            AssumptionFlag::R3,
            match r.iter().find(|x| match profile.phi.get(x) {
                None => true,
                Some((a, b)) => !c.contains(a) || !c.contains(b),
            }) {
                None => Ok(()),
                Some(&x) => Err((elem(Some(x)), Some("φ undefined or not into C × C".into()))),
            },
        );
        push(
            AssumptionFlag::RC1,
            match r.intersection(c).next() {
                None => Ok(()),
                Some(&x) => Err((elem(Some(x)), Some("both crisp and rough".into()))),
            },
        );
        push(
            AssumptionFlag::RC2,
            match r.iter().find(|x| match profile.phi.get(x) {
                Some(&(a, b)) => !(c.contains(&a) && c.contains(&b) && a < n && b < n && self.lt(a, b)),
                None => true,
            }) {
                None => Ok(()),
                Some(&x) => Err((elem(Some(x)), Some("φ(x) is not a pair a < b of crisp elements".into()))),
            },
        );

        let bad_image = profile
            .phi
            .iter()
            .find(|(_, (a, b))| a == b || !c.contains(a) || !c.contains(b));
        checks.push(AssumptionCheck {
            item: AssumptionItem::Proposition,
            outcome: if bad_image.is_none() {
                CheckOutcome::Pass
            } else {
                CheckOutcome::Fail
            },
            witness: bad_image.map(|(&x, _)| Witness::Element(x)),
            detail: bad_image.map(|_| "φ(x) lies on the diagonal or outside C × C".to_string()),
        });

        AssumptionReport { checks }
    }

    /// `φ(x) = (x^l, x^u)` when both are crisp and `x^l < x^u`; otherwise the
    /// first pair `a < b` from the scopes `SL(x) × SU(x)`; otherwise the first
    /// crisp pair `a <= x <= b` with `a < b`. Ties follow element order.
    pub fn canonical_representation(
        &self,
        crisp: &BTreeSet<usize>,
        rough: &BTreeSet<usize>,
    ) -> Result<RepresentationMap, SpaceError> {
        let n = self.len();
        if let Some(&x) = crisp.iter().chain(rough).find(|&&x| x >= n) {
            return Err(SpaceError::ElementOutOfRange(x));
        }
        let mut map = RepresentationMap::default();
        for &x in rough {
            let (l, u) = (self.lower(x), self.upper(x));
            let pair = if crisp.contains(&l) && crisp.contains(&u) && self.lt(l, u) {
                Some((l, u))
            } else {
                let scopes = scope_pair(self.poset(), crisp, x);
                scopes
                    .lower
                    .iter()
                    .flat_map(|&a| scopes.upper.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| self.lt(a, b))
                    .or_else(|| {
                        crisp
                            .iter()
                            .filter(|&&a| self.leq(a, x))
                            .flat_map(|&a| crisp.iter().map(move |&b| (a, b)))
                            .find(|&(a, b)| self.leq(x, b) && self.lt(a, b))
                    })
            };
            let pair = pair.ok_or_else(|| SpaceError::Unrepresentable(self.label(x).to_string()))?;
            map.assignments.insert(x, pair);
            map.image.insert(pair);
        }
        Ok(map)
    }
}
