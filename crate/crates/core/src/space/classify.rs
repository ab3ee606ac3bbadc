use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::HigherGranularSpace;

/// The five notions of a crisp element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrispnessConcept {
    /// `x^l = x`
    LowerDefinite,
    /// `x^u = x`
    UpperDefinite,
    /// `x^l = x = x^u`
    Definite,
    /// `x^u = x^uu`
    WeaklyUpperDefinite,
    /// `x^u = x^uu` and `x^l = x`
    WeaklyDefinite,
}

impl CrispnessConcept {
    pub const ALL: [CrispnessConcept; 5] = [
        CrispnessConcept::LowerDefinite,
        CrispnessConcept::UpperDefinite,
        CrispnessConcept::Definite,
        CrispnessConcept::WeaklyUpperDefinite,
        CrispnessConcept::WeaklyDefinite,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CrispnessConcept::LowerDefinite => "lower-definite",
            CrispnessConcept::UpperDefinite => "upper-definite",
            CrispnessConcept::Definite => "definite",
            CrispnessConcept::WeaklyUpperDefinite => "weakly-upper-definite",
            CrispnessConcept::WeaklyDefinite => "weakly-definite",
        }
    }
}

/// Whether a roughness concept classifies elements, pairs of elements, or
/// members of open intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogShape {
    Element,
    Pair,
    Interval,
}

/// The eight notions of a rough object usable in a granular space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RoughnessConcept {
    /// `x^l ≠ x`
    LowerRough,
    /// `x^u ≠ x`
    UpperRough,
    /// `x^u ≠ x^uu`
    WeaklyUpperRough,
    /// `x^l ≠ x^u`
    Rough,
    /// definite `a < b`
    DefinitePair,
    /// distinct `(x^l, x^u)`
    LuPair,
    /// elements strictly between some `x^l` and `x^u`
    LuInterval,
    /// elements strictly between definite `a < b`
    DefiniteInterval,
}

impl RoughnessConcept {
    pub const ALL: [RoughnessConcept; 8] = [
        RoughnessConcept::LowerRough,
        RoughnessConcept::UpperRough,
        RoughnessConcept::WeaklyUpperRough,
        RoughnessConcept::Rough,
        RoughnessConcept::DefinitePair,
        RoughnessConcept::LuPair,
        RoughnessConcept::LuInterval,
        RoughnessConcept::DefiniteInterval,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RoughnessConcept::LowerRough => "lower-rough",
            RoughnessConcept::UpperRough => "upper-rough",
            RoughnessConcept::WeaklyUpperRough => "weakly-upper-rough",
            RoughnessConcept::Rough => "rough",
            RoughnessConcept::DefinitePair => "definite-pair",
            RoughnessConcept::LuPair => "lu-pair",
            RoughnessConcept::LuInterval => "lu-interval",
            RoughnessConcept::DefiniteInterval => "definite-interval",
        }
    }

    pub fn shape(self) -> CatalogShape {
        match self {
            RoughnessConcept::LowerRough
            | RoughnessConcept::UpperRough
            | RoughnessConcept::WeaklyUpperRough
            | RoughnessConcept::Rough => CatalogShape::Element,
            RoughnessConcept::DefinitePair | RoughnessConcept::LuPair => CatalogShape::Pair,
            RoughnessConcept::LuInterval | RoughnessConcept::DefiniteInterval => CatalogShape::Interval,
        }
    }
}

macro_rules! tag_conversions {
    ($ty:ty, $what:literal) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.tag())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                <$ty>::ALL
                    .into_iter()
                    .find(|c| c.tag() == s)
                    .ok_or_else(|| {
                        let tags: Vec<&str> = <$ty>::ALL.iter().map(|c| c.tag()).collect();
                        format!("unknown {} `{}` (expected one of {})", $what, s, tags.join(", "))
                    })
            }
        }
    };
}

tag_conversions!(CrispnessConcept, "crispness concept");
tag_conversions!(RoughnessConcept, "roughness concept");

/// An open interval `(lower, upper)` and the elements strictly inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalEntry {
    pub lower: usize,
    pub upper: usize,
    pub members: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoughCatalog {
    Elements(BTreeSet<usize>),
    Pairs(Vec<(usize, usize)>),
    Intervals(Vec<IntervalEntry>),
}

impl RoughCatalog {
    /// Number of rough objects: elements, pairs, or distinct interval
    /// members.
    pub fn count(&self) -> usize {
        match self {
            RoughCatalog::Elements(e) => e.len(),
            RoughCatalog::Pairs(p) => p.len(),
            RoughCatalog::Intervals(iv) => iv
                .iter()
                .flat_map(|e| e.members.iter())
                .collect::<BTreeSet<_>>()
                .len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixCell {
    pub crisp: CrispnessConcept,
    pub rough: RoughnessConcept,
    pub crisp_count: usize,
    pub rough_count: usize,
}

/// Sizes under every crispness × roughness combination, row-major by
/// crispness concept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationMatrix {
    pub cells: Vec<MatrixCell>,
}

impl ClassificationMatrix {
    pub fn cell(&self, crisp: CrispnessConcept, rough: RoughnessConcept) -> &MatrixCell {
        self.cells
            .iter()
            .find(|c| c.crisp == crisp && c.rough == rough)
            .expect("matrix holds every combination")
    }
}

impl HigherGranularSpace {
    pub fn is_crisp(&self, x: usize, concept: CrispnessConcept) -> bool {
        let (l, u) = (self.lower(x), self.upper(x));
        let uu = self.upper(u);
        match concept {
            CrispnessConcept::LowerDefinite => l == x,
            CrispnessConcept::UpperDefinite => u == x,
            CrispnessConcept::Definite => l == x && u == x,
            CrispnessConcept::WeaklyUpperDefinite => u == uu,
            CrispnessConcept::WeaklyDefinite => u == uu && l == x,
        }
    }

    pub fn crisp_set(&self, concept: CrispnessConcept) -> BTreeSet<usize> {
        (0..self.len()).filter(|&x| self.is_crisp(x, concept)).collect()
    }

    fn open_interval(&self, a: usize, b: usize) -> BTreeSet<usize> {
        self.poset()
            .up_set(a)
            .filter(|&y| y != a && y != b && self.leq(y, b))
            .collect()
    }

    pub fn rough_catalog(&self, concept: RoughnessConcept) -> RoughCatalog {
        let n = self.len();
        let elements = |bad: &dyn Fn(usize) -> bool| RoughCatalog::Elements((0..n).filter(|&x| bad(x)).collect());
        let definite_pairs = || -> Vec<(usize, usize)> {
            let definite = self.crisp_set(CrispnessConcept::Definite);
            definite
                .iter()
                .flat_map(|&a| definite.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| self.lt(a, b))
                .collect()
        };
        let lu_pairs = || -> Vec<(usize, usize)> {
            (0..n)
                .map(|x| (self.lower(x), self.upper(x)))
                .filter(|(l, u)| l != u)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        };
        match concept {
            RoughnessConcept::LowerRough => elements(&|x| self.lower(x) != x),
            RoughnessConcept::UpperRough => elements(&|x| self.upper(x) != x),
            RoughnessConcept::WeaklyUpperRough => elements(&|x| self.upper(x) != self.upper(self.upper(x))),
            RoughnessConcept::Rough => elements(&|x| self.lower(x) != self.upper(x)),
            RoughnessConcept::DefinitePair => RoughCatalog::Pairs(definite_pairs()),
            RoughnessConcept::LuPair => RoughCatalog::Pairs(lu_pairs()),
            RoughnessConcept::LuInterval => RoughCatalog::Intervals(
                lu_pairs()
                    .into_iter()
                    .filter(|&(l, u)| self.lt(l, u))
                    .map(|(l, u)| IntervalEntry {
                        lower: l,
                        upper: u,
                        members: self.open_interval(l, u),
                    })
                    .collect(),
            ),
            RoughnessConcept::DefiniteInterval => RoughCatalog::Intervals(
                definite_pairs()
                    .into_iter()
                    .map(|(a, b)| IntervalEntry {
                        lower: a,
                        upper: b,
                        members: self.open_interval(a, b),
                    })
                    .collect(),
            ),
        }
    }

    pub fn classification_matrix(&self) -> ClassificationMatrix {
        let crisp_counts: Vec<usize> = CrispnessConcept::ALL
            .iter()
            .map(|&c| self.crisp_set(c).len())
            .collect();
        let rough_counts: Vec<usize> = RoughnessConcept::ALL
            .iter()
            .map(|&r| self.rough_catalog(r).count())
            .collect();
        let cells = CrispnessConcept::ALL
            .iter()
            .zip(&crisp_counts)
            .flat_map(|(&crisp, &crisp_count)| {
                RoughnessConcept::ALL
                    .iter()
                    .zip(&rough_counts)
                    .map(move |(&rough, &rough_count)| MatrixCell {
                        crisp,
                        rough,
                        crisp_count,
                        rough_count,
                    })
            })
            .collect();
        ClassificationMatrix { cells }
    }
}
