//! JSON space documents.
//!
//! ```json
//! {
//!   "elements": ["0", "a", "1"],
//!   "order": {"mode": "covers", "pairs": [["0", "a"], ["a", "1"]]},
//!   "lower": {"0": "0", "a": "0", "1": "1"},
//!   "upper": {"0": "0", "a": "1", "1": "1"},
//!   "granulation": ["1"],
//!   "profile": {"C": ["0", "1"], "R": ["a"], "phi": {"a": ["0", "1"]}, "flags": ["RC1", "RC2"]}
//! }
//! ```

use std::collections::{BTreeMap, BTreeSet};

use roughspace_core::order::{BoundedLattice, BuildMode, FinitePoset, OrderError};
use roughspace_core::space::{
    AssumptionFlag, AssumptionProfile, HigherGranularSpace, SpaceError,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("order: {0}")]
    Order(OrderError),
    #[error("lattice: {0}")]
    Lattice(OrderError),
    #[error("\"lattice\" needs either \"derive\": true or both \"join\" and \"meet\" tables")]
    LatticeSpec,
    #[error("\"{map}\" has no entry for element `{element}`")]
    MissingEntry { map: &'static str, element: String },
    #[error("\"{key}\" names unknown element `{label}`")]
    UnknownLabel { key: String, label: String },
    #[error("space: {0}")]
    Space(SpaceError),
    #[error("profile: {0}")]
    Flag(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderMode {
    Covers,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    pub mode: OrderMode,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derive: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(rename = "C")]
    pub crisp: Vec<String>,
    #[serde(rename = "R")]
    pub rough: Vec<String>,
    #[serde(default)]
    pub phi: BTreeMap<String, (String, String)>,
    #[serde(default)]
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub elements: Vec<String>,
    pub order: OrderSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSpec>,
    pub lower: BTreeMap<String, String>,
    pub upper: BTreeMap<String, String>,
    pub granulation: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSpec>,
}

struct Resolver<'a> {
    poset: &'a FinitePoset,
}

impl Resolver<'_> {
    fn get(&self, key: &str, label: &str) -> Result<usize, DocumentError> {
        self.poset.index_of(label).ok_or_else(|| DocumentError::UnknownLabel {
            key: key.to_string(),
            label: label.to_string(),
        })
    }

    fn set(&self, key: &str, labels: &[String]) -> Result<BTreeSet<usize>, DocumentError> {
        labels.iter().map(|l| self.get(key, l)).collect()
    }

    fn table(&self, key: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<usize>>, DocumentError> {
        rows.iter()
            .map(|row| row.iter().map(|l| self.get(key, l)).collect())
            .collect()
    }

    fn operator(&self, map: &'static str, entries: &BTreeMap<String, String>) -> Result<Vec<usize>, DocumentError> {
        for key in entries.keys() {
            self.get(map, key)?;
        }
        self.poset
            .labels()
            .iter()
            .map(|x| {
                let image = entries.get(x).ok_or_else(|| DocumentError::MissingEntry {
                    map,
                    element: x.clone(),
                })?;
                self.get(map, image)
            })
            .collect()
    }
}

impl SpaceDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Validates the document into a space and, when present, a profile.
    pub fn build(&self) -> Result<(HigherGranularSpace, Option<AssumptionProfile>), DocumentError> {
        let mode = match self.order.mode {
            OrderMode::Covers => BuildMode::Covers,
            OrderMode::Full => BuildMode::FullOrder,
        };
        let poset = FinitePoset::build(&self.elements, &self.order.pairs, mode).map_err(DocumentError::Order)?;
        let resolve = Resolver { poset: &poset };
        let lower = resolve.operator("lower", &self.lower)?;
        let upper = resolve.operator("upper", &self.upper)?;
        let granulation = resolve.set("granulation", &self.granulation)?;
        let profile = self.profile.as_ref().map(|p| build_profile(&resolve, p)).transpose()?;
        let tables = match &self.lattice {
            None => None,
            Some(LatticeSpec { derive: Some(true), join: None, meet: None }) => None,
            Some(LatticeSpec { derive: None | Some(false), join: Some(j), meet: Some(m) }) => {
                Some((resolve.table("join", j)?, resolve.table("meet", m)?))
            }
            Some(_) => return Err(DocumentError::LatticeSpec),
        };
        let lattice = match tables {
            None => BoundedLattice::from_poset(poset),
            Some((join, meet)) => BoundedLattice::with_tables(poset, join, meet),
        }
        .map_err(DocumentError::Lattice)?;
        let space = HigherGranularSpace::new(lattice, lower, upper, granulation).map_err(DocumentError::Space)?;
        Ok((space, profile))
    }

    /// The powerset space of a partition with Pawlak approximations and the
    /// blocks as granules.
    pub fn pawlak(universe: &[String], blocks: &[Vec<String>]) -> Result<Self, SpaceError> {
        let space = HigherGranularSpace::from_partition(universe, blocks)?;
        Ok(Self::from_space(&space))
    }

    /// Serializes a space with its cover relation and derived lattice.
    pub fn from_space(space: &HigherGranularSpace) -> Self {
        let poset = space.poset();
        let label = |x: usize| poset.label(x).to_string();
        let map = |f: &[usize]| f.iter().enumerate().map(|(x, &y)| (label(x), label(y))).collect();
        SpaceDocument {
            elements: poset.labels().to_vec(),
            order: OrderSpec {
                mode: OrderMode::Covers,
                pairs: poset.covers().iter().map(|&(a, b)| (label(a), label(b))).collect(),
            },
            lattice: Some(LatticeSpec {
                derive: Some(true),
                ..LatticeSpec::default()
            }),
            lower: map(space.lower_map()),
            upper: map(space.upper_map()),
            granulation: space.granulation().iter().map(|&g| label(g)).collect(),
            profile: None,
        }
    }
}

fn build_profile(resolve: &Resolver<'_>, p: &ProfileSpec) -> Result<AssumptionProfile, DocumentError> {
    let crisp = resolve.set("C", &p.crisp)?;
    let rough = resolve.set("R", &p.rough)?;
    let phi = p
        .phi
        .iter()
        .map(|(x, (a, b))| Ok((resolve.get("phi", x)?, (resolve.get("phi", a)?, resolve.get("phi", b)?))))
        .collect::<Result<_, DocumentError>>()?;
    let flags = if p.flags.is_empty() {
        AssumptionFlag::ALL.into_iter().collect()
    } else {
        p.flags.iter().map(|f| f.parse()).collect::<Result<_, _>>().map_err(DocumentError::Flag)?
    };
    Ok(AssumptionProfile {
        n: p.n.unwrap_or(resolve.poset.len()),
        k: p.k.unwrap_or(crisp.len()),
        crisp,
        rough,
        phi,
        flags,
    })
}

pub fn parse_space_document(text: &str) -> Result<(HigherGranularSpace, Option<AssumptionProfile>), DocumentError> {
    SpaceDocument::from_json(text)?.build()
}

/// Parses `1,2,3,4` and `1,2;3,4`.
pub fn parse_partition(universe: &str, blocks: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let split = |s: &str| -> Vec<String> {
        s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect()
    };
    (split(universe), blocks.split(';').map(split).collect())
}

