//! The JSON document model: a poset together with optional named subsets,
//! filtrations, matchings and group colorings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use finspace_core::cover::{validate_coloring, Coloring, FiniteGroup};
use finspace_core::Poset;
use serde::{Deserialize, Serialize};

/// Malformed input: unparsable JSON or a reference to an undeclared name.
/// Reported with exit code 2, unlike domain errors (exit code 1).
#[derive(Debug)]
pub struct SchemaError(pub String);

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "schema error: {}", self.0)
    }
}

impl std::error::Error for SchemaError {}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    /// Order relations a < b; they need not be cover relations, the
    /// transitive closure is taken internally.
    #[serde(default)]
    pub relations: Vec<(String, String)>,
    /// Named subsets, used for relative parts (A), open sets (V) and
    /// convex sets (C).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subsets: BTreeMap<String, Vec<String>>,
    /// Named filtrations as cumulative level lists X_0, X_1, ..., X.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub filtrations: BTreeMap<String, Vec<Vec<String>>>,
    /// Named Morse matchings as lists of cover edges (a, b) with a < b.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matchings: BTreeMap<String, Vec<(String, String)>>,
    /// Named group colorings of the order relations.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub colorings: BTreeMap<String, ColoringSpec>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ColoringSpec {
    pub group: GroupSpec,
    /// Labeled relations (((a, b), g)); unlabeled relations carry the
    /// identity.
    #[serde(default)]
    pub edges: Vec<((String, String), String)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    /// Cyclic group of the given order, elements g0, g1, ...
    Cyclic(usize),
    /// Symmetric group on n letters, elements named in one-line notation.
    Symmetric(usize),
    /// Explicit multiplication table: table[i][j] = index of names[i]*names[j].
    Table { names: Vec<String>, table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> anyhow::Result<FiniteGroup> {
        Ok(match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Table { names, table } => {
                FiniteGroup::from_table(names.clone(), table.clone())?
            }
        })
    }
}

impl PosetDocument {
    pub fn from_poset(p: &Poset) -> PosetDocument {
        PosetDocument {
            elements: p.elements().to_vec(),
            relations: p.covers().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            ..PosetDocument::default()
        }
    }

    pub fn from_path(path: &Path) -> Result<PosetDocument, SchemaError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SchemaError(format!("cannot read {}: {e}", path.display())))?;
        let doc: PosetDocument = serde_json::from_str(&text)
            .map_err(|e| SchemaError(format!("{}: {e}", path.display())))?;
        doc.check_references()?;
        Ok(doc)
    }

    /// Every name mentioned anywhere must be a declared element.
    fn check_references(&self) -> Result<(), SchemaError> {
        let declared: BTreeSet<&str> = self.elements.iter().map(String::as_str).collect();
        if declared.len() != self.elements.len() {
            return Err(SchemaError("duplicate element names".into()));
        }
        let check = |name: &str, field: &str| -> Result<(), SchemaError> {
            if declared.contains(name) {
                Ok(())
            } else {
                Err(SchemaError(format!("field `{field}` mentions undeclared element `{name}`")))
            }
        };
        for (a, b) in &self.relations {
            check(a, "relations")?;
            check(b, "relations")?;
        }
        for (key, subset) in &self.subsets {
            for x in subset {
                check(x, &format!("subsets.{key}"))?;
            }
        }
        for (key, levels) in &self.filtrations {
            for level in levels {
                for x in level {
                    check(x, &format!("filtrations.{key}"))?;
                }
            }
        }
        for (key, edges) in &self.matchings {
            for (a, b) in edges {
                check(a, &format!("matchings.{key}"))?;
                check(b, &format!("matchings.{key}"))?;
            }
        }
        for (key, spec) in &self.colorings {
            for ((a, b), _) in &spec.edges {
                check(a, &format!("colorings.{key}"))?;
                check(b, &format!("colorings.{key}"))?;
            }
        }
        Ok(())
    }

    pub fn poset(&self) -> anyhow::Result<Poset> {
        Ok(Poset::build_owned(self.elements.clone(), self.relations.clone())?)
    }

    pub fn subset(&self, name: &str) -> Result<&[String], SchemaError> {
        self.subsets
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| SchemaError(format!("unknown subset `{name}`")))
    }

    pub fn filtration_levels(&self, name: &str) -> Result<&[Vec<String>], SchemaError> {
        self.filtrations
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| SchemaError(format!("unknown filtration `{name}`")))
    }

    pub fn matching(&self, name: &str) -> Result<&[(String, String)], SchemaError> {
        self.matchings
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| SchemaError(format!("unknown matching `{name}`")))
    }

    pub fn coloring(&self, name: &str, p: &Poset) -> anyhow::Result<Coloring> {
        let spec = self
            .colorings
            .get(name)
            .ok_or_else(|| SchemaError(format!("unknown coloring `{name}`")))?;
        let group = spec.group.build()?;
        Ok(validate_coloring(p, group, &spec.edges)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}
