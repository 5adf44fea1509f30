//! Table of graph classes whose Artin-Tits groups are known to have a given
//! property. The table lives in `data/known_results.tsv` and is compiled in.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::classify::{is_fc_set, is_spherical_set, is_two_dimensional_set};
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Label, VertexSet};

const TABLE: &str = include_str!("../data/known_results.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Spherical,
    Fc,
    TwoDimensional,
    ExtraLarge,
}

impl GraphClass {
    pub fn key(self) -> &'static str {
        match self {
            GraphClass::Spherical => "spherical",
            GraphClass::Fc => "fc",
            GraphClass::TwoDimensional => "two_dimensional",
            GraphClass::ExtraLarge => "extra_large",
        }
    }

    pub fn from_key(key: &str) -> Option<GraphClass> {
        [
            GraphClass::Spherical,
            GraphClass::Fc,
            GraphClass::TwoDimensional,
            GraphClass::ExtraLarge,
        ]
        .into_iter()
        .find(|c| c.key() == key)
    }

    /// Does the full subgraph on `set` belong to this class?
    pub fn contains(self, g: &CoxeterGraph, set: VertexSet) -> bool {
        match self {
            GraphClass::Spherical => is_spherical_set(g, set),
            GraphClass::Fc => is_fc_set(g, set),
            GraphClass::TwoDimensional => is_two_dimensional_set(g, set),
            GraphClass::ExtraLarge => set.iter().all(|s| {
                set.iter().all(|t| {
                    s == t
                        || match g.label(s, t) {
                            Label::Infinity => true,
                            Label::Finite(m) => m >= 4,
                        }
                })
            }),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    TorsionFree,
    TrivialCenter,
    WordProblem,
}

impl Property {
    pub fn key(self) -> &'static str {
        match self {
            Property::TorsionFree => "torsion_free",
            Property::TrivialCenter => "trivial_center",
            Property::WordProblem => "word_problem",
        }
    }

    pub fn from_key(key: &str) -> Option<Property> {
        [
            Property::TorsionFree,
            Property::TrivialCenter,
            Property::WordProblem,
        ]
        .into_iter()
        .find(|p| p.key() == key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownResult {
    pub class: GraphClass,
    pub property: Property,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownResults {
    rows: Vec<KnownResult>,
}

impl KnownResults {
    /// The compiled-in table.
    pub fn builtin() -> KnownResults {
        Self::parse(TABLE).expect("bundled known-results table is well formed")
    }

    /// Parses the tab-separated format; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<KnownResults> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end();
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let bad = |reason: &str| Error::InvalidData {
                line: i + 1,
                reason: reason.to_string(),
            };
            let mut cols = line.split('\t');
            let (Some(class), Some(property), Some(source), None) =
                (cols.next(), cols.next(), cols.next(), cols.next())
            else {
                return Err(bad("expected three tab-separated columns"));
            };
            let class = GraphClass::from_key(class.trim()).ok_or_else(|| bad("unknown class"))?;
            let property =
                Property::from_key(property.trim()).ok_or_else(|| bad("unknown property"))?;
            if source.trim().is_empty() {
                return Err(bad("empty source"));
            }
            rows.push(KnownResult {
                class,
                property,
                source: source.trim().to_string(),
            });
        }
        Ok(KnownResults { rows })
    }

    pub fn rows(&self) -> &[KnownResult] {
        &self.rows
    }

    /// First row for `property` whose class contains the full subgraph on
    /// `set`.
    pub fn covering(
        &self,
        g: &CoxeterGraph,
        set: VertexSet,
        property: Property,
    ) -> Option<&KnownResult> {
        self.rows
            .iter()
            .filter(|r| r.property == property)
            .find(|r| r.class.contains(g, set))
    }

    pub fn lookup(&self, class: GraphClass, property: Property) -> Option<&KnownResult> {
        self.rows
            .iter()
            .find(|r| r.class == class && r.property == property)
    }
}
