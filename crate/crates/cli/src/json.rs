//! JSON documents emitted by `--json` and accepted by `verify`.
//!
//! Vertex sets are arrays of names in declaration order and words are
//! whitespace-separated token strings, so documents stay readable and do
//! not depend on internal indices. The layout is described in
//! `docs/json-schema.md`.

use artin_core::amalgam::{Factor, ReducedForm, ReductionStep};
use artin_core::known_results::GraphClass;
use artin_core::structure::{
    CenterDerivation, CenterDescription, ComponentCenter, ComponentDescription, LeafStatus,
    SubCase, SubCaseBasis, TorsionCertificate, TorsionNode, TrivialBasis,
};
use artin_core::{
    ClassificationReport, CoxeterGraph, DecompositionTree, GroupWord, PositiveWord, Vertex,
    VertexSet,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Graph {
        path: String,
        source: artin_core::Error,
    },
    #[error("{path}: unknown graph class `{key}`")]
    UnknownClass { path: String, key: String },
    #[error("{path}: edge must name two vertices")]
    BadEdge { path: String },
    #[error("{path}: generator must be a positive word")]
    NotPositive { path: String },
}

type DocResult<T> = Result<T, DocumentError>;

fn names(g: &CoxeterGraph, set: VertexSet) -> Vec<String> {
    g.set_names(set).into_iter().map(String::from).collect()
}

fn set(g: &CoxeterGraph, names: &[String], path: &str) -> DocResult<VertexSet> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    g.vertex_set(&refs).map_err(|source| DocumentError::Graph {
        path: path.to_string(),
        source,
    })
}

fn edge_names(g: &CoxeterGraph, (s, t): (Vertex, Vertex)) -> [String; 2] {
    [g.name(s).to_string(), g.name(t).to_string()]
}

fn edge(g: &CoxeterGraph, e: &[String; 2], path: &str) -> DocResult<(Vertex, Vertex)> {
    let vertex = |n: &str| {
        g.vertex(n).map_err(|source| DocumentError::Graph {
            path: format!("{path}.edge"),
            source,
        })
    };
    let (s, t) = (vertex(&e[0])?, vertex(&e[1])?);
    if s == t {
        return Err(DocumentError::BadEdge {
            path: format!("{path}.edge"),
        });
    }
    Ok((s, t))
}

fn class(key: &str, path: &str) -> DocResult<GraphClass> {
    GraphClass::from_key(key).ok_or_else(|| DocumentError::UnknownClass {
        path: path.to_string(),
        key: key.to_string(),
    })
}

// ---------------------------------------------------------------- classify

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTypeDoc {
    pub vertices: Vec<String>,
    /// Catalog type such as `A2`, `null` when not spherical.
    #[serde(rename = "type")]
    pub finite_type: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub spherical: bool,
    pub free_of_infinity: bool,
    pub fc_type: bool,
    pub large: bool,
    pub extra_large: bool,
    pub two_dimensional: bool,
    pub connected: bool,
    pub components: Vec<ComponentTypeDoc>,
}

impl ClassificationDoc {
    pub fn new(g: &CoxeterGraph, r: &ClassificationReport) -> Self {
        ClassificationDoc {
            spherical: r.spherical,
            free_of_infinity: r.free_of_infinity,
            fc_type: r.fc_type,
            large: r.large,
            extra_large: r.extra_large,
            two_dimensional: r.two_dimensional,
            connected: r.connected,
            components: r
                .components
                .iter()
                .zip(&r.component_types)
                .map(|(&c, t)| ComponentTypeDoc {
                    vertices: names(g, c),
                    finite_type: t.map(|t| t.to_string()),
                })
                .collect(),
        }
    }
}

// -------------------------------------------------------------- decompose

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeDoc {
    Leaf {
        vertices: Vec<String>,
        spherical: bool,
    },
    Node {
        vertices: Vec<String>,
        edge: [String; 2],
        #[serde(rename = "X")]
        x: Vec<String>,
        #[serde(rename = "Y")]
        y: Vec<String>,
        #[serde(rename = "Z")]
        z: Vec<String>,
        left: Box<TreeDoc>,
        right: Box<TreeDoc>,
    },
}

impl TreeDoc {
    pub fn new(g: &CoxeterGraph, t: &DecompositionTree) -> Self {
        match t {
            DecompositionTree::Leaf { vertices } => TreeDoc::Leaf {
                vertices: names(g, *vertices),
                spherical: artin_core::classify::is_spherical_set(g, *vertices),
            },
            DecompositionTree::Node {
                vertices,
                edge,
                x,
                y,
                z,
                left,
                right,
            } => TreeDoc::Node {
                vertices: names(g, *vertices),
                edge: edge_names(g, *edge),
                x: names(g, *x),
                y: names(g, *y),
                z: names(g, *z),
                left: Box::new(TreeDoc::new(g, left)),
                right: Box::new(TreeDoc::new(g, right)),
            },
        }
    }

    pub fn to_core(&self, g: &CoxeterGraph) -> DocResult<DecompositionTree> {
        self.to_core_at(g, "$")
    }

    fn to_core_at(&self, g: &CoxeterGraph, path: &str) -> DocResult<DecompositionTree> {
        Ok(match self {
            TreeDoc::Leaf { vertices, .. } => DecompositionTree::Leaf {
                vertices: set(g, vertices, path)?,
            },
            TreeDoc::Node {
                vertices,
                edge: e,
                x,
                y,
                z,
                left,
                right,
            } => DecompositionTree::Node {
                vertices: set(g, vertices, path)?,
                edge: edge(g, e, path)?,
                x: set(g, x, path)?,
                y: set(g, y, path)?,
                z: set(g, z, path)?,
                left: Box::new(left.to_core_at(g, &format!("{path}.left"))?),
                right: Box::new(right.to_core_at(g, &format!("{path}.right"))?),
            },
        })
    }
}

// --------------------------------------------------------------------- wp

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyllableDoc {
    /// `1` for the factor on `X = V∖{s}`, `2` for `Y = V∖{t}`.
    pub factor: u8,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum StepDoc {
    DeleteTrivial {
        index: usize,
    },
    Merge {
        index: usize,
    },
    Crossing {
        index: usize,
        into: usize,
        rewritten: String,
    },
}

impl StepDoc {
    pub fn new(g: &CoxeterGraph, s: &ReductionStep) -> Self {
        match s {
            ReductionStep::DeleteTrivial { index } => StepDoc::DeleteTrivial { index: *index },
            ReductionStep::Merge { index } => StepDoc::Merge { index: *index },
            ReductionStep::Crossing {
                index,
                into,
                rewritten,
            } => StepDoc::Crossing {
                index: *index,
                into: *into,
                rewritten: rewritten.display(g),
            },
        }
    }

    /// One line for `--trace`.
    pub fn describe(&self) -> String {
        match self {
            StepDoc::DeleteTrivial { index } => format!("delete trivial syllable {index}"),
            StepDoc::Merge { index } => format!("merge syllables {index} and {}", index + 1),
            StepDoc::Crossing {
                index,
                into,
                rewritten,
            } => format!(
                "syllable {index} lies in the amalgamated subgroup as [{rewritten}], merge into {into}"
            ),
        }
    }
}

/// Checks re-run on the reduced form, independent of the engine's own flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationDoc {
    /// The engine found no applicable elementary reduction.
    pub reduced: bool,
    /// Neighbouring syllables lie in different factors.
    pub alternating: bool,
    /// The answer agrees with the reduced length (trivial iff length 0).
    pub answer_matches_length: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionDoc {
    pub edge: [String; 2],
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    #[serde(rename = "Z")]
    pub z: Vec<String>,
    pub syllables: Vec<SyllableDoc>,
    pub trace: Vec<StepDoc>,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordProblemDoc {
    pub word: String,
    pub trivial: bool,
    pub tree: TreeDoc,
    /// Reduction at the root amalgam; `null` when the root is a leaf and
    /// the Garside normal form decides directly.
    pub reduction: Option<ReductionDoc>,
    pub verification: VerificationDoc,
}

impl WordProblemDoc {
    pub fn new(
        g: &CoxeterGraph,
        tree: &DecompositionTree,
        word: &GroupWord,
        trivial: bool,
        reduced: Option<&ReducedForm>,
    ) -> Self {
        let reduction = match (tree, reduced) {
            (DecompositionTree::Node { edge, x, y, z, .. }, Some(r)) => Some(ReductionDoc {
                edge: edge_names(g, *edge),
                x: names(g, *x),
                y: names(g, *y),
                z: names(g, *z),
                syllables: r
                    .syllables
                    .iter()
                    .map(|s| SyllableDoc {
                        factor: s.factor.tag(),
                        word: s.word.display(g),
                    })
                    .collect(),
                trace: r.trace.iter().map(|s| StepDoc::new(g, s)).collect(),
                length: r.len(),
            }),
            _ => None,
        };
        let verification = match reduced {
            Some(r) => VerificationDoc {
                reduced: r.reduced,
                alternating: r.syllables.windows(2).all(|p| p[0].factor != p[1].factor),
                answer_matches_length: trivial == r.is_empty(),
            },
            None => VerificationDoc {
                reduced: true,
                alternating: true,
                answer_matches_length: true,
            },
        };
        WordProblemDoc {
            word: word.display(g),
            trivial,
            tree: TreeDoc::new(g, tree),
            reduction,
            verification,
        }
    }
}

/// Factor tag back to the core enum.
pub fn factor_from_tag(tag: u8) -> Option<Factor> {
    match tag {
        1 => Some(Factor::Left),
        2 => Some(Factor::Right),
        _ => None,
    }
}

// ----------------------------------------------------------------- member

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipDoc {
    pub word: String,
    pub subset: Vec<String>,
    pub member: bool,
    /// Word over the subset equal to the input; `null` when not a member.
    pub rewritten: Option<String>,
    /// `word · rewritten⁻¹` was checked trivial.
    pub verified: bool,
}

// ----------------------------------------------------------------- center

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "basis", rename_all = "snake_case")]
pub enum SubCaseBasisDoc {
    SphericalProperParabolic,
    Derived { derivation: Box<DerivationDoc> },
    Known { class: String, source: String },
    Assumed { assumption: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubCaseDoc {
    pub component: Vec<String>,
    pub inside: Vec<String>,
    #[serde(flatten)]
    pub basis: SubCaseBasisDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationDoc {
    pub vertices: Vec<String>,
    pub edge: [String; 2],
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    #[serde(rename = "Z")]
    pub z: Vec<String>,
    #[serde(rename = "X1")]
    pub x1: Vec<String>,
    #[serde(rename = "X2")]
    pub x2: Vec<String>,
    #[serde(rename = "Y1")]
    pub y1: Vec<String>,
    #[serde(rename = "Y2")]
    pub y2: Vec<String>,
    #[serde(rename = "Z1")]
    pub z1: Vec<String>,
    pub x2_in_y1: bool,
    pub y2_in_x1: bool,
    pub x1_case: SubCaseDoc,
    pub y1_case: SubCaseDoc,
}

impl DerivationDoc {
    pub fn new(g: &CoxeterGraph, d: &CenterDerivation) -> Self {
        DerivationDoc {
            vertices: names(g, d.vertices),
            edge: edge_names(g, d.edge),
            x: names(g, d.x),
            y: names(g, d.y),
            z: names(g, d.z),
            x1: names(g, d.x1),
            x2: names(g, d.x2),
            y1: names(g, d.y1),
            y2: names(g, d.y2),
            z1: names(g, d.z1),
            x2_in_y1: d.x2_in_y1,
            y2_in_x1: d.y2_in_x1,
            x1_case: SubCaseDoc::new(g, &d.x1_case),
            y1_case: SubCaseDoc::new(g, &d.y1_case),
        }
    }

    pub fn to_core(&self, g: &CoxeterGraph, path: &str) -> DocResult<CenterDerivation> {
        Ok(CenterDerivation {
            vertices: set(g, &self.vertices, &format!("{path}.vertices"))?,
            edge: edge(g, &self.edge, path)?,
            x: set(g, &self.x, &format!("{path}.X"))?,
            y: set(g, &self.y, &format!("{path}.Y"))?,
            z: set(g, &self.z, &format!("{path}.Z"))?,
            x1: set(g, &self.x1, &format!("{path}.X1"))?,
            x2: set(g, &self.x2, &format!("{path}.X2"))?,
            y1: set(g, &self.y1, &format!("{path}.Y1"))?,
            y2: set(g, &self.y2, &format!("{path}.Y2"))?,
            z1: set(g, &self.z1, &format!("{path}.Z1"))?,
            x2_in_y1: self.x2_in_y1,
            y2_in_x1: self.y2_in_x1,
            x1_case: self.x1_case.to_core(g, &format!("{path}.x1_case"))?,
            y1_case: self.y1_case.to_core(g, &format!("{path}.y1_case"))?,
        })
    }
}

impl SubCaseDoc {
    fn new(g: &CoxeterGraph, c: &SubCase) -> Self {
        SubCaseDoc {
            component: names(g, c.component),
            inside: names(g, c.inside),
            basis: match &c.basis {
                SubCaseBasis::SphericalProperParabolic => SubCaseBasisDoc::SphericalProperParabolic,
                SubCaseBasis::Derived(d) => SubCaseBasisDoc::Derived {
                    derivation: Box::new(DerivationDoc::new(g, d)),
                },
                SubCaseBasis::Known { class, source } => SubCaseBasisDoc::Known {
                    class: class.key().to_string(),
                    source: source.clone(),
                },
                SubCaseBasis::Assumed { assumption } => SubCaseBasisDoc::Assumed {
                    assumption: assumption.clone(),
                },
            },
        }
    }

    fn to_core(&self, g: &CoxeterGraph, path: &str) -> DocResult<SubCase> {
        Ok(SubCase {
            component: set(g, &self.component, &format!("{path}.component"))?,
            inside: set(g, &self.inside, &format!("{path}.inside"))?,
            basis: match &self.basis {
                SubCaseBasisDoc::SphericalProperParabolic => SubCaseBasis::SphericalProperParabolic,
                SubCaseBasisDoc::Derived { derivation } => SubCaseBasis::Derived(Box::new(
                    derivation.to_core(g, &format!("{path}.derivation"))?,
                )),
                SubCaseBasisDoc::Known { class: key, source } => SubCaseBasis::Known {
                    class: class(key, &format!("{path}.class"))?,
                    source: source.clone(),
                },
                SubCaseBasisDoc::Assumed { assumption } => SubCaseBasis::Assumed {
                    assumption: assumption.clone(),
                },
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "center", rename_all = "snake_case")]
pub enum ComponentCenterDoc {
    InfiniteCyclic {
        generator: String,
    },
    Trivial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        derivation: Option<DerivationDoc>,
        /// Set instead of `derivation` for free-of-infinity components
        /// covered by the known-results table.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        known: Option<KnownDoc>,
    },
    Conditional {
        assumption: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        derivation: Option<DerivationDoc>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownDoc {
    pub class: String,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub vertices: Vec<String>,
    #[serde(flatten)]
    pub center: ComponentCenterDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterDoc {
    pub components: Vec<ComponentDoc>,
    pub product: String,
    pub unconditional: bool,
}

impl CenterDoc {
    pub fn new(g: &CoxeterGraph, desc: &CenterDescription) -> Self {
        let components = desc
            .components
            .iter()
            .map(|c| ComponentDoc {
                vertices: names(g, c.vertices),
                center: match &c.center {
                    ComponentCenter::InfiniteCyclic { generator } => {
                        ComponentCenterDoc::InfiniteCyclic {
                            generator: generator.display(g),
                        }
                    }
                    ComponentCenter::Trivial(TrivialBasis::Derived(d)) => {
                        ComponentCenterDoc::Trivial {
                            derivation: Some(DerivationDoc::new(g, d)),
                            known: None,
                        }
                    }
                    ComponentCenter::Trivial(TrivialBasis::Known { class, source }) => {
                        ComponentCenterDoc::Trivial {
                            derivation: None,
                            known: Some(KnownDoc {
                                class: class.key().to_string(),
                                source: source.clone(),
                            }),
                        }
                    }
                    ComponentCenter::Conditional {
                        assumption,
                        derivation,
                    } => ComponentCenterDoc::Conditional {
                        assumption: assumption.clone(),
                        derivation: derivation.as_ref().map(|d| DerivationDoc::new(g, d)),
                    },
                },
            })
            .collect();
        CenterDoc {
            components,
            product: desc.product_statement(),
            unconditional: desc.is_unconditional(),
        }
    }

    pub fn to_core(&self, g: &CoxeterGraph) -> DocResult<CenterDescription> {
        let mut components = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let path = format!("$.components[{i}]");
            let center = match &c.center {
                ComponentCenterDoc::InfiniteCyclic { generator } => {
                    let w =
                        GroupWord::parse(g, generator).map_err(|source| DocumentError::Graph {
                            path: format!("{path}.generator"),
                            source,
                        })?;
                    if w.0.iter().any(|l| l.sign != artin_core::Sign::Pos) {
                        return Err(DocumentError::NotPositive { path });
                    }
                    ComponentCenter::InfiniteCyclic {
                        generator: PositiveWord(w.0.iter().map(|l| l.vertex).collect()),
                    }
                }
                ComponentCenterDoc::Trivial { derivation, known } => match (derivation, known) {
                    (Some(d), None) => ComponentCenter::Trivial(TrivialBasis::Derived(
                        d.to_core(g, &format!("{path}.derivation"))?,
                    )),
                    (None, Some(k)) => ComponentCenter::Trivial(TrivialBasis::Known {
                        class: class(&k.class, &format!("{path}.known.class"))?,
                        source: k.source.clone(),
                    }),
                    _ => {
                        return Err(DocumentError::Graph {
                            path,
                            source: artin_core::Error::MalformedDerivation {
                                path: "trivial".into(),
                                reason: "exactly one of `derivation` and `known` must be set"
                                    .into(),
                            },
                        })
                    }
                },
                ComponentCenterDoc::Conditional {
                    assumption,
                    derivation,
                } => ComponentCenter::Conditional {
                    assumption: assumption.clone(),
                    derivation: derivation
                        .as_ref()
                        .map(|d| d.to_core(g, &format!("{path}.derivation")))
                        .transpose()?,
                },
            };
            components.push(ComponentDescription {
                vertices: set(g, &c.vertices, &format!("{path}.vertices"))?,
                center,
            });
        }
        Ok(CenterDescription { components })
    }
}

// ---------------------------------------------------------------- torsion

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LeafStatusDoc {
    SphericalTorsionFree { source: String },
    KnownTorsionFree { class: String, source: String },
    AssumedTorsionFree { assumption: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TorsionNodeDoc {
    Leaf {
        vertices: Vec<String>,
        #[serde(flatten)]
        status: LeafStatusDoc,
    },
    Node {
        vertices: Vec<String>,
        edge: [String; 2],
        #[serde(rename = "X")]
        x: Vec<String>,
        #[serde(rename = "Y")]
        y: Vec<String>,
        #[serde(rename = "Z")]
        z: Vec<String>,
        left: Box<TorsionNodeDoc>,
        right: Box<TorsionNodeDoc>,
    },
}

impl TorsionNodeDoc {
    fn new(g: &CoxeterGraph, n: &TorsionNode) -> Self {
        match n {
            TorsionNode::Leaf { vertices, status } => TorsionNodeDoc::Leaf {
                vertices: names(g, *vertices),
                status: match status {
                    LeafStatus::SphericalTorsionFree { source } => {
                        LeafStatusDoc::SphericalTorsionFree {
                            source: source.clone(),
                        }
                    }
                    LeafStatus::KnownTorsionFree { class, source } => {
                        LeafStatusDoc::KnownTorsionFree {
                            class: class.key().to_string(),
                            source: source.clone(),
                        }
                    }
                    LeafStatus::AssumedTorsionFree { assumption } => {
                        LeafStatusDoc::AssumedTorsionFree {
                            assumption: assumption.clone(),
                        }
                    }
                },
            },
            TorsionNode::Node {
                vertices,
                edge,
                x,
                y,
                z,
                left,
                right,
            } => TorsionNodeDoc::Node {
                vertices: names(g, *vertices),
                edge: edge_names(g, *edge),
                x: names(g, *x),
                y: names(g, *y),
                z: names(g, *z),
                left: Box::new(TorsionNodeDoc::new(g, left)),
                right: Box::new(TorsionNodeDoc::new(g, right)),
            },
        }
    }

    fn to_core(&self, g: &CoxeterGraph, path: &str) -> DocResult<TorsionNode> {
        Ok(match self {
            TorsionNodeDoc::Leaf { vertices, status } => TorsionNode::Leaf {
                vertices: set(g, vertices, &format!("{path}.vertices"))?,
                status: match status {
                    LeafStatusDoc::SphericalTorsionFree { source } => {
                        LeafStatus::SphericalTorsionFree {
                            source: source.clone(),
                        }
                    }
                    LeafStatusDoc::KnownTorsionFree { class: key, source } => {
                        LeafStatus::KnownTorsionFree {
                            class: class(key, &format!("{path}.class"))?,
                            source: source.clone(),
                        }
                    }
                    LeafStatusDoc::AssumedTorsionFree { assumption } => {
                        LeafStatus::AssumedTorsionFree {
                            assumption: assumption.clone(),
                        }
                    }
                },
            },
            TorsionNodeDoc::Node {
                vertices,
                edge: e,
                x,
                y,
                z,
                left,
                right,
            } => TorsionNode::Node {
                vertices: set(g, vertices, &format!("{path}.vertices"))?,
                edge: edge(g, e, path)?,
                x: set(g, x, &format!("{path}.X"))?,
                y: set(g, y, &format!("{path}.Y"))?,
                z: set(g, z, &format!("{path}.Z"))?,
                left: Box::new(left.to_core(g, &format!("{path}.left"))?),
                right: Box::new(right.to_core(g, &format!("{path}.right"))?),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionDoc {
    pub root: TorsionNodeDoc,
    pub unconditional: bool,
    /// Leaves whose status rests on an assumption.
    pub assumed_leaves: Vec<Vec<String>>,
}

impl TorsionDoc {
    pub fn new(g: &CoxeterGraph, cert: &TorsionCertificate) -> Self {
        TorsionDoc {
            root: TorsionNodeDoc::new(g, &cert.root),
            unconditional: cert.unconditional,
            assumed_leaves: cert
                .assumptions()
                .into_iter()
                .map(|v| names(g, v))
                .collect(),
        }
    }

    pub fn to_core(&self, g: &CoxeterGraph) -> DocResult<TorsionCertificate> {
        Ok(TorsionCertificate {
            root: self.root.to_core(g, "$.root")?,
            unconditional: self.unconditional,
        })
    }
}

/// Any document `verify` accepts, distinguished by `document`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "document", rename_all = "snake_case")]
pub enum Document {
    Classification(ClassificationDoc),
    Decomposition { tree: TreeDoc },
    WordProblem(WordProblemDoc),
    Membership(MembershipDoc),
    Center(CenterDoc),
    Torsion(TorsionDoc),
}
