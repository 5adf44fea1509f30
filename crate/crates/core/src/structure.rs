//! Centres and torsion, as derivation trees that can be re-checked against
//! the graph.
//!
//! Centre of `A_Γ`: the product of the centres of its connected components.
//! A connected spherical component has infinite cyclic centre. A connected
//! component with an `∞` edge `(s, t)` has trivial centre provided the
//! components `X₁ ∋ t` of `Γ_X` and `Y₁ ∋ s` of `Γ_Y` are handled; see
//! [`CenterDerivation`]. Free-of-infinity non-spherical components rely on
//! the known-results table or on an explicit assumption.
//!
//! Torsion: an amalgam of torsion-free groups is torsion free, so a
//! [`TorsionCertificate`] follows the decomposition tree and only its leaves
//! carry a justification.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::amalgam::{decomposition_tree_with, DecompositionTree, SplitPolicy};
use crate::classify::is_spherical_set;
use crate::error::{Error, Result};
use crate::garside::GarsideGroup;
use crate::graph::{CoxeterGraph, Vertex, VertexSet};
use crate::known_results::{GraphClass, KnownResults, Property};
use crate::word::PositiveWord;
use crate::Limits;

/// Label of the hypothesis used for free-of-infinity components whose
/// centre is not covered by the known-results table.
pub const CENTER_ASSUMPTION: &str =
    "connected non-spherical free-of-infinity Artin-Tits groups have trivial centre";

/// Label of the hypothesis used for free-of-infinity leaves whose torsion
/// freeness is not covered by the known-results table.
pub const TORSION_ASSUMPTION: &str = "free-of-infinity Artin-Tits groups are torsion free";

/// Why `Z(A_C) ∩ A_I = {1}` for a recorded pair `C ⊇ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubCaseBasis {
    /// `C` is connected spherical and `I ⊊ C`: the centre of a connected
    /// spherical group meets no proper standard parabolic subgroup.
    SphericalProperParabolic,
    /// `C` has an `∞` edge and trivial centre by a nested derivation.
    Derived(Box<CenterDerivation>),
    /// `C` is free of infinity and covered by the known-results table.
    Known { class: GraphClass, source: String },
    /// `C` is free of infinity and not covered; the named hypothesis is used.
    Assumed { assumption: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCase {
    pub component: VertexSet,
    pub inside: VertexSet,
    pub basis: SubCaseBasis,
}

/// Trivial centre of a connected graph on `vertices` with an `∞` edge.
///
/// With `X = V∖{s}`, `Y = V∖{t}`, `Z = X ∩ Y`, `X₁` the component of `Γ_X`
/// containing `t`, `Y₁` the component of `Γ_Y` containing `s`, `X₂ = X∖X₁`,
/// `Y₂ = Y∖Y₁` and `Z₁ = X₁∖{t}`: the centre lies in `Z(A_X) ∩ A_Z`, which
/// is contained in `A_{X₂}` once `Z(A_{X₁}) ∩ A_{Z₁} = {1}`; and
/// `X₂ ⊆ Y₁` reduces `Z(A_Y) ∩ A_{X₂}` to `Z(A_{Y₁}) ∩ A_{X₂}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDerivation {
    pub vertices: VertexSet,
    pub edge: (Vertex, Vertex),
    pub x: VertexSet,
    pub y: VertexSet,
    pub z: VertexSet,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub y1: VertexSet,
    pub y2: VertexSet,
    pub z1: VertexSet,
    pub x2_in_y1: bool,
    pub y2_in_x1: bool,
    /// `Z(A_{X₁}) ∩ A_{Z₁} = {1}`.
    pub x1_case: SubCase,
    /// `Z(A_{Y₁}) ∩ A_{X₂} = {1}`.
    pub y1_case: SubCase,
}

impl CenterDerivation {
    /// No assumption is used anywhere in the tree.
    pub fn is_unconditional(&self) -> bool {
        [&self.x1_case, &self.y1_case]
            .into_iter()
            .all(|c| match &c.basis {
                SubCaseBasis::Assumed { .. } => false,
                SubCaseBasis::Derived(d) => d.is_unconditional(),
                _ => true,
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrivialBasis {
    Derived(CenterDerivation),
    Known { class: GraphClass, source: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentCenter {
    /// Connected spherical component; `generator` generates the centre.
    InfiniteCyclic {
        generator: PositiveWord,
    },
    Trivial(TrivialBasis),
    /// Trivial under `assumption`. Components with an `∞` edge keep their
    /// derivation, which shows where the assumption enters.
    Conditional {
        assumption: String,
        derivation: Option<CenterDerivation>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDescription {
    pub vertices: VertexSet,
    pub center: ComponentCenter,
}

/// `Z(A_Γ)` as the product over connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDescription {
    pub components: Vec<ComponentDescription>,
}

impl CenterDescription {
    /// Rank of the centre as a free abelian group: the number of spherical
    /// components. Exact when [`Self::is_unconditional`].
    pub fn rank(&self) -> usize {
        self.components
            .iter()
            .filter(|c| matches!(c.center, ComponentCenter::InfiniteCyclic { .. }))
            .count()
    }

    pub fn is_unconditional(&self) -> bool {
        !self
            .components
            .iter()
            .any(|c| matches!(c.center, ComponentCenter::Conditional { .. }))
    }

    /// One factor per component, e.g. `Z × 1`; `1` for the empty graph.
    pub fn product_statement(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        let factors: Vec<&str> = self
            .components
            .iter()
            .map(|c| match c.center {
                ComponentCenter::InfiniteCyclic { .. } => "Z",
                ComponentCenter::Trivial(_) => "1",
                ComponentCenter::Conditional { .. } => "1?",
            })
            .collect();
        factors.join(" × ")
    }
}

pub fn center_description(g: &CoxeterGraph) -> Result<CenterDescription> {
    center_description_with(g, &Limits::default())
}

/// Errors only when a spherical component exceeds the enumeration limits.
pub fn center_description_with(g: &CoxeterGraph, limits: &Limits) -> Result<CenterDescription> {
    let table = KnownResults::builtin();
    let mut components = Vec::new();
    for comp in g.connected_components() {
        let center = if is_spherical_set(g, comp) {
            ComponentCenter::InfiniteCyclic {
                generator: GarsideGroup::new(g, comp, limits)?.center_generator(g)?,
            }
        } else if g.is_free_of_infinity_on(comp) {
            match table.covering(g, comp, Property::TrivialCenter) {
                Some(row) => ComponentCenter::Trivial(TrivialBasis::Known {
                    class: row.class,
                    source: row.source.clone(),
                }),
                None => ComponentCenter::Conditional {
                    assumption: CENTER_ASSUMPTION.into(),
                    derivation: None,
                },
            }
        } else {
            let d = center_derivation(g, comp, &table);
            if d.is_unconditional() {
                ComponentCenter::Trivial(TrivialBasis::Derived(d))
            } else {
                ComponentCenter::Conditional {
                    assumption: CENTER_ASSUMPTION.into(),
                    derivation: Some(d),
                }
            }
        };
        components.push(ComponentDescription {
            vertices: comp,
            center,
        });
    }
    Ok(CenterDescription { components })
}

/// Derivation for a connected vertex set with at least one `∞` edge, split
/// on the lexicographically first one.
///
/// # Panics
/// If `set` has no `∞` edge.
pub fn center_derivation(
    g: &CoxeterGraph,
    set: VertexSet,
    table: &KnownResults,
) -> CenterDerivation {
    let (s, t) = g
        .infinite_edges()
        .find(|&(s, t)| set.contains(s) && set.contains(t))
        .expect("set has an ∞ edge");
    let x = set.without(s);
    let y = set.without(t);
    let x1 = g.component_containing(x, t);
    let y1 = g.component_containing(y, s);
    let (x2, y2) = (x.difference(x1), y.difference(y1));
    let z1 = x1.without(t);
    CenterDerivation {
        vertices: set,
        edge: (s, t),
        x,
        y,
        z: x.intersection(y),
        x1,
        x2,
        y1,
        y2,
        z1,
        x2_in_y1: x2.is_subset(y1),
        y2_in_x1: y2.is_subset(x1),
        x1_case: sub_case(g, x1, z1, table),
        y1_case: sub_case(g, y1, x2, table),
    }
}

fn sub_case(
    g: &CoxeterGraph,
    component: VertexSet,
    inside: VertexSet,
    table: &KnownResults,
) -> SubCase {
    let basis = if is_spherical_set(g, component) {
        SubCaseBasis::SphericalProperParabolic
    } else if !g.is_free_of_infinity_on(component) {
        SubCaseBasis::Derived(Box::new(center_derivation(g, component, table)))
    } else {
        match table.covering(g, component, Property::TrivialCenter) {
            Some(row) => SubCaseBasis::Known {
                class: row.class,
                source: row.source.clone(),
            },
            None => SubCaseBasis::Assumed {
                assumption: CENTER_ASSUMPTION.into(),
            },
        }
    };
    SubCase {
        component,
        inside,
        basis,
    }
}

fn malformed(path: &str, reason: &str) -> Error {
    Error::MalformedDerivation {
        path: path.to_string(),
        reason: reason.to_string(),
    }
}

/// Recomputes every recorded set and check from `g`. `Ok(false)` when a
/// recorded fact is wrong; `Err` when the derivation does not even refer to
/// vertices of `g`.
pub fn verify_center_derivation(g: &CoxeterGraph, d: &CenterDerivation) -> Result<bool> {
    verify_derivation_at(g, d, "$", &KnownResults::builtin())
}

fn verify_derivation_at(
    g: &CoxeterGraph,
    d: &CenterDerivation,
    path: &str,
    table: &KnownResults,
) -> Result<bool> {
    let all = g.vertices();
    let (s, t) = d.edge;
    if s as usize >= g.rank() || t as usize >= g.rank() {
        return Err(malformed(path, "edge endpoint is not a vertex"));
    }
    let recorded = [d.vertices, d.x, d.y, d.z, d.x1, d.x2, d.y1, d.y2, d.z1];
    if recorded.iter().any(|set| !set.is_subset(all)) {
        return Err(malformed(path, "vertex set outside the graph"));
    }
    let v = d.vertices;
    if s == t || !v.contains(s) || !v.contains(t) || !g.label(s, t).is_infinite() {
        return Ok(false);
    }
    if g.components_of(v).len() != 1 {
        return Ok(false);
    }
    let x = v.without(s);
    let y = v.without(t);
    let x1 = g.component_containing(x, t);
    let y1 = g.component_containing(y, s);
    let expected = [
        x,
        y,
        x.intersection(y),
        x1,
        x.difference(x1),
        y1,
        y.difference(y1),
        x1.without(t),
    ];
    if recorded[1..] != expected {
        return Ok(false);
    }
    // Both inclusions hold for every connected graph; a false check would
    // mean the derivation is unusable.
    let x2_in_y1 = d.x2.is_subset(d.y1);
    let y2_in_x1 = d.y2.is_subset(d.x1);
    if d.x2_in_y1 != x2_in_y1 || d.y2_in_x1 != y2_in_x1 || !x2_in_y1 || !y2_in_x1 {
        return Ok(false);
    }
    let cases = [
        (&d.x1_case, d.x1, d.z1, "x1_case"),
        (&d.y1_case, d.y1, d.x2, "y1_case"),
    ];
    for (case, component, inside, name) in cases {
        if case.component != component || case.inside != inside {
            return Ok(false);
        }
        if !verify_sub_case(g, case, &format!("{path}.{name}"), table)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verify_sub_case(
    g: &CoxeterGraph,
    c: &SubCase,
    path: &str,
    table: &KnownResults,
) -> Result<bool> {
    let comp = c.component;
    if g.components_of(comp).len() != 1 {
        return Ok(false);
    }
    let spherical = is_spherical_set(g, comp);
    let free = g.is_free_of_infinity_on(comp);
    Ok(match &c.basis {
        SubCaseBasis::SphericalProperParabolic => {
            spherical && c.inside.is_subset(comp) && c.inside != comp
        }
        SubCaseBasis::Derived(d) => {
            !free
                && d.vertices == comp
                && verify_derivation_at(g, d, &format!("{path}.derived"), table)?
        }
        SubCaseBasis::Known { class, source } => {
            free && !spherical
                && class.contains(g, comp)
                && table
                    .lookup(*class, Property::TrivialCenter)
                    .is_some_and(|row| &row.source == source)
        }
        SubCaseBasis::Assumed { .. } => free && !spherical,
    })
}

/// Checks every component entry of a centre description against `g`,
/// including commutation of spherical generators.
pub fn verify_center_description(
    g: &CoxeterGraph,
    desc: &CenterDescription,
    limits: &Limits,
) -> Result<bool> {
    let comps = g.connected_components();
    if desc.components.len() != comps.len()
        || desc
            .components
            .iter()
            .zip(&comps)
            .any(|(c, &v)| c.vertices != v)
    {
        return Ok(false);
    }
    let table = KnownResults::builtin();
    for (i, c) in desc.components.iter().enumerate() {
        let path = format!("$.components[{i}]");
        let v = c.vertices;
        let spherical = is_spherical_set(g, v);
        let ok = match &c.center {
            ComponentCenter::InfiniteCyclic { generator } => {
                spherical && {
                    if !generator.0.iter().all(|&s| v.contains(s)) {
                        return Err(malformed(
                            &path,
                            "generator uses vertices outside the component",
                        ));
                    }
                    GarsideGroup::new(g, v, limits)?.commutes_with_generators(generator)?
                }
            }
            ComponentCenter::Trivial(TrivialBasis::Known { class, source }) => {
                !spherical
                    && g.is_free_of_infinity_on(v)
                    && class.contains(g, v)
                    && table
                        .lookup(*class, Property::TrivialCenter)
                        .is_some_and(|row| &row.source == source)
            }
            ComponentCenter::Trivial(TrivialBasis::Derived(d)) => {
                d.vertices == v
                    && d.is_unconditional()
                    && verify_derivation_at(g, d, &path, &table)?
            }
            ComponentCenter::Conditional { derivation, .. } => match derivation {
                None => !spherical && g.is_free_of_infinity_on(v),
                Some(d) => d.vertices == v && verify_derivation_at(g, d, &path, &table)?,
            },
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafStatus {
    SphericalTorsionFree {
        source: String,
    },
    /// Free of infinity, non-spherical, covered by the known-results table.
    KnownTorsionFree {
        class: GraphClass,
        source: String,
    },
    AssumedTorsionFree {
        assumption: String,
    },
}

/// Mirrors a decomposition tree. At a node, a finite-order element of the
/// amalgam is conjugate into one of the two factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionNode {
    Leaf {
        vertices: VertexSet,
        status: LeafStatus,
    },
    Node {
        vertices: VertexSet,
        edge: (Vertex, Vertex),
        x: VertexSet,
        y: VertexSet,
        z: VertexSet,
        left: Box<TorsionNode>,
        right: Box<TorsionNode>,
    },
}

impl TorsionNode {
    pub fn vertices(&self) -> VertexSet {
        match self {
            TorsionNode::Leaf { vertices, .. } | TorsionNode::Node { vertices, .. } => *vertices,
        }
    }

    pub fn leaves(&self) -> Vec<(VertexSet, &LeafStatus)> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<(VertexSet, &'a LeafStatus)>) {
        match self {
            TorsionNode::Leaf { vertices, status } => out.push((*vertices, status)),
            TorsionNode::Node { left, right, .. } => {
                left.collect(out);
                right.collect(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    pub root: TorsionNode,
    /// No leaf is `AssumedTorsionFree`.
    pub unconditional: bool,
}

impl TorsionCertificate {
    pub fn assumptions(&self) -> Vec<VertexSet> {
        self.root
            .leaves()
            .into_iter()
            .filter(|(_, s)| matches!(s, LeafStatus::AssumedTorsionFree { .. }))
            .map(|(v, _)| v)
            .collect()
    }
}

pub fn torsion_certificate(g: &CoxeterGraph) -> TorsionCertificate {
    torsion_certificate_with(g, SplitPolicy::First)
}

pub fn torsion_certificate_with(g: &CoxeterGraph, policy: SplitPolicy) -> TorsionCertificate {
    let table = KnownResults::builtin();
    let root = certify(g, &decomposition_tree_with(g, g.vertices(), policy), &table);
    let unconditional = root
        .leaves()
        .iter()
        .all(|(_, s)| !matches!(s, LeafStatus::AssumedTorsionFree { .. }));
    TorsionCertificate {
        root,
        unconditional,
    }
}

fn leaf_status(g: &CoxeterGraph, leaf: VertexSet, table: &KnownResults) -> LeafStatus {
    match table.covering(g, leaf, Property::TorsionFree) {
        Some(row) if row.class == GraphClass::Spherical => LeafStatus::SphericalTorsionFree {
            source: row.source.clone(),
        },
        Some(row) => LeafStatus::KnownTorsionFree {
            class: row.class,
            source: row.source.clone(),
        },
        None => LeafStatus::AssumedTorsionFree {
            assumption: TORSION_ASSUMPTION.into(),
        },
    }
}

fn certify(g: &CoxeterGraph, tree: &DecompositionTree, table: &KnownResults) -> TorsionNode {
    match tree {
        DecompositionTree::Leaf { vertices } => TorsionNode::Leaf {
            vertices: *vertices,
            status: leaf_status(g, *vertices, table),
        },
        DecompositionTree::Node {
            vertices,
            edge,
            x,
            y,
            z,
            left,
            right,
        } => TorsionNode::Node {
            vertices: *vertices,
            edge: *edge,
            x: *x,
            y: *y,
            z: *z,
            left: Box::new(certify(g, left, table)),
            right: Box::new(certify(g, right, table)),
        },
    }
}

/// Structural check: the root covers all of `g`, every node splits along an
/// `∞` edge into the right factors, every leaf is free of infinity with a
/// justified status, and the `unconditional` flag is accurate.
pub fn verify_torsion_certificate(g: &CoxeterGraph, cert: &TorsionCertificate) -> Result<bool> {
    let table = KnownResults::builtin();
    if cert.root.vertices() != g.vertices() {
        return Ok(false);
    }
    if !verify_torsion_at(g, &cert.root, "$", &table)? {
        return Ok(false);
    }
    Ok(cert.unconditional == cert.assumptions().is_empty())
}

fn verify_torsion_at(
    g: &CoxeterGraph,
    n: &TorsionNode,
    path: &str,
    table: &KnownResults,
) -> Result<bool> {
    if !n.vertices().is_subset(g.vertices()) {
        return Err(malformed(path, "vertex set outside the graph"));
    }
    match n {
        TorsionNode::Leaf { vertices, status } => {
            let v = *vertices;
            if !g.is_free_of_infinity_on(v) {
                return Ok(false);
            }
            Ok(match status {
                LeafStatus::SphericalTorsionFree { source } => {
                    is_spherical_set(g, v)
                        && table
                            .lookup(GraphClass::Spherical, Property::TorsionFree)
                            .is_some_and(|r| &r.source == source)
                }
                LeafStatus::KnownTorsionFree { class, source } => {
                    class.contains(g, v)
                        && table
                            .lookup(*class, Property::TorsionFree)
                            .is_some_and(|r| &r.source == source)
                }
                LeafStatus::AssumedTorsionFree { .. } => true,
            })
        }
        TorsionNode::Node {
            vertices,
            edge: (s, t),
            x,
            y,
            z,
            left,
            right,
        } => {
            let v = *vertices;
            let (s, t) = (*s, *t);
            if s as usize >= g.rank() || t as usize >= g.rank() {
                return Err(malformed(path, "edge endpoint is not a vertex"));
            }
            let ok = s != t
                && v.contains(s)
                && v.contains(t)
                && g.label(s, t).is_infinite()
                && *x == v.without(s)
                && *y == v.without(t)
                && *z == x.intersection(*y)
                && left.vertices() == *x
                && right.vertices() == *y;
            Ok(ok
                && verify_torsion_at(g, left, &format!("{path}.left"), table)?
                && verify_torsion_at(g, right, &format!("{path}.right"), table)?)
        }
    }
}
