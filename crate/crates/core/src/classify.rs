//! Classification flags of a Coxeter graph.

use alloc::vec::Vec;

use crate::catalog::{identify, FiniteType};
use crate::graph::{CoxeterGraph, Label, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub spherical: bool,
    pub free_of_infinity: bool,
    pub fc_type: bool,
    pub large: bool,
    pub extra_large: bool,
    pub two_dimensional: bool,
    pub connected: bool,
    pub components: Vec<VertexSet>,
    /// Catalog type of each component, `None` for non-spherical ones.
    pub component_types: Vec<Option<FiniteType>>,
}

pub fn classify(g: &CoxeterGraph) -> ClassificationReport {
    classify_set(g, g.vertices())
}

/// Classification of the full subgraph on `set`.
pub fn classify_set(g: &CoxeterGraph, set: VertexSet) -> ClassificationReport {
    let components = g.components_of(set);
    let component_types: Vec<Option<FiniteType>> =
        components.iter().map(|&c| identify(g, c)).collect();
    let pairs = || {
        let vs: Vec<Vertex> = set.iter().collect();
        let mut out = Vec::new();
        for (i, &s) in vs.iter().enumerate() {
            out.extend(vs[i + 1..].iter().map(|&t| (s, t)));
        }
        out
    };
    let at_least = |k: u32| {
        pairs().into_iter().all(|(s, t)| match g.label(s, t) {
            Label::Infinity => true,
            Label::Finite(m) => m >= k,
        })
    };
    ClassificationReport {
        spherical: component_types.iter().all(Option::is_some),
        free_of_infinity: g.is_free_of_infinity_on(set),
        fc_type: is_fc_set(g, set),
        large: at_least(3),
        extra_large: at_least(4),
        two_dimensional: is_two_dimensional_set(g, set),
        connected: components.len() == 1,
        components,
        component_types,
    }
}

pub fn is_spherical_set(g: &CoxeterGraph, set: VertexSet) -> bool {
    g.components_of(set)
        .into_iter()
        .all(|c| identify(g, c).is_some())
}

/// Every free-of-infinity full subgraph is spherical. Since full subgraphs
/// of spherical graphs are spherical, only the maximal free-of-infinity
/// subsets are checked.
pub fn is_fc_set(g: &CoxeterGraph, set: VertexSet) -> bool {
    maximal_free_of_infinity_subsets(g, set)
        .into_iter()
        .all(|x| is_spherical_set(g, x))
}

/// No full subgraph on three or more vertices is spherical; it suffices to
/// look at three-element subsets.
pub fn is_two_dimensional_set(g: &CoxeterGraph, set: VertexSet) -> bool {
    let vs: Vec<Vertex> = set.iter().collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            for k in j + 1..vs.len() {
                let x: VertexSet = [vs[i], vs[j], vs[k]].into_iter().collect();
                if is_spherical_set(g, x) {
                    return false;
                }
            }
        }
    }
    true
}

/// Maximal subsets of `set` containing no `∞` edge: the maximal cliques of
/// the "finite label" relation (Bron–Kerbosch with pivoting).
pub fn maximal_free_of_infinity_subsets(g: &CoxeterGraph, set: VertexSet) -> Vec<VertexSet> {
    let compatible = |v: Vertex| -> VertexSet {
        set.iter()
            .filter(|&u| u != v && !g.label(u, v).is_infinite())
            .collect()
    };
    let mut out = Vec::new();
    bron_kerbosch(
        &compatible,
        VertexSet::EMPTY,
        set,
        VertexSet::EMPTY,
        &mut out,
    );
    out
}

fn bron_kerbosch(
    nbrs: &dyn Fn(Vertex) -> VertexSet,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p.union(x).first().expect("nonempty");
    for v in p.difference(nbrs(pivot)).iter() {
        let nv = nbrs(v);
        bron_kerbosch(nbrs, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p = p.without(v);
        x = x.with(v);
    }
}
