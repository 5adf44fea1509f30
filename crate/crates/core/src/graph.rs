//! Coxeter graphs.
//!
//! A graph stores its vertices in declaration order and the Coxeter matrix
//! entries `m(s, t)` for distinct vertices. Pairs that were never given a
//! label have `m(s, t) = 2` and are not edges of the graph.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of a vertex in its graph's declaration order.
pub type Vertex = u8;

/// Maximum number of vertices a graph may have.
pub const MAX_VERTICES: usize = 64;

/// Off-diagonal Coxeter matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Label::Infinity
    }

    /// Two vertices are joined in the graph iff the label is at least 3.
    pub fn is_edge(self) -> bool {
        self != Label::Finite(2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A set of vertices of one graph, as a bitmask over vertex indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn without(self, v: Vertex) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn with(self, v: Vertex) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest vertex of the set.
    pub fn first(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as Vertex)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as Vertex;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A Coxeter graph over a finite, ordered vertex set.
#[derive(Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    names: Vec<String>,
    // row-major n*n; diagonal entries are never read
    labels: Vec<Label>,
}

impl CoxeterGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    /// Graph with vertices `names` and the given `(s, t, label)` triples.
    pub fn from_edges(names: &[&str], edges: &[(&str, &str, Label)]) -> Result<CoxeterGraph> {
        let mut b = GraphBuilder::default();
        for n in names {
            b.vertex(n)?;
        }
        for &(s, t, l) in edges {
            b.edge(s, t, l)?;
        }
        Ok(b.build())
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.rank())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v as usize]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Vertex)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set(&self, names: &[&str]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex(n)).collect()
    }

    /// `m(s, t)`. Panics if `s == t`: the diagonal is not a label.
    pub fn label(&self, s: Vertex, t: Vertex) -> Label {
        assert_ne!(
            s, t,
            "diagonal entries of the Coxeter matrix are not labels"
        );
        self.labels[s as usize * self.rank() + t as usize]
    }

    /// Finite `m(s, t)`, or `None` for `∞`.
    pub(crate) fn m(&self, s: Vertex, t: Vertex) -> Option<u32> {
        self.labels[s as usize * self.rank() + t as usize].finite()
    }

    /// All pairs `s < t` with `m(s, t) ≠ 2`, in lexicographic index order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Label)> + '_ {
        let n = self.rank() as Vertex;
        (0..n).flat_map(move |s| {
            (s + 1..n).filter_map(move |t| {
                let l = self.label(s, t);
                l.is_edge().then_some((s, t, l))
            })
        })
    }

    pub fn infinite_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges()
            .filter(|e| e.2.is_infinite())
            .map(|(s, t, _)| (s, t))
    }

    pub fn is_free_of_infinity_on(&self, set: VertexSet) -> bool {
        !self
            .infinite_edges()
            .any(|(s, t)| set.contains(s) && set.contains(t))
    }

    /// The full subgraph on `set`, keeping declaration order and names.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<CoxeterGraph> {
        if !set.is_subset(self.vertices()) {
            return Err(Error::UnknownVertex(alloc::format!("index in {set:?}")));
        }
        let keep: Vec<Vertex> = set.iter().collect();
        let n = keep.len();
        let mut labels = vec![Label::Finite(2); n * n];
        for (i, &s) in keep.iter().enumerate() {
            for (j, &t) in keep.iter().enumerate() {
                if i != j {
                    labels[i * n + j] = self.label(s, t);
                }
            }
        }
        Ok(CoxeterGraph {
            names: keep
                .iter()
                .map(|&v| self.names[v as usize].clone())
                .collect(),
            labels,
        })
    }

    /// Induced subgraph by vertex names.
    pub fn induced_subgraph_by_names(&self, names: &[&str]) -> Result<CoxeterGraph> {
        self.induced_subgraph(self.vertex_set(names)?)
    }

    pub fn neighbours(&self, v: Vertex) -> VertexSet {
        (0..self.rank() as Vertex)
            .filter(|&u| u != v && self.label(u, v).is_edge())
            .collect()
    }

    /// Connected components of the full subgraph on `set`, each listed by
    /// its smallest vertex, in increasing order of that vertex.
    pub fn components_of(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbours(v));
                }
                frontier = next.intersection(set).difference(comp);
                comp = comp.union(frontier);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_of(self.vertices())
    }

    /// The component of the full subgraph on `set` containing `v`.
    pub fn component_containing(&self, set: VertexSet, v: Vertex) -> VertexSet {
        self.components_of(set)
            .into_iter()
            .find(|c| c.contains(v))
            .unwrap_or(VertexSet::EMPTY)
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.name(v)).collect()
    }

    /// `{a, b, c}`-style rendering of a vertex set.
    pub fn format_set(&self, set: VertexSet) -> String {
        self.set_names(set).join(" ")
    }
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGraph({:?}", self.names)?;
        for (s, t, l) in self.edges() {
            write!(f, ", {}-{}:{}", self.name(s), self.name(t), l)?;
        }
        f.write_str(")")
    }
}

/// Incremental construction with the graph invariants checked per call.
#[derive(Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    edges: Vec<(Vertex, Vertex, Label)>,
}

impl GraphBuilder {
    pub fn vertex(&mut self, name: &str) -> Result<Vertex> {
        if name.is_empty() {
            return Err(Error::EmptyVertexName);
        }
        if self.names.iter().any(|n| n == name) {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        if self.names.len() == MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES + 1));
        }
        self.names.push(name.to_string());
        Ok((self.names.len() - 1) as Vertex)
    }

    fn index(&self, name: &str) -> Result<Vertex> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Vertex)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge(&mut self, s: &str, t: &str, label: Label) -> Result<()> {
        if s == t {
            return Err(Error::SelfLoop(s.to_string()));
        }
        let (a, b) = (self.index(s)?, self.index(t)?);
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(Error::InvalidLabel(m));
            }
        }
        let key = (a.min(b), a.max(b));
        if self.edges.iter().any(|&(x, y, _)| (x, y) == key) {
            return Err(Error::DuplicateEdge(s.to_string(), t.to_string()));
        }
        self.edges.push((key.0, key.1, label));
        Ok(())
    }

    pub fn build(self) -> CoxeterGraph {
        let n = self.names.len();
        let mut labels = vec![Label::Finite(2); n * n];
        for (s, t, l) in self.edges {
            labels[s as usize * n + t as usize] = l;
            labels[t as usize * n + s as usize] = l;
        }
        CoxeterGraph {
            names: self.names,
            labels,
        }
    }
}
