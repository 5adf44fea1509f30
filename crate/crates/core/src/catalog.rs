//! The connected spherical Coxeter graphs.
//!
//! A connected graph is spherical iff it is isomorphic (as a labelled graph)
//! to one of `A_n (n ≥ 1)`, `B_n (n ≥ 2)`, `D_n (n ≥ 4)`, `E₆`, `E₇`, `E₈`,
//! `F₄`, `H₃`, `H₄` or `I₂(m) (m ≥ 5)`. Recognition builds the candidates of
//! the right rank and runs a backtracking isomorphism search.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{CoxeterGraph, Label, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::E7 => f.write_str("E7"),
            FiniteType::E8 => f.write_str("E8"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H3 => f.write_str("H3"),
            FiniteType::H4 => f.write_str("H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Small labelled graph on `0..n`; `edges` lists the pairs with label ≠ 2.
#[derive(Clone, Debug)]
pub struct Shape {
    pub n: usize,
    pub edges: Vec<(usize, usize, Label)>,
}

impl Shape {
    fn path(n: usize) -> Shape {
        Shape {
            n,
            edges: (1..n).map(|i| (i - 1, i, Label::Finite(3))).collect(),
        }
    }

    fn with_label(mut self, i: usize, m: u32) -> Shape {
        self.edges[i].2 = Label::Finite(m);
        self
    }

    /// Star with arms of the given lengths (in edges) around vertex 0.
    fn star(arms: &[usize]) -> Shape {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, Label::Finite(3)));
                prev = next;
                next += 1;
            }
        }
        Shape { n: next, edges }
    }

    fn label(&self, i: usize, j: usize) -> Label {
        self.edges
            .iter()
            .find(|&&(a, b, _)| (a, b) == (i, j) || (a, b) == (j, i))
            .map(|e| e.2)
            .unwrap_or(Label::Finite(2))
    }

    /// As a `CoxeterGraph` with vertices named `1..=n`.
    pub fn to_graph(&self) -> CoxeterGraph {
        let mut b = CoxeterGraph::builder();
        let names: Vec<alloc::string::String> =
            (1..=self.n).map(|i| alloc::format!("{i}")).collect();
        for name in &names {
            b.vertex(name).expect("fresh names");
        }
        for &(i, j, l) in &self.edges {
            b.edge(&names[i], &names[j], l).expect("valid shape");
        }
        b.build()
    }
}

/// Catalog graph of the given type.
pub fn shape(t: FiniteType) -> Shape {
    match t {
        FiniteType::A(n) => Shape::path(n),
        FiniteType::B(n) => Shape::path(n).with_label(0, 4),
        FiniteType::D(n) => Shape::star(&[1, 1, n - 3]),
        FiniteType::E6 => Shape::star(&[1, 2, 2]),
        FiniteType::E7 => Shape::star(&[1, 2, 3]),
        FiniteType::E8 => Shape::star(&[1, 2, 4]),
        FiniteType::F4 => Shape::path(4).with_label(1, 4),
        FiniteType::H3 => Shape::path(3).with_label(0, 5),
        FiniteType::H4 => Shape::path(4).with_label(0, 5),
        FiniteType::I2(m) => Shape::path(2).with_label(0, m),
    }
}

/// Catalog entries of rank `n`. Rank 2 depends on the label `m` of the
/// graph being matched, since `I₂(m)` is an infinite family.
fn candidates(n: usize, rank2_label: Option<Label>) -> Vec<FiniteType> {
    match n {
        0 => vec![],
        1 => vec![FiniteType::A(1)],
        2 => match rank2_label {
            Some(Label::Finite(3)) => vec![FiniteType::A(2)],
            Some(Label::Finite(4)) => vec![FiniteType::B(2)],
            Some(Label::Finite(m)) if m >= 5 => vec![FiniteType::I2(m)],
            _ => vec![],
        },
        _ => {
            let mut out = vec![FiniteType::A(n), FiniteType::B(n)];
            if n >= 4 {
                out.push(FiniteType::D(n));
            }
            match n {
                3 => out.push(FiniteType::H3),
                4 => out.extend([FiniteType::F4, FiniteType::H4]),
                6 => out.push(FiniteType::E6),
                7 => out.push(FiniteType::E7),
                8 => out.push(FiniteType::E8),
                _ => {}
            }
            out
        }
    }
}

/// Is the full subgraph of `g` on `set` isomorphic to `target`?
pub fn isomorphic(g: &CoxeterGraph, set: VertexSet, target: &Shape) -> bool {
    let verts: Vec<Vertex> = bfs_order(g, set);
    if verts.len() != target.n {
        return false;
    }
    let degree_g = |v: Vertex| g.neighbours(v).intersection(set).len();
    let degree_t = |i: usize| target.edges.iter().filter(|e| e.0 == i || e.1 == i).count();
    let mut dg: Vec<usize> = verts.iter().map(|&v| degree_g(v)).collect();
    let mut dt: Vec<usize> = (0..target.n).map(degree_t).collect();
    dg.sort_unstable();
    dt.sort_unstable();
    if dg != dt {
        return false;
    }
    let mut image = vec![usize::MAX; verts.len()];
    let mut used = vec![false; target.n];
    extend(g, &verts, target, 0, &mut image, &mut used)
}

fn extend(
    g: &CoxeterGraph,
    verts: &[Vertex],
    target: &Shape,
    k: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == verts.len() {
        return true;
    }
    for cand in 0..target.n {
        if used[cand] {
            continue;
        }
        let consistent =
            (0..k).all(|j| g.label(verts[j], verts[k]) == target.label(image[j], cand));
        if !consistent {
            continue;
        }
        image[k] = cand;
        used[cand] = true;
        if extend(g, verts, target, k + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    false
}

// Placing vertices in BFS order keeps every new vertex adjacent to an
// already placed one, which prunes the search early.
fn bfs_order(g: &CoxeterGraph, set: VertexSet) -> Vec<Vertex> {
    let mut order = Vec::new();
    let mut placed = VertexSet::EMPTY;
    for comp in g.components_of(set) {
        let start = comp.first().expect("components are nonempty");
        let mut queue = alloc::collections::VecDeque::from([start]);
        placed.insert(start);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in g.neighbours(v).intersection(comp).iter() {
                if !placed.contains(u) {
                    placed.insert(u);
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

/// Catalog type of a connected full subgraph, if it is spherical.
pub fn identify(g: &CoxeterGraph, component: VertexSet) -> Option<FiniteType> {
    let n = component.len();
    let rank2_label = (n == 2).then(|| {
        let mut it = component.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        g.label(a, b)
    });
    candidates(n, rank2_label)
        .into_iter()
        .find(|&t| isomorphic(g, component, &shape(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::*;

    fn full(g: &CoxeterGraph) -> VertexSet {
        g.vertices()
    }

    #[test]
    fn recognises_every_catalog_shape_under_relabelling() {
        let types = [
            FiniteType::A(1),
            FiniteType::A(5),
            FiniteType::B(2),
            FiniteType::B(4),
            FiniteType::D(4),
            FiniteType::D(6),
            FiniteType::E6,
            FiniteType::E7,
            FiniteType::E8,
            FiniteType::F4,
            FiniteType::H3,
            FiniteType::H4,
            FiniteType::I2(7),
        ];
        for t in types {
            let s = shape(t);
            // reverse the vertex numbering so the match is not positional
            let rev = Shape {
                n: s.n,
                edges: s
                    .edges
                    .iter()
                    .map(|&(a, b, l)| (s.n - 1 - a, s.n - 1 - b, l))
                    .collect(),
            };
            let g = rev.to_graph();
            assert_eq!(identify(&g, full(&g)), Some(t), "{t}");
        }
    }

    #[test]
    fn rejects_affine_and_hyperbolic_shapes() {
        let tri = Shape {
            n: 3,
            edges: vec![(0, 1, Finite(3)), (1, 2, Finite(3)), (0, 2, Finite(3))],
        }
        .to_graph();
        assert_eq!(identify(&tri, full(&tri)), None);
        let affine_b3 = Shape::path(3).with_label(0, 4).with_label(1, 4).to_graph();
        assert_eq!(identify(&affine_b3, full(&affine_b3)), None);
        let affine_d4 = Shape::star(&[1, 1, 1, 1]).to_graph();
        assert_eq!(identify(&affine_d4, full(&affine_d4)), None);
        let h5ish = Shape::path(5).with_label(0, 5).to_graph();
        assert_eq!(identify(&h5ish, full(&h5ish)), None);
        let inf = Shape::path(2).with_label(0, 3);
        let mut inf = inf;
        inf.edges[0].2 = Infinity;
        let inf = inf.to_graph();
        assert_eq!(identify(&inf, full(&inf)), None);
    }

    #[test]
    fn f4_label_must_be_central() {
        // 4 on an end edge of a 4-path is B4, not F4
        let g = Shape::path(4).with_label(2, 4).to_graph();
        assert_eq!(identify(&g, full(&g)), Some(FiniteType::B(4)));
        let g = Shape::path(4).with_label(1, 4).to_graph();
        assert_eq!(identify(&g, full(&g)), Some(FiniteType::F4));
    }
}
