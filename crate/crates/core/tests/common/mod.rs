//! Graph fixtures, random generators and brute-force oracles shared by the
//! integration tests. Nothing here calls into the solvers under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use artin_core::{CoxeterGraph, GroupWord, Label, Letter, Vertex};
use rand::rngs::StdRng;
use rand::Rng;

pub use artin_core::Label::{Finite, Infinity};

pub fn graph(names: &[&str], edges: &[(&str, &str, Label)]) -> CoxeterGraph {
    CoxeterGraph::from_edges(names, edges).unwrap()
}

pub fn dihedral(m: Label) -> CoxeterGraph {
    graph(&["s", "t"], &[("s", "t", m)])
}

pub fn a1() -> CoxeterGraph {
    graph(&["s"], &[])
}

pub fn a1xa1() -> CoxeterGraph {
    dihedral(Finite(2))
}

pub fn path3(m1: u32, m2: u32) -> CoxeterGraph {
    graph(
        &["s", "t", "u"],
        &[("s", "t", Finite(m1)), ("t", "u", Finite(m2))],
    )
}

/// `m(s,t) = ∞`, `m(s,u) = 3`, `m(t,u) = 2`.
pub fn fc3() -> CoxeterGraph {
    graph(
        &["s", "t", "u"],
        &[("s", "t", Infinity), ("s", "u", Finite(3))],
    )
}

/// Connected spherical graphs of rank ≤ 3 with their group orders.
pub fn small_spherical() -> Vec<(&'static str, CoxeterGraph, usize)> {
    vec![
        ("A1", a1(), 2),
        ("A2", dihedral(Finite(3)), 6),
        ("B2", dihedral(Finite(4)), 8),
        ("I2(5)", dihedral(Finite(5)), 10),
        ("G2", dihedral(Finite(6)), 12),
        ("A3", path3(3, 3), 24),
        ("B3", path3(3, 4), 48),
        ("H3", path3(3, 5), 120),
    ]
}

/// Random graph on `n` vertices; each pair gets a label from `labels`.
pub fn random_graph(rng: &mut StdRng, n: usize, labels: &[Label]) -> CoxeterGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut b = CoxeterGraph::builder();
    for name in &names {
        b.vertex(name).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            let l = labels[rng.gen_range(0..labels.len())];
            if l != Finite(2) {
                b.edge(&names[i], &names[j], l).unwrap();
            }
        }
    }
    b.build()
}

pub fn random_word(rng: &mut StdRng, vertices: &[Vertex], len: usize) -> GroupWord {
    GroupWord(
        (0..len)
            .map(|_| {
                let v = vertices[rng.gen_range(0..vertices.len())];
                if rng.gen_bool(0.5) {
                    Letter::pos(v)
                } else {
                    Letter::neg(v)
                }
            })
            .collect(),
    )
}

pub fn all_vertices(g: &CoxeterGraph) -> Vec<Vertex> {
    (0..g.rank() as Vertex).collect()
}

/// Stack-based free reduction.
pub fn free_reduce(w: &GroupWord) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::new();
    for &l in &w.0 {
        match stack.last() {
            Some(&top) if top.vertex == l.vertex && top.sign != l.sign => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    stack
}

/// Alternating word `a b a …` of length `m`.
pub fn alternating(a: Vertex, b: Vertex, m: usize) -> Vec<Vertex> {
    (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

pub fn positive(vs: &[Vertex]) -> GroupWord {
    GroupWord(vs.iter().map(|&v| Letter::pos(v)).collect())
}

/// Defining relators `Π(s,t) Π(t,s)⁻¹` for every finite label.
pub fn relators(g: &CoxeterGraph) -> Vec<GroupWord> {
    let mut out = Vec::new();
    for s in 0..g.rank() as Vertex {
        for t in s + 1..g.rank() as Vertex {
            if let Label::Finite(m) = g.label(s, t) {
                let m = m as usize;
                out.push(
                    positive(&alternating(s, t, m))
                        .concat(&positive(&alternating(t, s, m)).inverse()),
                );
            }
        }
    }
    out
}

/// Every positive word reachable from `w` by braid relations.
pub fn monoid_class(g: &CoxeterGraph, w: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(x) = queue.pop_front() {
        for i in 0..x.len().saturating_sub(1) {
            let (a, b) = (x[i], x[i + 1]);
            if a == b {
                continue;
            }
            let Label::Finite(m) = g.label(a, b) else {
                continue;
            };
            let m = m as usize;
            if i + m > x.len() || x[i..i + m] != alternating(a, b, m)[..] {
                continue;
            }
            let mut y = x.clone();
            y[i..i + m].copy_from_slice(&alternating(b, a, m));
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Exponent sums on classes of vertices joined by odd labels: the
/// abelianisation of `A`. A nonzero entry certifies nontriviality.
pub fn abelianisation(g: &CoxeterGraph, w: &GroupWord) -> Vec<i64> {
    let n = g.rank();
    let mut class: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], mut x: usize) -> usize {
        while c[x] != x {
            c[x] = c[c[x]];
            x = c[x];
        }
        x
    }
    for s in 0..n {
        for t in s + 1..n {
            if let Label::Finite(m) = g.label(s as Vertex, t as Vertex) {
                if m % 2 == 1 {
                    let (a, b) = (find(&mut class, s), find(&mut class, t));
                    class[a] = b;
                }
            }
        }
    }
    let mut sums = vec![0i64; n];
    for l in &w.0 {
        let c = find(&mut class, l.vertex as usize);
        sums[c] += if l.sign == artin_core::Sign::Pos {
            1
        } else {
            -1
        };
    }
    sums
}

/// Product of `k` random conjugates of relators (or their inverses).
pub fn random_consequence(
    rng: &mut StdRng,
    g: &CoxeterGraph,
    k: usize,
    conj_len: usize,
) -> GroupWord {
    let rels = relators(g);
    let vs = all_vertices(g);
    let mut out = GroupWord::new();
    for _ in 0..k {
        let r = &rels[rng.gen_range(0..rels.len())];
        let r = if rng.gen_bool(0.5) {
            r.clone()
        } else {
            r.inverse()
        };
        let len = rng.gen_range(0..=conj_len);
        let u = random_word(rng, &vs, len);
        out = out.concat(&u).concat(&r).concat(&u.inverse());
    }
    out
}

/// Inserts a relator, inverse relator or cancelling pair at a random spot.
pub fn insert_trivial(rng: &mut StdRng, g: &CoxeterGraph, w: &GroupWord) -> GroupWord {
    let rels = relators(g);
    let pos = rng.gen_range(0..=w.len());
    let piece = if rels.is_empty() || rng.gen_bool(0.4) {
        let v = rng.gen_range(0..g.rank()) as Vertex;
        let l = if rng.gen_bool(0.5) {
            Letter::pos(v)
        } else {
            Letter::neg(v)
        };
        GroupWord(vec![l, l.inverse()])
    } else {
        let r = &rels[rng.gen_range(0..rels.len())];
        if rng.gen_bool(0.5) {
            r.clone()
        } else {
            r.inverse()
        }
    };
    let mut v = w.0[..pos].to_vec();
    v.extend(piece.0);
    v.extend_from_slice(&w.0[pos..]);
    GroupWord(v)
}
