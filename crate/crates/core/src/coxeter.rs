//! Arithmetic in the Coxeter group `W` of a graph.
//!
//! Words are reduced with Tits' solution to the word problem: a word is
//! reduced iff no sequence of braid moves (`Π(s,t:m) → Π(t,s:m)`) produces
//! a word with two equal adjacent letters. Reduction explores the braid-move
//! closure of a word with an explicit visited set and deletes an `ss` factor
//! whenever one shows up. The canonical form of an element is the
//! ShortLex-least of its reduced words.
//!
//! Enumeration of finite groups ([`CayleyTable`]) instead uses the geometric
//! representation, where descent sets are read off root signs; braid-move
//! closures of long elements are far too large for that.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::{classify_set, is_spherical_set};
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Label, Vertex};
use crate::Limits;

/// A word in the Coxeter generators. Every generator is an involution, so
/// no inverse letters are needed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterWord(pub Vec<Vertex>);

impl CoxeterWord {
    /// Inverse element: the reversed word.
    pub fn inverse(&self) -> CoxeterWord {
        CoxeterWord(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The alternating word `a b a b …` of length `m`.
pub fn pi_word<T: Copy + PartialEq>(a: T, b: T, m: Label) -> Result<Vec<T>> {
    let m = match m {
        Label::Infinity => return Err(Error::InvalidBraidWord("label is infinite")),
        Label::Finite(m) if m < 2 => return Err(Error::InvalidBraidWord("label below 2")),
        Label::Finite(m) => m,
    };
    if a == b {
        return Err(Error::InvalidBraidWord("letters are equal"));
    }
    Ok((0..m).map(|i| if i % 2 == 0 { a } else { b }).collect())
}

enum Closure {
    /// Some word in the closure had an `ss` factor; this is that word with
    /// the factor removed.
    Shortened(Vec<Vertex>),
    /// All words equivalent to the start under braid moves; the start word
    /// is reduced.
    Reduced(BTreeSet<Vec<Vertex>>),
}

/// Tits rewriting over one graph, with a cap on the number of visited words
/// per closure.
#[derive(Clone, Copy)]
pub struct Rewriter<'g> {
    graph: &'g CoxeterGraph,
    max_words: usize,
}

impl<'g> Rewriter<'g> {
    pub fn new(graph: &'g CoxeterGraph, limits: &Limits) -> Self {
        Rewriter {
            graph,
            max_words: limits.max_words,
        }
    }

    pub fn graph(&self) -> &'g CoxeterGraph {
        self.graph
    }

    fn square_at(word: &[Vertex]) -> Option<usize> {
        word.windows(2).position(|p| p[0] == p[1])
    }

    fn closure(&self, start: Vec<Vertex>) -> Result<Closure> {
        if let Some(i) = Self::square_at(&start) {
            let mut w = start;
            w.drain(i..i + 2);
            return Ok(Closure::Shortened(w));
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(w) = queue.pop_front() {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                let Some(m) = self.graph.m(a, b) else {
                    continue;
                };
                let m = m as usize;
                if i + m > w.len() {
                    continue;
                }
                let alternates = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
                if !alternates {
                    continue;
                }
                let mut next = w.clone();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { b } else { a };
                }
                if seen.contains(&next) {
                    continue;
                }
                if let Some(j) = Self::square_at(&next) {
                    next.drain(j..j + 2);
                    return Ok(Closure::Shortened(next));
                }
                if seen.len() >= self.max_words {
                    return Err(Error::ResourceLimit {
                        what: "braid-move closure size",
                        limit: self.max_words,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        Ok(Closure::Reduced(seen))
    }

    /// All reduced expressions of the element represented by the reduced
    /// word `word`.
    pub fn reduced_expressions(&self, word: &[Vertex]) -> Result<BTreeSet<Vec<Vertex>>> {
        match self.closure(word.to_vec())? {
            Closure::Reduced(set) => Ok(set),
            Closure::Shortened(_) => Err(Error::VerificationFailed("word is not reduced")),
        }
    }

    /// Canonical form of a word that is at most one deletion away from
    /// being reduced (e.g. a reduced word with one letter appended).
    fn settle(&self, mut word: Vec<Vertex>) -> Result<Vec<Vertex>> {
        loop {
            match self.closure(word)? {
                Closure::Shortened(w) => word = w,
                Closure::Reduced(set) => return Ok(set.into_iter().next().unwrap_or_default()),
            }
        }
    }

    /// Canonical form of `canonical · s`, where `canonical` is reduced.
    pub fn multiply(&self, canonical: &[Vertex], s: Vertex) -> Result<Vec<Vertex>> {
        let mut w = Vec::with_capacity(canonical.len() + 1);
        w.extend_from_slice(canonical);
        w.push(s);
        self.settle(w)
    }

    /// ShortLex-least reduced word of the element represented by `word`.
    pub fn reduce(&self, word: &[Vertex]) -> Result<Vec<Vertex>> {
        let mut r = Vec::new();
        for &s in word {
            r = self.multiply(&r, s)?;
        }
        Ok(r)
    }

    pub fn is_identity(&self, word: &[Vertex]) -> Result<bool> {
        Ok(self.reduce(word)?.is_empty())
    }
}

/// Does `w` represent the identity of `W`?
pub fn is_identity_in_w(g: &CoxeterGraph, w: &CoxeterWord) -> Result<bool> {
    Rewriter::new(g, &Limits::default()).is_identity(&w.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationStatus {
    Complete,
    Overflow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub status: EnumerationStatus,
    /// Canonical words in ShortLex order; present iff complete.
    pub elements: Option<Vec<CoxeterWord>>,
    pub order: Option<usize>,
    pub cap: usize,
}

/// Tits' geometric representation: `W` acts on `ℝ^S` with basis the simple
/// roots, `s(v) = v - 2B(α_s, v) α_s`, `B(α_s, α_t) = -cos(π / m)` (`-1`
/// for `∞`). `ℓ(ws) > ℓ(w)` iff `w(α_s)` is a positive root. Root
/// coordinates share a sign and sum to at least 1 in absolute value, so the
/// sign test below tolerates rounding.
///
/// Matrices are row-major `n × n`, columns are images of simple roots.
struct Geometric {
    n: usize,
    /// `2B(α_s, α_t)`.
    form2: Vec<f64>,
}

impl Geometric {
    fn new(g: &CoxeterGraph) -> Geometric {
        let n = g.rank();
        let mut form2 = vec![0.0; n * n];
        for s in 0..n {
            for t in 0..n {
                form2[s * n + t] = if s == t {
                    2.0
                } else {
                    match g.label(s as Vertex, t as Vertex) {
                        Label::Infinity => -2.0,
                        Label::Finite(m) => -2.0 * libm::cos(core::f64::consts::PI / m as f64),
                    }
                };
            }
        }
        Geometric { n, form2 }
    }

    fn identity(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1.0;
        }
        m
    }

    /// `M ← R_s M`: only row `s` changes.
    fn left_reflect(&self, m: &mut [f64], s: Vertex) {
        let (n, s) = (self.n, s as usize);
        for col in 0..n {
            let dot: f64 = (0..n).map(|t| self.form2[s * n + t] * m[t * n + col]).sum();
            m[s * n + col] -= dot;
        }
    }

    /// `M ← M R_s`: column `t` loses `2B(α_s, α_t)` times column `s`.
    fn right_reflect(&self, m: &mut [f64], s: Vertex) {
        let (n, s) = (self.n, s as usize);
        let col: Vec<f64> = (0..n).map(|row| m[row * n + s]).collect();
        for t in 0..n {
            let c = self.form2[s * n + t];
            for (row, v) in col.iter().enumerate() {
                m[row * n + t] -= c * v;
            }
        }
    }

    fn column_is_negative(&self, m: &[f64], s: usize) -> bool {
        let sum: f64 = (0..self.n).map(|row| m[row * self.n + s]).sum();
        sum < 0.0
    }

    /// ShortLex-least reduced word of `y`, given the matrix of `y⁻¹`: take
    /// the least left descent `s` (`y⁻¹(α_s) < 0`) and continue with `sy`.
    fn shortlex_word(&self, mut inv: Vec<f64>) -> Vec<Vertex> {
        let mut out = Vec::new();
        while let Some(s) = (0..self.n).find(|&s| self.column_is_negative(&inv, s)) {
            out.push(s as Vertex);
            self.right_reflect(&mut inv, s as Vertex);
        }
        out
    }
}

/// Right Cayley graph of a finite Coxeter group with canonical words.
///
/// Element 0 is the identity; indices are assigned in breadth-first order,
/// so lengths are non-decreasing along the index.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    rank: usize,
    words: Vec<Vec<Vertex>>,
    right: Vec<u32>,
}

impl CayleyTable {
    /// Enumerates `W` breadth-first. Returns `Ok(None)` when more than
    /// `limits.max_elements` elements exist.
    pub fn build(g: &CoxeterGraph, limits: &Limits) -> Result<Option<CayleyTable>> {
        let geo = Geometric::new(g);
        let n = g.rank();
        const UNKNOWN: u32 = u32::MAX;
        let mut words: Vec<Vec<Vertex>> = vec![Vec::new()];
        // Matrix of x⁻¹ for every element not yet expanded.
        let mut inverses: Vec<Option<Vec<f64>>> = vec![Some(geo.identity())];
        let mut index: BTreeMap<Vec<Vertex>, u32> = BTreeMap::new();
        index.insert(Vec::new(), 0);
        let mut right = vec![UNKNOWN; n];
        let mut next = 0usize;
        while next < words.len() {
            let inv = inverses[next].take().expect("expanded once");
            for s in 0..n {
                if right[next * n + s] != UNKNOWN {
                    continue;
                }
                // Breadth-first order with symmetric filling: an unknown
                // entry means ℓ(xs) = ℓ(x) + 1.
                let mut inv_xs = inv.clone();
                geo.left_reflect(&mut inv_xs, s as Vertex);
                let w = geo.shortlex_word(inv_xs.clone());
                let j = match index.get(&w) {
                    Some(&j) => j,
                    None => {
                        if words.len() >= limits.max_elements {
                            return Ok(None);
                        }
                        let j = words.len() as u32;
                        index.insert(w.clone(), j);
                        words.push(w);
                        inverses.push(Some(inv_xs));
                        right.extend(core::iter::repeat_n(UNKNOWN, n));
                        j
                    }
                };
                right[next * n + s] = j;
                right[j as usize * n + s] = next as u32;
            }
            next += 1;
        }
        Ok(Some(CayleyTable {
            rank: n,
            words,
            right,
        }))
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn word(&self, x: usize) -> &[Vertex] {
        &self.words[x]
    }

    pub fn length(&self, x: usize) -> usize {
        self.words[x].len()
    }

    pub fn right_mul(&self, x: usize, s: Vertex) -> usize {
        self.right[x * self.rank + s as usize] as usize
    }

    /// Element represented by an arbitrary word.
    pub fn eval(&self, word: &[Vertex]) -> usize {
        word.iter().fold(0, |x, &s| self.right_mul(x, s))
    }

    pub fn generator(&self, s: Vertex) -> usize {
        self.right_mul(0, s)
    }

    /// The longest element (the last one enumerated).
    pub fn longest(&self) -> usize {
        self.words.len() - 1
    }
}

/// Breadth-first enumeration of `W` with canonical ShortLex words.
pub fn enumerate_w(g: &CoxeterGraph, cap: usize) -> Result<EnumerationResult> {
    enumerate_w_with(
        g,
        &Limits {
            max_elements: cap,
            ..Limits::default()
        },
    )
}

pub fn enumerate_w_with(g: &CoxeterGraph, limits: &Limits) -> Result<EnumerationResult> {
    let cap = limits.max_elements;
    Ok(match CayleyTable::build(g, limits)? {
        None => EnumerationResult {
            status: EnumerationStatus::Overflow,
            elements: None,
            order: None,
            cap,
        },
        Some(table) => {
            let mut elements: Vec<CoxeterWord> = table.words.into_iter().map(CoxeterWord).collect();
            elements.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            EnumerationResult {
                status: EnumerationStatus::Complete,
                order: Some(elements.len()),
                elements: Some(elements),
                cap,
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Overflow,
}

/// Least `k ≥ 1` with `w^k = 1`, searching up to `cap` powers.
pub fn order_in_w(g: &CoxeterGraph, w: &CoxeterWord, cap: u64) -> Result<Order> {
    let rw = Rewriter::new(g, &Limits::default());
    let mut power = rw.reduce(&w.0)?;
    let mut k = 1;
    while !power.is_empty() {
        if k >= cap {
            return Ok(Order::Overflow);
        }
        for &s in &w.0 {
            power = rw.multiply(&power, s)?;
        }
        k += 1;
    }
    Ok(Order::Finite(k))
}

/// Order of the Coxeter element `s₁ ⋯ sₙ` taken in declaration order.
pub fn coxeter_number(g: &CoxeterGraph) -> Result<u64> {
    let order: Vec<Vertex> = (0..g.rank() as Vertex).collect();
    coxeter_number_for_ordering(g, &order)
}

/// Order of the product of all generators in the given ordering.
pub fn coxeter_number_for_ordering(g: &CoxeterGraph, ordering: &[Vertex]) -> Result<u64> {
    let all = g.vertices();
    if classify_set(g, all).components.len() != 1 {
        return Err(Error::NotConnected);
    }
    if !is_spherical_set(g, all) {
        return Err(Error::NotSpherical);
    }
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if sorted != (0..g.rank() as Vertex).collect::<Vec<_>>() {
        return Err(Error::InvalidBraidWord(
            "ordering is not a permutation of the vertices",
        ));
    }
    match order_in_w(g, &CoxeterWord(ordering.to_vec()), 1000)? {
        Order::Finite(h) => Ok(h),
        Order::Overflow => Err(Error::ResourceLimit {
            what: "Coxeter element order",
            limit: 1000,
        }),
    }
}
