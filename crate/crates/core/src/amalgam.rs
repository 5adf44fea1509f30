//! Splitting along `∞` edges and the word problem in the resulting
//! amalgamated products.
//!
//! If `m(s, t) = ∞`, then with `X = S∖{s}`, `Y = S∖{t}` and `Z = S∖{s,t}`
//! the presentation of `A` exhibits it as `A_X ∗_{A_Z} A_Y`. Splitting
//! repeatedly gives a [`DecompositionTree`] whose leaves are free of
//! infinity. Elements of an amalgam are handled as syllabic expressions
//! (sequences of factor words) and reduced with three kinds of steps:
//!
//! * delete a trivial syllable;
//! * merge two adjacent syllables of the same factor;
//! * rewrite a syllable lying in `A_Z` over `Σ_Z` and merge it into a
//!   neighbour of the other factor.
//!
//! A reduced expression is empty iff the element is trivial, and its length
//! does not depend on the order of the steps.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::is_spherical_set;
use crate::error::{Error, Result};
use crate::garside::GarsideGroup;
use crate::graph::{CoxeterGraph, Vertex, VertexSet};
use crate::retraction::retraction;
use crate::word::GroupWord;
use crate::Limits;

/// Which `∞` edge to split on when several exist.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitPolicy {
    /// Lexicographically smallest `(s, t)` in vertex declaration order.
    #[default]
    First,
    /// Lexicographically largest.
    Last,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf {
        vertices: VertexSet,
    },
    Node {
        vertices: VertexSet,
        /// `(s, t)` with `m(s, t) = ∞` and `s` before `t`.
        edge: (Vertex, Vertex),
        x: VertexSet,
        y: VertexSet,
        z: VertexSet,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn vertices(&self) -> VertexSet {
        match self {
            DecompositionTree::Leaf { vertices } | DecompositionTree::Node { vertices, .. } => {
                *vertices
            }
        }
    }

    /// Leaf vertex sets, left to right.
    pub fn leaves(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<VertexSet>) {
        match self {
            DecompositionTree::Leaf { vertices } => out.push(*vertices),
            DecompositionTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, DecompositionTree::Leaf { .. })
    }
}

pub fn decomposition_tree(g: &CoxeterGraph) -> DecompositionTree {
    decomposition_tree_with(g, g.vertices(), SplitPolicy::First)
}

pub fn decomposition_tree_with(
    g: &CoxeterGraph,
    set: VertexSet,
    policy: SplitPolicy,
) -> DecompositionTree {
    let mut edges = g
        .infinite_edges()
        .filter(|&(s, t)| set.contains(s) && set.contains(t));
    let edge = match policy {
        SplitPolicy::First => edges.next(),
        SplitPolicy::Last => edges.last(),
    };
    match edge {
        None => DecompositionTree::Leaf { vertices: set },
        Some((s, t)) => {
            let (x, y) = (set.without(s), set.without(t));
            DecompositionTree::Node {
                vertices: set,
                edge: (s, t),
                x,
                y,
                z: x.intersection(y),
                left: Box::new(decomposition_tree_with(g, x, policy)),
                right: Box::new(decomposition_tree_with(g, y, policy)),
            }
        }
    }
}

/// Factor of an amalgam `A_X ∗_{A_Z} A_Y`: `Left` is `A_X`, `Right` is `A_Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Left,
    Right,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::Left => Factor::Right,
            Factor::Right => Factor::Left,
        }
    }

    /// `1` for `A_X`, `2` for `A_Y`.
    pub fn tag(self) -> u8 {
        match self {
            Factor::Left => 1,
            Factor::Right => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syllable {
    pub word: GroupWord,
    pub factor: Factor,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SyllabicExpression {
    pub syllables: Vec<Syllable>,
}

/// One elementary reduction, with indices into the expression as it was
/// before the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Type I: syllable `index` is trivial and is deleted.
    DeleteTrivial { index: usize },
    /// Type II: syllables `index` and `index + 1` share a factor.
    Merge { index: usize },
    /// Syllable `index` lies in the amalgamated subgroup; `rewritten` spells
    /// it over `Σ_Z` and it is merged into syllable `into`.
    Crossing {
        index: usize,
        into: usize,
        rewritten: GroupWord,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedForm {
    pub syllables: Vec<Syllable>,
    pub trace: Vec<ReductionStep>,
    /// No elementary reduction applies to `syllables`.
    pub reduced: bool,
}

impl ReducedForm {
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// Order in which the reduction engine looks for applicable steps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost applicable step; crossings merge rightward when possible.
    #[default]
    Leftmost,
    /// Rightmost applicable step; crossings merge leftward when possible.
    Rightmost,
}

/// Word problem and amalgamated-subgroup membership in the two factors.
pub trait AmalgamOracle {
    fn is_trivial(&self, factor: Factor, w: &GroupWord) -> Result<bool>;

    /// A word over `Σ_Z` equal to `w` if `w` lies in the amalgamated
    /// subgroup, `None` otherwise.
    fn amalgamated_rewrite(&self, factor: Factor, w: &GroupWord) -> Result<Option<GroupWord>>;
}

struct Slot {
    syl: Syllable,
    trivial: Option<bool>,
    in_k: Option<Option<GroupWord>>,
}

impl Slot {
    fn new(syl: Syllable) -> Slot {
        Slot {
            syl,
            trivial: None,
            in_k: None,
        }
    }

    fn trivial(&mut self, oracle: &dyn AmalgamOracle) -> Result<bool> {
        if self.trivial.is_none() {
            self.trivial = Some(oracle.is_trivial(self.syl.factor, &self.syl.word)?);
        }
        Ok(self.trivial == Some(true))
    }

    fn in_k(&mut self, oracle: &dyn AmalgamOracle) -> Result<Option<GroupWord>> {
        if self.in_k.is_none() {
            self.in_k = Some(oracle.amalgamated_rewrite(self.syl.factor, &self.syl.word)?);
        }
        Ok(self.in_k.clone().flatten())
    }
}

/// Reduces `expr` to a reduced syllabic expression.
pub fn reduce_syllabic(
    expr: SyllabicExpression,
    oracle: &dyn AmalgamOracle,
    strategy: Strategy,
) -> Result<ReducedForm> {
    let mut slots: Vec<Slot> = expr.syllables.into_iter().map(Slot::new).collect();
    let mut trace = Vec::new();
    while let Some(step) = find_step(&mut slots, oracle, strategy)? {
        apply_step(&mut slots, &step);
        trace.push(step);
    }
    Ok(ReducedForm {
        syllables: slots.into_iter().map(|s| s.syl).collect(),
        trace,
        reduced: true,
    })
}

fn find_step(
    slots: &mut [Slot],
    oracle: &dyn AmalgamOracle,
    strategy: Strategy,
) -> Result<Option<ReductionStep>> {
    let n = slots.len();
    let order: Vec<usize> = match strategy {
        Strategy::Leftmost => (0..n).collect(),
        Strategy::Rightmost => (0..n).rev().collect(),
    };
    for i in order {
        if slots[i].trivial(oracle)? {
            return Ok(Some(ReductionStep::DeleteTrivial { index: i }));
        }
        let partner = match strategy {
            Strategy::Leftmost => (i + 1 < n).then(|| i + 1),
            Strategy::Rightmost => i.checked_sub(1),
        };
        if let Some(j) = partner {
            if slots[j].syl.factor == slots[i].syl.factor {
                return Ok(Some(ReductionStep::Merge { index: i.min(j) }));
            }
        }
        if n >= 2 {
            if let Some(rewritten) = slots[i].in_k(oracle)? {
                let right = (i + 1 < n).then(|| i + 1);
                let left = i.checked_sub(1);
                let into = match strategy {
                    Strategy::Leftmost => right.or(left),
                    Strategy::Rightmost => left.or(right),
                }
                .expect("n >= 2");
                return Ok(Some(ReductionStep::Crossing {
                    index: i,
                    into,
                    rewritten,
                }));
            }
        }
    }
    Ok(None)
}

fn apply_step(slots: &mut Vec<Slot>, step: &ReductionStep) {
    match *step {
        ReductionStep::DeleteTrivial { index } => {
            slots.remove(index);
        }
        ReductionStep::Merge { index } => {
            let next = slots.remove(index + 1);
            let cur = &mut slots[index];
            let word = cur.syl.word.concat(&next.syl.word);
            *cur = Slot::new(Syllable {
                word,
                factor: cur.syl.factor,
            });
        }
        ReductionStep::Crossing {
            index,
            into,
            ref rewritten,
        } => {
            let target = &slots[into].syl;
            let word = if into > index {
                rewritten.concat(&target.word)
            } else {
                target.word.concat(rewritten)
            };
            slots[into] = Slot::new(Syllable {
                word,
                factor: target.factor,
            });
            slots.remove(index);
        }
    }
}

fn describe(g: &CoxeterGraph, set: VertexSet) -> String {
    g.format_set(set)
}

/// Word problem and parabolic membership for graphs whose decomposition
/// leaves are all spherical.
#[derive(Clone, Debug)]
pub struct WordProblemSolver {
    graph: CoxeterGraph,
    tree: DecompositionTree,
    leaves: BTreeMap<VertexSet, GarsideGroup>,
    limits: Limits,
    strategy: Strategy,
}

struct NodeOracle<'a> {
    solver: &'a WordProblemSolver,
    left: &'a DecompositionTree,
    right: &'a DecompositionTree,
    z: VertexSet,
}

impl AmalgamOracle for NodeOracle<'_> {
    fn is_trivial(&self, factor: Factor, w: &GroupWord) -> Result<bool> {
        self.solver.trivial_at(self.child(factor), w)
    }

    fn amalgamated_rewrite(&self, factor: Factor, w: &GroupWord) -> Result<Option<GroupWord>> {
        self.solver.member_at(self.child(factor), w, self.z)
    }
}

impl NodeOracle<'_> {
    fn child(&self, factor: Factor) -> &DecompositionTree {
        match factor {
            Factor::Left => self.left,
            Factor::Right => self.right,
        }
    }
}

impl WordProblemSolver {
    pub fn new(g: &CoxeterGraph, limits: &Limits) -> Result<WordProblemSolver> {
        Self::with_options(g, SplitPolicy::First, Strategy::Leftmost, limits)
    }

    /// Builds the decomposition and a Garside solver for every leaf. Fails
    /// with `UnsupportedBaseCase` if some leaf is not spherical.
    pub fn with_options(
        g: &CoxeterGraph,
        policy: SplitPolicy,
        strategy: Strategy,
        limits: &Limits,
    ) -> Result<WordProblemSolver> {
        let tree = decomposition_tree_with(g, g.vertices(), policy);
        let mut leaves = BTreeMap::new();
        for leaf in tree.leaves() {
            if leaves.contains_key(&leaf) {
                continue;
            }
            if !is_spherical_set(g, leaf) {
                return Err(Error::UnsupportedBaseCase {
                    leaf: describe(g, leaf),
                });
            }
            leaves.insert(leaf, GarsideGroup::new(g, leaf, limits)?);
        }
        Ok(WordProblemSolver {
            graph: g.clone(),
            tree,
            leaves,
            limits: *limits,
            strategy,
        })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn tree(&self) -> &DecompositionTree {
        &self.tree
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> WordProblemSolver {
        self.strategy = strategy;
        self
    }

    fn check_input(&self, w: &GroupWord) -> Result<()> {
        if w.len() > self.limits.max_word_len {
            return Err(Error::ResourceLimit {
                what: "input word length",
                limit: self.limits.max_word_len,
            });
        }
        if !w.letters().is_subset(self.graph.vertices()) {
            return Err(Error::UnknownVertex(alloc::format!("{:?}", w.letters())));
        }
        Ok(())
    }

    pub fn is_trivial(&self, w: &GroupWord) -> Result<bool> {
        self.check_input(w)?;
        self.trivial_at(&self.tree, w)
    }

    pub fn equal(&self, a: &GroupWord, b: &GroupWord) -> Result<bool> {
        self.check_input(a)?;
        self.check_input(b)?;
        self.trivial_at(&self.tree, &a.concat(&b.inverse()))
    }

    /// Reduced form of `w` in the top-level amalgam; `None` if the graph is
    /// free of infinity (no splitting).
    pub fn reduce(&self, w: &GroupWord) -> Result<Option<ReducedForm>> {
        self.check_input(w)?;
        self.reduce_expression(syllabify(&self.tree, w, Factor::Left))
    }

    /// Reduces an explicit syllabic expression at the root node.
    pub fn reduce_expression(&self, expr: SyllabicExpression) -> Result<Option<ReducedForm>> {
        match &self.tree {
            DecompositionTree::Leaf { .. } => Ok(None),
            node => self.reduce_at(node, expr, self.strategy).map(Some),
        }
    }

    /// Membership in the standard parabolic `A_V`, with a word over `Σ_V`.
    pub fn member_rewrite(&self, w: &GroupWord, v: VertexSet) -> Result<Option<GroupWord>> {
        self.check_input(w)?;
        if !v.is_subset(self.graph.vertices()) {
            return Err(Error::UnknownVertex(alloc::format!("{v:?}")));
        }
        self.member_at(&self.tree, w, v)
    }

    fn leaf(&self, set: VertexSet) -> &GarsideGroup {
        &self.leaves[&set]
    }

    fn reduce_at(
        &self,
        node: &DecompositionTree,
        expr: SyllabicExpression,
        strategy: Strategy,
    ) -> Result<ReducedForm> {
        let DecompositionTree::Node { left, right, z, .. } = node else {
            unreachable!("reduce_at on a leaf")
        };
        let oracle = NodeOracle {
            solver: self,
            left,
            right,
            z: *z,
        };
        reduce_syllabic(expr, &oracle, strategy)
    }

    fn trivial_at(&self, node: &DecompositionTree, w: &GroupWord) -> Result<bool> {
        let w = w.freely_reduced();
        if w.is_empty() {
            return Ok(true);
        }
        match node {
            DecompositionTree::Leaf { vertices } => self.leaf(*vertices).is_trivial(&w),
            _ => Ok(self
                .reduce_at(node, syllabify(node, &w, Factor::Left), self.strategy)?
                .is_empty()),
        }
    }

    fn member_at(
        &self,
        node: &DecompositionTree,
        w: &GroupWord,
        v: VertexSet,
    ) -> Result<Option<GroupWord>> {
        if w.letters().is_subset(v) {
            return Ok(Some(w.clone()));
        }
        let (edge, x, y, z, left, right) = match node {
            DecompositionTree::Leaf { vertices } => {
                return self.leaf(*vertices).member_rewrite(w, v);
            }
            DecompositionTree::Node {
                edge,
                x,
                y,
                z,
                left,
                right,
                ..
            } => (*edge, *x, *y, *z, left, right),
        };
        let (s, t) = edge;
        let candidate = if v.contains(s) && v.contains(t) {
            // A_V splits along the same edge; use the retraction onto A_V
            // and let the word problem decide.
            let r = retraction(&self.graph, w, v, &self.limits)?;
            if self.trivial_at(node, &w.concat(&r.inverse()))? {
                Some(r)
            } else {
                None
            }
        } else {
            // A_V lies in one factor, so members have reduced length ≤ 1.
            let (home, home_child, away_child) = if v.is_subset(x) {
                (Factor::Left, &**left, &**right)
            } else {
                debug_assert!(v.is_subset(y));
                (Factor::Right, &**right, &**left)
            };
            let reduced = self.reduce_at(node, syllabify(node, w, Factor::Left), self.strategy)?;
            match reduced.syllables.as_slice() {
                [] => Some(GroupWord::new()),
                [only] if only.factor == home => self.member_at(home_child, &only.word, v)?,
                [only] => match self.member_at(away_child, &only.word, z)? {
                    Some(u) => self.member_at(home_child, &u, v)?,
                    None => None,
                },
                _ => None,
            }
        };
        if let Some(r) = &candidate {
            if !r.letters().is_subset(v) || !self.trivial_at(node, &w.concat(&r.inverse()))? {
                return Err(Error::VerificationFailed(
                    "parabolic rewrite differs from input",
                ));
            }
        }
        Ok(candidate)
    }
}

/// Single-letter syllables; letters of `Z` go to `z_factor`.
pub fn syllabify(node: &DecompositionTree, w: &GroupWord, z_factor: Factor) -> SyllabicExpression {
    syllabify_by(node, w, |_| z_factor)
}

/// Single-letter syllables; the factor of the `i`-th letter, when it lies
/// in `Z`, is chosen by `z_factor(i)`.
pub fn syllabify_by(
    node: &DecompositionTree,
    w: &GroupWord,
    z_factor: impl Fn(usize) -> Factor,
) -> SyllabicExpression {
    let DecompositionTree::Node { x, z, .. } = node else {
        return SyllabicExpression {
            syllables: Vec::from([Syllable {
                word: w.clone(),
                factor: Factor::Left,
            }]),
        };
    };
    SyllabicExpression {
        syllables: w
            .0
            .iter()
            .enumerate()
            .map(|(i, &l)| Syllable {
                word: GroupWord(Vec::from([l])),
                factor: if z.contains(l.vertex) {
                    z_factor(i)
                } else if x.contains(l.vertex) {
                    Factor::Left
                } else {
                    Factor::Right
                },
            })
            .collect(),
    }
}

/// Does `w` represent the identity? Requires every decomposition leaf to be
/// spherical.
pub fn is_trivial(g: &CoxeterGraph, w: &GroupWord) -> Result<bool> {
    WordProblemSolver::new(g, &Limits::default())?.is_trivial(w)
}

pub fn member_rewrite(g: &CoxeterGraph, w: &GroupWord, v: VertexSet) -> Result<Option<GroupWord>> {
    WordProblemSolver::new(g, &Limits::default())?.member_rewrite(w, v)
}
