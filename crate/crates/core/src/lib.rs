//! Computations with Artin-Tits groups given by Coxeter graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`graph`]: Coxeter graphs, induced subgraphs and connected components.
//! * [`classify`]: spherical / FC / large / 2-dimensional flags, backed by the
//!   finite-type [`catalog`].
//! * [`coxeter`]: exact arithmetic in the Coxeter group via braid-move
//!   rewriting, plus brute-force enumeration.
//! * [`garside`]: left-greedy normal forms for spherical types, the Garside
//!   element, centre generators and parabolic membership.
//! * [`amalgam`]: splitting along `∞` edges, syllabic reduction in the
//!   resulting amalgamated products, and the recursive word problem.
//! * [`structure`]: centre descriptions and torsion-freeness certificates as
//!   checkable derivation trees.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod amalgam;
pub mod catalog;
pub mod classify;
pub mod coxeter;
mod error;
pub mod garside;
pub mod graph;
pub mod known_results;
pub mod retraction;
pub mod structure;
pub mod word;

pub use amalgam::{decomposition_tree, DecompositionTree, SplitPolicy, WordProblemSolver};
pub use classify::{classify, ClassificationReport};
pub use error::{Error, Result};
pub use graph::{CoxeterGraph, GraphBuilder, Label, Vertex, VertexSet};
pub use word::{GroupWord, Letter, PositiveWord, Sign};

/// Resource limits shared by the rewriting, enumeration and normal-form code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of Coxeter group elements enumerated for one group.
    pub max_elements: usize,
    /// Maximum number of words visited by a single braid-move closure.
    pub max_words: usize,
    /// Maximum number of letters in an input group word.
    pub max_word_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 200_000,
            max_words: 1_000_000,
            max_word_len: 64,
        }
    }
}
