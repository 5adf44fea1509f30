//! Words in the Artin generators `σ_s` and their inverses.
//!
//! Text notation: whitespace separated tokens `s` (for `σ_s`) and `s^-1`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: Vertex,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(vertex: Vertex) -> Letter {
        Letter {
            vertex,
            sign: Sign::Pos,
        }
    }

    pub fn neg(vertex: Vertex) -> Letter {
        Letter {
            vertex,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            vertex: self.vertex,
            sign: self.sign.flip(),
        }
    }
}

/// A word over `Σ ⊔ Σ⁻¹`, with vertex indices of an ambient graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn new() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn parse(g: &CoxeterGraph, text: &str) -> Result<GroupWord> {
        text.split_whitespace()
            .map(|tok| {
                let (name, sign) = match tok.strip_suffix("^-1") {
                    Some(name) => (name, Sign::Neg),
                    None => (tok, Sign::Pos),
                };
                if name.is_empty() || name.contains('^') {
                    return Err(Error::InvalidToken(tok.to_string()));
                }
                Ok(Letter {
                    vertex: g.vertex(name)?,
                    sign,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }

    pub fn display(&self, g: &CoxeterGraph) -> String {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => g.name(l.vertex).to_string(),
                Sign::Neg => alloc::format!("{}^-1", g.name(l.vertex)),
            })
            .collect();
        toks.join(" ")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Formal inverse: reversed, with every sign flipped.
    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupWord(v)
    }

    /// Set of vertices occurring in the word.
    pub fn letters(&self) -> VertexSet {
        self.0.iter().map(|l| l.vertex).collect()
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn freely_reduced(&self) -> GroupWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord(out)
    }

    /// `(s, 1)` / `(s, -1)` pairs, handy for building words in tests.
    pub fn from_signed(letters: &[(Vertex, i8)]) -> GroupWord {
        GroupWord(
            letters
                .iter()
                .map(|&(v, e)| {
                    if e > 0 {
                        Letter::pos(v)
                    } else {
                        Letter::neg(v)
                    }
                })
                .collect(),
        )
    }
}

impl From<&PositiveWord> for GroupWord {
    fn from(p: &PositiveWord) -> GroupWord {
        GroupWord(p.0.iter().map(|&v| Letter::pos(v)).collect())
    }
}

/// A word in the positive generators only; an element of the monoid `A⁺`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord(pub Vec<Vertex>);

impl PositiveWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display(&self, g: &CoxeterGraph) -> String {
        GroupWord::from(self).display(g)
    }

    /// `σ` word with every letter inverted and the order reversed.
    pub fn inverse(&self) -> GroupWord {
        GroupWord::from(self).inverse()
    }

    pub fn pow(&self, k: usize) -> PositiveWord {
        PositiveWord(self.0.repeat(k))
    }
}

/// Set of letters of a positive word. Both sides of every defining relation
/// use the same two letters, so this depends only on the monoid element.
pub fn support(w: &PositiveWord) -> VertexSet {
    w.0.iter().copied().collect()
}
