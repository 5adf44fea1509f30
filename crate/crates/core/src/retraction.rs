//! Set-theoretic retraction `π_V : A → A_V` onto a standard parabolic
//! subgroup.
//!
//! Walk the word while tracking the minimal representative `r` of the coset
//! `W_V · ū` of the prefix image `ū ∈ W`. For the next letter `σ_s^ε`, either
//! `t = r s r⁻¹` is a generator in `V` (then `σ_t^ε` is emitted and `r` is
//! unchanged), or `rs` is again a minimal coset representative. The emitted
//! word depends only on the element of `A`, and equals the input element
//! when it lies in `A_V`. So `w ∈ A_V` iff `w · π_V(w)⁻¹ = 1`, which turns
//! membership into a word problem.

use alloc::vec::Vec;

use crate::coxeter::Rewriter;
use crate::error::Result;
use crate::graph::{CoxeterGraph, VertexSet};
use crate::word::{GroupWord, Letter};
use crate::Limits;

pub fn retraction(
    g: &CoxeterGraph,
    w: &GroupWord,
    v: VertexSet,
    limits: &Limits,
) -> Result<GroupWord> {
    let rw = Rewriter::new(g, limits);
    let mut rep = Vec::new();
    let mut out = Vec::new();
    for &l in &w.0 {
        let s = l.vertex;
        let mut conj = rep.clone();
        conj.push(s);
        conj.extend(rep.iter().rev());
        let t = rw.reduce(&conj)?;
        match t[..] {
            [t] if v.contains(t) => out.push(Letter {
                vertex: t,
                sign: l.sign,
            }),
            _ => rep = rw.multiply(&rep, s)?,
        }
    }
    Ok(GroupWord(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::GarsideGroup;
    use crate::graph::Label::*;

    #[test]
    fn identity_on_parabolic_words() {
        let g = CoxeterGraph::from_edges(
            &["s", "t", "u"],
            &[("s", "t", Finite(3)), ("t", "u", Finite(4))],
        )
        .unwrap();
        let w = GroupWord::parse(&g, "s t^-1 s t").unwrap();
        let r = retraction(&g, &w, VertexSet(0b011), &Limits::default()).unwrap();
        assert_eq!(r, w);
    }

    #[test]
    fn braid_relation_sides_agree() {
        let g = CoxeterGraph::from_edges(&["s", "t"], &[("s", "t", Finite(3))]).unwrap();
        let a = GroupWord::parse(&g, "s t s").unwrap();
        let b = GroupWord::parse(&g, "t s t").unwrap();
        let x = VertexSet(0b01);
        let ra = retraction(&g, &a, x, &Limits::default()).unwrap();
        let rb = retraction(&g, &b, x, &Limits::default()).unwrap();
        let grp = GarsideGroup::of_graph(&g, &Limits::default()).unwrap();
        assert!(grp.equal(&ra, &rb).unwrap());
        assert_eq!(ra, GroupWord::parse(&g, "s").unwrap());
    }

    #[test]
    fn free_cancellation_is_respected() {
        let g = CoxeterGraph::from_edges(&["s", "t"], &[("s", "t", Infinity)]).unwrap();
        let w = GroupWord::parse(&g, "t s t^-1 s^-1 s t s^-1 t^-1").unwrap();
        let r = retraction(&g, &w, VertexSet(0b01), &Limits::default()).unwrap();
        assert!(r.freely_reduced().is_empty());
    }
}
