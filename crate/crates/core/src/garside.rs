//! Spherical-type Artin-Tits groups through their Garside structure.
//!
//! Simple elements are the elements of the finite Coxeter group `W`, each
//! represented by its canonical reduced word (read as a positive Artin word).
//! The Cayley table of `W` gives products and descent sets:
//!
//! * `x · y` is simple with `ℓ(xy) = ℓ(x) + ℓ(y)` exactly when lengths add;
//! * a pair `(x, y)` is left-weighted iff `L(y) ⊆ R(x)`;
//! * `Δ` lifts the longest element `w₀`, and `τ(x) = Δ x Δ⁻¹` is conjugation
//!   by `w₀`.
//!
//! Every element has a unique left-greedy normal form `Δ^k x₁ ⋯ x_r` with
//! `1 ≠ x_i ≠ Δ` and each pair `(x_i, x_{i+1})` left-weighted.

use alloc::vec;
use alloc::vec::Vec;

use crate::classify::is_spherical_set;
use crate::coxeter::{coxeter_number, CayleyTable};
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Vertex, VertexSet};
use crate::word::{support, GroupWord, Letter, PositiveWord, Sign};
use crate::Limits;

/// Left-greedy normal form with factors spelled in ambient vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub infimum: i64,
    pub factors: Vec<PositiveWord>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }
}

/// `negative⁻¹ · positive`, left-coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NpPair {
    pub negative: PositiveWord,
    pub positive: PositiveWord,
}

impl NpPair {
    pub fn to_word(&self) -> GroupWord {
        self.negative
            .inverse()
            .concat(&GroupWord::from(&self.positive))
    }
}

// Internal normal form over simple-element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Nf {
    inf: i64,
    factors: Vec<usize>,
}

/// The spherical-type Artin-Tits group of the full subgraph on a vertex set.
#[derive(Clone, Debug)]
pub struct GarsideGroup {
    set: VertexSet,
    global: Vec<Vertex>,
    local: [u8; 64],
    table: CayleyTable,
    left: Vec<u32>,
    right_desc: Vec<u64>,
    left_desc: Vec<u64>,
    tau: Vec<u32>,
    delta: usize,
}

const NOT_LOCAL: u8 = u8::MAX;

impl GarsideGroup {
    pub fn new(g: &CoxeterGraph, set: VertexSet, limits: &Limits) -> Result<GarsideGroup> {
        if !set.is_subset(g.vertices()) {
            return Err(Error::UnknownVertex(alloc::format!("{set:?}")));
        }
        if !is_spherical_set(g, set) {
            return Err(Error::NotSpherical);
        }
        let sub = g.induced_subgraph(set)?;
        let table = CayleyTable::build(&sub, limits)?.ok_or(Error::ResourceLimit {
            what: "Coxeter group elements",
            limit: limits.max_elements,
        })?;
        let k = sub.rank();
        let order = table.order();
        let global: Vec<Vertex> = set.iter().collect();
        let mut local = [NOT_LOCAL; 64];
        for (i, &v) in global.iter().enumerate() {
            local[v as usize] = i as u8;
        }

        let mut left = vec![0u32; order * k];
        let mut right_desc = vec![0u64; order];
        let mut left_desc = vec![0u64; order];
        for x in 0..order {
            let lx = table.length(x);
            for s in 0..k as Vertex {
                let sx = table.eval(&[&[s][..], table.word(x)].concat());
                left[x * k + s as usize] = sx as u32;
                if table.length(sx) < lx {
                    left_desc[x] |= 1 << s;
                }
                if table.length(table.right_mul(x, s)) < lx {
                    right_desc[x] |= 1 << s;
                }
            }
        }
        let delta = table.longest();
        let tau = (0..order)
            .map(|x| {
                let w0 = table.word(delta);
                let conj = [w0, table.word(x), w0].concat();
                table.eval(&conj) as u32
            })
            .collect();
        Ok(GarsideGroup {
            set,
            global,
            local,
            table,
            left,
            right_desc,
            left_desc,
            tau,
            delta,
        })
    }

    /// Group of the whole graph.
    pub fn of_graph(g: &CoxeterGraph, limits: &Limits) -> Result<GarsideGroup> {
        GarsideGroup::new(g, g.vertices(), limits)
    }

    pub fn vertices(&self) -> VertexSet {
        self.set
    }

    fn rank(&self) -> usize {
        self.global.len()
    }

    fn local_of(&self, v: Vertex) -> Result<Vertex> {
        match self.local.get(v as usize) {
            Some(&l) if l != NOT_LOCAL => Ok(l),
            _ => Err(Error::UnknownVertex(alloc::format!("#{v}"))),
        }
    }

    fn right(&self, x: usize, s: Vertex) -> usize {
        self.table.right_mul(x, s)
    }

    fn left(&self, x: usize, s: Vertex) -> usize {
        self.left[x * self.rank() + s as usize] as usize
    }

    /// Rewrites `(a, b)` until `L(b) ⊆ R(a)`. Returns whether anything moved.
    fn left_weight(&self, a: &mut usize, b: &mut usize) -> bool {
        let mut moved = false;
        loop {
            let bad = self.left_desc[*b] & !self.right_desc[*a];
            if bad == 0 {
                return moved;
            }
            let s = bad.trailing_zeros() as Vertex;
            *a = self.right(*a, s);
            *b = self.left(*b, s);
            moved = true;
        }
    }

    fn push_simple(&self, nf: &mut Nf, b: usize) {
        if b == 0 {
            return;
        }
        nf.factors.push(b);
        loop {
            let mut moved = false;
            for i in (1..nf.factors.len()).rev() {
                let (head, tail) = nf.factors.split_at_mut(i);
                moved |= self.left_weight(&mut head[i - 1], &mut tail[0]);
            }
            if !moved {
                break;
            }
        }
        let deltas = nf.factors.iter().take_while(|&&x| x == self.delta).count();
        nf.factors.drain(..deltas);
        nf.inf += deltas as i64;
        while nf.factors.last() == Some(&0) {
            nf.factors.pop();
        }
    }

    fn apply_tau(&self, nf: &mut Nf) {
        for f in nf.factors.iter_mut() {
            *f = self.tau[*f] as usize;
        }
    }

    fn mul_letter(&self, nf: &mut Nf, l: Letter) -> Result<()> {
        let s = self.local_of(l.vertex)?;
        match l.sign {
            Sign::Pos => self.push_simple(nf, self.table.generator(s)),
            Sign::Neg => {
                // σ_s⁻¹ = x_s Δ⁻¹ with x_s = s·w₀, hence
                // Δ^k A σ_s⁻¹ = Δ^(k-1) τ(A) τ(x_s).
                let x_s = self.left(self.delta, s);
                self.apply_tau(nf);
                self.push_simple(nf, self.tau[x_s] as usize);
                nf.inf -= 1;
            }
        }
        Ok(())
    }

    fn nf_of(&self, w: &GroupWord) -> Result<Nf> {
        let mut nf = Nf {
            inf: 0,
            factors: Vec::new(),
        };
        for &l in &w.0 {
            self.mul_letter(&mut nf, l)?;
        }
        Ok(nf)
    }

    fn global_word(&self, x: usize) -> PositiveWord {
        PositiveWord(
            self.table
                .word(x)
                .iter()
                .map(|&s| self.global[s as usize])
                .collect(),
        )
    }

    fn export(&self, nf: &Nf) -> NormalForm {
        NormalForm {
            infimum: nf.inf,
            factors: nf.factors.iter().map(|&x| self.global_word(x)).collect(),
        }
    }

    /// Positive word of an internal form with nonnegative infimum.
    fn positive_word(&self, nf: &Nf) -> PositiveWord {
        debug_assert!(nf.inf >= 0);
        let delta = self.global_word(self.delta);
        let mut out = delta.pow(nf.inf as usize).0;
        for &f in &nf.factors {
            out.extend(self.global_word(f).0);
        }
        PositiveWord(out)
    }

    pub fn normal_form(&self, w: &GroupWord) -> Result<NormalForm> {
        Ok(self.export(&self.nf_of(w)?))
    }

    pub fn is_trivial(&self, w: &GroupWord) -> Result<bool> {
        let nf = self.nf_of(w)?;
        Ok(nf.inf == 0 && nf.factors.is_empty())
    }

    pub fn equal(&self, a: &GroupWord, b: &GroupWord) -> Result<bool> {
        Ok(self.nf_of(a)? == self.nf_of(b)?)
    }

    /// The Garside element `Δ`: canonical reduced word of `w₀`.
    pub fn delta(&self) -> PositiveWord {
        self.global_word(self.delta)
    }

    /// Left-coprime `w = n⁻¹ p`.
    pub fn np_decompose(&self, w: &GroupWord) -> Result<NpPair> {
        let nf = self.nf_of(w)?;
        if nf.inf >= 0 {
            return Ok(NpPair {
                negative: PositiveWord::default(),
                positive: self.positive_word(&nf),
            });
        }
        let mut n = Nf {
            inf: -nf.inf,
            factors: Vec::new(),
        };
        let mut p = Nf {
            inf: 0,
            factors: nf.factors,
        };
        // A nontrivial common simple divisor has a generator as a divisor,
        // so cancelling common generator divisors makes the pair coprime.
        while let Some(s) = (0..self.rank() as Vertex)
            .find(|&s| self.left_divisible(&n, s) && self.left_divisible(&p, s))
        {
            n = self.left_cancel(&n, s)?;
            p = self.left_cancel(&p, s)?;
        }
        Ok(NpPair {
            negative: self.positive_word(&n),
            positive: self.positive_word(&p),
        })
    }

    /// Does the local generator `s` left-divide the positive element?
    fn left_divisible(&self, nf: &Nf, s: Vertex) -> bool {
        nf.inf > 0
            || nf
                .factors
                .first()
                .is_some_and(|&f| self.left_desc[f] >> s & 1 == 1)
    }

    fn left_cancel(&self, nf: &Nf, s: Vertex) -> Result<Nf> {
        let mut word = vec![Letter::neg(self.global[s as usize])];
        word.extend(GroupWord::from(&self.positive_word(nf)).0);
        self.nf_of(&GroupWord(word))
    }

    /// Membership in the standard parabolic subgroup `A_X`, with a word over
    /// `Σ_X` on success. `w ∈ A_X` iff both parts of its left-coprime
    /// decomposition are positive words over `Σ_X`.
    pub fn member_rewrite(&self, w: &GroupWord, x: VertexSet) -> Result<Option<GroupWord>> {
        if !x.is_subset(self.set) {
            return Err(Error::UnknownVertex(alloc::format!("{x:?}")));
        }
        let np = self.np_decompose(w)?;
        if !(support(&np.negative).is_subset(x) && support(&np.positive).is_subset(x)) {
            return Ok(None);
        }
        let rewritten = np.to_word();
        if !self.is_trivial(&w.concat(&rewritten.inverse()))? {
            return Err(Error::VerificationFailed(
                "parabolic rewrite differs from input",
            ));
        }
        Ok(Some(rewritten))
    }

    /// Generator of the centre for a connected group: `Δ` when it commutes
    /// with every generator, otherwise `(σ₁ ⋯ σₙ)^h = Δ²`.
    pub fn center_generator(&self, g: &CoxeterGraph) -> Result<PositiveWord> {
        if g.components_of(self.set).len() != 1 {
            return Err(Error::NotConnected);
        }
        let delta = self.delta();
        if self.commutes_with_generators(&delta)? {
            return Ok(delta);
        }
        let h = coxeter_number(&g.induced_subgraph(self.set)?)?;
        let cox = PositiveWord(self.global.clone());
        let z = cox.pow(h as usize);
        if !self.commutes_with_generators(&z)? {
            return Err(Error::VerificationFailed("(σ₁⋯σₙ)^h is not central"));
        }
        Ok(z)
    }

    pub fn commutes_with_generators(&self, z: &PositiveWord) -> Result<bool> {
        let zw = GroupWord::from(z);
        for &v in &self.global {
            let comm = zw
                .concat(&GroupWord(vec![Letter::pos(v)]))
                .concat(&zw.inverse())
                .concat(&GroupWord(vec![Letter::neg(v)]));
            if !self.is_trivial(&comm)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Is the normal form left-weighted with no trivial or `Δ` factors?
    /// Exposed for tests of the normal-form invariants.
    pub fn is_left_normal(&self, nf: &NormalForm) -> Result<bool> {
        let idx: Vec<usize> = nf
            .factors
            .iter()
            .map(|f| {
                let local: Result<Vec<Vertex>> = f.0.iter().map(|&v| self.local_of(v)).collect();
                Ok(self.table.eval(&local?))
            })
            .collect::<Result<_>>()?;
        let simple_ok = idx
            .iter()
            .zip(&nf.factors)
            .all(|(&x, f)| x != 0 && x != self.delta && self.table.length(x) == f.len());
        let weighted = idx
            .windows(2)
            .all(|p| self.left_desc[p[1]] & !self.right_desc[p[0]] == 0);
        Ok(simple_ok && weighted)
    }
}

pub fn normal_form(g: &CoxeterGraph, w: &GroupWord) -> Result<NormalForm> {
    GarsideGroup::of_graph(g, &Limits::default())?.normal_form(w)
}

pub fn is_trivial_spherical(g: &CoxeterGraph, w: &GroupWord) -> Result<bool> {
    GarsideGroup::of_graph(g, &Limits::default())?.is_trivial(w)
}

pub fn garside_delta(g: &CoxeterGraph) -> Result<PositiveWord> {
    if g.connected_components().len() != 1 {
        return Err(Error::NotConnected);
    }
    Ok(GarsideGroup::of_graph(g, &Limits::default())?.delta())
}

pub fn center_generator_spherical(g: &CoxeterGraph) -> Result<PositiveWord> {
    if g.connected_components().len() != 1 {
        return Err(Error::NotConnected);
    }
    GarsideGroup::of_graph(g, &Limits::default())?.center_generator(g)
}

pub fn np_decompose(g: &CoxeterGraph, w: &GroupWord) -> Result<NpPair> {
    GarsideGroup::of_graph(g, &Limits::default())?.np_decompose(w)
}

pub fn member_rewrite_spherical(
    g: &CoxeterGraph,
    w: &GroupWord,
    x: VertexSet,
) -> Result<Option<GroupWord>> {
    GarsideGroup::of_graph(g, &Limits::default())?.member_rewrite(w, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Label::*;

    fn a2() -> CoxeterGraph {
        CoxeterGraph::from_edges(&["s", "t"], &[("s", "t", Finite(3))]).unwrap()
    }

    fn b2() -> CoxeterGraph {
        CoxeterGraph::from_edges(&["s", "t"], &[("s", "t", Finite(4))]).unwrap()
    }

    fn w(g: &CoxeterGraph, text: &str) -> GroupWord {
        GroupWord::parse(g, text).unwrap()
    }

    #[test]
    fn braid_relation_gives_equal_forms() {
        let g = a2();
        assert_eq!(
            normal_form(&g, &w(&g, "s t s")).unwrap(),
            normal_form(&g, &w(&g, "t s t")).unwrap()
        );
        assert!(normal_form(&g, &w(&g, "")).unwrap().is_identity());
        assert!(normal_form(&g, &w(&g, "s s^-1")).unwrap().is_identity());
    }

    #[test]
    fn word_problem_examples() {
        let g = b2();
        assert!(is_trivial_spherical(&g, &w(&g, "s t s t t^-1 s^-1 t^-1 s^-1")).unwrap());
        let g = a2();
        assert!(is_trivial_spherical(&g, &w(&g, "s t s t^-1 s^-1 t^-1")).unwrap());
        assert!(!is_trivial_spherical(&g, &w(&g, "s")).unwrap());
    }

    #[test]
    fn delta_words() {
        let a1 = CoxeterGraph::from_edges(&["s"], &[]).unwrap();
        assert_eq!(garside_delta(&a1).unwrap(), PositiveWord(vec![0]));
        assert_eq!(garside_delta(&a2()).unwrap(), PositiveWord(vec![0, 1, 0]));
        assert_eq!(
            garside_delta(&b2()).unwrap(),
            PositiveWord(vec![0, 1, 0, 1])
        );
    }

    #[test]
    fn negative_powers_of_delta_have_no_factors() {
        let g = a2();
        let nf = normal_form(&g, &w(&g, "s^-1 t^-1 s^-1")).unwrap();
        assert_eq!(nf.infimum, -1);
        assert!(nf.factors.is_empty());
        let nf = normal_form(&g, &w(&g, "s^-1")).unwrap();
        assert_eq!(nf.infimum, -1);
        assert_eq!(nf.factors, vec![PositiveWord(vec![0, 1])]);
    }

    #[test]
    fn center_generators() {
        let a1 = CoxeterGraph::from_edges(&["s"], &[]).unwrap();
        assert_eq!(
            center_generator_spherical(&a1).unwrap(),
            PositiveWord(vec![0])
        );
        assert_eq!(
            center_generator_spherical(&a2()).unwrap(),
            PositiveWord(vec![0, 1, 0, 1, 0, 1])
        );
        assert_eq!(
            center_generator_spherical(&b2()).unwrap(),
            PositiveWord(vec![0, 1, 0, 1])
        );
    }

    #[test]
    fn np_pairs() {
        let g = a2();
        let p = np_decompose(&g, &w(&g, "s t")).unwrap();
        assert!(p.negative.is_empty());
        let p = np_decompose(&g, &w(&g, "s^-1")).unwrap();
        assert_eq!(p.negative, PositiveWord(vec![0]));
        assert!(p.positive.is_empty());
        let p = np_decompose(&g, &w(&g, "t s t^-1")).unwrap();
        assert_eq!(p.negative, PositiveWord(vec![0]));
        assert_eq!(p.positive, PositiveWord(vec![1, 0]));
    }

    #[test]
    fn spherical_membership_examples() {
        let g = a2();
        let s = VertexSet(0b01);
        assert_eq!(
            member_rewrite_spherical(&g, &w(&g, "s s s"), s).unwrap(),
            Some(w(&g, "s s s"))
        );
        assert_eq!(
            member_rewrite_spherical(&g, &w(&g, "s t s^-1"), s).unwrap(),
            None
        );
        assert_eq!(
            member_rewrite_spherical(&g, &w(&g, "s t s t s t"), s).unwrap(),
            None
        );
        // t s t⁻¹ s⁻¹ ... conjugate landing back in A_{s}
        let conj = w(&g, "s t s t^-1 s^-1");
        let r = member_rewrite_spherical(&g, &conj, VertexSet(0b10))
            .unwrap()
            .unwrap();
        assert!(r.letters().is_subset(VertexSet(0b10)));
    }

    #[test]
    fn non_spherical_rejected() {
        let g = CoxeterGraph::from_edges(&["s", "t"], &[("s", "t", Infinity)]).unwrap();
        assert_eq!(normal_form(&g, &GroupWord::new()), Err(Error::NotSpherical));
    }
}
