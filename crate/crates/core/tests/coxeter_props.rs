mod common;

use artin_core::catalog::{identify, shape, FiniteType};
use artin_core::classify::{classify, is_fc_set, is_spherical_set};
use artin_core::coxeter::{
    coxeter_number, coxeter_number_for_ordering, enumerate_w, is_identity_in_w, order_in_w,
    CoxeterWord, EnumerationStatus, Order, Rewriter,
};
use artin_core::{CoxeterGraph, Label, Limits, Vertex, VertexSet};
use common::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Group orders from the classical closed formulas.
fn formula_order(t: FiniteType) -> usize {
    match t {
        FiniteType::A(n) => factorial(n + 1),
        FiniteType::B(n) => (1 << n) * factorial(n),
        FiniteType::D(n) => (1 << (n - 1)) * factorial(n),
        FiniteType::E6 => 51_840,
        FiniteType::E7 => 2_903_040,
        FiniteType::E8 => 696_729_600,
        FiniteType::F4 => 1_152,
        FiniteType::H3 => 120,
        FiniteType::H4 => 14_400,
        FiniteType::I2(m) => 2 * m as usize,
    }
}

#[test]
fn enumeration_matches_order_formulas() {
    let types = [
        FiniteType::A(1),
        FiniteType::A(2),
        FiniteType::A(3),
        FiniteType::A(4),
        FiniteType::B(2),
        FiniteType::B(3),
        FiniteType::B(4),
        FiniteType::D(4),
        FiniteType::F4,
        FiniteType::H3,
        FiniteType::I2(5),
        FiniteType::I2(7),
    ];
    for t in types {
        let g = shape(t).to_graph();
        assert_eq!(identify(&g, g.vertices()), Some(t));
        let r = enumerate_w(&g, 20_000).unwrap();
        assert_eq!(r.order, Some(formula_order(t)), "{t}");
    }
}

#[test]
fn dihedral_orders() {
    for m in 2..=8 {
        let r = enumerate_w(&dihedral(Label::Finite(m)), 1000).unwrap();
        assert_eq!(r.order, Some(2 * m as usize), "I2({m})");
    }
    let r = enumerate_w(&dihedral(Infinity), 1000).unwrap();
    assert_eq!(r.status, EnumerationStatus::Overflow);
}

/// Classification agrees with enumeration: spherical iff `W` is finite.
#[test]
fn catalog_agrees_with_enumeration_rank3() {
    let mut rng = StdRng::seed_from_u64(7);
    let labels = [
        Finite(2),
        Finite(3),
        Finite(4),
        Finite(5),
        Finite(6),
        Infinity,
    ];
    for _ in 0..60 {
        let g = random_graph(&mut rng, 3, &labels);
        let r = enumerate_w(&g, 1_000).unwrap();
        assert_eq!(
            classify(&g).spherical,
            r.status == EnumerationStatus::Complete,
            "{g:?}"
        );
    }
}

#[test]
fn catalog_agrees_with_enumeration_rank4() {
    let mut rng = StdRng::seed_from_u64(11);
    let labels = [
        Finite(2),
        Finite(2),
        Finite(2),
        Finite(3),
        Finite(4),
        Finite(5),
    ];
    for _ in 0..12 {
        let g = random_graph(&mut rng, 4, &labels);
        let r = enumerate_w(&g, 15_000).unwrap();
        assert_eq!(
            classify(&g).spherical,
            r.status == EnumerationStatus::Complete,
            "{g:?}"
        );
    }
}

/// Literal definition: every subset without an `∞` edge is spherical.
fn fc_by_all_subsets(g: &CoxeterGraph) -> bool {
    let n = g.rank();
    (0u64..1 << n).all(|bits| {
        let set = VertexSet(bits);
        !g.is_free_of_infinity_on(set) || is_spherical_set(g, set)
    })
}

/// Literal definition: no spherical subset of size ≥ 3.
fn two_dim_by_all_subsets(g: &CoxeterGraph) -> bool {
    let n = g.rank();
    (0u64..1 << n).all(|bits| {
        let set = VertexSet(bits);
        set.len() < 3 || !is_spherical_set(g, set)
    })
}

#[test]
fn fc_and_two_dimensional_match_literal_definitions() {
    let mut rng = StdRng::seed_from_u64(3);
    let labels = [Finite(2), Finite(2), Finite(3), Finite(4), Infinity];
    for n in 1..=6 {
        for _ in 0..25 {
            let g = random_graph(&mut rng, n, &labels);
            let r = classify(&g);
            assert_eq!(r.fc_type, fc_by_all_subsets(&g), "{g:?}");
            assert_eq!(is_fc_set(&g, g.vertices()), r.fc_type);
            assert_eq!(r.two_dimensional, two_dim_by_all_subsets(&g), "{g:?}");
        }
    }
}

#[test]
fn coxeter_number_independent_of_ordering() {
    for (name, g, _) in small_spherical() {
        let h = coxeter_number(&g).unwrap();
        let n = g.rank() as Vertex;
        let mut perm: Vec<Vertex> = (0..n).collect();
        for_each_permutation(&mut perm, 0, &mut |p| {
            assert_eq!(
                coxeter_number_for_ordering(&g, p).unwrap(),
                h,
                "{name} {p:?}"
            );
        });
        // 2|Φ⁺| = n h and |Φ⁺| is the length of the longest element.
        let r = enumerate_w(&g, 1000).unwrap();
        let longest = r.elements.unwrap().last().unwrap().len() as u64;
        assert_eq!(2 * longest, n as u64 * h, "{name}");
    }
}

fn for_each_permutation(p: &mut Vec<Vertex>, k: usize, f: &mut dyn FnMut(&[Vertex])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        for_each_permutation(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Words from the geometric enumeration are canonical for the rewriter.
#[test]
fn enumeration_words_are_rewriter_canonical() {
    let mut graphs: Vec<CoxeterGraph> = small_spherical().into_iter().map(|(_, g, _)| g).collect();
    graphs.push(fc3());
    for g in graphs {
        let rw = Rewriter::new(&g, &Limits::default());
        let r = enumerate_w(&g, 400).unwrap();
        let elements = match r.elements {
            Some(e) => e,
            None => continue,
        };
        for e in elements {
            assert_eq!(rw.reduce(&e.0).unwrap(), e.0, "{g:?}");
        }
    }
    // an infinite group overflows any cap
    let g = fc3();
    let table = artin_core::coxeter::CayleyTable::build(
        &g,
        &Limits {
            max_elements: 100_000,
            ..Limits::default()
        },
    )
    .unwrap();
    assert!(table.is_none());
}

#[test]
fn infinite_order_is_reported() {
    let g = dihedral(Infinity);
    assert_eq!(
        order_in_w(&g, &CoxeterWord(vec![0, 1]), 50).unwrap(),
        Order::Overflow
    );
}

fn fixed_graphs() -> Vec<CoxeterGraph> {
    vec![
        path3(3, 5),
        path3(4, 3),
        fc3(),
        graph(
            &["a", "b", "c"],
            &[
                ("a", "b", Finite(3)),
                ("b", "c", Finite(3)),
                ("a", "c", Finite(3)),
            ],
        ),
    ]
}

fn word_strategy() -> impl Strategy<Value = (usize, Vec<Vertex>)> {
    (0usize..4, prop::collection::vec(0u8..3, 0..14))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn word_times_reverse_is_identity((gi, w) in word_strategy()) {
        let g = &fixed_graphs()[gi];
        let mut ww = w.clone();
        ww.extend(w.iter().rev());
        prop_assert!(is_identity_in_w(g, &CoxeterWord(ww)).unwrap());
    }

    #[test]
    fn braid_moves_preserve_canonical_form((gi, w) in word_strategy(), pos in 0usize..14) {
        let g = &fixed_graphs()[gi];
        let rw = Rewriter::new(g, &Limits::default());
        let base = rw.reduce(&w).unwrap();
        // Insert s t s … (m) · (t s t … (m))⁻¹ = braid relator, as a
        // Coxeter word the second half is reversed.
        let pos = pos.min(w.len());
        for s in 0..3u8 {
            for t in s + 1..3u8 {
                if let Label::Finite(m) = g.label(s, t) {
                    let m = m as usize;
                    let mut x = w[..pos].to_vec();
                    x.extend(alternating(s, t, m));
                    x.extend(alternating(t, s, m).into_iter().rev());
                    x.extend_from_slice(&w[pos..]);
                    prop_assert_eq!(rw.reduce(&x).unwrap(), base.clone());
                }
            }
        }
        let mut sq = w[..pos].to_vec();
        sq.extend([1, 1]);
        sq.extend_from_slice(&w[pos..]);
        prop_assert_eq!(rw.reduce(&sq).unwrap(), base);
    }

    #[test]
    fn canonical_form_is_shortlex_least_reduced(w in prop::collection::vec(0u8..3, 0..7)) {
        // B3: search all words in ShortLex order for the first one equal to w.
        let g = path3(4, 3);
        let rw = Rewriter::new(&g, &Limits::default());
        let c = rw.reduce(&w).unwrap();
        let rev: Vec<Vertex> = w.iter().rev().copied().collect();
        let mut found = None;
        'search: for len in 0..=w.len() {
            for code in 0..3usize.pow(len as u32) {
                let u: Vec<Vertex> = (0..len)
                    .map(|k| (code / 3usize.pow((len - 1 - k) as u32) % 3) as Vertex)
                    .collect();
                let mut x = u.clone();
                x.extend_from_slice(&rev);
                if rw.is_identity(&x).unwrap() {
                    found = Some(u);
                    break 'search;
                }
            }
        }
        prop_assert_eq!(Some(c), found);
    }
}
