mod common;

use proptest::prelude::*;
use pultr::chromatic::*;
use pultr::graph::*;
use pultr::{Digraph, Graph, Limits};

/// `K_{n/m}` written out from the distance rule, for use as an oracle.
fn clique_oracle(n: usize, m: usize) -> Digraph {
    let arcs = (0..n * n).map(|i| (i / n, i % n)).filter(|&(u, v)| {
        let d = (u + n - v) % n;
        d >= m && d <= n - m
    });
    Digraph::from_arcs(n, arcs).unwrap()
}

fn chi_oracle(g: &Graph) -> usize {
    (1..=g.order())
        .find(|&k| common::brute_exists(g.as_digraph(), complete(k).as_digraph()))
        .unwrap()
}

fn chi_c_oracle(g: &Graph) -> Fraction {
    let mut best: Option<Fraction> = None;
    for n in 1..=g.order() as u32 {
        for m in 1..=n {
            if m > 1 && 2 * m > n {
                continue;
            }
            let f = Fraction::new(n, m).unwrap();
            if f.num() != n || f.den() != m {
                continue;
            }
            let target = if m == 1 {
                complete(n as usize).into_digraph()
            } else {
                clique_oracle(n as usize, m as usize)
            };
            if common::brute_exists(g.as_digraph(), &target) && best.map_or(true, |b| f < b) {
                best = Some(f);
            }
        }
    }
    best.unwrap()
}

fn loop_free_with_edges(max: usize) -> impl Strategy<Value = Graph> {
    common::graph(max, false).prop_filter("needs an edge", |g| g.edge_count() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chromatic_number_matches_brute_force(g in common::graph(6, false)) {
        let chi = chromatic_number(&g, &Limits::default()).unwrap();
        prop_assert_eq!(chi, chi_oracle(&g));
        let (k, w) = optimal_colouring(&g, &Limits::default()).unwrap();
        prop_assert_eq!(k, chi);
        prop_assert!(common::is_hom(w.map(), g.as_digraph(), complete(k).as_digraph()));
    }

    #[test]
    fn circular_chromatic_number_is_sandwiched(g in loop_free_with_edges(6)) {
        let l = Limits::default();
        let chi = chromatic_number(&g, &l).unwrap() as u32;
        let (chi_c, w) = circular_chromatic_number(&g, &l).unwrap();
        prop_assert!(chi_c > Fraction::integer(chi - 1).unwrap() || chi == 1);
        prop_assert!(chi_c <= Fraction::integer(chi).unwrap());
        prop_assert_eq!(chi_c.ceil(), chi);
        let target = circular_clique(chi_c).unwrap();
        prop_assert!(common::is_hom(w.map(), g.as_digraph(), target.as_digraph()));
    }

    #[test]
    fn circular_chromatic_number_matches_oracle(g in loop_free_with_edges(5)) {
        let (chi_c, _) = circular_chromatic_number(&g, &Limits::default()).unwrap();
        prop_assert_eq!(chi_c, chi_c_oracle(&g));
    }

    #[test]
    fn denominator_bound_is_enough(g in loop_free_with_edges(5)) {
        let l = Limits::default();
        let (small, _) = circular_chromatic_number_bounded(&g, 5, &l).unwrap();
        let (large, _) = circular_chromatic_number_bounded(&g, 10, &l).unwrap();
        prop_assert_eq!(small, large);
    }

    #[test]
    fn gallai_roy_at_and_below_chi(g in common::graph(5, false)) {
        let l = Limits::default();
        let chi = chromatic_number(&g, &l).unwrap();
        let cert = gallai_roy_orientation(&g, chi, &l).unwrap();
        prop_assert!(cert.is_some());
        prop_assert!(cert.unwrap().verify(&g, &l).unwrap());
        if chi > 1 {
            prop_assert!(gallai_roy_orientation(&g, chi - 1, &l).unwrap().is_none());
        }
    }

    #[test]
    fn circular_gallai_roy_equivalence(
        (n, m) in prop::sample::select(vec![(5u32, 2u32), (7, 3), (3, 1), (7, 2), (8, 3)]),
        g in common::graph(5, false),
    ) {
        let l = Limits::default();
        let colourable = common::brute_exists(g.as_digraph(), &clique_oracle(n as usize, m as usize));
        let avoiding = exhaustive_circular_orientation(&g, n, m, &l).unwrap();
        prop_assert_eq!(colourable, avoiding.is_some());
        if let Some((_, oriented)) = avoiding {
            for spec in reversal_paths(n as usize, m as usize - 1, false).unwrap() {
                prop_assert!(!common::brute_exists(&oriented_path(&spec), &oriented));
            }
        }
        let cert = circular_gallai_roy_check(&g, n, m, &l).unwrap();
        prop_assert_eq!(cert.is_some(), colourable);
        if let Some(c) = cert {
            prop_assert!(c.verify(&g, &l).unwrap());
        }
    }
}

#[test]
fn circular_cliques_have_their_own_ratio() {
    let l = Limits::default();
    for (n, m) in [(5, 2), (7, 2), (7, 3), (8, 3), (9, 4), (5, 1), (11, 4)] {
        let f = Fraction::new(n, m).unwrap();
        let (chi_c, _) = circular_chromatic_number(&circular_clique(f).unwrap(), &l).unwrap();
        assert_eq!(chi_c, f, "{n}/{m}");
    }
}

#[test]
fn circular_examples() {
    let l = Limits::default();
    let chi_c = |g: &Graph| circular_chromatic_number(g, &l).unwrap().0;
    assert_eq!(chi_c(&cycle(5).unwrap()), Fraction::new(5, 2).unwrap());
    assert_eq!(chi_c(&cycle(7).unwrap()), Fraction::new(7, 3).unwrap());
    assert_eq!(chi_c(&cycle(6).unwrap()), Fraction::integer(2).unwrap());
    assert_eq!(chi_c(&complete(4)), Fraction::integer(4).unwrap());
    assert_eq!(chi_c(&kneser(5, 2).unwrap()), Fraction::integer(3).unwrap());
    assert_eq!(chi_c(&Graph::empty(3)), Fraction::integer(1).unwrap());
    assert!(circular_chromatic_number(&Graph::empty(0), &l).is_err());
    let looped = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
    assert!(circular_chromatic_number(&looped, &l).is_err());
}

#[test]
fn gallai_roy_examples() {
    let l = Limits::default();
    assert!(gallai_roy_orientation(&complete(3), 2, &l)
        .unwrap()
        .is_none());
    let c = gallai_roy_orientation(&complete(3), 3, &l)
        .unwrap()
        .unwrap();
    assert!(c.verify(&complete(3), &l).unwrap());
    let oriented = c.orientation().unwrap();
    assert!(pultr::hom::isomorphic(oriented, &transitive_tournament(3)).unwrap());
    let c = gallai_roy_orientation(&cycle(5).unwrap(), 3, &l)
        .unwrap()
        .unwrap();
    assert!(c.verify(&cycle(5).unwrap(), &l).unwrap());
    assert!(gallai_roy_orientation(&cycle(5).unwrap(), 2, &l)
        .unwrap()
        .is_none());
}

#[test]
fn reversal_path_counts() {
    assert_eq!(
        reversal_paths(3, 0, false).unwrap(),
        vec![OrientationSpec::forward(3)]
    );
    assert_eq!(reversal_paths(5, 1, false).unwrap().len(), 6);
    assert_eq!(reversal_paths(5, 1, true).unwrap().len(), 6);
    let dedup = reversal_paths(4, 2, true).unwrap();
    assert!(dedup.len() < 11);
    for s in reversal_paths(4, 2, false).unwrap() {
        assert!(dedup.contains(&s) || dedup.contains(&s.mirrored()));
    }
    assert_eq!(reversal_paths(7, 2, false).unwrap().len(), 1 + 7 + 21);
}

#[test]
fn interleaved_tournaments_are_circular_cliques() {
    let l = Limits::default();
    for (n, m) in [(5, 2), (7, 3), (7, 2)] {
        let b = yeh_zhu_graph(n, m, &l).unwrap();
        let k = circular_clique(Fraction::new(n as u32, m as u32).unwrap()).unwrap();
        assert!(
            pultr::hom::hom_equivalent(b.as_digraph(), k.as_digraph()).unwrap(),
            "{n}/{m}"
        );
    }
}

#[test]
fn powers_bracket_the_circular_chromatic_number() {
    let l = Limits::default();
    for (g, i_max, j_max) in [
        (cycle(5).unwrap(), 2, 1),
        (cycle(7).unwrap(), 3, 2),
        (complete(3), 2, 2),
        (cycle(9).unwrap(), 2, 2),
        (complete(2), 1, 1),
    ] {
        let (chi_c, _) = circular_chromatic_number(&g, &l).unwrap();
        let scan = powers_scan(&g, i_max, j_max, &l).unwrap();
        if let Some(upper) = scan.upper() {
            assert!(upper >= chi_c, "{g:?}: upper {upper} < {chi_c}");
        }
        if let Some(lower) = scan.lower() {
            assert!(lower < chi_c, "{g:?}: lower {lower} >= {chi_c}");
        }
        for p in &scan.points {
            assert_eq!(
                p.colourable,
                p.value >= chi_c,
                "{g:?} at ({}, {})",
                p.i,
                p.j
            );
        }
    }
    let c5 = cycle(5).unwrap();
    assert_eq!(
        circular_lower_bound_via_powers(&c5, 2, 1, &l).unwrap(),
        Fraction::new(5, 2).unwrap()
    );
    let c7 = cycle(7).unwrap();
    assert_eq!(
        circular_lower_bound_via_powers(&c7, 3, 2, &l).unwrap(),
        Fraction::new(7, 3).unwrap()
    );
}
