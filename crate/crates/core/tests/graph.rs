mod common;

use proptest::prelude::*;
use pultr::graph::*;
use pultr::hom::{hom_exists, isomorphic, HomWitness};
use pultr::{Digraph, Limits};

proptest! {
    #[test]
    fn symmetrization_is_idempotent(d in common::digraph(6, true)) {
        let once = symmetrization(&d);
        prop_assert_eq!(symmetrization(once.as_digraph()), once);
    }

    #[test]
    fn tensor_swap_is_an_isomorphism(g in common::digraph(4, true), h in common::digraph(4, true)) {
        let l = Limits::default();
        let gh = tensor_product(&g, &h, &l).unwrap();
        let hg = tensor_product(&h, &g, &l).unwrap();
        let (n, m) = (g.order(), h.order());
        // (x, y) is numbered x * |H| + y on the left and y * |G| + x on the right.
        let swap: Vec<usize> = (0..n * m).map(|i| (i % m) * n + i / m).collect();
        prop_assert!(HomWitness::new(swap.clone(), &gh, &hg).is_ok());
        prop_assert_eq!(gh.relabel(&swap).unwrap(), hg);
    }

    #[test]
    fn edge_list_round_trip(d in common::digraph(12, true)) {
        let text = serialize_graph(&d);
        prop_assert_eq!(parse_graph(&text).unwrap(), d);
    }

    #[test]
    fn bipartite_iff_infinite_odd_girth(g in common::graph(7, true)) {
        let to_k2 = hom_exists(g.as_digraph(), complete(2).as_digraph()).unwrap().is_some();
        prop_assert_eq!(odd_girth(&g).is_none(), to_k2);
    }
}

#[test]
fn round_trip_up_to_order_fifty() {
    for n in [1, 17, 50] {
        let d = Digraph::from_arcs(n, (0..n).map(|i| (i, (i * 7 + 3) % n))).unwrap();
        assert_eq!(parse_graph(&serialize_graph(&d)).unwrap(), d);
        let u = cycle(n.max(3)).unwrap();
        assert_eq!(
            parse_graph(&serialize_graph(u.as_digraph())).unwrap(),
            *u.as_digraph()
        );
    }
}

#[test]
fn parse_examples() {
    let p2 = parse_graph("u 3\n0 1\n1 2\n").unwrap();
    assert_eq!(p2, path(2).into_digraph());
    let k2 = parse_graph("d 2\n0 1\n1 0\n").unwrap();
    assert_eq!(k2, complete(2).into_digraph());
    assert!(matches!(
        parse_graph("x 3\n"),
        Err(pultr::Error::Parse { line: 1, .. })
    ));
}

#[test]
fn odd_circular_cliques_are_cycles() {
    for m in 1..=4u32 {
        let k = circular_clique(Fraction::new(2 * m + 1, m).unwrap()).unwrap();
        let c = cycle(2 * m as usize + 1).unwrap();
        assert!(
            isomorphic(k.as_digraph(), c.as_digraph()).unwrap(),
            "m = {m}"
        );
    }
}

#[test]
fn enumeration_counts_and_invariants() {
    assert_eq!(
        enumerate_graphs(EnumSpec::directed(1).with_loops(true))
            .unwrap()
            .count(),
        2
    );
    assert_eq!(
        enumerate_graphs(EnumSpec::undirected(2)).unwrap().count(),
        2
    );
    assert_eq!(
        enumerate_graphs(EnumSpec::directed(3).iso_reject())
            .unwrap()
            .count(),
        16
    );
    for d in enumerate_graphs(EnumSpec::undirected(4).with_loops(true).up_to()).unwrap() {
        assert!(d.is_symmetric());
        assert!(d.order() >= 1 && d.order() <= 4);
    }
    for d in enumerate_graphs(EnumSpec::directed(3)).unwrap() {
        assert!(!d.has_any_loop());
    }
    assert!(enumerate_graphs(EnumSpec::directed(6)).is_err());
}

#[test]
fn orientation_examples() {
    assert_eq!(orientations(&complete(2)).unwrap().count(), 2);
    let c3 = cycle(3).unwrap();
    let cyclic = orientations(&c3)
        .unwrap()
        .filter(|(_, d)| isomorphic(d, &directed_cycle(3).unwrap()).unwrap())
        .count();
    assert_eq!(orientations(&c3).unwrap().count(), 8);
    assert_eq!(cyclic, 2);
    assert_eq!(orientations(&complete(1)).unwrap().count(), 1);
}

#[test]
fn symmetrization_examples() {
    assert_eq!(symmetrization(&directed_path(2)), path(2));
    assert_eq!(
        symmetrization(&directed_cycle(3).unwrap()),
        cycle(3).unwrap()
    );
    assert_eq!(symmetrization(&transitive_tournament(4)), complete(4));
}

#[test]
fn odd_girth_examples() {
    assert_eq!(odd_girth(&cycle(5).unwrap()), Some(5));
    assert_eq!(odd_girth(&kneser(4, 2).unwrap()), None);
    let looped = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
    assert_eq!(odd_girth(&looped), Some(1));
}
