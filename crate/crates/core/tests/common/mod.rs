#![allow(dead_code)]

use proptest::prelude::*;
use pultr::{Digraph, Graph};

/// Digraphs on `1..=max_order` vertices; loops only when `loops`.
pub fn digraph(max_order: usize, loops: bool) -> impl Strategy<Value = Digraph> {
    (1..=max_order).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && (loops || i / n != i % n))
                .map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

/// Undirected graphs on `1..=max_order` vertices.
pub fn graph(max_order: usize, loops: bool) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u..n).map(move |v| (u, v)))
                .filter(|&(u, v)| bits[u * n + v] && (loops || u != v));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Every map `V(g) -> V(h)`, as an odometer.
pub fn all_maps(g: usize, h: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if h == 0 {
        (g == 0) as u64
    } else {
        (h as u64).pow(g as u32)
    };
    (0..total).map(move |mut code| {
        (0..g)
            .map(|_| {
                let d = (code % h as u64) as usize;
                code /= h as u64;
                d
            })
            .collect()
    })
}

pub fn is_hom(map: &[usize], g: &Digraph, h: &Digraph) -> bool {
    g.arcs().all(|(u, v)| h.has_arc(map[u], map[v]))
}

pub fn brute_count(g: &Digraph, h: &Digraph) -> u128 {
    all_maps(g.order(), h.order())
        .filter(|m| is_hom(m, g, h))
        .count() as u128
}

pub fn brute_exists(g: &Digraph, h: &Digraph) -> bool {
    all_maps(g.order(), h.order()).any(|m| is_hom(&m, g, h))
}
