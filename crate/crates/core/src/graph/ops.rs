use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::limits::{saturating_pow, Limits};

/// Closes the arc set under reversal.
pub fn symmetrization(d: &Digraph) -> Graph {
    let mut s = d.clone();
    for (u, v) in d.arcs() {
        s.add_arc(v, u);
    }
    Graph(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// Categorial product: `(u,x) -> (v,y)` iff `u -> v` and `x -> y`.
    Tensor,
    /// `G[H]`: `[u,v]` an edge of `G`, or `u = v` and `[x,y]` an edge of `H`.
    Lexicographic,
}

/// Product on pairs `(u, x)` numbered `u * |H| + x`.
pub fn product(kind: ProductKind, g: &Digraph, h: &Digraph, limits: &Limits) -> Result<Digraph> {
    match kind {
        ProductKind::Tensor => tensor_product(g, h, limits),
        ProductKind::Lexicographic => {
            let g = Graph::try_from(g.clone()).map_err(|_| {
                Error::precondition("lexicographic product needs undirected factors")
            })?;
            let h = Graph::try_from(h.clone()).map_err(|_| {
                Error::precondition("lexicographic product needs undirected factors")
            })?;
            lexicographic_product(&g, &h, limits).map(Digraph::from)
        }
    }
}

pub fn tensor_product(g: &Digraph, h: &Digraph, limits: &Limits) -> Result<Digraph> {
    let n = g.order() * h.order();
    let arcs = g.arc_count() as u128 * h.arc_count() as u128;
    limits.check_size("tensor product", n as u128 + arcs)?;
    let hn = h.order();
    let mut d = Digraph::empty(n);
    for (u, v) in g.arcs() {
        for (x, y) in h.arcs() {
            d.add_arc(u * hn + x, v * hn + y);
        }
    }
    Ok(d)
}

pub fn lexicographic_product(g: &Graph, h: &Graph, limits: &Limits) -> Result<Graph> {
    let hn = h.order();
    let n = g.order() * hn;
    let arcs = g.arc_count() as u128 * (hn * hn) as u128 + (g.order() * h.arc_count()) as u128;
    limits.check_size("lexicographic product", n as u128 + arcs)?;
    let mut d = Digraph::empty(n);
    for (u, v) in g.arcs() {
        for x in 0..hn {
            for y in 0..hn {
                d.add_arc(u * hn + x, v * hn + y);
            }
        }
    }
    for u in 0..g.order() {
        for (x, y) in h.arcs() {
            d.add_arc(u * hn + x, u * hn + y);
        }
    }
    Ok(Graph(d))
}

/// `K^H`: vertices are all maps `V(H) -> V(K)`, numbered as base-`|K|`
/// numerals with `f(0)` most significant; `f -> g` iff every arc `x -> y` of
/// `H` has `f(x) -> g(y)` in `K`.
pub fn exponential_graph(k: &Digraph, h: &Digraph, limits: &Limits) -> Result<Digraph> {
    let (kn, hn) = (k.order(), h.order());
    let count = saturating_pow(kn, hn);
    limits.check_size("exponential graph", count)?;
    let count = count as usize;
    let maps: Vec<Vec<usize>> = (0..count).map(|i| decode_map(i, kn, hn)).collect();
    let h_arcs: Vec<(usize, usize)> = h.arcs().collect();
    let mut d = Digraph::empty(count);
    let mut total = count as u128;
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            if h_arcs.iter().all(|&(x, y)| k.has_arc(f[x], g[y])) {
                d.add_arc(i, j);
                total += 1;
            }
        }
        limits.check_size("exponential graph", total)?;
    }
    Ok(d)
}

/// The `i`-th map `0..len -> 0..base` in lexicographic order.
pub(crate) fn decode_map(mut i: usize, base: usize, len: usize) -> Vec<usize> {
    let mut f = vec![0; len];
    for slot in f.iter_mut().rev() {
        *slot = i % base;
        i /= base;
    }
    f
}

pub fn disjoint_union(a: &Digraph, b: &Digraph) -> Digraph {
    let off = a.order();
    let mut d = Digraph::empty(off + b.order());
    for (u, v) in a.arcs() {
        d.add_arc(u, v);
    }
    for (u, v) in b.arcs() {
        d.add_arc(u + off, v + off);
    }
    d
}

/// Length of a shortest odd closed walk, `None` when the graph is bipartite.
///
/// Runs a BFS from every `(s, even)` in the bipartite double cover; the
/// first time `(s, odd)` is reached gives the shortest odd closed walk
/// through `s`, which always contains an odd cycle of at most that length.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; 2 * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if g.has_loop(s) {
            return Some(1);
        }
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        queue.clear();
        dist[2 * s] = 0;
        queue.push_back(2 * s);
        while let Some(state) = queue.pop_front() {
            let (u, parity) = (state / 2, state % 2);
            let du = dist[state];
            if best.is_some_and(|b| du + 1 >= b) {
                break;
            }
            for v in g.neighbors(u) {
                let next = 2 * v + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = du + 1;
                    queue.push_back(next);
                }
            }
            if dist[2 * s + 1] != usize::MAX {
                let len = dist[2 * s + 1];
                best = Some(best.map_or(len, |b| b.min(len)));
                break;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete, cycle, directed_cycle, directed_path, kneser, path, transitive_tournament,
    };

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
    fn tensor_k2_k2_is_two_disjoint_edges() {
        let l = Limits::default();
        let t = tensor_product(&complete(2), &complete(2), &l).unwrap();
        // Oracle: (u,x)~(v,y) iff u!=v and x!=y, vertex index 2u+x.
        let mut expected = Vec::new();
        for a in 0..4usize {
            for b in 0..4usize {
                if a / 2 != b / 2 && a % 2 != b % 2 {
                    expected.push((a, b));
                }
            }
        }
        assert_eq!(t.arcs().collect::<Vec<_>>(), expected);
        assert_eq!(t.arc_count(), 4);
    }

    #[test]
    fn tensor_with_looped_vertex_is_identity() {
        let unit = Digraph::from_arcs(1, [(0, 0)]).unwrap();
        let g = cycle(5).unwrap();
        let t = tensor_product(&g, &unit, &Limits::default()).unwrap();
        assert_eq!(&t, g.as_digraph());
    }

    #[test]
    fn lexicographic_c5_k2_shape() {
        let l =
            lexicographic_product(&cycle(5).unwrap(), &complete(2), &Limits::default()).unwrap();
        assert_eq!(l.order(), 10);
        // 5 edges * 4 + 5 inner edges
        assert_eq!(l.edge_count(), 25);
    }

    #[test]
    fn lexicographic_rejects_directed() {
        let r = product(
            ProductKind::Lexicographic,
            &directed_path(1),
            &complete(2),
            &Limits::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn exponential_small_cases() {
        let l = Limits::default();
        let k2 = complete(2);
        let unit = Digraph::from_arcs(1, [(0, 0)]).unwrap();
        assert_eq!(&exponential_graph(&k2, &unit, &l).unwrap(), k2.as_digraph());
        // No arcs in the exponent: every pair is adjacent, loops included.
        assert_eq!(
            exponential_graph(&k2, &complete(1), &l)
                .unwrap()
                .arc_count(),
            4
        );

        // K_3^{K_2}: f ~ g iff f(0) != g(1) and f(1) != g(0), checked over
        // all 81 ordered pairs.
        let e = exponential_graph(&complete(3), &k2, &l).unwrap();
        assert_eq!(e.order(), 9);
        for i in 0..9 {
            for j in 0..9 {
                let (f, g) = ([i / 3, i % 3], [j / 3, j % 3]);
                assert_eq!(e.has_arc(i, j), f[0] != g[1] && f[1] != g[0], "{f:?} {g:?}");
            }
        }

        // A loop at f means f is a homomorphism H -> K.
        let e = exponential_graph(&k2, &complete(3), &l).unwrap();
        assert!(!e.has_any_loop());
    }

    #[test]
    fn exponential_respects_guard() {
        let l = Limits::default().with_max_size(100);
        assert!(matches!(
            exponential_graph(&complete(3), &complete(5), &l),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(odd_girth(&cycle(5).unwrap()), Some(5));
        assert_eq!(odd_girth(&complete(4)), Some(3));
        assert_eq!(odd_girth(&kneser(4, 2).unwrap()), None);
        assert_eq!(odd_girth(&cycle(6).unwrap()), None);
        assert_eq!(
            odd_girth(&Graph::from_edges(2, [(0, 1), (1, 1)]).unwrap()),
            Some(1)
        );
    }
}
