//! Finite graphs and digraphs with dense vertex numbering.
//!
//! A [`Digraph`] is the universal carrier: vertices are `0..order`, arcs are
//! ordered pairs and loops are allowed. A [`Graph`] is a digraph whose arc set
//! is symmetric; an undirected edge `[u, v]` is stored as the two arcs
//! `(u, v)` and `(v, u)`, and a loop `[u, u]` as the single arc `(u, u)`.

mod enumerate;
mod families;
mod fraction;
mod io;
mod ops;
mod orientation;

use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use enumerate::{canonical_form, enumerate_graphs, EnumSpec, GraphEnumerator};
pub(crate) use families::k_subsets;
pub use families::{
    circular_clique, complete, cycle, directed_cycle, directed_path, kneser, oriented_path, path,
    standard_family, transitive_tournament, Family,
};
pub use fraction::Fraction;
pub use io::{parse_graph, serialize_graph, to_dot};
pub(crate) use ops::decode_map;
pub use ops::{
    disjoint_union, exponential_graph, lexicographic_product, odd_girth, product, symmetrization,
    tensor_product, ProductKind,
};
pub use orientation::{orient, orientations, OrientationSpec, Orientations};

/// A finite directed graph on vertices `0..order`.
///
/// Arcs are stored as out- and in-adjacency bitsets, so the arc set is
/// duplicate-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<FixedBitSet>,
    inc: Vec<FixedBitSet>,
    arcs: usize,
}

impl Digraph {
    /// The digraph with `order` vertices and no arcs.
    pub fn empty(order: usize) -> Self {
        Digraph {
            order,
            out: vec![FixedBitSet::with_capacity(order); order],
            inc: vec![FixedBitSet::with_capacity(order); order],
            arcs: 0,
        }
    }

    /// Builds a digraph from an arc list; duplicates are dropped.
    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(order);
        for (u, v) in arcs {
            if u >= order || v >= order {
                return Err(Error::param(format!(
                    "arc ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    /// Inserts an arc, returning false if it was already present.
    pub(crate) fn add_arc(&mut self, u: usize, v: usize) -> bool {
        if self.out[u].put(v) {
            return false;
        }
        self.inc[v].insert(u);
        self.arcs += 1;
        true
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.out[u].contains(v)
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.has_arc(u, u)
    }

    pub fn has_any_loop(&self) -> bool {
        (0..self.order).any(|u| self.has_loop(u))
    }

    pub fn out_set(&self, u: usize) -> &FixedBitSet {
        &self.out[u]
    }

    pub fn in_set(&self, u: usize) -> &FixedBitSet {
        &self.inc[u]
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[u].ones()
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[u].ones()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones(..)
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.inc[u].count_ones(..)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.out[u].ones().map(move |v| (u, v)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.out[v].contains(u))
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            order: self.order,
            out: self.inc.clone(),
            inc: self.out.clone(),
            arcs: self.arcs,
        }
    }

    /// Relabels vertex `u` as `perm[u]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.order {
            return Err(Error::param("permutation length differs from order"));
        }
        let mut seen = FixedBitSet::with_capacity(self.order);
        for &p in perm {
            if p >= self.order || seen.put(p) {
                return Err(Error::param("relabelling is not a permutation"));
            }
        }
        Digraph::from_arcs(self.order, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Underlying undirected graph is connected (the empty digraph counts as
    /// connected).
    pub fn is_weakly_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.order);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.out[u].ones().chain(self.inc[u].ones()) {
                if !seen.put(v) {
                    stack.push(v);
                }
            }
        }
        seen.count_ones(..) == self.order
    }

    /// Oriented tree: weakly connected, loop-free, no 2-cycles and
    /// `|arcs| = |vertices| - 1`.
    pub fn is_oriented_tree(&self) -> bool {
        self.order > 0
            && self.arcs + 1 == self.order
            && !self.has_any_loop()
            && self.is_weakly_connected()
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.order)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// An undirected graph: a [`Digraph`] with a symmetric arc set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph(Digraph);

impl Graph {
    /// Builds a graph from undirected edges; each `(u, v)` adds both arcs.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(order);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::param(format!(
                    "edge [{u}, {v}] has an endpoint outside 0..{order}"
                )));
            }
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
        Ok(Graph(d))
    }

    pub fn empty(order: usize) -> Self {
        Graph(Digraph::empty(order))
    }

    /// Undirected edges `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.arcs().filter(|&(u, v)| u <= v)
    }

    pub fn edge_count(&self) -> usize {
        let loops = (0..self.order()).filter(|&u| self.has_loop(u)).count();
        (self.arc_count() - loops) / 2 + loops
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.0.out_neighbors(u)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.0.out_degree(u)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        self.0.relabel(perm).map(Graph)
    }
}

impl Deref for Graph {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl AsRef<Digraph> for Graph {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

impl TryFrom<Digraph> for Graph {
    type Error = Error;

    fn try_from(d: Digraph) -> Result<Self> {
        if !d.is_symmetric() {
            return Err(Error::precondition("digraph is not symmetric"));
        }
        Ok(Graph(d))
    }
}

impl From<Graph> for Digraph {
    fn from(g: Graph) -> Digraph {
        g.0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Union-find with the smallest element of each class as its root.
pub(crate) struct MinUnionFind {
    parent: Vec<usize>,
}

impl MinUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        MinUnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }

    /// Maps every element to its class index, classes numbered in order of
    /// their smallest element. Returns `(class_of, class_count)`.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut count = 0;
        let mut class_of = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = count;
                count += 1;
            }
            class_of[x] = index[r];
        }
        (class_of, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_arcs_deduplicates() {
        let d = Digraph::from_arcs(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_arc(0, 1));
        assert!(!d.has_arc(1, 0));
    }

    #[test]
    fn endpoint_out_of_range_is_rejected() {
        assert!(Digraph::from_arcs(2, [(0, 2)]).is_err());
        assert!(Graph::from_edges(2, [(5, 0)]).is_err());
    }

    #[test]
    fn loops_count_once() {
        let g = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.arc_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn try_from_rejects_asymmetric() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(Graph::try_from(d).is_err());
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(Graph::try_from(d).unwrap().edge_count(), 1);
    }

    #[test]
    fn relabel_checks_permutation() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        assert!(d.relabel(&[0, 0, 1]).is_err());
        let r = d.relabel(&[2, 0, 1]).unwrap();
        assert!(r.has_arc(2, 0));
    }

    #[test]
    fn oriented_tree_detection() {
        assert!(directed_path(3).is_oriented_tree());
        assert!(Digraph::empty(1).is_oriented_tree());
        assert!(!Digraph::empty(2).is_oriented_tree());
        assert!(!directed_cycle(3).unwrap().is_oriented_tree());
    }

    #[test]
    fn union_find_roots_at_minimum() {
        let mut uf = MinUnionFind::new(5);
        uf.union(4, 2);
        uf.union(3, 4);
        assert_eq!(uf.find(3), 2);
        let (class_of, count) = uf.classes();
        assert_eq!(count, 3);
        assert_eq!(class_of, vec![0, 1, 2, 2, 2]);
    }
}
