use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// One direction bit per edge of a host: `false` orients the `i`-th edge
/// forward (lower endpoint to higher, or `i -> i+1` on a path), `true`
/// reverses it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrientationSpec {
    bits: Vec<bool>,
}

impl OrientationSpec {
    pub fn new(bits: Vec<bool>) -> Self {
        OrientationSpec { bits }
    }

    /// All edges forward.
    pub fn forward(len: usize) -> Self {
        OrientationSpec {
            bits: vec![false; len],
        }
    }

    /// The `len` low bits of `mask`, bit `i` giving edge `i`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        OrientationSpec {
            bits: (0..len).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_reversed(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn reversed_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The same oriented path read from its other end.
    pub fn mirrored(&self) -> Self {
        OrientationSpec {
            bits: self.bits.iter().rev().map(|b| !b).collect(),
        }
    }

    /// Recovers the direction string of a digraph that is an orientation of
    /// the path `0 - 1 - ... - m`.
    pub fn from_path(d: &Digraph) -> Result<Self> {
        let m = d
            .order()
            .checked_sub(1)
            .ok_or_else(|| Error::param("empty digraph is not a path"))?;
        if d.arc_count() != m {
            return Err(Error::param("digraph is not an oriented path on 0..m"));
        }
        let mut bits = Vec::with_capacity(m);
        for i in 0..m {
            match (d.has_arc(i, i + 1), d.has_arc(i + 1, i)) {
                (true, false) => bits.push(false),
                (false, true) => bits.push(true),
                _ => return Err(Error::param("digraph is not an oriented path on 0..m")),
            }
        }
        Ok(OrientationSpec { bits })
    }
}

impl fmt::Display for OrientationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "↓" } else { "↑" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for OrientationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientationSpec({self})")
    }
}

impl FromStr for OrientationSpec {
    type Err = Error;

    /// Accepts `↑`/`u`/`>`/`0` for forward and `↓`/`d`/`<`/`1` for reversed.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '↑' | 'u' | '>' | '0' => Ok(false),
                '↓' | 'd' | '<' | '1' => Ok(true),
                other => Err(Error::param(format!("bad orientation symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(OrientationSpec::new)
    }
}

fn proper_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if g.has_any_loop() {
        return Err(Error::precondition(
            "orientations require a loop-free graph",
        ));
    }
    Ok(g.edges().collect())
}

fn orient_edges(order: usize, edges: &[(usize, usize)], spec: &OrientationSpec) -> Digraph {
    let mut d = Digraph::empty(order);
    for (i, &(u, v)) in edges.iter().enumerate() {
        if spec.is_reversed(i) {
            d.add_arc(v, u);
        } else {
            d.add_arc(u, v);
        }
    }
    d
}

/// Orients the edges of `g` (in [`Graph::edges`] order) according to `spec`.
pub fn orient(g: &Graph, spec: &OrientationSpec) -> Result<Digraph> {
    let edges = proper_edges(g)?;
    if edges.len() != spec.len() {
        return Err(Error::param(format!(
            "orientation has {} bits but the graph has {} edges",
            spec.len(),
            edges.len()
        )));
    }
    Ok(orient_edges(g.order(), &edges, spec))
}

/// Streams all `2^|E|` orientations of a loop-free graph.
pub struct Orientations {
    order: usize,
    edges: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Orientations {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for Orientations {
    type Item = (OrientationSpec, Digraph);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let spec = OrientationSpec::from_mask(self.next, self.edges.len());
        self.next += 1;
        let d = orient_edges(self.order, &self.edges, &spec);
        Some((spec, d))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// All orientations of `g`; fails on loops or more than 63 edges.
pub fn orientations(g: &Graph) -> Result<Orientations> {
    let edges = proper_edges(g)?;
    if edges.len() > 63 {
        return Err(Error::Cap(format!(
            "{} edges is too many to enumerate orientations",
            edges.len()
        )));
    }
    Ok(Orientations {
        order: g.order(),
        end: 1u64 << edges.len(),
        edges,
        next: 0,
    })
}
