use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// Default order caps for exhaustive enumeration.
pub const DEFAULT_DIRECTED_CAP: usize = 5;
pub const DEFAULT_UNDIRECTED_CAP: usize = 6;

/// What [`enumerate_graphs`] should yield.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub order: usize,
    pub directed: bool,
    pub loops: bool,
    /// Yield all orders `1..=order` instead of exactly `order`.
    pub up_to: bool,
    /// Yield one representative per isomorphism class.
    pub iso_reject: bool,
    /// Largest admissible `order`; `None` selects the default cap.
    pub cap: Option<usize>,
}

impl EnumSpec {
    pub fn directed(order: usize) -> Self {
        EnumSpec {
            order,
            directed: true,
            loops: false,
            up_to: false,
            iso_reject: false,
            cap: None,
        }
    }

    pub fn undirected(order: usize) -> Self {
        EnumSpec {
            directed: false,
            ..EnumSpec::directed(order)
        }
    }

    pub fn with_loops(self, loops: bool) -> Self {
        EnumSpec { loops, ..self }
    }

    pub fn up_to(self) -> Self {
        EnumSpec {
            up_to: true,
            ..self
        }
    }

    pub fn iso_reject(self) -> Self {
        EnumSpec {
            iso_reject: true,
            ..self
        }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        EnumSpec {
            cap: Some(cap),
            ..self
        }
    }
}

/// Streams labelled graphs or digraphs in a fixed order: ascending vertex
/// count, then ascending arc bitmask over the slot list.
pub struct GraphEnumerator {
    spec: EnumSpec,
    order: usize,
    slots: Vec<(usize, usize)>,
    next: u64,
    perms: Vec<Vec<usize>>,
}

/// Starts an enumeration; fails when the order exceeds the cap.
pub fn enumerate_graphs(spec: EnumSpec) -> Result<GraphEnumerator> {
    let cap = spec.cap.unwrap_or(if spec.directed {
        DEFAULT_DIRECTED_CAP
    } else {
        DEFAULT_UNDIRECTED_CAP
    });
    if spec.order > cap {
        return Err(Error::Cap(format!(
            "enumeration order {} exceeds cap {cap}",
            spec.order
        )));
    }
    if spec.order > 8 {
        return Err(Error::Cap("enumeration is limited to 8 vertices".into()));
    }
    if slots(spec.order, spec.directed, spec.loops).len() > 62 {
        return Err(Error::Cap("too many arc slots to enumerate".into()));
    }
    let first = if spec.up_to {
        1.min(spec.order)
    } else {
        spec.order
    };
    let mut e = GraphEnumerator {
        spec,
        order: first,
        slots: Vec::new(),
        next: 0,
        perms: Vec::new(),
    };
    e.start_order(first);
    Ok(e)
}

impl GraphEnumerator {
    fn start_order(&mut self, n: usize) {
        self.order = n;
        self.next = 0;
        self.slots = slots(n, self.spec.directed, self.spec.loops);
        if self.spec.iso_reject {
            self.perms = permutations(n);
        }
    }

    fn build(&self, mask: u64) -> Digraph {
        let mut d = Digraph::empty(self.order);
        for (i, &(u, v)) in self.slots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d.add_arc(u, v);
                if !self.spec.directed {
                    d.add_arc(v, u);
                }
            }
        }
        d
    }

    /// A mask is canonical when no relabelling gives a smaller code.
    fn is_canonical(&self, d: &Digraph) -> bool {
        let code = arc_code(d, &identity(self.order));
        self.perms.iter().all(|p| arc_code(d, p) >= code)
    }
}

impl Iterator for GraphEnumerator {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        loop {
            let end = 1u64 << self.slots.len();
            if self.next >= end {
                if self.spec.up_to && self.order < self.spec.order {
                    self.start_order(self.order + 1);
                    continue;
                }
                return None;
            }
            let mask = self.next;
            self.next += 1;
            let d = self.build(mask);
            if self.spec.iso_reject && !self.is_canonical(&d) {
                continue;
            }
            return Some(d);
        }
    }
}

impl GraphEnumerator {
    /// Convenience: collect undirected results as [`Graph`]s.
    pub fn graphs(self) -> impl Iterator<Item = Graph> {
        self.map(|d| Graph::try_from(d).expect("undirected enumeration yields symmetric digraphs"))
    }
}

fn slots(n: usize, directed: bool, loops: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let keep = if u == v { loops } else { directed || u < v };
            if keep {
                out.push((u, v));
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Adjacency matrix of `d` relabelled by `perm`, read row-major as bits
/// `perm[u] * n + perm[v]`. Only meaningful for `n <= 8`.
fn arc_code(d: &Digraph, perm: &[usize]) -> u64 {
    let n = d.order();
    d.arcs()
        .fold(0u64, |acc, (u, v)| acc | 1u64 << (perm[u] * n + perm[v]))
}

/// Canonical relabelling of a digraph on at most 8 vertices: the relabelled
/// copy with the smallest adjacency code. Isomorphic inputs give equal
/// outputs.
pub fn canonical_form(d: &Digraph) -> Result<Digraph> {
    let n = d.order();
    if n > 8 {
        return Err(Error::Cap(format!(
            "canonical form is limited to 8 vertices, got {n}"
        )));
    }
    let best = permutations(n)
        .into_iter()
        .min_by_key(|p| arc_code(d, p))
        .unwrap_or_default();
    d.relabel(&best)
}
