use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Fraction, Graph, OrientationSpec};

/// Named parametrised graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// Directed cycle on `n >= 1` vertices.
    DirectedCycle(usize),
    /// Undirected path with `m` edges.
    Path(usize),
    /// Directed path `0 -> 1 -> ... -> m` with `m` arcs.
    DirectedPath(usize),
    /// Transitive tournament on `n` vertices, `i -> j` iff `i < j`.
    Tournament(usize),
    /// Circular clique `K_{n/m}`.
    CircularClique(Fraction),
    /// Kneser graph `K(n, k)`.
    Kneser(usize, usize),
    /// Orientation of a path given by its direction string.
    OrientedPath(OrientationSpec),
}

impl Family {
    pub fn build(&self) -> Result<Digraph> {
        Ok(match self {
            Family::Complete(n) => complete(*n).into(),
            Family::Cycle(n) => cycle(*n)?.into(),
            Family::DirectedCycle(n) => directed_cycle(*n)?,
            Family::Path(m) => path(*m).into(),
            Family::DirectedPath(m) => directed_path(*m),
            Family::Tournament(n) => transitive_tournament(*n),
            Family::CircularClique(f) => circular_clique(*f)?.into(),
            Family::Kneser(n, k) => kneser(*n, *k)?.into(),
            Family::OrientedPath(s) => oriented_path(s),
        })
    }
}

/// Builds the graph named by `spec` (see [`Family`]'s `FromStr`).
pub fn standard_family(spec: &str) -> Result<Digraph> {
    spec.parse::<Family>()?.build()
}

impl FromStr for Family {
    type Err = Error;

    /// Syntax: `complete:N`, `cycle:N`, `dcycle:N`, `path:M`, `dpath:M`,
    /// `tournament:N`, `circular:N/M`, `kneser:N,K`, `opath:DIRS`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::param(format!("family spec {s:?} must look like name:params")))?;
        let int = |a: &str| -> Result<usize> {
            a.trim()
                .parse()
                .map_err(|_| Error::param(format!("bad integer {a:?} in family spec {s:?}")))
        };
        Ok(match name.trim() {
            "complete" | "K" => Family::Complete(int(arg)?),
            "cycle" | "C" => Family::Cycle(int(arg)?),
            "dcycle" => Family::DirectedCycle(int(arg)?),
            "path" | "P" => Family::Path(int(arg)?),
            "dpath" => Family::DirectedPath(int(arg)?),
            "tournament" | "T" => Family::Tournament(int(arg)?),
            "circular" => Family::CircularClique(arg.parse()?),
            "kneser" => {
                let (n, k) = arg
                    .split_once(',')
                    .ok_or_else(|| Error::param("kneser spec needs n,k"))?;
                Family::Kneser(int(n)?, int(k)?)
            }
            "opath" => Family::OrientedPath(arg.parse()?),
            other => return Err(Error::param(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::DirectedCycle(n) => write!(f, "dcycle:{n}"),
            Family::Path(m) => write!(f, "path:{m}"),
            Family::DirectedPath(m) => write!(f, "dpath:{m}"),
            Family::Tournament(n) => write!(f, "tournament:{n}"),
            Family::CircularClique(q) => write!(f, "circular:{q}"),
            Family::Kneser(n, k) => write!(f, "kneser:{n},{k}"),
            Family::OrientedPath(s) => write!(f, "opath:{s}"),
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u != v {
                d.add_arc(u, v);
            }
        }
    }
    Graph(d)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::param("directed cycle needs at least 1 vertex"));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path with `m` edges on `m + 1` vertices.
pub fn path(m: usize) -> Graph {
    let mut d = Digraph::empty(m + 1);
    for i in 0..m {
        d.add_arc(i, i + 1);
        d.add_arc(i + 1, i);
    }
    Graph(d)
}

/// `0 -> 1 -> ... -> m`.
pub fn directed_path(m: usize) -> Digraph {
    oriented_path(&OrientationSpec::forward(m))
}

pub fn transitive_tournament(n: usize) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            d.add_arc(u, v);
        }
    }
    d
}

/// Vertices `Z_n`, `u ~ v` iff `u - v mod n` lies in `{m, ..., n - m}`.
pub fn circular_clique(q: Fraction) -> Result<Graph> {
    if !q.is_circular_clique_ratio() {
        return Err(Error::param(format!("K_{{{q}}} needs 2m <= n")));
    }
    let (n, m) = (q.num() as usize, q.den() as usize);
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            let diff = (u + n - v) % n;
            if diff >= m && diff <= n - m {
                d.add_arc(u, v);
            }
        }
    }
    Ok(Graph(d))
}

/// Kneser graph: `k`-subsets of `{0..n-1}` in lexicographic order, adjacent
/// iff disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n > 64 {
        return Err(Error::param(format!(
            "kneser graph K({n},{k}) needs 1 <= k and n <= 64"
        )));
    }
    let subsets = k_subsets(n, k);
    let mut d = Digraph::empty(subsets.len());
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate() {
            if a & b == 0 {
                d.add_arc(i, j);
            }
        }
    }
    Ok(Graph(d))
}

/// `k`-subsets of `0..n` as bitmasks, in lexicographic order of their sorted
/// element lists.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            if n - i < left {
                break;
            }
            rec(i + 1, n, left - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// Path on `0..=len` with arc `i -> i+1` or `i+1 -> i` as `spec` dictates.
pub fn oriented_path(spec: &OrientationSpec) -> Digraph {
    let mut d = Digraph::empty(spec.len() + 1);
    for i in 0..spec.len() {
        if spec.is_reversed(i) {
            d.add_arc(i + 1, i);
        } else {
            d.add_arc(i, i + 1);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_5_2_is_c5() {
        let k = circular_clique(Fraction::new(5, 2).unwrap()).unwrap();
        let expected: Vec<(usize, usize)> = vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)];
        assert_eq!(k.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn kneser_4_2_is_a_perfect_matching() {
        // Oracle: enumerate all pairs of 2-subsets of {0,1,2,3} and test
        // disjointness directly.
        let pairs: Vec<[usize; 2]> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| [i, j]))
            .collect();
        let mut expected = Vec::new();
        for (a, pa) in pairs.iter().enumerate() {
            for (b, pb) in pairs.iter().enumerate() {
                if a < b && pa.iter().all(|x| !pb.contains(x)) {
                    expected.push((a, b));
                }
            }
        }
        let k = kneser(4, 2).unwrap();
        assert_eq!(k.order(), 6);
        assert_eq!(k.edges().collect::<Vec<_>>(), expected);
        assert!((0..6).all(|u| k.degree(u) == 1));
    }

    #[test]
    fn tournament_1_is_a_single_vertex() {
        let t = transitive_tournament(1);
        assert_eq!((t.order(), t.arc_count()), (1, 0));
    }

    #[test]
    fn invalid_parameters() {
        assert!(circular_clique(Fraction::new(5, 3).unwrap()).is_err());
        assert!(cycle(2).is_err());
        assert!(directed_cycle(0).is_err());
        assert!(standard_family("wheel:5").is_err());
        assert!(standard_family("cycle:x").is_err());
    }

    #[test]
    fn family_spec_round_trip() {
        for s in [
            "complete:4",
            "cycle:5",
            "dcycle:3",
            "path:2",
            "dpath:3",
            "tournament:4",
            "circular:7/3",
            "kneser:5,2",
            "opath:↑↓↑",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
    }

    #[test]
    fn directed_families() {
        let p = directed_path(2);
        assert_eq!(p.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let c = directed_cycle(1).unwrap();
        assert!(c.has_loop(0));
        assert_eq!(transitive_tournament(4).arc_count(), 6);
    }
}
