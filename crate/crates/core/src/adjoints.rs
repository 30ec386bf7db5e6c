//! Explicit right adjoints and derived composite functors: `Ω_{T_m}` for odd
//! paths, `Ω_T` for oriented paths, the arc graph `δ` and its left adjoint
//! `δ_L`, the interleaved adjoints `ι_m`, and the odd powers and roots.
//!
//! Vertex subsets are `u64` bitmasks, so these constructions accept graphs
//! on at most 64 vertices. Tuples of sets are ordered lexicographically with
//! each set compared as an integer mask.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{decode_map, Digraph, Graph, MinUnionFind, OrientationSpec};
use crate::limits::{saturating_pow, Limits};
use crate::pultr::{gamma_functor, lambda_functor, path_template};

/// A vertex `(u, U_1, ..., U_k)` of an `Ω` construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaVertex {
    pub base: usize,
    pub sets: Vec<u64>,
}

impl OmegaVertex {
    pub fn set_members(&self, i: usize) -> Vec<usize> {
        bits(self.sets[i]).collect()
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

/// Submasks of `mask` in increasing order.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != mask).then(|| cur.wrapping_sub(mask) & mask);
        Some(cur)
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn out_masks(h: &Digraph, what: &str) -> Result<Vec<u64>> {
    if h.order() > 64 {
        return Err(Error::param(format!(
            "{what} supports at most 64 vertices, got {}",
            h.order()
        )));
    }
    Ok((0..h.order())
        .map(|u| h.out_neighbors(u).fold(0u64, |m, v| m | 1 << v))
        .collect())
}

fn in_masks(h: &Digraph) -> Vec<u64> {
    (0..h.order())
        .map(|u| h.in_neighbors(u).fold(0u64, |m, v| m | 1 << v))
        .collect()
}

/// Vertices adjacent to every member of `set`; everything when `set` is empty.
fn common_neighbours(nbr: &[u64], set: u64, all: u64) -> u64 {
    bits(set).fold(all, |acc, x| acc & nbr[x])
}

/// Builds the arcs of a tuple construction row by row, in parallel, with a
/// size check on the worst case `order + order^2` first.
fn build_rows<V: Sync>(
    vertices: &[V],
    what: &str,
    limits: &Limits,
    adjacent: impl Fn(&V, &V) -> bool + Sync,
) -> Result<Digraph> {
    let n = vertices.len();
    limits.check_size(what, n as u128 + (n as u128) * (n as u128))?;
    let rows: Vec<Vec<usize>> = vertices
        .par_iter()
        .map(|a| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, b)| adjacent(a, b))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut d = Digraph::empty(n);
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            d.add_arc(i, j);
        }
    }
    Ok(d)
}

fn odd_path_vertices(h: &Graph, k: usize, limits: &Limits) -> Result<Vec<OmegaVertex>> {
    let nbr = out_masks(h, "Ω")?;
    let all = full_mask(h.order());
    let mut out = Vec::new();
    let mut sets = Vec::with_capacity(k);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        nbr: &[u64],
        all: u64,
        k: usize,
        base: usize,
        allowed: u64,
        sets: &mut Vec<u64>,
        out: &mut Vec<OmegaVertex>,
        limits: &Limits,
    ) -> Result<()> {
        if sets.len() == k {
            out.push(OmegaVertex {
                base,
                sets: sets.clone(),
            });
            return limits.check_size("Ω vertex set", out.len() as u128);
        }
        for s in submasks(allowed) {
            sets.push(s);
            let next = common_neighbours(nbr, s, all);
            rec(nbr, all, k, base, next, sets, out, limits)?;
            sets.pop();
        }
        Ok(())
    }
    for u in 0..h.order() {
        rec(&nbr, all, k, u, nbr[u], &mut sets, &mut out, limits)?;
    }
    Ok(out)
}

/// Number of vertices of `Ω_{T_m}(H)`, counted without building it.
pub fn omega_odd_path_order(m: usize, h: &Graph) -> Result<u128> {
    check_odd(m, "Ω_{T_m}")?;
    if m == 1 {
        return Ok(h.order() as u128);
    }
    let nbr = out_masks(h, "Ω")?;
    let all = full_mask(h.order());
    fn count(nbr: &[u64], all: u64, left: usize, allowed: u64) -> u128 {
        if left == 0 {
            return 1;
        }
        submasks(allowed)
            .map(|s| count(nbr, all, left - 1, common_neighbours(nbr, s, all)))
            .sum()
    }
    Ok((0..h.order())
        .map(|u| count(&nbr, all, (m - 1) / 2, nbr[u]))
        .sum())
}

fn check_odd(m: usize, what: &str) -> Result<()> {
    if m % 2 == 0 {
        return Err(Error::param(format!(
            "{what} is only defined for odd m, got {m}"
        )));
    }
    Ok(())
}

/// `Ω_{T_m}(H)` for odd `m = 2k + 1` with its vertex labels. Vertices are the
/// tuples `(u, U_1, ..., U_k)` with `U_1 ⊆ N(u)` and `U_i` completely joined
/// to `U_{i-1}`; `(u, U) ~ (v, V)` iff `u ∈ V_1`, `v ∈ U_1`,
/// `U_{i-1} ⊆ V_i`, `V_{i-1} ⊆ U_i` for `i = 2..k`, and `U_k` is completely
/// joined to `V_k`. `m = 1` gives `H` itself (`Γ_{T_1}` is the identity).
pub fn omega_odd_path_labelled(
    m: usize,
    h: &Graph,
    limits: &Limits,
) -> Result<(Graph, Vec<OmegaVertex>)> {
    check_odd(m, "Ω_{T_m}")?;
    if m == 1 {
        let labels = (0..h.order())
            .map(|u| OmegaVertex {
                base: u,
                sets: Vec::new(),
            })
            .collect();
        return Ok((h.clone(), labels));
    }
    let k = (m - 1) / 2;
    let vertices = odd_path_vertices(h, k, limits)?;
    let nbr = out_masks(h, "Ω")?;
    let all = full_mask(h.order());
    let items: Vec<(&OmegaVertex, u64)> = vertices
        .iter()
        .map(|x| (x, common_neighbours(&nbr, x.sets[k - 1], all)))
        .collect();
    let d = build_rows(&items, "Ω", limits, |&(a, a_common), &(b, _)| {
        b.sets[0] >> a.base & 1 == 1
            && a.sets[0] >> b.base & 1 == 1
            && (1..k).all(|i| a.sets[i - 1] & !b.sets[i] == 0 && b.sets[i - 1] & !a.sets[i] == 0)
            && b.sets[k - 1] & !a_common == 0
    })?;
    let g = Graph::try_from(d).expect("Ω adjacency is symmetric");
    Ok((g, vertices))
}

pub fn omega_odd_path(m: usize, h: &Graph, limits: &Limits) -> Result<Graph> {
    omega_odd_path_labelled(m, h, limits).map(|(g, _)| g)
}

/// Which way the base vertex `u` and the last set `U_m` must be joined in an
/// oriented-path `Ω` vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseCondition {
    /// `U_m ⇛ u`: every member of `U_m` has an arc to `u`. This is the
    /// variant the adjunction harness confirms.
    LastToBase,
    /// `u ⇛ U_m`: `u` has an arc to every member of `U_m`, as literally
    /// written in the definition. Kept for comparison; it produces the
    /// right adjoint of the reversed functor.
    BaseToLast,
}

/// `Ω_T(H)` for the template `(K_1, Q, endpoints)` with `Q` an oriented path
/// on `0..=m`. Vertices are `(u, U_1, ..., U_m)`; `(u, U) -> (v, V)` iff
/// (1a) `u ∈ V_1` if `0 -> 1`, (1b) `v ∈ U_1` if `1 -> 0`, and for
/// `i = 1..m-1`: (2a) `U_i ⊆ V_{i+1}` if `i -> i+1`, (2b) `V_i ⊆ U_{i+1}`
/// if `i+1 -> i`.
pub fn omega_oriented_path_labelled(
    q: &OrientationSpec,
    h: &Digraph,
    condition: BaseCondition,
    limits: &Limits,
) -> Result<(Digraph, Vec<OmegaVertex>)> {
    let m = q.len();
    if m == 0 {
        return Err(Error::param("Ω_T needs a path with at least one arc"));
    }
    let outs = out_masks(h, "Ω_T")?;
    let ins = in_masks(h);
    let n = h.order();
    let last_allowed: Vec<u64> = match condition {
        BaseCondition::LastToBase => ins,
        BaseCondition::BaseToLast => outs,
    };
    let free = saturating_pow(2, n * (m - 1));
    let estimate: u128 = last_allowed
        .iter()
        .map(|mask| free.saturating_mul(1u128 << mask.count_ones()))
        .fold(0u128, u128::saturating_add);
    limits.check_size("Ω_T vertex set", estimate)?;

    let all = full_mask(n);
    let mut vertices = Vec::with_capacity(estimate as usize);
    for u in 0..n {
        let mut sets = vec![0u64; m];
        fn rec(
            i: usize,
            m: usize,
            all: u64,
            last: u64,
            u: usize,
            sets: &mut Vec<u64>,
            out: &mut Vec<OmegaVertex>,
        ) {
            if i == m {
                out.push(OmegaVertex {
                    base: u,
                    sets: sets.clone(),
                });
                return;
            }
            let allowed = if i == m - 1 { last } else { all };
            for s in submasks(allowed) {
                sets[i] = s;
                rec(i + 1, m, all, last, u, sets, out);
            }
        }
        rec(0, m, all, last_allowed[u], u, &mut sets, &mut vertices);
    }
    let d = build_rows(&vertices, "Ω_T", limits, |a, b| {
        let first = if q.is_reversed(0) {
            a.sets[0] >> b.base & 1 == 1
        } else {
            b.sets[0] >> a.base & 1 == 1
        };
        first
            && (1..m).all(|i| {
                // Edge between path vertices i and i+1 (sets U_i, U_{i+1}).
                if q.is_reversed(i) {
                    b.sets[i - 1] & !a.sets[i] == 0
                } else {
                    a.sets[i - 1] & !b.sets[i] == 0
                }
            })
    })?;
    Ok((d, vertices))
}

pub fn omega_oriented_path(q: &OrientationSpec, h: &Digraph, limits: &Limits) -> Result<Digraph> {
    omega_oriented_path_labelled(q, h, BaseCondition::LastToBase, limits).map(|(d, _)| d)
}

/// `δ(H)`: vertices are the arcs of `H` in lexicographic order, and
/// `(u, v) -> (x, y)` iff `v = x`.
pub fn arc_graph(h: &Digraph, limits: &Limits) -> Result<Digraph> {
    let arcs: Vec<(usize, usize)> = h.arcs().collect();
    let estimate: u128 =
        arcs.len() as u128 + h.arcs().map(|(_, v)| h.out_degree(v) as u128).sum::<u128>();
    limits.check_size("arc graph", estimate)?;
    let mut first_from = vec![0usize; h.order() + 1];
    for &(u, _) in &arcs {
        first_from[u + 1] += 1;
    }
    for u in 0..h.order() {
        first_from[u + 1] += first_from[u];
    }
    let mut d = Digraph::empty(arcs.len());
    for (i, &(_, v)) in arcs.iter().enumerate() {
        for j in first_from[v]..first_from[v + 1] {
            d.add_arc(i, j);
        }
    }
    Ok(d)
}

/// `δ_L(G)`: every vertex `u` becomes an arc `u_0 -> u_1`, and each arc
/// `u -> v` of `G` identifies `u_1` with `v_0`. With labels `u_0 = 2u`,
/// `u_1 = 2u + 1`, classes are numbered by their smallest label.
pub fn arc_graph_left(g: &Digraph) -> Digraph {
    let mut uf = MinUnionFind::new(2 * g.order());
    for (u, v) in g.arcs() {
        uf.union(2 * u + 1, 2 * v);
    }
    let (class_of, count) = uf.classes();
    let mut d = Digraph::empty(count);
    for u in 0..g.order() {
        d.add_arc(class_of[2 * u], class_of[2 * u + 1]);
    }
    d
}

/// `ι_m(H)`: all `m`-tuples of vertices in lexicographic order;
/// `(u_1..u_m) -> (v_1..v_m)` iff `u_i -> v_i` for all `i` and
/// `v_i -> u_{i+1}` for `i < m`.
pub fn interleaved_adjoint(m: usize, h: &Digraph, limits: &Limits) -> Result<Digraph> {
    if m == 0 {
        return Err(Error::param("ι_m needs m >= 1"));
    }
    let n = h.order();
    let count = saturating_pow(n, m);
    limits.check_size("ι_m vertex set", count)?;
    let count = count as usize;
    let rows: Vec<Result<Vec<usize>>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let u = decode_map(i, n, m);
            // Candidate sets per coordinate; the product enumerates in
            // lexicographic (hence index) order.
            let cands: Vec<Vec<usize>> = (0..m)
                .map(|c| {
                    h.out_neighbors(u[c])
                        .filter(|&v| c + 1 == m || h.has_arc(v, u[c + 1]))
                        .collect()
                })
                .collect();
            let mut row = Vec::new();
            if cands.iter().any(Vec::is_empty) {
                return Ok(row);
            }
            let mut pos = vec![0usize; m];
            loop {
                row.push(
                    pos.iter()
                        .enumerate()
                        .fold(0usize, |acc, (c, &p)| acc * n + cands[c][p]),
                );
                let mut c = m;
                loop {
                    if c == 0 {
                        return Ok(row);
                    }
                    c -= 1;
                    pos[c] += 1;
                    if pos[c] < cands[c].len() {
                        break;
                    }
                    pos[c] = 0;
                }
            }
        })
        .collect();
    let mut d = Digraph::empty(count);
    let mut total = count as u128;
    for (i, row) in rows.into_iter().enumerate() {
        let row = row?;
        total += row.len() as u128;
        limits.check_size("ι_m", total)?;
        for j in row {
            d.add_arc(i, j);
        }
    }
    Ok(d)
}

fn as_graph(d: Digraph, what: &str) -> Result<Graph> {
    Graph::try_from(d)
        .map_err(|_| Error::precondition(format!("{what} produced a non-symmetric digraph")))
}

/// `P^s_r(G) = Γ_{T_s}(Λ_{T_r}(G))` for odd `s`, `r`.
pub fn power_functor(s: usize, r: usize, g: &Graph, limits: &Limits) -> Result<Graph> {
    check_odd(s, "P^s_r")?;
    check_odd(r, "P^s_r")?;
    let sub = lambda_functor(&path_template(r), g, limits)?;
    as_graph(gamma_functor(&path_template(s), &sub, limits)?, "P^s_r")
}

/// Worst-case vertices+arcs of `R^r_s(H)`: `Ω_{T_s}(H)` keeps its vertex set
/// under `Γ_{T_r}`, so this is `N + N^2` with `N = |V(Ω_{T_s}(H))|`.
pub fn root_functor_estimate(s: usize, h: &Graph) -> Result<u128> {
    let n = omega_odd_path_order(s, h)?;
    Ok(n.saturating_add(n.saturating_mul(n)))
}

/// `R^r_s(H) = Γ_{T_r}(Ω_{T_s}(H))` for odd `r`, `s`.
pub fn root_functor(r: usize, s: usize, h: &Graph, limits: &Limits) -> Result<Graph> {
    check_odd(r, "R^r_s")?;
    check_odd(s, "R^r_s")?;
    limits.check_size("R^r_s", root_functor_estimate(s, h)?)?;
    let omega = omega_odd_path(s, h, limits)?;
    as_graph(gamma_functor(&path_template(r), &omega, limits)?, "R^r_s")
}
