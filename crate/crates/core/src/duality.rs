//! Shift graphs, sproinks and exhaustive homomorphism-duality checks.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::adjoints::arc_graph;
use crate::error::{Error, Result};
use crate::graph::{
    complete, directed_path, enumerate_graphs, k_subsets, oriented_path, symmetrization, Digraph,
    EnumSpec, Graph, MinUnionFind, OrientationSpec,
};
use crate::hom::{HomSearch, HomWitness, PreparedTarget};
use crate::limits::Limits;

/// `R(n, k)`: increasing `k`-tuples over `0..n` in lexicographic order, with
/// `(u_1..u_k) -> (u_2..u_k, x)` for every `x > u_k`.
pub fn shift_graph(n: usize, k: usize, limits: &Limits) -> Result<Digraph> {
    if k < 2 || k > n {
        return Err(Error::param(format!(
            "shift graph needs 2 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if n > 64 {
        return Err(Error::param("shift graph supports n <= 64"));
    }
    limits.check_size("shift graph", binomial(n, k))?;
    let tuples = k_subsets(n, k);
    let index: HashMap<u64, usize> = tuples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut d = Digraph::empty(tuples.len());
    for (i, &t) in tuples.iter().enumerate() {
        let tail = t & (t - 1);
        let top = 63 - t.leading_zeros() as usize;
        for x in top + 1..n {
            d.add_arc(i, index[&(tail | 1 << x)]);
        }
    }
    Ok(d)
}

/// `R′(n, k)`, the symmetrization of [`shift_graph`].
pub fn symmetric_shift_graph(n: usize, k: usize, limits: &Limits) -> Result<Graph> {
    shift_graph(n, k, limits).map(|d| symmetrization(&d))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Lifts a proper `k`-colouring of `δ(H)` to a colouring of `H` by colour
/// sets: `u` gets the bitmask of colours on its out-arcs. The result is a
/// homomorphism from the symmetrization of `H` to `K_{2^k}`.
pub fn delta_colouring_lift(
    h: &Digraph,
    colouring: &HomWitness,
    limits: &Limits,
) -> Result<HomWitness> {
    let k = colouring.target_order();
    if k > 20 {
        return Err(Error::param(format!(
            "colour lift supports k <= 20, got {k}"
        )));
    }
    let delta = arc_graph(h, limits)?;
    if !colouring.verify(&delta, complete(k).as_digraph()) {
        return Err(Error::precondition(
            "colouring is not a proper colouring of δ(H)",
        ));
    }
    let mut sets = vec![0usize; h.order()];
    for (i, (u, _)) in h.arcs().enumerate() {
        sets[u] |= 1 << colouring.image(i);
    }
    // The colour of (u, v) is in u's set, and every out-arc of v is adjacent
    // to (u, v) in δ(H), so it is missing from v's set.
    for (i, (u, v)) in h.arcs().enumerate() {
        let c = 1 << colouring.image(i);
        assert!(
            sets[u] & c != 0 && sets[v] & c == 0,
            "colour of arc {u} -> {v} does not separate its ends"
        );
    }
    HomWitness::new(
        sets,
        symmetrization(h).as_digraph(),
        complete(1 << k).as_digraph(),
    )
}

/// One vertex of a sproink's base tree: a tree `F(u)` with its level map
/// `φ_u` onto `P⃗_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SproinkPiece {
    tree: Digraph,
    levels: Vec<u8>,
}

impl SproinkPiece {
    pub fn new(tree: Digraph, levels: Vec<u8>) -> Result<Self> {
        if !tree.is_oriented_tree() {
            return Err(Error::precondition("sproink piece is not an oriented tree"));
        }
        if levels.len() != tree.order() || levels.iter().any(|&l| l > 1) {
            return Err(Error::precondition(
                "level map must send every vertex to 0 or 1",
            ));
        }
        if let Some((x, y)) = tree.arcs().find(|&(x, y)| levels[x] != 0 || levels[y] != 1) {
            return Err(Error::precondition(format!(
                "level map is not a homomorphism to P⃗_1: arc {x} -> {y}"
            )));
        }
        Ok(SproinkPiece { tree, levels })
    }

    /// A single vertex at the given level.
    pub fn point(level: u8) -> Result<Self> {
        SproinkPiece::new(Digraph::empty(1), vec![level])
    }

    /// An alternating path; levels are forced by the arc directions.
    pub fn zigzag(spec: &OrientationSpec) -> Result<Self> {
        let bits = spec.bits();
        if bits.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::precondition(format!("{spec} does not alternate")));
        }
        let tree = oriented_path(spec);
        let start = bits.first().copied().unwrap_or(false) as usize;
        let levels = (0..tree.order()).map(|i| ((i + start) % 2) as u8).collect();
        SproinkPiece::new(tree, levels)
    }

    pub fn tree(&self) -> &Digraph {
        &self.tree
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }
}

/// A base tree `T`, a piece per vertex of `T`, and for every arc `e = (u, u′)`
/// of `T` (in arc order) the attachment pair `(v(u, e), v(u′, e))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SproinkRecipe {
    base: Digraph,
    pieces: Vec<SproinkPiece>,
    attachments: Vec<(usize, usize)>,
}

impl SproinkRecipe {
    pub fn new(
        base: Digraph,
        pieces: Vec<SproinkPiece>,
        attachments: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if !base.is_oriented_tree() {
            return Err(Error::precondition("sproink base is not an oriented tree"));
        }
        if pieces.len() != base.order() {
            return Err(Error::precondition(format!(
                "{} pieces for a base tree on {} vertices",
                pieces.len(),
                base.order()
            )));
        }
        if attachments.len() != base.arc_count() {
            return Err(Error::precondition(format!(
                "{} attachment pairs for {} arcs",
                attachments.len(),
                base.arc_count()
            )));
        }
        for ((u, w), &(a, b)) in base.arcs().zip(&attachments) {
            for (vertex, piece, at, level) in [(u, &pieces[u], a, 1), (w, &pieces[w], b, 0)] {
                if at >= piece.tree.order() {
                    return Err(Error::precondition(format!(
                        "attachment {at} is outside F({vertex})"
                    )));
                }
                if piece.levels[at] != level {
                    return Err(Error::precondition(format!(
                        "attachment {at} of F({vertex}) for arc {u} -> {w} must be on level {level}"
                    )));
                }
            }
        }
        Ok(SproinkRecipe {
            base,
            pieces,
            attachments,
        })
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn pieces(&self) -> &[SproinkPiece] {
        &self.pieces
    }

    pub fn attachments(&self) -> &[(usize, usize)] {
        &self.attachments
    }
}

/// The disjoint union of the pieces with each attachment pair identified.
/// Vertices are numbered by their smallest label in the union.
pub fn sproink(recipe: &SproinkRecipe) -> Result<Digraph> {
    let mut offset = Vec::with_capacity(recipe.pieces.len());
    let mut total = 0;
    for p in &recipe.pieces {
        offset.push(total);
        total += p.tree.order();
    }
    let mut uf = MinUnionFind::new(total);
    for ((u, w), &(a, b)) in recipe.base.arcs().zip(&recipe.attachments) {
        uf.union(offset[u] + a, offset[w] + b);
    }
    let (class_of, count) = uf.classes();
    let mut s = Digraph::empty(count);
    for (p, &off) in recipe.pieces.iter().zip(&offset) {
        for (x, y) in p.tree.arcs() {
            s.add_arc(class_of[off + x], class_of[off + y]);
        }
    }
    if !s.is_oriented_tree() {
        return Err(Error::precondition("sproink is not a tree"));
    }
    Ok(s)
}

/// The sproink of `P⃗_k` whose end pieces are points and whose `u`-th inner
/// piece is the zigzag `↑(↓↑)^{turns[u-1]}`, glued end to end.
pub fn path_sproink_recipe(k: usize, turns: &[usize]) -> Result<SproinkRecipe> {
    if k == 0 || turns.len() != k - 1 {
        return Err(Error::param(format!(
            "P⃗_{k} needs {} inner pieces",
            k.saturating_sub(1)
        )));
    }
    let mut pieces = vec![SproinkPiece::point(1)?];
    for &t in turns {
        let bits = std::iter::once(false)
            .chain((0..t).flat_map(|_| [true, false]))
            .collect();
        pieces.push(SproinkPiece::zigzag(&OrientationSpec::new(bits))?);
    }
    pieces.push(SproinkPiece::point(0)?);
    let attachments = (0..k).map(|u| (pieces[u].tree.order() - 1, 0)).collect();
    SproinkRecipe::new(directed_path(k), pieces, attachments)
}

/// Orientation strings of `↑(↑(↓↑)*)^{k-3}↑` with at most `max_len` arcs, by
/// length and then lexicographically.
pub fn minimal_path_sproink_specs(k: usize, max_len: usize) -> Result<Vec<OrientationSpec>> {
    if k < 3 {
        return Err(Error::param(format!(
            "minimal path sproinks need k >= 3, got {k}"
        )));
    }
    let mut out = Vec::new();
    let mut turns = vec![0usize; k - 1];
    fn rec(i: usize, budget: usize, turns: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 >= turns.len() {
            out.push(turns.clone());
            return;
        }
        for t in 0..=budget / 2 {
            turns[i] = t;
            rec(i + 1, budget - 2 * t, turns, out);
        }
        turns[i] = 0;
    }
    if max_len >= k - 1 {
        let mut all = Vec::new();
        rec(1, max_len - (k - 1), &mut turns, &mut all);
        for t in all {
            let s = sproink(&path_sproink_recipe(k, &t)?)?;
            out.push(OrientationSpec::from_path(&s)?);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.bits().cmp(b.bits())));
    out.dedup();
    Ok(out)
}

/// [`minimal_path_sproink_specs`] as oriented-path digraphs.
pub fn minimal_path_sproinks(k: usize, max_len: usize) -> Result<Vec<Digraph>> {
    Ok(minimal_path_sproink_specs(k, max_len)?
        .iter()
        .map(oriented_path)
        .collect())
}

type Generator = Box<dyn Fn(usize) -> Result<Vec<Digraph>> + Send + Sync>;

/// A candidate complete set of obstructions, either finite or an infinite
/// family cut off at a length bound.
pub enum ObstructionFamily {
    Finite(Vec<Digraph>),
    Truncated { length: usize, generate: Generator },
}

impl ObstructionFamily {
    pub fn truncated<F>(length: usize, generate: F) -> Self
    where
        F: Fn(usize) -> Result<Vec<Digraph>> + Send + Sync + 'static,
    {
        ObstructionFamily::Truncated {
            length,
            generate: Box::new(generate),
        }
    }

    /// Minimal sproinks of `P⃗_k` up to `length` arcs.
    pub fn path_sproinks(k: usize, length: usize) -> Self {
        ObstructionFamily::truncated(length, move |l| minimal_path_sproinks(k, l))
    }

    fn members(&self, length: Option<usize>) -> Result<Vec<Digraph>> {
        match self {
            ObstructionFamily::Finite(v) => Ok(v.clone()),
            ObstructionFamily::Truncated {
                length: l,
                generate,
            } => generate(length.unwrap_or(*l)),
        }
    }
}

impl fmt::Debug for ObstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionFamily::Finite(v) => f.debug_tuple("Finite").field(v).finish(),
            ObstructionFamily::Truncated { length, .. } => {
                write!(f, "Truncated {{ length: {length} }}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityFailure {
    /// `G ↛ H` yet no member maps to `G`.
    Uncovered,
    /// Member `obstruction` maps to `G`, and so does `G` to `H`.
    Both {
        obstruction: usize,
        witness: HomWitness,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCounterexample {
    pub graph: Digraph,
    pub failure: DualityFailure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub nmax: usize,
    pub checked: u64,
    pub members: usize,
    /// Final truncation length for truncated families.
    pub length: Option<usize>,
    pub escalated: bool,
    pub counterexample: Option<DualityCounterexample>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `G ↛ H ⟺ ∃F ∈ 𝓕: F → G` for every labelled digraph `G` (loops
/// allowed) on `1..=nmax` vertices. A truncated family whose first failure
/// is [`DualityFailure::Uncovered`] is retried once at twice the length.
pub fn verify_duality(
    family: &ObstructionFamily,
    h: &Digraph,
    nmax: usize,
    limits: &Limits,
) -> Result<DualityReport> {
    verify_duality_with(family, h, nmax, false, limits)
}

/// [`verify_duality`], optionally over one digraph per isomorphism class.
pub fn verify_duality_with(
    family: &ObstructionFamily,
    h: &Digraph,
    nmax: usize,
    iso_reject: bool,
    limits: &Limits,
) -> Result<DualityReport> {
    limits.check_size("duality target", h.order() as u128)?;
    let mut length = match family {
        ObstructionFamily::Finite(_) => None,
        ObstructionFamily::Truncated { length, .. } => Some(*length),
    };
    let mut escalated = false;
    loop {
        let members = family.members(length)?;
        for f in &members {
            limits.check_size("obstruction", f.order() as u128)?;
        }
        let (checked, counterexample) = scan(&members, h, nmax, iso_reject, limits)?;
        let retry = !escalated
            && length.is_some()
            && matches!(&counterexample, Some(c) if c.failure == DualityFailure::Uncovered);
        if retry {
            length = length.map(|l| (2 * l).max(1));
            escalated = true;
            continue;
        }
        return Ok(DualityReport {
            nmax,
            checked,
            members: members.len(),
            length,
            escalated,
            counterexample,
        });
    }
}

fn scan(
    members: &[Digraph],
    h: &Digraph,
    nmax: usize,
    iso_reject: bool,
    limits: &Limits,
) -> Result<(u64, Option<DualityCounterexample>)> {
    let target = PreparedTarget::new(h);
    let mut checked = 0u64;
    for n in 1..=nmax {
        let mut spec = EnumSpec::directed(n).with_loops(true).with_cap(nmax);
        if iso_reject {
            spec = spec.iso_reject();
        }
        let universe: Vec<Digraph> = enumerate_graphs(spec)?.collect();
        checked += universe.len() as u64;
        let first =
            universe
                .par_iter()
                .find_map_first(|g| match check_one(members, &target, g, limits) {
                    Ok(None) => None,
                    Ok(Some(failure)) => Some(Ok(DualityCounterexample {
                        graph: g.clone(),
                        failure,
                    })),
                    Err(e) => Some(Err(e)),
                });
        if let Some(found) = first {
            return Ok((checked, Some(found?)));
        }
    }
    Ok((checked, None))
}

fn check_one(
    members: &[Digraph],
    h: &PreparedTarget,
    g: &Digraph,
    limits: &Limits,
) -> Result<Option<DualityFailure>> {
    let to_h = HomSearch::prepared(g, h).limits(limits).find()?;
    let g_prepared = PreparedTarget::new(g);
    let mut covering = None;
    for (i, f) in members.iter().enumerate() {
        if HomSearch::prepared(f, &g_prepared)
            .limits(limits)
            .exists()?
        {
            covering = Some(i);
            break;
        }
    }
    Ok(match (to_h, covering) {
        (None, None) => Some(DualityFailure::Uncovered),
        (Some(witness), Some(obstruction)) => Some(DualityFailure::Both {
            obstruction,
            witness,
        }),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::optimal_colouring;
    use crate::graph::{directed_cycle, transitive_tournament};
    use crate::hom::isomorphic;

    fn specs(k: usize, max_len: usize) -> Vec<String> {
        minimal_path_sproink_specs(k, max_len)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn shift_graph_small() {
        let l = Limits::default();
        let r42 = shift_graph(4, 2, &l).unwrap();
        assert_eq!(r42.order(), 6);
        let delta = arc_graph(&transitive_tournament(4), &l).unwrap();
        assert!(isomorphic(&r42, &delta).unwrap());
        // (0,1) -> (1,2), (1,3)
        assert_eq!(r42.out_neighbors(0).collect::<Vec<_>>(), vec![3, 4]);
        assert!(shift_graph(3, 4, &l).is_err());
        assert!(shift_graph(3, 1, &l).is_err());
    }

    #[test]
    fn colour_lift_on_k4() {
        let l = Limits::default();
        let k4 = complete(4).into_digraph();
        let delta = arc_graph(&k4, &l).unwrap();
        let (k, colouring) = optimal_colouring(&symmetrization(&delta), &l).unwrap();
        let lifted = delta_colouring_lift(&k4, &colouring, &l).unwrap();
        assert_eq!(lifted.target_order(), 1 << k);
        assert!(lifted.verify(&k4, complete(1 << k).as_digraph()));
    }

    #[test]
    fn colour_lift_rejects_improper_input() {
        let l = Limits::default();
        let c3 = directed_cycle(3).unwrap();
        let one =
            HomWitness::new(vec![0, 0, 0], &Digraph::empty(3), complete(1).as_digraph()).unwrap();
        assert!(matches!(
            delta_colouring_lift(&c3, &one, &l),
            Err(Error::Precondition(_))
        ));
        let empty = Digraph::empty(3);
        let none = HomWitness::new(vec![], &Digraph::empty(0), complete(2).as_digraph()).unwrap();
        assert_eq!(
            delta_colouring_lift(&empty, &none, &l).unwrap().map(),
            &[0, 0, 0]
        );
    }

    #[test]
    fn sproink_of_single_arc_is_a_point() {
        let r = SproinkRecipe::new(
            directed_path(1),
            vec![
                SproinkPiece::point(1).unwrap(),
                SproinkPiece::point(0).unwrap(),
            ],
            vec![(0, 0)],
        )
        .unwrap();
        assert_eq!(sproink(&r).unwrap(), Digraph::empty(1));
    }

    #[test]
    fn sproink_of_p3_is_two_arcs() {
        let s = sproink(&path_sproink_recipe(3, &[0, 0]).unwrap()).unwrap();
        assert_eq!(s, directed_path(2));
    }

    #[test]
    fn recipe_level_violations() {
        let bad = SproinkRecipe::new(
            directed_path(1),
            vec![
                SproinkPiece::point(0).unwrap(),
                SproinkPiece::point(0).unwrap(),
            ],
            vec![(0, 0)],
        );
        assert!(matches!(bad, Err(Error::Precondition(_))));
        assert!(SproinkPiece::new(directed_path(1), vec![1, 0]).is_err());
        assert!(SproinkPiece::zigzag(&"↑↑".parse().unwrap()).is_err());
    }

    #[test]
    fn minimal_sproink_expansion() {
        assert_eq!(specs(3, 12), vec!["↑↑"]);
        assert_eq!(specs(4, 6), vec!["↑↑↑", "↑↑↓↑↑"]);
        assert_eq!(specs(5, 4), vec!["↑↑↑↑"]);
        assert_eq!(specs(4, 12).len(), 5);
        assert!(specs(4, 2).is_empty());
        assert!(minimal_path_sproink_specs(2, 5).is_err());
    }

    #[test]
    fn path_duality_small() {
        let l = Limits::default();
        let f = ObstructionFamily::Finite(vec![directed_path(2)]);
        let r = verify_duality(&f, &transitive_tournament(2), 3, &l).unwrap();
        assert!(r.holds(), "{r:?}");
        let bad = verify_duality(&f, &transitive_tournament(3), 3, &l).unwrap();
        let c = bad.counterexample.unwrap();
        assert!(matches!(c.failure, DualityFailure::Both { .. }));
    }

    #[test]
    fn truncation_escalates_once() {
        let l = Limits::default();
        // T⃗_3 needs ↑↑↓↑↑, which only appears after doubling 3 to 6.
        let f = ObstructionFamily::path_sproinks(4, 3);
        let r = verify_duality(
            &f,
            &arc_graph(&transitive_tournament(4), &l).unwrap(),
            3,
            &l,
        )
        .unwrap();
        assert!(r.escalated);
        assert_eq!(r.length, Some(6));
        assert!(r.holds(), "{r:?}");
        let short = verify_duality(&ObstructionFamily::path_sproinks(4, 2), &r42(), 3, &l).unwrap();
        assert_eq!(short.length, Some(4));
        let c = short.counterexample.unwrap();
        assert_eq!(c.failure, DualityFailure::Uncovered);
        assert_eq!(c.graph, transitive_tournament(3));
    }

    fn r42() -> Digraph {
        shift_graph(4, 2, &Limits::default()).unwrap()
    }
}
