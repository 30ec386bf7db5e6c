//! Homomorphism search between finite digraphs.
//!
//! The problem `G -> H` is solved as a binary CSP: one variable per vertex
//! of `G`, domains are bitsets over `V(H)`, one constraint per arc of `G`.
//! The search maintains arc consistency (AC-3) after every assignment,
//! branches on the smallest domain (ties by vertex index) and tries values
//! in ascending order, so every answer is deterministic.
//!
//! Undirected graphs are passed as symmetric digraphs.

use std::borrow::Cow;
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, tensor_product, Digraph, EnumSpec, Graph};
use crate::limits::{Limits, DEFAULT_BUDGET};

/// An explicit vertex map `source -> target` certifying a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomWitness {
    source_order: usize,
    target_order: usize,
    map: Vec<usize>,
}

impl HomWitness {
    /// Wraps `map` after checking it against the arc sets.
    pub fn new(map: Vec<usize>, source: &Digraph, target: &Digraph) -> Result<Self> {
        if !is_homomorphism(&map, source, target) {
            return Err(Error::precondition("map is not a homomorphism"));
        }
        Ok(HomWitness {
            source_order: source.order(),
            target_order: target.order(),
            map,
        })
    }

    /// The witness for a homomorphism the caller has already checked.
    pub(crate) fn trusted(map: Vec<usize>, target_order: usize) -> Self {
        HomWitness {
            source_order: map.len(),
            target_order,
            map,
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u]
    }

    /// Re-checks the witness against the given source and target.
    pub fn verify(&self, source: &Digraph, target: &Digraph) -> bool {
        self.source_order == source.order()
            && self.target_order == target.order()
            && is_homomorphism(&self.map, source, target)
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &HomWitness) -> Result<HomWitness> {
        if self.target_order != then.source_order {
            return Err(Error::param("witnesses do not compose"));
        }
        Ok(HomWitness {
            source_order: self.source_order,
            target_order: then.target_order,
            map: self.map.iter().map(|&x| then.map[x]).collect(),
        })
    }
}

/// Independent verifier: every arc of `source` maps onto an arc of `target`.
pub fn is_homomorphism(map: &[usize], source: &Digraph, target: &Digraph) -> bool {
    map.len() == source.order()
        && map.iter().all(|&x| x < target.order())
        && source.arcs().all(|(u, v)| target.has_arc(map[u], map[v]))
}

/// Target adjacency flattened into word rows for the solver.
#[derive(Clone)]
pub struct PreparedTarget {
    order: usize,
    words: usize,
    out: Vec<u64>,
    inc: Vec<u64>,
    looped: Vec<u64>,
    first_loop: Option<usize>,
    degrees: Vec<(usize, usize, bool)>,
}

impl PreparedTarget {
    pub fn new(h: &Digraph) -> Self {
        let n = h.order();
        let words = n.div_ceil(64);
        let mut out = vec![0u64; n * words];
        let mut inc = vec![0u64; n * words];
        let mut looped = vec![0u64; words];
        for (a, b) in h.arcs() {
            out[a * words + b / 64] |= 1 << (b % 64);
            inc[b * words + a / 64] |= 1 << (a % 64);
            if a == b {
                looped[a / 64] |= 1 << (a % 64);
            }
        }
        let degrees = (0..n)
            .map(|a| (h.out_degree(a), h.in_degree(a), h.has_loop(a)))
            .collect();
        PreparedTarget {
            order: n,
            words,
            out,
            inc,
            looped,
            first_loop: (0..n).find(|&a| h.has_loop(a)),
            degrees,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn out_row(&self, a: usize) -> &[u64] {
        &self.out[a * self.words..(a + 1) * self.words]
    }

    fn in_row(&self, a: usize) -> &[u64] {
        &self.inc[a * self.words..(a + 1) * self.words]
    }
}

/// A configurable homomorphism search `source -> target`.
pub struct HomSearch<'a> {
    source: &'a Digraph,
    target: Cow<'a, PreparedTarget>,
    budget: u64,
    restrict: Vec<Option<FixedBitSet>>,
    injective: bool,
    degree_match: bool,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a Digraph, target: &'a Digraph) -> Self {
        Self::build(source, Cow::Owned(PreparedTarget::new(target)))
    }

    /// Reuses a prepared target across many searches.
    pub fn prepared(source: &'a Digraph, target: &'a PreparedTarget) -> Self {
        Self::build(source, Cow::Borrowed(target))
    }

    fn build(source: &'a Digraph, target: Cow<'a, PreparedTarget>) -> Self {
        HomSearch {
            source,
            target,
            budget: DEFAULT_BUDGET,
            restrict: vec![None; source.order()],
            injective: false,
            degree_match: false,
        }
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    pub fn limits(self, limits: &Limits) -> Self {
        self.budget(limits.node_budget)
    }

    /// Intersects the domain of source vertex `u` with `allowed`.
    pub fn restrict<I: IntoIterator<Item = usize>>(mut self, u: usize, allowed: I) -> Self {
        let mut set = FixedBitSet::with_capacity(self.target.order);
        for a in allowed {
            if a < self.target.order {
                set.insert(a);
            }
        }
        match &mut self.restrict[u] {
            Some(existing) => existing.intersect_with(&set),
            slot @ None => *slot = Some(set),
        }
        self
    }

    /// Forces `u` to map to `a`.
    pub fn pin(self, u: usize, a: usize) -> Self {
        self.restrict(u, [a])
    }

    /// Only injective maps.
    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    /// Only maps sending each vertex to one with the same in/out degree and
    /// loop status (sound for isomorphism search).
    pub fn degree_match(mut self) -> Self {
        self.degree_match = true;
        self
    }

    fn unconstrained(&self) -> bool {
        !self.injective && !self.degree_match && self.restrict.iter().all(Option::is_none)
    }

    /// First homomorphism in search order, verified before it is returned.
    pub fn find(&self) -> Result<Option<HomWitness>> {
        if self.unconstrained() {
            if let Some(w) = self.target.first_loop {
                return Ok(Some(HomWitness::trusted(
                    vec![w; self.source.order()],
                    self.target.order,
                )));
            }
        }
        let mut found = None;
        self.run(|map| {
            found = Some(map.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found.map(|map| {
            assert!(
                self.verify_map(&map),
                "search produced a map that violates an arc constraint"
            );
            HomWitness::trusted(map, self.target.order)
        }))
    }

    pub fn exists(&self) -> Result<bool> {
        Ok(self.find()?.is_some())
    }

    /// Exact number of homomorphisms (subject to restrictions).
    pub fn count(&self) -> Result<u128> {
        let mut n: u128 = 0;
        self.run(|_| {
            n += 1;
            ControlFlow::Continue(())
        })?;
        Ok(n)
    }

    /// Visits every homomorphism until the visitor breaks.
    pub fn for_each<F>(&self, f: F) -> Result<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.run(f)
    }

    /// All homomorphisms in lexicographic order of their maps.
    pub fn all(&self) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        self.run(|m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        })?;
        out.sort();
        Ok(out)
    }

    fn verify_map(&self, map: &[usize]) -> bool {
        let t = &self.target;
        map.len() == self.source.order()
            && self.source.arcs().all(|(u, v)| {
                let (a, b) = (map[u], map[v]);
                t.out_row(a)[b / 64] >> (b % 64) & 1 == 1
            })
    }

    fn run<F>(&self, visit: F) -> Result<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut solver = Solver::new(self, visit);
        let Some(mut dom) = solver.initial_domains(self) else {
            return Ok(());
        };
        let all: Vec<usize> = (0..solver.nv).collect();
        let mut done = vec![false; solver.nv];
        if !solver.propagate(&mut dom, &mut done, &all) {
            return Ok(());
        }
        solver.search(dom, done).map(|_| ())
    }
}

struct Solver<'s, F> {
    nv: usize,
    words: usize,
    target: &'s PreparedTarget,
    /// `succ[u]`: `v != u` with `u -> v` in the source.
    succ: Vec<Vec<usize>>,
    /// `pred[u]`: `v != u` with `v -> u` in the source.
    pred: Vec<Vec<usize>>,
    injective: bool,
    nodes: u64,
    budget: u64,
    visit: F,
    queue: Vec<usize>,
    queued: Vec<bool>,
    scratch: Vec<u64>,
    assignment: Vec<usize>,
}

fn popcount(row: &[u64]) -> u32 {
    row.iter().map(|w| w.count_ones()).sum()
}

fn first_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn for_each_bit(row: &[u64], mut f: impl FnMut(usize)) {
    for (i, &w) in row.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            f(i * 64 + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

impl<'s, F> Solver<'s, F>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn new(search: &'s HomSearch<'_>, visit: F) -> Self {
        let g = search.source;
        let nv = g.order();
        let mut succ = vec![Vec::new(); nv];
        let mut pred = vec![Vec::new(); nv];
        for (u, v) in g.arcs() {
            if u != v {
                succ[u].push(v);
                pred[v].push(u);
            }
        }
        let words = search.target.words;
        Solver {
            nv,
            words,
            target: &search.target,
            succ,
            pred,
            injective: search.injective,
            nodes: 0,
            budget: search.budget,
            visit,
            queue: Vec::with_capacity(nv),
            queued: vec![false; nv],
            scratch: vec![0; words],
            assignment: vec![0; nv],
        }
    }

    /// Unary constraints. `None` when some domain is already empty.
    fn initial_domains(&self, search: &HomSearch<'_>) -> Option<Vec<u64>> {
        let (w, nt) = (self.words, self.target.order);
        let mut full = vec![0u64; w];
        for a in 0..nt {
            full[a / 64] |= 1 << (a % 64);
        }
        let mut dom = vec![0u64; self.nv * w];
        let g = search.source;
        for u in 0..self.nv {
            let row = &mut dom[u * w..(u + 1) * w];
            row.copy_from_slice(&full);
            if let Some(r) = &search.restrict[u] {
                let mut mask = vec![0u64; w];
                for a in r.ones() {
                    mask[a / 64] |= 1 << (a % 64);
                }
                row.iter_mut().zip(&mask).for_each(|(x, m)| *x &= m);
            }
            if g.has_loop(u) {
                row.iter_mut()
                    .zip(&self.target.looped)
                    .for_each(|(x, m)| *x &= m);
            }
            if search.degree_match {
                let key = (g.out_degree(u), g.in_degree(u), g.has_loop(u));
                for a in 0..nt {
                    if self.target.degrees[a] != key {
                        row[a / 64] &= !(1 << (a % 64));
                    }
                }
            }
            if row.iter().all(|&x| x == 0) {
                return None;
            }
        }
        Some(dom)
    }

    /// Removes from `D(x)` every value without support in `D(y)`.
    /// `forward` means the constraint is the arc `x -> y`, otherwise `y -> x`.
    /// Returns `Some(changed)`, or `None` when `D(x)` becomes empty.
    fn revise(&mut self, dom: &mut [u64], x: usize, y: usize, forward: bool) -> Option<bool> {
        let w = self.words;
        let (dx, dy) = if x < y {
            let (lo, hi) = dom.split_at_mut(y * w);
            (&mut lo[x * w..(x + 1) * w], &hi[..w])
        } else {
            let (lo, hi) = dom.split_at_mut(x * w);
            (&mut hi[..w], &lo[y * w..(y + 1) * w])
        };
        let t = self.target;
        let mut changed = false;
        if popcount(dy) <= popcount(dx) {
            // Union of the supports of every value of y.
            self.scratch.iter_mut().for_each(|s| *s = 0);
            for_each_bit(dy, |b| {
                let row = if forward { t.in_row(b) } else { t.out_row(b) };
                self.scratch.iter_mut().zip(row).for_each(|(s, r)| *s |= r);
            });
            for (d, s) in dx.iter_mut().zip(&self.scratch) {
                let nd = *d & s;
                changed |= nd != *d;
                *d = nd;
            }
        } else {
            let mut remove = Vec::new();
            for_each_bit(dx, |a| {
                let row = if forward { t.out_row(a) } else { t.in_row(a) };
                if !intersects(row, dy) {
                    remove.push(a);
                }
            });
            changed = !remove.is_empty();
            for a in remove {
                dx[a / 64] &= !(1 << (a % 64));
            }
        }
        if changed && dx.iter().all(|&d| d == 0) {
            return None;
        }
        Some(changed)
    }

    fn push(&mut self, x: usize) {
        if !self.queued[x] {
            self.queued[x] = true;
            self.queue.push(x);
        }
    }

    /// AC-3 from the given seeds, plus all-different forward checking in
    /// injective mode. Returns false on a wipe-out.
    fn propagate(&mut self, dom: &mut [u64], done: &mut [bool], seeds: &[usize]) -> bool {
        for &s in seeds {
            self.push(s);
        }
        loop {
            while let Some(y) = self.queue.pop() {
                self.queued[y] = false;
                for i in 0..self.pred[y].len() {
                    let x = self.pred[y][i];
                    match self.revise(dom, x, y, true) {
                        None => return self.fail(),
                        Some(true) => self.push(x),
                        Some(false) => {}
                    }
                }
                for i in 0..self.succ[y].len() {
                    let x = self.succ[y][i];
                    match self.revise(dom, x, y, false) {
                        None => return self.fail(),
                        Some(true) => self.push(x),
                        Some(false) => {}
                    }
                }
            }
            if !self.injective {
                return true;
            }
            let w = self.words;
            let mut progressed = false;
            for u in 0..self.nv {
                if done[u] || popcount(&dom[u * w..(u + 1) * w]) != 1 {
                    continue;
                }
                done[u] = true;
                progressed = true;
                let a = first_bit(&dom[u * w..(u + 1) * w]).expect("singleton domain");
                for v in 0..self.nv {
                    if v == u {
                        continue;
                    }
                    let cell = &mut dom[v * w + a / 64];
                    if *cell >> (a % 64) & 1 == 1 {
                        *cell &= !(1 << (a % 64));
                        if dom[v * w..(v + 1) * w].iter().all(|&d| d == 0) {
                            return self.fail();
                        }
                        self.push(v);
                    }
                }
            }
            if !progressed {
                return true;
            }
        }
    }

    fn fail(&mut self) -> bool {
        for x in self.queue.drain(..) {
            self.queued[x] = false;
        }
        false
    }

    fn search(&mut self, dom: Vec<u64>, done: Vec<bool>) -> Result<ControlFlow<()>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget {
                budget: self.budget,
                progress: None,
            });
        }
        let w = self.words;
        let mut pick: Option<(u32, usize)> = None;
        for u in 0..self.nv {
            let size = popcount(&dom[u * w..(u + 1) * w]);
            if size > 1 && pick.map_or(true, |(s, _)| size < s) {
                pick = Some((size, u));
            }
        }
        let Some((_, var)) = pick else {
            for u in 0..self.nv {
                self.assignment[u] = first_bit(&dom[u * w..(u + 1) * w]).expect("non-empty domain");
            }
            return Ok((self.visit)(&self.assignment));
        };
        let mut values = Vec::new();
        for_each_bit(&dom[var * w..(var + 1) * w], |a| values.push(a));
        for a in values {
            let mut child = dom.clone();
            let mut child_done = done.clone();
            let row = &mut child[var * w..(var + 1) * w];
            row.iter_mut().for_each(|x| *x = 0);
            row[a / 64] = 1 << (a % 64);
            if self.propagate(&mut child, &mut child_done, &[var]) {
                if let ControlFlow::Break(()) = self.search(child, child_done)? {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// A homomorphism `g -> h`, if any, under the default budget.
pub fn hom_exists(g: &Digraph, h: &Digraph) -> Result<Option<HomWitness>> {
    HomSearch::new(g, h).find()
}

pub fn hom_exists_with(g: &Digraph, h: &Digraph, limits: &Limits) -> Result<Option<HomWitness>> {
    HomSearch::new(g, h).limits(limits).find()
}

pub fn hom_count(g: &Digraph, h: &Digraph) -> Result<u128> {
    HomSearch::new(g, h).count()
}

pub fn hom_count_with(g: &Digraph, h: &Digraph, limits: &Limits) -> Result<u128> {
    HomSearch::new(g, h).limits(limits).count()
}

/// Homomorphisms both ways.
pub fn hom_equivalent(g: &Digraph, h: &Digraph) -> Result<bool> {
    hom_equivalent_with(g, h, &Limits::default())
}

pub fn hom_equivalent_with(g: &Digraph, h: &Digraph, limits: &Limits) -> Result<bool> {
    Ok(hom_exists_with(g, h, limits)?.is_some() && hom_exists_with(h, g, limits)?.is_some())
}

/// An isomorphism `g -> h`, if any. Refuses orders above `limits.iso_cap`.
pub fn isomorphism(g: &Digraph, h: &Digraph, limits: &Limits) -> Result<Option<HomWitness>> {
    if g.order().max(h.order()) > limits.iso_cap {
        return Err(Error::Cap(format!(
            "isomorphism test limited to order {}, got {} and {}",
            limits.iso_cap,
            g.order(),
            h.order()
        )));
    }
    if g.order() != h.order() || g.arc_count() != h.arc_count() {
        return Ok(None);
    }
    let mut gd: Vec<_> = (0..g.order())
        .map(|u| (g.out_degree(u), g.in_degree(u), g.has_loop(u)))
        .collect();
    let mut hd: Vec<_> = (0..h.order())
        .map(|u| (h.out_degree(u), h.in_degree(u), h.has_loop(u)))
        .collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return Ok(None);
    }
    // An injective homomorphism between digraphs with equal order and equal
    // arc count maps the arc set bijectively, hence is an isomorphism.
    HomSearch::new(g, h)
        .limits(limits)
        .injective()
        .degree_match()
        .find()
}

pub fn isomorphic(g: &Digraph, h: &Digraph) -> Result<bool> {
    isomorphic_with(g, h, &Limits::default())
}

pub fn isomorphic_with(g: &Digraph, h: &Digraph, limits: &Limits) -> Result<bool> {
    Ok(isomorphism(g, h, limits)?.is_some())
}

/// Scans pairs of loop-free graphs on at most `nmax` vertices (one per
/// isomorphism class) for `G, H` with `G -/-> K`, `H -/-> K` but
/// `G × H -> K`. A returned pair refutes multiplicativity of `K`; `None`
/// is evidence only.
pub fn multiplicativity_search(
    k: &Graph,
    nmax: usize,
    limits: &Limits,
) -> Result<Option<(Graph, Graph)>> {
    let universe: Vec<Graph> = enumerate_graphs(EnumSpec::undirected(nmax).up_to().iso_reject())?
        .graphs()
        .collect();
    let target = PreparedTarget::new(k);
    let mut non_mapping = Vec::new();
    for g in &universe {
        if !HomSearch::prepared(g, &target).limits(limits).exists()? {
            non_mapping.push(g);
        }
    }
    for (i, g) in non_mapping.iter().enumerate() {
        for h in &non_mapping[i..] {
            let prod = tensor_product(g, h, limits)?;
            let maps = HomSearch::prepared(&prod, &target)
                .limits(limits)
                .exists()
                .map_err(|e| match e {
                    Error::Budget { budget, .. } => Error::Budget {
                        budget,
                        progress: Some(format!(
                            "multiplicativity scan stopped at pair {g:?} x {h:?}"
                        )),
                    },
                    other => other,
                })?;
            if maps {
                return Ok(Some(((*g).clone(), (*h).clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, directed_path, kneser, path, transitive_tournament};

    fn brute_force_count(g: &Digraph, h: &Digraph) -> u128 {
        let (n, k) = (g.order(), h.order());
        let total = (k as u128).pow(n as u32);
        (0..total)
            .filter(|&i| {
                let map = crate::graph::decode_map(i as usize, k, n);
                is_homomorphism(&map, g, h)
            })
            .count() as u128
    }

    #[test]
    fn c5_to_k3_exists() {
        // Oracle: exhaustive check over all 3^5 maps.
        assert!(brute_force_count(&cycle(5).unwrap(), &complete(3)) > 0);
        let w = hom_exists(&cycle(5).unwrap(), &complete(3))
            .unwrap()
            .unwrap();
        assert!(w.verify(&cycle(5).unwrap(), &complete(3)));
    }

    #[test]
    fn k3_to_k2_fails() {
        assert!(hom_exists(&complete(3), &complete(2)).unwrap().is_none());
    }

    #[test]
    fn looped_target_absorbs_everything() {
        let looped = Digraph::from_arcs(2, [(0, 1), (1, 1)]).unwrap();
        let w = hom_exists(&complete(5), &looped).unwrap().unwrap();
        assert_eq!(w.map(), &[1; 5]);
    }

    #[test]
    fn counts() {
        assert_eq!(hom_count(&path(3), &complete(3)).unwrap(), 24);
        let h = cycle(5).unwrap();
        assert_eq!(hom_count(&complete(1), &h).unwrap(), 5);
        assert_eq!(hom_count(&Digraph::empty(0), &h).unwrap(), 1);
        assert_eq!(hom_count(&complete(1), &Digraph::empty(0)).unwrap(), 0);
        assert_eq!(
            hom_count(&cycle(5).unwrap(), &complete(3)).unwrap(),
            brute_force_count(&cycle(5).unwrap(), &complete(3))
        );
    }

    #[test]
    fn equivalence_examples() {
        assert!(hom_equivalent(&kneser(4, 2).unwrap(), &complete(2)).unwrap());
        assert!(!hom_equivalent(&cycle(5).unwrap(), &cycle(3).unwrap()).unwrap());
        let c7 = cycle(7).unwrap();
        assert!(hom_equivalent(&c7, &c7).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = cycle(5).unwrap();
        let k52 =
            crate::graph::circular_clique(crate::graph::Fraction::new(5, 2).unwrap()).unwrap();
        assert!(isomorphic(&c5, &k52).unwrap());
        assert!(!isomorphic(&complete(3), &path(2)).unwrap());
        let big = complete(13);
        assert!(matches!(isomorphic(&big, &big), Err(Error::Cap(_))));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        // K_6 -> K_5 needs a full refutation; one node is not enough.
        let r = HomSearch::new(&complete(6), &complete(5)).budget(1).find();
        assert!(matches!(r, Err(Error::Budget { .. })));
    }

    #[test]
    fn pins_are_honoured() {
        let p = directed_path(2);
        let t = transitive_tournament(4);
        let w = HomSearch::new(&p, &t).pin(0, 1).find().unwrap().unwrap();
        assert_eq!(w.map(), &[1, 2, 3]);
        assert!(HomSearch::new(&p, &t).pin(0, 2).find().unwrap().is_none());
    }

    #[test]
    fn all_is_sorted() {
        let maps = HomSearch::new(&complete(2), &complete(3)).all().unwrap();
        assert_eq!(maps.len(), 6);
        assert!(maps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn witness_composition() {
        let c5 = cycle(5).unwrap();
        let k3 = complete(3);
        let k4 = complete(4);
        let a = hom_exists(&c5, &k3).unwrap().unwrap();
        let b = hom_exists(&k3, &k4).unwrap().unwrap();
        assert!(a.compose(&b).unwrap().verify(&c5, &k4));
        assert!(b.compose(&b).is_err());
    }

    #[test]
    fn multiplicativity_trivial_target() {
        let k1 = complete(1);
        assert!(multiplicativity_search(&k1, 2, &Limits::default())
            .unwrap()
            .is_none());
    }
}
