//! Pultr templates and the left (`Λ`) and central (`Γ`) functors they induce.
//!
//! A template `(P, Q, ε1, ε2)` in [`TemplateMode::Undirected`] also carries
//! an automorphism `q` of `Q` swapping `ε1` and `ε2`; this is what makes
//! `Γ_T(K)` symmetric. In [`TemplateMode::Directed`] no such `q` is needed.

mod format;
mod templates;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{tensor_product, Digraph, MinUnionFind};
use crate::hom::{hom_equivalent_with, hom_exists_with, HomSearch, PreparedTarget};
use crate::limits::{saturating_pow, Limits};

pub use format::{parse_template, serialize_template};
pub use templates::{
    arc_graph_template, builtin_template, interleaved_template, lexicographic_k2,
    oriented_path_template, path_template, shift_template, tensor_by, BUILTIN_NAMES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemplateMode {
    Undirected,
    Directed,
}

impl fmt::Display for TemplateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TemplateMode::Undirected => "undirected",
            TemplateMode::Directed => "directed",
        })
    }
}

/// `(P, Q, ε1, ε2)` plus the optional swapping automorphism `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PultrTemplate {
    name: String,
    p: Digraph,
    q: Digraph,
    eps1: Vec<usize>,
    eps2: Vec<usize>,
    symmetry: Option<Vec<usize>>,
    mode: TemplateMode,
}

impl PultrTemplate {
    /// Checks only shapes and index ranges; use [`validate_template`] for
    /// the homomorphism and symmetry conditions.
    pub fn new(
        name: impl Into<String>,
        p: Digraph,
        q: Digraph,
        eps1: Vec<usize>,
        eps2: Vec<usize>,
        symmetry: Option<Vec<usize>>,
        mode: TemplateMode,
    ) -> Result<Self> {
        for (label, map) in [("eps1", &eps1), ("eps2", &eps2)] {
            if map.len() != p.order() {
                return Err(Error::Template(format!(
                    "{label} has {} entries, P has {} vertices",
                    map.len(),
                    p.order()
                )));
            }
            if let Some(&x) = map.iter().find(|&&x| x >= q.order()) {
                return Err(Error::Template(format!(
                    "{label} maps into vertex {x}, Q has {}",
                    q.order()
                )));
            }
        }
        if let Some(s) = &symmetry {
            if s.len() != q.order() || s.iter().any(|&x| x >= q.order()) {
                return Err(Error::Template("symmetry must map V(Q) into V(Q)".into()));
            }
        }
        Ok(PultrTemplate {
            name: name.into(),
            p,
            q,
            eps1,
            eps2,
            symmetry,
            mode,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn p(&self) -> &Digraph {
        &self.p
    }

    pub fn q(&self) -> &Digraph {
        &self.q
    }

    pub fn eps1(&self) -> &[usize] {
        &self.eps1
    }

    pub fn eps2(&self) -> &[usize] {
        &self.eps2
    }

    pub fn symmetry(&self) -> Option<&[usize]> {
        self.symmetry.as_deref()
    }

    pub fn mode(&self) -> TemplateMode {
        self.mode
    }

    pub fn with_symmetry(self, symmetry: Option<Vec<usize>>) -> Result<Self> {
        PultrTemplate::new(
            self.name, self.p, self.q, self.eps1, self.eps2, symmetry, self.mode,
        )
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = validate_template(self, self.mode == TemplateMode::Undirected);
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::Template(format!("{}: {report}", self.name)))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `ε_i` sends the arc `(a, b)` of `P` to a non-arc of `Q`.
    NotAHomomorphism {
        map: u8,
        arc: (usize, usize),
    },
    /// Undirected mode with a non-symmetric `P` or `Q`.
    NotSymmetric {
        graph: char,
    },
    MissingSymmetry,
    /// `q` is not a bijection, or sends the arc `(a, b)` to a non-arc.
    NotAnAutomorphism {
        arc: Option<(usize, usize)>,
    },
    /// `q(ε_i(p)) != ε_j(p)`.
    DoesNotSwap {
        composition: &'static str,
        vertex: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotAHomomorphism { map, arc: (a, b) } => {
                write!(f, "eps{map} sends arc {a}->{b} of P to a non-arc of Q")
            }
            Violation::NotSymmetric { graph } => write!(f, "{graph} is not symmetric"),
            Violation::MissingSymmetry => f.write_str("no automorphism q swapping eps1 and eps2"),
            Violation::NotAnAutomorphism { arc: Some((a, b)) } => {
                write!(f, "q sends arc {a}->{b} of Q to a non-arc")
            }
            Violation::NotAnAutomorphism { arc: None } => f.write_str("q is not a bijection"),
            Violation::DoesNotSwap {
                composition,
                vertex,
            } => {
                write!(f, "{composition} fails at vertex {vertex} of P")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemplateReport {
    pub violations: Vec<Violation>,
}

impl TemplateReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for TemplateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks that `ε1`, `ε2` are homomorphisms and, in undirected mode, that
/// `P`, `Q` are symmetric and `q` is an automorphism swapping `ε1` and `ε2`.
pub fn validate_template(t: &PultrTemplate, undirected_mode: bool) -> TemplateReport {
    let mut violations = Vec::new();
    for (i, eps) in [(1u8, &t.eps1), (2, &t.eps2)] {
        if let Some(arc) = t.p.arcs().find(|&(a, b)| !t.q.has_arc(eps[a], eps[b])) {
            violations.push(Violation::NotAHomomorphism { map: i, arc });
        }
    }
    if undirected_mode {
        for (name, g) in [('P', &t.p), ('Q', &t.q)] {
            if !g.is_symmetric() {
                violations.push(Violation::NotSymmetric { graph: name });
            }
        }
        match &t.symmetry {
            None => violations.push(Violation::MissingSymmetry),
            Some(q) => {
                let mut seen = vec![false; q.len()];
                let bijective = q.iter().all(|&x| !std::mem::replace(&mut seen[x], true));
                if !bijective {
                    violations.push(Violation::NotAnAutomorphism { arc: None });
                } else if let Some(arc) = t.q.arcs().find(|&(a, b)| !t.q.has_arc(q[a], q[b])) {
                    violations.push(Violation::NotAnAutomorphism { arc: Some(arc) });
                }
                for p in 0..t.p.order() {
                    if q[t.eps1[p]] != t.eps2[p] {
                        violations.push(Violation::DoesNotSwap {
                            composition: "q∘eps1 = eps2",
                            vertex: p,
                        });
                        break;
                    }
                }
                for p in 0..t.p.order() {
                    if q[t.eps2[p]] != t.eps1[p] {
                        violations.push(Violation::DoesNotSwap {
                            composition: "q∘eps2 = eps1",
                            vertex: p,
                        });
                        break;
                    }
                }
            }
        }
    }
    TemplateReport { violations }
}

/// The copies of `Q` laid by `Λ_T(G)`: one per arc, or one per edge `u <= v`
/// in undirected mode.
fn q_copies(t: &PultrTemplate, g: &Digraph) -> Vec<(usize, usize)> {
    match t.mode {
        TemplateMode::Undirected => g.arcs().filter(|(u, v)| u <= v).collect(),
        TemplateMode::Directed => g.arcs().collect(),
    }
}

fn check_mode_input(t: &PultrTemplate, g: &Digraph, what: &str) -> Result<()> {
    if t.mode == TemplateMode::Undirected && !g.is_symmetric() {
        return Err(Error::precondition(format!(
            "template {} is undirected but {what} is not symmetric",
            t.name
        )));
    }
    Ok(())
}

/// `Λ_T(G)`: a copy `P_u` per vertex, a copy `Q_e` per arc (or edge) glued
/// along `ε1`, `ε2`. Vertices are renumbered by the smallest composite label
/// of their class, where `(u, p)` comes before every `Q` copy and `Q` copies
/// follow the arc order. A loop `[u, u]` glues both ends of its `Q` copy to
/// `P_u`.
pub fn lambda_functor(t: &PultrTemplate, g: &Digraph, limits: &Limits) -> Result<Digraph> {
    t.ensure_valid()?;
    check_mode_input(t, g, "the input")?;
    let (pn, qn) = (t.p.order(), t.q.order());
    let copies = q_copies(t, g);
    let labels = g.order() * pn + copies.len() * qn;
    let estimate =
        labels as u128 + (g.order() * t.p.arc_count() + copies.len() * t.q.arc_count()) as u128;
    limits.check_size("left Pultr functor", estimate)?;

    let base = g.order() * pn;
    let q_label = |e: usize, x: usize| base + e * qn + x;
    let mut uf = MinUnionFind::new(labels);
    for (e, &(u, v)) in copies.iter().enumerate() {
        for p in 0..pn {
            uf.union(q_label(e, t.eps1[p]), u * pn + p);
            uf.union(q_label(e, t.eps2[p]), v * pn + p);
        }
    }
    let (class_of, count) = uf.classes();
    let mut out = Digraph::empty(count);
    for u in 0..g.order() {
        for (a, b) in t.p.arcs() {
            out.add_arc(class_of[u * pn + a], class_of[u * pn + b]);
        }
    }
    for e in 0..copies.len() {
        for (a, b) in t.q.arcs() {
            out.add_arc(class_of[q_label(e, a)], class_of[q_label(e, b)]);
        }
    }
    Ok(out)
}

/// `Γ_T(K)` together with the homomorphism `P -> K` behind each vertex.
pub fn gamma_functor_labelled(
    t: &PultrTemplate,
    k: &Digraph,
    limits: &Limits,
) -> Result<(Digraph, Vec<Vec<usize>>)> {
    t.ensure_valid()?;
    check_mode_input(t, k, "the input")?;
    limits.check_size(
        "central Pultr functor",
        saturating_pow(k.order(), t.p.order()),
    )?;
    let target = PreparedTarget::new(k);
    let vertices = HomSearch::prepared(&t.p, &target).limits(limits).all()?;
    let n = vertices.len();
    limits.check_size("central Pultr functor", n as u128)?;

    let rows: Vec<Result<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let g1 = &vertices[i];
            let mut row = Vec::new();
            for (j, g2) in vertices.iter().enumerate() {
                let mut search = HomSearch::prepared(&t.q, &target).limits(limits);
                for p in 0..t.p.order() {
                    search = search.pin(t.eps1[p], g1[p]).pin(t.eps2[p], g2[p]);
                }
                if search.exists()? {
                    row.push(j);
                }
            }
            Ok(row)
        })
        .collect();
    let mut out = Digraph::empty(n);
    let mut arcs = n as u128;
    for (i, row) in rows.into_iter().enumerate() {
        let row = row?;
        arcs += row.len() as u128;
        for j in row {
            out.add_arc(i, j);
        }
    }
    limits.check_size("central Pultr functor", arcs)?;
    if t.mode == TemplateMode::Undirected {
        assert!(
            out.is_symmetric(),
            "Γ of a valid undirected template must be symmetric"
        );
    }
    Ok((out, vertices))
}

/// `Γ_T(K)`: vertices are the homomorphisms `P -> K` in lexicographic order;
/// `g1 -> g2` iff some `h: Q -> K` has `h∘ε1 = g1` and `h∘ε2 = g2`.
pub fn gamma_functor(t: &PultrTemplate, k: &Digraph, limits: &Limits) -> Result<Digraph> {
    gamma_functor_labelled(t, k, limits).map(|(g, _)| g)
}

/// Both sides of the adjunction `Λ_T(G) -> K  ⟺  G -> Γ_T(K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjunctionOutcome {
    pub lambda_side: bool,
    pub gamma_side: bool,
}

impl AdjunctionOutcome {
    pub fn holds(&self) -> bool {
        self.lambda_side == self.gamma_side
    }
}

pub fn verify_adjunction(
    t: &PultrTemplate,
    g: &Digraph,
    k: &Digraph,
    limits: &Limits,
) -> Result<AdjunctionOutcome> {
    let lambda = lambda_functor(t, g, limits)?;
    let gamma = gamma_functor(t, k, limits)?;
    Ok(AdjunctionOutcome {
        lambda_side: hom_exists_with(&lambda, k, limits)?.is_some(),
        gamma_side: hom_exists_with(g, &gamma, limits)?.is_some(),
    })
}

/// `Γ_T(G × H)` and `Γ_T(G) × Γ_T(H)` are hom-equivalent.
pub fn product_commutation_check(
    t: &PultrTemplate,
    g: &Digraph,
    h: &Digraph,
    limits: &Limits,
) -> Result<bool> {
    let left = gamma_functor(t, &tensor_product(g, h, limits)?, limits)?;
    let right = tensor_product(
        &gamma_functor(t, g, limits)?,
        &gamma_functor(t, h, limits)?,
        limits,
    )?;
    hom_equivalent_with(&left, &right, limits)
}

/// The map `Γ_T(K) -> Γ_T(K')` induced by `f: K -> K'`, i.e. `g ↦ f∘g`.
pub fn gamma_induced_map(
    source_vertices: &[Vec<usize>],
    target_vertices: &[Vec<usize>],
    f: &[usize],
) -> Option<Vec<usize>> {
    let index: HashMap<&[usize], usize> = target_vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    source_vertices
        .iter()
        .map(|g| {
            let image: Vec<usize> = g.iter().map(|&x| f[x]).collect();
            index.get(image.as_slice()).copied()
        })
        .collect()
}
