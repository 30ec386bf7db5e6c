//! Named exhaustive checks over small instances, shared by `pultr verify`
//! and the acceptance harness.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::adjoints::{
    arc_graph, interleaved_adjoint, omega_odd_path, omega_oriented_path_labelled, power_functor,
    BaseCondition,
};
use crate::chromatic::{
    chromatic_number, circular_chromatic_number, circular_gallai_roy_check,
    circular_lower_bound_via_powers, exhaustive_circular_orientation, optimal_colouring,
};
use crate::duality::{
    delta_colouring_lift, shift_graph, symmetric_shift_graph, verify_duality, DualityReport,
    ObstructionFamily,
};
use crate::error::{Error, Result};
use crate::graph::{
    circular_clique, complete, cycle, directed_cycle, directed_path, enumerate_graphs, odd_girth,
    serialize_graph, symmetrization, transitive_tournament, Digraph, EnumSpec, Fraction, Graph,
    OrientationSpec,
};
use crate::hom::{
    hom_equivalent_with, hom_exists_with, isomorphic_with, HomSearch, PreparedTarget,
};
use crate::limits::Limits;
use crate::pultr::{
    builtin_template, gamma_functor, lambda_functor, oriented_path_template, path_template,
    PultrTemplate, TemplateMode,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Adjunction,
    Omega,
    Duality,
    Shift,
    YehZhu,
    Ordering,
    PowersChiC,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Adjunction,
        Suite::Omega,
        Suite::Duality,
        Suite::Shift,
        Suite::YehZhu,
        Suite::Ordering,
        Suite::PowersChiC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Adjunction => "adjunction",
            Suite::Omega => "omega",
            Suite::Duality => "duality",
            Suite::Shift => "shift",
            Suite::YehZhu => "yeh-zhu",
            Suite::Ordering => "ordering",
            Suite::PowersChiC => "powers-chi-c",
        }
    }

    pub fn default_nmax(self) -> usize {
        match self {
            Suite::Adjunction => 3,
            Suite::Omega | Suite::Duality | Suite::Ordering => 4,
            Suite::YehZhu => 5,
            Suite::Shift | Suite::PowersChiC => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::param(format!("unknown suite {s:?}")))
    }
}

/// Outcome of a suite: how many cases ran and the first failing one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    /// Extra `key=value` pairs for the verdict line.
    pub params: Vec<(String, String)>,
    /// A human-readable counterexample, with graphs in edge-list form.
    pub failure: Option<String>,
}

impl SuiteReport {
    fn new(suite: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            cases: 0,
            params: Vec::new(),
            failure: None,
        }
    }

    fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    /// Appends `other`'s cases; keeps the first failure.
    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn labelled(order: usize, directed: bool) -> Result<Vec<Digraph>> {
    let spec = if directed {
        EnumSpec::directed(order)
    } else {
        EnumSpec::undirected(order)
    };
    Ok(enumerate_graphs(spec.with_loops(true).up_to().with_cap(order))?.collect())
}

fn reduced(order: usize, directed: bool, loops: bool) -> Result<Vec<Digraph>> {
    let spec = if directed {
        EnumSpec::directed(order)
    } else {
        EnumSpec::undirected(order)
    };
    Ok(enumerate_graphs(spec.with_loops(loops).up_to().iso_reject().with_cap(order))?.collect())
}

fn graph(label: &str, d: &Digraph) -> String {
    format!("{label}:\n{}", serialize_graph(d))
}

/// The templates of the adjunction suite.
pub fn adjunction_templates() -> Vec<PultrTemplate> {
    ["t3", "t5", "lex-k2", "tensor:cycle:3", "arc", "iota:2"]
        .iter()
        .map(|n| builtin_template(n).expect("builtin"))
        .collect()
}

/// `Λ_T(G) -> K ⟺ G -> Γ_T(K)` for all labelled `G`, `K` (loops allowed) on
/// at most `nmax` vertices; undirected templates range over graphs.
pub fn adjunction_suite(
    templates: &[PultrTemplate],
    nmax: usize,
    limits: &Limits,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("adjunction")
        .param("nmax", nmax)
        .param("templates", templates.len());
    for t in templates {
        let universe = labelled(nmax, t.mode() == TemplateMode::Directed)?;
        let lambdas = universe
            .par_iter()
            .map(|g| lambda_functor(t, g, limits))
            .collect::<Result<Vec<_>>>()?;
        let gammas = universe
            .par_iter()
            .map(|k| gamma_functor(t, k, limits).map(|g| PreparedTarget::new(&g)))
            .collect::<Result<Vec<_>>>()?;
        let prepared: Vec<PreparedTarget> = universe.iter().map(PreparedTarget::new).collect();
        let n = universe.len();
        let first = (0..n * n).into_par_iter().find_map_first(|idx| {
            let (gi, ki) = (idx / n, idx % n);
            let check = || -> Result<Option<(bool, bool)>> {
                let left = HomSearch::prepared(&lambdas[gi], &prepared[ki])
                    .limits(limits)
                    .exists()?;
                let right = HomSearch::prepared(&universe[gi], &gammas[ki])
                    .limits(limits)
                    .exists()?;
                Ok((left != right).then_some((left, right)))
            };
            match check() {
                Ok(None) => None,
                Ok(Some(sides)) => Some(Ok((gi, ki, sides))),
                Err(e) => Some(Err(e)),
            }
        });
        report.cases += (n * n) as u64;
        if let Some(found) = first {
            let (gi, ki, (left, right)) = found?;
            report.failure = Some(format!(
                "template {}: Λ(G) -> K is {left}, G -> Γ(K) is {right}\n{}{}",
                t.name(),
                graph("G", &universe[gi]),
                graph("K", &universe[ki])
            ));
            break;
        }
    }
    Ok(report)
}

/// Right-adjoint checks `Γ(G) -> H ⟺ G -> Ω(H)` for one template over a list
/// of `G`.
fn omega_check(
    report: &mut SuiteReport,
    label: &str,
    template: &PultrTemplate,
    omega: &Digraph,
    h: &Digraph,
    universe: &[Digraph],
    limits: &Limits,
) -> Result<()> {
    let h_prepared = PreparedTarget::new(h);
    let omega_prepared = PreparedTarget::new(omega);
    let first = universe.par_iter().find_map_first(|g| {
        let check = || -> Result<Option<(bool, bool)>> {
            let gamma = gamma_functor(template, g, limits)?;
            let left = HomSearch::prepared(&gamma, &h_prepared)
                .limits(limits)
                .exists()?;
            let right = HomSearch::prepared(g, &omega_prepared)
                .limits(limits)
                .exists()?;
            Ok((left != right).then_some((left, right)))
        };
        match check() {
            Ok(None) => None,
            Ok(Some(s)) => Some(Ok((g, s))),
            Err(e) => Some(Err(e)),
        }
    });
    report.cases += universe.len() as u64;
    if let Some(found) = first {
        let (g, (left, right)) = found?;
        report.failure.get_or_insert_with(|| {
            format!(
                "{label}: Γ(G) -> H is {left}, G -> Ω(H) is {right}\n{}{}",
                graph("G", g),
                graph("H", h)
            )
        });
    }
    Ok(())
}

/// The digraph `0 <-> 1, 0 -> 2, 1 -> 2`, on which the two readings of the
/// oriented-path base condition disagree.
pub fn base_condition_probe() -> Digraph {
    Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (1, 2)]).expect("valid arcs")
}

/// Oriented paths and targets used for the oriented-path right adjoint.
pub fn oriented_omega_cases() -> (Vec<OrientationSpec>, Vec<Digraph>) {
    let specs = ["↑", "↓", "↑↑", "↑↓", "↓↑", "↑↓↑"]
        .iter()
        .map(|s| s.parse().expect("valid"))
        .collect();
    let probe = base_condition_probe();
    let targets = vec![
        transitive_tournament(3),
        directed_cycle(3).expect("valid"),
        probe.reverse(),
        probe,
    ];
    (specs, targets)
}

/// `Ω_{T_m}` for `m ∈ {3, 5}` and `H ∈ {K_2, K_3, C_5}` over graphs with loops
/// on at most `nmax` vertices (up to isomorphism), then oriented-path
/// adjoints over digraphs on at most `min(nmax, 3)` vertices.
pub fn omega_suite(nmax: usize, limits: &Limits) -> Result<SuiteReport> {
    omega_suite_with(nmax, BaseCondition::LastToBase, limits)
}

/// [`omega_suite`] with an explicit reading of the oriented-path base rule.
pub fn omega_suite_with(
    nmax: usize,
    condition: BaseCondition,
    limits: &Limits,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("omega").param("nmax", nmax);
    let graphs = reduced(nmax, false, true)?;
    for m in [3, 5] {
        let t = path_template(m);
        for h in [complete(2), complete(3), cycle(5)?] {
            let omega = omega_odd_path(m, &h, limits)?;
            omega_check(
                &mut report,
                &format!("Ω_T{m}"),
                &t,
                omega.as_digraph(),
                h.as_digraph(),
                &graphs,
                limits,
            )?;
        }
    }
    let digraphs = reduced(nmax.min(3), true, true)?;
    let (specs, targets) = oriented_omega_cases();
    for spec in &specs {
        let t = oriented_path_template(spec);
        for h in &targets {
            let (omega, _) = omega_oriented_path_labelled(spec, h, condition, limits)?;
            omega_check(
                &mut report,
                &format!("Ω_{spec}"),
                &t,
                &omega,
                h,
                &digraphs,
                limits,
            )?;
        }
    }
    Ok(report)
}

fn duality_failure(label: &str, r: &DualityReport) -> Option<String> {
    r.counterexample.as_ref().map(|c| {
        format!(
            "{label}: {:?} (length {:?})\n{}",
            c.failure,
            r.length,
            graph("G", &c.graph)
        )
    })
}

/// `({P⃗_k}, T⃗_k)` for `k ∈ {2, 3, 4}` and minimal sproinks of `P⃗_k` up to
/// length 12 against `δ(T⃗_k)` for `k ∈ {3, 4}`.
pub fn duality_suite(nmax: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("duality").param("nmax", nmax);
    for k in [2, 3, 4] {
        let family = ObstructionFamily::Finite(vec![directed_path(k)]);
        let r = verify_duality(&family, &transitive_tournament(k), nmax, limits)?;
        report.cases += r.checked;
        if report.failure.is_none() {
            report.failure = duality_failure(&format!("P⃗_{k} / T⃗_{k}"), &r);
        }
    }
    for k in [3, 4] {
        let family = ObstructionFamily::path_sproinks(k, 12);
        let h = arc_graph(&transitive_tournament(k), limits)?;
        let r = verify_duality(&family, &h, nmax, limits)?;
        report.cases += r.checked;
        if report.failure.is_none() {
            report.failure = duality_failure(&format!("sproinks of P⃗_{k} / δ(T⃗_{k})"), &r);
        }
    }
    Ok(report)
}

/// Shift-graph identities, odd girth, chromatic bounds and the colour lift.
pub fn shift_suite(limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("shift");
    for (n, k) in [(4, 3), (5, 3)] {
        let r = shift_graph(n, k, limits)?;
        let d = arc_graph(&shift_graph(n, k - 1, limits)?, limits)?;
        let iso = isomorphic_with(&r, &d, limits)?;
        report.check(iso, || {
            format!("R({n},{k}) is not isomorphic to δ(R({n},{}))", k - 1)
        });
    }
    for (n, k) in [(6, 2), (7, 3), (9, 4)] {
        let g = odd_girth(&symmetric_shift_graph(n, k, limits)?);
        let ok = match g {
            Some(g) if n > 2 * k => g == 2 * k + 1,
            Some(g) => g > 2 * k,
            None => n < 2 * k + 1,
        };
        report.check(ok, || format!("odd girth of R′({n},{k}) is {g:?}"));
    }
    for n in [4usize, 8] {
        let chi = chromatic_number(&symmetric_shift_graph(n, 2, limits)?, limits)?;
        let log = n.next_power_of_two().trailing_zeros() as usize;
        report.check(chi >= log, || format!("χ(R′({n},2)) = {chi} < log2 {n}"));
        if n == 8 {
            report.check(chi == 3, || format!("χ(R′(8,2)) = {chi}, expected 3"));
        }
    }
    for n in [4, 8] {
        let h = complete(n).into_digraph();
        let (chi, colouring) = optimal_colouring(&symmetrization(&arc_graph(&h, limits)?), limits)?;
        let lifted = delta_colouring_lift(&h, &colouring, limits)?;
        let distinct = {
            let mut v = lifted.map().to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        report.check(distinct <= 1 << chi && (1usize << chi) >= n, || {
            format!("lift of a {chi}-colouring of δ(K_{n}) uses {distinct} colours")
        });
    }
    Ok(report)
}

/// `K_{n/m}` is hom-equivalent to the symmetrized `ι_m(T⃗_n)` for `(5,2)`
/// and `(7,3)`; the circular Gallai–Roy equivalence over all graphs on at most
/// `nmax` vertices for `n/m ∈ {5/2, 7/3, 3/1}`.
pub fn yeh_zhu_suite(nmax: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("yeh-zhu").param("nmax", nmax);
    for (n, m) in [(5u32, 2u32), (7, 3)] {
        let clique = circular_clique(Fraction::new(n, m)?)?;
        let iota = symmetrization(&interleaved_adjoint(
            m as usize,
            &transitive_tournament(n as usize),
            limits,
        )?);
        let ok = hom_equivalent_with(clique.as_digraph(), iota.as_digraph(), limits)?;
        report.check(ok, || {
            format!("K_{n}/{m} is not hom-equivalent to ι_{m}(T⃗_{n})")
        });
    }
    report.absorb(circular_gallai_roy_suite(
        nmax,
        &[(5, 2), (7, 3), (3, 1)],
        limits,
    )?);
    Ok(report)
}

/// For every loop-free graph `G` up to isomorphism: some orientation avoids
/// the reversal paths exactly when `G -> K_{n/m}`, and the certificate found
/// in the colourable case verifies.
pub fn circular_gallai_roy_suite(
    nmax: usize,
    ratios: &[(u32, u32)],
    limits: &Limits,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("circular-gallai-roy").param("nmax", nmax);
    let graphs: Vec<Graph> = reduced(nmax, false, false)?
        .into_iter()
        .map(|d| Graph::try_from(d).expect("undirected"))
        .collect();
    for &(n, m) in ratios {
        let clique = circular_clique(Fraction::new(n, m)?)?;
        let outcomes = graphs
            .par_iter()
            .map(|g| -> Result<Option<String>> {
                let colourable = hom_exists_with(g.as_digraph(), clique.as_digraph(), limits)?.is_some();
                let oriented = exhaustive_circular_orientation(g, n, m, limits)?.is_some();
                if colourable != oriented {
                    return Ok(Some(format!(
                        "{n}/{m}: G -> K_{n}/{m} is {colourable}, avoiding orientation exists is {oriented}\n{}",
                        graph("G", g.as_digraph())
                    )));
                }
                if colourable {
                    let ok = match circular_gallai_roy_check(g, n, m, limits)? {
                        Some(cert) => cert.verify(g, limits)?,
                        None => false,
                    };
                    if !ok {
                        return Ok(Some(format!(
                            "{n}/{m}: certificate missing or invalid\n{}",
                            graph("G", g.as_digraph())
                        )));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?;
        report.cases += graphs.len() as u64;
        if report.failure.is_none() {
            report.failure = outcomes.into_iter().flatten().next();
        }
    }
    Ok(report)
}

/// `P^s_r(G) -> P^{s′}_{r′}(G)` whenever `s/r <= s′/r′`, for `s, r, s′, r′`
/// in `{1, 3, 5}` and connected loop-free `G` on at most `nmax` vertices.
pub fn ordering_suite(nmax: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("ordering").param("nmax", nmax);
    let graphs: Vec<Graph> = reduced(nmax, false, false)?
        .into_iter()
        .filter(|d| d.is_weakly_connected())
        .map(|d| Graph::try_from(d).expect("undirected"))
        .collect();
    let odd = [1usize, 3, 5];
    let pairs: Vec<(usize, usize)> = odd
        .iter()
        .flat_map(|&s| odd.iter().map(move |&r| (s, r)))
        .collect();
    for g in &graphs {
        let powers = pairs
            .par_iter()
            .map(|&(s, r)| power_functor(s, r, g, limits))
            .collect::<Result<Vec<_>>>()?;
        let checks: Vec<(usize, usize)> = (0..pairs.len())
            .flat_map(|a| (0..pairs.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                let ((s, r), (s2, r2)) = (pairs[a], pairs[b]);
                s * r2 <= s2 * r
            })
            .collect();
        let failures = checks
            .par_iter()
            .map(|&(a, b)| -> Result<Option<usize>> {
                let ok = hom_exists_with(powers[a].as_digraph(), powers[b].as_digraph(), limits)?
                    .is_some();
                Ok((!ok).then_some(a * pairs.len() + b))
            })
            .collect::<Result<Vec<_>>>()?;
        report.cases += checks.len() as u64;
        if let (None, Some(idx)) = (&report.failure, failures.into_iter().flatten().next()) {
            let ((s, r), (s2, r2)) = (pairs[idx / pairs.len()], pairs[idx % pairs.len()]);
            report.failure = Some(format!(
                "P^{s}_{r}(G) does not map to P^{s2}_{r2}(G)\n{}",
                graph("G", g.as_digraph())
            ));
        }
    }
    Ok(report)
}

/// The odd-power scan recovers `χ_c(C_5) = 5/2` with `i <= 2, j <= 1` and
/// `χ_c(C_7) = 7/3` with `i <= 3, j <= 2`.
pub fn powers_suite(limits: &Limits) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("powers-chi-c");
    for (n, i_max, j_max) in [(5usize, 2u32, 1u32), (7, 3, 2)] {
        let c = cycle(n)?;
        let bound = circular_lower_bound_via_powers(&c, i_max, j_max, limits)?;
        let (exact, _) = circular_chromatic_number(&c, limits)?;
        report.check(bound == exact, || {
            format!("C_{n}: powers give {bound}, χ_c is {exact}")
        });
    }
    Ok(report)
}

/// Runs one suite with `nmax` (or its default).
pub fn run_suite(suite: Suite, nmax: Option<usize>, limits: &Limits) -> Result<SuiteReport> {
    let n = nmax.unwrap_or(suite.default_nmax());
    match suite {
        Suite::Adjunction => adjunction_suite(&adjunction_templates(), n, limits),
        Suite::Omega => omega_suite(n, limits),
        Suite::Duality => duality_suite(n, limits),
        Suite::Shift => shift_suite(limits),
        Suite::YehZhu => yeh_zhu_suite(n, limits),
        Suite::Ordering => ordering_suite(n, limits),
        Suite::PowersChiC => powers_suite(limits),
    }
}
