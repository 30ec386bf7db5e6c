//! Chromatic and circular chromatic numbers, Gallai–Roy style orientation
//! certificates, and the odd-power scan for `χ_c`.

use crate::adjoints::{interleaved_adjoint, power_functor};
use crate::error::{Error, Result};
use crate::graph::{
    circular_clique, complete, directed_path, orient, orientations, oriented_path, symmetrization,
    transitive_tournament, Digraph, Fraction, Graph, OrientationSpec,
};
use crate::hom::{hom_exists_with, HomSearch, HomWitness, PreparedTarget};
use crate::limits::Limits;

/// Largest edge count for which orientation scans run exhaustively.
pub const DEFAULT_ORIENTATION_CAP: usize = 16;

fn require_loop_free(g: &Digraph, what: &str) -> Result<()> {
    if g.has_any_loop() {
        return Err(Error::precondition(format!(
            "{what} is undefined for graphs with loops"
        )));
    }
    Ok(())
}

/// Size of a greedily grown clique, maximised over all start vertices.
pub fn greedy_clique_bound(g: &Graph) -> usize {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(g.degree(u)));
    let mut best = usize::from(n > 0);
    for &start in &order {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&c| g.has_arc(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// `χ(G)` with an optimal colouring `G -> K_χ`.
pub fn optimal_colouring(g: &Graph, limits: &Limits) -> Result<(usize, HomWitness)> {
    require_loop_free(g, "the chromatic number")?;
    let mut k = greedy_clique_bound(g);
    loop {
        if let Some(w) = hom_exists_with(g, &complete(k), limits)? {
            return Ok((k, w));
        }
        k += 1;
    }
}

pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    optimal_colouring(g, limits).map(|(k, _)| k)
}

/// Chromatic number of a digraph, taken on its symmetrization.
pub fn digraph_chromatic_number(d: &Digraph, limits: &Limits) -> Result<usize> {
    chromatic_number(&symmetrization(d), limits)
}

/// Reduced fractions `n/m` with `m <= max_den`, `2m <= n` and
/// `chi - 1 < n/m <= chi`, ascending.
fn circular_candidates(chi: u32, max_den: u32) -> Vec<Fraction> {
    let lower = Fraction::integer(chi - 1).expect("chi >= 2 here");
    let upper = Fraction::integer(chi).expect("chi >= 2 here");
    let mut out = Vec::new();
    for m in 1..=max_den {
        for n in 2 * m..=chi * m {
            if let Ok(f) = Fraction::new(n, m) {
                if f.den() == m && f > lower && f <= upper {
                    out.push(f);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `χ_c(G)` scanning denominators up to `max_den`, with a witness
/// `G -> K_{χ_c}`. Graphs without edges get `1/1` and a map to `K_1`.
pub fn circular_chromatic_number_bounded(
    g: &Graph,
    max_den: u32,
    limits: &Limits,
) -> Result<(Fraction, HomWitness)> {
    require_loop_free(g, "the circular chromatic number")?;
    if g.order() == 0 {
        return Err(Error::precondition(
            "circular chromatic number of the empty graph",
        ));
    }
    if g.edge_count() == 0 {
        let w = HomWitness::new(vec![0; g.order()], g, &complete(1))?;
        return Ok((Fraction::integer(1)?, w));
    }
    let chi = chromatic_number(g, limits)? as u32;
    for f in circular_candidates(chi, max_den.max(1)) {
        let target = circular_clique(f)?;
        if let Some(w) = hom_exists_with(g, &target, limits)? {
            return Ok((f, w));
        }
    }
    unreachable!("K_chi is always among the candidates")
}

/// `χ_c(G)`: the least `n/m` with `G -> K_{n/m}`, scanning denominators
/// `m <= |V(G)|`.
pub fn circular_chromatic_number(g: &Graph, limits: &Limits) -> Result<(Fraction, HomWitness)> {
    circular_chromatic_number_bounded(g, g.order() as u32, limits)
}

/// Evidence that `G` is colourable with the stated number of colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringCertificate {
    /// A homomorphism to `K_n` (for `n/1`) or `K_{n/m}`.
    Colouring {
        target: Fraction,
        witness: HomWitness,
    },
    /// An orientation of `G` into which no member of `family` maps.
    Orientation {
        spec: OrientationSpec,
        oriented: Digraph,
        family: Vec<OrientationSpec>,
        /// A map of `oriented` to `T⃗_k` or `ι_m(T⃗_n)` when one was used to
        /// build the orientation.
        witness: Option<HomWitness>,
    },
}

impl ColouringCertificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        match self {
            ColouringCertificate::Colouring { target, witness } => {
                let k = if target.den() == 1 {
                    complete(target.num() as usize)
                } else {
                    circular_clique(*target)?
                };
                Ok(witness.verify(g, &k))
            }
            ColouringCertificate::Orientation {
                spec,
                oriented,
                family,
                ..
            } => {
                if spec.len() != g.edge_count() || &orient(g, spec)? != oriented {
                    return Ok(false);
                }
                for p in family {
                    if hom_exists_with(&oriented_path(p), oriented, limits)?.is_some() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub fn orientation(&self) -> Option<&Digraph> {
        match self {
            ColouringCertificate::Orientation { oriented, .. } => Some(oriented),
            ColouringCertificate::Colouring { .. } => None,
        }
    }
}

/// Orientation spec orienting each edge `u <= v` from `u` to `v` iff `forward(u, v)`.
fn spec_from(g: &Graph, forward: impl Fn(usize, usize) -> bool) -> OrientationSpec {
    OrientationSpec::new(g.edges().map(|(u, v)| !forward(u, v)).collect())
}

fn no_member_maps(family: &[Digraph], target: &Digraph, limits: &Limits) -> Result<bool> {
    let prepared = PreparedTarget::new(target);
    for p in family {
        if HomSearch::prepared(p, &prepared).limits(limits).exists()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First orientation (in spec order) admitting no homomorphism from any
/// member of `family`. Refuses graphs above the edge cap.
pub fn find_orientation_avoiding(
    g: &Graph,
    family: &[OrientationSpec],
    cap: usize,
    limits: &Limits,
) -> Result<Option<(OrientationSpec, Digraph)>> {
    require_loop_free(g, "orientation scan")?;
    if g.edge_count() > cap {
        return Err(Error::Cap(format!(
            "orientation scan limited to {cap} edges, got {}",
            g.edge_count()
        )));
    }
    let paths: Vec<Digraph> = family.iter().map(oriented_path).collect();
    for (spec, d) in orientations(g)? {
        if no_member_maps(&paths, &d, limits)? {
            return Ok(Some((spec, d)));
        }
    }
    Ok(None)
}

/// Gallai–Roy: if `G` is `k`-colourable, orient each edge from the lower to
/// the higher colour and certify that `P⃗_k` does not map to the result.
/// Otherwise `None`, after confirming (for at most `cap` edges) that every
/// orientation admits `P⃗_k`; an orientation found by that scan is returned
/// as a certificate.
pub fn gallai_roy_orientation(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<Option<ColouringCertificate>> {
    gallai_roy_orientation_capped(g, k, DEFAULT_ORIENTATION_CAP, limits)
}

pub fn gallai_roy_orientation_capped(
    g: &Graph,
    k: usize,
    cap: usize,
    limits: &Limits,
) -> Result<Option<ColouringCertificate>> {
    require_loop_free(g, "Gallai–Roy orientation")?;
    let family = vec![OrientationSpec::forward(k)];
    if let Some(c) = hom_exists_with(g, &complete(k), limits)? {
        let spec = spec_from(g, |u, v| c.image(u) < c.image(v));
        let oriented = orient(g, &spec)?;
        let witness = HomWitness::new(c.into_map(), &oriented, &transitive_tournament(k))?;
        assert!(
            no_member_maps(&[directed_path(k)], &oriented, limits)?,
            "an orientation mapping to T_k cannot contain P_k"
        );
        return Ok(Some(ColouringCertificate::Orientation {
            spec,
            oriented,
            family,
            witness: Some(witness),
        }));
    }
    if g.edge_count() > cap {
        return Ok(None);
    }
    Ok(
        find_orientation_avoiding(g, &family, cap, limits)?.map(|(spec, oriented)| {
            ColouringCertificate::Orientation {
                spec,
                oriented,
                family,
                witness: None,
            }
        }),
    )
}

/// Orientations of the `n`-arc path with at most `r` reversed arcs,
/// ordered by reversal mask. With `dedup`, a spec is dropped when its
/// mirror image (the same digraph read from the other end) is also in the
/// family and smaller.
pub fn reversal_paths(n: usize, r: usize, dedup: bool) -> Result<Vec<OrientationSpec>> {
    if n > 63 {
        return Err(Error::param("reversal paths support at most 63 arcs"));
    }
    let specs: Vec<OrientationSpec> = (0..1u64 << n)
        .filter(|m| m.count_ones() as usize <= r)
        .map(|m| OrientationSpec::from_mask(m, n))
        .collect();
    if !dedup {
        return Ok(specs);
    }
    Ok(specs
        .iter()
        .filter(|s| {
            let mirror = s.mirrored();
            mirror.reversed_count() > r || s.bits() <= mirror.bits()
        })
        .cloned()
        .collect())
}

fn check_ratio(n: u32, m: u32) -> Result<Fraction> {
    let f = Fraction::new(n, m)?;
    if f.num() != n || f.den() != m || !f.is_circular_clique_ratio() {
        return Err(Error::param(format!(
            "{n}/{m} must be reduced with 2m <= n"
        )));
    }
    Ok(f)
}

/// `B(n, m)`: the symmetrization of `ι_m(T⃗_n)`.
pub fn yeh_zhu_graph(n: usize, m: usize, limits: &Limits) -> Result<Graph> {
    Ok(symmetrization(&interleaved_adjoint(
        m,
        &transitive_tournament(n),
        limits,
    )?))
}

/// Circular Gallai–Roy: when `G -> K_{n/m}`, an orientation of `G` mapping
/// to `ι_m(T⃗_n)` (built from a homomorphism `G -> B(n, m)`) into which no
/// path of `P_{n,m-1}` maps. Otherwise `None`, after an exhaustive
/// orientation scan for graphs within the edge cap; an orientation found by
/// that scan is returned as a certificate.
pub fn circular_gallai_roy_check(
    g: &Graph,
    n: u32,
    m: u32,
    limits: &Limits,
) -> Result<Option<ColouringCertificate>> {
    require_loop_free(g, "circular Gallai–Roy")?;
    let f = check_ratio(n, m)?;
    let family = reversal_paths(n as usize, m as usize - 1, true)?;
    let target = circular_clique(f)?;
    if hom_exists_with(g, &target, limits)?.is_some() {
        let iota = interleaved_adjoint(m as usize, &transitive_tournament(n as usize), limits)?;
        let b = symmetrization(&iota);
        let phi = hom_exists_with(g, &b, limits)?.ok_or_else(|| {
            Error::precondition(format!(
                "no homomorphism to B({n},{m}) although G -> K_{n}/{m}"
            ))
        })?;
        let spec = spec_from(g, |u, v| iota.has_arc(phi.image(u), phi.image(v)));
        let oriented = orient(g, &spec)?;
        let witness = HomWitness::new(phi.into_map(), &oriented, &iota)?;
        let paths: Vec<Digraph> = family.iter().map(oriented_path).collect();
        if !no_member_maps(&paths, &oriented, limits)? {
            return Err(Error::precondition(format!(
                "an orientation mapping to ι_{m}(T_{n}) admits a path of P_{n},{}",
                m - 1
            )));
        }
        return Ok(Some(ColouringCertificate::Orientation {
            spec,
            oriented,
            family,
            witness: Some(witness),
        }));
    }
    if g.edge_count() > DEFAULT_ORIENTATION_CAP {
        return Ok(None);
    }
    Ok(
        exhaustive_circular_orientation(g, n, m, limits)?.map(|(spec, oriented)| {
            ColouringCertificate::Orientation {
                spec,
                oriented,
                family,
                witness: None,
            }
        }),
    )
}

/// The first orientation of `G` admitting no path of `P_{n,m-1}`, found by
/// scanning every orientation.
pub fn exhaustive_circular_orientation(
    g: &Graph,
    n: u32,
    m: u32,
    limits: &Limits,
) -> Result<Option<(OrientationSpec, Digraph)>> {
    check_ratio(n, m)?;
    let family = reversal_paths(n as usize, m as usize - 1, true)?;
    find_orientation_avoiding(g, &family, DEFAULT_ORIENTATION_CAP, limits)
}

/// One grid point `(i, j)` of the odd-power scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersPoint {
    pub i: u32,
    pub j: u32,
    /// `(6i + 3) / (3i + 1 - j)`.
    pub value: Fraction,
    /// Whether `P^{2i+1}_{2j+1}(G)` is 3-colourable.
    pub colourable: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PowersScan {
    pub points: Vec<PowersPoint>,
    /// Grid points with `3i + 1 - j <= 0`.
    pub skipped: Vec<(u32, u32)>,
}

impl PowersScan {
    /// Least value at a 3-colourable point: `P^{2i+1}_{2j+1}(G) -> K_3`
    /// holds exactly when `χ_c(G) <= (6i+3)/(3i+1-j)`, so this is an upper
    /// bound on `χ_c(G)`, and it is attained once the grid contains `χ_c`.
    pub fn upper(&self) -> Option<Fraction> {
        self.points
            .iter()
            .filter(|p| p.colourable)
            .map(|p| p.value)
            .min()
    }

    /// Greatest value at a non-3-colourable point: a strict lower bound.
    pub fn lower(&self) -> Option<Fraction> {
        self.points
            .iter()
            .filter(|p| !p.colourable)
            .map(|p| p.value)
            .max()
    }
}

/// Evaluates 3-colourability of `P^{2i+1}_{2j+1}(G)` for `i <= i_max`,
/// `j <= j_max`.
pub fn powers_scan(g: &Graph, i_max: u32, j_max: u32, limits: &Limits) -> Result<PowersScan> {
    require_loop_free(g, "the odd-power scan")?;
    let k3 = complete(3);
    let mut scan = PowersScan::default();
    for i in 0..=i_max {
        for j in 0..=j_max {
            let den = 3 * i as i64 + 1 - j as i64;
            if den <= 0 {
                scan.skipped.push((i, j));
                continue;
            }
            let value = Fraction::new(6 * i + 3, den as u32)?;
            let p = power_functor(2 * i as usize + 1, 2 * j as usize + 1, g, limits)?;
            let colourable = hom_exists_with(&p, &k3, limits)?.is_some();
            scan.points.push(PowersPoint {
                i,
                j,
                value,
                colourable,
            });
        }
    }
    Ok(scan)
}

/// The odd-power estimate of `χ_c(G)`: the least `(6i+3)/(3i+1-j)` over the
/// grid at which `P^{2i+1}_{2j+1}(G)` is 3-colourable (see
/// [`PowersScan::upper`]). Fails when no grid point is 3-colourable.
pub fn circular_lower_bound_via_powers(
    g: &Graph,
    i_max: u32,
    j_max: u32,
    limits: &Limits,
) -> Result<Fraction> {
    powers_scan(g, i_max, j_max, limits)?
        .upper()
        .ok_or_else(|| Error::precondition("no grid point gives a 3-colourable power"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, kneser, lexicographic_product};

    #[test]
    fn chromatic_examples() {
        let l = Limits::default();
        assert_eq!(chromatic_number(&cycle(5).unwrap(), &l).unwrap(), 3);
        assert_eq!(chromatic_number(&kneser(4, 2).unwrap(), &l).unwrap(), 2);
        let lex = lexicographic_product(&cycle(5).unwrap(), &complete(2), &l).unwrap();
        assert_eq!(chromatic_number(&lex, &l).unwrap(), 5);
        let looped = Graph::from_edges(1, [(0, 0)]).unwrap();
        assert!(chromatic_number(&looped, &l).is_err());
        assert_eq!(chromatic_number(&Graph::empty(0), &l).unwrap(), 0);
    }

    #[test]
    fn circular_examples() {
        let l = Limits::default();
        let (f, w) = circular_chromatic_number(&cycle(5).unwrap(), &l).unwrap();
        assert_eq!(f, Fraction::new(5, 2).unwrap());
        assert!(w.verify(&cycle(5).unwrap(), &circular_clique(f).unwrap()));
        assert_eq!(
            circular_chromatic_number(&complete(4), &l).unwrap().0,
            Fraction::integer(4).unwrap()
        );
        assert_eq!(
            circular_chromatic_number(&cycle(7).unwrap(), &l).unwrap().0,
            Fraction::new(7, 3).unwrap()
        );
        assert_eq!(
            circular_chromatic_number(&Graph::empty(3), &l).unwrap().0,
            Fraction::integer(1).unwrap()
        );
    }

    #[test]
    fn gallai_roy_examples() {
        let l = Limits::default();
        let c5 = cycle(5).unwrap();
        let cert = gallai_roy_orientation(&c5, 3, &l).unwrap().unwrap();
        assert!(cert.verify(&c5, &l).unwrap());
        assert!(gallai_roy_orientation(&complete(3), 2, &l)
            .unwrap()
            .is_none());
        let k1 = complete(1);
        let cert = gallai_roy_orientation(&k1, 1, &l).unwrap().unwrap();
        assert_eq!(cert.orientation().unwrap().arc_count(), 0);
    }

    #[test]
    fn reversal_path_counts() {
        assert_eq!(
            reversal_paths(3, 0, false).unwrap(),
            vec![OrientationSpec::forward(3)]
        );
        assert_eq!(reversal_paths(5, 1, false).unwrap().len(), 6);
        // ↑↓ and ↓↑ are their own mirror images; ↑↑'s mirror ↓↓ is outside.
        assert_eq!(reversal_paths(2, 1, true).unwrap().len(), 3);
        // ↓↓↑, ↑↓↓ and ↓↑↓ mirror ↓↑↑, ↑↑↓ and ↑↓↑.
        assert_eq!(reversal_paths(3, 2, false).unwrap().len(), 7);
        assert_eq!(reversal_paths(3, 2, true).unwrap().len(), 4);
    }

    #[test]
    fn circular_gallai_roy_examples() {
        let l = Limits::default();
        let c5 = cycle(5).unwrap();
        let cert = circular_gallai_roy_check(&c5, 5, 2, &l).unwrap().unwrap();
        assert!(cert.verify(&c5, &l).unwrap());
        assert!(circular_gallai_roy_check(&c5, 7, 3, &l).unwrap().is_none());
        let k2 = complete(2);
        assert!(circular_gallai_roy_check(&k2, 2, 1, &l).unwrap().is_some());
        assert!(circular_gallai_roy_check(&k2, 4, 2, &l).is_err());
    }

    #[test]
    fn powers_on_k3() {
        let l = Limits::default();
        assert_eq!(
            circular_lower_bound_via_powers(&complete(3), 1, 1, &l).unwrap(),
            Fraction::integer(3).unwrap()
        );
    }
}
