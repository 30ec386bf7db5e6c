//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::process::ExitCode;
use std::time::Instant;

use pultr::adjoints::*;
use pultr::chromatic::*;
use pultr::duality::*;
use pultr::graph::*;
use pultr::hom::*;
use pultr::pultr::*;
use pultr::suites::*;
use pultr::{Digraph, Graph, Limits};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn(&Limits) -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: pultr::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn maps(g: &Digraph, h: &Digraph) -> std::result::Result<bool, String> {
    Ok(lift(hom_exists(g, h))?.is_some())
}

fn equivalent(g: &Digraph, h: &Digraph) -> std::result::Result<bool, String> {
    lift(hom_equivalent(g, h))
}

fn suite(r: pultr::Result<SuiteReport>) -> Check {
    let r = lift(r)?;
    match r.failure {
        None => Ok(()),
        Some(f) => Err(format!("{} after {} cases: {f}", r.suite, r.cases)),
    }
}

fn clique(n: u32, m: u32) -> std::result::Result<Graph, String> {
    lift(Fraction::new(n, m).and_then(circular_clique))
}

fn graphs_with_loops(nmax: usize) -> std::result::Result<Vec<Graph>, String> {
    Ok(lift(enumerate_graphs(
        EnumSpec::undirected(nmax).with_loops(true).up_to(),
    ))?
    .graphs()
    .collect())
}

fn c1_adjunction(l: &Limits) -> Check {
    suite(adjunction_suite(&adjunction_templates(), 3, l))
}

fn c2_gamma_c5(l: &Limits) -> Check {
    let g = lift(gamma_functor(
        &path_template(3),
        lift(cycle(5))?.as_digraph(),
        l,
    ))?;
    ensure(lift(isomorphic(&g, complete(5).as_digraph()))?, || {
        format!("Γ_T3(C_5) = {g:?}")
    })
}

fn c3_lexicographic(l: &Limits) -> Check {
    let c5 = lift(cycle(5))?;
    let lex = lift(lexicographic_product(&c5, &complete(2), l))?;
    for n in 3..=5 {
        let kn = complete(n).into_digraph();
        let left = maps(lex.as_digraph(), &kn)?;
        let right = maps(
            c5.as_digraph(),
            &lift(gamma_functor(&lexicographic_k2(), &kn, l))?,
        )?;
        ensure(left == right, || format!("n = {n}: {left} vs {right}"))?;
    }
    let chi = lift(chromatic_number(&lex, l))?;
    ensure(chi == 5, || format!("χ(C_5[K_2]) = {chi}"))
}

fn c4_exponential(l: &Limits) -> Check {
    let k2 = complete(2).into_digraph();
    let k3 = complete(3).into_digraph();
    let exp = lift(exponential_graph(&k3, &k2, l))?;
    for g in graphs_with_loops(4)? {
        let prod = lift(tensor_product(g.as_digraph(), &k2, l))?;
        let left = maps(&prod, &k3)?;
        let right = maps(g.as_digraph(), &exp)?;
        ensure(left == right, || format!("{g:?}: {left} vs {right}"))?;
    }
    Ok(())
}

fn c5_omega(l: &Limits) -> Check {
    let universe = graphs_with_loops(4)?;
    for m in [3, 5] {
        let t = path_template(m);
        for h in [complete(2), complete(3), lift(cycle(5))?] {
            let omega = lift(omega_odd_path(m, &h, l))?;
            for g in &universe {
                let gamma = lift(gamma_functor(&t, g.as_digraph(), l))?;
                let left = maps(&gamma, h.as_digraph())?;
                let right = maps(g.as_digraph(), omega.as_digraph())?;
                ensure(left == right, || format!("m = {m}, H = {h:?}, G = {g:?}"))?;
            }
        }
    }
    Ok(())
}

fn c6_omega_chi(l: &Limits) -> Check {
    for n in 2..=4 {
        let omega = lift(omega_odd_path(3, &complete(n), l))?;
        let chi = lift(chromatic_number(&omega, l))?;
        ensure(chi == n, || format!("χ(Ω_T3(K_{n})) = {chi}"))?;
    }
    Ok(())
}

fn c7_omega_cycles(l: &Limits) -> Check {
    for (m, c) in [(3, 9), (5, 15)] {
        let omega = lift(omega_odd_path(m, &complete(3), l))?;
        let ok = equivalent(omega.as_digraph(), lift(cycle(c))?.as_digraph())?;
        ensure(ok, || format!("Ω_T{m}(K_3) is not equivalent to C_{c}"))?;
    }
    Ok(())
}

fn c8_gamma_circular(l: &Limits) -> Check {
    for (n, m) in [(5, 2), (7, 3), (8, 3)] {
        let g = lift(gamma_functor(
            &path_template(3),
            clique(n, m)?.as_digraph(),
            l,
        ))?;
        let ok = equivalent(&g, clique(n, 3 * m - n)?.as_digraph())?;
        ensure(ok, || format!("Γ_T3(K_{n}/{m})"))?;
    }
    Ok(())
}

fn c9_path_duality(l: &Limits) -> Check {
    for k in 2..=4 {
        let f = ObstructionFamily::Finite(vec![directed_path(k)]);
        let r = lift(verify_duality(&f, &transitive_tournament(k), 4, l))?;
        ensure(r.holds(), || format!("k = {k}: {:?}", r.counterexample))?;
    }
    Ok(())
}

fn c10_sproink_duality(l: &Limits) -> Check {
    let k3 = lift(minimal_path_sproinks(3, 12))?;
    ensure(k3 == vec![directed_path(2)], || {
        format!("k = 3 set is {k3:?}")
    })?;
    for k in [3, 4] {
        let h = lift(arc_graph(&transitive_tournament(k), l))?;
        let r = lift(verify_duality(
            &ObstructionFamily::path_sproinks(k, 12),
            &h,
            4,
            l,
        ))?;
        ensure(r.holds(), || format!("k = {k}: {:?}", r.counterexample))?;
    }
    Ok(())
}

fn c11_shift(l: &Limits) -> Check {
    for (n, k) in [(4, 3), (5, 3)] {
        let r = lift(shift_graph(n, k, l))?;
        let d = lift(arc_graph(&lift(shift_graph(n, k - 1, l))?, l))?;
        ensure(lift(isomorphic(&r, &d))?, || format!("R({n},{k})"))?;
    }
    let girth = odd_girth(&lift(symmetric_shift_graph(7, 3, l))?);
    ensure(girth == Some(7), || {
        format!("odd girth of R′(7,3) is {girth:?}")
    })?;
    let chi = lift(chromatic_number(&lift(symmetric_shift_graph(8, 2, l))?, l))?;
    ensure(chi == 3, || format!("χ(R′(8,2)) = {chi}"))
}

fn c12_colour_lift(l: &Limits) -> Check {
    let k8 = complete(8).into_digraph();
    let delta = symmetrization(&lift(arc_graph(&k8, l))?);
    let (k, colouring) = lift(optimal_colouring(&delta, l))?;
    let lifted = lift(delta_colouring_lift(&k8, &colouring, l))?;
    ensure(lifted.verify(&k8, complete(1 << k).as_digraph()), || {
        "lifted colouring is improper".into()
    })?;
    ensure(k >= 3, || format!("χ(δ(K_8)) = {k}"))
}

fn c13_yeh_zhu(l: &Limits) -> Check {
    for (n, m) in [(5, 2), (7, 3)] {
        let b = lift(yeh_zhu_graph(n, m, l))?;
        let ok = equivalent(clique(n as u32, m as u32)?.as_digraph(), b.as_digraph())?;
        ensure(ok, || format!("K_{n}/{m}"))?;
    }
    Ok(())
}

fn c14_circular_gallai_roy(l: &Limits) -> Check {
    suite(circular_gallai_roy_suite(5, &[(5, 2), (7, 3), (3, 1)], l))
}

fn c15_ordering(l: &Limits) -> Check {
    suite(ordering_suite(4, l))
}

fn c16_powers(l: &Limits) -> Check {
    for (n, i, j, expected) in [(5, 2, 1, (5, 2)), (7, 3, 2, (7, 3))] {
        let c = lift(cycle(n))?;
        let bound = lift(circular_lower_bound_via_powers(&c, i, j, l))?;
        let (exact, _) = lift(circular_chromatic_number(&c, l))?;
        let want = lift(Fraction::new(expected.0, expected.1))?;
        ensure(bound == want && exact == want, || {
            format!("C_{n}: powers {bound}, χ_c {exact}")
        })?;
    }
    Ok(())
}

fn c17_counting(l: &Limits) -> Check {
    let t = path_template(3);
    let k2 = complete(2).into_digraph();
    let k3 = complete(3).into_digraph();
    let left = lift(hom_count(&lift(lambda_functor(&t, &k2, l))?, &k3))?;
    let right = lift(hom_count(&k2, &lift(gamma_functor(&t, &k3, l))?))?;
    ensure(left == 24 && right == 9, || format!("{left} vs {right}"))?;
    let out = lift(verify_adjunction(&t, &k2, &k3, l))?;
    ensure(out.holds(), || "thin adjunction fails".into())
}

fn c18_multiplicativity(l: &Limits) -> Check {
    for k in [complete(2), lift(cycle(5))?, lift(cycle(7))?] {
        if let Some((g, h)) = lift(multiplicativity_search(&k, 4, l))? {
            return Err(format!("{k:?}: {g:?} × {h:?}"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 18] = [
        (
            "Pultr adjunction on all pairs up to 3 vertices",
            c1_adjunction,
        ),
        ("Γ_T3(C_5) ≅ K_5", c2_gamma_c5),
        ("lexicographic instance, χ(C_5[K_2]) = 5", c3_lexicographic),
        ("exponential instance G × K_2 -> K_3", c4_exponential),
        ("Ω adjunction for T_3, T_5", c5_omega),
        ("χ(Ω_T3(K_n)) = n", c6_omega_chi),
        ("Ω_T3(K_3) ~ C_9, Ω_T5(K_3) ~ C_15", c7_omega_cycles),
        ("Γ_T3(K_n/m) ~ K_n/(3m-n)", c8_gamma_circular),
        ("path/tournament duality", c9_path_duality),
        ("sproink duality", c10_sproink_duality),
        ("shift graphs", c11_shift),
        ("colour lift on δ(K_8)", c12_colour_lift),
        ("interleaved adjoints and circular cliques", c13_yeh_zhu),
        ("circular Gallai–Roy", c14_circular_gallai_roy),
        ("ordering of odd powers", c15_ordering),
        ("χ_c via odd powers", c16_powers),
        ("counting adjunction fails, thin one holds", c17_counting),
        (
            "multiplicativity search finds nothing",
            c18_multiplicativity,
        ),
    ];
    let limits = Limits::default();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check(&limits);
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
