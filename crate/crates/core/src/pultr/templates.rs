use crate::error::{Error, Result};
use crate::graph::{
    complete, directed_path, oriented_path, path, standard_family, Digraph, Graph, OrientationSpec,
};
use crate::pultr::{PultrTemplate, TemplateMode};

/// Names accepted by [`builtin_template`]; parametrised names take a suffix.
pub const BUILTIN_NAMES: &[&str] = &[
    "t<m>",
    "lex-k2",
    "tensor:<family>",
    "arc",
    "shift:<k>",
    "iota:<m>",
    "opath:<dirs>",
];

/// `T_m = (K_1, P_m, endpoints)` with the path reversal as `q`.
pub fn path_template(m: usize) -> PultrTemplate {
    PultrTemplate::new(
        format!("t{m}"),
        complete(1).into(),
        path(m).into(),
        vec![0],
        vec![m],
        Some((0..=m).rev().collect()),
        TemplateMode::Undirected,
    )
    .expect("path template is well formed")
}

/// `(K_2, K_4)` with `ε1`, `ε2` onto the edges `{0,1}` and `{2,3}`.
pub fn lexicographic_k2() -> PultrTemplate {
    PultrTemplate::new(
        "lex-k2",
        complete(2).into(),
        complete(4).into(),
        vec![0, 1],
        vec![2, 3],
        Some(vec![2, 3, 0, 1]),
        TemplateMode::Undirected,
    )
    .expect("lexicographic template is well formed")
}

/// `T_H = (H × K_1, H × K_2)` with the two natural injections; `(x, i)` is
/// numbered `2x + i` in `Q`. `Λ_{T_H}(G) = G × H` and `Γ_{T_H}(K) = K^H`.
pub fn tensor_by(h: &Graph) -> PultrTemplate {
    let n = h.order();
    let mut q = Digraph::empty(2 * n);
    for (x, y) in h.arcs() {
        q.add_arc(2 * x, 2 * y + 1);
        q.add_arc(2 * x + 1, 2 * y);
    }
    let sym = (0..2 * n).map(|v| v ^ 1).collect();
    PultrTemplate::new(
        "tensor",
        Digraph::empty(n),
        q,
        (0..n).map(|x| 2 * x).collect(),
        (0..n).map(|x| 2 * x + 1).collect(),
        Some(sym),
        TemplateMode::Undirected,
    )
    .expect("tensor template is well formed")
}

/// `T_k = (0 -> ... -> k-1, 0 -> ... -> k, i ↦ i, i ↦ i + 1)`:
/// `Γ_{T_k}(T⃗_n) = R(n, k)`.
pub fn shift_template(k: usize) -> Result<PultrTemplate> {
    if k < 2 {
        return Err(Error::param(format!(
            "shift template needs k >= 2, got {k}"
        )));
    }
    PultrTemplate::new(
        format!("shift:{k}"),
        directed_path(k - 1),
        directed_path(k),
        (0..k).collect(),
        (1..=k).collect(),
        None,
        TemplateMode::Directed,
    )
}

/// `T_2 = (0 -> 1, 0 -> 1 -> 2)`: its central functor is the arc graph `δ`.
pub fn arc_graph_template() -> PultrTemplate {
    let mut t = shift_template(2).expect("k = 2 is valid");
    t.name = "arc".into();
    t
}

/// `(P_m, Q_m, ε_{m,1}, ε_{m,2})` whose central functor is `ι_m`: `P_m` has
/// `m` isolated vertices, `Q_m` has `u_1 = 2u`, `u_2 = 2u + 1` with arcs
/// `u_1 -> u_2` and `u_2 -> (u+1)_1`.
pub fn interleaved_template(m: usize) -> Result<PultrTemplate> {
    if m == 0 {
        return Err(Error::param("interleaved template needs m >= 1"));
    }
    let mut q = Digraph::empty(2 * m);
    for u in 0..m {
        q.add_arc(2 * u, 2 * u + 1);
        if u + 1 < m {
            q.add_arc(2 * u + 1, 2 * u + 2);
        }
    }
    PultrTemplate::new(
        format!("iota:{m}"),
        Digraph::empty(m),
        q,
        (0..m).map(|u| 2 * u).collect(),
        (0..m).map(|u| 2 * u + 1).collect(),
        None,
        TemplateMode::Directed,
    )
}

/// `(K_1, Q, endpoints)` for an oriented path `Q` on `0..=len`.
pub fn oriented_path_template(spec: &OrientationSpec) -> PultrTemplate {
    PultrTemplate::new(
        format!("opath:{spec}"),
        Digraph::empty(1),
        oriented_path(spec),
        vec![0],
        vec![spec.len()],
        None,
        TemplateMode::Directed,
    )
    .expect("oriented path template is well formed")
}

/// Looks up a template by name: `t3`, `t5`, `lex-k2`, `tensor:cycle:3`,
/// `arc`, `shift:3`, `iota:2`, `opath:↑↓↑`.
pub fn builtin_template(name: &str) -> Result<PultrTemplate> {
    let int = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::param(format!("bad integer {s:?} in template name {name:?}")))
    };
    if let Some(m) = name
        .strip_prefix('t')
        .filter(|m| m.chars().all(|c| c.is_ascii_digit()) && !m.is_empty())
    {
        let m = int(m)?;
        if m == 0 {
            return Err(Error::param("path template needs m >= 1"));
        }
        return Ok(path_template(m));
    }
    if let Some(spec) = name.strip_prefix("tensor:") {
        let h = Graph::try_from(standard_family(spec)?)
            .map_err(|_| Error::param("tensor template needs an undirected graph"))?;
        let mut t = tensor_by(&h);
        t.name = name.to_string();
        return Ok(t);
    }
    if let Some(k) = name.strip_prefix("shift:") {
        return shift_template(int(k)?);
    }
    if let Some(m) = name.strip_prefix("iota:") {
        return interleaved_template(int(m)?);
    }
    if let Some(dirs) = name.strip_prefix("opath:") {
        return Ok(oriented_path_template(&dirs.parse()?));
    }
    match name {
        "lex-k2" => Ok(lexicographic_k2()),
        "arc" => Ok(arc_graph_template()),
        _ => Err(Error::param(format!("unknown template {name:?}"))),
    }
}
