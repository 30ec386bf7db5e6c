//! C ABI over `pultr`.
//!
//! Graphs and templates are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns a
//! [`PultrStatus`]; on failure the message is available from
//! [`pultr_last_error`] on the same thread until the next failing call.
//! Output pointers are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pultr::adjoints::{arc_graph, omega_odd_path};
use pultr::chromatic::{chromatic_number, circular_chromatic_number};
use pultr::graph::{parse_graph, serialize_graph, standard_family, to_dot};
use pultr::hom::{hom_count_with, hom_exists_with};
use pultr::pultr::{
    builtin_template, gamma_functor, lambda_functor, parse_template, PultrTemplate as Template,
};
use pultr::suites::{run_suite, Suite};
use pultr::{Digraph, Error, Graph, Limits};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PultrStatus {
    Ok = 0,
    /// A checked property does not hold.
    Refuted = 1,
    /// Size guard, search budget or enumeration cap.
    Guard = 2,
    /// Malformed input text, bad parameter, or violated precondition.
    Invalid = 3,
    NullPointer = 4,
    /// A string argument is not valid UTF-8.
    Utf8 = 5,
    /// A result does not fit the output type.
    Overflow = 6,
    /// Internal panic; the handles passed in are still valid.
    Panic = 7,
}

/// Resource limits. `max_size == 0` disables the size guard.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PultrLimits {
    pub node_budget: u64,
    pub max_size: u64,
    pub iso_cap: usize,
}

/// A digraph. Undirected graphs are symmetric digraphs.
pub struct PultrGraph(Digraph);

pub struct PultrTemplate(Template);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(PultrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = if e.is_resource_limit() {
            PultrStatus::Guard
        } else {
            PultrStatus::Invalid
        };
        Fail(status, e.to_string())
    }
}

type Res<T> = Result<T, Fail>;

fn guard(f: impl FnOnce() -> Res<PultrStatus>) -> PultrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PultrStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(PultrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(PultrStatus::Utf8, format!("{what}: {e}")))
}

unsafe fn graph_arg<'a>(p: *const PultrGraph, what: &str) -> Res<&'a Digraph> {
    p.as_ref().map(|g| &g.0).ok_or_else(|| null(what))
}

unsafe fn template_arg<'a>(p: *const PultrTemplate, what: &str) -> Res<&'a Template> {
    p.as_ref().map(|t| &t.0).ok_or_else(|| null(what))
}

unsafe fn limits_arg(p: *const PultrLimits) -> Limits {
    match p.as_ref() {
        None => Limits::default(),
        Some(l) => Limits {
            node_budget: l.node_budget,
            max_size: if l.max_size == 0 {
                u128::MAX
            } else {
                l.max_size as u128
            },
            iso_cap: l.iso_cap,
        },
    }
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Res<PultrStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(PultrStatus::Ok)
}

unsafe fn put_graph(out: *mut *mut PultrGraph, d: Digraph) -> Res<PultrStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(PultrGraph(d))));
    Ok(PultrStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Res<PultrStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|e| Fail(PultrStatus::Invalid, e.to_string()))?;
    out.write(c.into_raw());
    Ok(PultrStatus::Ok)
}

fn undirected(d: &Digraph, what: &str) -> Res<Graph> {
    Graph::try_from(d.clone())
        .map_err(|_| Fail(PultrStatus::Invalid, format!("{what} must be symmetric")))
}

/// Message of the last failing call on this thread, or null. The pointer is
/// valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn pultr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn pultr_limits_default() -> PultrLimits {
    let l = Limits::default();
    PultrLimits {
        node_budget: l.node_budget,
        max_size: l.max_size as u64,
        iso_cap: l.iso_cap,
    }
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pultr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the edge-list format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_parse(
    text: *const c_char,
    out: *mut *mut PultrGraph,
) -> PultrStatus {
    guard(|| {
        let d = parse_graph(str_arg(text, "text")?)?;
        put_graph(out, d)
    })
}

/// Builds a standard family such as `cycle:5`, `complete:4` or
/// `circular:7/3`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_family(
    spec: *const c_char,
    out: *mut *mut PultrGraph,
) -> PultrStatus {
    guard(|| {
        let d = standard_family(str_arg(spec, "spec")?)?;
        put_graph(out, d)
    })
}

/// Edge-list text of `g`; free it with [`pultr_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_serialize(
    g: *const PultrGraph,
    out: *mut *mut c_char,
) -> PultrStatus {
    guard(|| put_string(out, serialize_graph(graph_arg(g, "g")?)))
}

/// DOT text of `g`; free it with [`pultr_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_dot(
    g: *const PultrGraph,
    out: *mut *mut c_char,
) -> PultrStatus {
    guard(|| put_string(out, to_dot(graph_arg(g, "g")?)))
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_order(g: *const PultrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of arcs (a symmetric edge counts twice, a loop once), or 0 for
/// null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_arc_count(g: *const PultrGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.arc_count())
}

/// # Safety
/// `g` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn pultr_graph_free(g: *mut PultrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// A built-in template: `t<m>` for odd `m`, `lex-k2`, `tensor:cycle:<n>`,
/// `arc`, `shift:<k>`, `iota:<m>`, `opath:<arrows>`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_template_builtin(
    name: *const c_char,
    out: *mut *mut PultrTemplate,
) -> PultrStatus {
    guard(|| {
        let t = builtin_template(str_arg(name, "name")?)?;
        put(out, Box::into_raw(Box::new(PultrTemplate(t))), "out")
    })
}

/// Parses the template file format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_template_parse(
    text: *const c_char,
    out: *mut *mut PultrTemplate,
) -> PultrStatus {
    guard(|| {
        let t = parse_template(str_arg(text, "text")?)?;
        put(out, Box::into_raw(Box::new(PultrTemplate(t))), "out")
    })
}

/// # Safety
/// `t` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn pultr_template_free(t: *mut PultrTemplate) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// `Λ_T(g)`. `limits` may be null for the defaults.
///
/// # Safety
/// Handles must be live; `limits` null or valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_lambda(
    t: *const PultrTemplate,
    g: *const PultrGraph,
    limits: *const PultrLimits,
    out: *mut *mut PultrGraph,
) -> PultrStatus {
    guard(|| {
        let d = lambda_functor(
            template_arg(t, "t")?,
            graph_arg(g, "g")?,
            &limits_arg(limits),
        )?;
        put_graph(out, d)
    })
}

/// `Γ_T(k)`. `limits` may be null for the defaults.
///
/// # Safety
/// Handles must be live; `limits` null or valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_gamma(
    t: *const PultrTemplate,
    k: *const PultrGraph,
    limits: *const PultrLimits,
    out: *mut *mut PultrGraph,
) -> PultrStatus {
    guard(|| {
        let d = gamma_functor(
            template_arg(t, "t")?,
            graph_arg(k, "k")?,
            &limits_arg(limits),
        )?;
        put_graph(out, d)
    })
}

/// `Ω_{T_m}(h)` for odd `m` and symmetric `h`.
///
/// # Safety
/// `h` must be live; `limits` null or valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_omega(
    m: usize,
    h: *const PultrGraph,
    limits: *const PultrLimits,
    out: *mut *mut PultrGraph,
) -> PultrStatus {
    guard(|| {
        let h = undirected(graph_arg(h, "h")?, "h")?;
        let g = omega_odd_path(m, &h, &limits_arg(limits))?;
        put_graph(out, g.into_digraph())
    })
}

/// The arc graph `δ(h)`.
///
/// # Safety
/// `h` must be live; `limits` null or valid; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_arc_graph(
    h: *const PultrGraph,
    limits: *const PultrLimits,
    out: *mut *mut PultrGraph,
) -> PultrStatus {
    guard(|| put_graph(out, arc_graph(graph_arg(h, "h")?, &limits_arg(limits))?))
}

/// Writes whether `g -> h`. If `map` is non-null and a homomorphism exists,
/// its images are written to `map[0..order(g)]`.
///
/// # Safety
/// Handles must be live; `limits` null or valid; `exists` writable; `map`
/// null or writable for `order(g)` entries.
#[no_mangle]
pub unsafe extern "C" fn pultr_hom_exists(
    g: *const PultrGraph,
    h: *const PultrGraph,
    limits: *const PultrLimits,
    exists: *mut bool,
    map: *mut usize,
) -> PultrStatus {
    guard(|| {
        let w = hom_exists_with(graph_arg(g, "g")?, graph_arg(h, "h")?, &limits_arg(limits))?;
        if exists.is_null() {
            return Err(null("exists"));
        }
        if let (Some(w), false) = (&w, map.is_null()) {
            ptr::copy_nonoverlapping(w.map().as_ptr(), map, w.map().len());
        }
        put(exists, w.is_some(), "exists")
    })
}

/// Number of homomorphisms `g -> h`.
///
/// # Safety
/// Handles must be live; `limits` null or valid; `count` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_hom_count(
    g: *const PultrGraph,
    h: *const PultrGraph,
    limits: *const PultrLimits,
    count: *mut u64,
) -> PultrStatus {
    guard(|| {
        let n = hom_count_with(graph_arg(g, "g")?, graph_arg(h, "h")?, &limits_arg(limits))?;
        let n = u64::try_from(n)
            .map_err(|_| Fail(PultrStatus::Overflow, format!("{n} homomorphisms")))?;
        put(count, n, "count")
    })
}

/// `χ(g)` of a symmetric loop-free graph.
///
/// # Safety
/// `g` must be live; `limits` null or valid; `chi` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_chromatic_number(
    g: *const PultrGraph,
    limits: *const PultrLimits,
    chi: *mut usize,
) -> PultrStatus {
    guard(|| {
        let g = undirected(graph_arg(g, "g")?, "g")?;
        put(chi, chromatic_number(&g, &limits_arg(limits))?, "chi")
    })
}

/// `χ_c(g) = num/den` of a symmetric loop-free graph.
///
/// # Safety
/// `g` must be live; `limits` null or valid; `num` and `den` writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_circular_chromatic_number(
    g: *const PultrGraph,
    limits: *const PultrLimits,
    num: *mut u32,
    den: *mut u32,
) -> PultrStatus {
    guard(|| {
        let g = undirected(graph_arg(g, "g")?, "g")?;
        if den.is_null() {
            return Err(null("den"));
        }
        let (f, _) = circular_chromatic_number(&g, &limits_arg(limits))?;
        put(num, f.num(), "num")?;
        put(den, f.den(), "den")
    })
}

/// Runs a named suite (`adjunction`, `omega`, `duality`, `shift`, `yeh-zhu`,
/// `ordering`, `powers-chi-c`). `nmax == 0` picks the suite's default.
/// Returns `Ok` or `Refuted`; `cases` (may be null) receives the number of
/// cases checked, and on refutation the counterexample is the last error.
///
/// # Safety
/// `name` must be a nul-terminated string; `limits` null or valid; `cases`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn pultr_verify_suite(
    name: *const c_char,
    nmax: usize,
    limits: *const PultrLimits,
    cases: *mut u64,
) -> PultrStatus {
    guard(|| {
        let suite: Suite = str_arg(name, "name")?.parse()?;
        let r = run_suite(suite, (nmax > 0).then_some(nmax), &limits_arg(limits))?;
        if !cases.is_null() {
            cases.write(r.cases);
        }
        match r.failure {
            None => Ok(PultrStatus::Ok),
            Some(f) => Err(Fail(PultrStatus::Refuted, f)),
        }
    })
}
