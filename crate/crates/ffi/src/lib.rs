//! C ABI for `graph-measure`.
//!
//! Graphs live behind the opaque [`GmGraph`] handle. Every call returns a
//! [`GmStatus`]; on failure [`gm_last_error`] describes the cause. Exact
//! values come back as rational strings (`"3"`, `"-7/2"`) and reports as
//! JSON, both allocated by the library and released with
//! [`gm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use graph_measure::number::{format_rational, format_scalar};
use graph_measure::{
    check_measure_equivalence, integrate, measure_fingerprint, monomial_integral, parse_graph,
    parse_simple_function, parse_word_set, shadow, DiagramPolicy, DirectedGraph,
    EquivalenceOptions, Error, MeasureSpace, ShadowedGraph, SpaceKind,
};

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GmStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed graph file.
    ParseError = 3,
    /// Malformed word, set or function literal.
    LiteralError = 4,
    /// Well-formed input outside the mathematics, e.g. a word outside the
    /// universe or the total of an infinite space.
    DomainError = 5,
    /// An infinite universe exceeded the enumeration limit; lower max_len.
    EnumerationLimit = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GmSpaceKind {
    Energy = 0,
    Diagram = 1,
    Groupoid = 2,
    ReducedDiagram = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GmPolicy {
    EdgeInjective = 0,
    RunCollapse = 1,
}

/// Which measure space to work in. `max_len` 0 means 2|E|.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct GmSpaceConfig {
    pub kind: GmSpaceKind,
    pub policy: GmPolicy,
    pub max_len: usize,
}

/// A parsed graph.
pub struct GmGraph {
    graph: DirectedGraph,
    shadow: Arc<ShadowedGraph>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn fail(status: GmStatus, message: impl Into<String>) -> GmStatus {
    set_error(message.into());
    status
}

fn status_of(err: &Error) -> GmStatus {
    match err {
        Error::Parse(_) | Error::Io { .. } => GmStatus::ParseError,
        Error::Literal(_) | Error::Validation(_) => GmStatus::LiteralError,
        Error::EnumerationLimit { .. } => GmStatus::EnumerationLimit,
        _ => GmStatus::DomainError,
    }
}

/// Runs `body`, turning errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), GmStatus>) -> GmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GmStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(GmStatus::Panic, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, GmStatus>;
}

impl<T> OrStatus<T> for graph_measure::Result<T> {
    fn or_status(self) -> Result<T, GmStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

/// # Safety
/// `text` is NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, GmStatus> {
    if text.is_null() {
        return Err(fail(GmStatus::NullArgument, "string argument is NULL"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(GmStatus::InvalidUtf8, "string argument is not UTF-8"))
}

/// # Safety
/// `graph` is NULL or a live handle from [`gm_graph_parse`].
unsafe fn read_graph<'a>(graph: *const GmGraph) -> Result<&'a GmGraph, GmStatus> {
    graph
        .as_ref()
        .ok_or_else(|| fail(GmStatus::NullArgument, "graph handle is NULL"))
}

/// # Safety
/// `out` is NULL or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), GmStatus> {
    if out.is_null() {
        return Err(fail(GmStatus::NullArgument, "output pointer is NULL"));
    }
    let s = CString::new(value).map_err(|_| fail(GmStatus::Panic, "result contains NUL"))?;
    *out = s.into_raw();
    Ok(())
}

fn space(graph: &GmGraph, config: GmSpaceConfig) -> MeasureSpace {
    let kind = match config.kind {
        GmSpaceKind::Energy => SpaceKind::Energy,
        GmSpaceKind::Diagram => SpaceKind::Diagram,
        GmSpaceKind::Groupoid => SpaceKind::Groupoid,
        GmSpaceKind::ReducedDiagram => SpaceKind::ReducedDiagram,
    };
    let policy = match config.policy {
        GmPolicy::EdgeInjective => DiagramPolicy::EdgeInjective,
        GmPolicy::RunCollapse => DiagramPolicy::RunCollapse,
    };
    let max_len = if config.max_len == 0 {
        graph.shadow.edge_ref_count()
    } else {
        config.max_len
    };
    MeasureSpace::new(graph.shadow.clone(), kind, policy, max_len)
}

/// The default setting of the graph integral: reduced diagrams,
/// edge-injective diagram map.
#[no_mangle]
pub extern "C" fn gm_space_default() -> GmSpaceConfig {
    GmSpaceConfig {
        kind: GmSpaceKind::ReducedDiagram,
        policy: GmPolicy::EdgeInjective,
        max_len: 0,
    }
}

/// Parses a graph file's contents into `*out`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_graph_parse(text: *const c_char, out: *mut *mut GmGraph) -> GmStatus {
    guard(|| {
        let text = read_str(text)?;
        if out.is_null() {
            return Err(fail(GmStatus::NullArgument, "output pointer is NULL"));
        }
        let graph = parse_graph(text).map_err(|e| fail(GmStatus::ParseError, e.to_string()))?;
        let shadow = Arc::new(shadow(&graph));
        *out = Box::into_raw(Box::new(GmGraph { graph, shadow }));
        Ok(())
    })
}

/// # Safety
/// `graph` is NULL or a handle from [`gm_graph_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gm_graph_free(graph: *mut GmGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `graph` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gm_graph_vertex_count(graph: *const GmGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// Number of edges of the base graph, or 0 for NULL.
///
/// # Safety
/// `graph` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gm_graph_edge_count(graph: *const GmGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Measure of the set literal `set` (e.g. `{e1,e2^-1}`).
///
/// # Safety
/// `graph` is a live handle, `set` a NUL-terminated string, `out` valid for
/// a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_measure(
    graph: *const GmGraph,
    config: GmSpaceConfig,
    set: *const c_char,
    out: *mut *mut c_char,
) -> GmStatus {
    guard(|| {
        let g = read_graph(graph)?;
        let literal = read_str(set)?;
        let sp = space(g, config);
        let words = parse_word_set(&g.shadow, literal).or_status()?;
        for w in &words {
            if !w.is_empty() && !sp.contains(w) {
                return Err(fail(
                    GmStatus::DomainError,
                    format!(
                        "`{}` is outside the {} universe",
                        graph_measure::format_word(&g.shadow, w),
                        sp.kind()
                    ),
                ));
            }
        }
        let value = sp.measure(&words).or_status()?;
        write_string(out, format_rational(&value))
    })
}

/// Measure of the whole universe; a domain error for infinite spaces.
///
/// # Safety
/// `graph` is a live handle; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_total(
    graph: *const GmGraph,
    config: GmSpaceConfig,
    out: *mut *mut c_char,
) -> GmStatus {
    guard(|| {
        let g = read_graph(graph)?;
        let value = space(g, config).total().or_status()?;
        write_string(out, format_rational(&value))
    })
}

/// Integral of a simple-function literal such as `3*{e1} + -2*{v1}`.
/// Complex results are written as `(re,im)`.
///
/// # Safety
/// `graph` is a live handle, `function` a NUL-terminated string, `out`
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_integrate(
    graph: *const GmGraph,
    config: GmSpaceConfig,
    function: *const c_char,
    out: *mut *mut c_char,
) -> GmStatus {
    guard(|| {
        let g = read_graph(graph)?;
        let literal = read_str(function)?;
        let sp = space(g, config);
        let f = parse_simple_function(&sp, literal).or_status()?;
        let value = integrate(&sp, &f).or_status()?;
        write_string(out, format_scalar(&value))
    })
}

/// ∫ g_n for n ≠ 0.
///
/// # Safety
/// `graph` is a live handle; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_monomial_integral(
    graph: *const GmGraph,
    config: GmSpaceConfig,
    n: i64,
    out: *mut *mut c_char,
) -> GmStatus {
    guard(|| {
        let g = read_graph(graph)?;
        let value = monomial_integral(&space(g, config), n).or_status()?;
        write_string(out, format_rational(&value))
    })
}

/// Measure-equivalence verdict as JSON:
/// `{verdict, witness?, distinguisher?, checked_sets}`.
///
/// # Safety
/// `left` and `right` are live handles; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_compare_json(
    left: *const GmGraph,
    right: *const GmGraph,
    max_len: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> GmStatus {
    guard(|| {
        let (a, b) = (read_graph(left)?, read_graph(right)?);
        let options = EquivalenceOptions {
            max_len: if max_len == 0 { 3 } else { max_len },
            seed,
            ..Default::default()
        };
        let verdict = check_measure_equivalence(&a.graph, &b.graph, &options).or_status()?;
        write_string(
            out,
            serde_json::to_string(&verdict).expect("verdict serializes"),
        )
    })
}

/// The measure fingerprint as JSON.
///
/// # Safety
/// `graph` is a live handle; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn gm_fingerprint_json(
    graph: *const GmGraph,
    out: *mut *mut c_char,
) -> GmStatus {
    guard(|| {
        let g = read_graph(graph)?;
        let f = measure_fingerprint(&g.graph).or_status()?;
        write_string(
            out,
            serde_json::to_string(&f).expect("fingerprint serializes"),
        )
    })
}

/// Message for the last failed call on this thread, or NULL. Free with
/// [`gm_string_free`].
#[no_mangle]
pub extern "C" fn gm_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
