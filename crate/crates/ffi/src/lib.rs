//! C ABI over `ddseed`.
//!
//! Graphs and seed sets are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`DdseedStatus`]; on failure the
//! calling thread's message is available from [`ddseed_last_error`].
//! Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use ddseed::centrality::{Measure, DEFAULT_GREEDY_REPLICATIONS};
use ddseed::diffusion::{estimate_spread, ICParams};
use ddseed::experiment::select_seeds;
use ddseed::graph::load_edge_list_file;
use ddseed::seedselect::{Method, SeedSet, SelectionConfig, Theta};
use ddseed::{Error, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DdseedStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    EmptyGraph = 4,
    NodeOutOfRange = 5,
    InvalidParameter = 6,
    Convergence = 7,
    Io = 8,
    BufferTooSmall = 9,
    Internal = 10,
}

/// How `DdseedSelectParams::theta` is interpreted.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DdseedThetaMode {
    /// Rounded network average degree; `theta` is ignored.
    Auto = 0,
    Fixed = 1,
    /// The common-neighbour test never vetoes; `theta` is ignored.
    Unbounded = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct DdseedSelectParams {
    pub k: usize,
    pub d_td: usize,
    /// A `DdseedThetaMode` value.
    pub theta_mode: u32,
    pub theta: usize,
    pub beta: f64,
    pub p_pair: f64,
    /// Edge probability used by greedy and degree discount.
    pub ic_p: f64,
    pub master_seed: u64,
    pub greedy_replications: usize,
}

/// Opaque graph handle.
pub struct DdseedGraph(Graph);

/// Opaque seed-set handle.
pub struct DdseedSeedSet(SeedSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> DdseedStatus {
    match e {
        Error::Parse { .. } => DdseedStatus::Parse,
        Error::EmptyGraph => DdseedStatus::EmptyGraph,
        Error::NodeOutOfRange { .. } => DdseedStatus::NodeOutOfRange,
        Error::InvalidParameter(_) | Error::UndefinedCorrelation(_) => DdseedStatus::InvalidParameter,
        Error::Convergence { .. } => DdseedStatus::Convergence,
        Error::Io(_) | Error::Csv(_) => DdseedStatus::Io,
    }
}

struct Fail(DdseedStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(DdseedStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DdseedStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            DdseedStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DdseedStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(DdseedStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph_arg<'a>(g: *const DdseedGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn ddseed_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn ddseed_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Loads a whitespace-separated edge list.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ddseed_graph_load(
    path: *const c_char,
    directed: bool,
    out: *mut *mut DdseedGraph,
) -> DdseedStatus {
    guard(|| {
        let path = str_arg(path, "path")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let (g, _) = load_edge_list_file(path, directed)?;
        write_out(out, Box::into_raw(Box::new(DdseedGraph(g))), "out")
    })
}

/// Builds a graph on nodes `0..node_count` from parallel endpoint arrays.
///
/// # Safety
/// `sources` and `targets` must each hold `edge_count` elements; `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn ddseed_graph_from_edges(
    node_count: usize,
    sources: *const usize,
    targets: *const usize,
    edge_count: usize,
    directed: bool,
    out: *mut *mut DdseedGraph,
) -> DdseedStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (src, dst) = if edge_count == 0 {
            (&[][..], &[][..])
        } else {
            if sources.is_null() || targets.is_null() {
                return Err(null("edge arrays"));
            }
            (
                std::slice::from_raw_parts(sources, edge_count),
                std::slice::from_raw_parts(targets, edge_count),
            )
        };
        let g = Graph::from_edges(node_count, src.iter().copied().zip(dst.iter().copied()), directed)?;
        write_out(out, Box::into_raw(Box::new(DdseedGraph(g))), "out")
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ddseed_graph_free(g: *mut DdseedGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Node count, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ddseed_graph_node_count(g: *const DdseedGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.node_count())
}

/// Edge count, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ddseed_graph_edge_count(g: *const DdseedGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Label from the input file for dense node `node`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ddseed_graph_original_id(g: *const DdseedGraph, node: usize, out: *mut i64) -> DdseedStatus {
    guard(|| {
        let g = graph_arg(g)?;
        g.check_node(node)?;
        write_out(out, g.original_id(node), "out")
    })
}

/// Defaults: k 50, d_td 2, automatic theta, beta 0.01, p_pair 0.01,
/// ic_p 0.01, seed 0, 200 greedy replications.
#[no_mangle]
pub extern "C" fn ddseed_select_params_default() -> DdseedSelectParams {
    let c = SelectionConfig::default();
    DdseedSelectParams {
        k: c.k,
        d_td: c.d_td,
        theta_mode: DdseedThetaMode::Auto as u32,
        theta: 0,
        beta: c.beta,
        p_pair: c.p_pair,
        ic_p: ICParams::default().p,
        master_seed: 0,
        greedy_replications: DEFAULT_GREEDY_REPLICATIONS,
    }
}

/// Selects seeds with `method` (for example "sidd", "dd", "degree").
///
/// # Safety
/// `g` must be a live handle, `method` a NUL-terminated string, `params`
/// readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddseed_select(
    g: *const DdseedGraph,
    method: *const c_char,
    params: *const DdseedSelectParams,
    out: *mut *mut DdseedSeedSet,
) -> DdseedStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let method = Method::from_str(str_arg(method, "method")?)?;
        let p = params.as_ref().ok_or_else(|| null("params"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let selection = SelectionConfig {
            k: p.k,
            d_td: p.d_td,
            theta: match p.theta_mode {
                m if m == DdseedThetaMode::Auto as u32 => Theta::AverageDegree,
                m if m == DdseedThetaMode::Fixed as u32 => Theta::Fixed(p.theta),
                m if m == DdseedThetaMode::Unbounded as u32 => Theta::Unbounded,
                m => {
                    return Err(Fail(
                        DdseedStatus::InvalidParameter,
                        format!("unknown theta mode {m}"),
                    ))
                }
            },
            beta: p.beta,
            p_pair: p.p_pair,
        };
        let ic = ICParams {
            p: p.ic_p,
            replications: 1,
            master_seed: p.master_seed,
        };
        let set = select_seeds(g, method, &selection, &ic, p.greedy_replications)?;
        write_out(out, Box::into_raw(Box::new(DdseedSeedSet(set))), "out")
    })
}

/// # Safety
/// `s` must be null or a live seed-set handle.
#[no_mangle]
pub unsafe extern "C" fn ddseed_seedset_free(s: *mut DdseedSeedSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of seeds, 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ddseed_seedset_len(s: *const DdseedSeedSet) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Copies dense seed ids in selection order into `buf`.
///
/// # Safety
/// `s` must be a live handle and `buf` writable for `capacity` elements.
#[no_mangle]
pub unsafe extern "C" fn ddseed_seedset_copy(s: *const DdseedSeedSet, buf: *mut usize, capacity: usize) -> DdseedStatus {
    guard(|| {
        let s = &s.as_ref().ok_or_else(|| null("seed set"))?.0;
        if s.len() > capacity {
            return Err(Fail(
                DdseedStatus::BufferTooSmall,
                format!("need room for {} seeds, got {capacity}", s.len()),
            ));
        }
        if s.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(s.seeds.as_ptr(), buf, s.len());
        Ok(())
    })
}

/// Monte Carlo independent-cascade spread of `seeds`.
///
/// # Safety
/// `g` must be a live handle, `seeds` readable for `seed_count` elements and
/// the outputs writable.
#[no_mangle]
pub unsafe extern "C" fn ddseed_estimate_spread(
    g: *const DdseedGraph,
    seeds: *const usize,
    seed_count: usize,
    p: f64,
    replications: usize,
    master_seed: u64,
    mean: *mut f64,
    stddev: *mut f64,
) -> DdseedStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let seeds = match seed_count {
            0 => &[][..],
            _ if seeds.is_null() => return Err(null("seeds")),
            n => std::slice::from_raw_parts(seeds, n),
        };
        if mean.is_null() || stddev.is_null() {
            return Err(null("outputs"));
        }
        let est = estimate_spread(
            g,
            seeds,
            &ICParams {
                p,
                replications,
                master_seed,
            },
        )?;
        mean.write(est.mean);
        stddev.write(est.stddev);
        Ok(())
    })
}

/// Writes one score per node for `measure` (for example "pagerank").
///
/// # Safety
/// `g` must be a live handle, `measure` a NUL-terminated string and `buf`
/// writable for `capacity` elements.
#[no_mangle]
pub unsafe extern "C" fn ddseed_centrality(
    g: *const DdseedGraph,
    measure: *const c_char,
    buf: *mut f64,
    capacity: usize,
) -> DdseedStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let measure = Measure::from_str(str_arg(measure, "measure")?)?;
        let n = g.node_count();
        if capacity < n {
            return Err(Fail(
                DdseedStatus::BufferTooSmall,
                format!("need room for {n} scores, got {capacity}"),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        let scores = measure.compute(g)?;
        ptr::copy_nonoverlapping(scores.scores().as_ptr(), buf, n);
        Ok(())
    })
}
