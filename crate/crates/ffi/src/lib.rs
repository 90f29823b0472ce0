//! C ABI for hcpsat.
//!
//! Objects cross the boundary as opaque handles created by `hcp_*` functions
//! and released with the matching `*_free`. Fallible calls return an
//! [`HcpStatus`]; the message of the most recent failure on the calling
//! thread is available from [`hcp_last_error`]. Strings returned to C are
//! owned by the caller and must be released with [`hcp_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use hcpsat::cycles::DEFAULT_MAX_CYCLES;
use hcpsat::encoder::{build_full, EncodingReport};
use hcpsat::formula::cnf::{tseitin_cnf, write_dimacs};
use hcpsat::solver::{solve_graph, solve_via_external, Method, SolveOptions, SolveResult};
use hcpsat::{Error, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ValidationError = 4,
    CapOverflow = 5,
    ModelParseError = 6,
    ModelInvalid = 7,
    InvalidArgument = 8,
    InternalError = 9,
    IndexOutOfRange = 10,
    BufferTooSmall = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcpMethod {
    Brute = 0,
    Dnf = 1,
    Lazy = 2,
}

/// Parsed graph.
pub struct HcpGraph(Graph);

/// Encoding of a graph: the formula plus block counts and warnings.
pub struct HcpEncoding(EncodingReport);

/// Verdict, models and decoded cycles.
pub struct HcpSolveResult(SolveResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: HcpStatus, message: impl Into<String>) -> HcpStatus {
    set_error(message.into());
    status
}

fn status_of(e: &Error) -> HcpStatus {
    let status = match e {
        Error::Parse { .. } => HcpStatus::ParseError,
        Error::Validation(_) => HcpStatus::ValidationError,
        Error::ModelParse(_) | Error::VarOutOfRange { .. } => HcpStatus::ModelParseError,
        Error::ModelInvalid(_) => HcpStatus::ModelInvalid,
        Error::InvalidArgument(_) | Error::WidthMismatch { .. } => HcpStatus::InvalidArgument,
        Error::Internal(_) => HcpStatus::InternalError,
        e if e.is_cap_overflow() => HcpStatus::CapOverflow,
        _ => HcpStatus::InternalError,
    };
    set_error(format!("{}: {e}", e.code()));
    status
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, HcpStatus> {
    if text.is_null() {
        return Err(fail(HcpStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(HcpStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failed call on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hcp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hcp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses edge-list text into a new graph stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcp_graph_parse(text: *const c_char, out: *mut *mut HcpGraph) -> HcpStatus {
    if out.is_null() {
        return fail(HcpStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match hcpsat::parse_edge_list(text) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(HcpGraph(g)));
            HcpStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `g` must be NULL or a handle from [`hcp_graph_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hcp_graph_free(g: *mut HcpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_graph_vertex_count(g: *const HcpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_graph_edge_count(g: *const HcpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Builds `F = F1 & F2`. `max_cycles == 0` selects the default cap.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcp_encode(g: *const HcpGraph, max_cycles: usize, out: *mut *mut HcpEncoding) -> HcpStatus {
    if out.is_null() {
        return fail(HcpStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let Some(g) = g.as_ref() else {
        return fail(HcpStatus::NullPointer, "null graph");
    };
    let cap = if max_cycles == 0 { DEFAULT_MAX_CYCLES } else { max_cycles };
    match build_full(&g.0, cap) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(HcpEncoding(report)));
            HcpStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `e` must be NULL or a handle from [`hcp_encode`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hcp_encoding_free(e: *mut HcpEncoding) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Writes the F1 and F2 block counts and the number of assumption warnings.
/// Any output pointer may be NULL.
///
/// # Safety
/// `e` must be a live encoding handle; non-NULL outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn hcp_encoding_counts(
    e: *const HcpEncoding,
    f1_blocks: *mut usize,
    f2_blocks: *mut usize,
    warnings: *mut usize,
) -> HcpStatus {
    let Some(e) = e.as_ref() else {
        return fail(HcpStatus::NullPointer, "null encoding");
    };
    if !f1_blocks.is_null() {
        *f1_blocks = e.0.f1_block_count;
    }
    if !f2_blocks.is_null() {
        *f2_blocks = e.0.f2_block_count;
    }
    if !warnings.is_null() {
        *warnings = e.0.warnings.len();
    }
    HcpStatus::Ok
}

/// Human-readable formula text. Free with [`hcp_string_free`].
///
/// # Safety
/// `e` must be NULL or a live encoding handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_encoding_to_expr(e: *const HcpEncoding) -> *mut c_char {
    match e.as_ref() {
        Some(e) => into_c_string(e.0.formula.render()),
        None => {
            set_error("null encoding".into());
            ptr::null_mut()
        }
    }
}

/// DIMACS CNF of the encoding. Free with [`hcp_string_free`].
///
/// # Safety
/// `e` must be NULL or a live encoding handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_encoding_to_dimacs(e: *const HcpEncoding) -> *mut c_char {
    match e.as_ref() {
        Some(e) => into_c_string(write_dimacs(&tseitin_cnf(&e.0.formula))),
        None => {
            set_error("null encoding".into());
            ptr::null_mut()
        }
    }
}

/// Solves the encoding of `g` in-process.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcp_solve(
    g: *const HcpGraph,
    method: HcpMethod,
    find_all: bool,
    out: *mut *mut HcpSolveResult,
) -> HcpStatus {
    if out.is_null() {
        return fail(HcpStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let Some(g) = g.as_ref() else {
        return fail(HcpStatus::NullPointer, "null graph");
    };
    let method = match method {
        HcpMethod::Brute => Method::Brute,
        HcpMethod::Dnf => Method::Dnf,
        HcpMethod::Lazy => Method::Lazy,
    };
    let opts = SolveOptions {
        find_all,
        ..SolveOptions::default()
    };
    match solve_graph(&g.0, method, &opts) {
        Ok(r) => {
            *out = Box::into_raw(Box::new(HcpSolveResult(r)));
            HcpStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Checks a DIMACS solver's output against the CNF export of `g`.
///
/// # Safety
/// `g` must be a live graph handle, `solver_output` a NUL-terminated string
/// and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcp_solve_external(
    g: *const HcpGraph,
    solver_output: *const c_char,
    out: *mut *mut HcpSolveResult,
) -> HcpStatus {
    if out.is_null() {
        return fail(HcpStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let Some(g) = g.as_ref() else {
        return fail(HcpStatus::NullPointer, "null graph");
    };
    let text = match read_str(solver_output) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match solve_via_external(&g.0, text, DEFAULT_MAX_CYCLES) {
        Ok(r) => {
            *out = Box::into_raw(Box::new(HcpSolveResult(r)));
            HcpStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `r` must be NULL or a result handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hcp_result_free(r: *mut HcpSolveResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be NULL or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_result_satisfiable(r: *const HcpSolveResult) -> bool {
    r.as_ref().is_some_and(|r| r.0.satisfiable)
}

/// # Safety
/// `r` must be NULL or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn hcp_result_model_count(r: *const HcpSolveResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.models.len())
}

/// Copies the `index`-th decoded cycle (0-based vertex indices) into `buf`.
/// `*len` receives the cycle length even when the buffer is too small.
///
/// # Safety
/// `r` must be a live result handle, `len` writable, and `buf` valid for
/// `cap` writes (it may be NULL when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn hcp_result_cycle(
    r: *const HcpSolveResult,
    index: usize,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> HcpStatus {
    let Some(r) = r.as_ref() else {
        return fail(HcpStatus::NullPointer, "null result");
    };
    if len.is_null() {
        return fail(HcpStatus::NullPointer, "null length pointer");
    }
    let Some(cycle) = r.0.decoded_cycles.get(index) else {
        return fail(
            HcpStatus::IndexOutOfRange,
            format!("cycle {index} requested, {} available", r.0.decoded_cycles.len()),
        );
    };
    *len = cycle.len();
    if cap < cycle.len() || buf.is_null() {
        return fail(HcpStatus::BufferTooSmall, format!("need room for {} vertices", cycle.len()));
    }
    ptr::copy_nonoverlapping(cycle.as_ptr(), buf, cycle.len());
    HcpStatus::Ok
}
