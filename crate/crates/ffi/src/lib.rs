//! C interface to `coxtrans`.
//!
//! Graphs and groups are opaque heap handles freed by their `*_free` function.
//! Every fallible call returns a [`CoxStatus`]; on failure the message is kept
//! per thread and read with [`cox_last_error`]. Strings handed out by the library
//! are freed with [`cox_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use coxtrans::coxeter::{affine_an_charpoly, coxeter_charpoly, spectral_radius};
use coxtrans::diagram::{parse_graph, resolve, Orientation, ValuedGraph};
use coxtrans::mckay::{build_group, character_table, mckay_matrix, molien_series, BinaryPolyhedralGroup, GroupKind};
use coxtrans::regularity::defect_form;
use coxtrans::spectral::default_tol;
use coxtrans::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    BufferTooSmall = 3,
    Overflow = 4,
    Dimension = 10,
    Domain = 11,
    UnknownDiagram = 12,
    InvalidParameter = 13,
    Syntax = 14,
    Valuation = 15,
    NoBicoloring = 16,
    NotATree = 17,
    Cyclic = 18,
    NotExtended = 19,
    NotIndefinite = 20,
    Consistency = 21,
    Panic = 99,
}

impl From<&Error> for CoxStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Dimension(_) => CoxStatus::Dimension,
            Error::Domain(_) => CoxStatus::Domain,
            Error::UnknownDiagram(_) => CoxStatus::UnknownDiagram,
            Error::InvalidParameter(_) => CoxStatus::InvalidParameter,
            Error::Syntax { .. } => CoxStatus::Syntax,
            Error::Valuation { .. } => CoxStatus::Valuation,
            Error::NoBicoloring => CoxStatus::NoBicoloring,
            Error::NotATree(_) => CoxStatus::NotATree,
            Error::Cyclic => CoxStatus::Cyclic,
            Error::NotExtended(_) => CoxStatus::NotExtended,
            Error::NotIndefinite => CoxStatus::NotIndefinite,
            Error::Consistency(_) => CoxStatus::Consistency,
        }
    }
}

/// Opaque valued graph.
pub struct CoxGraph(ValuedGraph);

/// Opaque binary polyhedral group.
pub struct CoxGroup {
    kind: GroupKind,
    group: BinaryPolyhedralGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(status: CoxStatus, message: impl Into<String>) -> CoxStatus {
    let msg = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn fail(e: Error) -> CoxStatus {
    set_error(CoxStatus::from(&e), format!("{}: {e}", e.code()))
}

/// Runs `f`, turning panics into [`CoxStatus::Panic`].
fn guard(f: impl FnOnce() -> CoxStatus) -> CoxStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => set_error(CoxStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CoxStatus> {
    if s.is_null() {
        return Err(set_error(CoxStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| set_error(CoxStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CoxStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CoxStatus::Ok
        }
        Err(_) => set_error(CoxStatus::InvalidParameter, "string contains NUL"),
    }
}

/// Copies `values` into `out[..cap]`, always storing the full length in `len`.
unsafe fn write_i64s(values: &[i64], out: *mut i64, cap: usize, len: *mut usize) -> CoxStatus {
    if len.is_null() {
        return set_error(CoxStatus::NullPointer, "null length pointer");
    }
    *len = values.len();
    if values.len() > cap {
        return set_error(CoxStatus::BufferTooSmall, format!("{} values needed", values.len()));
    }
    if values.is_empty() {
        return CoxStatus::Ok;
    }
    if out.is_null() {
        return set_error(CoxStatus::NullPointer, "null output buffer");
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    CoxStatus::Ok
}

/// Last error message on this thread; valid until the next failing call.
#[no_mangle]
pub extern "C" fn cox_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cox_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Catalog name (`E6`, `D4~`, `T[2,3,7]`, `A[5]~k=2`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_from_name(name: *const c_char, out: *mut *mut CoxGraph) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return set_error(CoxStatus::NullPointer, "null output handle");
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match resolve(name) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CoxGraph(g)));
                CoxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Graph DSL text (`vertex a`, `edge a b 1 2`, ...).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_from_dsl(text: *const c_char, out: *mut *mut CoxGraph) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return set_error(CoxStatus::NullPointer, "null output handle");
        }
        let text = match read_str(text) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CoxGraph(g)));
                CoxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must come from `cox_graph_from_*` or be null.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_free(g: *mut CoxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cox_graph_vertex_count(g: *const CoxGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Coefficients of χ(λ) = det(λI − C), constant term first.
/// `len` receives the number of coefficients even when `cap` is too small.
///
/// # Safety
/// `g` must be a live handle; `out` must hold `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_charpoly(g: *const CoxGraph, out: *mut i64, cap: usize, len: *mut usize) -> CoxStatus {
    guard(|| {
        let Some(g) = g.as_ref() else {
            return set_error(CoxStatus::NullPointer, "null graph");
        };
        let g = &g.0;
        let chi = if g.is_cyclic() {
            affine_an_charpoly(g.vertex_count() - 1, g.cycle_class().unwrap_or(1))
        } else {
            coxeter_charpoly(g)
        };
        let chi = match chi {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        let coeffs: Option<Vec<i64>> = chi.coeffs().iter().map(i64::try_from).map(Result::ok).collect();
        match coeffs {
            Some(c) => write_i64s(&c, out, cap, len),
            None => set_error(CoxStatus::Overflow, "coefficient exceeds 64 bits"),
        }
    })
}

/// Spectral radius of the Coxeter transformation.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cox_spectral_radius(g: *const CoxGraph, out: *mut f64) -> CoxStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return set_error(CoxStatus::NullPointer, "null argument");
        };
        match spectral_radius(&g.0, &default_tol()) {
            Ok(r) => {
                *out = r.value;
                CoxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Rendered defect form for an orientation (`bicolored`, `central`, or a flip list);
/// a null orientation means bicolored.
///
/// # Safety
/// `g` must be a live handle; `orientation` null or NUL-terminated; `out` writable.
/// The result is freed with `cox_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cox_defect_string(
    g: *const CoxGraph,
    orientation: *const c_char,
    ascii: bool,
    out: *mut *mut c_char,
) -> CoxStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return set_error(CoxStatus::NullPointer, "null argument");
        };
        let spec = if orientation.is_null() {
            "bicolored"
        } else {
            match read_str(orientation) {
                Ok(s) => s,
                Err(s) => return s,
            }
        };
        let form = Orientation::parse(&g.0, spec).and_then(|o| defect_form(&g.0, &o));
        match form {
            Ok(f) => write_string(out, f.render(ascii)),
            Err(e) => fail(e),
        }
    })
}

/// `Z5`, `BD3`, `T`, `O`, `J`.
///
/// # Safety
/// `name` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cox_group_new(name: *const c_char, out: *mut *mut CoxGroup) -> CoxStatus {
    guard(|| {
        if out.is_null() {
            return set_error(CoxStatus::NullPointer, "null output handle");
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match GroupKind::parse(name).and_then(|kind| Ok(CoxGroup { kind, group: build_group(kind)? })) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(g));
                CoxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must come from `cox_group_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn cox_group_free(g: *mut CoxGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Group order, 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cox_group_order(g: *const CoxGroup) -> usize {
    g.as_ref().map_or(0, |g| g.group.order())
}

/// Catalog name of the extended diagram K with 2I − A(G) ≅ K.
///
/// # Safety
/// `g` must be a live handle; `out` writable. Free the result with `cox_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cox_group_mckay_diagram(g: *const CoxGroup, out: *mut *mut c_char) -> CoxStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return set_error(CoxStatus::NullPointer, "null argument");
        };
        let m = character_table(&g.group).and_then(|t| mckay_matrix(&g.group, &t, None));
        match m {
            Ok(m) => write_string(out, m.matched.diagram),
            Err(e) => fail(e),
        }
    })
}

/// Molien series coefficients of t⁰..tⁿ.
///
/// # Safety
/// `g` must be a live handle; `out` must hold `cap` values; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn cox_molien_series(
    g: *const CoxGroup,
    n: usize,
    out: *mut i64,
    cap: usize,
    len: *mut usize,
) -> CoxStatus {
    guard(|| {
        let Some(g) = g.as_ref() else {
            return set_error(CoxStatus::NullPointer, "null group");
        };
        let series = match molien_series(&g.group, n) {
            Ok(s) => s,
            Err(e) => return fail(e),
        };
        let coeffs: Option<Vec<i64>> = series.iter().map(i64::try_from).map(Result::ok).collect();
        match coeffs {
            Some(c) => write_i64s(&c, out, cap, len),
            None => set_error(CoxStatus::Overflow, format!("{:?}: coefficient exceeds 64 bits", g.kind)),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(name: &str) -> *mut CoxGraph {
        let name = CString::new(name).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { cox_graph_from_name(name.as_ptr(), &mut g) }, CoxStatus::Ok);
        g
    }

    #[test]
    fn short_buffer_reports_length() {
        let g = graph("E8");
        let mut len = 0;
        let mut buf = [0i64; 4];
        let s = unsafe { cox_charpoly(g, buf.as_mut_ptr(), buf.len(), &mut len) };
        assert_eq!(s, CoxStatus::BufferTooSmall);
        assert_eq!(len, 9);
        unsafe { cox_graph_free(g) };
    }

    #[test]
    fn null_handles_are_rejected() {
        let mut len = 0;
        assert_eq!(unsafe { cox_charpoly(ptr::null(), ptr::null_mut(), 0, &mut len) }, CoxStatus::NullPointer);
        assert_eq!(unsafe { cox_graph_vertex_count(ptr::null()) }, 0);
    }
}
