//! C ABI over `tracehom`.
//!
//! Presentations and traces are opaque heap handles released with their
//! `_free` function. Every call returns a [`TracehomStatus`]; on failure the
//! message is available from [`tracehom_last_error`] on the same thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`tracehom_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tracehom::basis::SubmonoidSpec;
use tracehom::exactness;
use tracehom::resolution::{homological_dimension, homology_ranks};
use tracehom::{CommutationGraph, Presentation, Trace};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TracehomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    BufferTooSmall = 4,
    /// The bounded exactness check left some kernel generator unresolved.
    Unverified = 5,
    Panic = 6,
}

/// Opaque handle to a presentation.
pub struct TracehomPresentation(Presentation);

/// Opaque handle to a trace.
pub struct TracehomTrace(Trace);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

type FfiResult<T> = Result<T, (TracehomStatus, String)>;

fn invalid(e: tracehom::Error) -> (TracehomStatus, String) {
    (TracehomStatus::InvalidInput, e.to_string())
}

fn guard(f: impl FnOnce() -> FfiResult<()>) -> TracehomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TracehomStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TracehomStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, name: &str) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err((TracehomStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (TracehomStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| (TracehomStatus::NullPointer, format!("{name} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, name: &str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| (TracehomStatus::NullPointer, format!("{name} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message describing the last failed call on this thread, or an empty
/// string. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn tracehom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tracehom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a presentation from TOML text with `letters` and `commuting` keys.
///
/// # Safety
/// `toml` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_presentation_parse(
    toml: *const c_char,
    out: *mut *mut TracehomPresentation,
) -> TracehomStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let p = Presentation::parse_toml(str_arg(toml, "toml")?).map_err(invalid)?;
        *out = Box::into_raw(Box::new(TracehomPresentation(p)));
        Ok(())
    })
}

/// Loads a presentation file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_presentation_load(
    path: *const c_char,
    out: *mut *mut TracehomPresentation,
) -> TracehomStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let p = Presentation::load(str_arg(path, "path")?).map_err(invalid)?;
        *out = Box::into_raw(Box::new(TracehomPresentation(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn tracehom_presentation_free(p: *mut TracehomPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of letters, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tracehom_presentation_letter_count(p: *const TracehomPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Parses a word into its trace.
///
/// # Safety
/// `p` must be a live handle, `word` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_trace_parse(
    p: *const TracehomPresentation,
    word: *const c_char,
    out: *mut *mut TracehomTrace,
) -> TracehomStatus {
    guard(|| {
        let p = ref_arg(p, "presentation")?;
        let out = out_arg(out, "out")?;
        let t = Trace::parse(&p.0, str_arg(word, "word")?).map_err(invalid)?;
        *out = Box::into_raw(Box::new(TracehomTrace(t)));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn tracehom_trace_free(t: *mut TracehomTrace) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Length of a trace, or 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tracehom_trace_length(t: *const TracehomTrace) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// Foata normal form, e.g. `(ac)(b)`, as a new string.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_trace_normal_form(t: *const TracehomTrace, out: *mut *mut c_char) -> TracehomStatus {
    guard(|| {
        let t = ref_arg(t, "trace")?;
        *out_arg(out, "out")? = c_string(t.0.to_string());
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_trace_multiply(
    a: *const TracehomTrace,
    b: *const TracehomTrace,
    out: *mut *mut TracehomTrace,
) -> TracehomStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        let out = out_arg(out, "out")?;
        let t = a.0.multiply(&b.0).map_err(invalid)?;
        *out = Box::into_raw(Box::new(TracehomTrace(t)));
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_trace_equal(
    a: *const TracehomTrace,
    b: *const TracehomTrace,
    out: *mut bool,
) -> TracehomStatus {
    guard(|| {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        if a.0.presentation() != b.0.presentation() {
            return Err(invalid(tracehom::Error::PresentationMismatch));
        }
        *out_arg(out, "out")? = a.0 == b.0;
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_clique_number(p: *const TracehomPresentation, out: *mut usize) -> TracehomStatus {
    guard(|| {
        let p = ref_arg(p, "presentation")?;
        *out_arg(out, "out")? = CommutationGraph::new(&p.0).clique_number();
        Ok(())
    })
}

/// Writes the ranks of `H_1, H_2, …` into `buf`. `len` receives the number
/// of ranks; when it exceeds `capacity` nothing is written and
/// `BufferTooSmall` is returned. `buf` may be null when `capacity` is 0.
///
/// # Safety
/// `p` must be a live handle, `buf` valid for `capacity` writes and `len` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tracehom_homology_ranks(
    p: *const TracehomPresentation,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> TracehomStatus {
    guard(|| {
        let p = ref_arg(p, "presentation")?;
        let len = out_arg(len, "len")?;
        let ranks = homology_ranks(&p.0);
        *len = ranks.len();
        if ranks.len() > capacity {
            return Err((TracehomStatus::BufferTooSmall, format!("need room for {} ranks", ranks.len())));
        }
        if !ranks.is_empty() {
            if buf.is_null() {
                return Err((TracehomStatus::NullPointer, "buf is null".into()));
            }
            ptr::copy_nonoverlapping(ranks.as_ptr(), buf, ranks.len());
        }
        Ok(())
    })
}

/// Upper and lower bounds on the homological dimension.
///
/// # Safety
/// `p` must be a live handle, `upper` and `lower` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tracehom_homological_dimension(
    p: *const TracehomPresentation,
    upper: *mut usize,
    lower: *mut usize,
) -> TracehomStatus {
    guard(|| {
        let p = ref_arg(p, "presentation")?;
        let (upper, lower) = (out_arg(upper, "upper")?, out_arg(lower, "lower")?);
        let b = homological_dimension(&p.0);
        *upper = b.upper;
        *lower = b.lower;
        Ok(())
    })
}

/// Factors `w = a·u` with `a` in the submonoid generated by `sigma0` (letters
/// as in a word) and `u` in its basis. Both factors are returned in normal
/// form as new strings.
///
/// # Safety
/// `w` must be a live handle, `sigma0` a NUL-terminated string and `a_out`,
/// `u_out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tracehom_decompose(
    w: *const TracehomTrace,
    sigma0: *const c_char,
    a_out: *mut *mut c_char,
    u_out: *mut *mut c_char,
) -> TracehomStatus {
    guard(|| {
        let w = ref_arg(w, "w")?;
        let (a_out, u_out) = (out_arg(a_out, "a_out")?, out_arg(u_out, "u_out")?);
        let spec = SubmonoidSpec::parse(w.0.presentation(), str_arg(sigma0, "sigma0")?).map_err(invalid)?;
        let d = spec.decompose(&w.0).map_err(invalid)?;
        *a_out = c_string(d.a.to_string());
        *u_out = c_string(d.u.to_string());
        Ok(())
    })
}

/// Bounded exactness check over all degrees. Returns `Unverified` when some
/// kernel generator was not reached within `headroom`.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tracehom_verify(
    p: *const TracehomPresentation,
    max_length: usize,
    headroom: usize,
) -> TracehomStatus {
    guard(|| {
        let p = ref_arg(p, "presentation")?;
        let reports = exactness::verify(&p.0, max_length, headroom, None);
        let open: usize = reports.iter().map(|r| r.kernel_rank() - r.passes()).sum();
        if open > 0 {
            return Err((TracehomStatus::Unverified, format!("{open} kernel generators unresolved")));
        }
        Ok(())
    })
}
