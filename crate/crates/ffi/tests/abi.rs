use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tracehom_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(tracehom_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    tracehom_string_free(s);
    out
}

fn presentation(toml: &str) -> *mut TracehomPresentation {
    let text = CString::new(toml).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { tracehom_presentation_parse(text.as_ptr(), &mut p) }, TracehomStatus::Ok);
    p
}

fn trace(p: *const TracehomPresentation, word: &str) -> *mut TracehomTrace {
    let w = CString::new(word).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { tracehom_trace_parse(p, w.as_ptr(), &mut t) }, TracehomStatus::Ok);
    t
}

const PATH: &str = "letters = [\"a\", \"b\", \"c\"]\ncommuting = [[\"a\", \"b\"], [\"b\", \"c\"]]\n";
const K3: &str = "letters = [\"a\", \"b\", \"c\"]\ncommuting = [[\"a\", \"b\"], [\"a\", \"c\"], [\"b\", \"c\"]]\n";

#[test]
fn traces_round_trip() {
    let p = presentation(PATH);
    unsafe {
        assert_eq!(tracehom_presentation_letter_count(p), 3);
        let t = trace(p, "cab");
        assert_eq!(tracehom_trace_length(t), 3);
        let mut s = ptr::null_mut();
        assert_eq!(tracehom_trace_normal_form(t, &mut s), TracehomStatus::Ok);
        assert_eq!(take_string(s), "(bc)(a)");

        let (x, y) = (trace(p, "ca"), trace(p, "b"));
        let mut prod = ptr::null_mut();
        assert_eq!(tracehom_trace_multiply(x, y, &mut prod), TracehomStatus::Ok);
        let mut equal = false;
        assert_eq!(tracehom_trace_equal(prod, t, &mut equal), TracehomStatus::Ok);
        assert!(equal);
        for h in [t, x, y, prod] {
            tracehom_trace_free(h);
        }
        tracehom_presentation_free(p);
    }
}

#[test]
fn homology_and_dimension() {
    let p = presentation(K3);
    unsafe {
        let mut omega = 0;
        assert_eq!(tracehom_clique_number(p, &mut omega), TracehomStatus::Ok);
        assert_eq!(omega, 3);

        let mut len = 0;
        assert_eq!(tracehom_homology_ranks(p, ptr::null_mut(), 0, &mut len), TracehomStatus::BufferTooSmall);
        assert_eq!(len, 3);
        let mut buf = [0usize; 3];
        assert_eq!(tracehom_homology_ranks(p, buf.as_mut_ptr(), buf.len(), &mut len), TracehomStatus::Ok);
        assert_eq!(buf, [3, 3, 1]);

        let (mut upper, mut lower) = (0, 0);
        assert_eq!(tracehom_homological_dimension(p, &mut upper, &mut lower), TracehomStatus::Ok);
        assert_eq!((upper, lower), (3, 3));
        assert_eq!(tracehom_verify(p, 3, 2), TracehomStatus::Ok);
        tracehom_presentation_free(p);
    }
}

#[test]
fn decompose_over_submonoid() {
    let p = presentation("letters = [\"a\", \"b\"]\n");
    unsafe {
        let w = trace(p, "ab");
        let sigma = CString::new("a").unwrap();
        let (mut a, mut u) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(tracehom_decompose(w, sigma.as_ptr(), &mut a, &mut u), TracehomStatus::Ok);
        assert_eq!((take_string(a), take_string(u)), ("(a)".to_owned(), "(b)".to_owned()));
        tracehom_trace_free(w);
        tracehom_presentation_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        let bad = CString::new("letters = [\"a\"]\ncommuting = [[\"a\", \"a\"]]\n").unwrap();
        assert_eq!(tracehom_presentation_parse(bad.as_ptr(), &mut p), TracehomStatus::InvalidInput);
        assert!(p.is_null());
        assert!(last_error().contains("[a, a]"), "{}", last_error());

        assert_eq!(tracehom_presentation_parse(ptr::null(), &mut p), TracehomStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(tracehom_presentation_parse(invalid.as_ptr().cast(), &mut p), TracehomStatus::InvalidUtf8);

        let p = presentation(PATH);
        let word = CString::new("abq").unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(tracehom_trace_parse(p, word.as_ptr(), &mut t), TracehomStatus::InvalidInput);
        assert!(last_error().contains("`q`"));
        assert_eq!(tracehom_trace_length(ptr::null()), 0);

        let other = presentation(K3);
        let (x, y) = (trace(p, "a"), trace(other, "a"));
        let mut equal = false;
        assert_eq!(tracehom_trace_equal(x, y, &mut equal), TracehomStatus::InvalidInput);

        let missing = CString::new("/nonexistent/m.toml").unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(tracehom_presentation_load(missing.as_ptr(), &mut q), TracehomStatus::InvalidInput);

        tracehom_trace_free(x);
        tracehom_trace_free(y);
        tracehom_presentation_free(p);
        tracehom_presentation_free(other);
        tracehom_presentation_free(ptr::null_mut());
        tracehom_string_free(ptr::null_mut());

        let p = presentation(PATH);
        let t = trace(p, "a");
        assert_eq!(tracehom_trace_normal_form(t, ptr::null_mut()), TracehomStatus::NullPointer);
        tracehom_trace_free(t);
        tracehom_presentation_free(p);
    }
}
