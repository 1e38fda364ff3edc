//! C ABI over the rankvar library: opaque handles, status codes, and a
//! thread-local last-error message.  The generated header lives in
//! `include/rankvar.h`.
//!
//! Ownership: every `*_parse`/`*_rich`/`*_rank_set` constructor hands the
//! caller an owned handle to release with the matching `*_free`; every
//! function returning a `char*` hands an owned string for `rv_string_free`.

use libc::c_char;
use rankvar::bridge::{rank_of, rich, RichardsonDatum};
use rankvar::enumerate::{g_poly_direct, verify_stirling_identity};
use rankvar::io::{paper_notation, parse_permutation};
use rankvar::perm::FlagShape;
use rankvar::rankset::RankSet;
use rankvar::singular::{is_smooth_rank, rank_singular_locus, richardson_singular_locus};
use rankvar::Error;
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RvStatus {
    /// Success.
    RvOk = 0,
    /// A required pointer argument was null.
    RvNullPointer = 1,
    /// A string argument was not valid UTF-8.
    RvInvalidUtf8 = 2,
    /// The input text could not be parsed.
    RvParseError = 3,
    /// The input was well-formed but violates a domain invariant
    /// (invalid rank set, empty Richardson variety, capability guard).
    RvDomainError = 4,
}

/// Opaque handle to a validated rank set.
pub struct RvRankSet(RankSet);

/// Opaque handle to a Richardson variety datum.
pub struct RvRichardson(RichardsonDatum);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap();
    });
}

fn status_of(err: &Error) -> RvStatus {
    match err {
        Error::Parse(_) => RvStatus::RvParseError,
        _ => RvStatus::RvDomainError,
    }
}

fn fail(err: Error) -> RvStatus {
    let status = status_of(&err);
    set_error(&err.to_string());
    status
}

/// # Safety
/// `ptr` must be non-null; the returned reference borrows it.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, RvStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(RvStatus::RvNullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        RvStatus::RvInvalidUtf8
    })
}

fn give_string(s: String, out: *mut *mut c_char) -> RvStatus {
    let c = CString::new(s.replace('\0', " ")).unwrap();
    unsafe {
        *out = c.into_raw();
    }
    RvStatus::RvOk
}

/// Message describing the most recent failure on this thread; borrowed,
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn rv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned by a `rankvar` function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn rv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a rank set from the text form `n=8 k=5 : 1-7 2-6 ...`, JSON, or
/// table notation `n=4 (2 3,1)`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_parse(
    text: *const c_char,
    out: *mut *mut RvRankSet,
) -> RvStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text.parse::<RankSet>() {
        Ok(set) => {
            *out = Box::into_raw(Box::new(RvRankSet(set)));
            RvStatus::RvOk
        }
        Err(err) => fail(err),
    }
}

/// # Safety
/// `ptr` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_free(ptr: *mut RvRankSet) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

macro_rules! deref {
    ($ptr:expr) => {
        match $ptr.as_ref() {
            Some(r) => r,
            None => {
                set_error("null handle");
                return RvStatus::RvNullPointer;
            }
        }
    };
}

/// Dimension of the rank variety.
///
/// # Safety
/// `ptr` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_dimension(ptr: *const RvRankSet, out: *mut usize) -> RvStatus {
    let set = deref!(ptr);
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    *out = set.0.dimension();
    RvStatus::RvOk
}

/// Renders the standard text form.
///
/// # Safety
/// `ptr` and `out` must be valid; free the string with `rv_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_to_text(
    ptr: *const RvRankSet,
    out: *mut *mut c_char,
) -> RvStatus {
    let set = deref!(ptr);
    give_string(set.0.to_string(), out)
}

/// Renders the JSON form `{"n":...,"intervals":[[l,r],...]}`.
///
/// # Safety
/// As for `rv_rank_set_to_text`.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_to_json(
    ptr: *const RvRankSet,
    out: *mut *mut c_char,
) -> RvStatus {
    let set = deref!(ptr);
    give_string(serde_json::to_string(&set.0).unwrap(), out)
}

/// Renders the compact table notation, e.g. `(2 3,1)`.
///
/// # Safety
/// As for `rv_rank_set_to_text`.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_to_paper(
    ptr: *const RvRankSet,
    out: *mut *mut c_char,
) -> RvStatus {
    let set = deref!(ptr);
    give_string(paper_notation(&set.0), out)
}

/// Whether the rank variety is smooth (block-product classification).
///
/// # Safety
/// `ptr` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_is_smooth(ptr: *const RvRankSet, out: *mut bool) -> RvStatus {
    let set = deref!(ptr);
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    *out = is_smooth_rank(&set.0);
    RvStatus::RvOk
}

/// Singular locus report as JSON.
///
/// # Safety
/// As for `rv_rank_set_to_text`.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_singular_locus_json(
    ptr: *const RvRankSet,
    out: *mut *mut c_char,
) -> RvStatus {
    let set = deref!(ptr);
    match rank_singular_locus(&set.0) {
        Ok(report) => give_string(serde_json::to_string(&report).unwrap(), out),
        Err(err) => fail(err),
    }
}

/// Minimal Richardson variety of a rank set.
///
/// # Safety
/// `ptr` and `out` must be valid; free the handle with `rv_richardson_free`.
#[no_mangle]
pub unsafe extern "C" fn rv_rank_set_rich(
    ptr: *const RvRankSet,
    out: *mut *mut RvRichardson,
) -> RvStatus {
    let set = deref!(ptr);
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    *out = Box::into_raw(Box::new(RvRichardson(rich(&set.0))));
    RvStatus::RvOk
}

/// Builds a Richardson datum from a shape `2,4;7` and two permutations in
/// the block form `4 6 | 2 7`.
///
/// # Safety
/// All strings NUL-terminated, `out` non-null.
#[no_mangle]
pub unsafe extern "C" fn rv_richardson_parse(
    shape: *const c_char,
    u: *const c_char,
    v: *const c_char,
    out: *mut *mut RvRichardson,
) -> RvStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    let shape_text = match read_str(shape) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let u_text = match read_str(u) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let v_text = match read_str(v) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parse = || -> Result<RichardsonDatum, Error> {
        let shape: FlagShape = shape_text.parse()?;
        let u = parse_permutation(&shape, u_text)?;
        let v = parse_permutation(&shape, v_text)?;
        RichardsonDatum::new(u, v)
    };
    match parse() {
        Ok(datum) => {
            *out = Box::into_raw(Box::new(RvRichardson(datum)));
            RvStatus::RvOk
        }
        Err(err) => fail(err),
    }
}

/// # Safety
/// `ptr` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rv_richardson_free(ptr: *mut RvRichardson) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// JSON form `{"shape":{"n":...,"ks":[...]},"u":[...],"v":[...]}`.
///
/// # Safety
/// As for `rv_rank_set_to_text`.
#[no_mangle]
pub unsafe extern "C" fn rv_richardson_to_json(
    ptr: *const RvRichardson,
    out: *mut *mut c_char,
) -> RvStatus {
    let datum = deref!(ptr);
    give_string(serde_json::to_string(&datum.0).unwrap(), out)
}

/// Rank set of a Richardson variety.
///
/// # Safety
/// `ptr` and `out` must be valid; free the result with `rv_rank_set_free`.
#[no_mangle]
pub unsafe extern "C" fn rv_richardson_rank_set(
    ptr: *const RvRichardson,
    out: *mut *mut RvRankSet,
) -> RvStatus {
    let datum = deref!(ptr);
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    match rank_of(&datum.0) {
        Ok(set) => {
            *out = Box::into_raw(Box::new(RvRankSet(set)));
            RvStatus::RvOk
        }
        Err(err) => fail(err),
    }
}

/// Singular locus of a Richardson variety as JSON.
///
/// # Safety
/// As for `rv_rank_set_to_text`.
#[no_mangle]
pub unsafe extern "C" fn rv_richardson_singular_locus_json(
    ptr: *const RvRichardson,
    out: *mut *mut c_char,
) -> RvStatus {
    let datum = deref!(ptr);
    match richardson_singular_locus(&datum.0) {
        Ok(report) => give_string(serde_json::to_string(&report).unwrap(), out),
        Err(err) => fail(err),
    }
}

/// The polynomial `g[k,n]` in canonical text form.
///
/// # Safety
/// `out` must be non-null; free the string with `rv_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rv_gpoly(k: usize, n: usize, out: *mut *mut c_char) -> RvStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    match g_poly_direct(k, n) {
        Ok(poly) => give_string(poly.to_string(), out),
        Err(err) => fail(err),
    }
}

/// Whether `g[k,n] * q^{C(n-k+1,2)} = S[n+1,n-k+1]`.
///
/// # Safety
/// `out` must be non-null.
#[no_mangle]
pub unsafe extern "C" fn rv_stirling_identity(k: usize, n: usize, out: *mut bool) -> RvStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RvStatus::RvNullPointer;
    }
    match verify_stirling_identity(k, n) {
        Ok(holds) => {
            *out = holds;
            RvStatus::RvOk
        }
        Err(err) => fail(err),
    }
}
