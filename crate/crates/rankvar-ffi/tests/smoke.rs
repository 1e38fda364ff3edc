//! Drives the C ABI end to end from Rust, and syntax-checks the committed
//! header with a C compiler when one is available.

use rankvar_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut libc::c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    rv_string_free(ptr);
    s
}

#[test]
fn rank_set_lifecycle() {
    unsafe {
        let mut set: *mut RvRankSet = ptr::null_mut();
        let status = rv_rank_set_parse(c("n=7 k=4 : 1-2 3-4 5-7 6-6").as_ptr(), &mut set);
        assert_eq!(status, RvStatus::RvOk);

        let mut dim = 0usize;
        assert_eq!(rv_rank_set_dimension(set, &mut dim), RvStatus::RvOk);
        assert_eq!(dim, 3);

        let text = {
            let mut out = ptr::null_mut();
            assert_eq!(rv_rank_set_to_text(set, &mut out), RvStatus::RvOk);
            take_string(out)
        };
        assert_eq!(text, "n=7 k=4 : 1-2 3-4 5-7 6-6");

        let json = {
            let mut out = ptr::null_mut();
            assert_eq!(rv_rank_set_to_json(set, &mut out), RvStatus::RvOk);
            take_string(out)
        };
        assert!(json.contains("\"n\":7"));

        let paper = {
            let mut out = ptr::null_mut();
            assert_eq!(rv_rank_set_to_paper(set, &mut out), RvStatus::RvOk);
            take_string(out)
        };
        assert_eq!(paper, "(6,5 6 7,3 4,1 2)");

        let mut smooth = false;
        assert_eq!(rv_rank_set_is_smooth(set, &mut smooth), RvStatus::RvOk);
        assert!(smooth);

        let mut datum: *mut RvRichardson = ptr::null_mut();
        assert_eq!(rv_rank_set_rich(set, &mut datum), RvStatus::RvOk);
        let datum_json = {
            let mut out = ptr::null_mut();
            assert_eq!(rv_richardson_to_json(datum, &mut out), RvStatus::RvOk);
            take_string(out)
        };
        assert!(datum_json.contains("\"u\":[6,2,4,7]"));

        let mut back: *mut RvRankSet = ptr::null_mut();
        assert_eq!(rv_richardson_rank_set(datum, &mut back), RvStatus::RvOk);
        let mut out = ptr::null_mut();
        assert_eq!(rv_rank_set_to_text(back, &mut out), RvStatus::RvOk);
        assert_eq!(take_string(out), text);

        rv_rank_set_free(back);
        rv_richardson_free(datum);
        rv_rank_set_free(set);
    }
}

#[test]
fn richardson_walkthrough_over_the_abi() {
    unsafe {
        let mut datum: *mut RvRichardson = ptr::null_mut();
        let status = rv_richardson_parse(
            c("2,4;7").as_ptr(),
            c("4 6 | 2 7").as_ptr(),
            c("2 7 | 3 5").as_ptr(),
            &mut datum,
        );
        assert_eq!(status, RvStatus::RvOk);
        let mut set: *mut RvRankSet = ptr::null_mut();
        assert_eq!(rv_richardson_rank_set(datum, &mut set), RvStatus::RvOk);
        let mut out = ptr::null_mut();
        assert_eq!(rv_rank_set_to_text(set, &mut out), RvStatus::RvOk);
        assert_eq!(take_string(out), "n=7 k=4 : 1-2 3-4 5-7 6-6");
        rv_rank_set_free(set);
        rv_richardson_free(datum);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut set: *mut RvRankSet = ptr::null_mut();
        let status = rv_rank_set_parse(c("n=5 k=2 : 1-3 1-4").as_ptr(), &mut set);
        assert_eq!(status, RvStatus::RvDomainError);
        let msg = CStr::from_ptr(rv_last_error_message()).to_str().unwrap();
        assert!(msg.contains("left endpoint"), "{msg}");

        let status = rv_rank_set_parse(c("garbage").as_ptr(), &mut set);
        assert_eq!(status, RvStatus::RvParseError);

        let status = rv_rank_set_parse(ptr::null(), &mut set);
        assert_eq!(status, RvStatus::RvNullPointer);

        let mut dim = 0usize;
        assert_eq!(
            rv_rank_set_dimension(ptr::null(), &mut dim),
            RvStatus::RvNullPointer
        );
    }
}

#[test]
fn gpoly_and_stirling_over_the_abi() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(rv_gpoly(2, 4, &mut out), RvStatus::RvOk);
        assert_eq!(take_string(out), "6 + 8*q + 7*q^2 + 3*q^3 + q^4");
        let mut holds = false;
        assert_eq!(rv_stirling_identity(2, 4, &mut holds), RvStatus::RvOk);
        assert!(holds);
        assert_eq!(rv_gpoly(5, 4, &mut out), RvStatus::RvDomainError);

        let version = CStr::from_ptr(rv_version()).to_str().unwrap();
        assert!(!version.is_empty());
    }
}

#[test]
fn singular_locus_json_over_the_abi() {
    unsafe {
        let mut set: *mut RvRankSet = ptr::null_mut();
        let status = rv_rank_set_parse(c("n=10 k=4 : 1-6 3-4 5-10 7-8").as_ptr(), &mut set);
        assert_eq!(status, RvStatus::RvOk);
        let mut out = ptr::null_mut();
        assert_eq!(
            rv_rank_set_singular_locus_json(set, &mut out),
            RvStatus::RvOk
        );
        let json = take_string(out);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["components"].as_array().unwrap().len(), 4);
        rv_rank_set_free(set);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/rankvar.h");
    assert!(
        std::path::Path::new(header).exists(),
        "header not generated"
    );
    let probe = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", header])
        .status();
    match probe {
        Ok(status) => assert!(status.success(), "cc rejected the header"),
        Err(_) => eprintln!("cc not available; skipping header syntax check"),
    }
}
