use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use overpartition_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { op_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(op_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn series_handle_round_trip() {
    let mut h: *mut OpSeries = ptr::null_mut();
    let st = unsafe { op_series_new(cs("distinct-product").as_ptr(), 30, &mut h) };
    assert_eq!(st, OpStatus::Ok, "{}", last_error());
    assert_eq!(unsafe { op_series_len(h) }, 31);
    let mut v = 0i64;
    assert_eq!(unsafe { op_series_coeff_i64(h, 30, &mut v) }, OpStatus::Ok);
    assert_eq!(v, 296);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { op_series_coeff_str(h, 10, &mut s) }, OpStatus::Ok);
    assert_eq!(take(s), "10");
    assert_eq!(unsafe { op_series_coeff_i64(h, 31, &mut v) }, OpStatus::OutOfRange);
    unsafe { op_series_free(h) };
    unsafe { op_series_free(ptr::null_mut()) };
}

#[test]
fn big_coefficients_report_out_of_range_as_i64() {
    let mut h: *mut OpSeries = ptr::null_mut();
    assert_eq!(
        unsafe { op_series_new(cs("distinct-product").as_ptr(), 2000, &mut h) },
        OpStatus::Ok
    );
    let mut v = 0i64;
    assert_eq!(unsafe { op_series_coeff_i64(h, 2000, &mut v) }, OpStatus::OutOfRange);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { op_series_coeff_str(h, 2000, &mut s) }, OpStatus::Ok);
    assert!(take(s).len() > 19);
    unsafe { op_series_free(h) };
}

#[test]
fn unknown_series_sets_last_error() {
    let mut h: *mut OpSeries = ptr::null_mut();
    let st = unsafe { op_series_new(cs("no-such-series").as_ptr(), 5, &mut h) };
    assert_eq!(st, OpStatus::UnknownId);
    assert!(h.is_null());
    assert!(last_error().contains("no-such-series"));
}

#[test]
fn bijection_forward_and_inverse() {
    let mut s = ptr::null_mut();
    let st = unsafe { op_bijection_apply(cs("f").as_ptr(), cs("14,13,5,4,2,1").as_ptr(), false, &mut s) };
    assert_eq!(st, OpStatus::Ok, "{}", last_error());
    let image = take(s);
    assert_eq!(image, "12,11,4,3,2,1,4~,2~");
    let st = unsafe { op_bijection_apply(cs("f").as_ptr(), cs(&image).as_ptr(), true, &mut s) };
    assert_eq!(st, OpStatus::Ok);
    assert_eq!(take(s), "14,13,5,4,2,1");
}

#[test]
fn bijection_errors_are_classified() {
    let mut s = ptr::null_mut();
    let bad = unsafe { op_bijection_apply(cs("f").as_ptr(), cs("3,x").as_ptr(), false, &mut s) };
    assert_eq!(bad, OpStatus::Malformed);
    let outside = unsafe { op_bijection_apply(cs("f").as_ptr(), cs("2,2").as_ptr(), false, &mut s) };
    assert_eq!(outside, OpStatus::NotInClass);
    let unknown = unsafe { op_bijection_apply(cs("zz").as_ptr(), cs("1").as_ptr(), false, &mut s) };
    assert_eq!(unknown, OpStatus::UnknownId);
    let null = unsafe { op_bijection_apply(cs("f").as_ptr(), cs("1").as_ptr(), false, ptr::null_mut()) };
    assert_eq!(null, OpStatus::NullArgument);
    assert!(s.is_null());
}

#[test]
fn invalid_utf8_is_rejected() {
    let raw = [0xffu8, 0xfe, 0];
    let mut n = 0u64;
    let st = unsafe { op_class_count(raw.as_ptr().cast(), 3, &mut n) };
    assert_eq!(st, OpStatus::InvalidUtf8);
}

#[test]
fn verify_report_is_deterministic_json() {
    let run = || {
        let mut r: *mut OpReport = ptr::null_mut();
        assert_eq!(
            unsafe { op_verify(cs("euler").as_ptr(), 25, false, &mut r) },
            OpStatus::Ok
        );
        assert_eq!(unsafe { op_report_verdict(r) }, OpVerdict::Pass);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { op_report_json(r, &mut s) }, OpStatus::Ok);
        unsafe { op_report_free(r) };
        take(s)
    };
    let a = run();
    assert_eq!(a, run());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["id"], "euler");
}

#[test]
fn flagged_claim_comes_back_flagged() {
    let mut r: *mut OpReport = ptr::null_mut();
    assert_eq!(
        unsafe { op_verify(cs("slater121").as_ptr(), 12, false, &mut r) },
        OpStatus::Ok
    );
    assert_eq!(unsafe { op_report_verdict(r) }, OpVerdict::Flagged);
    unsafe { op_report_free(r) };
    assert_eq!(unsafe { op_report_verdict(ptr::null()) }, OpVerdict::Fail);
}

#[test]
fn header_declares_every_export_and_parses_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/overpartition.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "op_version",
        "op_last_error",
        "op_string_free",
        "op_class_count",
        "op_series_new",
        "op_series_len",
        "op_series_coeff_str",
        "op_series_coeff_i64",
        "op_series_free",
        "op_bijection_apply",
        "op_verify",
        "op_report_verdict",
        "op_report_json",
        "op_report_free",
        "OP_STATUS_NOT_IN_CLASS",
        "OP_VERDICT_FLAGGED",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    // The syntax check needs a C compiler; skip quietly where there is none.
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .output()
    else {
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
