use std::ffi::{CStr, CString};
use std::ptr;

use dunkl_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn params(mu: &str) -> *mut DunklParams {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { dunkl_params_new(cstr(mu).as_ptr(), &mut p) }, DunklStatus::Ok);
    p
}

fn last_error() -> String {
    let e = dunkl_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_string()
}

#[test]
fn basis_element_round_trip() {
    let p = params("1/2,1/3,1/4");
    assert_eq!(unsafe { dunkl_params_dim(p) }, 3);
    let j = [1u32, 0];
    let mut poly = ptr::null_mut();
    assert_eq!(unsafe { dunkl_basis_psi(p, j.as_ptr(), j.len(), 0, &mut poly) }, DunklStatus::Ok);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { dunkl_poly_to_string(poly, &mut text) }, DunklStatus::Ok);
    let s = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_string();
    // x1 - (6/5) x2 e1e2 = x1 + (6/5) x2 e2e1
    assert_eq!(s, "0,1,0 | 1 2 | -6/5\n1,0,0 | | 1/1\n");
    unsafe {
        dunkl_string_free(text);
        dunkl_poly_free(poly);
        dunkl_params_free(p);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut p = ptr::null_mut();
    let st = unsafe { dunkl_params_new(cstr("1/2,-1").as_ptr(), &mut p) };
    assert_eq!(st, DunklStatus::InvalidArgument);
    assert!(p.is_null());
    assert!(!last_error().is_empty());

    let st = unsafe { dunkl_params_new(ptr::null(), &mut p) };
    assert_eq!(st, DunklStatus::NullPointer);
    assert!(last_error().contains("mu"));

    let p = params("1/2,1/3,1/4");
    let j = [1u32, 0, 0];
    let mut poly = ptr::null_mut();
    let st = unsafe { dunkl_basis_psi(p, j.as_ptr(), j.len(), 0, &mut poly) };
    assert_eq!(st, DunklStatus::InvalidArgument);
    assert!(poly.is_null());
    let mut ok = -1;
    let st = unsafe { dunkl_verify_bi_relation(p, DunklRealization::Clifford, 0b1000, 1, 1, &mut ok) };
    assert_eq!(st, DunklStatus::InvalidArgument);
    unsafe { dunkl_params_free(p) };
    // freeing null is a no-op
    unsafe {
        dunkl_params_free(ptr::null_mut());
        dunkl_poly_free(ptr::null_mut());
        dunkl_string_free(ptr::null_mut());
    }
}

#[test]
fn bi_relation_both_realizations() {
    let p = params("1/2,1/3,1/4");
    for real in [DunklRealization::Clifford, DunklRealization::Scalar] {
        let mut ok = -1;
        let st = unsafe { dunkl_verify_bi_relation(p, real, 0b011, 0b110, 2, &mut ok) };
        assert_eq!(st, DunklStatus::Ok);
        assert_eq!(ok, 1);
    }
    unsafe { dunkl_params_free(p) };
}

#[test]
fn suite_json_report() {
    let mut json = ptr::null_mut();
    let mut ok = -1;
    let st = unsafe {
        dunkl_run_suite_json(
            3,
            cstr("1/2,1/3,1/4").as_ptr(),
            1,
            cstr("osp,casimir").as_ptr(),
            cstr("scalar").as_ptr(),
            &mut json,
            &mut ok,
        )
    };
    assert_eq!(st, DunklStatus::Ok);
    assert_eq!(ok, 1);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    assert!(text.contains("\"schema_version\": 1"));
    assert!(!text.contains("\"realization\": \"clifford\""));
    unsafe { dunkl_string_free(json) };

    let st = unsafe {
        dunkl_run_suite_json(2, cstr("1,1").as_ptr(), 1, ptr::null(), ptr::null(), &mut json, &mut ok)
    };
    assert_eq!(st, DunklStatus::InvalidArgument);
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/dunkl.h")).unwrap();
    for name in [
        "dunkl_last_error",
        "dunkl_params_new",
        "dunkl_params_free",
        "dunkl_basis_psi",
        "dunkl_poly_to_string",
        "dunkl_string_free",
        "dunkl_verify_bi_relation",
        "dunkl_run_suite_json",
        "typedef struct DunklPoly DunklPoly",
        "DUNKL_STATUS_NULL_POINTER = 1",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
