use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use codim2_ffi::*;

fn last_error() -> String {
    let p = codim2_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn text(poly: *const Codim2Polynomial) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { codim2_polynomial_to_string(poly, &mut s) }, Codim2Status::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { codim2_string_free(s) };
    out
}

#[test]
fn twisted_cubic_round_trip() {
    let rows: [i64; 8] = [1, 0, -2, 1, 1, -2, 0, 1];
    let mut cfg = ptr::null_mut();
    assert_eq!(unsafe { codim2_config_new(rows.as_ptr(), 4, &mut cfg) }, Codim2Status::Ok);
    assert!(codim2_last_error().is_null());

    let (mut n, mut deg, mut prime) = (0usize, 0i64, false);
    unsafe {
        assert_eq!(codim2_config_rows(cfg, &mut n), Codim2Status::Ok);
        assert_eq!(codim2_config_degree(cfg, &mut deg), Codim2Status::Ok);
        assert_eq!(codim2_config_is_prime(cfg, &mut prime), Codim2Status::Ok);
    }
    assert_eq!((n, deg, prime), (4, 3, true));

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { codim2_a_discriminant(cfg, &mut d) }, Codim2Status::Ok);
    assert_eq!(text(d), "27*x1^2*x4^2 - 18*x1*x2*x3*x4 + 4*x1*x3^3 + 4*x2^3*x4 - x2^2*x3^2");
    let (mut terms, mut degree) = (0usize, 0i64);
    unsafe {
        assert_eq!(codim2_polynomial_term_count(d, &mut terms), Codim2Status::Ok);
        assert_eq!(codim2_polynomial_degree(d, &mut degree), Codim2Status::Ok);
    }
    assert_eq!((terms, degree), (5, 4));

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { codim2_polynomial_to_json(d, &mut json) }, Codim2Status::Ok);
    let j = unsafe { CStr::from_ptr(json) }.to_string_lossy().into_owned();
    assert!(j.contains("\"vars\"") && j.contains("\"27\""));
    unsafe {
        codim2_string_free(json);
        codim2_polynomial_free(d);
        codim2_config_free(cfg);
    }
}

#[test]
fn json_config_and_chow_form() {
    let json = CString::new(r#"{"B": [[1,0],[-2,1],[1,-2],[0,1]], "vars": ["a","b","c","d"]}"#).unwrap();
    let mut cfg = ptr::null_mut();
    assert_eq!(unsafe { codim2_config_from_json(json.as_ptr(), &mut cfg) }, Codim2Status::Ok);
    let mut chow = ptr::null_mut();
    assert_eq!(unsafe { codim2_chow_form(cfg, &mut chow) }, Codim2Status::Ok);
    let mut deg = 0i64;
    assert_eq!(unsafe { codim2_polynomial_degree(chow, &mut deg) }, Codim2Status::Ok);
    assert_eq!(deg, 6);
    assert!(text(chow).contains("a0"));

    for f in [codim2_dual_full_discriminant, codim2_full_discriminant] {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { f(cfg, &mut p) }, Codim2Status::Ok);
        unsafe { codim2_polynomial_free(p) };
    }
    unsafe {
        codim2_polynomial_free(chow);
        codim2_config_free(cfg);
    }
}

#[test]
fn errors_are_reported() {
    let bad: [i64; 6] = [1, 0, 0, 1, 1, 1];
    let mut cfg = ptr::null_mut();
    assert_eq!(unsafe { codim2_config_new(bad.as_ptr(), 3, &mut cfg) }, Codim2Status::InvalidInput);
    assert!(cfg.is_null());
    assert!(last_error().contains("column sums"));

    let not_prime: [i64; 6] = [2, 0, 0, 2, -2, -2];
    assert_eq!(unsafe { codim2_config_new(not_prime.as_ptr(), 3, &mut cfg) }, Codim2Status::Ok);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { codim2_a_discriminant(cfg, &mut d) }, Codim2Status::Precondition);
    assert!(d.is_null());
    assert!(last_error().contains("gcd 4"));
    unsafe { codim2_config_free(cfg) };

    assert_eq!(unsafe { codim2_config_new(ptr::null(), 3, &mut cfg) }, Codim2Status::NullPointer);
    let garbage = CString::new("{").unwrap();
    assert_eq!(unsafe { codim2_config_from_json(garbage.as_ptr(), &mut cfg) }, Codim2Status::InvalidInput);

    unsafe {
        codim2_config_free(ptr::null_mut());
        codim2_polynomial_free(ptr::null_mut());
        codim2_string_free(ptr::null_mut());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(codim2_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/codim2.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["codim2_config_new", "codim2_a_discriminant", "codim2_last_error", "CODIM2_STATUS_OK"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("cc not found; skipping syntax check");
        return;
    }
    for lang in ["c", "c++"] {
        let out = Command::new("cc").args(["-fsyntax-only", "-Wall", "-x", lang]).arg(&header).output().unwrap();
        assert!(out.status.success(), "{lang}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
