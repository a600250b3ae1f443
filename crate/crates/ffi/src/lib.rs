//! C interface.
//!
//! Every fallible function returns a [`Codim2Status`]; on failure the
//! message is available from [`codim2_last_error`] on the same thread.
//! Handles and strings returned here are released with the matching
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use codim2::cancel::CancelToken;
use codim2::chow::{chow_form_with, row_names};
use codim2::discriminant::{a_discriminant_with, dual_full_discriminant_with, full_discriminant_with};
use codim2::error::Error;
use codim2::lattice::{BConfig, ConfigFile};
use codim2::poly::IntPolynomial;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codim2Status {
    Ok = 0,
    InvalidInput = 1,
    Precondition = 2,
    Internal = 3,
    Cancelled = 4,
    NullPointer = 5,
    Panic = 6,
}

/// A validated configuration with row names.
pub struct Codim2Config {
    b: BConfig,
    names: Vec<String>,
}

pub struct Codim2Polynomial {
    poly: IntPolynomial,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NUL removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> Codim2Status {
    match e {
        Error::Cancelled => Codim2Status::Cancelled,
        e if e.is_internal() => Codim2Status::Internal,
        Error::Input(_) | Error::TooFewRows(_) | Error::ColumnSum { .. } | Error::RankDeficient | Error::ARank { .. } => {
            Codim2Status::InvalidInput
        }
        _ => Codim2Status::Precondition,
    }
}

/// Runs `f`, recording errors and panics.
fn guard<F: FnOnce() -> Result<(), Error>>(f: F) -> Codim2Status {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Codim2Status::Ok,
        Ok(Err(e)) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside codim2");
            Codim2Status::Panic
        }
    }
}

macro_rules! require {
    ($p:expr, $name:literal) => {
        if $p.is_null() {
            set_error(concat!("null pointer: ", $name));
            return Codim2Status::NullPointer;
        }
    };
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn codim2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn codim2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Builds a configuration from `n_rows` rows stored as
/// `rows[2 i], rows[2 i + 1]`.
///
/// # Safety
/// `rows` must point to `2 * n_rows` readable integers and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_new(rows: *const i64, n_rows: usize, out: *mut *mut Codim2Config) -> Codim2Status {
    require!(rows, "rows");
    require!(out, "out");
    let flat = std::slice::from_raw_parts(rows, 2 * n_rows);
    guard(|| {
        let b = BConfig::new(flat.chunks(2).map(|c| [c[0], c[1]]).collect())?;
        let names = row_names(b.n(), None)?;
        *out = Box::into_raw(Box::new(Codim2Config { b, names }));
        Ok(())
    })
}

/// Parses `{"B": ...}` or `{"A": ...}`, with optional `"vars"`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_from_json(json: *const c_char, out: *mut *mut Codim2Config) -> Codim2Status {
    require!(json, "json");
    require!(out, "out");
    let text = CStr::from_ptr(json);
    guard(|| {
        let text = text.to_str().map_err(|e| Error::Input(e.to_string()))?;
        let file = ConfigFile::from_json(text)?;
        let b = file.to_bconfig()?;
        let names = row_names(b.n(), file.vars.as_deref())?;
        *out = Box::into_raw(Box::new(Codim2Config { b, names }));
        Ok(())
    })
}

/// # Safety
/// `cfg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_free(cfg: *mut Codim2Config) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_rows(cfg: *const Codim2Config, out: *mut usize) -> Codim2Status {
    require!(cfg, "cfg");
    require!(out, "out");
    *out = (*cfg).b.n();
    Codim2Status::Ok
}

/// Degree of the toric variety.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_degree(cfg: *const Codim2Config, out: *mut i64) -> Codim2Status {
    require!(cfg, "cfg");
    require!(out, "out");
    *out = (*cfg).b.degree();
    Codim2Status::Ok
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_is_prime(cfg: *const Codim2Config, out: *mut bool) -> Codim2Status {
    require!(cfg, "cfg");
    require!(out, "out");
    *out = (*cfg).b.is_prime();
    Codim2Status::Ok
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_config_is_centrally_symmetric(cfg: *const Codim2Config, out: *mut bool) -> Codim2Status {
    require!(cfg, "cfg");
    require!(out, "out");
    *out = codim2::polygon::is_centrally_symmetric(&(*cfg).b);
    Codim2Status::Ok
}

unsafe fn compute<F>(cfg: *const Codim2Config, out: *mut *mut Codim2Polynomial, f: F) -> Codim2Status
where
    F: FnOnce(&Codim2Config, &CancelToken) -> Result<IntPolynomial, Error>,
{
    require!(cfg, "cfg");
    require!(out, "out");
    let cfg = &*cfg;
    guard(|| {
        let poly = f(cfg, &CancelToken::new())?;
        *out = Box::into_raw(Box::new(Codim2Polynomial { poly }));
        Ok(())
    })
}

/// Chow form in the variables `<name>0`, `<name>1` per row.
///
/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_chow_form(cfg: *const Codim2Config, out: *mut *mut Codim2Polynomial) -> Codim2Status {
    compute(cfg, out, |c, t| Ok(chow_form_with(&c.b, Some(&c.names), t)?.polynomial))
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_dual_full_discriminant(
    cfg: *const Codim2Config,
    out: *mut *mut Codim2Polynomial,
) -> Codim2Status {
    compute(cfg, out, |c, t| dual_full_discriminant_with(&c.b, Some(&c.names), t))
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_full_discriminant(cfg: *const Codim2Config, out: *mut *mut Codim2Polynomial) -> Codim2Status {
    compute(cfg, out, |c, t| full_discriminant_with(&c.b, Some(&c.names), t))
}

/// # Safety
/// `cfg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_a_discriminant(cfg: *const Codim2Config, out: *mut *mut Codim2Polynomial) -> Codim2Status {
    compute(cfg, out, |c, t| Ok(a_discriminant_with(&c.b, Some(&c.names), t)?.d_a))
}

/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn codim2_polynomial_free(poly: *mut Codim2Polynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_polynomial_term_count(poly: *const Codim2Polynomial, out: *mut usize) -> Codim2Status {
    require!(poly, "poly");
    require!(out, "out");
    *out = (*poly).poly.len();
    Codim2Status::Ok
}

/// Total degree, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_polynomial_degree(poly: *const Codim2Polynomial, out: *mut i64) -> Codim2Status {
    require!(poly, "poly");
    require!(out, "out");
    *out = (*poly).poly.total_degree().unwrap_or(-1);
    Codim2Status::Ok
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), Error> {
    let c = CString::new(s).map_err(|e| Error::Internal(e.to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Canonical text form; release with [`codim2_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_polynomial_to_string(poly: *const Codim2Polynomial, out: *mut *mut c_char) -> Codim2Status {
    require!(poly, "poly");
    require!(out, "out");
    let poly = &*poly;
    guard(|| give_string(poly.poly.to_string(), out))
}

/// JSON term list; release with [`codim2_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codim2_polynomial_to_json(poly: *const Codim2Polynomial, out: *mut *mut c_char) -> Codim2Status {
    require!(poly, "poly");
    require!(out, "out");
    let poly = &*poly;
    guard(|| give_string(poly.poly.to_json_string(), out))
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn codim2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
