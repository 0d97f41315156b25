//! C ABI for the hopfdual engine.
//!
//! Objects are passed as opaque handles that the caller frees with the
//! matching `hd_*_free`. Every fallible call returns an [`HdStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`hd_last_error`]. Strings returned to the caller are freed with
//! [`hd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use hopfdual::catalog::io::{load, save_hopf, to_json, Loaded, Registry};
use hopfdual::catalog::{catalog_build, Document};
use hopfdual::cli::{exit_code, run_command};
use hopfdual::hopf::HopfAlgebra;
use hopfdual::partialdual::{involutivity_check, partial_dualize, PartialDualizationDatum};
use hopfdual::Error;

/// Result codes; the numeric values match the CLI exit codes where they overlap.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HdStatus {
    Ok = 0,
    /// A structure failed verification.
    VerificationFailed = 1,
    /// Malformed input, schema error or bad parameters.
    InvalidInput = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// The handle has the wrong kind for this call.
    WrongKind = 5,
    Panic = 6,
}

/// A verified Hopf algebra.
pub struct HdHopf {
    inner: Arc<HopfAlgebra>,
}

/// A verified partial dualization datum.
pub struct HdDatum {
    inner: PartialDualizationDatum,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: &Error) -> HdStatus {
    set_error(e.to_string());
    match exit_code(e) {
        1 => HdStatus::VerificationFailed,
        _ => HdStatus::InvalidInput,
    }
}

/// Runs `f`, turning panics into [`HdStatus::Panic`].
fn guard(f: impl FnOnce() -> HdStatus) -> HdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        HdStatus::Panic
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HdStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(HdStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        HdStatus::InvalidUtf8
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn load_json(json: &str) -> Result<Loaded, HdStatus> {
    let doc = Document::from_json(json).map_err(|e| fail(&e))?;
    load(&doc, &Registry::new()).map_err(|e| fail(&e))
}

fn build_preset(name: &str, params: &str) -> Result<Loaded, HdStatus> {
    let params: Vec<String> = params
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::to_string)
        .collect();
    let doc = catalog_build(name, &params).map_err(|e| fail(&e))?;
    load(&doc, &Registry::new()).map_err(|e| fail(&e))
}

fn store_hopf(obj: Loaded, out: *mut *mut HdHopf) -> HdStatus {
    match obj {
        Loaded::Hopf(h) => {
            unsafe { *out = Box::into_raw(Box::new(HdHopf { inner: h })) };
            HdStatus::Ok
        }
        _ => {
            set_error("document is not a Hopf algebra");
            HdStatus::WrongKind
        }
    }
}

fn store_datum(obj: Loaded, out: *mut *mut HdDatum) -> HdStatus {
    match obj {
        Loaded::Datum(d) => {
            unsafe { *out = Box::into_raw(Box::new(HdDatum { inner: d })) };
            HdStatus::Ok
        }
        _ => {
            set_error("document is not a dualization datum");
            HdStatus::WrongKind
        }
    }
}

/// Message of the last failure on this thread, or NULL. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn hd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads and verifies a Hopf algebra document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_from_json(json: *const c_char, out: *mut *mut HdHopf) -> HdStatus {
    guard(|| {
        if out.is_null() {
            return HdStatus::NullPointer;
        }
        let json = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match load_json(json) {
            Ok(obj) => store_hopf(obj, out),
            Err(st) => st,
        }
    })
}

/// Builds a Hopf algebra preset, e.g. `("hat-taft", "4,2,2")`.
///
/// # Safety
/// `name` and `params` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_from_preset(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut HdHopf,
) -> HdStatus {
    guard(|| {
        if out.is_null() {
            return HdStatus::NullPointer;
        }
        let (name, params) = match (read_str(name), read_str(params)) {
            (Ok(n), Ok(p)) => (n, p),
            (Err(st), _) | (_, Err(st)) => return st,
        };
        match build_preset(name, params) {
            Ok(obj) => store_hopf(obj, out),
            Err(st) => st,
        }
    })
}

/// Dimension of the algebra, or 0 for NULL.
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_dim(h: *const HdHopf) -> usize {
    h.as_ref().map_or(0, |h| h.inner.dim)
}

/// The canonical JSON document; free with [`hd_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_to_json(h: *const HdHopf, out: *mut *mut c_char) -> HdStatus {
    guard(|| {
        let Some(h) = h.as_ref() else {
            set_error("null Hopf handle");
            return HdStatus::NullPointer;
        };
        if out.is_null() {
            return HdStatus::NullPointer;
        }
        *out = into_c_string(to_json(&save_hopf(&h.inner)));
        HdStatus::Ok
    })
}

/// # Safety
/// `h` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_free(h: *mut HdHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Loads and verifies a dualization datum document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hd_datum_from_json(json: *const c_char, out: *mut *mut HdDatum) -> HdStatus {
    guard(|| {
        if out.is_null() {
            return HdStatus::NullPointer;
        }
        let json = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match load_json(json) {
            Ok(obj) => store_datum(obj, out),
            Err(st) => st,
        }
    })
}

/// Builds a datum preset, e.g. `("taft-datum", "4,2,2")` or `("s3-datum", "")`.
///
/// # Safety
/// `name` and `params` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hd_datum_from_preset(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut HdDatum,
) -> HdStatus {
    guard(|| {
        if out.is_null() {
            return HdStatus::NullPointer;
        }
        let (name, params) = match (read_str(name), read_str(params)) {
            (Ok(n), Ok(p)) => (n, p),
            (Err(st), _) | (_, Err(st)) => return st,
        };
        match build_preset(name, params) {
            Ok(obj) => store_datum(obj, out),
            Err(st) => st,
        }
    })
}

/// # Safety
/// `d` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hd_datum_free(d: *mut HdDatum) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Partially dualizes the datum; the result is a new Hopf handle.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hd_dualize(d: *const HdDatum, out: *mut *mut HdHopf) -> HdStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            set_error("null datum handle");
            return HdStatus::NullPointer;
        };
        if out.is_null() {
            return HdStatus::NullPointer;
        }
        match partial_dualize(&d.inner) {
            Ok(r) if r.report.passed() => {
                *out = Box::into_raw(Box::new(HdHopf { inner: r.rh }));
                HdStatus::Ok
            }
            Ok(r) => {
                set_error(r.report.summary());
                HdStatus::VerificationFailed
            }
            Err(e) => fail(&e),
        }
    })
}

/// Dualizes twice and checks the isomorphism back to `H`; `HD_STATUS_OK`
/// means every check passed.
///
/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hd_check_involutive(d: *const HdDatum) -> HdStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            set_error("null datum handle");
            return HdStatus::NullPointer;
        };
        match involutivity_check(&d.inner) {
            Ok(inv) if inv.report.passed() => HdStatus::Ok,
            Ok(inv) => {
                set_error(inv.report.summary());
                HdStatus::VerificationFailed
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs a CLI command line (`argv[0]` is the program name) and returns its
/// exit code. When `out` is not NULL it receives the printed report, to be
/// freed with [`hd_string_free`].
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn hd_run_command(argc: i32, argv: *const *const c_char, out: *mut *mut c_char) -> i32 {
    let result = catch_unwind(AssertUnwindSafe(|| {
        if argv.is_null() || argc < 0 {
            set_error("null argument vector");
            return HdStatus::NullPointer as i32;
        }
        let mut args = Vec::with_capacity(argc as usize);
        for k in 0..argc as usize {
            match read_str(*argv.add(k)) {
                Ok(s) => args.push(s.to_string()),
                Err(st) => return st as i32,
            }
        }
        let o = run_command(args);
        if !out.is_null() {
            *out = into_c_string(format!("{}{}", o.stdout, o.stderr));
        }
        o.code
    }));
    result.unwrap_or_else(|_| {
        set_error("internal panic");
        HdStatus::Panic as i32
    })
}
