//! C ABI for the hupkit decision toolkit.
//!
//! All functions exchange JSON strings in the same wire formats the CLI
//! uses.  Results come back as opaque decision handles owning the canonical
//! JSON document; status codes mirror the CLI exit codes.

use hupkit::certificate::{verify_vanishing, FourierPair};
use hupkit::cone::{decide_cone, ConeInstance};
use hupkit::decide::{decide, DecideConfig};
use hupkit::error::Error;
use hupkit::jsonio::{cone_document, decision_document, to_canonical_string};
use hupkit::CrossInstance;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status of a toolkit call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HupStatus {
    /// decided: uniqueness holds
    HupOkHup = 0,
    /// decided: an annihilating pair exists (or verification failed)
    HupOkNotHup = 1,
    /// undecided within the configured budgets
    HupOkUnknown = 2,
    /// unreadable or malformed JSON input
    HupErrBadInput = 64,
    /// certificate does not match the instance
    HupErrMismatch = 65,
    /// light-like direction: the single-hyperplane rule applies
    HupErrLightLike = 66,
    /// internal failure
    HupErrInternal = 70,
    /// a required pointer argument was null
    HupErrNullArg = 71,
}

/// Opaque decision handle owning the canonical JSON document.
pub struct HupDecision {
    verdict: c_int,
    document: CString,
}

fn status_of(e: &Error) -> HupStatus {
    match e {
        Error::LightLikeDirection => HupStatus::HupErrLightLike,
        Error::CertificateMismatch(_) => HupStatus::HupErrMismatch,
        _ => HupStatus::HupErrInternal,
    }
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn install(out: *mut *mut HupDecision, verdict: c_int, document: String) -> HupStatus {
    let Ok(document) = CString::new(document) else {
        return HupStatus::HupErrInternal;
    };
    let handle = Box::new(HupDecision { verdict, document });
    unsafe { *out = Box::into_raw(handle) };
    match verdict {
        0 => HupStatus::HupOkHup,
        1 => HupStatus::HupOkNotHup,
        _ => HupStatus::HupOkUnknown,
    }
}

fn guarded(out: *mut *mut HupDecision, f: impl FnOnce() -> HupStatus) -> HupStatus {
    if out.is_null() {
        return HupStatus::HupErrNullArg;
    }
    unsafe { *out = ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => HupStatus::HupErrInternal,
    }
}

/// Decide a cross instance from its JSON encoding.
///
/// On success `*out` owns the decision; release it with
/// [`hupkit_decision_free`].
///
/// # Safety
/// `instance_json` must be a valid NUL-terminated UTF-8 string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hupkit_decide_json(
    instance_json: *const c_char,
    out: *mut *mut HupDecision,
) -> HupStatus {
    guarded(out, || {
        let Some(text) = read_utf8(instance_json) else {
            return HupStatus::HupErrNullArg;
        };
        let inst: CrossInstance = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(_) => return HupStatus::HupErrBadInput,
        };
        match decide(&inst, &DecideConfig::default()) {
            Ok(d) => {
                let doc = to_canonical_string(&decision_document(&d));
                install(out, d.verdict.exit_code(), doc)
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Decide a light-cone / two-hyperplane instance from its JSON encoding.
///
/// # Safety
/// `instance_json` must be a valid NUL-terminated UTF-8 string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hupkit_cone_json(
    instance_json: *const c_char,
    out: *mut *mut HupDecision,
) -> HupStatus {
    guarded(out, || {
        let Some(text) = read_utf8(instance_json) else {
            return HupStatus::HupErrNullArg;
        };
        let inst: ConeInstance = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(_) => return HupStatus::HupErrBadInput,
        };
        let bound = inst.q_max.unwrap_or(10_000);
        match decide_cone(&inst, bound, 1e-9) {
            Ok(d) => {
                let doc = to_canonical_string(&cone_document(&d));
                install(out, d.verdict.exit_code(), doc)
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Replay a certificate against an instance; the handle's verdict is 0 when
/// the verification passes and 1 otherwise.
///
/// # Safety
/// Both strings must be valid NUL-terminated UTF-8 and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hupkit_verify_json(
    certificate_json: *const c_char,
    instance_json: *const c_char,
    out: *mut *mut HupDecision,
) -> HupStatus {
    guarded(out, || {
        let (Some(cert_text), Some(inst_text)) =
            (read_utf8(certificate_json), read_utf8(instance_json))
        else {
            return HupStatus::HupErrNullArg;
        };
        let pair: FourierPair = match serde_json::from_str(cert_text) {
            Ok(v) => v,
            Err(_) => return HupStatus::HupErrBadInput,
        };
        let inst: CrossInstance = match serde_json::from_str(inst_text) {
            Ok(v) => v,
            Err(_) => return HupStatus::HupErrBadInput,
        };
        if pair.for_kind != inst.kind_str() {
            return HupStatus::HupErrMismatch;
        }
        match verify_vanishing(&pair, &inst, 10_000, 1e-8) {
            Ok(report) => {
                let mut doc = serde_json::to_value(&report).expect("report");
                if let serde_json::Value::Object(map) = &mut doc {
                    map.insert("schema_version".into(), serde_json::json!(hupkit::SCHEMA_VERSION));
                }
                install(out, i32::from(!report.pass), to_canonical_string(&doc))
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Verdict behind a handle: 0 uniqueness (or verification pass), 1
/// counterexample (or failure), 2 undecided; -1 for a null handle.
///
/// # Safety
/// `handle` must be null or a pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn hupkit_decision_verdict(handle: *const HupDecision) -> c_int {
    if handle.is_null() {
        return -1;
    }
    (*handle).verdict
}

/// Canonical JSON document behind a handle.  The pointer stays valid until
/// the handle is freed; returns null for a null handle.
///
/// # Safety
/// `handle` must be null or a pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn hupkit_decision_document(handle: *const HupDecision) -> *const c_char {
    if handle.is_null() {
        return ptr::null();
    }
    (*handle).document.as_ptr()
}

/// Release a decision handle (null is a no-op).
///
/// # Safety
/// `handle` must be null or an owned pointer returned by this library, and
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hupkit_decision_free(handle: *mut HupDecision) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hupkit_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
