//! C ABI for the ordalg laboratory.
//!
//! Conventions:
//! * Handles (`OrdalgMonoid`, `OrdalgRing`) are opaque; create them with the
//!   `*_new`/`*_load` functions and release them with the matching `*_free`.
//! * Every fallible call returns an [`OrdalgStatus`]; on failure the message
//!   is available from `ordalg_last_error` until the next call on the same
//!   thread.
//! * Structured results are returned as JSON strings allocated by this
//!   library; release them with `ordalg_string_free`.

use ordalg::catalog::load_instance;
use ordalg::ideal::{
    is_homogeneous_ideal, m_of, potency_report, principal_generator, schreier_probe,
    FractionalIdeal, OrderForm, PrincipalityOutcome, QuadraticRing, RingElement,
};
use ordalg::monoid::MonoidInstance;
use ordalg::riesz::{self, Mode};
use ordalg::suites;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrdalgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    Unsupported = 5,
    InternalError = 6,
}

/// Opaque monoid instance handle.
pub struct OrdalgMonoid {
    inner: MonoidInstance,
}

/// Opaque quadratic-ring handle.
pub struct OrdalgRing {
    inner: QuadraticRing,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ordalg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version string (static storage).
#[no_mangle]
pub extern "C" fn ordalg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Release a string allocated by this library.
///
/// # Safety
/// `s` must be a pointer previously returned through an out-parameter of
/// this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ordalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, OrdalgStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(OrdalgStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        OrdalgStatus::InvalidUtf8
    })
}

fn write_string(out: *mut *mut c_char, s: String) -> OrdalgStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            OrdalgStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior NUL byte");
            OrdalgStatus::InternalError
        }
    }
}

fn guarded<F: FnOnce() -> OrdalgStatus>(f: F) -> OrdalgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            OrdalgStatus::InternalError
        }
    }
}

// ---- monoid handles --------------------------------------------------------

/// Load a monoid instance from a JSON document (see the README for the
/// schema). On success writes a handle the caller must free.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ordalg_monoid_load_json(
    json: *const c_char,
    out: *mut *mut OrdalgMonoid,
) -> OrdalgStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return OrdalgStatus::NullArgument;
        }
        let json = match read_str(json) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match ordalg::monoid::load_monoid_json("ffi".into(), json) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(OrdalgMonoid { inner: m }));
                OrdalgStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                OrdalgStatus::ParseError
            }
        }
    })
}

/// Load a built-in instance by id (e.g. "ns:2,3"); `window` 0 keeps the
/// catalog default.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ordalg_monoid_catalog(
    id: *const c_char,
    window: u64,
    out: *mut *mut OrdalgMonoid,
) -> OrdalgStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return OrdalgStatus::NullArgument;
        }
        let id = match read_str(id) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let w = if window == 0 { None } else { Some(window) };
        match load_instance(id, w) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(OrdalgMonoid { inner: m }));
                OrdalgStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                OrdalgStatus::ParseError
            }
        }
    })
}

/// # Safety
/// `m` must be a handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ordalg_monoid_free(m: *mut OrdalgMonoid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of enumerated window elements.
///
/// # Safety
/// `m` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ordalg_monoid_len(
    m: *const OrdalgMonoid,
    out: *mut usize,
) -> OrdalgStatus {
    guarded(|| {
        if m.is_null() || out.is_null() {
            set_error("null argument");
            return OrdalgStatus::NullArgument;
        }
        *out = (*m).inner.len();
        OrdalgStatus::Ok
    })
}

/// Canonical rendering of the element at an enumeration index.
///
/// # Safety
/// `m` and `out` must be valid pointers; free the result with
/// `ordalg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ordalg_monoid_render_element(
    m: *const OrdalgMonoid,
    index: usize,
    out: *mut *mut c_char,
) -> OrdalgStatus {
    guarded(|| {
        if m.is_null() || out.is_null() {
            set_error("null argument");
            return OrdalgStatus::NullArgument;
        }
        let inner = &(*m).inner;
        if index >= inner.len() {
            set_error("element index out of range");
            return OrdalgStatus::DomainError;
        }
        write_string(out, inner.render_element(inner.element(index)))
    })
}

/// Run a named suite ("order", "riesz", "ideal", "all") and return the
/// analysis report as JSON.
///
/// # Safety
/// All pointers must be valid; free the result with `ordalg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ordalg_analyze_json(
    m: *const OrdalgMonoid,
    suite: *const c_char,
    out: *mut *mut c_char,
) -> OrdalgStatus {
    guarded(|| {
        if m.is_null() || out.is_null() {
            set_error("null argument");
            return OrdalgStatus::NullArgument;
        }
        let suite = match read_str(suite) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match suites::analyze(&(*m).inner, suite) {
            Ok(report) => write_string(out, report.to_json()),
            Err(e) => {
                set_error(&e.to_string());
                OrdalgStatus::DomainError
            }
        }
    })
}

/// Interpolate a, b <= z <= x, y from canonical element renderings. The
/// result JSON is `{"found": bool, "z": "..."}`.
///
/// # Safety
/// All pointers must be valid; free the result with `ordalg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ordalg_interpolate(
    m: *const OrdalgMonoid,
    a: *const c_char,
    b: *const c_char,
    x: *const c_char,
    y: *const c_char,
    constructive: bool,
    out: *mut *mut c_char,
) -> OrdalgStatus {
    guarded(|| {
        if m.is_null() || out.is_null() {
            set_error("null argument");
            return OrdalgStatus::NullArgument;
        }
        let inner = &(*m).inner;
        let parse = |p: *const c_char| -> Result<ordalg::Element, OrdalgStatus> {
            let s = read_str(p)?;
            inner.parse_element(s).map_err(|e| {
                set_error(&e.to_string());
                OrdalgStatus::ParseError
            })
        };
        let (a, b, x, y) = match (parse(a), parse(b), parse(x), parse(y)) {
            (Ok(a), Ok(b), Ok(x), Ok(y)) => (a, b, x, y),
            (Err(e), ..) | (_, Err(e), ..) | (_, _, Err(e), _) | (_, _, _, Err(e)) => return e,
        };
        let mode = if constructive { Mode::Constructive } else { Mode::Search };
        match riesz::interpolate_22(inner, &a, &b, &x, &y, mode) {
            Ok(outcome) => {
                let json = match outcome.witness() {
                    Some(w) => serde_json::json!({
                        "found": true,
                        "z": inner.render_element(&w.z),
                    }),
                    None => serde_json::json!({"found": false}),
                };
                write_string(out, json.to_string())
            }
            Err(e) => {
                set_error(&e.to_string());
                OrdalgStatus::DomainError
            }
        }
    })
}

// ---- ring handles -----------------------------------------------------------

/// Create a quadratic-ring handle for squarefree d (sqrt_order selects
/// Z[sqrt(d)] even when d = 1 mod 4).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ordalg_ring_new(
    d: i64,
    sqrt_order: bool,
    out: *mut *mut OrdalgRing,
) -> OrdalgStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return OrdalgStatus::NullArgument;
        }
        let form = if sqrt_order { OrderForm::SqrtOrder } else { OrderForm::Maximal };
        match QuadraticRing::new(d, form) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(OrdalgRing { inner: r }));
                OrdalgStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                OrdalgStatus::DomainError
            }
        }
    })
}

/// # Safety
/// `r` must be a handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn ordalg_ring_free(r: *mut OrdalgRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

fn parse_ideal(ring: QuadraticRing, args: &serde_json::Value, key: &str) -> Result<FractionalIdeal, String> {
    let gens = args
        .get(key)
        .and_then(|v| v.as_array())
        .ok_or_else(|| format!("missing {key}: [[a, b, den], ...]"))?;
    let mut parsed = Vec::new();
    for g in gens {
        let t = g.as_array().ok_or("generator must be [a, b, den]")?;
        if t.len() != 3 {
            return Err("generator must be [a, b, den]".into());
        }
        let get = |i: usize| t[i].as_i64().ok_or("generator entries must be integers");
        parsed.push((RingElement::new(get(0)?, get(1)?), get(2)?));
    }
    FractionalIdeal::from_generators(ring, &parsed).map_err(|e| e.to_string())
}

/// Ideal-theory operations with JSON arguments. Supported ops:
/// "homogeneous", "v", "t", "inverse", "mul", "sum", "colon", "invertible",
/// "principal", "potency", "schreier".
///
/// # Safety
/// All pointers must be valid; free the result with `ordalg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ordalg_ideal_op_json(
    r: *const OrdalgRing,
    op: *const c_char,
    args_json: *const c_char,
    bound: i64,
    out: *mut *mut c_char,
) -> OrdalgStatus {
    guarded(|| {
        if r.is_null() || out.is_null() {
            set_error("null argument");
            return OrdalgStatus::NullArgument;
        }
        let ring = (*r).inner;
        let op = match read_str(op) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let args_text = match read_str(args_json) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let args: serde_json::Value = match serde_json::from_str(args_text) {
            Ok(v) => v,
            Err(e) => {
                set_error(&format!("bad args json: {e}"));
                return OrdalgStatus::ParseError;
            }
        };
        let result: Result<serde_json::Value, String> = (|| match op {
            "homogeneous" => {
                let i = parse_ideal(ring, &args, "gens")?;
                let v = is_homogeneous_ideal(&i).map_err(|e| e.to_string())?;
                if v.holds_true() {
                    let m = m_of(&i).map_err(|e| e.to_string())?;
                    Ok(serde_json::json!({"holds": true, "m_of": m.render()}))
                } else {
                    let ws: Vec<String> =
                        v.witness().unwrap().iter().map(|m| m.render()).collect();
                    Ok(serde_json::json!({"holds": false, "maximal_t_ideals": ws}))
                }
            }
            "v" | "t" | "inverse" => {
                let i = parse_ideal(ring, &args, "gens")?;
                let r = match op {
                    "v" => i.v_closure(),
                    "t" => i.t_closure(),
                    _ => i.inverse(),
                }
                .map_err(|e| e.to_string())?;
                Ok(serde_json::to_value(r.to_fixture()).unwrap())
            }
            "mul" | "sum" | "colon" => {
                let i = parse_ideal(ring, &args, "gens")?;
                let j = parse_ideal(ring, &args, "gens2")?;
                let r = match op {
                    "mul" => i.multiply(&j),
                    "sum" => i.add_sum(&j),
                    _ => FractionalIdeal::colon(&i, &j),
                }
                .map_err(|e| e.to_string())?;
                Ok(serde_json::to_value(r.to_fixture()).unwrap())
            }
            "invertible" => {
                let i = parse_ideal(ring, &args, "gens")?;
                Ok(serde_json::json!({
                    "invertible": i.is_t_invertible().map_err(|e| e.to_string())?
                }))
            }
            "principal" => {
                let i = parse_ideal(ring, &args, "gens")?;
                match principal_generator(&i).map_err(|e| e.to_string())? {
                    PrincipalityOutcome::Principal(g) => Ok(serde_json::json!({
                        "principal": true, "generator": [g.a, g.b]
                    })),
                    PrincipalityOutcome::NotPrincipal => {
                        Ok(serde_json::json!({"principal": false}))
                    }
                }
            }
            "potency" => {
                let rep = potency_report(ring, bound).map_err(|e| e.to_string())?;
                Ok(serde_json::json!({
                    "potent": rep.domain_potent,
                    "f_potent": rep.domain_f_potent,
                    "maximal_t_ideals": rep.entries.len(),
                }))
            }
            "schreier" => {
                let rep = schreier_probe(ring, bound).map_err(|e| e.to_string())?;
                Ok(serde_json::json!({
                    "all_principal": rep.all_principal,
                    "all_primal": rep.all_primal.holds_true(),
                }))
            }
            other => Err(format!("unknown op: {other}")),
        })();
        match result {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => {
                set_error(&e);
                OrdalgStatus::DomainError
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn s(p: *mut c_char) -> String {
        let out = CStr::from_ptr(p).to_str().unwrap().to_string();
        ordalg_string_free(p);
        out
    }

    #[test]
    fn catalog_handle_lifecycle() {
        unsafe {
            let id = CString::new("ns:2,3").unwrap();
            let mut h: *mut OrdalgMonoid = ptr::null_mut();
            assert_eq!(ordalg_monoid_catalog(id.as_ptr(), 0, &mut h), OrdalgStatus::Ok);
            let mut n = 0usize;
            assert_eq!(ordalg_monoid_len(h, &mut n), OrdalgStatus::Ok);
            assert_eq!(n, 40);
            let mut p: *mut c_char = ptr::null_mut();
            assert_eq!(ordalg_monoid_render_element(h, 1, &mut p), OrdalgStatus::Ok);
            assert_eq!(s(p), "NS:2");
            ordalg_monoid_free(h);
        }
    }

    #[test]
    fn analyze_reports_through_the_boundary() {
        unsafe {
            let id = CString::new("fc:2").unwrap();
            let mut h: *mut OrdalgMonoid = ptr::null_mut();
            assert_eq!(ordalg_monoid_catalog(id.as_ptr(), 0, &mut h), OrdalgStatus::Ok);
            let suite = CString::new("riesz").unwrap();
            let mut p: *mut c_char = ptr::null_mut();
            assert_eq!(ordalg_analyze_json(h, suite.as_ptr(), &mut p), OrdalgStatus::Ok);
            let json = s(p);
            let report = ordalg::report::AnalysisReport::from_json(&json).unwrap();
            assert!(report.suite_failures.is_empty());
            assert!(report.checks.iter().any(|c| c.name == "all_primal" && c.holds()));
            ordalg_monoid_free(h);
        }
    }

    #[test]
    fn interpolation_over_the_boundary() {
        unsafe {
            let id = CString::new("ns:2,3").unwrap();
            let mut h: *mut OrdalgMonoid = ptr::null_mut();
            ordalg_monoid_catalog(id.as_ptr(), 0, &mut h);
            let (a, b, x, y) = (
                CString::new("2").unwrap(),
                CString::new("3").unwrap(),
                CString::new("5").unwrap(),
                CString::new("6").unwrap(),
            );
            let mut p: *mut c_char = ptr::null_mut();
            let st = ordalg_interpolate(
                h,
                a.as_ptr(),
                b.as_ptr(),
                x.as_ptr(),
                y.as_ptr(),
                false,
                &mut p,
            );
            assert_eq!(st, OrdalgStatus::Ok);
            assert_eq!(s(p), r#"{"found":false}"#);
            ordalg_monoid_free(h);
        }
    }

    #[test]
    fn ideal_ops_over_the_boundary() {
        unsafe {
            let mut r: *mut OrdalgRing = ptr::null_mut();
            assert_eq!(ordalg_ring_new(-5, false, &mut r), OrdalgStatus::Ok);
            let op = CString::new("homogeneous").unwrap();
            let args = CString::new(r#"{"gens": [[2,0,1],[1,1,1]]}"#).unwrap();
            let mut p: *mut c_char = ptr::null_mut();
            let st = ordalg_ideal_op_json(r, op.as_ptr(), args.as_ptr(), 50, &mut p);
            assert_eq!(st, OrdalgStatus::Ok);
            let v: serde_json::Value = serde_json::from_str(&s(p)).unwrap();
            assert_eq!(v["holds"], true);
            ordalg_ring_free(r);
        }
    }

    #[test]
    fn errors_set_messages() {
        unsafe {
            let mut h: *mut OrdalgMonoid = ptr::null_mut();
            let bad = CString::new("{\"backend\": \"nonsense\"}").unwrap();
            assert_eq!(
                ordalg_monoid_load_json(bad.as_ptr(), &mut h),
                OrdalgStatus::ParseError
            );
            let msg = CStr::from_ptr(ordalg_last_error()).to_str().unwrap();
            assert!(!msg.is_empty());
            // invalid ring
            let mut r: *mut OrdalgRing = ptr::null_mut();
            assert_eq!(ordalg_ring_new(12, false, &mut r), OrdalgStatus::DomainError);
            assert_eq!(
                ordalg_monoid_load_json(ptr::null(), &mut h),
                OrdalgStatus::NullArgument
            );
        }
    }
}
