//! C ABI for `trisect-core`.
//!
//! Diagrams are opaque `TrisectDiagram` handles created by
//! [`trisect_diagram_parse`], [`trisect_catalog_get`] or an operation, and
//! released with [`trisect_diagram_free`]. Every fallible function returns a
//! [`TrisectStatus`]; on failure [`trisect_last_error`] describes the problem.
//! Strings returned through `char **` are owned by the caller and must be
//! released with [`trisect_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trisect::catalog::catalog_get;
use trisect::diagram::{validate_diagram, Diagram};
use trisect::format::{format_report, parse_diagram, render_diagram, FormatError, ReportFormat};
use trisect::invariants::{
    distinguish, invariant_report, Definiteness, InvariantError, InvariantReport, Parity, Witness,
};
use trisect::ops::{boundary_connected_sum, cap_all, cap_component, connected_sum, OpsError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrisectStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ShapeError = 4,
    ValidationFailed = 5,
    UnknownName = 6,
    OperationFailed = 7,
    InternalInconsistency = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrisectParams {
    pub g: usize,
    pub k: usize,
    pub p: usize,
    /// 0 for a closed diagram.
    pub b: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrisectParity {
    Even = 0,
    Odd = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrisectDefiniteness {
    Zero = 0,
    Positive = 1,
    Negative = 2,
    Indefinite = 3,
}

/// Basis-independent invariants of a closed diagram (or of the cap of a
/// page-genus-zero relative one). Torsion orders are available through
/// [`trisect_report_structured`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrisectInvariants {
    pub euler: i64,
    pub b1: usize,
    pub h1_torsion_count: usize,
    pub b2: usize,
    pub b3: usize,
    pub signature: i64,
    pub parity: TrisectParity,
    pub definiteness: TrisectDefiniteness,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrisectWitness {
    None = 0,
    Parameters = 1,
    B1 = 2,
    H1Torsion = 3,
    B2 = 4,
    Signature = 5,
    Parity = 6,
}

/// Opaque diagram handle.
pub struct TrisectDiagram {
    inner: Diagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn fail(status: TrisectStatus, msg: impl Into<String>) -> TrisectStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> TrisectStatus) -> TrisectStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TrisectStatus::Panic, "panic inside trisect"),
    }
}

fn ops_status(e: OpsError) -> TrisectStatus {
    fail(TrisectStatus::OperationFailed, e.to_string())
}

fn invariant_status(e: InvariantError) -> TrisectStatus {
    let status = match e {
        InvariantError::InternalInconsistency(_) => TrisectStatus::InternalInconsistency,
        _ => TrisectStatus::OperationFailed,
    };
    fail(status, e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TrisectStatus> {
    if s.is_null() {
        return Err(fail(TrisectStatus::NullPointer, "null string argument"));
    }
    // SAFETY: caller passes a NUL-terminated string.
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TrisectStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn diagram<'a>(d: *const TrisectDiagram) -> Result<&'a Diagram, TrisectStatus> {
    // SAFETY: non-null handles come from this library.
    d.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(TrisectStatus::NullPointer, "null diagram handle"))
}

unsafe fn emit_diagram(d: Diagram, out: *mut *mut TrisectDiagram) -> TrisectStatus {
    *out = Box::into_raw(Box::new(TrisectDiagram { inner: d }));
    TrisectStatus::Ok
}

unsafe fn emit_string(s: String, out: *mut *mut c_char) -> TrisectStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TrisectStatus::Ok
        }
        Err(_) => fail(TrisectStatus::InternalInconsistency, "output contains a NUL byte"),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! check_out {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(TrisectStatus::NullPointer, "null output pointer");
        })+
    };
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn trisect_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trisect_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `d` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trisect_diagram_free(d: *mut TrisectDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Parses `.td` text. Structural errors give `ParseError` or `ShapeError`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_diagram_parse(text: *const c_char, out: *mut *mut TrisectDiagram) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        let text = tri!(read_str(text));
        match parse_diagram(text) {
            Ok(d) => emit_diagram(d, out),
            Err(e @ FormatError::Shape { .. }) => fail(TrisectStatus::ShapeError, e.to_string()),
            Err(e) => fail(TrisectStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_catalog_get(name: *const c_char, out: *mut *mut TrisectDiagram) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        let name = tri!(read_str(name));
        match catalog_get(name) {
            Ok(e) => emit_diagram(e.diagram, out),
            Err(e) => fail(TrisectStatus::UnknownName, e.to_string()),
        }
    })
}

/// Renders a diagram as `.td` text.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_diagram_render(d: *const TrisectDiagram, out: *mut *mut c_char) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        let d = tri!(diagram(d));
        emit_string(render_diagram(d), out)
    })
}

/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_diagram_params(d: *const TrisectDiagram, out: *mut TrisectParams) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        let p = tri!(diagram(d)).params();
        *out = TrisectParams { g: p.g, k: p.k, p: p.p, b: p.b };
        TrisectStatus::Ok
    })
}

/// Writes the number of violated conditions to `violations`. Returns
/// `ValidationFailed` when it is nonzero; the error message lists them.
///
/// # Safety
/// `d` must be a live handle and `violations` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_diagram_validate(d: *const TrisectDiagram, violations: *mut usize) -> TrisectStatus {
    guard(|| {
        check_out!(violations);
        let r = validate_diagram(tri!(diagram(d)));
        *violations = r.violations.len();
        if r.ok() {
            TrisectStatus::Ok
        } else {
            let lines: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
            fail(TrisectStatus::ValidationFailed, lines.join("\n"))
        }
    })
}

/// Caps every boundary component.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_cap_all(d: *const TrisectDiagram, out: *mut *mut TrisectDiagram) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        match cap_all(tri!(diagram(d))) {
            Ok((c, _)) => emit_diagram(c, out),
            Err(e) => ops_status(e),
        }
    })
}

/// Caps one boundary component (1-based).
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_cap_component(
    d: *const TrisectDiagram,
    component: usize,
    out: *mut *mut TrisectDiagram,
) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        match cap_component(tri!(diagram(d)), component) {
            Ok(c) => emit_diagram(c, out),
            Err(e) => ops_status(e),
        }
    })
}

/// # Safety
/// `left` and `right` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_connected_sum(
    left: *const TrisectDiagram,
    right: *const TrisectDiagram,
    out: *mut *mut TrisectDiagram,
) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        match connected_sum(tri!(diagram(left)), tri!(diagram(right))) {
            Ok(c) => emit_diagram(c, out),
            Err(e) => ops_status(e),
        }
    })
}

/// # Safety
/// `left` and `right` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_boundary_sum(
    left: *const TrisectDiagram,
    right: *const TrisectDiagram,
    out: *mut *mut TrisectDiagram,
) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        match boundary_connected_sum(tri!(diagram(left)), tri!(diagram(right))) {
            Ok(c) => emit_diagram(c, out),
            Err(e) => ops_status(e),
        }
    })
}

fn closed_report(d: &Diagram) -> Result<InvariantReport, TrisectStatus> {
    let r = validate_diagram(d);
    if !r.ok() {
        let lines: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
        return Err(fail(TrisectStatus::ValidationFailed, lines.join("\n")));
    }
    let result = if d.is_closed() {
        invariant_report(d)
    } else {
        cap_all(d).map_err(InvariantError::from).and_then(|(c, _)| invariant_report(&c))
    };
    result.map_err(invariant_status)
}

/// Invariants of a valid closed diagram, or of the cap of a valid
/// page-genus-zero relative diagram.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_invariants(d: *const TrisectDiagram, out: *mut TrisectInvariants) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        let r = tri!(closed_report(tri!(diagram(d))));
        *out = TrisectInvariants {
            euler: r.euler,
            b1: r.b1,
            h1_torsion_count: r.h1_torsion.len(),
            b2: r.b2,
            b3: r.b3,
            signature: r.signature,
            parity: match r.parity {
                Parity::Even => TrisectParity::Even,
                Parity::Odd => TrisectParity::Odd,
            },
            definiteness: match r.definiteness {
                Definiteness::Zero => TrisectDefiniteness::Zero,
                Definiteness::Positive => TrisectDefiniteness::Positive,
                Definiteness::Negative => TrisectDefiniteness::Negative,
                Definiteness::Indefinite => TrisectDefiniteness::Indefinite,
            },
        };
        TrisectStatus::Ok
    })
}

/// Full report in the structured `key = value` format.
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trisect_report_structured(d: *const TrisectDiagram, out: *mut *mut c_char) -> TrisectStatus {
    guard(|| {
        check_out!(out);
        let r = tri!(closed_report(tri!(diagram(d))));
        emit_string(format_report(&r, ReportFormat::Structured), out)
    })
}

/// Sets `*distinct` to 1 when the diagrams are provably not
/// diffeomorphism-and-handleslide equivalent, else 0, and `*witness` to the
/// first differing invariant.
///
/// # Safety
/// `a` and `b` must be live handles; `distinct` and `witness` writable.
#[no_mangle]
pub unsafe extern "C" fn trisect_distinguish(
    a: *const TrisectDiagram,
    b: *const TrisectDiagram,
    distinct: *mut i32,
    witness: *mut TrisectWitness,
) -> TrisectStatus {
    guard(|| {
        check_out!(distinct, witness);
        let (a, b) = (tri!(diagram(a)), tri!(diagram(b)));
        for d in [a, b] {
            let r = validate_diagram(d);
            if !r.ok() {
                return fail(TrisectStatus::ValidationFailed, format!("{} is not a valid diagram", d.name()));
            }
        }
        match distinguish(a, b) {
            Ok(v) => {
                *distinct = i32::from(v.is_distinct());
                *witness = match v.witness {
                    None => TrisectWitness::None,
                    Some(Witness::Parameters) => TrisectWitness::Parameters,
                    Some(Witness::B1) => TrisectWitness::B1,
                    Some(Witness::H1Torsion) => TrisectWitness::H1Torsion,
                    Some(Witness::B2) => TrisectWitness::B2,
                    Some(Witness::Signature) => TrisectWitness::Signature,
                    Some(Witness::Parity) => TrisectWitness::Parity,
                };
                TrisectStatus::Ok
            }
            Err(e) => invariant_status(e),
        }
    })
}
