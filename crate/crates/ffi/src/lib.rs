//! C ABI over the engine: opaque handles, status codes, and JSON strings.
//!
//! Every function returns an `EqStatus`; on failure the thread-local
//! message from `eq_last_error_message` describes what went wrong.
//! Strings returned through out-parameters are owned by the caller and
//! must be released with `eq_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use equicoh::io::{
    cohomology_to_doc, doc_to_model, doc_to_presentation, report_to_doc, table_doc, to_json,
    ModelDoc, PresentationDoc,
};
use equicoh::{
    build_model, classifying_data, dispatch_verification, presented_ring, GrassmannCase,
    GroupDescriptor, QuotientPresentation, SullivanModel,
};

/// Status code returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EqStatus {
    /// The call succeeded.
    EqOk = 0,
    /// A required pointer argument was null.
    EqNullPointer = 1,
    /// An argument could not be parsed or validated.
    EqInvalidArgument = 2,
    /// The engine rejected the request.
    EqEngineError = 3,
}

/// Opaque handle to a presented graded ring.
pub struct EqPresentation {
    inner: QuotientPresentation,
}

/// Opaque handle to a pure Sullivan model.
pub struct EqModel {
    inner: SullivanModel,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let c = CString::new(message.into().replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(status: EqStatus, message: impl Into<String>) -> EqStatus {
    set_error(message);
    status
}

/// Returns the message for the most recent failure on this thread. The
/// pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn eq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, EqStatus> {
    if ptr.is_null() {
        return Err(EqStatus::EqNullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| EqStatus::EqInvalidArgument)
}

fn write_string(out: *mut *mut c_char, s: String) -> EqStatus {
    if out.is_null() {
        return fail(EqStatus::EqNullPointer, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            EqStatus::EqOk
        }
        Err(_) => fail(EqStatus::EqInvalidArgument, "output contained a null byte"),
    }
}

/// Releases a string returned by this library.
#[no_mangle]
pub extern "C" fn eq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

fn parse_case(text: &str) -> Result<GrassmannCase, EqStatus> {
    text.parse::<GrassmannCase>().map_err(|e| {
        set_error(e.to_string());
        EqStatus::EqInvalidArgument
    })
}

/// Builds the presented cohomology ring for a Grassmannian case string
/// such as "n=1,k=1,a=0,b=0,oriented,two-sided".
#[no_mangle]
pub extern "C" fn eq_presentation_for_case(
    case: *const c_char,
    out: *mut *mut EqPresentation,
) -> EqStatus {
    if out.is_null() {
        return fail(EqStatus::EqNullPointer, "null output pointer");
    }
    let text = match read_str(case) {
        Ok(t) => t,
        Err(s) => return fail(s, "case string is null or not UTF-8"),
    };
    let parsed = match parse_case(text) {
        Ok(c) => c,
        Err(s) => return s,
    };
    match presented_ring(&parsed) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(EqPresentation { inner })) };
            EqStatus::EqOk
        }
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Parses a presentation document (JSON) into a handle.
#[no_mangle]
pub extern "C" fn eq_presentation_from_json(
    json: *const c_char,
    out: *mut *mut EqPresentation,
) -> EqStatus {
    if out.is_null() {
        return fail(EqStatus::EqNullPointer, "null output pointer");
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(s) => return fail(s, "document string is null or not UTF-8"),
    };
    let doc: PresentationDoc = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(e) => return fail(EqStatus::EqInvalidArgument, e.to_string()),
    };
    match doc_to_presentation(&doc) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(EqPresentation { inner })) };
            EqStatus::EqOk
        }
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Releases a presentation handle.
#[no_mangle]
pub extern "C" fn eq_presentation_free(p: *mut EqPresentation) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Writes the dimensions of the presented ring in degrees 0..=max_degree
/// into the caller's buffer, which must hold max_degree + 1 entries.
#[no_mangle]
pub extern "C" fn eq_presentation_hilbert(
    p: *const EqPresentation,
    max_degree: u32,
    dims: *mut u64,
) -> EqStatus {
    if p.is_null() || dims.is_null() {
        return fail(EqStatus::EqNullPointer, "null presentation or buffer");
    }
    let presentation = unsafe { &(*p).inner };
    match presentation.hilbert_function(max_degree) {
        Ok(table) => {
            for (i, &d) in table.dims.iter().enumerate() {
                unsafe { *dims.add(i) = d as u64 };
            }
            EqStatus::EqOk
        }
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Returns the Hilbert table of the presented ring as a JSON document.
#[no_mangle]
pub extern "C" fn eq_presentation_hilbert_json(
    p: *const EqPresentation,
    max_degree: u32,
    out: *mut *mut c_char,
) -> EqStatus {
    if p.is_null() {
        return fail(EqStatus::EqNullPointer, "null presentation");
    }
    let presentation = unsafe { &(*p).inner };
    match presentation.hilbert_function(max_degree) {
        Ok(table) => write_string(out, to_json(&table_doc(presentation.label.clone(), &table))),
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Builds the Sullivan model for a Grassmannian case string.
#[no_mangle]
pub extern "C" fn eq_model_for_case(case: *const c_char, out: *mut *mut EqModel) -> EqStatus {
    if out.is_null() {
        return fail(EqStatus::EqNullPointer, "null output pointer");
    }
    let text = match read_str(case) {
        Ok(t) => t,
        Err(s) => return fail(s, "case string is null or not UTF-8"),
    };
    let parsed = match parse_case(text) {
        Ok(c) => c,
        Err(s) => return s,
    };
    match build_model(&parsed) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(EqModel { inner })) };
            EqStatus::EqOk
        }
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Parses a model document (JSON) into a handle.
#[no_mangle]
pub extern "C" fn eq_model_from_json(json: *const c_char, out: *mut *mut EqModel) -> EqStatus {
    if out.is_null() {
        return fail(EqStatus::EqNullPointer, "null output pointer");
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(s) => return fail(s, "document string is null or not UTF-8"),
    };
    let doc: ModelDoc = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(e) => return fail(EqStatus::EqInvalidArgument, e.to_string()),
    };
    match doc_to_model(&doc) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(EqModel { inner })) };
            EqStatus::EqOk
        }
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Releases a model handle.
#[no_mangle]
pub extern "C" fn eq_model_free(m: *mut EqModel) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Returns the model's cohomology as a JSON document; pass a nonzero
/// `representatives` flag to include representative cocycles.
#[no_mangle]
pub extern "C" fn eq_model_cohomology_json(
    m: *const EqModel,
    max_degree: u32,
    representatives: i32,
    out: *mut *mut c_char,
) -> EqStatus {
    if m.is_null() {
        return fail(EqStatus::EqNullPointer, "null model");
    }
    let model = unsafe { &(*m).inner };
    match model.cohomology(max_degree, representatives != 0) {
        Ok(report) => write_string(out, to_json(&cohomology_to_doc(&report))),
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Runs the verification matching the case's equivariance. Writes 1 to
/// `pass` when every table comparison agrees and 0 otherwise; the full
/// report is returned as JSON when `report` is non-null. A negative
/// `max_degree` selects the case's default cutoff.
#[no_mangle]
pub extern "C" fn eq_verify_case(
    case: *const c_char,
    max_degree: i64,
    pass: *mut i32,
    report: *mut *mut c_char,
) -> EqStatus {
    if pass.is_null() {
        return fail(EqStatus::EqNullPointer, "null pass pointer");
    }
    let text = match read_str(case) {
        Ok(t) => t,
        Err(s) => return fail(s, "case string is null or not UTF-8"),
    };
    let parsed = match parse_case(text) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let cutoff = if max_degree < 0 {
        parsed.default_cutoff()
    } else {
        match u32::try_from(max_degree) {
            Ok(c) => c,
            Err(_) => return fail(EqStatus::EqInvalidArgument, "cutoff out of range"),
        }
    };
    match dispatch_verification(&parsed, cutoff) {
        Ok(outcome) => {
            unsafe { *pass = outcome.pass() as i32 };
            if report.is_null() {
                EqStatus::EqOk
            } else {
                write_string(report, to_json(&report_to_doc(&outcome)))
            }
        }
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}

/// Returns classifying-ring data for a group name such as "SO(7)" as a
/// JSON document.
#[no_mangle]
pub extern "C" fn eq_catalog_json(group: *const c_char, out: *mut *mut c_char) -> EqStatus {
    let text = match read_str(group) {
        Ok(t) => t,
        Err(s) => return fail(s, "group string is null or not UTF-8"),
    };
    let descriptor = match text.parse::<GroupDescriptor>() {
        Ok(d) => d,
        Err(e) => return fail(EqStatus::EqInvalidArgument, e.to_string()),
    };
    match classifying_data(&descriptor) {
        Ok(data) => write_string(out, to_json(&equicoh::io::catalog_to_doc(&data))),
        Err(e) => fail(EqStatus::EqEngineError, e.to_string()),
    }
}
