//! C ABI over the strong isotropy engine.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns an
//! [`SiStatus`]; on failure a message is available from
//! [`si_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_rational::BigRational;
use strong_isotropy::classifier::{classify_simple, SimpleGroupDescriptor};
use strong_isotropy::cli::{run_json, to_json_line, EngineConfig, Status};
use strong_isotropy::qform::{hilbert_symbol, Place, RationalQuadraticForm};
use strong_isotropy::Error;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UsageError = 3,
    Undecided = 4,
    ResourceLimit = 5,
    Panic = 6,
}

impl From<Status> for SiStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Ok => SiStatus::Ok,
            Status::UsageError => SiStatus::UsageError,
            Status::Undecided => SiStatus::Undecided,
            Status::ResourceLimit => SiStatus::ResourceLimit,
        }
    }
}

impl From<&Error> for SiStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::EnumerationCap { .. } => SiStatus::ResourceLimit,
            Error::SquarefreeHypothesis { .. } | Error::Undecided(_) => SiStatus::Undecided,
            _ => SiStatus::UsageError,
        }
    }
}

/// Engine settings. Create with [`si_engine_new`].
pub struct SiEngine {
    config: EngineConfig,
}

/// A diagonal quadratic form over the rationals.
pub struct SiQuadraticForm {
    form: RationalQuadraticForm,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: SiStatus, message: impl Into<String>) -> SiStatus {
    set_error(message);
    status
}

fn guard(body: impl FnOnce() -> SiStatus) -> SiStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(SiStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SiStatus> {
    if text.is_null() {
        return Err(fail(SiStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(SiStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn si_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Engine version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn si_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// New engine with the default enumeration cap.
#[no_mangle]
pub extern "C" fn si_engine_new() -> *mut SiEngine {
    Box::into_raw(Box::new(SiEngine {
        config: EngineConfig::default(),
    }))
}

/// # Safety
/// `engine` must come from [`si_engine_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn si_engine_free(engine: *mut SiEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// # Safety
/// `engine` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn si_engine_set_enumeration_cap(engine: *mut SiEngine, cap: usize) -> SiStatus {
    guard(|| match engine.as_mut() {
        None => fail(SiStatus::NullPointer, "null engine"),
        Some(_) if cap == 0 => fail(SiStatus::UsageError, "enumeration cap must be positive"),
        Some(e) => {
            e.config.enumeration_cap = cap;
            SiStatus::Ok
        }
    })
}

/// Runs one JSON request and stores the JSON response in `*response`, to be
/// released with [`si_string_free`]. A response is produced for every
/// request that could be read; the return value mirrors its status.
///
/// # Safety
/// `engine` must be live, `request` a nul-terminated string and `response`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn si_run_json(
    engine: *const SiEngine,
    request: *const c_char,
    response: *mut *mut c_char,
) -> SiStatus {
    guard(|| {
        let (Some(engine), false) = (engine.as_ref(), response.is_null()) else {
            return fail(SiStatus::NullPointer, "null engine or response slot");
        };
        *response = ptr::null_mut();
        let text = match read_str(request) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let doc = run_json(text, &engine.config);
        if let Some(err) = &doc.error {
            set_error(err.message.clone());
        }
        let json = CString::new(to_json_line(&doc)).expect("JSON has no nul bytes");
        *response = json.into_raw();
        SiStatus::from(doc.status)
    })
}

/// # Safety
/// `text` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn si_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Parses a form literal such as `"1,-1,2/3"`.
///
/// # Safety
/// `text` must be nul-terminated and `form` writable.
#[no_mangle]
pub unsafe extern "C" fn si_qform_parse(text: *const c_char, form: *mut *mut SiQuadraticForm) -> SiStatus {
    guard(|| {
        if form.is_null() {
            return fail(SiStatus::NullPointer, "null output slot");
        }
        *form = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match text.parse::<RationalQuadraticForm>() {
            Ok(q) => {
                *form = Box::into_raw(Box::new(SiQuadraticForm { form: q }));
                SiStatus::Ok
            }
            Err(e) => fail(SiStatus::from(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `form` must come from [`si_qform_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn si_qform_free(form: *mut SiQuadraticForm) {
    if !form.is_null() {
        drop(Box::from_raw(form));
    }
}

/// Dimension of the form, 0 for a null handle.
///
/// # Safety
/// `form` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn si_qform_dimension(form: *const SiQuadraticForm) -> usize {
    form.as_ref().map_or(0, |f| f.form.dim())
}

unsafe fn form_query(
    form: *const SiQuadraticForm,
    out: *mut bool,
    query: impl FnOnce(&RationalQuadraticForm) -> bool,
) -> SiStatus {
    guard(|| match (form.as_ref(), out.is_null()) {
        (Some(f), false) => {
            *out = query(&f.form);
            SiStatus::Ok
        }
        _ => fail(SiStatus::NullPointer, "null form or output"),
    })
}

/// Isotropy over the rationals.
///
/// # Safety
/// `form` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn si_qform_is_isotropic(form: *const SiQuadraticForm, out: *mut bool) -> SiStatus {
    form_query(form, out, |q| q.is_isotropic())
}

/// Whether the signed discriminant is a square.
///
/// # Safety
/// `form` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn si_qform_discriminant_trivial(form: *const SiQuadraticForm, out: *mut bool) -> SiStatus {
    form_query(form, out, |q| q.signed_discriminant().is_one())
}

/// Whether the Witt (Clifford) invariant is split.
///
/// # Safety
/// `form` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn si_qform_witt_trivial(form: *const SiQuadraticForm, out: *mut bool) -> SiStatus {
    form_query(form, out, |q| q.witt_invariant().is_trivial())
}

/// The Hilbert symbol `(a, b)_v` as +1 or -1. `place` is `"real"` or a
/// prime written in decimal.
///
/// # Safety
/// `place` must be nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn si_hilbert_symbol(a: i64, b: i64, place: *const c_char, out: *mut i8) -> SiStatus {
    guard(|| {
        if out.is_null() {
            return fail(SiStatus::NullPointer, "null output");
        }
        let place = match read_str(place) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let place: Place = match place.parse() {
            Ok(p) => p,
            Err(e) => return fail(SiStatus::from(&e), e.to_string()),
        };
        let a = BigRational::from_integer(BigInt::from(a));
        let b = BigRational::from_integer(BigInt::from(b));
        match hilbert_symbol(&a, &b, &place) {
            Ok(s) => {
                *out = s;
                SiStatus::Ok
            }
            Err(e) => fail(SiStatus::from(&e), e.to_string()),
        }
    })
}

/// Strong isotropy of `SL_m(D)/mu_d` with `ind(D) = ind_d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_classify_type_a(m: u64, ind_d: u64, d: u64, out: *mut bool) -> SiStatus {
    guard(|| {
        if out.is_null() {
            return fail(SiStatus::NullPointer, "null output");
        }
        match classify_simple(&SimpleGroupDescriptor::TypeAInner { m, ind_d, d }) {
            Ok(v) => {
                *out = v.strongly_isotropic;
                SiStatus::Ok
            }
            Err(e) => fail(SiStatus::from(&e), e.to_string()),
        }
    })
}
