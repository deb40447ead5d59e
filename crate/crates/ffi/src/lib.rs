//! C ABI over `structctl`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns
//! an [`ScStatus`]; on failure [`sc_last_error`] describes the problem for the
//! calling thread. Strings returned through `char **` are owned by the caller
//! and released with [`sc_string_free`]. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use structctl::cli::exit_status;
use structctl::io::{CertificateFile, Report, SystemFile};
use structctl::{
    certificate_search, compose_parallel, kalman_check, pbh_check, verify_certificate, Certificate,
    CheckOptions, Error, RowPartition, Status, SystemDef, Verdict,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A file could not be read or written.
    Io = 3,
    /// Malformed JSON, expression or parameter list.
    Parse = 4,
    /// Inconsistent dimensions, labels, partitions or spaces.
    Shape = 5,
    /// A configured enumeration limit was reached.
    Limit = 6,
    /// Division by zero or evaluation at a pole.
    Arithmetic = 7,
    /// An internal panic was caught at the boundary.
    Panic = 8,
}

/// Controllability verdict.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScVerdict {
    Controllable = 0,
    NotControllable = 1,
    Certified = 2,
    Inconclusive = 3,
}

/// Decision procedure for [`sc_check`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScMethod {
    Pbh = 0,
    Kalman = 1,
    Matroid = 2,
}

/// A parsed system together with the row partition from its file, if any.
pub struct ScSystem {
    sys: SystemDef,
    partition: Option<RowPartition>,
}

/// A certificate tied to the system it was built for.
pub struct ScCertificate {
    system: String,
    cert: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(ScStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Io { .. } => ScStatus::Io,
            Error::Parse(_) | Error::Json(_) | Error::InvalidFile(_) | Error::InvalidSpace(_) => {
                ScStatus::Parse
            }
            Error::LimitExceeded(_) => ScStatus::Limit,
            Error::Pole | Error::DivisionByZero | Error::PointArity { .. } => ScStatus::Arithmetic,
            _ => ScStatus::Shape,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(ScStatus::NullArgument, format!("{what} is null"))
}

/// Runs `f` behind the panic barrier and records any failure.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ScStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("internal error: {msg}"));
            ScStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ScStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(ScStatus::Parse, "output contains a NUL byte".into()))
}

fn verdict_code(status: Status) -> ScVerdict {
    match status {
        Status::Controllable => ScVerdict::Controllable,
        Status::NotControllable => ScVerdict::NotControllable,
        Status::Certified => ScVerdict::Certified,
        Status::Inconclusive => ScVerdict::Inconclusive,
    }
}

fn system_from_file(file: SystemFile, origin: &str) -> Result<ScSystem, Failure> {
    let sys = file.to_system(origin)?;
    let partition = file.row_partition(sys.n())?;
    Ok(ScSystem { sys, partition })
}

fn all_verdicts(h: &ScSystem) -> Result<Vec<Verdict>, Failure> {
    let opts = CheckOptions::default();
    Ok(vec![
        pbh_check(&h.sys, &opts),
        kalman_check(&h.sys, &opts),
        certificate_search(&h.sys, h.partition.as_ref(), &opts)?,
    ])
}

/// Message for the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a system document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_system_from_json(json: *const c_char, out: *mut *mut ScSystem) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let text = str_arg(json, "json")?;
        let h = system_from_file(SystemFile::from_json(text)?, "<json>")?;
        *out = Box::into_raw(Box::new(h));
        Ok(())
    })
}

/// Loads a system document from a file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_system_load(path: *const c_char, out: *mut *mut ScSystem) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let path = str_arg(path, "path")?;
        let h = system_from_file(SystemFile::load(Path::new(path))?, path)?;
        *out = Box::into_raw(Box::new(h));
        Ok(())
    })
}

/// Serializes a system back to a document.
///
/// # Safety
/// `sys` must come from this library; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_system_to_json(sys: *const ScSystem, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let h = ref_arg(sys, "sys")?;
        let mut file = SystemFile::from_system(&h.sys);
        file.partition = h.partition.as_ref().map(RowPartition::one_based);
        *out = to_c_string(file.to_json())?;
        Ok(())
    })
}

/// Releases a system; null is ignored.
///
/// # Safety
/// `sys` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_system_free(sys: *mut ScSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// State and input dimensions.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_system_dims(sys: *const ScSystem, n: *mut usize, m: *mut usize) -> ScStatus {
    guard(|| {
        let h = ref_arg(sys, "sys")?;
        *out_arg(n, "n")? = h.sys.n();
        *out_arg(m, "m")? = h.sys.m();
        Ok(())
    })
}

/// Runs one decision procedure with default options. The matroid method uses
/// the partition from the system document, or singletons.
///
/// # Safety
/// `sys` must come from this library; `verdict` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_check(sys: *const ScSystem, method: ScMethod, verdict: *mut ScVerdict) -> ScStatus {
    guard(|| {
        let h = ref_arg(sys, "sys")?;
        let out = out_arg(verdict, "verdict")?;
        let opts = CheckOptions::default();
        let v = match method {
            ScMethod::Pbh => pbh_check(&h.sys, &opts),
            ScMethod::Kalman => kalman_check(&h.sys, &opts),
            ScMethod::Matroid => certificate_search(&h.sys, h.partition.as_ref(), &opts)?,
        };
        *out = verdict_code(v.status);
        Ok(())
    })
}

/// Runs every procedure and returns the JSON report also printed by
/// `structctl check --json`.
///
/// # Safety
/// `sys` must come from this library; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_report_json(sys: *const ScSystem, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let h = ref_arg(sys, "sys")?;
        let verdicts = all_verdicts(h)?;
        let report = Report::new(&h.sys, &verdicts, exit_status(&verdicts));
        *out = to_c_string(report.to_json())?;
        Ok(())
    })
}

/// Searches for a certificate. `partition` uses the `1,2;3,4` syntax and may
/// be null to use the document partition or singletons. On success
/// `verdict` is set and `out` receives a certificate, or null when none was
/// found.
///
/// # Safety
/// `sys` must come from this library; `partition` must be null or a
/// NUL-terminated string; `verdict` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_search(
    sys: *const ScSystem,
    partition: *const c_char,
    verdict: *mut ScVerdict,
    out: *mut *mut ScCertificate,
) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let verdict = out_arg(verdict, "verdict")?;
        let h = ref_arg(sys, "sys")?;
        let part = if partition.is_null() {
            h.partition.clone()
        } else {
            Some(RowPartition::parse(str_arg(partition, "partition")?, h.sys.n())?)
        };
        let v = certificate_search(&h.sys, part.as_ref(), &CheckOptions::default())?;
        *verdict = verdict_code(v.status);
        if let Some(cert) = v.certificate() {
            *out = Box::into_raw(Box::new(ScCertificate {
                system: h.sys.name().to_string(),
                cert: cert.clone(),
            }));
        }
        Ok(())
    })
}

/// Serializes a certificate document.
///
/// # Safety
/// `cert` must come from this library; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_to_json(cert: *const ScCertificate, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let c = ref_arg(cert, "cert")?;
        *out = to_c_string(CertificateFile::from_certificate(&c.system, &c.cert).to_json())?;
        Ok(())
    })
}

/// Parses a certificate document against the system it refers to.
///
/// # Safety
/// `sys` must come from this library; `json` must be a NUL-terminated
/// string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_from_json(
    sys: *const ScSystem,
    json: *const c_char,
    out: *mut *mut ScCertificate,
) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let h = ref_arg(sys, "sys")?;
        let file = CertificateFile::from_json(str_arg(json, "json")?)?;
        let cert = file.to_certificate(&h.sys, "<json>")?;
        *out = Box::into_raw(Box::new(ScCertificate {
            system: file.system,
            cert,
        }));
        Ok(())
    })
}

/// Releases a certificate; null is ignored.
///
/// # Safety
/// `cert` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_free(cert: *mut ScCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Recomputes every clause of a certificate. `valid` is set to whether all
/// hold; the failed clauses, if any, are left in [`sc_last_error`] as
/// newline-separated text even though the call itself succeeds.
///
/// # Safety
/// `sys` and `cert` must come from this library; `valid` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_verify(sys: *const ScSystem, cert: *const ScCertificate, valid: *mut bool) -> ScStatus {
    let mut report = String::new();
    let status = guard(|| {
        let h = ref_arg(sys, "sys")?;
        let c = ref_arg(cert, "cert")?;
        let out = out_arg(valid, "valid")?;
        let check = verify_certificate(&h.sys, &c.cert)?;
        *out = check.is_valid();
        report = check
            .failures
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n");
        Ok(())
    });
    if status == ScStatus::Ok {
        set_error(&report);
    }
    status
}

/// Parallel composition of `count` systems over the same parameters and with
/// the same number of inputs.
///
/// # Safety
/// `systems` must point to `count` handles from this library; `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_compose_parallel(
    systems: *const *const ScSystem,
    count: usize,
    out: *mut *mut ScSystem,
) -> ScStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        if systems.is_null() {
            return Err(null("systems"));
        }
        let handles = std::slice::from_raw_parts(systems, count);
        let subs = handles
            .iter()
            .enumerate()
            .map(|(i, &p)| ref_arg(p, &format!("systems[{i}]")).map(|h| h.sys.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let sys = compose_parallel(&subs)?;
        *out = Box::into_raw(Box::new(ScSystem { sys, partition: None }));
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
