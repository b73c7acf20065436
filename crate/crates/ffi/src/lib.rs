//! C ABI over the `overpartition` crate.
//!
//! Every function returns an [`OpStatus`]. Results come back through out
//! pointers. On a non-`OK` status the out pointer is left untouched and
//! [`op_last_error`] describes what went wrong on the calling thread.
//!
//! Strings handed out by this library must be released with
//! [`op_string_free`]. Handles have their own `*_free` functions. Passing
//! null to any free function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use overpartition::harness::{lookup_series, Status};
use overpartition::{lookup_class, Limits, MapId, Overpartition, Partition, VerificationReport};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    UnknownId = 3,
    Malformed = 4,
    NotInClass = 5,
    OutOfRange = 6,
    Failed = 7,
    Panic = 8,
}

/// Outcome of a verification run.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpVerdict {
    Pass = 0,
    Fail = 1,
    Flagged = 2,
}

/// Coefficients q^0..q^max_n of a registered series.
pub struct OpSeries {
    coeffs: Vec<BigInt>,
}

/// A finished verification report.
pub struct OpReport {
    report: VerificationReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Error(OpStatus, String);

type FfiResult<T> = Result<T, Error>;

fn set_last_error(message: &str) {
    let clean = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

/// Runs `body`, records any error and converts panics into `PANIC`.
fn guard<F>(body: F) -> OpStatus
where
    F: FnOnce() -> FfiResult<()> + UnwindSafe,
{
    match catch_unwind(body) {
        Ok(Ok(())) => {
            set_last_error("");
            OpStatus::Ok
        }
        Ok(Err(Error(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            OpStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Error(OpStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error(OpStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn check_out<T>(out: *mut T) -> FfiResult<()> {
    if out.is_null() {
        Err(Error(OpStatus::NullArgument, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings hold no NUL").into_raw()
}

/// Static version string, never freed.
#[no_mangle]
pub extern "C" fn op_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread. Empty after a success.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn op_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn op_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of members of weight `n` in the named class.
///
/// # Safety
/// `class_id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_class_count(class_id: *const c_char, n: u64, out: *mut u64) -> OpStatus {
    guard(|| {
        check_out(out)?;
        let id = read_str(class_id, "class_id")?;
        let class = lookup_class(id).ok_or_else(|| Error(OpStatus::UnknownId, format!("unknown class {id:?}")))?;
        *out = class.count(n);
        Ok(())
    })
}

/// Expands a registered series through q^max_n.
///
/// # Safety
/// `series_id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_series_new(series_id: *const c_char, max_n: u64, out: *mut *mut OpSeries) -> OpStatus {
    guard(|| {
        check_out(out)?;
        let id = read_str(series_id, "series_id")?;
        let side = lookup_series(id).ok_or_else(|| Error(OpStatus::UnknownId, format!("unknown series {id:?}")))?;
        let coeffs = side
            .values(max_n, &Limits::unbounded())
            .map_err(|e| Error(OpStatus::Failed, e.to_string()))?;
        *out = Box::into_raw(Box::new(OpSeries { coeffs }));
        Ok(())
    })
}

/// Number of stored coefficients, or 0 for a null handle.
///
/// # Safety
/// `series` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn op_series_len(series: *const OpSeries) -> u64 {
    series.as_ref().map_or(0, |s| s.coeffs.len() as u64)
}

unsafe fn series_coeff<'a>(series: *const OpSeries, n: u64) -> FfiResult<&'a BigInt> {
    let s = series
        .as_ref()
        .ok_or_else(|| Error(OpStatus::NullArgument, "series is null".into()))?;
    usize::try_from(n)
        .ok()
        .and_then(|i| s.coeffs.get(i))
        .ok_or_else(|| Error(OpStatus::OutOfRange, format!("q^{n} is beyond the expansion")))
}

/// Coefficient of q^n as a decimal string. Free it with `op_string_free`.
///
/// # Safety
/// `series` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_series_coeff_str(series: *const OpSeries, n: u64, out: *mut *mut c_char) -> OpStatus {
    guard(|| {
        check_out(out)?;
        *out = into_c_string(series_coeff(series, n)?.to_string());
        Ok(())
    })
}

/// Coefficient of q^n as an `int64_t`. Returns `OUT_OF_RANGE` if it does not fit.
///
/// # Safety
/// `series` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_series_coeff_i64(series: *const OpSeries, n: u64, out: *mut i64) -> OpStatus {
    guard(|| {
        check_out(out)?;
        let c = series_coeff(series, n)?;
        *out = c
            .to_i64()
            .ok_or_else(|| Error(OpStatus::OutOfRange, format!("coefficient of q^{n} exceeds int64")))?;
        Ok(())
    })
}

/// # Safety
/// `series` must be null or a handle from `op_series_new`, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn op_series_free(series: *mut OpSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Applies a bijection (or its inverse) to a partition written as
/// comma-separated parts, overlined parts suffixed with `~`.
///
/// # Safety
/// `map_id` and `input` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_bijection_apply(
    map_id: *const c_char,
    input: *const c_char,
    inverse: bool,
    out: *mut *mut c_char,
) -> OpStatus {
    guard(|| {
        check_out(out)?;
        let id = read_str(map_id, "map_id")?;
        let text = read_str(input, "input")?;
        let map: MapId = id
            .parse()
            .map_err(|_| Error(OpStatus::UnknownId, format!("unknown map {id:?}")))?;
        let malformed = |e: overpartition::PartitionError| Error(OpStatus::Malformed, e.to_string());
        let not_in_class = |e: overpartition::BijectionError| Error(OpStatus::NotInClass, e.to_string());
        let result = if inverse {
            let o: Overpartition = text.parse().map_err(malformed)?;
            map.inverse(&o).map_err(not_in_class)?.to_string()
        } else {
            let p: Partition = text.parse().map_err(malformed)?;
            map.forward(&p).map_err(not_in_class)?.to_string()
        };
        *out = into_c_string(result);
        Ok(())
    })
}

/// Verifies one registered identity through q^max_n with the default
/// enumeration caps. With `with_timing` false the report is deterministic.
///
/// # Safety
/// `identity_id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_verify(
    identity_id: *const c_char,
    max_n: u64,
    with_timing: bool,
    out: *mut *mut OpReport,
) -> OpStatus {
    guard(|| {
        check_out(out)?;
        let id = read_str(identity_id, "identity_id")?;
        let report = overpartition::verify(id, max_n, &Limits::default())
            .map_err(|e| Error(OpStatus::UnknownId, e.to_string()))?;
        let report = if with_timing { report } else { report.without_timing() };
        *out = Box::into_raw(Box::new(OpReport { report }));
        Ok(())
    })
}

/// Verdict of a report. A null handle reads as `FAIL`.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn op_report_verdict(report: *const OpReport) -> OpVerdict {
    match report.as_ref().map(|r| r.report.status) {
        Some(Status::Pass) => OpVerdict::Pass,
        Some(Status::Flagged) => OpVerdict::Flagged,
        Some(Status::Fail) | None => OpVerdict::Fail,
    }
}

/// The report as one JSON object. Free it with `op_string_free`.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn op_report_json(report: *const OpReport, out: *mut *mut c_char) -> OpStatus {
    guard(|| {
        check_out(out)?;
        let r = report
            .as_ref()
            .ok_or_else(|| Error(OpStatus::NullArgument, "report is null".into()))?;
        *out = into_c_string(r.report.to_json());
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from `op_verify`, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn op_report_free(report: *mut OpReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
