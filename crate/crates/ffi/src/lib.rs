//! C ABI for `ifjs`.
//!
//! Every fallible function returns an [`IfjsStatus`] and writes its result
//! through an out-pointer. On failure a description is available from
//! [`ifjs_last_error`] on the same thread. Handles are opaque and must be
//! released with their `_free` function.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ifjs::{Dataset, Error, Ifs, Ifv, MeasureDescriptor, WeightVector};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IfjsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UniverseMismatch = 3,
    UnknownName = 4,
    ParseError = 5,
    ValidationError = 6,
    IoError = 7,
    Internal = 8,
    Panic = 9,
}

/// An intuitionistic fuzzy set.
pub struct IfjsIfs(Ifs);

/// A loaded dataset of named sets.
pub struct IfjsDataset(Dataset);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> IfjsStatus {
    match e {
        Error::OutOfRange { .. }
        | Error::SimplexViolation { .. }
        | Error::EmptyUniverse
        | Error::DuplicateLabel(_)
        | Error::LengthMismatch { .. }
        | Error::InvalidWeights(_)
        | Error::WeightLengthMismatch { .. }
        | Error::NegativeInput { .. }
        | Error::InvalidLambda(_)
        | Error::InvalidGamma(_)
        | Error::MeasureKind { .. }
        | Error::InvalidConfig(_) => IfjsStatus::InvalidArgument,
        Error::UniverseMismatch(_) => IfjsStatus::UniverseMismatch,
        Error::UnknownMeasure(_) | Error::UnknownScenario(_) | Error::UnknownFamily(_) => {
            IfjsStatus::UnknownName
        }
        Error::Parse { .. } => IfjsStatus::ParseError,
        Error::Validation { .. } => IfjsStatus::ValidationError,
        Error::Io(_) => IfjsStatus::IoError,
        Error::InternalConsistency(_) => IfjsStatus::Internal,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
    Utf8(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard<F>(f: F) -> IfjsStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IfjsStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(&format!("{what} is null"));
            IfjsStatus::NullPointer
        }
        Ok(Err(Failure::Utf8(what))) => {
            set_error(&format!("{what} is not valid UTF-8"));
            IfjsStatus::InvalidArgument
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            IfjsStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or(Failure::Null(what))
}

unsafe fn string<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8(what))
}

unsafe fn slice<'a>(p: *const f64, n: usize, what: &'static str) -> Result<&'a [f64], Failure> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

/// Weights of length `n`, or uniform when `weights` is null.
unsafe fn weights(p: *const f64, n: usize) -> Result<WeightVector, Failure> {
    if p.is_null() {
        Ok(WeightVector::uniform(n))
    } else {
        Ok(WeightVector::new(slice(p, n, "weights")?.to_vec())?)
    }
}

fn descriptor(name: &str, lambda: f64, gamma: f64) -> Result<MeasureDescriptor, Error> {
    let mut params = BTreeMap::new();
    if !lambda.is_nan() {
        params.insert("lambda".to_owned(), lambda);
    }
    if !gamma.is_nan() {
        params.insert("gamma".to_owned(), gamma);
    }
    MeasureDescriptor::lookup(name, &params)
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ifjs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a set from `n` membership and non-membership degrees.
///
/// # Safety
/// `mu` and `nu` must point to `n` doubles; the out-pointer must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_ifs_new(
    mu: *const f64,
    nu: *const f64,
    n: usize,
    out_set: *mut *mut IfjsIfs,
) -> IfjsStatus {
    guard(|| {
        let slot = out(out_set, "out")?;
        let (mu, nu) = (slice(mu, n, "mu")?, slice(nu, n, "nu")?);
        let values = mu
            .iter()
            .zip(nu)
            .map(|(m, v)| Ifv::new(*m, *v))
            .collect::<Result<Vec<_>, _>>()?;
        *slot = Box::into_raw(Box::new(IfjsIfs(Ifs::from_values(values)?)));
        Ok(())
    })
}

/// # Safety
/// `set` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ifjs_ifs_free(set: *mut IfjsIfs) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ifjs_ifs_len(set: *const IfjsIfs) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// Copies element `index` into `mu` and `nu`.
///
/// # Safety
/// `set` must be a live handle; `mu` and `nu` writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_ifs_get(
    set: *const IfjsIfs,
    index: usize,
    mu: *mut f64,
    nu: *mut f64,
) -> IfjsStatus {
    guard(|| {
        let s = deref(set, "set")?;
        let (mu, nu) = (out(mu, "mu")?, out(nu, "nu")?);
        let a = s.0.values().get(index).ok_or_else(|| {
            Error::InvalidConfig(format!(
                "index {index} out of range for {} elements",
                s.0.len()
            ))
        })?;
        *mu = a.mu();
        *nu = a.nu();
        Ok(())
    })
}

/// Normalized Jensen-Shannon distance between two values.
///
/// # Safety
/// the out-pointer must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_js_norm(
    mu_a: f64,
    nu_a: f64,
    mu_b: f64,
    nu_b: f64,
    out_value: *mut f64,
) -> IfjsStatus {
    guard(|| {
        let slot = out(out_value, "out")?;
        *slot = ifjs::js_norm(&Ifv::new(mu_a, nu_a)?, &Ifv::new(mu_b, nu_b)?);
        Ok(())
    })
}

/// Entropy of one value.
///
/// # Safety
/// the out-pointer must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_entropy_ifv(mu: f64, nu: f64, out_value: *mut f64) -> IfjsStatus {
    guard(|| {
        let slot = out(out_value, "out")?;
        *slot = ifjs::entropy_ifv(&Ifv::new(mu, nu)?);
        Ok(())
    })
}

/// Weighted entropy of a set; null `weights` means uniform.
///
/// # Safety
/// `set` must be a live handle; `weights` null or `len(set)` doubles.
#[no_mangle]
pub unsafe extern "C" fn ifjs_entropy_ifs(
    set: *const IfjsIfs,
    weights_ptr: *const f64,
    out_value: *mut f64,
) -> IfjsStatus {
    guard(|| {
        let s = deref(set, "set")?;
        let slot = out(out_value, "out")?;
        let w = weights(weights_ptr, s.0.len())?;
        *slot = ifjs::entropy_ifs(&s.0, &w)?;
        Ok(())
    })
}

/// Evaluates a registered measure (`wu`, `wu-lambda`, `xiao`, `yc`,
/// `jgamma` or a `sim-` variant) on two sets. Pass NaN for unused
/// `lambda` / `gamma`, and null `weights` for uniform.
///
/// # Safety
/// Handles must be live; `measure` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ifjs_measure(
    measure: *const c_char,
    lambda: f64,
    gamma: f64,
    a: *const IfjsIfs,
    b: *const IfjsIfs,
    weights_ptr: *const f64,
    out_value: *mut f64,
) -> IfjsStatus {
    guard(|| {
        let m = descriptor(string(measure, "measure")?, lambda, gamma)?;
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        let slot = out(out_value, "out")?;
        let w = weights(weights_ptr, a.0.len())?;
        *slot = m.evaluate(&a.0, &b.0, &w)?;
        Ok(())
    })
}

/// Loads a JSON dataset file or a built-in dataset by name.
///
/// # Safety
/// `source` must be a NUL-terminated string; the out-pointer writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_dataset_load(
    source: *const c_char,
    out_dataset: *mut *mut IfjsDataset,
) -> IfjsStatus {
    guard(|| {
        let slot = out(out_dataset, "out")?;
        let d = Dataset::resolve(string(source, "source")?)?;
        *slot = Box::into_raw(Box::new(IfjsDataset(d)));
        Ok(())
    })
}

/// # Safety
/// `dataset` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ifjs_dataset_free(dataset: *mut IfjsDataset) {
    if !dataset.is_null() {
        drop(Box::from_raw(dataset));
    }
}

/// Number of sets, or 0 for a null handle.
///
/// # Safety
/// `dataset` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ifjs_dataset_len(dataset: *const IfjsDataset) -> usize {
    dataset.as_ref().map_or(0, |d| d.0.sets().len())
}

/// Copies the named set into a new handle owned by the caller.
///
/// # Safety
/// `dataset` must be live; `name` NUL-terminated; the out-pointer writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_dataset_get(
    dataset: *const IfjsDataset,
    name: *const c_char,
    out_set: *mut *mut IfjsIfs,
) -> IfjsStatus {
    guard(|| {
        let d = deref(dataset, "dataset")?;
        let slot = out(out_set, "out")?;
        let s = d.0.get(string(name, "name")?)?.clone();
        *slot = Box::into_raw(Box::new(IfjsIfs(s)));
        Ok(())
    })
}

/// Runs a built-in scenario; `passed` receives 1 or 0.
///
/// # Safety
/// `id` must be NUL-terminated; `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn ifjs_run_scenario(id: *const c_char, passed: *mut c_int) -> IfjsStatus {
    guard(|| {
        let slot = out(passed, "passed")?;
        let report = ifjs::repro::run_scenario(string(id, "id")?)?;
        *slot = c_int::from(report.passed());
        Ok(())
    })
}
