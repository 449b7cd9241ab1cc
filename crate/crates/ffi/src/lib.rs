//! C interface to `dunkl-core`.
//!
//! Every function returns a [`DunklStatus`]. On failure the message is kept
//! per thread and can be read with [`dunkl_last_error`]. Objects are opaque
//! handles released with the matching `_free` function; strings returned
//! through out-pointers are released with [`dunkl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dunkl_core::algebra::{Blade, ParameterSet, SpinorPolynomial, Subset};
use dunkl_core::bi_algebra::verify_bi_relation;
use dunkl_core::checks::Status;
use dunkl_core::monogenics::{basis_psi, BasisLabel, MultiIndex};
use dunkl_core::operators::{Evaluator, Realization, RealizationKind};
use dunkl_core::runner::{run_suite, KCaps, MuSpec, RealizationChoice, RunConfig, Suite};
use dunkl_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DunklStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Computation = 3,
    Io = 4,
    Panic = 5,
}

/// Realization selector for [`dunkl_verify_bi_relation`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DunklRealization {
    Clifford = 0,
    Scalar = 1,
}

/// Opaque parameter set.
pub struct DunklParams(ParameterSet);

/// Opaque Clifford-valued polynomial.
pub struct DunklPoly(SpinorPolynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DunklStatus {
    match e {
        Error::Io(_) => DunklStatus::Io,
        Error::InvalidParameters(_)
        | Error::InvalidMultiIndex(_)
        | Error::InvalidConfig(_)
        | Error::Parse(_)
        | Error::DimensionMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::UnsupportedDimension(_) => DunklStatus::InvalidArgument,
        _ => DunklStatus::Computation,
    }
}

/// Runs `f`, mapping errors and panics to a status and the last-error slot.
fn guard(f: impl FnOnce() -> Result<(), (DunklStatus, String)>) -> DunklStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DunklStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DunklStatus::Panic
        }
    }
}

fn core<T>(r: dunkl_core::Result<T>) -> Result<T, (DunklStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (DunklStatus, String) {
    (DunklStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (DunklStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (DunklStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dunkl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses `p/q,p/q,...` into a new parameter set.
///
/// # Safety
/// `mu` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dunkl_params_new(mu: *const c_char, out: *mut *mut DunklParams) -> DunklStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(mu, "mu")?;
        let items: Vec<&str> = text.split(',').map(str::trim).collect();
        let params = core(ParameterSet::from_strs(&items))?;
        *out = Box::into_raw(Box::new(DunklParams(params)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from [`dunkl_params_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn dunkl_params_free(p: *mut DunklParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Dimension of a parameter set, 0 for null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn dunkl_params_dim(p: *const DunklParams) -> usize {
    p.as_ref().map_or(0, |p| p.0.n())
}

/// The CK-tower basis element for the multi-index `j[0..len]` (length
/// `n - 1`) and the blade with bitmask `s_mask` (bit `i-1` for `e_i`).
///
/// # Safety
/// `params` must be a live handle, `j` must point to `len` integers and
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dunkl_basis_psi(
    params: *const DunklParams,
    j: *const u32,
    len: usize,
    s_mask: u32,
    out: *mut *mut DunklPoly,
) -> DunklStatus {
    guard(|| {
        let params = params.as_ref().ok_or_else(|| null("params"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if j.is_null() && len > 0 {
            return Err(null("j"));
        }
        let entries = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(j, len).to_vec() };
        let label = BasisLabel::new(core(MultiIndex::new(entries))?, Blade::from_mask(s_mask));
        let p = core(basis_psi(&params.0, &label))?;
        *out = Box::into_raw(Box::new(DunklPoly(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn dunkl_poly_free(p: *mut DunklPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text form, one `a1,...,an | i1 ... | num/den` line per term.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dunkl_poly_to_string(p: *const DunklPoly, out: *mut *mut c_char) -> DunklStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string(p.0.to_canonical_string());
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn dunkl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks the Bannai-Ito anticommutation relation for the subsets with
/// bitmasks `a_mask`, `b_mask` on polynomials of degree `<= k_max`.
/// `*passed` is 1 when the relation holds and 0 otherwise.
///
/// # Safety
/// `params` must be a live handle and `passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dunkl_verify_bi_relation(
    params: *const DunklParams,
    realization: DunklRealization,
    a_mask: u32,
    b_mask: u32,
    k_max: u32,
    passed: *mut i32,
) -> DunklStatus {
    guard(|| {
        let params = params.as_ref().ok_or_else(|| null("params"))?;
        if passed.is_null() {
            return Err(null("passed"));
        }
        let n = params.0.n();
        let (a, b) = (Subset::from_mask(a_mask), Subset::from_mask(b_mask));
        if !a.fits(n) || !b.fits(n) {
            return Err((DunklStatus::InvalidArgument, format!("subset outside 1..={n}")));
        }
        let kind = match realization {
            DunklRealization::Clifford => RealizationKind::Clifford,
            DunklRealization::Scalar => RealizationKind::Scalar,
        };
        let real = Realization::new(kind, params.0.clone());
        let row = verify_bi_relation(&mut Evaluator::new(), &real, a, b, k_max);
        if row.status == Status::Error {
            return Err((DunklStatus::Computation, row.detail.unwrap_or_default()));
        }
        *passed = row.passed() as i32;
        Ok(())
    })
}

/// Runs the verification suites and returns the JSON report.
///
/// `mu` is `p/q,...` or `random:<seed>`; `suites` is a comma separated
/// list or null for all; `realization` is `clifford`, `scalar`, `both` or
/// null for both; `k_max` of -1 keeps the per-dimension defaults.
/// `*all_passed` is set to 1 when every row passed.
///
/// # Safety
/// String arguments must be valid C strings or null where allowed;
/// `out_json` and `all_passed` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dunkl_run_suite_json(
    n: usize,
    mu: *const c_char,
    k_max: i32,
    suites: *const c_char,
    realization: *const c_char,
    out_json: *mut *mut c_char,
    all_passed: *mut i32,
) -> DunklStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        if all_passed.is_null() {
            return Err(null("all_passed"));
        }
        let mut config = RunConfig::new(n);
        config.mu = core(read_str(mu, "mu")?.parse::<MuSpec>())?;
        if k_max >= 0 {
            config.k_caps = KCaps::uniform(k_max as u32);
        }
        if !suites.is_null() {
            let list = read_str(suites, "suites")?;
            config.suites = core(list.split(',').map(|s| s.parse::<Suite>()).collect())?;
        }
        if !realization.is_null() {
            config.realization = core(read_str(realization, "realization")?.parse::<RealizationChoice>())?;
        }
        let report = core(run_suite(&config))?;
        *all_passed = report.all_passed() as i32;
        *out_json = to_c_string(report.to_json());
        Ok(())
    })
}
