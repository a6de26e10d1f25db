//! C ABI for the chebdiff library.
//!
//! Conventions, uniform across the surface:
//! - Constructors hand back opaque handles through out-pointers; every
//!   handle is released with its matching `*_free` function.
//! - Every fallible function returns a [`ChebdiffStatus`]; out-pointers are
//!   only written on `Ok`.
//! - Strings returned through `char **` out-pointers are NUL-terminated
//!   UTF-8 allocated here; release them with [`chebdiff_string_free`].
//! - Enum parameters must carry values of the declared enums; anything else
//!   is undefined behavior, as usual for C enums.
//! - Panics never unwind across the boundary; they surface as
//!   [`ChebdiffStatus::Panic`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chebdiff::{
    clenshaw_eval, derivative_oracle, expansion_to_monomial, inner_sum_pair, monomial_power_to_u,
    monomial_to_u, parse_rational, run_bench, t_derivative_explicit, u_derivative_explicit,
    u_derivative_triple_sum, verify_inner_sum, verify_inversion, verify_t_explicit,
    verify_triple_sum, verify_u_explicit, ChebBasis, ChebExpansion, DiffMatrix, Error,
    MonomialPoly, VerificationReport,
};

/// Status code returned by every fallible function in this ABI.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebdiffStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// An argument was outside the documented domain of the operation.
    InvalidArgument = 2,
    /// Operator and expansion live in different Chebyshev families.
    BasisMismatch = 3,
    /// An expansion's degree exceeds the operator's bound.
    DegreeOverflow = 4,
    /// A string argument was not valid UTF-8 or did not parse.
    ParseError = 5,
    /// The two derivative paths disagreed during a bench run.
    BenchMismatch = 6,
    /// An internal panic was caught at the boundary.
    Panic = 7,
}

/// Chebyshev family selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebdiffBasis {
    /// First kind (T).
    FirstKind = 0,
    /// Second kind (U).
    SecondKind = 1,
}

impl From<ChebdiffBasis> for ChebBasis {
    fn from(basis: ChebdiffBasis) -> ChebBasis {
        match basis {
            ChebdiffBasis::FirstKind => ChebBasis::FirstKind,
            ChebdiffBasis::SecondKind => ChebBasis::SecondKind,
        }
    }
}

impl From<ChebBasis> for ChebdiffBasis {
    fn from(basis: ChebBasis) -> ChebdiffBasis {
        match basis {
            ChebBasis::FirstKind => ChebdiffBasis::FirstKind,
            ChebBasis::SecondKind => ChebdiffBasis::SecondKind,
        }
    }
}

/// Verification sweep selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebdiffSuite {
    UExplicit = 0,
    TExplicit = 1,
    Inversion = 2,
    InnerSum = 3,
    TripleSum = 4,
}

/// Opaque Chebyshev-basis expansion.
pub struct ChebdiffExpansion(ChebExpansion);

/// Opaque monomial-basis polynomial.
pub struct ChebdiffMonomial(MonomialPoly);

/// Opaque differentiation matrix.
pub struct ChebdiffMatrix(DiffMatrix);

/// Opaque verification report.
pub struct ChebdiffReport(VerificationReport);

fn guard<F: FnOnce() -> ChebdiffStatus>(f: F) -> ChebdiffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => ChebdiffStatus::Panic,
    }
}

fn status_of(error: &Error) -> ChebdiffStatus {
    match error {
        Error::InvalidArgument(_) => ChebdiffStatus::InvalidArgument,
        Error::BasisMismatch { .. } => ChebdiffStatus::BasisMismatch,
        Error::DegreeOverflow { .. } => ChebdiffStatus::DegreeOverflow,
        Error::ParseRational(_) | Error::ParseDegree(_) | Error::ParseBasis(_) => {
            ChebdiffStatus::ParseError
        }
        Error::BenchMismatch { .. } => ChebdiffStatus::BenchMismatch,
    }
}

/// Write a freshly boxed handle through an out-pointer.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> ChebdiffStatus {
    if out.is_null() {
        return ChebdiffStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    ChebdiffStatus::Ok
}

/// Write an owned NUL-terminated copy of `s` through an out-pointer.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> ChebdiffStatus {
    if out.is_null() {
        return ChebdiffStatus::NullPointer;
    }
    // None of this library's payloads (JSON, CSV, decimal rationals) can
    // contain interior NULs.
    match CString::new(s) {
        Ok(owned) => {
            unsafe { *out = owned.into_raw() };
            ChebdiffStatus::Ok
        }
        Err(_) => ChebdiffStatus::InvalidArgument,
    }
}

/// Borrow a UTF-8 C string for the duration of a call.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, ChebdiffStatus> {
    if ptr.is_null() {
        return Err(ChebdiffStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| ChebdiffStatus::ParseError)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("canonical forms always serialize")
}

/// Library version as a static NUL-terminated string; do NOT free it.
#[no_mangle]
pub extern "C" fn chebdiff_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// s-th derivative of U_n as a U-basis expansion (closed form).
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_u_derivative(
    n: usize,
    s: usize,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffExpansion(u_derivative_explicit(n, s))) })
}

/// s-th derivative of T_n as a T-basis expansion (closed form).
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_t_derivative(
    n: usize,
    s: usize,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffExpansion(t_derivative_explicit(n, s))) })
}

/// s-th derivative of U_n from the unsimplified double sum; same value as
/// [`chebdiff_u_derivative`], quadratically slower, kept as a cross-check.
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_u_derivative_triple_sum(
    n: usize,
    s: usize,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffExpansion(u_derivative_triple_sum(n, s))) })
}

/// s-th derivative of the degree-n basis polynomial by repeated monomial
/// power-rule steps; the baseline the closed forms are verified against.
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_derivative_oracle(
    basis: ChebdiffBasis,
    n: usize,
    s: usize,
    out: *mut *mut ChebdiffMonomial,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffMonomial(derivative_oracle(n, s, basis.into()))) })
}

/// Classical monomial form of T_n or U_n.
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_basis_monomial(
    basis: ChebdiffBasis,
    n: usize,
    out: *mut *mut ChebdiffMonomial,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffMonomial(ChebBasis::from(basis).monomial(n))) })
}

/// U-basis expansion of the single power x^power.
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_power_to_u(
    power: usize,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffExpansion(monomial_power_to_u(power))) })
}

/// U-basis expansion of an arbitrary monomial polynomial.
///
/// # Safety
/// `poly` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_monomial_to_u(
    poly: *const ChebdiffMonomial,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| {
        let Some(poly) = (unsafe { poly.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_handle(out, ChebdiffExpansion(monomial_to_u(&poly.0))) }
    })
}

/// Monomial form of an expansion.
///
/// # Safety
/// `expansion` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_to_monomial(
    expansion: *const ChebdiffExpansion,
    out: *mut *mut ChebdiffMonomial,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_handle(out, ChebdiffMonomial(expansion_to_monomial(&expansion.0))) }
    })
}

/// Family an expansion lives in.
///
/// # Safety
/// `expansion` must be a live handle from this library; `out` must point to
/// writable memory for one `ChebdiffBasis`.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_basis(
    expansion: *const ChebdiffExpansion,
    out: *mut ChebdiffBasis,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        if out.is_null() {
            return ChebdiffStatus::NullPointer;
        }
        unsafe { *out = expansion.0.basis().into() };
        ChebdiffStatus::Ok
    })
}

/// Number of stored (nonzero) terms in an expansion.
///
/// # Safety
/// `expansion` must be a live handle from this library; `out` must point to
/// writable memory for one `size_t`.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_num_terms(
    expansion: *const ChebdiffExpansion,
    out: *mut usize,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        if out.is_null() {
            return ChebdiffStatus::NullPointer;
        }
        unsafe { *out = expansion.0.num_terms() };
        ChebdiffStatus::Ok
    })
}

/// Highest stored degree of an expansion; -1 for the zero expansion.
///
/// # Safety
/// `expansion` must be a live handle from this library; `out` must point to
/// writable memory for one `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_degree(
    expansion: *const ChebdiffExpansion,
    out: *mut i64,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        if out.is_null() {
            return ChebdiffStatus::NullPointer;
        }
        unsafe { *out = expansion.0.degree().map_or(-1, |d| d as i64) };
        ChebdiffStatus::Ok
    })
}

/// Coefficient of the degree-n basis polynomial as a lowest-terms rational
/// string ("0" when absent).
///
/// # Safety
/// `expansion` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_coeff(
    expansion: *const ChebdiffExpansion,
    degree: usize,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_string(out, expansion.0.coeff(degree).to_string()) }
    })
}

/// Exact evaluation of an expansion at a rational point given as "p" or
/// "p/q"; the result is a lowest-terms rational string.
///
/// # Safety
/// `expansion` must be a live handle from this library; `at` must be a
/// NUL-terminated string; `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_eval(
    expansion: *const ChebdiffExpansion,
    at: *const c_char,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        let at = match unsafe { read_str(at) } {
            Ok(text) => text,
            Err(status) => return status,
        };
        let x = match parse_rational(at) {
            Ok(x) => x,
            Err(e) => return status_of(&e),
        };
        unsafe { write_string(out, clenshaw_eval(&expansion.0, &x).to_string()) }
    })
}

/// Serialize an expansion to its canonical JSON line.
///
/// # Safety
/// `expansion` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_to_json(
    expansion: *const ChebdiffExpansion,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(expansion) = (unsafe { expansion.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_string(out, to_json(&expansion.0)) }
    })
}

/// Parse an expansion from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must point to writable
/// memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_from_json(
    json: *const c_char,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| {
        let json = match unsafe { read_str(json) } {
            Ok(text) => text,
            Err(status) => return status,
        };
        match serde_json::from_str::<ChebExpansion>(json) {
            Ok(expansion) => unsafe { write_handle(out, ChebdiffExpansion(expansion)) },
            Err(_) => ChebdiffStatus::ParseError,
        }
    })
}

/// Exact evaluation of a monomial polynomial at "p" or "p/q".
///
/// # Safety
/// `poly` must be a live handle from this library; `at` must be a
/// NUL-terminated string; `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_monomial_eval(
    poly: *const ChebdiffMonomial,
    at: *const c_char,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(poly) = (unsafe { poly.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        let at = match unsafe { read_str(at) } {
            Ok(text) => text,
            Err(status) => return status,
        };
        let x = match parse_rational(at) {
            Ok(x) => x,
            Err(e) => return status_of(&e),
        };
        unsafe { write_string(out, poly.0.eval(&x).to_string()) }
    })
}

/// Serialize a monomial polynomial to its canonical JSON line.
///
/// # Safety
/// `poly` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_monomial_to_json(
    poly: *const ChebdiffMonomial,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(poly) = (unsafe { poly.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_string(out, to_json(&poly.0)) }
    })
}

/// Parse a monomial polynomial from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must point to writable
/// memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_monomial_from_json(
    json: *const c_char,
    out: *mut *mut ChebdiffMonomial,
) -> ChebdiffStatus {
    guard(|| {
        let json = match unsafe { read_str(json) } {
            Ok(text) => text,
            Err(status) => return status,
        };
        match serde_json::from_str::<MonomialPoly>(json) {
            Ok(poly) => unsafe { write_handle(out, ChebdiffMonomial(poly)) },
            Err(_) => ChebdiffStatus::ParseError,
        }
    })
}

/// Assemble the (n_max+1) x (n_max+1) differentiation matrix of order s.
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_diff_matrix(
    basis: ChebdiffBasis,
    s: usize,
    n_max: usize,
    out: *mut *mut ChebdiffMatrix,
) -> ChebdiffStatus {
    guard(|| unsafe { write_handle(out, ChebdiffMatrix(DiffMatrix::new(basis.into(), s, n_max))) })
}

/// Differentiate an expansion with a matrix (weighted column combination).
///
/// # Safety
/// `matrix` and `expansion` must be live handles from this library; `out`
/// must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_matrix_apply(
    matrix: *const ChebdiffMatrix,
    expansion: *const ChebdiffExpansion,
    out: *mut *mut ChebdiffExpansion,
) -> ChebdiffStatus {
    guard(|| {
        let (Some(matrix), Some(expansion)) =
            (unsafe { matrix.as_ref() }, unsafe { expansion.as_ref() })
        else {
            return ChebdiffStatus::NullPointer;
        };
        match matrix.0.apply(&expansion.0) {
            Ok(result) => unsafe { write_handle(out, ChebdiffExpansion(result)) },
            Err(e) => status_of(&e),
        }
    })
}

/// Single matrix entry as a lowest-terms rational string ("0" when absent).
///
/// # Safety
/// `matrix` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_matrix_entry(
    matrix: *const ChebdiffMatrix,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(matrix) = (unsafe { matrix.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        if row > matrix.0.n_max() || col > matrix.0.n_max() {
            return ChebdiffStatus::InvalidArgument;
        }
        unsafe { write_string(out, matrix.0.entry(row, col).to_string()) }
    })
}

/// Dense CSV rendering of a matrix (same format as the CLI).
///
/// # Safety
/// `matrix` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_matrix_to_csv(
    matrix: *const ChebdiffMatrix,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(matrix) = (unsafe { matrix.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_string(out, matrix.0.to_csv()) }
    })
}

/// Serialize a matrix to its canonical JSON line.
///
/// # Safety
/// `matrix` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_matrix_to_json(
    matrix: *const ChebdiffMatrix,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(matrix) = (unsafe { matrix.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_string(out, to_json(&matrix.0)) }
    })
}

/// Parse a matrix from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must point to writable
/// memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_matrix_from_json(
    json: *const c_char,
    out: *mut *mut ChebdiffMatrix,
) -> ChebdiffStatus {
    guard(|| {
        let json = match unsafe { read_str(json) } {
            Ok(text) => text,
            Err(status) => return status,
        };
        match serde_json::from_str::<DiffMatrix>(json) {
            Ok(matrix) => unsafe { write_handle(out, ChebdiffMatrix(matrix)) },
            Err(_) => ChebdiffStatus::ParseError,
        }
    })
}

/// Run one verification sweep up to n_max.
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_verify(
    suite: ChebdiffSuite,
    n_max: usize,
    out: *mut *mut ChebdiffReport,
) -> ChebdiffStatus {
    guard(|| {
        let report = match suite {
            ChebdiffSuite::UExplicit => verify_u_explicit(n_max),
            ChebdiffSuite::TExplicit => verify_t_explicit(n_max),
            ChebdiffSuite::Inversion => verify_inversion(n_max),
            ChebdiffSuite::InnerSum => verify_inner_sum(n_max),
            ChebdiffSuite::TripleSum => verify_triple_sum(n_max),
        };
        unsafe { write_handle(out, ChebdiffReport(report)) }
    })
}

/// Whether a report recorded zero failures.
///
/// # Safety
/// `report` must be a live handle from this library; `out` must point to
/// writable memory for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_report_passed(
    report: *const ChebdiffReport,
    out: *mut bool,
) -> ChebdiffStatus {
    guard(|| {
        let Some(report) = (unsafe { report.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        if out.is_null() {
            return ChebdiffStatus::NullPointer;
        }
        unsafe { *out = report.0.passed() };
        ChebdiffStatus::Ok
    })
}

/// Number of cases a report enumerated.
///
/// # Safety
/// `report` must be a live handle from this library; `out` must point to
/// writable memory for one `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_report_cases(
    report: *const ChebdiffReport,
    out: *mut u64,
) -> ChebdiffStatus {
    guard(|| {
        let Some(report) = (unsafe { report.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        if out.is_null() {
            return ChebdiffStatus::NullPointer;
        }
        unsafe { *out = report.0.cases_run() };
        ChebdiffStatus::Ok
    })
}

/// Serialize a report to its canonical JSON line.
///
/// # Safety
/// `report` must be a live handle from this library; `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_report_to_json(
    report: *const ChebdiffReport,
    out: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        let Some(report) = (unsafe { report.as_ref() }) else {
            return ChebdiffStatus::NullPointer;
        };
        unsafe { write_string(out, to_json(&report.0)) }
    })
}

/// Both sides of the collapsed inner-sum identity at (n, s, j), as decimal
/// integer strings. Rejects parameters outside 1 <= s <= n,
/// 0 <= j <= (n-s)/2.
///
/// # Safety
/// `out_lhs` and `out_rhs` must each point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_inner_sum_pair(
    n: usize,
    s: usize,
    j: usize,
    out_lhs: *mut *mut c_char,
    out_rhs: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| {
        if out_lhs.is_null() || out_rhs.is_null() {
            return ChebdiffStatus::NullPointer;
        }
        let case = match inner_sum_pair(n, s, j) {
            Ok(case) => case,
            Err(e) => return status_of(&e),
        };
        let status = unsafe { write_string(out_lhs, case.lhs.to_string()) };
        if status != ChebdiffStatus::Ok {
            return status;
        }
        unsafe { write_string(out_rhs, case.rhs.to_string()) }
    })
}

/// Time the closed form against the oracle baseline up to n_max; the CSV
/// table is only produced when every degree's results matched exactly.
///
/// # Safety
/// `out_table` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_bench(
    n_max: usize,
    s: usize,
    out_table: *mut *mut c_char,
) -> ChebdiffStatus {
    guard(|| match run_bench(n_max, s) {
        Ok(report) => unsafe { write_string(out_table, report.to_table()) },
        Err(e) => status_of(&e),
    })
}

/// Free an expansion handle (NULL is a no-op).
///
/// # Safety
/// `expansion` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_expansion_free(expansion: *mut ChebdiffExpansion) {
    if !expansion.is_null() {
        drop(unsafe { Box::from_raw(expansion) });
    }
}

/// Free a monomial-polynomial handle (NULL is a no-op).
///
/// # Safety
/// `poly` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_monomial_free(poly: *mut ChebdiffMonomial) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Free a matrix handle (NULL is a no-op).
///
/// # Safety
/// `matrix` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_matrix_free(matrix: *mut ChebdiffMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

/// Free a report handle (NULL is a no-op).
///
/// # Safety
/// `report` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_report_free(report: *mut ChebdiffReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Free a string returned by this library (NULL is a no-op).
///
/// # Safety
/// `s` must be NULL or an unfreed string from this library.
#[no_mangle]
pub unsafe extern "C" fn chebdiff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
