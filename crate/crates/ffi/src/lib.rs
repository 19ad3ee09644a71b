//! C ABI over `qylag`.
//!
//! Polynomials cross the boundary as opaque `QylagPoly` handles owned by the
//! caller and released with [`qylag_poly_free`]. Strings returned through out
//! pointers are released with [`qylag_string_free`]. Every entry point returns
//! a [`QylagStatus`]; panics are caught and reported as `QYLAG_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qylag::cli::{verify, Identity, VerifyOptions};
use qylag::laguerre::{coeff_l, laguerre_rec, laguerre_signless};
use qylag::moments::{laguerre_moments, linearization_formula, moments_sfrac, SCoeffs};
use qylag::mpoly::Format;
use qylag::{Alpha, MPoly};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QylagStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownIdentity = 3,
    VerificationFailed = 4,
    Internal = 5,
}

/// Output format for [`qylag_poly_to_string`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QylagFormat {
    Plain = 0,
    Latex = 1,
    Json = 2,
}

impl From<QylagFormat> for Format {
    fn from(f: QylagFormat) -> Self {
        match f {
            QylagFormat::Plain => Format::Plain,
            QylagFormat::Latex => Format::Latex,
            QylagFormat::Json => Format::Json,
        }
    }
}

/// Opaque polynomial handle.
pub struct QylagPoly(MPoly);

fn guarded(f: impl FnOnce() -> QylagStatus) -> QylagStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(QylagStatus::Internal)
}

fn alpha_from(value: i64) -> Result<Alpha, QylagStatus> {
    Alpha::new(value).map_err(|_| QylagStatus::InvalidArgument)
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn emit_poly(
    out: *mut *mut QylagPoly,
    make: impl FnOnce() -> Result<MPoly, QylagStatus>,
) -> QylagStatus {
    if out.is_null() {
        return QylagStatus::NullPointer;
    }
    guarded(|| match make() {
        Ok(p) => {
            // SAFETY: checked non-null above; the caller guarantees validity.
            unsafe { *out = Box::into_raw(Box::new(QylagPoly(p))) };
            QylagStatus::Ok
        }
        Err(status) => status,
    })
}

/// `L_n^{(α)}`, signless when `signless` is true.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qylag_laguerre(
    n: u32,
    alpha: i64,
    signless: bool,
    out: *mut *mut QylagPoly,
) -> QylagStatus {
    unsafe {
        emit_poly(out, || {
            let a = alpha_from(alpha)?;
            Ok(if signless {
                laguerre_signless(n, a).poly
            } else {
                laguerre_rec(n, a).poly
            })
        })
    }
}

/// The signless coefficient of `x^{n-k}` in `L_n^{(α)}`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qylag_coeff_l(
    n: u32,
    k: u32,
    alpha: i64,
    out: *mut *mut QylagPoly,
) -> QylagStatus {
    unsafe {
        emit_poly(out, || {
            let a = alpha_from(alpha)?;
            if k > n {
                return Err(QylagStatus::InvalidArgument);
            }
            Ok(coeff_l(n, k, a))
        })
    }
}

/// The moment `μ_n`; with `symbolic_beta` the result keeps `β` and `alpha`
/// is ignored, otherwise `alpha >= 0` is required.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qylag_moment(
    n: u32,
    alpha: i64,
    symbolic_beta: bool,
    out: *mut *mut QylagPoly,
) -> QylagStatus {
    unsafe {
        emit_poly(out, || {
            let table = if symbolic_beta {
                moments_sfrac(n, &SCoeffs::laguerre_symbolic(n))
            } else {
                let a = alpha_from(alpha)?;
                a.non_negative().map_err(|_| QylagStatus::InvalidArgument)?;
                laguerre_moments(n, a)
            };
            Ok(table.as_slice()[n as usize].clone())
        })
    }
}

/// `L(L_{n1} L_{n2} L_{n3})` for `alpha >= 0`.
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qylag_linearization(
    n1: u32,
    n2: u32,
    n3: u32,
    alpha: i64,
    out: *mut *mut QylagPoly,
) -> QylagStatus {
    unsafe {
        emit_poly(out, || {
            let a = alpha_from(alpha)?
                .non_negative()
                .map_err(|_| QylagStatus::InvalidArgument)?;
            Ok(linearization_formula(n1, n2, n3, a))
        })
    }
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qylag_poly_num_terms(poly: *const QylagPoly) -> usize {
    // SAFETY: the caller passes null or a live handle.
    unsafe { poly.as_ref() }.map_or(0, |p| p.0.len())
}

/// Renders `poly` as a NUL-terminated string owned by the caller.
///
/// # Safety
/// `poly` must be null or a live handle; `out` must be null or valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn qylag_poly_to_string(
    poly: *const QylagPoly,
    format: QylagFormat,
    out: *mut *mut c_char,
) -> QylagStatus {
    // SAFETY: the caller passes null or a live handle.
    let Some(p) = (unsafe { poly.as_ref() }) else {
        return QylagStatus::NullPointer;
    };
    if out.is_null() {
        return QylagStatus::NullPointer;
    }
    guarded(|| {
        let text = p.0.render(format.into());
        match CString::new(text) {
            Ok(s) => {
                // SAFETY: checked non-null above.
                unsafe { *out = s.into_raw() };
                QylagStatus::Ok
            }
            Err(_) => QylagStatus::Internal,
        }
    })
}

/// Writes whether two handles hold the same polynomial.
///
/// # Safety
/// Both handles must be null or live; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn qylag_poly_equal(
    a: *const QylagPoly,
    b: *const QylagPoly,
    out: *mut bool,
) -> QylagStatus {
    // SAFETY: the caller passes null or live handles and a writable flag.
    match unsafe { (a.as_ref(), b.as_ref(), out.as_mut()) } {
        (Some(a), Some(b), Some(out)) => {
            *out = a.0 == b.0;
            QylagStatus::Ok
        }
        _ => QylagStatus::NullPointer,
    }
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `poly` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qylag_poly_free(poly: *mut QylagPoly) {
    if !poly.is_null() {
        // SAFETY: the handle came from Box::into_raw and is freed once.
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Releases a string from [`qylag_poly_to_string`]; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qylag_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from CString::into_raw and is freed once.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Sweeps a named identity. `n_max < 0` keeps the default ceilings. The
/// counts are written when the out pointers are non-null. Returns
/// `QYLAG_STATUS_VERIFICATION_FAILED` if any tuple fails.
///
/// # Safety
/// `identity` must be a NUL-terminated string; `passed` and `total` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn qylag_verify(
    identity: *const c_char,
    n_max: i32,
    seed: u64,
    passed: *mut u32,
    total: *mut u32,
) -> QylagStatus {
    if identity.is_null() {
        return QylagStatus::NullPointer;
    }
    // SAFETY: non-null and NUL-terminated by contract.
    let name = unsafe { CStr::from_ptr(identity) };
    let Ok(id) = name
        .to_str()
        .map_err(drop)
        .and_then(|s| s.parse::<Identity>().map_err(drop))
    else {
        return QylagStatus::UnknownIdentity;
    };
    guarded(|| {
        let opts = VerifyOptions {
            n_max: u32::try_from(n_max).ok(),
            seed,
        };
        let reports = verify(id, &opts);
        let ok = reports.iter().filter(|r| r.passed()).count() as u32;
        // SAFETY: null or writable by contract.
        unsafe {
            if let Some(p) = passed.as_mut() {
                *p = ok;
            }
            if let Some(t) = total.as_mut() {
                *t = reports.len() as u32;
            }
        }
        if ok as usize == reports.len() {
            QylagStatus::Ok
        } else {
            QylagStatus::VerificationFailed
        }
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn qylag_status_message(status: QylagStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        QylagStatus::Ok => c"ok",
        QylagStatus::NullPointer => c"null pointer argument",
        QylagStatus::InvalidArgument => c"invalid argument",
        QylagStatus::UnknownIdentity => c"unknown identity",
        QylagStatus::VerificationFailed => c"verification failed",
        QylagStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}
