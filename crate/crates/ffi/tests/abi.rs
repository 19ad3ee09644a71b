use std::ffi::{CStr, CString};
use std::ptr;

use qylag_ffi::*;

fn take_string(p: *const QylagPoly, format: QylagFormat) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { qylag_poly_to_string(p, format, &mut s) },
        QylagStatus::Ok
    );
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { qylag_string_free(s) };
    text
}

fn laguerre(n: u32, alpha: i64, signless: bool) -> *mut QylagPoly {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { qylag_laguerre(n, alpha, signless, &mut p) },
        QylagStatus::Ok
    );
    p
}

#[test]
fn polynomials_render() {
    let p = laguerre(1, 0, false);
    assert_eq!(take_string(p, QylagFormat::Plain), "x - y");
    assert_eq!(unsafe { qylag_poly_num_terms(p) }, 2);
    unsafe { qylag_poly_free(p) };

    let p = laguerre(2, 0, true);
    let json: serde_json::Value = serde_json::from_str(&take_string(p, QylagFormat::Json)).unwrap();
    assert_eq!(json["poly"].as_array().unwrap().len(), 6);
    unsafe { qylag_poly_free(p) };
}

#[test]
fn coefficients_moments_linearization() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { qylag_coeff_l(2, 0, 0, &mut p) }, QylagStatus::Ok);
    assert_eq!(take_string(p, QylagFormat::Plain), "y^2*q + y^2");
    unsafe { qylag_poly_free(p) };

    assert_eq!(unsafe { qylag_moment(2, 0, true, &mut p) }, QylagStatus::Ok);
    assert_eq!(take_string(p, QylagFormat::Plain), "y^2*beta^2 + y*beta");
    unsafe { qylag_poly_free(p) };

    assert_eq!(
        unsafe { qylag_linearization(1, 1, 0, 0, &mut p) },
        QylagStatus::Ok
    );
    assert_eq!(take_string(p, QylagFormat::Plain), "y");
    unsafe { qylag_poly_free(p) };
}

#[test]
fn equality_between_handles() {
    let a = laguerre(3, 1, true);
    let b = laguerre(3, 1, true);
    let c = laguerre(3, 2, true);
    let mut same = false;
    assert_eq!(
        unsafe { qylag_poly_equal(a, b, &mut same) },
        QylagStatus::Ok
    );
    assert!(same);
    assert_eq!(
        unsafe { qylag_poly_equal(a, c, &mut same) },
        QylagStatus::Ok
    );
    assert!(!same);
    unsafe {
        qylag_poly_free(a);
        qylag_poly_free(b);
        qylag_poly_free(c);
    }
}

#[test]
fn invalid_arguments() {
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { qylag_laguerre(2, -2, false, &mut p) },
        QylagStatus::InvalidArgument
    );
    assert!(p.is_null());
    assert_eq!(
        unsafe { qylag_coeff_l(1, 2, 0, &mut p) },
        QylagStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qylag_moment(2, -1, false, &mut p) },
        QylagStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qylag_linearization(1, 1, 1, -1, &mut p) },
        QylagStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qylag_laguerre(2, 0, false, ptr::null_mut()) },
        QylagStatus::NullPointer
    );
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { qylag_poly_to_string(ptr::null(), QylagFormat::Plain, &mut s) },
        QylagStatus::NullPointer
    );
    assert_eq!(unsafe { qylag_poly_num_terms(ptr::null()) }, 0);
    unsafe {
        qylag_poly_free(ptr::null_mut());
        qylag_string_free(ptr::null_mut());
    }
}

#[test]
fn verification_entry_point() {
    let name = CString::new("prop-g").unwrap();
    let (mut passed, mut total) = (0, 0);
    let status = unsafe { qylag_verify(name.as_ptr(), 4, 0, &mut passed, &mut total) };
    assert_eq!(status, QylagStatus::Ok);
    assert_eq!((passed, total), (5, 5));

    let unknown = CString::new("unknown-name").unwrap();
    let status = unsafe { qylag_verify(unknown.as_ptr(), -1, 0, ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(status, QylagStatus::UnknownIdentity);
    let msg = unsafe { CStr::from_ptr(qylag_status_message(status)) };
    assert_eq!(msg.to_str().unwrap(), "unknown identity");
}
