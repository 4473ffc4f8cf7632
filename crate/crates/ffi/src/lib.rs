//! C interface to `canfilt`.
//!
//! Every fallible call returns a `CanfiltStatus`; on failure the message is
//! available from `canfilt_last_error_message` on the same thread until the
//! next failing call. Handles are opaque and owned by the caller, who must
//! release them with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use canfilt::exactla::{subspace_compare, Subspace, Verdict};
use canfilt::filtration::{build_comparison, build_filtration};
use canfilt::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanfiltStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidParameter = 3,
    CapExceeded = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanfiltVerdict {
    Equal = 0,
    FirstInSecond = 1,
    SecondInFirst = 2,
    Incomparable = 3,
}

/// A subspace of Sym^d(∧^m V) in reduced row-echelon form.
pub struct CanfiltSubspace {
    inner: Subspace,
}

/// Output of one command-line invocation.
pub struct CanfiltRun {
    code: i32,
    stdout: CString,
    stderr: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CanfiltStatus, msg: impl Into<String>) -> CanfiltStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> CanfiltStatus {
    let status = match e {
        Error::CapExceeded { .. } => CanfiltStatus::CapExceeded,
        Error::AuditFailure(_) => CanfiltStatus::Internal,
        _ => CanfiltStatus::InvalidParameter,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> CanfiltStatus) -> CanfiltStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(CanfiltStatus::Internal, "panic inside canfilt"))
}

/// Message of the last failure on this thread, or NULL. Owned by the library.
#[no_mangle]
pub extern "C" fn canfilt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

fn build_subspace(
    which: fn(usize, usize, usize, usize) -> canfilt::Result<Subspace>,
    m: u32,
    n: u32,
    d: u32,
    l: u32,
    cap: u32,
    out: *mut *mut CanfiltSubspace,
) -> CanfiltStatus {
    guard(|| {
        if out.is_null() {
            return fail(CanfiltStatus::NullPointer, "out is NULL");
        }
        if m == 0 || n == 0 || d == 0 {
            return fail(CanfiltStatus::InvalidParameter, "need m, n, d >= 1");
        }
        let dim = canfilt::plucker::Context::new(m as usize, n as usize, d as usize).ambient_dim();
        if dim > cap as usize {
            return from_error(Error::CapExceeded {
                dim,
                cap: cap as usize,
            });
        }
        match which(m as usize, n as usize, d as usize, l as usize) {
            Ok(inner) => {
                // SAFETY: out checked non-null above
                unsafe { *out = Box::into_raw(Box::new(CanfiltSubspace { inner })) };
                CanfiltStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// U_l(sl(V))·L^d inside Sym^d(∧^m K^{m+n}).
#[no_mangle]
pub extern "C" fn canfilt_filtration_new(
    m: u32,
    n: u32,
    d: u32,
    l: u32,
    cap: u32,
    out: *mut *mut CanfiltSubspace,
) -> CanfiltStatus {
    build_subspace(build_filtration, m, n, d, l, cap, out)
}

/// L^{d-l} times Sym^l of the tangent directions at L.
#[no_mangle]
pub extern "C" fn canfilt_comparison_new(
    m: u32,
    n: u32,
    d: u32,
    l: u32,
    cap: u32,
    out: *mut *mut CanfiltSubspace,
) -> CanfiltStatus {
    build_subspace(build_comparison, m, n, d, l, cap, out)
}

/// # Safety
/// `s` must be NULL or a handle from this library; `dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn canfilt_subspace_dims(
    s: *const CanfiltSubspace,
    dim: *mut usize,
    ambient_dim: *mut usize,
) -> CanfiltStatus {
    guard(|| {
        let Some(s) = s.as_ref() else {
            return fail(CanfiltStatus::NullPointer, "subspace is NULL");
        };
        if dim.is_null() || ambient_dim.is_null() {
            return fail(CanfiltStatus::NullPointer, "output is NULL");
        }
        *dim = s.inner.dim();
        *ambient_dim = s.inner.ambient_dim();
        CanfiltStatus::Ok
    })
}

/// # Safety
/// `a` and `b` must be NULL or handles from this library.
#[no_mangle]
pub unsafe extern "C" fn canfilt_subspace_compare(
    a: *const CanfiltSubspace,
    b: *const CanfiltSubspace,
    verdict: *mut CanfiltVerdict,
    dim_intersection: *mut usize,
) -> CanfiltStatus {
    guard(|| {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return fail(CanfiltStatus::NullPointer, "subspace is NULL");
        };
        if verdict.is_null() || dim_intersection.is_null() {
            return fail(CanfiltStatus::NullPointer, "output is NULL");
        }
        match subspace_compare(&a.inner, &b.inner) {
            Ok(c) => {
                *verdict = match c.verdict {
                    Verdict::Equal => CanfiltVerdict::Equal,
                    Verdict::FirstInSecond => CanfiltVerdict::FirstInSecond,
                    Verdict::SecondInFirst => CanfiltVerdict::SecondInFirst,
                    Verdict::Incomparable => CanfiltVerdict::Incomparable,
                };
                *dim_intersection = c.dim_intersection;
                CanfiltStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn canfilt_subspace_free(s: *mut CanfiltSubspace) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Runs the command line `argv[0..argc]` (without the program name) as the
/// `canfilt` binary would. The run handle is produced even when the exit
/// code is nonzero; `Ok` only means the call itself succeeded.
///
/// # Safety
/// `argv` must hold `argc` valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn canfilt_run(
    argv: *const *const c_char,
    argc: usize,
    out: *mut *mut CanfiltRun,
) -> CanfiltStatus {
    guard(|| {
        if out.is_null() || (argv.is_null() && argc > 0) {
            return fail(CanfiltStatus::NullPointer, "argv or out is NULL");
        }
        let mut args = vec!["canfilt".to_string()];
        for i in 0..argc {
            let p = *argv.add(i);
            if p.is_null() {
                return fail(CanfiltStatus::NullPointer, format!("argv[{i}] is NULL"));
            }
            match CStr::from_ptr(p).to_str() {
                Ok(s) => args.push(s.to_string()),
                Err(_) => {
                    return fail(
                        CanfiltStatus::InvalidUtf8,
                        format!("argv[{i}] is not UTF-8"),
                    )
                }
            }
        }
        let r = canfilt::cli::run(args);
        let cstr = |s: String| CString::new(s.replace('\0', " ")).expect("nul bytes removed");
        *out = Box::into_raw(Box::new(CanfiltRun {
            code: r.code,
            stdout: cstr(r.stdout),
            stderr: cstr(r.stderr),
        }));
        CanfiltStatus::Ok
    })
}

/// Exit code the binary would have returned, or -1 for NULL.
///
/// # Safety
/// `r` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn canfilt_run_exit_code(r: *const CanfiltRun) -> i32 {
    r.as_ref().map_or(-1, |r| r.code)
}

/// The JSON report; valid until the handle is freed.
///
/// # Safety
/// `r` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn canfilt_run_json(r: *const CanfiltRun) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.stdout.as_ptr())
}

/// Diagnostics; valid until the handle is freed.
///
/// # Safety
/// `r` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn canfilt_run_diagnostics(r: *const CanfiltRun) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.stderr.as_ptr())
}

/// # Safety
/// `r` must be NULL or a handle from this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn canfilt_run_free(r: *mut CanfiltRun) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// h⁰ and h¹ of O(k) on the projective line.
///
/// # Safety
/// `h0` and `h1` must be writable.
#[no_mangle]
pub unsafe extern "C" fn canfilt_line_cohomology(
    k: i64,
    h0: *mut u64,
    h1: *mut u64,
) -> CanfiltStatus {
    if h0.is_null() || h1.is_null() {
        return fail(CanfiltStatus::NullPointer, "output is NULL");
    }
    let c = canfilt::koszul::line_cohomology(k);
    *h0 = c.h0;
    *h1 = c.h1;
    CanfiltStatus::Ok
}
