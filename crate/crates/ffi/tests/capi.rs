use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use canfilt_ffi::*;

fn run(args: &[&str]) -> (i32, String) {
    let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
    let argv: Vec<*const std::ffi::c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(
            canfilt_run(argv.as_ptr(), argv.len(), &mut h),
            CanfiltStatus::Ok
        );
        let code = canfilt_run_exit_code(h);
        let json = CStr::from_ptr(canfilt_run_json(h))
            .to_str()
            .unwrap()
            .to_string();
        canfilt_run_free(h);
        (code, json)
    }
}

#[test]
fn run_matches_the_binary_contract() {
    let (code, json) = run(&["cohomology", "--k", "-4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!((v["h0"].as_u64(), v["h1"].as_u64()), (Some(0), Some(3)));
    assert_eq!(run(&["no-such-command"]).0, 1);
    assert_eq!(run(&["aut-rank", "--d", "6", "--cap", "10"]).0, 4);
}

#[test]
fn filtration_handles() {
    let (mut f, mut c) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(
            canfilt_filtration_new(1, 2, 4, 2, 5000, &mut f),
            CanfiltStatus::Ok
        );
        assert_eq!(
            canfilt_comparison_new(1, 2, 4, 2, 5000, &mut c),
            CanfiltStatus::Ok
        );
        let (mut dim, mut amb) = (0usize, 0usize);
        assert_eq!(
            canfilt_subspace_dims(f, &mut dim, &mut amb),
            CanfiltStatus::Ok
        );
        assert_eq!((dim, amb), (6, 15));
        let mut verdict = CanfiltVerdict::Incomparable;
        let mut inter = 0usize;
        assert_eq!(
            canfilt_subspace_compare(f, c, &mut verdict, &mut inter),
            CanfiltStatus::Ok
        );
        assert_eq!((verdict, inter), (CanfiltVerdict::Equal, 6));
        canfilt_subspace_free(f);
        canfilt_subspace_free(c);
    }
}

#[test]
fn errors_set_the_message() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(
            canfilt_filtration_new(2, 2, 6, 2, 10, &mut f),
            CanfiltStatus::CapExceeded
        );
        let msg = CStr::from_ptr(canfilt_last_error_message())
            .to_str()
            .unwrap();
        assert!(msg.contains("462"), "{msg}");
        assert_eq!(
            canfilt_filtration_new(0, 2, 2, 1, 10, &mut f),
            CanfiltStatus::InvalidParameter
        );
        assert_eq!(
            canfilt_filtration_new(1, 2, 2, 1, 10, ptr::null_mut()),
            CanfiltStatus::NullPointer
        );
        assert_eq!(canfilt_run_exit_code(ptr::null()), -1);
        assert!(canfilt_run_json(ptr::null()).is_null());
        canfilt_subspace_free(ptr::null_mut());
        let (mut h0, mut h1) = (0u64, 0u64);
        assert_eq!(
            canfilt_line_cohomology(3, &mut h0, &mut h1),
            CanfiltStatus::Ok
        );
        assert_eq!((h0, h1), (4, 0));
    }
}

#[test]
fn header_declares_the_interface_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/canfilt.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "canfilt_run",
        "canfilt_run_json",
        "canfilt_run_free",
        "canfilt_filtration_new",
        "canfilt_subspace_compare",
        "canfilt_last_error_message",
        "typedef struct CanfiltSubspace CanfiltSubspace",
        "CANFILT_STATUS_CAP_EXCEEDED",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
    // syntax-check as C when a compiler is present
    if let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c"])
        .arg(&header)
        .output()
    {
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
