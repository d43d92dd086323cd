use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use strong_isotropy_ffi::*;

fn c(text: &str) -> CString {
    CString::new(text).unwrap()
}

fn last_error() -> Option<String> {
    let p = si_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string())
}

#[test]
fn run_json_round_trip() {
    let engine = si_engine_new();
    let mut out: *mut c_char = ptr::null_mut();
    let req = c(r#"{"command":"typea","payload":{"moduli":[2,4],"cocharacter_generators":[[1,1]]}}"#);
    let status = unsafe { si_run_json(engine, req.as_ptr(), &mut out) };
    assert_eq!(status, SiStatus::Ok);
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    assert!(text.contains(r#""value":"2""#), "{text}");
    unsafe {
        si_string_free(out);
        si_engine_free(engine);
    }
}

#[test]
fn statuses_follow_the_response() {
    let engine = si_engine_new();
    let mut out: *mut c_char = ptr::null_mut();
    let bad = c("not json");
    assert_eq!(unsafe { si_run_json(engine, bad.as_ptr(), &mut out) }, SiStatus::UsageError);
    assert!(!out.is_null());
    assert!(last_error().unwrap().contains("parse"));
    unsafe { si_string_free(out) };

    assert_eq!(unsafe { si_engine_set_enumeration_cap(engine, 10) }, SiStatus::Ok);
    let big = c(r#"{"command":"typea","payload":{"moduli":[1000,1000]}}"#);
    assert_eq!(unsafe { si_run_json(engine, big.as_ptr(), &mut out) }, SiStatus::ResourceLimit);
    unsafe { si_string_free(out) };
    assert_eq!(unsafe { si_engine_set_enumeration_cap(engine, 0) }, SiStatus::UsageError);

    let undecided = c(r#"{"command":"semisimple","payload":{"factors":[{"type":"A-inner","m":4,"ind_d":1,"d":1},{"type":"C","n":1,"algebra_split":true,"adjoint":false}],"center_generators":[[2,1]]}}"#);
    assert_eq!(unsafe { si_run_json(engine, undecided.as_ptr(), &mut out) }, SiStatus::Undecided);
    unsafe {
        si_string_free(out);
        si_engine_free(engine);
    }
}

#[test]
fn null_arguments_are_rejected() {
    let mut out: *mut c_char = ptr::null_mut();
    let req = c("{}");
    assert_eq!(unsafe { si_run_json(ptr::null(), req.as_ptr(), &mut out) }, SiStatus::NullPointer);
    let engine = si_engine_new();
    assert_eq!(unsafe { si_run_json(engine, ptr::null(), &mut out) }, SiStatus::NullPointer);
    let mut flag = false;
    assert_eq!(unsafe { si_qform_is_isotropic(ptr::null(), &mut flag) }, SiStatus::NullPointer);
    assert_eq!(unsafe { si_qform_dimension(ptr::null()) }, 0);
    unsafe {
        si_engine_free(engine);
        si_engine_free(ptr::null_mut());
        si_string_free(ptr::null_mut());
    }
}

#[test]
fn form_handles() {
    let mut q: *mut SiQuadraticForm = ptr::null_mut();
    let text = c("1,-1,1,-1,1,-1,1,-1,1,-1");
    assert_eq!(unsafe { si_qform_parse(text.as_ptr(), &mut q) }, SiStatus::Ok);
    assert_eq!(unsafe { si_qform_dimension(q) }, 10);
    let (mut iso, mut disc, mut witt) = (false, false, false);
    unsafe {
        assert_eq!(si_qform_is_isotropic(q, &mut iso), SiStatus::Ok);
        assert_eq!(si_qform_discriminant_trivial(q, &mut disc), SiStatus::Ok);
        assert_eq!(si_qform_witt_trivial(q, &mut witt), SiStatus::Ok);
        si_qform_free(q);
    }
    assert!(iso && disc && witt);

    let zero = c("1,0");
    assert_eq!(unsafe { si_qform_parse(zero.as_ptr(), &mut q) }, SiStatus::UsageError);
    assert!(q.is_null());
    assert!(last_error().is_some());
}

#[test]
fn symbols_and_type_a() {
    let mut s = 0i8;
    for (a, b, place, expected) in [(-1, -1, "real", -1), (-1, -1, "2", -1), (2, 7, "7", 1)] {
        let place = c(place);
        assert_eq!(unsafe { si_hilbert_symbol(a, b, place.as_ptr(), &mut s) }, SiStatus::Ok);
        assert_eq!(s, expected);
    }
    let composite = c("6");
    assert_eq!(unsafe { si_hilbert_symbol(2, 3, composite.as_ptr(), &mut s) }, SiStatus::UsageError);

    let mut flag = false;
    assert_eq!(unsafe { si_classify_type_a(6, 1, 2, &mut flag) }, SiStatus::Ok);
    assert!(flag);
    assert_eq!(unsafe { si_classify_type_a(4, 1, 2, &mut flag) }, SiStatus::Ok);
    assert!(!flag);
    assert_eq!(unsafe { si_classify_type_a(4, 1, 3, &mut flag) }, SiStatus::UsageError);
}

#[test]
fn version_matches_core() {
    let v = unsafe { CStr::from_ptr(si_version()) }.to_str().unwrap();
    assert_eq!(v, strong_isotropy::ENGINE_VERSION);
}

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|cc| Command::new(cc).arg("--version").output().is_ok())
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping header check");
        return;
    };
    let header = crate_dir().join("include/strong_isotropy.h");
    for lang in ["c", "c++"] {
        let status = Command::new(cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(&header)
            .status()
            .unwrap();
        assert!(status.success(), "header does not compile as {lang}");
    }
}

/// The static library next to this test binary, if cargo built one.
fn static_library() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libstrong_isotropy_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_against_the_static_library() {
    let (Some(cc), Some(lib)) = (compiler(), static_library()) else {
        eprintln!("no compiler or static library; skipping link check");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(cc)
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "link failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke program exited with {:?}", out.status);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
