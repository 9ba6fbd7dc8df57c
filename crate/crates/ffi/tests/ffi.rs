use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use trisect_ffi::*;

fn catalog(name: &str) -> *mut TrisectDiagram {
    let name = CString::new(name).unwrap();
    let mut d = ptr::null_mut();
    let s = unsafe { trisect_catalog_get(name.as_ptr(), &mut d) };
    assert_eq!(s, TrisectStatus::Ok);
    d
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(trisect_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn cp2_invariants() {
    let d = catalog("CP2");
    let mut inv = std::mem::MaybeUninit::<TrisectInvariants>::uninit();
    let s = unsafe { trisect_invariants(d, inv.as_mut_ptr()) };
    assert_eq!(s, TrisectStatus::Ok);
    let inv = unsafe { inv.assume_init() };
    assert_eq!((inv.euler, inv.b1, inv.b2, inv.signature), (3, 0, 1, 1));
    assert_eq!(inv.parity, TrisectParity::Odd);
    assert_eq!(inv.definiteness, TrisectDefiniteness::Positive);
    unsafe { trisect_diagram_free(d) };
}

#[test]
fn parse_render_round_trip() {
    let d = catalog("CORK_A");
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { trisect_diagram_render(d, &mut text) }, TrisectStatus::Ok);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { trisect_diagram_parse(text, &mut back) }, TrisectStatus::Ok);
    let mut p = TrisectParams::default();
    assert_eq!(unsafe { trisect_diagram_params(back, &mut p) }, TrisectStatus::Ok);
    assert_eq!(p, TrisectParams { g: 3, k: 3, p: 0, b: 4 });
    unsafe {
        trisect_string_free(text);
        trisect_diagram_free(back);
        trisect_diagram_free(d);
    }
}

#[test]
fn error_codes() {
    let mut d = ptr::null_mut();
    let bad = CString::new("td 1\nsurface 1 0\nparams 1 0 0 0\nalpha 1\nbeta 0 1\ngamma 1 1\n").unwrap();
    assert_eq!(unsafe { trisect_diagram_parse(bad.as_ptr(), &mut d) }, TrisectStatus::ShapeError);
    assert!(last_error().contains("line 4"), "{}", last_error());
    let junk = CString::new("hello").unwrap();
    assert_eq!(unsafe { trisect_diagram_parse(junk.as_ptr(), &mut d) }, TrisectStatus::ParseError);
    assert_eq!(unsafe { trisect_catalog_get(junk.as_ptr(), &mut d) }, TrisectStatus::UnknownName);
    assert_eq!(unsafe { trisect_diagram_parse(ptr::null(), &mut d) }, TrisectStatus::NullPointer);
    assert!(d.is_null());

    let w = catalog("W01_B");
    let mut capped = ptr::null_mut();
    assert_eq!(unsafe { trisect_cap_all(w, &mut capped) }, TrisectStatus::OperationFailed);
    assert!(last_error().contains("p = 1"));
    let mut n = 0usize;
    let window = CString::new("td 1\nsurface 2 2\nparams 2 5 0 2\nalpha\nbeta\ngamma\n").unwrap();
    let mut wd = ptr::null_mut();
    assert_eq!(unsafe { trisect_diagram_parse(window.as_ptr(), &mut wd) }, TrisectStatus::Ok);
    assert_eq!(unsafe { trisect_diagram_validate(wd, &mut n) }, TrisectStatus::ValidationFailed);
    assert!(n >= 1);
    assert!(last_error().contains("WINDOW"));
    unsafe {
        trisect_diagram_free(w);
        trisect_diagram_free(wd);
    }
}

#[test]
fn operations_and_distinguish() {
    let t = catalog("TRIVIAL(2)");
    let dp = catalog("DPLUS");
    let dm = catalog("DMINUS");
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(trisect_boundary_sum(t, dp, &mut a), TrisectStatus::Ok);
        assert_eq!(trisect_boundary_sum(t, dm, &mut b), TrisectStatus::Ok);
    }
    let (mut distinct, mut witness) = (0i32, TrisectWitness::None);
    assert_eq!(unsafe { trisect_distinguish(a, b, &mut distinct, &mut witness) }, TrisectStatus::Ok);
    assert_eq!((distinct, witness), (1, TrisectWitness::Signature));

    let cp2 = catalog("CP2");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { trisect_connected_sum(cp2, t, &mut s) }, TrisectStatus::Ok);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { trisect_cap_component(s, 1, &mut c) }, TrisectStatus::Ok);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { trisect_report_structured(c, &mut report) }, TrisectStatus::Ok);
    let text = unsafe { CStr::from_ptr(report) }.to_str().unwrap().to_owned();
    assert!(text.contains("signature = 1"), "{text}");
    unsafe {
        trisect_string_free(report);
        for h in [t, dp, dm, a, b, cp2, s, c] {
            trisect_diagram_free(h);
        }
        trisect_diagram_free(ptr::null_mut());
        trisect_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let header_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(header_dir.join("trisect.h").is_file(), "build script writes the header");
    let lib = target_dir().join("libtrisect_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.is_file() {
        eprintln!("skipping C link check: no cc or {} missing", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("trisect-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "trisect.h"
int main(void) {
    TrisectDiagram *a = NULL, *b = NULL;
    if (trisect_catalog_get("E2_A", &a) != TRISECT_STATUS_OK) return 10;
    if (trisect_catalog_get("E2_B", &b) != TRISECT_STATUS_OK) return 11;
    int32_t distinct = 0;
    TrisectWitness w = TRISECT_WITNESS_NONE;
    if (trisect_distinguish(a, b, &distinct, &w) != TRISECT_STATUS_OK) return 12;
    TrisectInvariants inv;
    if (trisect_invariants(a, &inv) != TRISECT_STATUS_OK) return 13;
    printf("%d %d %lld\n", distinct, (int)w, (long long)inv.signature);
    trisect_diagram_free(a);
    trisect_diagram_free(b);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("main");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&header_dir)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{:?}", out);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1 5 2");
    let _ = std::fs::remove_dir_all(&dir);
}
