use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hcpsat_ffi::*;

const EXAMPLE: &str = "a 2 3\nb 3 5\nc 3 4\nd 2 5\ne 4 5\nf 1 2\ng 1 4\n";
const THETA: &str = "a 2 3\nc 3 4\nd 2 5\ne 4 5\nf 1 2\ng 1 4\n";

fn parse(text: &str) -> *mut HcpGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { hcp_graph_parse(c.as_ptr(), &mut g) }, HcpStatus::Ok);
    g
}

fn last_error() -> String {
    let p = hcp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let src = dir.join("tests").join("header_check.c");
    let out = std::env::temp_dir().join(format!("hcpsat_header_check_{}.o", std::process::id()));
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-c", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .arg("-o")
        .arg(&out)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(status.success());
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match Command::new(&cc).arg("--version").output() {
        Ok(o) if o.status.success() => Ok(cc),
        _ => Err(()),
    }
}

#[test]
fn solve_round_trip() {
    let g = parse(EXAMPLE);
    unsafe {
        assert_eq!((hcp_graph_vertex_count(g), hcp_graph_edge_count(g)), (5, 7));
        let mut r = ptr::null_mut();
        for method in [HcpMethod::Brute, HcpMethod::Dnf, HcpMethod::Lazy] {
            assert_eq!(hcp_solve(g, method, true, &mut r), HcpStatus::Ok);
            assert!(hcp_result_satisfiable(r));
            assert_eq!(hcp_result_model_count(r), 2);
            let mut buf = [0usize; 5];
            let mut len = 0;
            assert_eq!(hcp_result_cycle(r, 0, buf.as_mut_ptr(), 5, &mut len), HcpStatus::Ok);
            assert_eq!(len, 5);
            assert_eq!(hcp_result_cycle(r, 0, buf.as_mut_ptr(), 2, &mut len), HcpStatus::BufferTooSmall);
            assert_eq!(hcp_result_cycle(r, 9, buf.as_mut_ptr(), 5, &mut len), HcpStatus::IndexOutOfRange);
            hcp_result_free(r);
        }
        hcp_graph_free(g);
    }
}

#[test]
fn encoding_outputs() {
    let g = parse(THETA);
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(hcp_encode(g, 0, &mut e), HcpStatus::Ok);
        let (mut f1, mut f2, mut w) = (0, 0, 0);
        assert_eq!(hcp_encoding_counts(e, &mut f1, &mut f2, &mut w), HcpStatus::Ok);
        assert_eq!((f1, f2, w), (5, 3, 0));
        let expr = hcp_encoding_to_expr(e);
        assert!(CStr::from_ptr(expr).to_str().unwrap().contains(" & "));
        hcp_string_free(expr);
        let dimacs = hcp_encoding_to_dimacs(e);
        assert!(CStr::from_ptr(dimacs).to_str().unwrap().contains("p cnf "));
        hcp_string_free(dimacs);
        hcp_encoding_free(e);

        let mut r = ptr::null_mut();
        assert_eq!(hcp_solve(g, HcpMethod::Lazy, false, &mut r), HcpStatus::Ok);
        assert!(!hcp_result_satisfiable(r));
        hcp_result_free(r);
        hcp_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("1 1\n").unwrap();
        assert_eq!(hcp_graph_parse(bad.as_ptr(), &mut g), HcpStatus::ValidationError);
        assert!(g.is_null());
        assert!(last_error().contains("loop"));
        let bad = CString::new("1 2 3 4\n").unwrap();
        assert_eq!(hcp_graph_parse(bad.as_ptr(), &mut g), HcpStatus::ParseError);
        assert_eq!(hcp_graph_parse(ptr::null(), &mut g), HcpStatus::NullPointer);

        let g = parse(EXAMPLE);
        let mut r = ptr::null_mut();
        let wrong = CString::new("v 1 2 3 4 5 6 7 0\n").unwrap();
        assert_eq!(hcp_solve_external(g, wrong.as_ptr(), &mut r), HcpStatus::ModelInvalid);
        let short = CString::new("v 1 2\n").unwrap();
        assert_eq!(hcp_solve_external(g, short.as_ptr(), &mut r), HcpStatus::ModelParseError);
        let good = CString::new("s SATISFIABLE\nv -1 2 3 4 -5 6 7 0\n").unwrap();
        assert_eq!(hcp_solve_external(g, good.as_ptr(), &mut r), HcpStatus::Ok);
        assert!(hcp_result_satisfiable(r));
        hcp_result_free(r);

        let mut e = ptr::null_mut();
        assert_eq!(hcp_encode(g, 3, &mut e), HcpStatus::CapOverflow);
        hcp_graph_free(g);
    }
}
