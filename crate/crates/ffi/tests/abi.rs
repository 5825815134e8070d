use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use hypergraph4_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(hg_last_error_message()) }.to_string_lossy().into_owned()
}

fn parse(text: &str) -> Result<u16, HgStatus> {
    let c = CString::new(text).unwrap();
    let mut code = 0u16;
    match unsafe { hg_parse_edges(c.as_ptr(), &mut code) } {
        HgStatus::Ok => Ok(code),
        s => Err(s),
    }
}

#[test]
fn parse_format_and_moves() {
    let code = parse("1234,123").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hg_format_edges(code, &mut out) }, HgStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(out) }.to_str().unwrap(), "1234,123");
    unsafe { hg_string_free(out) };

    let mut std = 0u16;
    assert_eq!(unsafe { hg_standardize(code, &mut std) }, HgStatus::Ok);
    assert_eq!(std, parse("1234").unwrap());

    let mut x = 0u16;
    assert_eq!(unsafe { hg_apply_x(parse("123").unwrap(), 1, &mut x) }, HgStatus::Ok);
    assert_eq!(x, parse("123,23").unwrap());
    let mut z = 0u16;
    assert_eq!(unsafe { hg_apply_z(0, 4, &mut z) }, HgStatus::Ok);
    assert_eq!(z, parse("4").unwrap());
    let mut rank = 0;
    assert_eq!(unsafe { hg_rank(code, &mut rank) }, HgStatus::Ok);
    assert_eq!(rank, 4);
}

#[test]
fn errors_are_reported() {
    assert_eq!(parse("125"), Err(HgStatus::ParseError));
    assert!(last_error().contains("125"), "{}", last_error());
    let mut out = 0u16;
    assert_eq!(unsafe { hg_apply_x(0, 5, &mut out) }, HgStatus::InvalidArgument);
    assert_eq!(unsafe { hg_apply_x(0x8000, 1, &mut out) }, HgStatus::InvalidArgument);
    assert_eq!(unsafe { hg_rank(0, ptr::null_mut()) }, HgStatus::NullPointer);
    assert_eq!(unsafe { hg_parse_edges(ptr::null(), &mut out) }, HgStatus::NullPointer);
    let bad = HgSolverPolicy { restarts: 0, ..hg_default_policy() };
    let mut ge = HgGeResult { overlap: 0.0, eg: 0.0, restarts_hit: 0, converged: false };
    assert_eq!(unsafe { hg_geometric_entanglement(0, &bad, &mut ge) }, HgStatus::SolverError);
}

#[test]
fn state_entropy_and_ge() {
    let code = parse("123").unwrap();
    let mut amps = [0.0f64; 16];
    assert_eq!(unsafe { hg_build_state(code, amps.as_mut_ptr()) }, HgStatus::Ok);
    assert!(amps[7] < 0.0 && amps[15] < 0.0 && amps[0] > 0.0);
    assert!((amps.iter().map(|a| a * a).sum::<f64>() - 1.0).abs() < 1e-12);

    let mut p = HgEntropyProfile { be1: [0.0; 4], be2: [0.0; 3] };
    assert_eq!(unsafe { hg_entropy_profile(code, &mut p) }, HgStatus::Ok);
    assert!(p.be1[3].abs() < 1e-12);
    assert!((p.be2[0] - 0.8113).abs() < 5e-5);

    let policy = hg_default_policy();
    let mut ge = HgGeResult { overlap: 0.0, eg: 0.0, restarts_hit: 0, converged: false };
    assert_eq!(unsafe { hg_geometric_entanglement(code, &policy, &mut ge) }, HgStatus::Ok);
    assert!((ge.eg - 0.5647).abs() < 5e-4);
    assert!(ge.converged && ge.restarts_hit >= 1);
}

#[test]
fn orbit_table_and_classification_handles() {
    let mut table = ptr::null_mut();
    assert_eq!(unsafe { hg_orbit_table_new(&mut table) }, HgStatus::Ok);
    let mut len = 0;
    assert_eq!(unsafe { hg_orbit_table_len(table, &mut len) }, HgStatus::Ok);
    assert_eq!(len, 39);
    let mut rec = HgOrbitRecord { id: 0, rep: 0, size: 0, rank: 0, m: 0 };
    assert_eq!(unsafe { hg_orbit_of(table, parse("1234,123").unwrap(), &mut rec) }, HgStatus::Ok);
    assert_eq!((rec.rep, rec.size, rec.rank, rec.m), (parse("1234").unwrap(), 256, 4, 1));

    let policy = hg_default_policy();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { hg_classify(table, &policy, &mut c) }, HgStatus::Ok, "{}", last_error());
    assert_eq!(unsafe { hg_classification_len(c, &mut len) }, HgStatus::Ok);
    assert_eq!(len, 28);
    let mut class = std::mem::MaybeUninit::<HgClassRecord>::uninit();
    assert_eq!(unsafe { hg_classification_class(c, 27, class.as_mut_ptr()) }, HgStatus::Ok);
    let class = unsafe { class.assume_init() };
    assert_eq!((class.paper_row, class.rank, class.m), (28, 3, 1));
    assert!((class.ge - 0.8301).abs() < 5e-4);
    let mut spare = std::mem::MaybeUninit::<HgClassRecord>::uninit();
    assert_eq!(unsafe { hg_classification_class(c, 28, spare.as_mut_ptr()) }, HgStatus::InvalidArgument);

    let mut doc = ptr::null_mut();
    assert_eq!(unsafe { hg_classification_report(c, HgReportFormat::Json, &mut doc) }, HgStatus::Ok);
    let text = unsafe { CStr::from_ptr(doc) }.to_str().unwrap().to_owned();
    unsafe { hg_string_free(doc) };
    assert!(text.contains("\"paper_row\": 28"));

    unsafe {
        hg_classification_free(c);
        hg_orbit_table_free(table);
        hg_classification_free(ptr::null_mut());
        hg_orbit_table_free(ptr::null_mut());
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hypergraph4.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["hg_classify", "hg_orbit_table_new", "hg_last_error_message", "HG_STATUS_OK"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    match Command::new("cc").args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"]).arg(&header).status() {
        Ok(status) => assert!(status.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler found; skipped compile check"),
    }
}
