//! C ABI over `hypergraph4`.
//!
//! Every function returns an [`HgStatus`]; on failure a description is kept
//! per thread and read with [`hg_last_error_message`]. Handles are opaque and
//! owned by the caller, who releases them with the matching `_free`. Strings
//! returned through `char **` out-parameters are released with
//! [`hg_string_free`]. Hypergraphs cross the boundary as 15-bit codes, bit
//! `e - 1` set when the hyperedge with vertex bitmask `e` is present.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypergraph4::classifier::{classify_all, Classification};
use hypergraph4::geoment::{geometric_entanglement, Partition, Reality, SolverPolicy};
use hypergraph4::orbits::{enumerate_orbits, OrbitTable};
use hypergraph4::report::{emit_report, ReportFormat};
use hypergraph4::statevec::{build_state, entropy_profile};
use hypergraph4::{HypergraphCode, Vertex};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SolverError = 4,
    ClassifyError = 5,
    IoError = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgReportFormat {
    Json = 0,
    Csv = 1,
    Markdown = 2,
}

/// Closest-product partition, coarsest first.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgPartition {
    Four = 0,
    OneThree = 1,
    TwoTwo = 2,
    OneTwoOne = 3,
    Distinct = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HgSolverPolicy {
    pub restarts: u32,
    pub tol: f64,
    pub max_iter: u32,
    pub seed: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HgGeResult {
    pub overlap: f64,
    pub eg: f64,
    pub restarts_hit: u32,
    pub converged: bool,
}

/// Cuts 1|234 .. 4|123 and 12|34, 13|24, 14|23, in bits.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HgEntropyProfile {
    pub be1: [f64; 4],
    pub be2: [f64; 3],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HgOrbitRecord {
    pub id: u32,
    pub rep: u16,
    pub size: u32,
    pub rank: u32,
    /// Standard hypergraphs in the orbit; 0 below rank 3.
    pub m: u32,
}

/// One of the 28 hypergraph classes. Entropies are sorted descending.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HgClassRecord {
    pub paper_row: u32,
    pub rep: u16,
    pub display: u16,
    pub rank: u32,
    pub m: u32,
    pub orbit_size: u32,
    pub ge: f64,
    pub be2: [f64; 3],
    pub be1: [f64; 4],
    pub partition: HgPartition,
    /// True when a real closest product state exists.
    pub real: bool,
}

/// Orbit assignment of all `2^15` codes.
pub struct HgOrbitTable(OrbitTable);

/// Result of a full classification run.
pub struct HgClassification(Classification);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn guard(f: impl FnOnce() -> Result<(), (HgStatus, String)>) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HgStatus::Panic
        }
    }
}

fn out_ref<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, (HgStatus, String)> {
    unsafe { p.as_mut() }.ok_or((HgStatus::NullPointer, format!("{name} is null")))
}

fn in_ref<'a, T>(p: *const T, name: &str) -> Result<&'a T, (HgStatus, String)> {
    unsafe { p.as_ref() }.ok_or((HgStatus::NullPointer, format!("{name} is null")))
}

fn code(raw: u16) -> Result<HypergraphCode, (HgStatus, String)> {
    HypergraphCode::new(raw as u32).map_err(|e| (HgStatus::InvalidArgument, e.to_string()))
}

fn vertex(label: u8) -> Result<Vertex, (HgStatus, String)> {
    Vertex::new(label).map_err(|e| (HgStatus::InvalidArgument, e.to_string()))
}

fn policy(p: &HgSolverPolicy) -> SolverPolicy {
    SolverPolicy { restarts: p.restarts as usize, tol: p.tol, max_iter: p.max_iter as usize, seed: p.seed }
}

fn partition(p: Partition) -> HgPartition {
    match p {
        Partition::Four => HgPartition::Four,
        Partition::OneThree => HgPartition::OneThree,
        Partition::TwoTwo => HgPartition::TwoTwo,
        Partition::OneTwoOne => HgPartition::OneTwoOne,
        Partition::Distinct => HgPartition::Distinct,
    }
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), (HgStatus, String)> {
    let out = out_ref(out, "out")?;
    let c = CString::new(s).map_err(|e| (HgStatus::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Defaults: 64 restarts, tolerance 1e-12, 5000 sweeps, seed 0.
#[no_mangle]
pub extern "C" fn hg_default_policy() -> HgSolverPolicy {
    let p = SolverPolicy::default();
    HgSolverPolicy { restarts: p.restarts as u32, tol: p.tol, max_iter: p.max_iter as u32, seed: p.seed }
}

/// Parses comma-separated edges such as `"1234,12,3"`.
#[no_mangle]
pub unsafe extern "C" fn hg_parse_edges(text: *const c_char, out_code: *mut u16) -> HgStatus {
    guard(|| {
        let text = in_ref(text, "text")?;
        let out = out_ref(out_code, "out_code")?;
        let s = unsafe { CStr::from_ptr(text) }.to_str().map_err(|e| (HgStatus::ParseError, e.to_string()))?;
        let h: HypergraphCode =
            s.parse().map_err(|e: hypergraph4::HypergraphError| (HgStatus::ParseError, e.to_string()))?;
        *out = h.raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_format_edges(raw: u16, out: *mut *mut c_char) -> HgStatus {
    guard(|| give_string(code(raw)?.to_string(), out))
}

#[no_mangle]
pub unsafe extern "C" fn hg_apply_x(raw: u16, vertex_label: u8, out_code: *mut u16) -> HgStatus {
    guard(|| {
        *out_ref(out_code, "out_code")? = code(raw)?.apply_x(vertex(vertex_label)?).raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_apply_z(raw: u16, vertex_label: u8, out_code: *mut u16) -> HgStatus {
    guard(|| {
        *out_ref(out_code, "out_code")? = code(raw)?.apply_z(vertex(vertex_label)?).raw();
        Ok(())
    })
}

/// Loop-free form in the same orbit, also 3-edge-free at rank 4.
#[no_mangle]
pub unsafe extern "C" fn hg_standardize(raw: u16, out_code: *mut u16) -> HgStatus {
    guard(|| {
        let s = code(raw)?.standardize().map_err(|e| (HgStatus::InvalidArgument, e.to_string()))?;
        *out_ref(out_code, "out_code")? = s.raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_rank(raw: u16, out_rank: *mut u32) -> HgStatus {
    guard(|| {
        *out_ref(out_rank, "out_rank")? = code(raw)?.rank();
        Ok(())
    })
}

/// Writes the 16 amplitudes, index bit `i` being qubit `i + 1`.
#[no_mangle]
pub unsafe extern "C" fn hg_build_state(raw: u16, out_amps: *mut f64) -> HgStatus {
    guard(|| {
        if out_amps.is_null() {
            return Err((HgStatus::NullPointer, "out_amps is null".into()));
        }
        let amps = build_state(code(raw)?).amps;
        unsafe { ptr::copy_nonoverlapping(amps.as_ptr(), out_amps, amps.len()) };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_entropy_profile(raw: u16, out: *mut HgEntropyProfile) -> HgStatus {
    guard(|| {
        let p = entropy_profile(code(raw)?);
        *out_ref(out, "out")? = HgEntropyProfile { be1: p.be1, be2: p.be2 };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_geometric_entanglement(
    raw: u16,
    policy_in: *const HgSolverPolicy,
    out: *mut HgGeResult,
) -> HgStatus {
    guard(|| {
        let p = policy(in_ref(policy_in, "policy")?);
        let sol = geometric_entanglement(code(raw)?, &p).map_err(|e| (HgStatus::SolverError, e.to_string()))?;
        *out_ref(out, "out")? = HgGeResult {
            overlap: sol.overlap,
            eg: sol.eg,
            restarts_hit: sol.restarts_hit as u32,
            converged: sol.converged,
        };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_orbit_table_new(out: *mut *mut HgOrbitTable) -> HgStatus {
    guard(|| {
        *out_ref(out, "out")? = Box::into_raw(Box::new(HgOrbitTable(enumerate_orbits())));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_orbit_table_free(table: *mut HgOrbitTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn hg_orbit_table_len(table: *const HgOrbitTable, out_len: *mut u32) -> HgStatus {
    guard(|| {
        *out_ref(out_len, "out_len")? = in_ref(table, "table")?.0.len() as u32;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_orbit_of(table: *const HgOrbitTable, raw: u16, out: *mut HgOrbitRecord) -> HgStatus {
    guard(|| {
        let r = in_ref(table, "table")?.0.orbit_of(code(raw)?);
        *out_ref(out, "out")? =
            HgOrbitRecord { id: r.id as u32, rep: r.rep.raw(), size: r.size, rank: r.rank, m: r.m.unwrap_or(0) };
        Ok(())
    })
}

/// Classifies every orbit of `table`. Fails with `ClassifyError` when some
/// class matches no reference row or two classes collide.
#[no_mangle]
pub unsafe extern "C" fn hg_classify(
    table: *const HgOrbitTable,
    policy_in: *const HgSolverPolicy,
    out: *mut *mut HgClassification,
) -> HgStatus {
    guard(|| {
        let t = in_ref(table, "table")?;
        let p = policy(in_ref(policy_in, "policy")?);
        let out = out_ref(out, "out")?;
        let c = classify_all(&t.0, &p).map_err(|e| (HgStatus::ClassifyError, e.to_string()))?;
        *out = Box::into_raw(Box::new(HgClassification(c)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_classification_free(c: *mut HgClassification) {
    if !c.is_null() {
        drop(unsafe { Box::from_raw(c) });
    }
}

/// Number of hypergraph classes (28 on success).
#[no_mangle]
pub unsafe extern "C" fn hg_classification_len(c: *const HgClassification, out_len: *mut u32) -> HgStatus {
    guard(|| {
        *out_ref(out_len, "out_len")? = in_ref(c, "classification")?.0.classes.len() as u32;
        Ok(())
    })
}

/// Class `index` in reference-row order.
#[no_mangle]
pub unsafe extern "C" fn hg_classification_class(
    c: *const HgClassification,
    index: u32,
    out: *mut HgClassRecord,
) -> HgStatus {
    guard(|| {
        let classes = &in_ref(c, "classification")?.0.classes;
        let r = classes
            .get(index as usize)
            .ok_or((HgStatus::InvalidArgument, format!("index {index} out of range 0..{}", classes.len())))?;
        *out_ref(out, "out")? = HgClassRecord {
            paper_row: r.paper_row.map_or(0, |row| row.no as u32),
            rep: r.orbit.rep.raw(),
            display: r.display.raw(),
            rank: r.orbit.rank,
            m: r.m(),
            orbit_size: r.orbit.size,
            ge: r.signature.ge,
            be2: r.signature.be2,
            be1: r.signature.be1,
            partition: partition(r.pattern.partition),
            real: r.pattern.reality == Reality::Real,
        };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hg_classification_report(
    c: *const HgClassification,
    format: HgReportFormat,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let c = in_ref(c, "classification")?;
        let format = match format {
            HgReportFormat::Json => ReportFormat::Json,
            HgReportFormat::Csv => ReportFormat::Csv,
            HgReportFormat::Markdown => ReportFormat::Markdown,
        };
        let doc = emit_report(&c.0, format).map_err(|e| (HgStatus::IoError, e.to_string()))?;
        give_string(doc, out)
    })
}
