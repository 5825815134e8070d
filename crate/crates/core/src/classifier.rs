//! Per-orbit signatures, matching against the reference tables, and the
//! closest-product structure of each class.
//!
//! A class is identified by `(rank, E_g, 2|2 entropy multiset)`; the 1|3
//! multiset and the multiplicity are then checked against the matched row.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::ClassifyError;
use crate::geoment::{
    analyze_structure, closed_form_for, degeneracy_pattern, geometric_entanglement, ClosedForm, DegeneracyPattern,
    Partition, Reality, SolverPolicy,
};
use crate::hypercore::{HypergraphCode, Permutation};
use crate::orbits::{rank_census, OrbitRecord, OrbitTable, RankCensus};
use crate::reference::{ReferenceRow, REFERENCE_ROWS};
use crate::statevec::{build_state, entropy_profile};

/// Tolerance for comparing against 4-decimal table values and between classes.
pub const MATCH_TOL: f64 = 5e-4;
/// Number of rank-3 and rank-4 classes.
pub const HYPERGRAPH_CLASSES: usize = 28;

/// `E_g` plus the entropy multisets, each sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassSignature {
    pub ge: f64,
    pub be2: [f64; 3],
    pub be1: [f64; 4],
}

impl ClassSignature {
    pub fn approx_eq(&self, other: &ClassSignature, tol: f64) -> bool {
        (self.ge - other.ge).abs() < tol
            && close_all(&self.be2, &other.be2, tol)
            && close_all(&self.be1, &other.be1, tol)
    }
}

fn close_all(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
}

fn sorted_desc<const N: usize>(mut v: [f64; N]) -> [f64; N] {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Signature of the orbit containing `h`, computed on its smallest member.
pub fn signature(table: &OrbitTable, h: HypergraphCode, policy: &SolverPolicy) -> Result<SignatureRun, ClassifyError> {
    let rep = table.orbit_of(h).rep;
    let sol = geometric_entanglement(rep, policy)?;
    let profile = entropy_profile(rep);
    Ok(SignatureRun {
        signature: ClassSignature { ge: sol.eg, be2: sorted_desc(profile.be2), be1: sorted_desc(profile.be1) },
        restarts_hit: sol.restarts_hit,
        converged: sol.converged,
        witness_pattern: degeneracy_pattern(&sol),
    })
}

/// A signature together with the solver diagnostics that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignatureRun {
    pub signature: ClassSignature,
    pub restarts_hit: usize,
    pub converged: bool,
    /// Pattern of the representative's own hit restarts.
    pub witness_pattern: DegeneracyPattern,
}

/// Closest-product pattern found on one standard member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemberPattern {
    pub member: HypergraphCode,
    /// Coarsest partition attained by any maximizer.
    pub partition: Partition,
    /// Coarsest partition among the hit restarts alone.
    pub sampled: Partition,
}

#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub orbit: OrbitRecord,
    /// Standardized form of the representative.
    pub display: HypergraphCode,
    pub signature: ClassSignature,
    pub restarts_hit: usize,
    pub converged: bool,
    pub pattern: DegeneracyPattern,
    /// Pattern of every standard member, one per permutation class.
    pub member_patterns: Vec<MemberPattern>,
    pub closed_form: Option<ClosedForm>,
    pub paper_row: Option<&'static ReferenceRow>,
}

impl ClassRecord {
    pub fn paper_table(&self) -> Option<&'static str> {
        self.paper_row.map(ReferenceRow::table)
    }

    /// Number of standard hypergraphs in the orbit as computed.
    pub fn m(&self) -> u32 {
        self.orbit.m.unwrap_or(0)
    }

    /// Whether the computed multiplicity agrees with the matched row.
    pub fn m_matches_row(&self) -> bool {
        self.paper_row.is_some_and(|r| r.m == self.m())
    }

    pub fn be1_matches_row(&self) -> bool {
        self.paper_row.is_some_and(|r| close_all(&self.signature.be1, &sorted_desc(r.be1_values()), MATCH_TOL))
    }
}

/// Graph-state orbit (rank at most 2), reported but never matched.
#[derive(Debug, Clone)]
pub struct GraphClass {
    /// `G1`, `G2`, ... by increasing canonical code.
    pub label: String,
    pub orbit: OrbitRecord,
    pub display: HypergraphCode,
    pub signature: ClassSignature,
    pub restarts_hit: usize,
    pub pattern: DegeneracyPattern,
}

impl GraphClass {
    /// Loop-free members of the orbit.
    pub fn m(&self) -> u32 {
        self.orbit.size / 16
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    /// The 28 hypergraph classes ordered by reference row.
    pub classes: Vec<ClassRecord>,
    pub graphs: Vec<GraphClass>,
    pub census: RankCensus,
    pub seed: u64,
}

/// Unique table row with the same rank, `E_g` and 2|2 multiset.
pub fn match_reference_row(rank: u32, sig: &ClassSignature) -> Result<&'static ReferenceRow, Vec<u8>> {
    let hits: Vec<&ReferenceRow> = REFERENCE_ROWS
        .iter()
        .filter(|r| {
            r.rank() == rank
                && (r.ge - sig.ge).abs() < MATCH_TOL
                && close_all(&sorted_desc(r.be2_values()), &sig.be2, MATCH_TOL)
        })
        .collect();
    match hits.as_slice() {
        [one] => Ok(one),
        _ => Err(hits.iter().map(|r| r.no).collect()),
    }
}

/// Loop-free members of the orbit (also 3-edge-free at rank 4), one per
/// vertex-permutation class.
pub fn standard_members(table: &OrbitTable, id: usize) -> Vec<HypergraphCode> {
    let perms = Permutation::all();
    let canonical: BTreeSet<HypergraphCode> = table
        .members(id)
        .filter(|c| c.is_standard())
        .map(|c| perms.iter().map(|p| c.permute(p)).min().expect("24 permutations"))
        .collect();
    canonical.into_iter().collect()
}

/// Coarsest closest-product partition over the standard members; real when
/// the real-restricted optimum reaches the complex one.
pub fn class_pattern(
    table: &OrbitTable,
    id: usize,
    policy: &SolverPolicy,
) -> Result<(DegeneracyPattern, Vec<MemberPattern>), ClassifyError> {
    let members = standard_members(table, id);
    let analyses = members
        .par_iter()
        .map(|&m| analyze_structure(&build_state(m), &policy.for_code(m)).map(|a| (m, a)))
        .collect::<Result<Vec<_>, _>>()?;
    let member_patterns: Vec<MemberPattern> = analyses
        .iter()
        .map(|(m, a)| MemberPattern { member: *m, partition: a.pattern.partition, sampled: a.sampled })
        .collect();
    let partition = member_patterns.iter().map(|p| p.partition).min().unwrap_or(Partition::Distinct);
    let reality =
        if analyses.iter().all(|(_, a)| a.pattern.reality == Reality::Real) { Reality::Real } else { Reality::Complex };
    Ok((DegeneracyPattern { partition, reality }, member_patterns))
}

fn display_form(code: HypergraphCode) -> HypergraphCode {
    code.standardize().unwrap_or(code)
}

fn check_distinct(classes: &[ClassRecord]) -> Result<(), ClassifyError> {
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            if a.signature.approx_eq(&b.signature, MATCH_TOL) {
                return Err(ClassifyError::Collision { a: a.orbit.rep.raw(), b: b.orbit.rep.raw() });
            }
        }
    }
    Ok(())
}

/// Classifies every orbit of `table`: the 28 hypergraph classes matched to
/// reference rows, plus the graph-state orbits.
pub fn classify_all(table: &OrbitTable, policy: &SolverPolicy) -> Result<Classification, ClassifyError> {
    policy.validate()?;
    let census = rank_census(table)?;
    let records: Vec<OrbitRecord> = table.records().collect();

    let runs = records.par_iter().map(|r| signature(table, r.rep, policy)).collect::<Result<Vec<_>, _>>()?;

    let mut classes = Vec::new();
    let mut graphs = Vec::new();
    for (orbit, run) in records.iter().zip(&runs) {
        if orbit.rank >= 3 {
            let row = match_reference_row(orbit.rank, &run.signature).map_err(|rows| match rows.len() {
                0 => ClassifyError::Unmatched { rep: orbit.rep.raw() },
                _ => ClassifyError::Ambiguous { rep: orbit.rep.raw(), rows },
            })?;
            let (pattern, member_patterns) = class_pattern(table, orbit.id, policy)?;
            classes.push(ClassRecord {
                orbit: *orbit,
                display: display_form(orbit.rep),
                signature: run.signature,
                restarts_hit: run.restarts_hit,
                converged: run.converged,
                pattern,
                member_patterns,
                closed_form: closed_form_for(row.no),
                paper_row: Some(row),
            });
        } else {
            graphs.push(GraphClass {
                label: format!("G{}", graphs.len() + 1),
                orbit: *orbit,
                display: display_form(orbit.rep),
                signature: run.signature,
                restarts_hit: run.restarts_hit,
                pattern: run.witness_pattern,
            });
        }
    }

    if classes.len() != HYPERGRAPH_CLASSES {
        return Err(ClassifyError::ClassCount { expected: HYPERGRAPH_CLASSES, found: classes.len() });
    }
    classes.sort_by_key(|c| c.paper_row.map(|r| r.no));
    if let Some(w) = classes.windows(2).find(|w| w[0].paper_row == w[1].paper_row) {
        return Err(ClassifyError::RowClaimedTwice { row: w[0].paper_row.map_or(0, |r| r.no) });
    }
    check_distinct(&classes)?;
    Ok(Classification { classes, graphs, census, seed: policy.seed })
}
