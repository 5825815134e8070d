//! Geometric measure of entanglement.
//!
//! The closest product state `|Phi> = ⊗ (x_i|0> + y_i|1>)` maximizes
//! `|f| = |<psi|Phi>|`. Holding three qubits fixed, `f` is linear in the
//! fourth, `f = env_0 x_i + env_1 y_i`, so the best single-qubit state is the
//! conjugated, normalized environment and `|f|` becomes `|env|`. Sweeping this
//! update over the qubits never decreases the overlap; random restarts guard
//! against local maxima. `E_g = -log2 |f|^2`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::hypercore::HypergraphCode;
use crate::statevec::{build_state, StateVector, DIM};

/// Restarts whose overlap is within this of the best count as hits.
pub const NEAR_OPTIMAL_WINDOW: f64 = 1e-9;
/// Qubits `i`, `j` are degenerate when `|<phi_i|phi_j>| > 1 - MERGE_TOL`.
pub const MERGE_TOL: f64 = 1e-6;
/// Largest imaginary part tolerated after gauge fixing.
pub const REALITY_TOL: f64 = 1e-6;
/// A real-restricted optimum this close to the complex one counts as real.
pub const REAL_OPTIMUM_GAP: f64 = 1e-7;

const Z_MAX_STEPS: usize = 10_000;
const Z_POLE_DISTANCE: f64 = 1e-8;

pub type Qubit = [Complex64; 2];

/// Candidate closest product state, one normalized `(x_i, y_i)` per qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductState {
    pub qubits: [Qubit; 4],
}

impl ProductState {
    /// `<psi|Phi>` for a real state.
    pub fn overlap(&self, s: &StateVector) -> Complex64 {
        (0..DIM)
            .map(|mu| (0..4).fold(Complex64::new(s.amps[mu], 0.0), |acc, i| acc * self.qubits[i][mu >> i & 1]))
            .sum()
    }

    /// `z_i = y_i / x_i`.
    pub fn ratio(&self, qubit: usize) -> Complex64 {
        self.qubits[qubit][1] / self.qubits[qubit][0]
    }

    pub fn fidelity(&self, a: usize, b: usize) -> f64 {
        let (p, q) = (self.qubits[a], self.qubits[b]);
        (p[0].conj() * q[0] + p[1].conj() * q[1]).norm()
    }

    /// Whether a per-qubit phase makes every amplitude real.
    pub fn is_gauge_real(&self) -> bool {
        self.qubits.iter().all(|q| {
            let pivot = if q[0].norm() >= q[1].norm() { q[0] } else { q[1] };
            let phase = pivot.conj() / pivot.norm();
            q.iter().all(|c| (c * phase).im.abs() < REALITY_TOL)
        })
    }

    fn environment(&self, s: &StateVector, qubit: usize) -> Qubit {
        let mut env = [Complex64::new(0.0, 0.0); 2];
        for mu in 0..DIM {
            let mut term = Complex64::new(s.amps[mu], 0.0);
            for j in (0..4).filter(|&j| j != qubit) {
                term *= self.qubits[j][mu >> j & 1];
            }
            env[mu >> qubit & 1] += term;
        }
        env
    }

    /// One pass of single-qubit updates; returns the overlap after the pass.
    fn sweep(&mut self, s: &StateVector) -> f64 {
        let mut overlap = 0.0;
        for i in 0..4 {
            let env = self.environment(s, i);
            let norm = (env[0].norm_sqr() + env[1].norm_sqr()).sqrt();
            if norm > 0.0 {
                self.qubits[i] = [env[0].conj() / norm, env[1].conj() / norm];
            }
            overlap = norm;
        }
        overlap
    }
}

/// Knobs of the restart policy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverPolicy {
    pub restarts: usize,
    pub tol: f64,
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for SolverPolicy {
    fn default() -> Self {
        SolverPolicy { restarts: 64, tol: 1e-12, max_iter: 5000, seed: 0 }
    }
}

impl SolverPolicy {
    pub fn validate(&self) -> Result<(), SolverError> {
        if self.restarts == 0 {
            return Err(SolverError::NoRestarts);
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(SolverError::NonPositiveTolerance(self.tol));
        }
        Ok(())
    }

    /// Policy whose seed also depends on `code`, so each class is reproducible on its own.
    pub fn for_code(&self, code: HypergraphCode) -> SolverPolicy {
        SolverPolicy { seed: splitmix64(self.seed ^ splitmix64(code.raw() as u64 + 1)), ..*self }
    }
}

/// Which product states the restarts start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartKind {
    /// Uniform on the unit sphere of `C^2` per qubit.
    Complex,
    /// Uniform on the unit circle of `R^2`; the update keeps these real.
    Real,
}

#[derive(Debug, Clone)]
pub struct RestartOutcome {
    pub overlap: f64,
    pub state: ProductState,
    pub sweeps: usize,
    pub converged: bool,
}

#[derive(Debug, Clone)]
pub struct GeSolution {
    /// `|f|` of the best restart.
    pub overlap: f64,
    pub eg: f64,
    pub witness: ProductState,
    pub restarts_hit: usize,
    /// False when some restart used up `max_iter` while still improving.
    pub converged: bool,
    /// Final states of every hit restart, in restart order.
    pub near_optimal: Vec<ProductState>,
}

pub fn random_product_state<R: Rng>(rng: &mut R, kind: StartKind) -> ProductState {
    let mut qubit = || -> Qubit {
        let mut draw = || -> Complex64 {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = match kind {
                StartKind::Complex => rng.sample(StandardNormal),
                StartKind::Real => 0.0,
            };
            Complex64::new(re, im)
        };
        let q = [draw(), draw()];
        let norm = (q[0].norm_sqr() + q[1].norm_sqr()).sqrt();
        [q[0] / norm, q[1] / norm]
    };
    ProductState { qubits: [qubit(), qubit(), qubit(), qubit()] }
}

/// Runs the alternating update from `start` until the per-sweep gain drops below `tol`.
pub fn ascend(s: &StateVector, start: ProductState, tol: f64, max_iter: usize) -> RestartOutcome {
    let mut state = start;
    let mut overlap = state.overlap(s).norm();
    for sweep in 1..=max_iter {
        let next = state.sweep(s);
        debug_assert!(next >= overlap - 1e-14, "overlap decreased: {overlap} -> {next}");
        let gain = next - overlap;
        overlap = next;
        if gain < tol {
            return RestartOutcome { overlap, state, sweeps: sweep, converged: true };
        }
    }
    RestartOutcome { overlap, state, sweeps: max_iter, converged: false }
}

/// Overlap after each of `sweeps` passes from `start`, without early stopping.
pub fn overlap_trace(s: &StateVector, start: ProductState, sweeps: usize) -> Vec<f64> {
    let mut state = start;
    let mut trace = vec![state.overlap(s).norm()];
    trace.extend((0..sweeps).map(|_| state.sweep(s)));
    trace
}

fn solve(s: &StateVector, policy: &SolverPolicy, kind: StartKind) -> Result<GeSolution, SolverError> {
    policy.validate()?;
    let salt = match kind {
        StartKind::Complex => 0,
        StartKind::Real => 0x5eed_0000_0000_0000,
    };
    let outcomes: Vec<RestartOutcome> = (0..policy.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(splitmix64(policy.seed ^ salt).wrapping_add(r as u64)));
            let start = random_product_state(&mut rng, kind);
            ascend(s, start, policy.tol, policy.max_iter)
        })
        .collect();

    let best = outcomes.iter().enumerate().fold(0, |b, (k, o)| if o.overlap > outcomes[b].overlap { k } else { b });
    let overlap = outcomes[best].overlap.min(1.0);
    let near_optimal: Vec<ProductState> =
        outcomes.iter().filter(|o| o.overlap >= overlap - NEAR_OPTIMAL_WINDOW).map(|o| o.state).collect();
    Ok(GeSolution {
        overlap,
        eg: (overlap * overlap).recip().log2(),
        witness: outcomes[best].state,
        restarts_hit: near_optimal.len(),
        converged: outcomes.iter().all(|o| o.converged),
        near_optimal,
    })
}

/// Best product-state overlap over complex random restarts.
pub fn closest_product(s: &StateVector, policy: &SolverPolicy) -> Result<GeSolution, SolverError> {
    solve(s, policy, StartKind::Complex)
}

/// Same iteration restricted to real product states.
pub fn closest_product_real(s: &StateVector, policy: &SolverPolicy) -> Result<GeSolution, SolverError> {
    solve(s, policy, StartKind::Real)
}

/// `E_g` of the hypergraph state of `h`, seeded per code.
pub fn geometric_entanglement(h: HypergraphCode, policy: &SolverPolicy) -> Result<GeSolution, SolverError> {
    closest_product(&build_state(h), &policy.for_code(h))
}

/// How the four single-qubit factors of a witness coincide, coarsest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Partition {
    Four,
    OneThree,
    TwoTwo,
    OneTwoOne,
    Distinct,
}

impl Partition {
    pub fn from_parts(mut parts: Vec<usize>) -> Option<Self> {
        parts.sort_unstable();
        Some(match parts.as_slice() {
            [4] => Partition::Four,
            [1, 3] => Partition::OneThree,
            [2, 2] => Partition::TwoTwo,
            [1, 1, 2] => Partition::OneTwoOne,
            [1, 1, 1, 1] => Partition::Distinct,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Partition::Four => "4",
            Partition::OneThree => "1,3",
            Partition::TwoTwo => "2,2",
            Partition::OneTwoOne => "1,2,1",
            Partition::Distinct => "1,1,1,1",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        [Partition::Four, Partition::OneThree, Partition::TwoTwo, Partition::OneTwoOne, Partition::Distinct]
            .into_iter()
            .find(|p| p.label() == label)
    }

    pub fn of(state: &ProductState) -> Partition {
        let mut group = [0usize, 1, 2, 3];
        for a in 0..4 {
            for b in a + 1..4 {
                if state.fidelity(a, b) > 1.0 - MERGE_TOL {
                    let (from, to) = (group[b], group[a]);
                    group.iter_mut().filter(|g| **g == from).for_each(|g| *g = to);
                }
            }
        }
        let parts: Vec<usize> = (0..4).map(|g| group.iter().filter(|&&x| x == g).count()).filter(|&n| n > 0).collect();
        Partition::from_parts(parts).expect("parts of 4 qubits")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reality {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
}

impl fmt::Display for Reality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reality::Real => "R",
            Reality::Complex => "C",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyPattern {
    pub partition: Partition,
    pub reality: Reality,
}

impl fmt::Display for DegeneracyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.partition, self.reality)
    }
}

/// Coarsest partition over the hit restarts; real when any hit is gauge-real.
pub fn degeneracy_pattern(sol: &GeSolution) -> DegeneracyPattern {
    let partition = sol.near_optimal.iter().map(Partition::of).min().unwrap_or_else(|| Partition::of(&sol.witness));
    let reality =
        if sol.near_optimal.iter().any(ProductState::is_gauge_real) { Reality::Real } else { Reality::Complex };
    DegeneracyPattern { partition, reality }
}

/// Qubit groupings to test, coarsest first; entry `i` is the group of qubit `i`.
const GROUPINGS: [(Partition, [usize; 4]); 14] = [
    (Partition::Four, [0, 0, 0, 0]),
    (Partition::OneThree, [0, 1, 1, 1]),
    (Partition::OneThree, [1, 0, 1, 1]),
    (Partition::OneThree, [1, 1, 0, 1]),
    (Partition::OneThree, [1, 1, 1, 0]),
    (Partition::TwoTwo, [0, 0, 1, 1]),
    (Partition::TwoTwo, [0, 1, 0, 1]),
    (Partition::TwoTwo, [0, 1, 1, 0]),
    (Partition::OneTwoOne, [0, 0, 1, 2]),
    (Partition::OneTwoOne, [0, 1, 0, 2]),
    (Partition::OneTwoOne, [0, 1, 2, 0]),
    (Partition::OneTwoOne, [1, 0, 0, 2]),
    (Partition::OneTwoOne, [1, 0, 2, 0]),
    (Partition::OneTwoOne, [1, 2, 0, 0]),
];

/// Restarts per grouping in [`coarsest_attained`]; tied problems have few local maxima.
pub const TIED_RESTARTS: u64 = 16;
const TIED_MAX_SWEEPS: usize = 20_000;

fn tied_state(groups: &[Qubit], labels: [usize; 4]) -> ProductState {
    ProductState { qubits: std::array::from_fn(|i| groups[labels[i]]) }
}

/// Best overlap over product states whose qubits with equal `labels` share one
/// state. Each group moves along its summed environment with a shift that is
/// doubled until the step no longer lowers the overlap.
pub fn tied_overlap(s: &StateVector, labels: [usize; 4], restarts: u64, seed: u64) -> f64 {
    let k = labels.iter().max().map_or(0, |m| m + 1);
    (0..restarts)
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed.wrapping_add(r)));
            let start = random_product_state(&mut rng, StartKind::Complex);
            let mut groups: Vec<Qubit> = start.qubits[..k].to_vec();
            let mut current = tied_state(&groups, labels).overlap(s).norm();
            let mut shift = 1.0;
            for _ in 0..TIED_MAX_SWEEPS {
                let previous = current;
                for g in 0..k {
                    let state = tied_state(&groups, labels);
                    let mut sum = [Complex64::new(0.0, 0.0); 2];
                    for i in (0..4).filter(|&i| labels[i] == g) {
                        let env = state.environment(s, i);
                        sum[0] += env[0].conj();
                        sum[1] += env[1].conj();
                    }
                    let old = groups[g];
                    let inner = old[0].conj() * sum[0] + old[1].conj() * sum[1];
                    let phase = if inner.norm() > 0.0 { inner.conj() / inner.norm() } else { Complex64::new(1.0, 0.0) };
                    while shift < 1e6 {
                        let cand = [sum[0] * phase + old[0] * shift, sum[1] * phase + old[1] * shift];
                        let norm = (cand[0].norm_sqr() + cand[1].norm_sqr()).sqrt();
                        groups[g] = [cand[0] / norm, cand[1] / norm];
                        let value = tied_state(&groups, labels).overlap(s).norm();
                        if value >= current - 1e-15 {
                            current = value;
                            break;
                        }
                        groups[g] = old;
                        shift *= 2.0;
                    }
                }
                if current - previous < 1e-14 {
                    break;
                }
            }
            current
        })
        .fold(0.0, f64::max)
}

/// Coarsest partition reached by some maximizer, given that `known` is: the
/// first strictly coarser grouping whose tied optimum is within
/// [`NEAR_OPTIMAL_WINDOW`] of `best`, else `known`.
pub fn coarsest_attained(s: &StateVector, best: f64, known: Partition, policy: &SolverPolicy) -> Partition {
    GROUPINGS
        .iter()
        .enumerate()
        .filter(|(_, (p, _))| *p < known)
        .find(|(k, (_, labels))| {
            tied_overlap(s, *labels, TIED_RESTARTS, policy.seed ^ (*k as u64) << 48) >= best - NEAR_OPTIMAL_WINDOW
        })
        .map_or(known, |(_, (p, _))| *p)
}

/// Closest-product structure from a complex and a real-restricted solve.
#[derive(Debug, Clone)]
pub struct StructureAnalysis {
    pub complex: GeSolution,
    pub real_overlap: f64,
    /// Coarsest partition among the hit restarts alone.
    pub sampled: Partition,
    pub pattern: DegeneracyPattern,
}

/// The partition is the coarsest over the hit restarts and the tied
/// optimizations, so isolated points of a degenerate maximizer family are not
/// left to chance. The witness is real when the real-restricted optimum
/// reaches the complex one (maximizer families can hold real and complex
/// points alike).
pub fn analyze_structure(s: &StateVector, policy: &SolverPolicy) -> Result<StructureAnalysis, SolverError> {
    let complex = closest_product(s, policy)?;
    let real = closest_product_real(s, policy)?;
    let best = complex.overlap.max(real.overlap);
    let hits = complex
        .near_optimal
        .iter()
        .chain(&real.near_optimal)
        .filter(|p| p.overlap(s).norm() >= best - NEAR_OPTIMAL_WINDOW);
    let sampled = hits.map(Partition::of).min().unwrap_or_else(|| Partition::of(&complex.witness));
    let partition = coarsest_attained(s, best, sampled, policy);
    let reality = if real.overlap >= best - REAL_OPTIMUM_GAP || degeneracy_pattern(&complex).reality == Reality::Real {
        Reality::Real
    } else {
        Reality::Complex
    };
    Ok(StructureAnalysis {
        real_overlap: real.overlap,
        complex,
        sampled,
        pattern: DegeneracyPattern { partition, reality },
    })
}

/// Fixed-point map of the symmetric ansatz `(x|0> + y|1>)^{⊗3}` for the
/// three-qubit state with one 3-edge, in `z = y / x`:
/// `conj(z') = (1 + 2z - z^2) / (1 + z)^2`.
pub fn symmetric_z_step(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    ((one + 2.0 * z - z * z) / ((one + z) * (one + z))).conj()
}

pub fn symmetric_z_iteration(z0: Complex64, tol: f64) -> Result<Complex64, SolverError> {
    let pole = Complex64::new(-1.0, 0.0);
    let mut z = z0;
    for _ in 0..Z_MAX_STEPS {
        if (z - pole).norm() < Z_POLE_DISTANCE {
            return Err(SolverError::Divergence { re: z.re, im: z.im });
        }
        let next = symmetric_z_step(z);
        let step = (next - z).norm();
        z = next;
        if step < tol {
            break;
        }
    }
    Ok(z)
}

/// The real root of `z^3 + 3z^2 - z - 1 = 0` selected by the iteration.
pub fn three_qubit_closed_form_z() -> f64 {
    let tau = (37.0f64 / 27.0).sqrt().atan() / 3.0;
    -1.0 - 4.0 * 3f64.sqrt() / 3.0 * (tau + 2.0 * PI / 3.0).cos()
}

/// `E_g` of the three-qubit 3-edge state at the symmetric product state with real ratio `z`.
pub fn three_qubit_eg_at(z: f64) -> f64 {
    let f = ((1.0 + z).powi(3) - 2.0 * z.powi(3)) / (8f64.sqrt() * (1.0 + z * z).powf(1.5));
    -(f * f).log2()
}

/// An exactly known `E_g` for one class (numbering of the reference tables).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    pub class_no: u8,
    pub expression: &'static str,
    pub value: f64,
}

/// Every exactly known class value.
pub fn closed_form_reference() -> Vec<ClosedForm> {
    let log2 = f64::log2;
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let entries: [(u8, &'static str, f64); 16] = [
        (5, "3+2log2(3/5)", 3.0 + 2.0 * log2(3.0 / 5.0)),
        (11, "5-log2(9+3sqrt3)", 5.0 - log2(9.0 + 3.0 * s3)),
        (12, "-log2 f(z)^2, z^3+3z^2-z-1=0", three_qubit_eg_at(three_qubit_closed_form_z())),
        (14, "1", 1.0),
        (15, "3+2log2(3/5)", 3.0 + 2.0 * log2(3.0 / 5.0)),
        (16, "4-2log2(1+sqrt5)", 4.0 - 2.0 * log2(1.0 + s5)),
        (17, "2.5-log2(1+sqrt2)", 2.5 - log2(1.0 + s2)),
        (18, "1", 1.0),
        (19, "3-log2(3)", 3.0 - log2(3.0)),
        (20, "4-2log2(1+sqrt2)", 4.0 - 2.0 * log2(1.0 + s2)),
        (21, "4-2log2(1+sqrt2)", 4.0 - 2.0 * log2(1.0 + s2)),
        (22, "1", 1.0),
        (23, "3-log2(5)", 3.0 - log2(5.0)),
        (25, "3-log2(3)", 3.0 - log2(3.0)),
        (26, "6-2log2(3+sqrt5)", 6.0 - 2.0 * log2(3.0 + s5)),
        (28, "4-2log2(3)", 4.0 - 2.0 * log2(3.0)),
    ];
    entries.into_iter().map(|(class_no, expression, value)| ClosedForm { class_no, expression, value }).collect()
}

pub fn closed_form_for(class_no: u8) -> Option<ClosedForm> {
    closed_form_reference().into_iter().find(|c| c.class_no == class_no)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> HypergraphCode {
        s.parse().unwrap()
    }

    #[test]
    fn product_state_has_zero_eg() {
        let sol = geometric_entanglement(h(""), &SolverPolicy::default()).unwrap();
        assert!((sol.overlap - 1.0).abs() < 1e-12);
        assert!(sol.eg.abs() < 1e-10);
    }

    #[test]
    fn small_class_values() {
        let policy = SolverPolicy::default();
        assert!((geometric_entanglement(h("1234"), &policy).unwrap().eg - 0.3043).abs() < 5e-4);
        assert!((geometric_entanglement(h("123"), &policy).unwrap().eg - 0.5647).abs() < 5e-4);
    }

    #[test]
    fn overlap_never_decreases() {
        let s = build_state(h("1234,12,34"));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..8 {
            let trace = overlap_trace(&s, random_product_state(&mut rng, StartKind::Complex), 200);
            assert!(trace.windows(2).all(|w| w[1] >= w[0] - 1e-14));
        }
    }

    #[test]
    fn real_starts_stay_real() {
        let s = build_state(h("123,14"));
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let out = ascend(&s, random_product_state(&mut rng, StartKind::Real), 1e-12, 5000);
        assert!(out.state.qubits.iter().flatten().all(|c| c.im == 0.0));
    }

    #[test]
    fn rejects_bad_policy() {
        let s = build_state(h(""));
        let zero = SolverPolicy { restarts: 0, ..SolverPolicy::default() };
        assert_eq!(closest_product(&s, &zero).unwrap_err(), SolverError::NoRestarts);
        let neg = SolverPolicy { tol: 0.0, ..SolverPolicy::default() };
        assert!(closest_product(&s, &neg).is_err());
    }

    #[test]
    fn reports_non_convergence() {
        let s = build_state(h("1234,12"));
        let policy = SolverPolicy { max_iter: 1, restarts: 4, ..SolverPolicy::default() };
        assert!(!closest_product(&s, &policy).unwrap().converged);
    }

    #[test]
    fn z_iteration_from_half() {
        let z = symmetric_z_iteration(Complex64::new(0.5, 0.0), 1e-14).unwrap();
        assert!((z.re - 0.6751).abs() < 1e-3);
        let residual = z * z * z + 3.0 * z * z - z - 1.0;
        assert!(residual.norm() < 1e-9);
    }

    #[test]
    fn z_iteration_pole() {
        let err = symmetric_z_iteration(Complex64::new(-1.0, 0.0), 1e-12).unwrap_err();
        assert!(matches!(err, SolverError::Divergence { .. }));
    }

    #[test]
    fn closed_forms() {
        let cf = |n| closed_form_for(n).unwrap().value;
        assert!((cf(5) - 1.5261).abs() < 5e-5);
        assert!((cf(16) - 0.6115).abs() < 5e-5);
        assert!((cf(28) - 0.8301).abs() < 5e-5);
        assert!((three_qubit_closed_form_z() - 0.6751).abs() < 1e-4);
        assert!((cf(12) - 0.5647).abs() < 5e-5);
        assert_eq!(closed_form_reference().len(), 16);
    }

    #[test]
    fn partitions() {
        let plus = [Complex64::new(0.5f64.sqrt(), 0.0); 2];
        let zero = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let one = [Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)];
        let p = |q: [Qubit; 4]| Partition::of(&ProductState { qubits: q });
        assert_eq!(p([plus; 4]), Partition::Four);
        assert_eq!(p([zero, plus, plus, plus]), Partition::OneThree);
        assert_eq!(p([zero, zero, plus, plus]), Partition::TwoTwo);
        assert_eq!(p([zero, one, plus, plus]), Partition::OneTwoOne);
        assert!(Partition::Four < Partition::OneThree && Partition::OneTwoOne < Partition::Distinct);
        assert_eq!(Partition::from_label("1,2,1"), Some(Partition::OneTwoOne));
        // a global phase on one qubit keeps it real
        assert!(ProductState { qubits: [one, zero, plus, plus] }.is_gauge_real());
        let tilted = [Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        assert!(!ProductState { qubits: [tilted, zero, plus, plus] }.is_gauge_real());
    }
}
