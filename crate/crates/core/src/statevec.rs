//! Dense four-qubit states, the nonlocal stabilizers of hypergraph states and
//! bipartite entanglement entropies.
//!
//! Amplitudes are indexed by the basis string `mu` with qubit `i` on bit
//! `i - 1`, matching the vertex bits of [`crate::hypercore`].

use serde::{Deserialize, Serialize};

use crate::eigen::{jacobi_eigenvalues, symmetric_eigenvalues_2x2};
use crate::error::StateError;
use crate::hypercore::{EdgeMask, HypergraphCode, Vertex};

pub const DIM: usize = 16;

/// Tolerance used by the structural checks on vectors and operators.
pub const CHECK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    pub amps: [f64; DIM],
}

impl StateVector {
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }

    /// `X_v |psi>`.
    pub fn apply_x(&self, v: Vertex) -> StateVector {
        let bit = v.bit() as usize;
        StateVector { amps: std::array::from_fn(|mu| self.amps[mu ^ bit]) }
    }

    /// `Z_v |psi>`.
    pub fn apply_z(&self, v: Vertex) -> StateVector {
        let bit = v.bit() as usize;
        StateVector { amps: std::array::from_fn(|mu| if mu & bit != 0 { -self.amps[mu] } else { self.amps[mu] }) }
    }

    pub fn negated(&self) -> StateVector {
        StateVector { amps: self.amps.map(|a| -a) }
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Whether the states agree entrywise up to one global sign.
    pub fn equals_up_to_sign(&self, other: &StateVector, tol: f64) -> bool {
        self.max_abs_diff(other) < tol || self.max_abs_diff(&other.negated()) < tol
    }
}

/// `|H> = prod_e U_e |+>^4`, amplitudes `(-1)^g(mu) / 4`.
pub fn build_state(h: HypergraphCode) -> StateVector {
    let g = h.signs();
    StateVector { amps: std::array::from_fn(|mu| if g.get(mu) { -0.25 } else { 0.25 }) }
}

/// Dense real 16×16 operator, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator16 {
    pub m: [[f64; DIM]; DIM],
}

impl Operator16 {
    pub fn identity() -> Self {
        Self::diagonal(|_| 1.0)
    }

    fn diagonal(f: impl Fn(usize) -> f64) -> Self {
        let mut m = [[0.0; DIM]; DIM];
        for (mu, row) in m.iter_mut().enumerate() {
            row[mu] = f(mu);
        }
        Operator16 { m }
    }

    pub fn pauli_x(v: Vertex) -> Self {
        let bit = v.bit() as usize;
        let mut m = [[0.0; DIM]; DIM];
        for (mu, row) in m.iter_mut().enumerate() {
            row[mu ^ bit] = 1.0;
        }
        Operator16 { m }
    }

    pub fn pauli_z(v: Vertex) -> Self {
        Self::controlled_z(EdgeMask::new(v.bit()).expect("vertex bit is a valid edge"))
    }

    /// Multi-controlled Z on the vertices of `e`: `-1` on basis strings containing `e`.
    pub fn controlled_z(e: EdgeMask) -> Self {
        Self::diagonal(|mu| if e.is_subset_of(mu as u8) { -1.0 } else { 1.0 })
    }

    pub fn scaled(mut self, s: f64) -> Self {
        self.m.iter_mut().flatten().for_each(|x| *x *= s);
        self
    }

    pub fn mul(&self, rhs: &Operator16) -> Operator16 {
        let mut m = [[0.0; DIM]; DIM];
        for (i, row) in m.iter_mut().enumerate() {
            for k in 0..DIM {
                let a = self.m[i][k];
                if a != 0.0 {
                    for (j, x) in row.iter_mut().enumerate() {
                        *x += a * rhs.m[k][j];
                    }
                }
            }
        }
        Operator16 { m }
    }

    pub fn apply(&self, s: &StateVector) -> StateVector {
        StateVector { amps: std::array::from_fn(|i| self.m[i].iter().zip(&s.amps).map(|(a, b)| a * b).sum()) }
    }

    pub fn max_abs_diff(&self, other: &Operator16) -> f64 {
        self.m.iter().flatten().zip(other.m.iter().flatten()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

/// `prod_{e in N(v)} U_e`, with the global `-1` a loop on `v` contributes.
pub fn neighborhood_gate(h: HypergraphCode, v: Vertex) -> Operator16 {
    let sign = if h.has_loop(v) { -1.0 } else { 1.0 };
    h.neighborhood(v).edges().fold(Operator16::identity(), |acc, e| acc.mul(&Operator16::controlled_z(e))).scaled(sign)
}

/// `K_v = X_v prod_{e in N(v)} U_e`.
pub fn stabilizer_operator(h: HypergraphCode, v: Vertex) -> Operator16 {
    Operator16::pauli_x(v).mul(&neighborhood_gate(h, v))
}

/// Largest `|K_v s - s|` entry over the four generators of `h`.
pub fn stabilizer_residual(h: HypergraphCode, s: &StateVector) -> f64 {
    Vertex::ALL.iter().map(|&v| stabilizer_operator(h, v).apply(s).max_abs_diff(s)).fold(0.0, f64::max)
}

/// Checks `K_v |H> = |H>` for every vertex and that the generators commute.
pub fn verify_stabilizers(h: HypergraphCode) -> bool {
    let state = build_state(h);
    let ks: Vec<Operator16> = Vertex::ALL.iter().map(|&v| stabilizer_operator(h, v)).collect();
    if ks.iter().any(|k| k.apply(&state).max_abs_diff(&state) >= CHECK_TOL) {
        return false;
    }
    for i in 0..ks.len() {
        for j in i + 1..ks.len() {
            if ks[i].mul(&ks[j]).max_abs_diff(&ks[j].mul(&ks[i])) >= CHECK_TOL {
                return false;
            }
        }
    }
    true
}

/// Checks `prod_{N(v)} U |H> = X_v |H>` exactly, without sign freedom.
pub fn neighborhood_equivalence_check(h: HypergraphCode, v: Vertex) -> bool {
    let state = build_state(h);
    neighborhood_gate(h, v).apply(&state).max_abs_diff(&state.apply_x(v)) < CHECK_TOL
}

/// Reduced density matrix of one or two qubits, row-major in a 4×4 buffer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    data: [[f64; 4]; 4],
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i][j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.data[i][i]).sum()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev = match self.dim {
            2 => symmetric_eigenvalues_2x2([[self.data[0][0], self.data[0][1]], [self.data[1][0], self.data[1][1]]])
                .to_vec(),
            _ => jacobi_eigenvalues(self.data).to_vec(),
        };
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }
}

/// Traces out every qubit not in `keep`. Kept qubits are ordered by vertex label.
pub fn reduced_density(s: &StateVector, keep: u8) -> Result<DensityMatrix, StateError> {
    let kept = keep.count_ones();
    if keep & !0b1111 != 0 || !(1..=2).contains(&kept) {
        return Err(StateError::InvalidKeepMask(keep));
    }
    let kept_bits: Vec<usize> = (0..4).filter(|b| keep >> b & 1 == 1).collect();
    let local =
        |mu: usize| -> usize { kept_bits.iter().enumerate().fold(0, |acc, (k, &b)| acc | ((mu >> b) & 1) << k) };
    let env_mask = !(keep as usize) & 0b1111;
    let mut data = [[0.0; 4]; 4];
    for mu in 0..DIM {
        for nu in 0..DIM {
            if mu & env_mask == nu & env_mask {
                data[local(mu)][local(nu)] += s.amps[mu] * s.amps[nu];
            }
        }
    }
    Ok(DensityMatrix { dim: 1 << kept, data })
}

/// Von Neumann entropy in bits, eigenvalues clamped to `[0, 1]`.
pub fn entropy(d: &DensityMatrix) -> f64 {
    d.eigenvalues()
        .into_iter()
        .map(|l| l.clamp(0.0, 1.0))
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.log2())
        .sum::<f64>()
        .max(0.0)
}

/// Entropies of all seven bipartitions, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyProfile {
    /// Cuts 1|234, 2|134, 3|124, 4|123.
    pub be1: [f64; 4],
    /// Cuts 12|34, 13|24, 14|23.
    pub be2: [f64; 3],
}

/// Keep masks for the 2|2 cuts in reporting order.
pub const TWO_TWO_CUTS: [u8; 3] = [0b0011, 0b0101, 0b1001];

pub fn state_entropy_profile(s: &StateVector) -> EntropyProfile {
    let cut = |keep: u8| entropy(&reduced_density(s, keep).expect("valid cut"));
    EntropyProfile { be1: std::array::from_fn(|i| cut(1 << i)), be2: TWO_TWO_CUTS.map(cut) }
}

pub fn entropy_profile(h: HypergraphCode) -> EntropyProfile {
    state_entropy_profile(&build_state(h))
}
