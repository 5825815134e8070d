//! Four-qubit hypergraph states and their classification under local Pauli
//! operations and vertex permutations.
//!
//! - [`hypercore`]: hypergraph codes, the sign-function bijection, X/Z moves.
//! - [`statevec`]: dense states, stabilizers, reduced density matrices, entropies.
//! - [`geoment`]: geometric measure of entanglement and closest product states.
//! - [`orbits`]: exhaustive orbit enumeration over all `2^15` codes.
//! - [`classifier`]: per-class signatures, reference matching and reports.

pub mod classifier;
pub mod eigen;
pub mod error;
pub mod geoment;
pub mod hypercore;
pub mod orbits;
pub mod reference;
pub mod report;
pub mod statevec;
pub mod verify;

pub use error::{ClassifyError, HypergraphError, OrbitError, ReportError, SolverError, StateError};
pub use geoment::{DegeneracyPattern, GeSolution, Partition, ProductState, Reality, SolverPolicy};
pub use hypercore::{EdgeMask, HypergraphCode, Permutation, SignFunction, Vertex};
pub use orbits::{enumerate_orbits, OrbitRecord, OrbitTable};
pub use statevec::{EntropyProfile, StateVector};
