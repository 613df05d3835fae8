//! Max-Cut landscapes for the depth-one Quantum Approximate Optimization
//! Algorithm.
//!
//! The crate converts unweighted Max-Cut instances into Ising models,
//! evaluates the p=1 QAOA energy `<β,γ|H_P|β,γ>` in closed form and by exact
//! statevector simulation, and measures how rough the resulting landscape is
//! (total variation over 1D slices, Fourier density of the 2D spectrum).
//!
//! Everything here is `no_std` + `alloc`. File formats, reports and the
//! command line live in the `maxcut-qaoa` companion crate.
//!
//! Conventions used throughout:
//!
//! * vertices are 0-based; an assignment `x ∈ {0,1}^n` is a bit mask with
//!   bit `j` holding `x_j`;
//! * spins are `s_j = 1 - 2 x_j`, so `Z_j` has eigenvalue `s_j` on `|x>`;
//! * energies are minimized; for Max-Cut the energy of `x` is `-cut(x)`.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod analytic;
pub mod engine;
mod error;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod ising;
pub mod rng;
pub mod roughness;
#[cfg(test)]
mod testutil;

pub use analytic::{
    analytic_expectation, edge_expectation, landscape_grid, AnalyticModel, AxisRange, GridSpec,
    Landscape, Provenance, QaoaParams,
};
pub use engine::spsa::{spsa_optimize, InitialPoint, OptimizationResult, SpsaConfig, TraceEntry};
pub use engine::statevector::{
    exact_expectation, qaoa_state, sampled_expectation, Schedule, Simulator, Statevector,
};
pub use error::{Error, Result};
pub use fixtures::{fixture_graph, FIXTURE_IDS};
pub use graph::{brute_force_maxcut, edge_structure, CutResult, EdgeStructure, Graph};
pub use graph6::{encode_graph6, parse_graph6};
pub use ising::{
    augmented_matrix, cut_spectrum, maxcut_qubo, qubo_to_ising, symmetry_report, AugmentedMatrix,
    Coeff, Coupling, GammaPeriod, IsingModel, QuboProblem, SymmetryReport,
};
pub use roughness::{
    fourier_density, measure_landscape, roughness_report, total_variation, FourierDensity,
    RoughnessReport,
};

/// Largest vertex count accepted by exhaustive enumeration over `{0,1}^n`.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// Largest qubit count the statevector simulator will allocate.
pub const MAX_SIMULATION_QUBITS: usize = 22;
