//! Statevector simulation of QAOA circuits and SPSA angle optimization.

pub mod spsa;
pub mod statevector;
