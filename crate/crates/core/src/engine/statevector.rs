//! Dense statevector evolution.
//!
//! Basis index `i` encodes `|x>` little-endian: bit `j` of `i` is `x_j`, the
//! state of qubit `j`.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{contract, Error, Result};
use crate::ising::{to_f64, IsingModel};
use crate::rng;
use crate::MAX_SIMULATION_QUBITS;

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 {
        return Err(contract("register must have at least one qubit"));
    }
    if n > MAX_SIMULATION_QUBITS {
        return Err(Error::Capacity {
            what: "statevector",
            size: n,
            limit: MAX_SIMULATION_QUBITS,
        });
    }
    Ok(())
}

/// Amplitudes of an `n`-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    /// `H^{⊗n}|0>`.
    pub fn uniform(n: usize) -> Result<Self> {
        check_qubits(n)?;
        let dim = 1usize << n;
        let a = Complex64::new(1.0 / libm::sqrt(dim as f64), 0.0);
        Ok(Self {
            n,
            amps: alloc::vec![a; dim],
        })
    }

    /// Computational basis state `|index>`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_qubits(n)?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(contract("basis index outside the register"));
        }
        let mut amps = alloc::vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Wraps raw amplitudes; the length must be a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let n = amps.len().trailing_zeros() as usize;
        if amps.len() != 1 << n {
            return Err(contract("amplitude count is not a power of two"));
        }
        check_qubits(n)?;
        Ok(Self { n, amps })
    }

    /// Number of qubits.
    pub fn qubit_count(&self) -> usize {
        self.n
    }

    /// Amplitudes in basis order.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// `Σ |a_i|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Measurement probabilities in basis order.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `e^{-iγ diag(energies)}`.
    pub fn apply_phase(&mut self, energies: &[f64], gamma: f64) -> Result<()> {
        if energies.len() != self.amps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.amps.len(),
                found: energies.len(),
            });
        }
        for (a, &e) in self.amps.iter_mut().zip(energies) {
            let theta = -gamma * e;
            *a *= Complex64::new(libm::cos(theta), libm::sin(theta));
        }
        Ok(())
    }

    /// `e^{-iβ X_q}` on qubit `q`.
    pub fn apply_rx(&mut self, q: usize, beta: f64) {
        assert!(q < self.n, "qubit {q} outside register of {}", self.n);
        let (c, s) = (libm::cos(beta), libm::sin(beta));
        let mis = Complex64::new(0.0, -s);
        let bit = 1usize << q;
        for i in 0..self.amps.len() {
            if i & bit == 0 {
                let (a0, a1) = (self.amps[i], self.amps[i | bit]);
                self.amps[i] = a0 * c + a1 * mis;
                self.amps[i | bit] = a0 * mis + a1 * c;
            }
        }
    }

    /// `Π_j e^{-iβ X_j}`.
    pub fn apply_mixer(&mut self, beta: f64) {
        for q in 0..self.n {
            self.apply_rx(q, beta);
        }
    }

    /// `Σ_i |a_i|^2 energies[i]`.
    pub fn diagonal_expectation(&self, energies: &[f64]) -> Result<f64> {
        if energies.len() != self.amps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.amps.len(),
                found: energies.len(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(energies)
            .map(|(a, e)| a.norm_sqr() * e)
            .sum())
    }
}

/// Angles `(γ_1, β_1), …, (γ_p, β_p)` of a p-layer circuit.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    layers: Vec<(f64, f64)>,
}

impl Schedule {
    /// Layers as `(γ, β)` pairs, applied in order.
    pub fn new(layers: Vec<(f64, f64)>) -> Result<Self> {
        if layers.is_empty() {
            return Err(contract("schedule needs at least one layer"));
        }
        if layers.iter().any(|(g, b)| !g.is_finite() || !b.is_finite()) {
            return Err(contract("schedule angles must be finite"));
        }
        Ok(Self { layers })
    }

    /// One layer.
    pub fn single(gamma: f64, beta: f64) -> Self {
        Self {
            layers: alloc::vec![(gamma, beta)],
        }
    }

    /// `p`.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// `(γ, β)` pairs.
    pub fn layers(&self) -> &[(f64, f64)] {
        &self.layers
    }
}

/// An Ising model prepared for repeated simulation: the `2^n` basis energies
/// are computed once.
#[derive(Debug, Clone)]
pub struct Simulator {
    n: usize,
    diagonal: Vec<f64>,
    offset: f64,
}

impl Simulator {
    /// Precomputes the diagonal of `model`.
    pub fn new(model: &IsingModel) -> Result<Self> {
        check_qubits(model.spin_count())?;
        Ok(Self {
            n: model.spin_count(),
            diagonal: model.diagonal()?,
            offset: to_f64(&model.offset()),
        })
    }

    /// Number of qubits.
    pub fn qubit_count(&self) -> usize {
        self.n
    }

    /// Basis energies without the offset.
    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    /// Constant energy shift.
    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Runs the circuit. The offset only contributes a global phase and is
    /// left out of `U_P`.
    pub fn state(&self, schedule: &Schedule) -> Statevector {
        let mut v = Statevector::uniform(self.n).expect("qubit count checked in new");
        for &(gamma, beta) in schedule.layers() {
            v.apply_phase(&self.diagonal, gamma)
                .expect("diagonal matches register");
            v.apply_mixer(beta);
        }
        v
    }

    /// `<v|H|v>` including the offset.
    pub fn expectation(&self, v: &Statevector) -> Result<f64> {
        Ok(v.diagonal_expectation(&self.diagonal)? + self.offset)
    }

    /// Exact p=1 energy at `(β, γ)`.
    pub fn exact(&self, beta: f64, gamma: f64) -> f64 {
        let v = self.state(&Schedule::single(gamma, beta));
        v.diagonal_expectation(&self.diagonal)
            .expect("state matches register")
            + self.offset
    }

    /// Mean energy of `shots` measurements of `v`, plus the offset.
    pub fn sample<R: Rng + ?Sized>(&self, v: &Statevector, shots: u32, rng: &mut R) -> Result<f64> {
        if shots == 0 {
            return Err(contract("shots must be positive"));
        }
        if v.qubit_count() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.qubit_count(),
            });
        }
        let mut cumulative = Vec::with_capacity(self.diagonal.len());
        let mut total = 0.0;
        for a in v.amplitudes() {
            total += a.norm_sqr();
            cumulative.push(total);
        }
        let last = cumulative.len() - 1;
        let mut sum = 0.0;
        for _ in 0..shots {
            let u = rng.gen::<f64>() * total;
            let i = cumulative.partition_point(|&c| c <= u).min(last);
            sum += self.diagonal[i];
        }
        Ok(sum / f64::from(shots) + self.offset)
    }

    /// Shot estimate of the p=1 energy at `(β, γ)`.
    pub fn sampled<R: Rng + ?Sized>(
        &self,
        beta: f64,
        gamma: f64,
        shots: u32,
        rng: &mut R,
    ) -> Result<f64> {
        self.sample(&self.state(&Schedule::single(gamma, beta)), shots, rng)
    }
}

/// `U_M(β_p) U_P(γ_p) ⋯ U_M(β_1) U_P(γ_1) H^{⊗n} |0>` for `model`.
pub fn qaoa_state(model: &IsingModel, schedule: &Schedule) -> Result<Statevector> {
    Ok(Simulator::new(model)?.state(schedule))
}

/// `<v|H|v>` including the offset.
pub fn exact_expectation(v: &Statevector, model: &IsingModel) -> Result<f64> {
    if v.qubit_count() != model.spin_count() {
        return Err(Error::DimensionMismatch {
            expected: model.spin_count(),
            found: v.qubit_count(),
        });
    }
    Simulator::new(model)?.expectation(v)
}

/// Shot estimate of `<v|H|v>` drawn from the shot stream of `seed`.
pub fn sampled_expectation(
    v: &Statevector,
    model: &IsingModel,
    shots: u32,
    seed: u64,
) -> Result<f64> {
    if v.qubit_count() != model.spin_count() {
        return Err(Error::DimensionMismatch {
            expected: model.spin_count(),
            found: v.qubit_count(),
        });
    }
    let mut rng = rng::stream(seed, rng::STREAM_SHOTS);
    Simulator::new(model)?.sample(v, shots, &mut rng)
}
