//! QUBO and Ising forms of Max-Cut, the augmented interaction matrix, and
//! the symmetry periods of the p=1 landscape.
//!
//! Coefficients are exact rationals. Substituting `x_j = (1 - s_j) / 2` into
//! an integer QUBO only ever produces quarters, so the energy identity
//! between the two forms holds exactly.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{contract, Error, Result};
use crate::graph::{check_enumerable, Graph};

/// Exact coefficient type of Ising models.
pub type Coeff = Rational64;

/// `min x^T Q x` over `x ∈ {0,1}^n` with an integer `n × n` matrix `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuboProblem {
    n: usize,
    q: Vec<i64>,
}

impl QuboProblem {
    /// Wraps a row-major `n × n` matrix. Symmetry is not required here;
    /// [`qubo_to_ising`] checks it.
    pub fn new(n: usize, q: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(contract("QUBO must have at least one variable"));
        }
        if q.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: q.len(),
            });
        }
        Ok(Self { n, q })
    }

    /// Number of binary variables.
    pub fn variable_count(&self) -> usize {
        self.n
    }

    /// `Q[j][k]`.
    pub fn entry(&self, j: usize, k: usize) -> i64 {
        self.q[j * self.n + k]
    }

    /// Row-major matrix entries.
    pub fn matrix(&self) -> &[i64] {
        &self.q
    }

    /// Whether `Q` equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|j| (0..j).all(|k| self.entry(j, k) == self.entry(k, j)))
    }

    /// `x^T Q x` for the assignment mask `x` (bit `j` = `x_j`).
    pub fn objective(&self, x: u64) -> i64 {
        let ones: Vec<usize> = (0..self.n).filter(|&j| (x >> j) & 1 == 1).collect();
        ones.iter()
            .flat_map(|&j| ones.iter().map(move |&k| (j, k)))
            .map(|(j, k)| self.entry(j, k))
            .sum()
    }
}

/// Max-Cut as a minimization QUBO: `x^T Q x = -cut(x)`.
///
/// Each edge contributes `-x_j - x_k + 2 x_j x_k`, i.e. `-1` to both diagonal
/// entries and `+1` to both off-diagonal entries.
pub fn maxcut_qubo(g: &Graph) -> QuboProblem {
    let n = g.vertex_count();
    let mut q = alloc::vec![0i64; n * n];
    for &(j, k) in g.edges() {
        q[j * n + j] -= 1;
        q[k * n + k] -= 1;
        q[j * n + k] += 1;
        q[k * n + j] += 1;
    }
    QuboProblem { n, q }
}

/// A `Z_j Z_k` coupling with `j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coupling {
    /// Smaller spin index.
    pub j: usize,
    /// Larger spin index.
    pub k: usize,
    /// Coupling strength `J_jk`.
    pub value: Coeff,
}

/// `offset + Σ h_j s_j + Σ_{j<k} J_jk s_j s_k` over spins `s ∈ {±1}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsingModel {
    n: usize,
    h: Vec<Coeff>,
    couplings: Vec<Coupling>,
    offset: Coeff,
}

impl IsingModel {
    /// Builds a model. Couplings may list a pair in either order and more than
    /// once; values are summed and zero couplings dropped.
    pub fn new(
        h: Vec<Coeff>,
        couplings: impl IntoIterator<Item = Coupling>,
        offset: Coeff,
    ) -> Result<Self> {
        let n = h.len();
        if n == 0 {
            return Err(contract("Ising model must have at least one spin"));
        }
        let mut merged: Vec<Coupling> = Vec::new();
        for c in couplings {
            if c.j == c.k {
                return Err(contract(format!("diagonal coupling at spin {}", c.j)));
            }
            if c.j >= n || c.k >= n {
                return Err(contract(format!(
                    "coupling ({},{}) outside 0..{n}",
                    c.j, c.k
                )));
            }
            let (j, k) = (c.j.min(c.k), c.j.max(c.k));
            match merged.binary_search_by(|e| (e.j, e.k).cmp(&(j, k))) {
                Ok(i) => merged[i].value += c.value,
                Err(i) => merged.insert(
                    i,
                    Coupling {
                        j,
                        k,
                        value: c.value,
                    },
                ),
            }
        }
        merged.retain(|c| !c.value.is_zero());
        Ok(Self {
            n,
            h,
            couplings: merged,
            offset,
        })
    }

    /// Ising model of the Max-Cut instance `g`.
    pub fn from_maxcut(g: &Graph) -> Self {
        qubo_to_ising(&maxcut_qubo(g)).expect("Max-Cut QUBO is symmetric")
    }

    /// Number of spins.
    pub fn spin_count(&self) -> usize {
        self.n
    }

    /// Linear coefficients `h`.
    pub fn fields(&self) -> &[Coeff] {
        &self.h
    }

    /// Nonzero couplings sorted by `(j, k)`.
    pub fn couplings(&self) -> &[Coupling] {
        &self.couplings
    }

    /// `J_jk` for any ordered pair (zero when absent or `j == k`).
    pub fn coupling(&self, j: usize, k: usize) -> Coeff {
        let key = (j.min(k), j.max(k));
        self.couplings
            .binary_search_by(|e| (e.j, e.k).cmp(&key))
            .map(|i| self.couplings[i].value)
            .unwrap_or_else(|_| Coeff::zero())
    }

    /// Constant term.
    pub fn offset(&self) -> Coeff {
        self.offset
    }

    /// Exact energy (including the offset) of basis state `x`, using
    /// `s_j = 1 - 2 x_j`.
    pub fn energy(&self, x: u64) -> Coeff {
        let spin = |j: usize| if (x >> j) & 1 == 1 { -1i64 } else { 1 };
        let linear: Coeff = self.h.iter().enumerate().map(|(j, h)| *h * spin(j)).sum();
        let quadratic: Coeff = self
            .couplings
            .iter()
            .map(|c| c.value * (spin(c.j) * spin(c.k)))
            .sum();
        self.offset + linear + quadratic
    }

    /// Energies of all `2^n` basis states without the offset, as `f64`.
    pub fn diagonal(&self) -> Result<Vec<f64>> {
        check_enumerable("Ising diagonal", self.n)?;
        let h: Vec<f64> = self.h.iter().map(to_f64).collect();
        let couplings: Vec<(usize, usize, f64)> = self
            .couplings
            .iter()
            .map(|c| (c.j, c.k, to_f64(&c.value)))
            .collect();
        Ok((0..1u64 << self.n)
            .map(|x| {
                let spin = |j: usize| if (x >> j) & 1 == 1 { -1.0 } else { 1.0 };
                let linear: f64 = h.iter().enumerate().map(|(j, v)| v * spin(j)).sum();
                let quadratic: f64 = couplings
                    .iter()
                    .map(|&(j, k, v)| v * spin(j) * spin(k))
                    .sum();
                linear + quadratic
            })
            .collect())
    }
}

pub(crate) fn to_f64(c: &Coeff) -> f64 {
    c.to_f64().expect("rational coefficients fit in f64")
}

/// Rewrites a symmetric QUBO in spin variables `s_j = 1 - 2 x_j`.
///
/// With `x_j x_k = (1 - s_j - s_k + s_j s_k) / 4`, a diagonal entry `Q_jj`
/// contributes `Q_jj/2` to the offset and `-Q_jj/2` to `h_j`; each
/// off-diagonal pair (`Q_jk + Q_kj = 2 Q_jk`) contributes `Q_jk/2` to the
/// offset and to `J_jk`, and `-Q_jk/2` to `h_j` and `h_k`.
pub fn qubo_to_ising(q: &QuboProblem) -> Result<IsingModel> {
    if !q.is_symmetric() {
        return Err(contract("QUBO matrix is not symmetric"));
    }
    let n = q.variable_count();
    let half = |v: i64| Coeff::new(v, 2);
    let mut h = alloc::vec![Coeff::zero(); n];
    let mut offset = Coeff::zero();
    let mut couplings = Vec::new();
    for j in 0..n {
        let d = q.entry(j, j);
        offset += half(d);
        h[j] -= half(d);
        for k in j + 1..n {
            let v = q.entry(j, k);
            if v == 0 {
                continue;
            }
            offset += half(v);
            h[j] -= half(v);
            h[k] -= half(v);
            couplings.push(Coupling {
                j,
                k,
                value: half(v),
            });
        }
    }
    IsingModel::new(h, couplings, offset)
}

/// Symmetric `n × n` matrix with the couplings off the diagonal and the
/// linear coefficients on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedMatrix {
    n: usize,
    entries: Vec<Coeff>,
    zero_count: usize,
}

impl AugmentedMatrix {
    /// Matrix dimension.
    pub fn dimension(&self) -> usize {
        self.n
    }

    /// `m_jk`.
    pub fn get(&self, j: usize, k: usize) -> Coeff {
        self.entries[j * self.n + k]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Coeff] {
        &self.entries
    }

    /// Number of zero entries.
    pub fn zero_count(&self) -> usize {
        self.zero_count
    }

    /// Fraction of zero entries, exactly.
    pub fn sparsity_exact(&self) -> Coeff {
        Coeff::new(self.zero_count as i64, (self.n * self.n) as i64)
    }

    /// Fraction of zero entries.
    pub fn sparsity(&self) -> f64 {
        self.zero_count as f64 / (self.n * self.n) as f64
    }
}

/// Augmented interaction matrix of `m` and its sparsity.
pub fn augmented_matrix(m: &IsingModel) -> AugmentedMatrix {
    let n = m.spin_count();
    let mut entries = alloc::vec![Coeff::zero(); n * n];
    for (j, h) in m.fields().iter().enumerate() {
        entries[j * n + j] = *h;
    }
    for c in m.couplings() {
        entries[c.j * n + c.k] = c.value;
        entries[c.k * n + c.j] = c.value;
    }
    let zero_count = entries.iter().filter(|v| v.is_zero()).count();
    AugmentedMatrix {
        n,
        entries,
        zero_count,
    }
}

/// Cut values of all `2^n` assignments, indexed by assignment mask.
pub fn cut_spectrum(g: &Graph) -> Result<Vec<u32>> {
    check_enumerable("cut spectrum", g.vertex_count())?;
    Ok((0..1u64 << g.vertex_count())
        .map(|x| g.cut_value(x) as u32)
        .collect())
}

/// Period of the landscape along `γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaPeriod {
    /// The landscape repeats after this many radians.
    Period(f64),
    /// Every cut is empty, so the phase separator is a global phase and the
    /// landscape does not depend on `γ` at all.
    Constant,
}

/// Symmetry periods of the p=1 Max-Cut landscape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryReport {
    /// Always `π/2`: flipping every bit preserves cuts, and `X^{⊗n}` is a
    /// mixer rotation by `π/2` up to phase.
    pub beta_period: f64,
    /// `2π/δ`, or constant when `δ = 0`.
    pub gamma_period: GammaPeriod,
    /// gcd of all cut values (`gcd(0, a) = a`).
    pub delta: u64,
}

/// Symmetry periods of `g`'s landscape, from the gcd of its cut spectrum.
pub fn symmetry_report(g: &Graph) -> Result<SymmetryReport> {
    let delta = cut_spectrum(g)?
        .into_iter()
        .fold(0u64, |acc, v| acc.gcd(&u64::from(v)));
    Ok(SymmetryReport {
        beta_period: PI / 2.0,
        gamma_period: if delta == 0 {
            GammaPeriod::Constant
        } else {
            GammaPeriod::Period(2.0 * PI / delta as f64)
        },
        delta,
    })
}

/// Sparsity of the Max-Cut augmented matrix without building the model:
/// `1 - 2|E| / n^2`.
pub fn maxcut_sparsity(g: &Graph) -> Coeff {
    let n = g.vertex_count() as i64;
    Coeff::from_integer(1) - Coeff::new(2 * g.edge_count() as i64, n * n)
}
