//! Closed-form p=1 QAOA energies for Max-Cut and gridded landscapes.
//!
//! For an edge `(j, k)` with degrees `d_j`, `d_k` and `f` common neighbours,
//! the unit-coupling correlator after one layer is
//!
//! ```text
//! <Z_j Z_k> = sin(4β)/2 · sin(2γ) · [cos(2γ)^(d_j-1) + cos(2γ)^(d_k-1)]
//!           + sin(2β)^2/2 · cos(2γ)^(d_j+d_k-2f-2) · (1 - cos(4γ)^f)
//! ```
//!
//! and single-spin terms vanish because `h = 0`. Max-Cut models carry
//! `J = 1/2` on every edge, so the landscape is
//! `-|E|/2 + 1/2 · Σ_edges <Z_j Z_k>(β, γ/2)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{contract, Error, Result};
use crate::graph::{edge_structure, Graph};

pub(crate) fn powi(mut base: f64, mut exp: u32) -> f64 {
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

/// Wraps `x` into `[0, period)`.
pub fn wrap_angle(x: f64, period: f64) -> f64 {
    let r = x - period * libm::floor(x / period);
    // floor can leave r == period for tiny negative x
    if r >= period {
        0.0
    } else {
        r
    }
}

/// One layer of QAOA angles, `β ∈ [0, π)` and `γ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QaoaParams {
    beta: f64,
    gamma: f64,
}

impl QaoaParams {
    /// Mixer angle period domain.
    pub const BETA_DOMAIN: f64 = PI;
    /// Phase angle period domain.
    pub const GAMMA_DOMAIN: f64 = 2.0 * PI;

    /// Checked constructor.
    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        if !(0.0..Self::BETA_DOMAIN).contains(&beta) || !(0.0..Self::GAMMA_DOMAIN).contains(&gamma)
        {
            return Err(contract("angles outside [0, π) × [0, 2π)"));
        }
        Ok(Self { beta, gamma })
    }

    /// Reduces arbitrary finite angles into the fundamental domain.
    pub fn wrapped(beta: f64, gamma: f64) -> Self {
        Self {
            beta: wrap_angle(beta, Self::BETA_DOMAIN),
            gamma: wrap_angle(gamma, Self::GAMMA_DOMAIN),
        }
    }

    /// Centre of the domain, `(π/4, π)`.
    pub fn center() -> Self {
        Self {
            beta: PI / 4.0,
            gamma: PI,
        }
    }

    /// Mixer angle.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Phase angle.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Unit-coupling `<Z_j Z_k>` after one QAOA layer.
pub fn edge_expectation(dj: u32, dk: u32, shared: u32, beta: f64, gamma: f64) -> Result<f64> {
    if dj == 0 || dk == 0 || shared + 1 > dj.min(dk) {
        return Err(contract(alloc::format!(
            "edge structure (d_j={dj}, d_k={dk}, f={shared}) is impossible"
        )));
    }
    Ok(edge_term(dj, dk, shared, beta, gamma))
}

fn edge_term(dj: u32, dk: u32, shared: u32, beta: f64, gamma: f64) -> f64 {
    let c2 = libm::cos(2.0 * gamma);
    let linear = 0.5
        * libm::sin(4.0 * beta)
        * libm::sin(2.0 * gamma)
        * (powi(c2, dj - 1) + powi(c2, dk - 1));
    let s2b = libm::sin(2.0 * beta);
    let triangle = 0.5
        * s2b
        * s2b
        * powi(c2, dj + dk - 2 * shared - 2)
        * (1.0 - powi(libm::cos(4.0 * gamma), shared));
    linear + triangle
}

/// Per-edge data needed by the closed form, precomputed once per graph.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticModel {
    edges: Vec<(u32, u32, u32)>,
}

impl AnalyticModel {
    /// Precomputes degrees and shared-neighbour counts of `g`.
    pub fn new(g: &Graph) -> Self {
        let s = edge_structure(g);
        let edges = s
            .shared
            .iter()
            .map(|&((j, k), f)| (s.degrees[j] as u32, s.degrees[k] as u32, f as u32))
            .collect();
        Self { edges }
    }

    /// `<β,γ|H_P|β,γ>` including the `-|E|/2` offset.
    pub fn expectation(&self, beta: f64, gamma: f64) -> f64 {
        let correlators: f64 = self
            .edges
            .iter()
            .map(|&(dj, dk, f)| edge_term(dj, dk, f, beta, gamma / 2.0))
            .sum();
        -(self.edges.len() as f64) / 2.0 + 0.5 * correlators
    }
}

/// Closed-form p=1 expectation of the Max-Cut Hamiltonian of `g`.
pub fn analytic_expectation(g: &Graph, beta: f64, gamma: f64) -> f64 {
    AnalyticModel::new(g).expectation(beta, gamma)
}

/// Half-open interval `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRange {
    /// Inclusive lower end.
    pub start: f64,
    /// Exclusive upper end.
    pub end: f64,
}

impl AxisRange {
    /// `[start, end)`.
    pub const fn new(start: f64, end: f64) -> Self {
        Self { start, end }
    }

    /// `end - start`.
    pub fn span(&self) -> f64 {
        self.end - self.start
    }
}

/// A uniform `rows × cols` grid over `β × γ`; the right endpoints are
/// excluded so periodic ranges tile without duplicated samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Range of `β` (rows).
    pub beta: AxisRange,
    /// Range of `γ` (columns).
    pub gamma: AxisRange,
    /// Number of `β` samples.
    pub rows: usize,
    /// Number of `γ` samples.
    pub cols: usize,
}

impl GridSpec {
    /// `[0, π) × [0, 2π)` at 64 × 128, the default for landscape files.
    pub fn landscape_default() -> Self {
        Self {
            beta: AxisRange::new(0.0, PI),
            gamma: AxisRange::new(0.0, 2.0 * PI),
            rows: 64,
            cols: 128,
        }
    }

    /// `[0, 2π) × [0, 2π)` at 128 × 128, the default for roughness metrics.
    pub fn metrics_default() -> Self {
        Self {
            beta: AxisRange::new(0.0, 2.0 * PI),
            gamma: AxisRange::new(0.0, 2.0 * PI),
            rows: 128,
            cols: 128,
        }
    }

    /// Rejects grids smaller than 2 × 2 and empty or non-finite ranges.
    pub fn validate(&self) -> Result<()> {
        if self.rows < 2 || self.cols < 2 {
            return Err(contract("grid must be at least 2 × 2"));
        }
        for r in [self.beta, self.gamma] {
            if !(r.start.is_finite() && r.end.is_finite() && r.end > r.start) {
                return Err(contract("grid range must be finite and non-empty"));
            }
        }
        Ok(())
    }

    /// `β` of row `r`.
    pub fn beta_at(&self, r: usize) -> f64 {
        self.beta.start + self.beta.span() * r as f64 / self.rows as f64
    }

    /// `γ` of column `c`.
    pub fn gamma_at(&self, c: usize) -> f64 {
        self.gamma.start + self.gamma.span() * c as f64 / self.cols as f64
    }
}

/// Which evaluator produced a landscape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Closed-form expression.
    Analytic,
    /// Exact statevector expectation.
    ExactSimulation,
    /// Mean over measurement shots.
    SampledSimulation {
        /// Shots per grid point.
        shots: u32,
        /// Base seed of the run.
        seed: u64,
    },
}

/// Expectation values on a grid, row-major (`β` rows, `γ` columns).
#[derive(Debug, Clone, PartialEq)]
pub struct Landscape {
    grid: GridSpec,
    values: Vec<f64>,
    provenance: Provenance,
}

impl Landscape {
    /// Evaluates `f(β, γ)` at every grid point in row-major order.
    pub fn from_fn<F>(grid: GridSpec, provenance: Provenance, mut f: F) -> Result<Self>
    where
        F: FnMut(f64, f64) -> Result<f64>,
    {
        grid.validate()?;
        let mut values = Vec::with_capacity(grid.rows * grid.cols);
        for r in 0..grid.rows {
            let beta = grid.beta_at(r);
            for c in 0..grid.cols {
                values.push(f(beta, grid.gamma_at(c))?);
            }
        }
        Ok(Self {
            grid,
            values,
            provenance,
        })
    }

    /// Wraps precomputed values.
    pub fn from_values(grid: GridSpec, provenance: Provenance, values: Vec<f64>) -> Result<Self> {
        grid.validate()?;
        if values.len() != grid.rows * grid.cols {
            return Err(Error::DimensionMismatch {
                expected: grid.rows * grid.cols,
                found: values.len(),
            });
        }
        Ok(Self {
            grid,
            values,
            provenance,
        })
    }

    /// Grid specification.
    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    /// Evaluator that produced the values.
    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Row-major values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.values[r * self.grid.cols + c]
    }

    /// Values of row `r` (fixed `β`).
    pub fn row(&self, r: usize) -> &[f64] {
        &self.values[r * self.grid.cols..(r + 1) * self.grid.cols]
    }

    /// Applies `f` to every value, keeping grid and provenance.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
            provenance: self.provenance,
        }
    }

    /// Smallest value with its `(row, col)`.
    pub fn argmin(&self) -> (usize, usize, f64) {
        let (i, v) =
            self.values
                .iter()
                .copied()
                .enumerate()
                .fold(
                    (0, f64::INFINITY),
                    |best, (i, v)| if v < best.1 { (i, v) } else { best },
                );
        (i / self.grid.cols, i % self.grid.cols, v)
    }

    /// Smallest value.
    pub fn min(&self) -> f64 {
        self.argmin().2
    }

    /// Largest value.
    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Closed-form landscape of `g` on `grid`.
pub fn landscape_grid(g: &Graph, grid: GridSpec) -> Result<Landscape> {
    let model = AnalyticModel::new(g);
    Landscape::from_fn(grid, Provenance::Analytic, |b, c| {
        Ok(model.expectation(b, c))
    })
}
