//! Simultaneous perturbation stochastic approximation over `(β, γ)`.
//!
//! Each iteration draws a Rademacher direction `Δ ∈ {±1}^2`, evaluates the
//! objective at `θ ± c_k Δ`, and steps along
//! `ĝ_k = (y+ - y-) / (2 c_k) · Δ` with gains
//! `a_k = a / (k + 1 + A)^α` and `c_k = c / (k + 1)^γ`.
//! Parameters live on the torus `[0, π) × [0, 2π)` and are wrapped after
//! every move.

use alloc::boxed::Box;
use alloc::vec::Vec;

use rand::Rng;

use crate::analytic::QaoaParams;
use crate::error::{contract, Error, Result};
use crate::rng;

/// Gain schedule and iteration budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpsaConfig {
    /// Iterations (two objective calls each).
    pub max_iter: usize,
    /// Step gain numerator `a`.
    pub a: f64,
    /// Perturbation gain numerator `c`.
    pub c: f64,
    /// Stability constant `A`.
    pub stability: f64,
    /// Step decay exponent `α`.
    pub alpha: f64,
    /// Perturbation decay exponent.
    pub gamma: f64,
}

impl Default for SpsaConfig {
    fn default() -> Self {
        Self {
            max_iter: 1000,
            a: 0.2,
            c: 0.1,
            stability: 10.0,
            alpha: 0.602,
            gamma: 0.101,
        }
    }
}

impl SpsaConfig {
    fn step_gain(&self, k: usize) -> f64 {
        self.a / libm::pow(k as f64 + 1.0 + self.stability, self.alpha)
    }

    fn perturbation_gain(&self, k: usize) -> f64 {
        self.c / libm::pow(k as f64 + 1.0, self.gamma)
    }
}

/// Where the search starts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialPoint {
    /// Uniform over the domain, drawn from the optimizer stream of the seed.
    Random,
    /// `(π/4, π)`.
    Center,
    /// A given point.
    Fixed(QaoaParams),
}

/// One row of the optimization trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry {
    /// Iteration index; the final entry has index `max_iter`.
    pub iteration: usize,
    /// Iterate `θ_k`.
    pub params: QaoaParams,
    /// Objective estimate at `θ_k`: the mean of the two perturbed calls, or a
    /// direct call for the final iterate.
    pub estimate: f64,
}

/// Outcome of an SPSA run.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    /// Trace point with the lowest estimate.
    pub best_params: QaoaParams,
    /// Objective re-evaluated at `best_params`.
    pub best_expectation: f64,
    /// Starting point.
    pub initial: QaoaParams,
    /// One entry per iteration plus the final iterate.
    pub trace: Vec<TraceEntry>,
    /// Seed of the run.
    pub seed: u64,
    /// Total objective calls.
    pub evaluations: usize,
    /// Gains used.
    pub config: SpsaConfig,
}

/// Minimizes `objective` over `(β, γ)`.
///
/// The call budget is `2 · max_iter + 2`: two calls per iteration, one for the
/// final iterate and one re-evaluation of the best point.
pub fn spsa_optimize<F>(
    mut objective: F,
    config: SpsaConfig,
    seed: u64,
    initial: InitialPoint,
) -> Result<OptimizationResult>
where
    F: FnMut(QaoaParams) -> Result<f64>,
{
    if config.max_iter == 0 {
        return Err(contract("max_iter must be at least 1"));
    }
    let mut rng = rng::stream(seed, rng::STREAM_OPTIMIZER);
    let start = match initial {
        InitialPoint::Random => QaoaParams::wrapped(
            rng.gen_range(0.0..QaoaParams::BETA_DOMAIN),
            rng.gen_range(0.0..QaoaParams::GAMMA_DOMAIN),
        ),
        InitialPoint::Center => QaoaParams::center(),
        InitialPoint::Fixed(p) => p,
    };

    let mut evaluations = 0;
    let mut call = |p: QaoaParams, iteration: usize| {
        evaluations += 1;
        objective(p).map_err(|e| Error::Objective {
            iteration,
            source: Box::new(e),
        })
    };

    let mut theta = start;
    let mut trace = Vec::with_capacity(config.max_iter + 1);
    for k in 0..config.max_iter {
        let ck = config.perturbation_gain(k);
        let delta: [f64; 2] = [rademacher(&mut rng), rademacher(&mut rng)];
        let plus = QaoaParams::wrapped(theta.beta() + ck * delta[0], theta.gamma() + ck * delta[1]);
        let minus =
            QaoaParams::wrapped(theta.beta() - ck * delta[0], theta.gamma() - ck * delta[1]);
        let y_plus = call(plus, k)?;
        let y_minus = call(minus, k)?;
        trace.push(TraceEntry {
            iteration: k,
            params: theta,
            estimate: 0.5 * (y_plus + y_minus),
        });

        let scale = config.step_gain(k) * (y_plus - y_minus) / (2.0 * ck);
        theta = QaoaParams::wrapped(
            theta.beta() - scale * delta[0],
            theta.gamma() - scale * delta[1],
        );
    }
    let last = call(theta, config.max_iter)?;
    trace.push(TraceEntry {
        iteration: config.max_iter,
        params: theta,
        estimate: last,
    });

    let best = trace
        .iter()
        .min_by(|a, b| a.estimate.total_cmp(&b.estimate))
        .expect("trace is non-empty");
    let best_params = best.params;
    let best_expectation = call(best_params, config.max_iter)?;

    Ok(OptimizationResult {
        best_params,
        best_expectation,
        initial: start,
        trace,
        seed,
        evaluations,
        config,
    })
}

fn rademacher<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    if rng.gen::<bool>() {
        1.0
    } else {
        -1.0
    }
}
