//! Landscape roughness: total variation over 1D slices and Fourier density.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::analytic::{landscape_grid, AxisRange, GridSpec, Landscape};
use crate::error::Result;
use crate::graph::Graph;
use crate::ising::{symmetry_report, GammaPeriod};

fn slice_variation(values: impl Iterator<Item = f64> + Clone) -> f64 {
    // Periodic closure: the last sample is followed by the first.
    let next = values.clone().skip(1).chain(values.clone().take(1));
    values.zip(next).map(|(a, b)| libm::fabs(b - a)).sum()
}

/// Discrete total variation of the landscape.
///
/// Each row (fixed `β`) and each column (fixed `γ`) is treated as a closed
/// loop and its summed absolute differences taken. The result is the average
/// of the mean row variation and the mean column variation, so both axes
/// weigh equally whatever the grid's aspect ratio.
pub fn total_variation(l: &Landscape) -> f64 {
    let grid = l.grid();
    let rows: f64 = (0..grid.rows)
        .map(|r| slice_variation(l.row(r).iter().copied()))
        .sum::<f64>()
        / grid.rows as f64;
    let cols: f64 = (0..grid.cols)
        .map(|c| slice_variation((0..grid.rows).map(move |r| l.get(r, c))))
        .sum::<f64>()
        / grid.cols as f64;
    0.5 * (rows + cols)
}

fn dft_in_place(
    data: &mut [Complex64],
    stride: usize,
    len: usize,
    twiddles: &[Complex64],
    scratch: &mut Vec<Complex64>,
) {
    scratch.clear();
    scratch.extend((0..len).map(|k| {
        (0..len)
            .map(|j| data[j * stride] * twiddles[(j * k) % len])
            .sum::<Complex64>()
    }));
    for (k, v) in scratch.iter().enumerate() {
        data[k * stride] = *v;
    }
}

fn twiddles(len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|m| {
            let theta = -2.0 * PI * m as f64 / len as f64;
            Complex64::new(libm::cos(theta), libm::sin(theta))
        })
        .collect()
}

/// Unnormalized 2D DFT of a row-major `rows × cols` array, computed one axis
/// at a time.
pub fn dft2(values: &[f64], rows: usize, cols: usize) -> Vec<Complex64> {
    assert_eq!(values.len(), rows * cols, "array shape mismatch");
    let mut data: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut scratch = Vec::new();
    let tw = twiddles(cols);
    for r in 0..rows {
        dft_in_place(
            &mut data[r * cols..(r + 1) * cols],
            1,
            cols,
            &tw,
            &mut scratch,
        );
    }
    let tw = twiddles(rows);
    for c in 0..cols {
        dft_in_place(&mut data[c..], cols, rows, &tw, &mut scratch);
    }
    data
}

/// Fourier density and whether it fell back to the constant-landscape value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierDensity {
    /// `(‖c‖₁ / ‖c‖₂)²` over the non-DC coefficient magnitudes.
    pub value: f64,
    /// Every non-DC coefficient vanished; `value` is then 1 by convention.
    pub constant: bool,
}

/// Relative size below which the AC spectrum counts as empty.
const AC_FLOOR: f64 = 1e-12;

/// Squared ratio of the 1-norm to the 2-norm of the DFT magnitudes with the
/// DC term removed. One nonzero coefficient gives 1; `m` equal ones give `m`.
pub fn fourier_density(l: &Landscape) -> FourierDensity {
    let grid = l.grid();
    let spectrum = dft2(l.values(), grid.rows, grid.cols);
    let dc = spectrum[0].norm();
    let (l1, l2sq) = spectrum[1..]
        .iter()
        .map(|c| c.norm())
        .fold((0.0, 0.0), |(s1, s2), m| (s1 + m, s2 + m * m));
    let scale = dc.max(l1).max(f64::MIN_POSITIVE);
    if l1 <= AC_FLOOR * scale * (grid.rows * grid.cols) as f64 || l2sq == 0.0 {
        return FourierDensity {
            value: 1.0,
            constant: true,
        };
    }
    FourierDensity {
        value: l1 * l1 / l2sq,
        constant: false,
    }
}

/// Both roughness metrics of one landscape plus the grid they were taken on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoughnessReport {
    /// See [`total_variation`].
    pub total_variation: f64,
    /// See [`fourier_density`].
    pub fourier_density: FourierDensity,
    /// Grid the landscape was sampled on.
    pub grid: GridSpec,
    /// Each axis spans a whole number of landscape periods, so the wrap-around
    /// difference closes a true loop.
    pub periodic_closure: bool,
}

fn spans_whole_periods(range: AxisRange, period: f64) -> bool {
    let ratio = range.span() / period;
    ratio >= 1.0 - 1e-9 && libm::fabs(ratio - libm::round(ratio)) < 1e-9
}

/// Measures an already computed landscape of `g`.
pub fn measure_landscape(g: &Graph, landscape: &Landscape) -> Result<RoughnessReport> {
    let grid = *landscape.grid();
    let symmetry = symmetry_report(g)?;
    let gamma_ok = match symmetry.gamma_period {
        GammaPeriod::Period(p) => spans_whole_periods(grid.gamma, p),
        GammaPeriod::Constant => true,
    };
    Ok(RoughnessReport {
        total_variation: total_variation(landscape),
        fourier_density: fourier_density(landscape),
        grid,
        periodic_closure: gamma_ok && spans_whole_periods(grid.beta, symmetry.beta_period),
    })
}

/// Builds the closed-form landscape of `g` on `grid` and measures it.
pub fn roughness_report(g: &Graph, grid: GridSpec) -> Result<RoughnessReport> {
    measure_landscape(g, &landscape_grid(g, grid)?)
}
