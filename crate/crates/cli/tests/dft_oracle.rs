//! The core crate's separable DFT against rustfft.

use maxcut_qaoa_core::roughness::dft2;
use rand::Rng;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

fn rustfft_2d(values: &[f64], rows: usize, cols: usize) -> Vec<Complex<f64>> {
    let mut planner = FftPlanner::new();
    let mut data: Vec<Complex<f64>> = values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    let row_fft = planner.plan_fft_forward(cols);
    for row in data.chunks_mut(cols) {
        row_fft.process(row);
    }
    let col_fft = planner.plan_fft_forward(rows);
    let mut column = vec![Complex::new(0.0, 0.0); rows];
    for c in 0..cols {
        for r in 0..rows {
            column[r] = data[r * cols + c];
        }
        col_fft.process(&mut column);
        for r in 0..rows {
            data[r * cols + c] = column[r];
        }
    }
    data
}

#[test]
fn matches_rustfft_on_random_arrays() {
    let mut rng = maxcut_qaoa_core::rng::stream(11, 0);
    for (rows, cols) in [(1, 1), (2, 3), (7, 5), (16, 16), (33, 65), (64, 128)] {
        let values: Vec<f64> = (0..rows * cols).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let ours = dft2(&values, rows, cols);
        let theirs = rustfft_2d(&values, rows, cols);
        let scale = (rows * cols) as f64;
        for (a, b) in ours.iter().zip(&theirs) {
            assert!(
                (a.re - b.re).abs() < 1e-9 * scale && (a.im - b.im).abs() < 1e-9 * scale,
                "{rows}x{cols}: {a} vs {b}"
            );
        }
    }
}
