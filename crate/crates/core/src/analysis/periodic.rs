//! Spectral differentiation of uniformly sampled periodic data.

use std::f64::consts::PI;
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

/// Exact derivative of the interpolating trigonometric polynomial of a
/// periodic sample (the Nyquist mode, when present, is dropped).
pub struct PeriodicDerivative {
    n: usize,
    period: f64,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl PeriodicDerivative {
    pub fn new(n: usize, period: f64) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            n,
            period,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    pub fn apply(&self, values: &[f64]) -> Vec<f64> {
        let n = self.n;
        assert_eq!(values.len(), n);
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.forward.process(&mut buf);
        let scale = 2.0 * PI / self.period / n as f64;
        for (j, c) in buf.iter_mut().enumerate() {
            let k = if 2 * j < n {
                j as f64
            } else if 2 * j == n {
                0.0
            } else {
                j as f64 - n as f64
            };
            *c = Complex64::new(-c.im, c.re) * (k * scale);
        }
        self.inverse.process(&mut buf);
        buf.into_iter().map(|c| c.re).collect()
    }
}

pub fn periodic_derivative(values: &[f64], period: f64) -> Vec<f64> {
    PeriodicDerivative::new(values.len(), period).apply(values)
}
