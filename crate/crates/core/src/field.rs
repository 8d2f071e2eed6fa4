//! Wall-bounded profile representations: truncated sine series and uniform
//! grid samples on `[0, h]`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `sum_k coeffs[k-1] * sin(k pi x / h)` for `k = 1..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct SineSpectrum {
    h: f64,
    coeffs: Vec<f64>,
}

impl SineSpectrum {
    pub fn new(h: f64, coeffs: Vec<f64>) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::NonPositiveParameter("h"));
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroTruncation);
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("coeffs"));
        }
        Ok(Self { h, coeffs })
    }

    pub fn zeros(h: f64, modes: usize) -> Result<Self> {
        Self::new(h, vec![0.0; modes])
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Coefficient of mode `k` (1-based); zero beyond the truncation.
    pub fn coeff(&self, k: usize) -> f64 {
        if k == 0 {
            0.0
        } else {
            self.coeffs.get(k - 1).copied().unwrap_or(0.0)
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn modes(&self) -> usize {
        self.coeffs.len()
    }

    /// Series value at `x`. Both walls return exactly zero.
    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 || x == self.h {
            return 0.0;
        }
        let theta = PI * x / self.h;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(i, c)| c * ((i + 1) as f64 * theta).sin())
            .sum()
    }

    /// Term-by-term derivative `dU/dx`.
    pub fn derivative(&self, x: f64) -> f64 {
        let scale = PI / self.h;
        let theta = scale * x;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(i, c)| {
                let k = (i + 1) as f64;
                c * k * scale * (k * theta).cos()
            })
            .sum()
    }

    /// Values at `m` equispaced points `x_j = j h / (m - 1)`, walls included.
    pub fn sample(&self, m: usize) -> Vec<f64> {
        uniform_points(self.h, m).map(|x| self.eval(x)).collect()
    }

    /// Samples on the nodes of a grid with `n` interior points.
    pub fn to_grid(&self, n: usize) -> Result<GridField> {
        GridField::new(self.h, self.sample(n + 2))
    }
}

/// `m` equispaced points covering `[0, h]`, both ends included.
pub fn uniform_points(h: f64, m: usize) -> impl Iterator<Item = f64> {
    let last = m.saturating_sub(1).max(1) as f64;
    (0..m).map(move |j| if j + 1 == m { h } else { j as f64 * h / last })
}

/// Samples at `x_j = j h / (n + 1)`, `j = 0..=n+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    h: f64,
    values: Vec<f64>,
}

impl GridField {
    pub fn new(h: f64, values: Vec<f64>) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::NonPositiveParameter("h"));
        }
        if values.len() < 5 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3 interior nodes, got {}",
                values.len().saturating_sub(2)
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("values"));
        }
        Ok(Self { h, values })
    }

    /// Like [`GridField::new`] but also enforces the no-slip condition.
    pub fn velocity(h: f64, values: Vec<f64>) -> Result<Self> {
        let field = Self::new(h, values)?;
        if !field.satisfies_no_slip() {
            return Err(Error::NoSlipViolation);
        }
        Ok(field)
    }

    pub fn zeros(h: f64, n: usize) -> Result<Self> {
        Self::new(h, vec![0.0; n + 2])
    }

    /// Samples `f` at the interior nodes; wall values are set to zero.
    pub fn from_fn(h: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let dx = h / (n + 1) as f64;
        let mut values: Vec<f64> = (0..n + 2).map(|j| f(j as f64 * dx)).collect();
        values[0] = 0.0;
        values[n + 1] = 0.0;
        Self::new(h, values)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Number of interior nodes.
    pub fn n(&self) -> usize {
        self.values.len() - 2
    }

    pub fn dx(&self) -> f64 {
        self.h / (self.n() + 1) as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        if j == self.n() + 1 {
            self.h
        } else {
            j as f64 * self.dx()
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn satisfies_no_slip(&self) -> bool {
        self.values[0] == 0.0 && self.values[self.values.len() - 1] == 0.0
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Trapezoid rule for `int_0^h g(U(x)) dx`.
    pub fn trapezoid_with(&self, g: impl Fn(f64) -> f64) -> f64 {
        trapezoid(&self.values.iter().map(|&v| g(v)).collect::<Vec<_>>(), self.dx())
    }

    /// `(int U^2 dx)^{1/2}` by the trapezoid rule.
    pub fn l2_norm(&self) -> f64 {
        self.trapezoid_with(|v| v * v).sqrt()
    }

    /// `||self - other||_2 / ||other||_2` on matching grids.
    pub fn relative_l2_distance(&self, reference: &GridField) -> Result<f64> {
        if reference.values.len() != self.values.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {} nodes",
                self.values.len(),
                reference.values.len()
            )));
        }
        let diff: Vec<f64> = self
            .values
            .iter()
            .zip(&reference.values)
            .map(|(a, b)| (a - b) * (a - b))
            .collect();
        let num = trapezoid(&diff, self.dx()).sqrt();
        let den = reference.l2_norm();
        Ok(if den == 0.0 { num } else { num / den })
    }
}

/// Composite trapezoid rule on uniform spacing `dx`.
pub fn trapezoid(values: &[f64], dx: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => dx * (0.5 * (first + last) + inner.iter().sum::<f64>()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_vanishes_exactly_at_walls() {
        let s = SineSpectrum::new(2.5, vec![1.0, -0.3, 0.7, 2.0]).unwrap();
        assert_eq!(s.eval(0.0), 0.0);
        assert_eq!(s.eval(2.5), 0.0);
        assert!(s.eval(1.0).abs() > 0.0);
    }

    #[test]
    fn spectrum_rejects_empty_and_nan() {
        assert_eq!(SineSpectrum::new(1.0, vec![]).unwrap_err(), Error::ZeroTruncation);
        assert!(SineSpectrum::new(1.0, vec![f64::NAN]).is_err());
    }

    #[test]
    fn derivative_of_single_mode() {
        let s = SineSpectrum::new(1.0, vec![0.0, 1.0]).unwrap();
        let x = 0.3;
        let expected = 2.0 * PI * (2.0 * PI * x).cos();
        assert!((s.derivative(x) - expected).abs() < 1e-12);
    }

    #[test]
    fn grid_requires_three_interior_nodes() {
        assert!(GridField::zeros(1.0, 2).is_err());
        let g = GridField::zeros(1.0, 3).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.x(4), 1.0);
    }

    #[test]
    fn velocity_grid_enforces_no_slip() {
        assert_eq!(
            GridField::velocity(1.0, vec![0.0, 1.0, 1.0, 1.0, 0.1]).unwrap_err(),
            Error::NoSlipViolation
        );
    }

    #[test]
    fn trapezoid_integrates_sine_squared_exactly() {
        let g = GridField::from_fn(1.0, 99, |x| (PI * x).sin()).unwrap();
        assert!((g.trapezoid_with(|v| v * v) - 0.5).abs() < 1e-14);
    }
}
