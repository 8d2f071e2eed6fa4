//! One-dimensional inequalities: the Poincaré bound on a wall-bounded
//! interval and the sup-norm bound for periodic functions.

use std::f64::consts::PI;

use super::periodic::periodic_derivative;
use crate::error::{Error, Result};
use crate::field::{trapezoid, GridField};

/// Uniform samples of one period, right endpoint excluded.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicSample {
    period: f64,
    values: Vec<f64>,
}

impl PeriodicSample {
    pub fn new(period: f64, values: Vec<f64>) -> Result<Self> {
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::NonPositiveParameter("period"));
        }
        if values.len() < 8 {
            return Err(Error::InvalidGrid(format!(
                "periodic sample needs at least 8 points, got {}",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("values"));
        }
        Ok(Self { period, values })
    }

    pub fn from_fn(period: f64, m: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(period, (0..m).map(|j| f(j as f64 * period / m as f64)).collect())
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincareOutcome {
    /// `int (phi')^2`, Richardson-extrapolated when a coarse subgrid exists.
    pub lhs: f64,
    /// `h^{-2} int phi^2`.
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
}

fn staggered_energy(values: &[f64], dx: f64) -> f64 {
    values.windows(2).map(|w| (w[1] - w[0]).powi(2)).sum::<f64>() / dx
}

/// `int_0^h (phi')^2 >= h^{-2} int_0^h phi^2` for `phi` vanishing at both ends.
pub fn poincare_check(phi: &GridField) -> Result<PoincareOutcome> {
    let v = phi.values();
    let scale = phi.max_abs();
    let end_tol = 1e-12 * scale;
    if v[0].abs() > end_tol || v[v.len() - 1].abs() > end_tol {
        return Err(Error::BoundaryViolation);
    }
    let dx = phi.dx();
    let fine = staggered_energy(v, dx);
    let intervals = v.len() - 1;
    let (lhs, slack) = if intervals.is_multiple_of(2) && intervals >= 4 {
        let coarse_vals: Vec<f64> = v.iter().step_by(2).copied().collect();
        let coarse = staggered_energy(&coarse_vals, 2.0 * dx);
        ((4.0 * fine - coarse) / 3.0, (fine - coarse).abs() / 3.0)
    } else {
        (fine, 0.0)
    };
    let h = phi.h();
    let rhs = trapezoid(&v.iter().map(|x| x * x).collect::<Vec<_>>(), dx) / (h * h);
    let pass = lhs + slack >= rhs * (1.0 - 1e-10);
    Ok(PoincareOutcome {
        lhs,
        rhs,
        slack,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinfOutcome {
    /// `max |phi|`.
    pub lhs: f64,
    /// Right-hand side evaluated on the sign-normalised function.
    pub rhs: f64,
    /// Right-hand side evaluated on `phi` as given.
    pub rhs_raw: f64,
    /// Whether `-phi` was used because `|min phi| > max phi`.
    pub flipped: bool,
    pub slack: f64,
    pub pass: bool,
}

fn linf_rhs(values: &[f64], period: f64) -> f64 {
    let m = values.len() as f64;
    let mean = values.iter().sum::<f64>() / m;
    let d = periodic_derivative(values, period);
    let grad = d.iter().map(|x| x * x).sum::<f64>() / m;
    mean + period / (2.0 * 3f64.sqrt()) * grad.sqrt()
}

/// `|phi|_inf <= <phi> + Pi/(2 sqrt 3) <(phi')^2>^{1/2}` with the mean taken
/// over one period.
pub fn linf_check(phi: &PeriodicSample) -> LinfOutcome {
    let v = &phi.values;
    let max = v.iter().fold(f64::NEG_INFINITY, |m, &x| m.max(x));
    let min = v.iter().fold(f64::INFINITY, |m, &x| m.min(x));
    let lhs = max.max(-min);
    let flipped = -min > max;
    let normalised: Vec<f64> = if flipped { v.iter().map(|x| -x).collect() } else { v.clone() };
    let rhs_raw = linf_rhs(v, phi.period);
    let rhs = linf_rhs(&normalised, phi.period);
    let slack = if v.len().is_multiple_of(2) && v.len() >= 16 {
        let half: Vec<f64> = normalised.iter().step_by(2).copied().collect();
        (rhs - linf_rhs(&half, phi.period)).abs()
    } else {
        0.0
    };
    let pass = lhs <= rhs + 1e-10 * rhs.abs() + slack;
    LinfOutcome {
        lhs,
        rhs,
        rhs_raw,
        flipped,
        slack,
        pass,
    }
}

/// `pi^2 / (2h)`: the left side for `phi = sin(pi x / h)`.
pub fn poincare_sine_lhs(h: f64) -> f64 {
    PI * PI / (2.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poincare_analytic_sine() {
        let phi = GridField::from_fn(1.0, 1999, |x| (PI * x).sin()).unwrap();
        let out = poincare_check(&phi).unwrap();
        assert!((out.lhs - poincare_sine_lhs(1.0)).abs() < 1e-10, "{}", out.lhs);
        assert!((out.rhs - 0.5).abs() < 1e-10);
        assert!(out.pass);
    }

    #[test]
    fn poincare_zero_and_boundary() {
        let out = poincare_check(&GridField::zeros(1.0, 10).unwrap()).unwrap();
        assert_eq!((out.lhs, out.rhs), (0.0, 0.0));
        assert!(out.pass);
        let bad = GridField::new(1.0, vec![1.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(poincare_check(&bad).unwrap_err(), Error::BoundaryViolation);
    }

    #[test]
    fn linf_analytic_cases() {
        let c = linf_check(&PeriodicSample::from_fn(1.0, 64, |_| 2.5).unwrap());
        assert!((c.lhs - 2.5).abs() < 1e-15 && (c.rhs - 2.5).abs() < 1e-12 && c.pass);
        let s = linf_check(&PeriodicSample::from_fn(1.0, 64, |y| (2.0 * PI * y).sin()).unwrap());
        assert!((s.lhs - 1.0).abs() < 1e-10);
        assert!((s.rhs - PI / 6f64.sqrt()).abs() < 1e-10);
        assert!(s.pass);
    }

    #[test]
    fn linf_sign_normalisation() {
        let phi = PeriodicSample::from_fn(1.0, 64, |y| -3.0 + (2.0 * PI * y).sin()).unwrap();
        let out = linf_check(&phi);
        assert!(out.flipped);
        assert!(out.rhs_raw < out.lhs);
        assert!(out.pass);
    }

    #[test]
    fn sample_validation() {
        assert!(PeriodicSample::new(1.0, vec![0.0; 7]).is_err());
        assert!(PeriodicSample::new(1.0, vec![f64::NAN; 8]).is_err());
        assert!(PeriodicSample::new(0.0, vec![0.0; 8]).is_err());
    }
}
