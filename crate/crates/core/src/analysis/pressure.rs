//! The pressure `P = p0(t) + x1 p1(t) / pi1` allowed by periodic channel flow.

use crate::error::{Error, Result};
use crate::forcing::ForcingSignal;
use crate::report::CheckEntry;

#[derive(Debug, Clone, PartialEq)]
pub struct PressureField {
    pub p0: ForcingSignal,
    /// Pressure drop over one streamwise period.
    pub p1: ForcingSignal,
    pub pi1: f64,
}

impl PressureField {
    pub fn new(p0: ForcingSignal, p1: ForcingSignal, pi1: f64) -> Result<Self> {
        if !(pi1.is_finite() && pi1 > 0.0) {
            return Err(Error::NonPositiveParameter("pi1"));
        }
        Ok(Self { p0, p1, pi1 })
    }

    pub fn eval(&self, x1: f64, _x2: f64, t: f64) -> f64 {
        self.p0.eval(t) + x1 * self.p1.eval(t) / self.pi1
    }

    /// `(P(x1 + pi1) - P(x1), P(x2 + pi2) - P(x2))`.
    pub fn differences(&self, t: f64) -> (f64, f64) {
        (self.p1.eval(t), 0.0)
    }
}

pub fn pressure_eval(p: &PressureField, x1: f64, x2: f64, t: f64) -> f64 {
    p.eval(x1, x2, t)
}

pub fn pressure_differences(p: &PressureField, t: f64) -> (f64, f64) {
    p.differences(t)
}

/// `P(y, t) <= sup_{0 <= x1 < pi1} |P(x1, t)| + |y| p_bar / pi1` at every
/// sampled `(y, t)`. The measured value is the largest excess (pass iff <= 0).
pub fn pressure_growth_check(
    p: &PressureField,
    ys: &[f64],
    ts: &[f64],
    p_bar: f64,
) -> Result<CheckEntry> {
    if !(p_bar.is_finite() && p_bar > 0.0) {
        return Err(Error::NonPositiveParameter("p_bar"));
    }
    let mut worst = f64::NEG_INFINITY;
    for &t in ts {
        let p1 = p.p1.eval(t);
        if p1.abs() > p_bar {
            return Err(Error::PreconditionViolation(format!(
                "|p1({t})| = {} exceeds p_bar = {p_bar}",
                p1.abs()
            )));
        }
        // P is affine in x1, so the sup over a period sits at an end.
        let sup = p.eval(0.0, 0.0, t).abs().max(p.eval(p.pi1, 0.0, t).abs());
        for &y in ys {
            worst = worst.max(p.eval(y, 0.0, t) - (sup + y.abs() * p_bar / p.pi1));
        }
    }
    Ok(CheckEntry::at_most("pressure_growth", worst, 0.0)
        .with_meta("samples", ys.len() * ts.len()))
}
