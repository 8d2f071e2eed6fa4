//! Time-dependent pressure-gradient programs.
//!
//! A [`ForcingSignal`] is constant (its *tail*) for every time up to the first
//! knot, piecewise linear between knots, and constant at the last knot value
//! afterwards. The constant tail stands in for the whole history back to
//! `t = -inf`, which lets the spectral solver integrate from minus infinity in
//! closed form.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ForcingSignal {
    tail: f64,
    knots: Vec<(f64, f64)>,
    class_p_bound: Option<f64>,
}

impl ForcingSignal {
    /// The stationary signal `t -> value`.
    pub fn constant(value: f64) -> Self {
        Self {
            tail: value,
            knots: Vec::new(),
            class_p_bound: None,
        }
    }

    /// Builds a signal from its tail value and `(time, value)` knots.
    ///
    /// Knot times must be strictly increasing and the first knot must carry
    /// the tail value so that the signal is continuous.
    pub fn new(tail: f64, knots: Vec<(f64, f64)>) -> Result<Self> {
        if !tail.is_finite() {
            return Err(Error::NonFinite("forcing.tail"));
        }
        for (i, &(t, v)) in knots.iter().enumerate() {
            if !t.is_finite() || !v.is_finite() {
                return Err(Error::NonFinite("forcing.knots"));
            }
            if i > 0 && t <= knots[i - 1].0 {
                return Err(Error::KnotOrder(i));
            }
        }
        if let Some(&(_, first)) = knots.first() {
            if first != tail {
                return Err(Error::ForcingDiscontinuity { tail, knot: first });
            }
        }
        Ok(Self {
            tail,
            knots,
            class_p_bound: None,
        })
    }

    /// Enables the class-P sign condition `0 < -p(t) <= p_bar` and checks it
    /// at the tail and every knot (which bounds the whole piecewise-linear
    /// signal).
    pub fn with_class_p_bound(mut self, p_bar: f64) -> Result<Self> {
        if !p_bar.is_finite() {
            return Err(Error::NonFinite("p_bar"));
        }
        let check = |t: f64, value: f64| {
            if 0.0 < -value && -value <= p_bar {
                Ok(())
            } else {
                Err(Error::ClassPViolation {
                    t,
                    value,
                    bound: p_bar,
                })
            }
        };
        check(f64::NEG_INFINITY, self.tail)?;
        for &(t, v) in &self.knots {
            check(t, v)?;
        }
        self.class_p_bound = Some(p_bar);
        Ok(self)
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn class_p_bound(&self) -> Option<f64> {
        self.class_p_bound
    }

    /// Value after the last knot (the tail when there are no knots).
    pub fn final_value(&self) -> f64 {
        self.knots.last().map_or(self.tail, |&(_, v)| v)
    }

    /// True when the signal takes a single value for all time.
    pub fn is_constant(&self) -> bool {
        self.knots.iter().all(|&(_, v)| v == self.tail)
    }

    /// Largest `|value|` attained by the signal.
    pub fn sup_abs(&self) -> f64 {
        self.knots
            .iter()
            .fold(self.tail.abs(), |acc, &(_, v)| acc.max(v.abs()))
    }

    /// The same program multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            tail: self.tail * factor,
            knots: self.knots.iter().map(|&(t, v)| (t, v * factor)).collect(),
            class_p_bound: None,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let knots = &self.knots;
        match knots.first() {
            None => self.tail,
            Some(&(t0, _)) if t <= t0 => self.tail,
            Some(_) => {
                let i = knots.partition_point(|&(tk, _)| tk <= t);
                if i >= knots.len() {
                    return knots[knots.len() - 1].1;
                }
                let (ta, va) = knots[i - 1];
                let (tb, vb) = knots[i];
                let s = (t - ta) / (tb - ta);
                va + s * (vb - va)
            }
        }
    }
}
