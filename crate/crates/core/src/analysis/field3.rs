//! Three-component velocity fields sampled on the periodic box
//! `[0, pi1) x [0, pi2) x [0, h]`.

use super::periodic::PeriodicDerivative;
use crate::error::{Error, Result};
use crate::field::trapezoid;

/// Samples at `x1 = i pi1/n1`, `x2 = j pi2/n2` (periodic, right end
/// excluded) and `x3 = l h/(n3 - 1)` (both walls included).
#[derive(Debug, Clone, PartialEq)]
pub struct Field3 {
    pub pi1: f64,
    pub pi2: f64,
    pub h: f64,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    comps: [Vec<f64>; 3],
}

impl Field3 {
    pub fn from_fn(
        (pi1, pi2, h): (f64, f64, f64),
        (n1, n2, n3): (usize, usize, usize),
        f: impl Fn(f64, f64, f64) -> [f64; 3],
    ) -> Result<Self> {
        if n1 < 4 || n2 < 4 || n3 < 3 {
            return Err(Error::ShapeMismatch(format!(
                "need n1, n2 >= 4 and n3 >= 3, got {n1} x {n2} x {n3}"
            )));
        }
        for (name, v) in [("pi1", pi1), ("pi2", pi2), ("h", h)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::NonPositiveParameter(name));
            }
        }
        let len = n1 * n2 * n3;
        let mut comps = [vec![0.0; len], vec![0.0; len], vec![0.0; len]];
        for i in 0..n1 {
            for j in 0..n2 {
                for l in 0..n3 {
                    let x3 = if l + 1 == n3 { h } else { l as f64 * h / (n3 - 1) as f64 };
                    let v = f(i as f64 * pi1 / n1 as f64, j as f64 * pi2 / n2 as f64, x3);
                    let idx = (i * n2 + j) * n3 + l;
                    for c in 0..3 {
                        comps[c][idx] = v[c];
                    }
                }
            }
        }
        if comps.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("field"));
        }
        Ok(Self {
            pi1,
            pi2,
            h,
            n1,
            n2,
            n3,
            comps,
        })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.n1, self.n2, self.n3)
    }

    pub fn same_shape(&self, other: &Field3) -> bool {
        self.dims() == other.dims()
            && (self.pi1 - other.pi1).abs() <= 1e-12 * self.pi1
            && (self.pi2 - other.pi2).abs() <= 1e-12 * self.pi2
            && (self.h - other.h).abs() <= 1e-12 * self.h
    }

    pub fn component(&self, c: usize) -> &[f64] {
        &self.comps[c]
    }

    pub fn index(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.n2 + j) * self.n3 + l
    }

    pub fn dx3(&self) -> f64 {
        self.h / (self.n3 - 1) as f64
    }

    /// `d(component c)/d(x_{axis+1})`: spectral in the periodic directions,
    /// second-order differences (one-sided at the walls) across the channel.
    pub fn derivative(&self, c: usize, axis: usize) -> Vec<f64> {
        let (n1, n2, n3) = self.dims();
        let src = &self.comps[c];
        let mut out = vec![0.0; src.len()];
        match axis {
            0 => {
                let d = PeriodicDerivative::new(n1, self.pi1);
                for j in 0..n2 {
                    for l in 0..n3 {
                        let line: Vec<f64> = (0..n1).map(|i| src[self.index(i, j, l)]).collect();
                        for (i, v) in d.apply(&line).into_iter().enumerate() {
                            out[self.index(i, j, l)] = v;
                        }
                    }
                }
            }
            1 => {
                let d = PeriodicDerivative::new(n2, self.pi2);
                for i in 0..n1 {
                    for l in 0..n3 {
                        let line: Vec<f64> = (0..n2).map(|j| src[self.index(i, j, l)]).collect();
                        for (j, v) in d.apply(&line).into_iter().enumerate() {
                            out[self.index(i, j, l)] = v;
                        }
                    }
                }
            }
            2 => {
                let dx = self.dx3();
                for i in 0..n1 {
                    for j in 0..n2 {
                        let base = self.index(i, j, 0);
                        let u = &src[base..base + n3];
                        let o = &mut out[base..base + n3];
                        if n3 >= 3 {
                            o[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx);
                            o[n3 - 1] = (3.0 * u[n3 - 1] - 4.0 * u[n3 - 2] + u[n3 - 3]) / (2.0 * dx);
                        }
                        for l in 1..n3 - 1 {
                            o[l] = (u[l + 1] - u[l - 1]) / (2.0 * dx);
                        }
                    }
                }
            }
            _ => panic!("axis must be 0, 1 or 2"),
        }
        out
    }

    /// `int_Omega g dx`: rectangle rule in the periodic directions (exact for
    /// resolved trigonometric polynomials), trapezoid rule across the channel.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        let (n1, n2, n3) = self.dims();
        let cell = self.pi1 / n1 as f64 * self.pi2 / n2 as f64;
        let dx3 = self.dx3();
        let mut total = 0.0;
        for i in 0..n1 {
            for j in 0..n2 {
                let base = self.index(i, j, 0);
                total += trapezoid(&values[base..base + n3], dx3);
            }
        }
        total * cell
    }

    /// Every other node in each direction, when the grid allows it.
    pub fn coarsened(&self) -> Option<Field3> {
        let (n1, n2, n3) = self.dims();
        if n1 % 2 != 0 || n2 % 2 != 0 || (n3 - 1) % 2 != 0 || n1 < 8 || n2 < 8 || n3 < 5 {
            return None;
        }
        let (m1, m2, m3) = (n1 / 2, n2 / 2, (n3 - 1) / 2 + 1);
        let mut comps = [vec![0.0; m1 * m2 * m3], vec![0.0; m1 * m2 * m3], vec![0.0; m1 * m2 * m3]];
        for (dst, src) in comps.iter_mut().zip(&self.comps) {
            for i in 0..m1 {
                for j in 0..m2 {
                    for l in 0..m3 {
                        dst[(i * m2 + j) * m3 + l] = src[self.index(2 * i, 2 * j, 2 * l)];
                    }
                }
            }
        }
        Some(Field3 {
            pi1: self.pi1,
            pi2: self.pi2,
            h: self.h,
            n1: m1,
            n2: m2,
            n3: m3,
            comps,
        })
    }
}
