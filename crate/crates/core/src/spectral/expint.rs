//! Exact exponential integration of a single sine mode.
//!
//! Each mode obeys `dc/dt + lambda c = gain * f(t)` with `f` a constant-tail,
//! piecewise-linear [`ForcingSignal`]. Over a linear piece the Duhamel
//! integral has a closed form, so the solution is marched knot by knot with
//! no quadrature error.

use std::f64::consts::PI;

use crate::config::ChannelConfig;
use crate::forcing::ForcingSignal;

/// Per-mode rates of the sine expansion on `[0, h]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeRate {
    pub k: usize,
    /// `nu (pi k / h)^2`
    pub lambda: f64,
    /// `1 + alpha^2 (pi k / h)^2`
    pub alpha_factor: f64,
    /// `2((-1)^k - 1) / (pi k)`: zero for even k, `-4/(pi k)` for odd k.
    pub source_gain: f64,
}

impl ModeRate {
    pub fn new(k: usize, cfg: &ChannelConfig) -> Self {
        debug_assert!(k >= 1);
        let wave = PI * k as f64 / cfg.h;
        let source_gain = if k.is_multiple_of(2) {
            0.0
        } else {
            -4.0 / (PI * k as f64)
        };
        Self {
            k,
            lambda: cfg.nu * wave * wave,
            alpha_factor: 1.0 + cfg.alpha * cfg.alpha * wave * wave,
            source_gain,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.k % 2 == 1
    }
}

/// `(1 - e^{-x}) / x`, continuous at 0.
pub(crate) fn phi1(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        -(-x).exp_m1() / x
    }
}

/// `(1 - e^{-x}(1 + x)) / x^2`, continuous at 0.
pub(crate) fn phi2(x: f64) -> f64 {
    if x.abs() < 0.5 {
        // sum_{m>=2} (-1)^m (m-1)/m! x^(m-2)
        let mut term = 0.5; // m = 2
        let mut sum = term;
        for m in 3..24 {
            let m = m as f64;
            term *= -x * (m - 1.0) / (m * (m - 2.0));
            sum += term;
        }
        sum
    } else {
        (-(-x).exp_m1() - x * (-x).exp()) / (x * x)
    }
}

/// Advances `acc` from `a` to `b` across one linear piece running from `fa`
/// to `fb`.
fn linear_piece(lambda: f64, a: f64, b: f64, fa: f64, fb: f64, acc: f64) -> f64 {
    let d = b - a;
    if d <= 0.0 {
        return acc;
    }
    let x = lambda * d;
    (-x).exp() * acc + d * (fb * phi1(x) - (fb - fa) * phi2(x))
}

fn march(lambda: f64, f: &ForcingSignal, from: f64, mut acc: f64, to: f64) -> f64 {
    let mut a = from;
    let mut fa = f.eval(from);
    for &(tk, vk) in f.knots().iter().filter(|(tk, _)| *tk > from && *tk < to) {
        acc = linear_piece(lambda, a, tk, fa, vk, acc);
        a = tk;
        fa = vk;
    }
    linear_piece(lambda, a, to, fa, f.eval(to), acc)
}

/// `int_{-inf}^t e^{-lambda (t - s)} f(s) ds`.
pub fn exp_convolve(lambda: f64, f: &ForcingSignal, t: f64) -> f64 {
    match f.knots().first() {
        Some(&(t0, _)) if t0 < t => march(lambda, f, t0, f.tail() / lambda, t),
        _ => f.tail() / lambda,
    }
}

/// `int_{t0}^t e^{-lambda (t - s)} f(s) ds` for `t >= t0`.
pub fn exp_convolve_from(lambda: f64, f: &ForcingSignal, t0: f64, t: f64) -> f64 {
    march(lambda, f, t0, 0.0, t)
}
