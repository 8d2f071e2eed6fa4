//! The two sine-series identities behind the closed-form NS-alpha profile,
//! evaluated term by term so their truncation defect can be measured.

use std::f64::consts::PI;

use super::closed::cosh_ratio;
use crate::error::{Error, Result};
use crate::field::uniform_points;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesIdentity {
    pub lhs: f64,
    pub rhs: f64,
    pub defect: f64,
}

impl SeriesIdentity {
    fn new(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            defect: (lhs - rhs).abs(),
        }
    }
}

fn check(x: f64, h: f64, modes: usize) -> Result<()> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::NonPositiveParameter("h"));
    }
    if modes == 0 {
        return Err(Error::ZeroTruncation);
    }
    if !(x.is_finite() && (0.0..=h).contains(&x)) {
        return Err(Error::Domain { x, h });
    }
    Ok(())
}

/// Both sides are even about `h/2` (odd sine modes only), so points are
/// reflected into `[0, h/2]` first; this makes `x` and `h - x` agree exactly.
fn reflect(x: f64, h: f64) -> f64 {
    if x > 0.5 * h {
        h - x
    } else {
        x
    }
}

/// `x (h - x) = sum_k 4 h^2 (1 - (-1)^k) / (pi k)^3 sin(pi k x / h)`.
pub fn identity_parabola_series(x: f64, h: f64, modes: usize) -> Result<SeriesIdentity> {
    check(x, h, modes)?;
    let x = reflect(x, h);
    let theta = PI * x / h;
    let rhs: f64 = (1..=modes)
        .step_by(2)
        .map(|k| {
            let k = k as f64;
            8.0 * h * h / (PI * k).powi(3) * (k * theta).sin()
        })
        .sum();
    Ok(SeriesIdentity::new(x * (h - x), rhs))
}

/// `cosh(h/(2a)) - cosh((x - h/2)/a)
///   = sum_k 2 cosh(h/(2a)) (1 - (-1)^k) / (pi k (1 + a^2 (pi k/h)^2)) sin(pi k x / h)`.
///
/// Both sides are formed as `cosh(h/(2a))` times a bounded factor, so the
/// values overflow only where `cosh(h/(2a))` itself does.
pub fn identity_cosh_series(x: f64, h: f64, alpha: f64, modes: usize) -> Result<SeriesIdentity> {
    check(x, h, modes)?;
    if !alpha.is_finite() {
        return Err(Error::NonFinite("alpha"));
    }
    if alpha <= 0.0 {
        return Err(Error::AlphaZero);
    }
    let x = reflect(x, h);
    let scale = (0.5 * h / alpha).cosh();
    let theta = PI * x / h;
    let sum: f64 = (1..=modes)
        .step_by(2)
        .map(|k| {
            let k = k as f64;
            let wave = PI * k / h;
            4.0 / (PI * k * (1.0 + alpha * alpha * wave * wave)) * (k * theta).sin()
        })
        .sum();
    let lhs = scale * (1.0 - cosh_ratio(x - 0.5 * h, h, alpha));
    Ok(SeriesIdentity::new(lhs, scale * sum))
}

/// Largest defect of `identity` over `samples` equispaced points of `[0, h]`.
pub fn sup_defect(
    h: f64,
    samples: usize,
    identity: impl Fn(f64) -> Result<SeriesIdentity>,
) -> Result<f64> {
    uniform_points(h, samples).try_fold(0.0_f64, |m, x| Ok(m.max(identity(x)?.defect)))
}

/// Least-squares slope of `log(value)` against `log(size)`.
pub fn fit_log_slope(sizes: &[f64], values: &[f64]) -> f64 {
    let n = sizes.len().min(values.len()) as f64;
    let xs: Vec<f64> = sizes.iter().map(|s| s.ln()).collect();
    let ys: Vec<f64> = values.iter().map(|v| v.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
