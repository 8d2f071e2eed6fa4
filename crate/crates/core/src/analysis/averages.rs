//! Spanwise averages and the reflection symmetry of mean profiles.

use crate::error::{Error, Result};
use crate::field::{GridField, SineSpectrum};

/// Average over one `x2` period of profiles sampled at positions `x2`.
///
/// `profiles[j]` holds the `x3` profile at `x2[j]`. The samples must be
/// uniform; a final sample at `x2[0] + period` is recognised as the periodic
/// image of the first one and dropped.
pub fn average_x2(x2: &[f64], profiles: &[Vec<f64>], period: f64) -> Result<Vec<f64>> {
    if !(period.is_finite() && period > 0.0) {
        return Err(Error::NonPositiveParameter("period"));
    }
    if x2.len() != profiles.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} positions for {} profiles",
            x2.len(),
            profiles.len()
        )));
    }
    if x2.len() < 2 {
        return Err(Error::NonUniformGrid);
    }
    let tol = 1e-9 * period;
    let step = x2[1] - x2[0];
    if step <= 0.0 || x2.windows(2).any(|w| ((w[1] - w[0]) - step).abs() > tol) {
        return Err(Error::NonUniformGrid);
    }
    let mut m = x2.len();
    if (x2[m - 1] - x2[0] - period).abs() <= tol {
        m -= 1;
    }
    if (m as f64 * step - period).abs() > tol {
        return Err(Error::NonUniformGrid);
    }
    let len = profiles[0].len();
    if profiles.iter().any(|p| p.len() != len) {
        return Err(Error::ShapeMismatch("profiles differ in length".into()));
    }
    let mut out = vec![0.0; len];
    for p in &profiles[..m] {
        for (o, v) in out.iter_mut().zip(p) {
            *o += v;
        }
    }
    for o in &mut out {
        *o /= m as f64;
    }
    Ok(out)
}

/// Evaluation points used when a [`SineSpectrum`] is checked for symmetry.
pub const SYMMETRY_SAMPLES: usize = 1001;

/// Anything that can be sampled uniformly across the channel, walls included.
pub trait Profile {
    fn uniform_samples(&self) -> Vec<f64>;
}

impl Profile for GridField {
    fn uniform_samples(&self) -> Vec<f64> {
        self.values().to_vec()
    }
}

impl Profile for SineSpectrum {
    fn uniform_samples(&self) -> Vec<f64> {
        self.sample(SYMMETRY_SAMPLES)
    }
}

impl Profile for [f64] {
    fn uniform_samples(&self) -> Vec<f64> {
        self.to_vec()
    }
}

impl Profile for Vec<f64> {
    fn uniform_samples(&self) -> Vec<f64> {
        self.clone()
    }
}

/// `max_j |U(h - x_j) - U(x_j)|` over uniform samples.
pub fn symmetry_defect<P: Profile + ?Sized>(profile: &P) -> f64 {
    let v = profile.uniform_samples();
    let n = v.len();
    (0..n).fold(0.0, |m, j| m.max((v[n - 1 - j] - v[j]).abs()))
}
