//! Closed-form stationary profiles and sup-norm truncation bounds.

use std::f64::consts::PI;

use crate::config::ChannelConfig;
use crate::error::{Error, Result};

/// Poiseuille profile `x3 -> -p10/(2 nu) x3 (h - x3)`.
pub fn poiseuille_closed(cfg: &ChannelConfig, p10: f64) -> Result<impl Fn(f64) -> f64> {
    let cfg = cfg.validate()?;
    Ok(move |x3: f64| -p10 / (2.0 * cfg.nu) * x3 * (cfg.h - x3))
}

/// `cosh(d / alpha) / cosh(h / (2 alpha))` for `|d| <= h/2`, written with
/// decaying exponentials only so that it stays finite for `alpha << h`.
pub fn cosh_ratio(d: f64, h: f64, alpha: f64) -> f64 {
    let d = d.abs();
    ((d - 0.5 * h) / alpha).exp() * (1.0 + (-2.0 * d / alpha).exp()) / (1.0 + (-h / alpha).exp())
}

/// Stationary NS-alpha profile for constant `q10`:
/// `alpha^2 q10/nu (1 - cosh((x3 - h/2)/alpha)/cosh(h/(2 alpha))) - q10/(2 nu) x3 (h - x3)`.
pub fn alpha_closed(cfg: &ChannelConfig, q10: f64) -> Result<impl Fn(f64) -> f64> {
    let cfg = cfg.validate()?;
    if cfg.alpha == 0.0 {
        return Err(Error::AlphaZero);
    }
    let (h, nu, a) = (cfg.h, cfg.nu, cfg.alpha);
    Ok(move |x3: f64| {
        a * a * q10 / nu * (1.0 - cosh_ratio(x3 - 0.5 * h, h, a)) - q10 / (2.0 * nu) * x3 * (h - x3)
    })
}

/// `sum_{odd k > K} k^{-p} <= (K+1)^{-p} + (K+1)^{1-p} / (2 (p-1))`.
fn odd_tail(modes: usize, p: i32) -> f64 {
    let first = if modes.is_multiple_of(2) { modes + 1 } else { modes + 2 } as f64;
    first.powi(-p) + first.powi(1 - p) / (2.0 * (p - 1) as f64)
}

/// Sup-norm bound on the truncation error of the NSE series for constant
/// forcing `p10` kept to `modes` terms.
pub fn nse_tail_bound(cfg: &ChannelConfig, p10: f64, modes: usize) -> f64 {
    4.0 * p10.abs() * cfg.h * cfg.h / (cfg.nu * PI.powi(3)) * odd_tail(modes, 3)
}

/// Same for the NS-alpha series; uses the faster `k^-5` decay when alpha > 0.
pub fn alpha_tail_bound(cfg: &ChannelConfig, q10: f64, modes: usize) -> f64 {
    let cubic = nse_tail_bound(cfg, q10, modes);
    if cfg.alpha == 0.0 {
        return cubic;
    }
    let h = cfg.h;
    let quintic =
        4.0 * q10.abs() * h.powi(4) / (cfg.nu * cfg.alpha * cfg.alpha * PI.powi(5)) * odd_tail(modes, 5);
    cubic.min(quintic)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poiseuille_values() {
        let u = poiseuille_closed(&ChannelConfig::default(), -1.0).unwrap();
        assert_eq!(u(0.0), 0.0);
        assert_eq!(u(1.0), 0.0);
        assert_eq!(u(0.5), 0.125);
    }

    #[test]
    fn poiseuille_peak_matches_parabola_form() {
        // U = b (1 - (x - h/2)^2 / (h/2)^2) with b = -p10 h^2 / (8 nu)
        let cfg = ChannelConfig::new(2.0, 0.5, 0.0, 1.0, 1.0).unwrap();
        let p10 = -0.8;
        let u = poiseuille_closed(&cfg, p10).unwrap();
        let b = -p10 * cfg.h * cfg.h / (8.0 * cfg.nu);
        for &x in &[0.1, 0.7, 1.0, 1.9] {
            let form = b * (1.0 - (x - 1.0_f64).powi(2) / 1.0);
            assert!((u(x) - form).abs() < 1e-14);
        }
    }

    #[test]
    fn alpha_closed_midpoint() {
        let cfg = ChannelConfig::default().with_alpha(1.0);
        let u = alpha_closed(&cfg, -1.0).unwrap();
        let expected = -(1.0 - 1.0 / 0.5_f64.cosh()) + 0.125;
        assert!((u(0.5) - expected).abs() < 1e-15);
        assert!((u(0.5) - 0.0118189).abs() < 1e-7);
        assert!(u(0.0).abs() < 1e-16);
        assert!(u(1.0).abs() < 1e-16);
    }

    #[test]
    fn alpha_closed_matches_two_parameter_form() {
        // a1 (1 - cosh/cosh) + a2 (1 - (x - h/2)^2/(h/2)^2)
        let cfg = ChannelConfig::new(1.5, 0.7, 0.4, 1.0, 1.0).unwrap();
        let q10 = -2.0;
        let u = alpha_closed(&cfg, q10).unwrap();
        let a1 = cfg.alpha * cfg.alpha * q10 / cfg.nu;
        let a2 = -q10 * cfg.h * cfg.h / (8.0 * cfg.nu);
        for &x in &[0.05, 0.4, 0.75, 1.3] {
            let d: f64 = x - 0.75;
            let form = a1 * (1.0 - (d / 0.4).cosh() / (0.75_f64 / 0.4).cosh())
                + a2 * (1.0 - d * d / (0.75 * 0.75));
            assert!((u(x) - form).abs() < 1e-13);
        }
    }

    #[test]
    fn alpha_closed_needs_positive_alpha() {
        assert!(matches!(
            alpha_closed(&ChannelConfig::default(), -1.0),
            Err(Error::AlphaZero)
        ));
    }

    #[test]
    fn cosh_ratio_is_finite_for_tiny_alpha() {
        let r = cosh_ratio(0.49, 1.0, 1e-4);
        assert!(r.is_finite() && r > 0.0 && r < 1.0);
        assert!((cosh_ratio(0.5, 1.0, 1e-4) - 1.0).abs() < 1e-15);
    }
}
