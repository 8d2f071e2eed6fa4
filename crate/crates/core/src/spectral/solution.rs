use std::f64::consts::PI;

use super::expint::{exp_convolve, exp_convolve_from, ModeRate};
use crate::config::ChannelConfig;
use crate::error::{Error, Result};
use crate::field::SineSpectrum;
use crate::forcing::ForcingSignal;

/// Truncation used when callers have no reason to pick another.
pub const DEFAULT_MODES: usize = 501;

fn check_mode(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroTruncation)
    } else {
        Ok(())
    }
}

/// Coefficient `U(k, t)` of the NSE channel solution driven by the reduced
/// pressure gradient `p1_tilde(t)` since `t = -inf`.
pub fn nse_mode_solution(k: usize, f: &ForcingSignal, cfg: &ChannelConfig, t: f64) -> Result<f64> {
    check_mode(k)?;
    let cfg = cfg.validate()?;
    Ok(nse_coeff(&ModeRate::new(k, &cfg), f, t))
}

fn nse_coeff(mode: &ModeRate, f: &ForcingSignal, t: f64) -> f64 {
    if mode.source_gain == 0.0 {
        return 0.0;
    }
    mode.source_gain * exp_convolve(mode.lambda, f, t)
}

/// NS-alpha coefficient: the NSE one divided by `1 + alpha^2 (pi k/h)^2`.
pub fn alpha_mode_solution(
    k: usize,
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    t: f64,
) -> Result<f64> {
    check_mode(k)?;
    let cfg = cfg.validate()?;
    Ok(alpha_coeff(&ModeRate::new(k, &cfg), f, t))
}

fn alpha_coeff(mode: &ModeRate, f: &ForcingSignal, t: f64) -> f64 {
    nse_coeff(mode, f, t) / mode.alpha_factor
}

fn build(
    cfg: &ChannelConfig,
    modes: usize,
    coeff: impl Fn(&ModeRate) -> f64,
) -> Result<SineSpectrum> {
    if modes == 0 {
        return Err(Error::ZeroTruncation);
    }
    let cfg = cfg.validate()?;
    let coeffs = (1..=modes).map(|k| coeff(&ModeRate::new(k, &cfg))).collect();
    SineSpectrum::new(cfg.h, coeffs)
}

/// Truncated sine representation of the NSE solution at time `t`.
pub fn nse_profile(
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    t: f64,
    modes: usize,
) -> Result<SineSpectrum> {
    build(cfg, modes, |m| nse_coeff(m, f, t))
}

/// Truncated sine representation of the NS-alpha solution at time `t`.
pub fn alpha_profile(
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    t: f64,
    modes: usize,
) -> Result<SineSpectrum> {
    build(cfg, modes, |m| alpha_coeff(m, f, t))
}

fn check_interval(t0: f64, t: f64) -> Result<()> {
    if t >= t0 {
        Ok(())
    } else {
        Err(Error::PreconditionViolation(format!(
            "evaluation time {t} precedes initial time {t0}"
        )))
    }
}

/// NSE solution at `t` for the initial-value problem that starts from
/// `initial` at `t0`; only forcing on `[t0, t]` contributes.
pub fn nse_profile_from(
    initial: &SineSpectrum,
    t0: f64,
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    t: f64,
    modes: usize,
) -> Result<SineSpectrum> {
    check_interval(t0, t)?;
    build(cfg, modes, |m| {
        let decay = (-m.lambda * (t - t0)).exp();
        decay * initial.coeff(m.k) + m.source_gain * exp_convolve_from(m.lambda, f, t0, t)
    })
}

/// NS-alpha counterpart of [`nse_profile_from`].
pub fn alpha_profile_from(
    initial: &SineSpectrum,
    t0: f64,
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    t: f64,
    modes: usize,
) -> Result<SineSpectrum> {
    check_interval(t0, t)?;
    build(cfg, modes, |m| {
        let decay = (-m.lambda * (t - t0)).exp();
        decay * initial.coeff(m.k)
            + m.source_gain / m.alpha_factor * exp_convolve_from(m.lambda, f, t0, t)
    })
}

/// Partial sum of the heat-like kernel
/// `K(x, t) = sum_k 2((-1)^k - 1)/(pi1 k pi) e^{-lambda_k t} sin(k pi x/h)`.
///
/// At `t = 0` the series only converges conditionally (it is a scaled square
/// wave), so large truncations are needed there.
pub fn kernel_k(x: f64, t: f64, cfg: &ChannelConfig, modes: usize) -> Result<f64> {
    let cfg = cfg.validate()?;
    cfg.check_position(x)?;
    if modes == 0 {
        return Err(Error::ZeroTruncation);
    }
    if x == 0.0 || x == cfg.h {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    for k in (1..=modes).step_by(2) {
        let m = ModeRate::new(k, &cfg);
        let weight = kernel_weight(k, &cfg);
        sum += weight * (-m.lambda * t).exp() * (PI * k as f64 * x / cfg.h).sin();
    }
    Ok(sum)
}

fn kernel_weight(k: usize, cfg: &ChannelConfig) -> f64 {
    if k.is_multiple_of(2) {
        0.0
    } else {
        2.0 * (-2.0) / (cfg.pi1 * k as f64 * PI)
    }
}

/// Averaged streamwise velocity `<u1>(x3, t) = int_{-inf}^t K(x3, t - s) p1(s) ds`
/// driven by the per-period pressure difference `p1`. The sum and the time
/// integral are swapped and each mode is integrated exactly.
pub fn mean_velocity_from_kernel(
    p1: &ForcingSignal,
    cfg: &ChannelConfig,
    t: f64,
    x3: f64,
    modes: usize,
) -> Result<f64> {
    let cfg = cfg.validate()?;
    cfg.check_position(x3)?;
    if modes == 0 {
        return Err(Error::ZeroTruncation);
    }
    if x3 == 0.0 || x3 == cfg.h {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    for k in (1..=modes).step_by(2) {
        let m = ModeRate::new(k, &cfg);
        let history = exp_convolve(m.lambda, p1, t);
        sum += kernel_weight(k, &cfg) * history * (PI * k as f64 * x3 / cfg.h).sin();
    }
    Ok(sum)
}

/// Modified pressure under which an NSE channel solution also solves the
/// NS-alpha model: `Q = p1_tilde x1 - (U^2 - alpha^2 (dU/dx3)^2) / 2`.
pub fn q_field(
    profile: &SineSpectrum,
    p1_tilde: f64,
    cfg: &ChannelConfig,
    x1: f64,
    x3: f64,
) -> f64 {
    let u = profile.eval(x3);
    let du = profile.derivative(x3);
    p1_tilde * x1 - 0.5 * (u * u - cfg.alpha * cfg.alpha * du * du)
}
