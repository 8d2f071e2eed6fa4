//! Seeded random inputs: trigonometric polynomials with `1/k^2` coefficient
//! decay, admissible forcing programs and class-P shaped channel states.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field3::Field3;
use super::inequalities::PeriodicSample;
use super::pressure::PressureField;
use crate::config::ChannelConfig;
use crate::error::Result;
use crate::field::GridField;
use crate::forcing::ForcingSignal;
use crate::oracle::{fd_mode_solve, fd_nse_solve, mode_time_derivative, nse_time_derivative, SolverSettings};

pub const MAX_MODES: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sine_coeffs(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let modes = rng.random_range(1..=MAX_MODES);
    (1..=modes)
        .map(|k| rng.random_range(-1.0..1.0) / (k * k) as f64)
        .collect()
}

fn sine_sum(coeffs: &[f64], h: f64, x: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * ((i + 1) as f64 * PI * x / h).sin())
        .sum()
}

/// `sum_{k <= K} c_k sin(k pi x / h)` with `K <= 8`, on `n` interior nodes.
pub fn random_sine_profile(seed: u64, h: f64, n: usize) -> Result<GridField> {
    let coeffs = sine_coeffs(&mut rng(seed));
    GridField::from_fn(h, n, |x| sine_sum(&coeffs, h, x))
}

/// A constant plus up to eight harmonics, sampled at `m` points.
pub fn random_trig_periodic(seed: u64, period: f64, m: usize) -> Result<PeriodicSample> {
    let mut r = rng(seed);
    let c0 = r.random_range(-2.0..2.0);
    let modes = r.random_range(1..=MAX_MODES);
    let terms: Vec<(f64, f64)> = (1..=modes)
        .map(|k| {
            let w = (k * k) as f64;
            (r.random_range(-1.0..1.0) / w, r.random_range(-1.0..1.0) / w)
        })
        .collect();
    PeriodicSample::from_fn(period, m, |y| {
        c0 + terms
            .iter()
            .enumerate()
            .map(|(i, (a, b))| {
                let arg = 2.0 * PI * (i + 1) as f64 * y / period;
                a * arg.cos() + b * arg.sin()
            })
            .sum::<f64>()
    })
}

/// Piecewise-linear program with every value in `[-p_bar, -p_bar/20]` and
/// knots inside `[t0, t1]`.
pub fn random_admissible_forcing(seed: u64, p_bar: f64, t0: f64, t1: f64) -> Result<ForcingSignal> {
    let mut r = rng(seed);
    let mut value = || -r.random_range(0.05 * p_bar..=p_bar);
    let tail = value();
    let count = 4;
    let mut knots = vec![(t0, tail)];
    for i in 1..count {
        knots.push((t0 + (t1 - t0) * i as f64 / (count - 1) as f64, value()));
    }
    ForcingSignal::new(tail, knots)?.with_class_p_bound(p_bar)
}

/// Velocity, its time derivative and the pressure of one class-P shaped
/// channel flow at time `t`.
#[derive(Debug, Clone)]
pub struct ChannelState {
    pub u: Field3,
    pub du_dt: Field3,
    pub pressure: PressureField,
    pub t: f64,
}

/// `u1 = U0(x3, t) + sum_{n=1,2} U_n(x3, t) cos(2 pi n x2/pi2 + phase_n)`,
/// `u2 = u3 = 0`, where `U0` solves the forced mean-flow equation and each
/// `U_n` the homogeneous spanwise-mode equation, both advanced by the
/// finite-difference oracle from random sine initial data. `du_dt` is the
/// oracle's semi-discrete right-hand side at the final time.
pub fn random_channel_state(
    seed: u64,
    cfg: &ChannelConfig,
    p_bar: f64,
    (n1, n2, n3): (usize, usize, usize),
) -> Result<ChannelState> {
    let cfg = cfg.validate()?;
    let mut r = rng(seed);
    let t = r.random_range(0.05..0.5);
    let p1 = random_admissible_forcing(r.random(), p_bar, 0.0, t)?;
    let p1_tilde = p1.scaled(1.0 / cfg.pi1);
    let n = n3 - 2;
    let s = SolverSettings::new(n, t / 50.0, 0.0, t)?;
    let amplitude = r.random_range(0.0..0.5);
    let u0_init = random_sine_profile(r.random(), cfg.h, n)?;
    let u0_init = GridField::new(cfg.h, u0_init.values().iter().map(|v| amplitude * v).collect())?;
    let u0 = fd_nse_solve(&p1_tilde, &cfg, &s, &u0_init)?;
    let d0 = nse_time_derivative(&p1_tilde, &cfg, &u0, t)?;
    let mut modes = Vec::new();
    for m in 1..=2usize {
        let phase = r.random_range(0.0..2.0 * PI);
        let init = random_sine_profile(r.random(), cfg.h, n)?;
        let state = fd_mode_solve(m, &cfg, &s, &init)?;
        let rate = mode_time_derivative(m, &cfg, &state)?;
        modes.push((m, phase, state, rate));
    }
    let dims = (n1, n2, n3);
    let domain = (cfg.pi1, cfg.pi2, cfg.h);
    let dx = cfg.h / (n3 - 1) as f64;
    let node = |x3: f64| (x3 / dx).round() as usize;
    let u = Field3::from_fn(domain, dims, |_, x2, x3| {
        let l = node(x3);
        let spanwise: f64 = modes
            .iter()
            .map(|(m, phase, state, _)| state.values()[l] * (2.0 * PI * *m as f64 * x2 / cfg.pi2 + phase).cos())
            .sum();
        [u0.values()[l] + spanwise, 0.0, 0.0]
    })?;
    let du_dt = Field3::from_fn(domain, dims, |_, x2, x3| {
        let l = node(x3);
        let spanwise: f64 = modes
            .iter()
            .map(|(m, phase, _, rate)| rate.values()[l] * (2.0 * PI * *m as f64 * x2 / cfg.pi2 + phase).cos())
            .sum();
        [d0.values()[l] + spanwise, 0.0, 0.0]
    })?;
    let pressure = PressureField::new(ForcingSignal::constant(r.random_range(-1.0..1.0)), p1, cfg.pi1)?;
    Ok(ChannelState {
        u,
        du_dt,
        pressure,
        t,
    })
}

/// Divergence-free field with no-slip walls built from a stream function:
/// `u1 = U(x3) + d psi/d x2`, `u2 = -d psi/d x1`, `u3 = 0` with
/// `psi = sum c sin(2 pi (j x1/pi1 + l x2/pi2) + phase) sin(q pi x3/h)`.
pub fn random_divergence_free(
    seed: u64,
    (pi1, pi2, h): (f64, f64, f64),
    dims: (usize, usize, usize),
) -> Result<Field3> {
    let mut r = rng(seed);
    let mean: Vec<f64> = sine_coeffs(&mut r);
    let terms: Vec<(f64, f64, f64, f64, f64)> = (0..r.random_range(1..=4))
        .map(|_| {
            let j = r.random_range(0..=2) as f64;
            let l = r.random_range(1..=2) as f64;
            let q = r.random_range(1..=3) as f64;
            let c = r.random_range(-1.0..1.0) / (j * j + l * l);
            (j, l, q, c, r.random_range(0.0..2.0 * PI))
        })
        .collect();
    Field3::from_fn((pi1, pi2, h), dims, |x1, x2, x3| {
        let mut u1 = sine_sum(&mean, h, x3);
        let mut u2 = 0.0;
        for &(j, l, q, c, phase) in &terms {
            let k1 = 2.0 * PI * j / pi1;
            let k2 = 2.0 * PI * l / pi2;
            let arg = k1 * x1 + k2 * x2 + phase;
            let g = c * (q * PI * x3 / h).sin();
            u1 += k2 * arg.cos() * g;
            u2 -= k1 * arg.cos() * g;
        }
        [u1, u2, 0.0]
    })
}
