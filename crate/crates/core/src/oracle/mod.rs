//! Finite-difference reference solver.
//!
//! Second-order central differences in `x3`, Crank–Nicolson in time, and a
//! Thomas solve per step. Nothing here touches the sine-series code, so the
//! two can be compared as independent routes to the same solution.

mod heat;
mod tridiag;

use std::f64::consts::PI;

pub use tridiag::{ThomasFactor, Tridiagonal};

use crate::config::ChannelConfig;
use crate::error::{Error, Result};
use crate::field::GridField;
use crate::forcing::ForcingSignal;
use crate::report::CheckEntry;
use heat::{helmholtz, CrankNicolson};

/// Grid and time-step settings for one oracle run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSettings {
    /// Interior grid nodes.
    pub n: usize,
    pub dt: f64,
    pub t0: f64,
    pub t_end: f64,
}

impl SolverSettings {
    pub fn new(n: usize, dt: f64, t0: f64, t_end: f64) -> Result<Self> {
        Self { n, dt, t0, t_end }.validate()
    }

    pub fn validate(self) -> Result<Self> {
        if self.n < 3 {
            return Err(Error::SolverSettings(format!("n = {} < 3", self.n)));
        }
        if !(self.dt.is_finite() && self.t0.is_finite() && self.t_end.is_finite()) {
            return Err(Error::SolverSettings("non-finite time parameter".into()));
        }
        if self.dt <= 0.0 {
            return Err(Error::SolverSettings(format!("dt = {} <= 0", self.dt)));
        }
        if self.t_end <= self.t0 {
            return Err(Error::SolverSettings("t_end must exceed t0".into()));
        }
        if self.dt > self.t_end - self.t0 {
            return Err(Error::SolverSettings("dt exceeds the time window".into()));
        }
        Ok(self)
    }

    /// Step count and the uniform step that lands exactly on `t_end`
    /// (never larger than the requested `dt`).
    pub fn steps(&self) -> (usize, f64) {
        let span = self.t_end - self.t0;
        let count = ((span / self.dt) - 1e-9).ceil().max(1.0) as usize;
        (count, span / count as f64)
    }

    pub fn with_window(self, t0: f64, t_end: f64) -> Self {
        Self { t0, t_end, ..self }
    }

    /// Halved `dt` and grid spacing (`n + 1` intervals doubled).
    pub fn refined(self) -> Self {
        Self {
            n: 2 * self.n + 1,
            dt: 0.5 * self.dt,
            ..self
        }
    }
}

fn check_initial(cfg: &ChannelConfig, s: &SolverSettings, initial: &GridField) -> Result<()> {
    if initial.n() != s.n {
        return Err(Error::ShapeMismatch(format!(
            "initial field has {} interior nodes, settings ask for {}",
            initial.n(),
            s.n
        )));
    }
    if (initial.h() - cfg.h).abs() > 1e-12 * cfg.h {
        return Err(Error::ShapeMismatch("initial field height differs from channel".into()));
    }
    if !initial.satisfies_no_slip() {
        return Err(Error::NoSlipViolation);
    }
    Ok(())
}

fn pack(h: f64, interior: &[f64]) -> Result<GridField> {
    let mut values = Vec::with_capacity(interior.len() + 2);
    values.push(0.0);
    values.extend_from_slice(interior);
    values.push(0.0);
    GridField::new(h, values)
}

/// Solves `dU/dt - nu U'' = -p1_tilde(t)` from `initial` at `t0`, recording
/// a snapshot every `every` steps (and always the first and last state).
pub fn fd_nse_trajectory(
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial: &GridField,
    every: usize,
) -> Result<Vec<(f64, GridField)>> {
    let cfg = cfg.validate()?;
    let s = s.validate()?;
    check_initial(&cfg, &s, initial)?;
    let (count, dt) = s.steps();
    let mut stepper = CrankNicolson::new(s.n, initial.dx(), cfg.nu, 0.0, dt);
    let mut u = initial.values()[1..=s.n].to_vec();
    let mut out = vec![(s.t0, initial.clone())];
    for i in 0..count {
        let t_mid = s.t0 + (i as f64 + 0.5) * dt;
        stepper.step(&mut u, -dt * f.eval(t_mid));
        let last = i + 1 == count;
        if last || (every > 0 && (i + 1) % every == 0) {
            let t = if last { s.t_end } else { s.t0 + (i + 1) as f64 * dt };
            out.push((t, pack(cfg.h, &u)?));
        }
    }
    Ok(out)
}

/// NSE oracle state at `t_end`.
pub fn fd_nse_solve(
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial: &GridField,
) -> Result<GridField> {
    let mut traj = fd_nse_trajectory(f, cfg, s, initial, 0)?;
    Ok(traj.pop().expect("trajectory holds the final state").1)
}

/// NS-alpha oracle: `(1 - alpha^2 D^2)(d/dt - nu D^2) U = -q1_tilde(t)`.
///
/// The momentum variable `V = (I - alpha^2 D^2) U` is advanced by
/// Crank–Nicolson with homogeneous Dirichlet data, and `U` is recovered from
/// the Helmholtz system with homogeneous Dirichlet data.
pub fn fd_alpha_solve(
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial_u: &GridField,
) -> Result<GridField> {
    let cfg = cfg.validate()?;
    if cfg.alpha == 0.0 {
        return Err(Error::AlphaZero);
    }
    let s = s.validate()?;
    check_initial(&cfg, &s, initial_u)?;
    let dx = initial_u.dx();
    let filter = helmholtz(s.n, dx, cfg.alpha);
    let mut v = vec![0.0; s.n];
    filter.apply(&initial_u.values()[1..=s.n], &mut v);
    let (count, dt) = s.steps();
    let mut stepper = CrankNicolson::new(s.n, dx, cfg.nu, 0.0, dt);
    for i in 0..count {
        let t_mid = s.t0 + (i as f64 + 0.5) * dt;
        stepper.step(&mut v, -dt * f.eval(t_mid));
    }
    filter.factor().solve_in_place(&mut v);
    pack(cfg.h, &v)
}

fn second_difference(values: &[f64], dx: f64) -> Vec<f64> {
    let n = values.len();
    let mut out = vec![0.0; n];
    for j in 1..n - 1 {
        out[j] = (values[j - 1] - 2.0 * values[j] + values[j + 1]) / (dx * dx);
    }
    out
}

/// Semi-discrete right-hand side `nu D^2 U - p1_tilde(t)` at the interior
/// nodes (zero at the walls): the oracle's `dU/dt`.
pub fn nse_time_derivative(
    f: &ForcingSignal,
    cfg: &ChannelConfig,
    field: &GridField,
    t: f64,
) -> Result<GridField> {
    let mut d2 = second_difference(field.values(), field.dx());
    let p = f.eval(t);
    let last = d2.len() - 1;
    for v in &mut d2[1..last] {
        *v = cfg.nu * *v - p;
    }
    GridField::new(field.h(), d2)
}

/// `x2`-wavenumber of mode `n`: `2 pi n / pi2`.
fn spanwise_wave(n: usize, cfg: &ChannelConfig) -> f64 {
    2.0 * PI * n as f64 / cfg.pi2
}

/// Semi-discrete right-hand side of the `n`-th spanwise mode equation,
/// `-nu (2 pi n/pi2)^2 U + nu D^2 U`.
pub fn mode_time_derivative(n: usize, cfg: &ChannelConfig, field: &GridField) -> Result<GridField> {
    let reaction = cfg.nu * spanwise_wave(n, cfg).powi(2);
    let d2 = second_difference(field.values(), field.dx());
    let last = d2.len() - 1;
    let mut out = vec![0.0; d2.len()];
    for j in 1..last {
        out[j] = cfg.nu * d2[j] - reaction * field.values()[j];
    }
    GridField::new(field.h(), out)
}

/// Advances the homogeneous spanwise-mode equation
/// `dU/dt + nu (2 pi n/pi2)^2 U - nu U'' = 0` and records
/// `(t, W(t) = int_0^h U^2 dx3)` after every step.
pub fn mode_energy_history(
    n: usize,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial: &GridField,
) -> Result<Vec<(f64, f64)>> {
    let (_, history) = advance_mode(n, cfg, s, initial)?;
    Ok(history)
}

/// State of spanwise mode `n` at `t_end`.
pub fn fd_mode_solve(
    n: usize,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial: &GridField,
) -> Result<GridField> {
    Ok(advance_mode(n, cfg, s, initial)?.0)
}

fn advance_mode(
    n: usize,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial: &GridField,
) -> Result<(GridField, Vec<(f64, f64)>)> {
    if n == 0 {
        return Err(Error::PreconditionViolation(
            "spanwise mode index must be >= 1".into(),
        ));
    }
    let cfg = cfg.validate()?;
    let s = s.validate()?;
    check_initial(&cfg, &s, initial)?;
    if initial.values().iter().all(|&v| v == 0.0) {
        return Err(Error::ZeroInitialData);
    }
    let reaction = cfg.nu * spanwise_wave(n, &cfg).powi(2);
    let (count, dt) = s.steps();
    let mut stepper = CrankNicolson::new(s.n, initial.dx(), cfg.nu, reaction, dt);
    let mut u = initial.values()[1..=s.n].to_vec();
    let energy = |u: &[f64]| u.iter().map(|v| v * v).sum::<f64>() * initial.dx();
    let mut history = Vec::with_capacity(count + 1);
    history.push((s.t0, energy(&u)));
    for i in 0..count {
        stepper.step(&mut u, 0.0);
        let t = if i + 1 == count { s.t_end } else { s.t0 + (i + 1) as f64 * dt };
        history.push((t, energy(&u)));
    }
    Ok((pack(cfg.h, &u)?, history))
}

/// Checks `W(n, t) <= e^{-2 (t - t0)(nu (2 pi n/pi2)^2 + nu/h^2)} W(n, t0)`
/// at every step, with 1% slack for discretization error.
pub fn mode_decay_check(
    n: usize,
    cfg: &ChannelConfig,
    s: &SolverSettings,
    initial: &GridField,
) -> Result<CheckEntry> {
    let history = mode_energy_history(n, cfg, s, initial)?;
    let rate = 2.0 * (cfg.nu * spanwise_wave(n, cfg).powi(2) + cfg.nu / (cfg.h * cfg.h));
    let (t0, w0) = history[0];
    let mut worst = 0.0_f64;
    let mut max_increase = 0.0_f64;
    for pair in history.windows(2) {
        let (t, w) = pair[1];
        worst = worst.max(w / (w0 * (-rate * (t - t0)).exp()));
        max_increase = max_increase.max(w - pair[0].1);
    }
    let &(t_last, w_last) = history.last().expect("non-empty history");
    let observed = (w0 / w_last).ln() / (t_last - t0);
    Ok(CheckEntry::at_most(format!("mode_decay[n={n}]"), worst, 1.01)
        .with_number("bound_rate", rate)
        .with_number("observed_rate", observed)
        .with_number("max_step_increase", max_increase)
        .with_meta("steps", history.len() - 1))
}
