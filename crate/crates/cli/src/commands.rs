//! `profile` and `evolve`.

use serde::Serialize;

use chanflow_core::field::uniform_points;
use chanflow_core::oracle::{fd_alpha_solve, fd_nse_solve, SolverSettings};
use chanflow_core::spectral::{
    alpha_closed, alpha_profile, alpha_tail_bound, nse_profile, nse_tail_bound, poiseuille_closed,
};
use chanflow_core::{GridField, Result, SineSpectrum};

use crate::config::{Model, OutputFormat, RunConfig};
use crate::output::{to_csv, to_json};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub schema: u32,
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub summary: Vec<(&'static str, f64)>,
}

impl Table {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => to_csv(&self.columns, &self.rows),
            OutputFormat::Json => to_json(self),
        }
    }

    pub fn summary(&self, key: &str) -> Option<f64> {
        self.summary.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }
}

fn spectrum(cfg: &RunConfig, t: f64) -> Result<SineSpectrum> {
    match cfg.model {
        Model::Nse => nse_profile(&cfg.forcing, &cfg.channel.with_alpha(0.0), t, cfg.truncation),
        Model::Alpha => alpha_profile(&cfg.forcing, &cfg.channel, t, cfg.truncation),
    }
}

/// Series profile at `eval.time`, with the closed form alongside it when the
/// forcing is constant.
pub fn profile(cfg: &RunConfig) -> Result<Table> {
    let s = spectrum(cfg, cfg.time)?;
    let h = cfg.channel.h;
    let xs: Vec<f64> = uniform_points(h, cfg.samples).collect();
    if !cfg.forcing.is_constant() {
        let rows = xs.iter().map(|&x| vec![x, s.eval(x)]).collect();
        return Ok(Table {
            schema: 1,
            command: "profile",
            columns: vec!["x3", "U_series"],
            rows,
            summary: vec![("t", cfg.time)],
        });
    }
    let c = cfg.forcing.tail();
    let (closed, bound): (Box<dyn Fn(f64) -> f64>, f64) = match cfg.model {
        Model::Nse => (
            Box::new(poiseuille_closed(&cfg.channel, c)?),
            nse_tail_bound(&cfg.channel, c, cfg.truncation),
        ),
        Model::Alpha => (
            Box::new(alpha_closed(&cfg.channel, c)?),
            alpha_tail_bound(&cfg.channel, c, cfg.truncation),
        ),
    };
    let mut max_defect = 0.0_f64;
    let rows = xs
        .iter()
        .map(|&x| {
            let (u, v) = (s.eval(x), closed(x));
            let d = (u - v).abs();
            max_defect = max_defect.max(d);
            vec![x, u, v, d]
        })
        .collect();
    Ok(Table {
        schema: 1,
        command: "profile",
        columns: vec!["x3", "U_series", "U_closed", "defect"],
        rows,
        summary: vec![("t", cfg.time), ("max_defect", max_defect), ("tail_bound", bound)],
    })
}

fn advance(cfg: &RunConfig, state: &GridField, dt: f64, t0: f64, t1: f64) -> Result<GridField> {
    if t1 <= t0 {
        return Ok(state.clone());
    }
    let s = SolverSettings::new(state.n(), dt.min(t1 - t0), t0, t1)?;
    match cfg.model {
        Model::Nse => fd_nse_solve(&cfg.forcing, &cfg.channel, &s, state),
        Model::Alpha => fd_alpha_solve(&cfg.forcing, &cfg.channel, &s, state),
    }
}

/// Spectral solution at every `eval.times` entry (ascending, duplicates
/// dropped). With oracle settings the rows sit on the oracle grid and carry
/// the finite-difference solution, started from the spectral state at
/// `oracle.t0` (default: the earlier of the first knot and the first time).
pub fn evolve(cfg: &RunConfig) -> Result<Table> {
    let mut times = cfg.times.clone();
    if times.is_empty() {
        return Err(chanflow_core::Error::PreconditionViolation(
            "eval.times must list at least one time".into(),
        ));
    }
    times.sort_by(f64::total_cmp);
    times.dedup();
    let h = cfg.channel.h;
    let Some(o) = cfg.oracle else {
        let xs: Vec<f64> = uniform_points(h, cfg.samples).collect();
        let mut rows = Vec::new();
        for &t in &times {
            let s = spectrum(cfg, t)?;
            rows.extend(xs.iter().map(|&x| vec![t, x, s.eval(x)]));
        }
        return Ok(Table {
            schema: 1,
            command: "evolve",
            columns: vec!["t", "x3", "U_spectral"],
            rows,
            summary: Vec::new(),
        });
    };
    let first_knot = cfg.forcing.knots().first().map_or(f64::INFINITY, |k| k.0);
    let start = o.t0.unwrap_or(first_knot.min(times[0]));
    if start > times[0] {
        return Err(chanflow_core::Error::PreconditionViolation(format!(
            "oracle.t0 = {start} is after the first evaluation time {}",
            times[0]
        )));
    }
    let mut state = spectrum(cfg, start)?.to_grid(o.n)?;
    let mut now = start;
    let mut rows = Vec::new();
    let mut max_defect = 0.0_f64;
    for &t in &times {
        state = advance(cfg, &state, o.dt, now, t)?;
        now = t;
        let s = spectrum(cfg, t)?;
        for (j, &u) in state.values().iter().enumerate() {
            let x = state.x(j);
            let v = s.eval(x);
            let d = (v - u).abs();
            max_defect = max_defect.max(d);
            rows.push(vec![t, x, v, u, d]);
        }
    }
    Ok(Table {
        schema: 1,
        command: "evolve",
        columns: vec!["t", "x3", "U_spectral", "U_oracle", "defect"],
        rows,
        summary: vec![("oracle_t0", start), ("max_defect", max_defect)],
    })
}
