//! Acceptance battery: one PASS/FAIL line per criterion.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use chanflow_core::analysis::random::{random_channel_state, random_sine_profile, random_trig_periodic};
use chanflow_core::analysis::*;
use chanflow_core::field::uniform_points;
use chanflow_core::oracle::*;
use chanflow_core::spectral::*;
use chanflow_core::{ChannelConfig, ForcingSignal, GridField, Result, SineSpectrum};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn unit() -> ChannelConfig {
    ChannelConfig::default()
}

fn sup(samples: usize, f: impl Fn(f64) -> f64) -> f64 {
    uniform_points(1.0, samples).fold(0.0, |m, x| m.max(f(x).abs()))
}

fn within(elapsed: Duration, limit: f64) -> bool {
    elapsed.as_secs_f64() < limit
}

fn programs() -> Vec<ForcingSignal> {
    vec![
        ForcingSignal::constant(-1.0),
        ForcingSignal::new(-1.0, vec![(0.0, -1.0), (1.0, -3.0)]).unwrap(),
        ForcingSignal::new(-0.5, vec![(-0.5, -0.5), (0.25, -2.0), (0.75, -0.2), (1.5, -1.0)]).unwrap(),
    ]
}

fn piecewise() -> ForcingSignal {
    ForcingSignal::new(-1.0, vec![(0.0, -1.0), (0.5, -2.0), (1.0, -0.5), (1.5, -1.5), (2.0, -1.0)]).unwrap()
}

/// Spectral profiles produced along the way, for the symmetry criterion.
#[derive(Default)]
struct Produced {
    profiles: Vec<SineSpectrum>,
}

fn c1(p: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let s = nse_profile(&ForcingSignal::constant(-1.0), &unit(), 0.0, 2001)?;
    let d = sup(1001, |x| s.eval(x) - 0.5 * x * (1.0 - x));
    let el = start.elapsed();
    p.profiles.push(s);
    Ok(outcome(d <= 1e-6 && within(el, 1.0), format!("defect {d:.3e} <= 1e-6, {el:.2?} < 1s")))
}

fn c2(p: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let cfg = unit().with_alpha(1.0);
    let s = alpha_profile(&ForcingSignal::constant(-1.0), &cfg, 0.0, 2001)?;
    let closed = alpha_closed(&cfg, -1.0)?;
    let d = sup(1001, |x| s.eval(x) - closed(x));
    let mid = s.eval(0.5);
    let el = start.elapsed();
    p.profiles.push(s);
    let pass = d <= 1e-8 && (mid - 0.0118189).abs() <= 1e-6 && within(el, 1.0);
    Ok(outcome(pass, format!("defect {d:.3e} <= 1e-8, U(1/2) = {mid:.7} vs 0.0118189 +- 1e-6, {el:.2?} < 1s")))
}

fn c3(_: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let sizes = [25.0, 50.0, 100.0, 200.0];
    let mut par = Vec::new();
    let mut cosh = Vec::new();
    for &k in &sizes {
        par.push(sup_defect(1.0, 1001, |x| identity_parabola_series(x, 1.0, k as usize))?);
        cosh.push(sup_defect(1.0, 1001, |x| identity_cosh_series(x, 1.0, 1.0, k as usize))?);
    }
    let (a, b) = (fit_log_slope(&sizes, &par), fit_log_slope(&sizes, &cosh));
    let el = start.elapsed();
    let pass = a <= -1.9 && b <= -1.9 && within(el, 1.0);
    Ok(outcome(pass, format!("slopes parabola {a:.3}, cosh {b:.3} <= -1.9, {el:.2?} < 1s")))
}

fn c4(p: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let cfg = ChannelConfig { pi1: 2.0, ..unit() };
    let mut worst = 0.0_f64;
    for p1 in programs() {
        let profile = nse_profile(&p1.scaled(1.0 / cfg.pi1), &cfg, 1.2, 501)?;
        for x in uniform_points(1.0, 101) {
            worst = worst.max((mean_velocity_from_kernel(&p1, &cfg, 1.2, x, 501)? - profile.eval(x)).abs());
        }
        p.profiles.push(profile);
    }
    let el = start.elapsed();
    Ok(outcome(worst <= 1e-12 && within(el, 1.0), format!("3 programs, max diff {worst:.3e} <= 1e-12, {el:.2?} < 1s")))
}

const REFERENCE_MODES: usize = 20001;

/// Oracle errors at t = 2 on the base and the refined grid.
fn oracle_errors(cfg: &ChannelConfig, f: &ForcingSignal, from_history: bool, p: &mut Produced) -> Result<(f64, f64)> {
    let alpha = cfg.is_alpha_model();
    let zero = SineSpectrum::zeros(cfg.h, 1)?;
    let (reference, start) = match (alpha, from_history) {
        (false, false) => (nse_profile_from(&zero, 0.0, f, cfg, 2.0, REFERENCE_MODES)?, None),
        (true, false) => (alpha_profile_from(&zero, 0.0, f, cfg, 2.0, REFERENCE_MODES)?, None),
        (false, true) => (nse_profile(f, cfg, 2.0, REFERENCE_MODES)?, Some(nse_profile(f, cfg, 0.0, REFERENCE_MODES)?)),
        (true, true) => (alpha_profile(f, cfg, 2.0, REFERENCE_MODES)?, Some(alpha_profile(f, cfg, 0.0, REFERENCE_MODES)?)),
    };
    let base = SolverSettings::new(200, 1e-3, 0.0, 2.0)?;
    let mut errs = [0.0; 2];
    for (i, s) in [base, base.refined()].into_iter().enumerate() {
        let init = match &start {
            Some(sp) => sp.to_grid(s.n)?,
            None => GridField::zeros(cfg.h, s.n)?,
        };
        let out = if alpha { fd_alpha_solve(f, cfg, &s, &init)? } else { fd_nse_solve(f, cfg, &s, &init)? };
        errs[i] = out.relative_l2_distance(&reference.to_grid(s.n)?)?;
    }
    p.profiles.push(reference);
    p.profiles.extend(start);
    Ok((errs[0], errs[1]))
}

fn c5(p: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (label, cfg) in [("nse", unit()), ("alpha", unit().with_alpha(1.0))] {
        let (c0, _) = oracle_errors(&cfg, &ForcingSignal::constant(-1.0), false, p)?;
        let (p0, p1) = oracle_errors(&cfg, &piecewise(), true, p)?;
        // at nu = 1 the constant-forcing transient has decayed to round-off
        // by t = 2, so its order is measured at nu = 0.1
        let (s0, s1) = oracle_errors(&cfg.with_nu(0.1), &ForcingSignal::constant(-1.0), false, p)?;
        let order = (s0 / s1).min(p0 / p1);
        pass &= c0 <= 1e-3 && p0 <= 1e-3 && order >= 3.0;
        parts.push(format!("{label}: const {c0:.2e}, piecewise {p0:.2e}, order ratio {order:.2}"));
    }
    let el = start.elapsed();
    pass &= within(el, 30.0);
    Ok(outcome(pass, format!("{} (<= 1e-3, ratio >= 3), {el:.2?} < 30s", parts.join("; "))))
}

fn c6(p: &mut Produced) -> Result<Outcome> {
    let spectral = p.profiles.iter().fold(0.0_f64, |m, s| m.max(symmetry_defect(s)));
    let s = SolverSettings::new(200, 1e-3, 0.0, 2.0)?;
    let init = GridField::from_fn(1.0, 200, |x| (PI * x).sin() + 0.3 * (3.0 * PI * x).sin())?;
    let a = fd_nse_solve(&piecewise(), &unit(), &s, &init)?;
    let b = fd_alpha_solve(&piecewise(), &unit().with_alpha(1.0), &s, &init)?;
    let oracle = symmetry_defect(&a).max(symmetry_defect(&b));
    Ok(outcome(
        spectral <= 1e-12 && oracle <= 1e-6,
        format!("{} spectral profiles max {spectral:.3e} <= 1e-12, oracle end state {oracle:.3e} <= 1e-6", p.profiles.len()),
    ))
}

fn c7(_: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let cfg = ChannelConfig { pi2: 2.0 * PI, ..unit() };
    let s = SolverSettings::new(200, 1e-3, 0.0, 1.0)?;
    let mut worst = 0.0_f64;
    for n in [1usize, 2, 4] {
        let init = random_sine_profile(n as u64, 1.0, 200)?;
        let rate = 2.0 * ((2.0 * PI * n as f64 / cfg.pi2).powi(2) + 1.0);
        let history = mode_energy_history(n, &cfg, &s, &init)?;
        let (t0, w0) = history[0];
        for &(t, w) in &history[1..] {
            worst = worst.max(w / ((-rate * (t - t0)).exp() * w0));
        }
    }
    let el = start.elapsed();
    Ok(outcome(worst <= 1.01 && within(el, 10.0), format!("max W/bound {worst:.4} <= 1.01, {el:.2?} < 10s")))
}

fn c8(_: &mut Produced) -> Result<Outcome> {
    let cfg = unit();
    let dims = (8, 8, 2001);
    let u = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, x| [0.5 * x * (1.0 - x), 0.0, 0.0])?;
    let du = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, _| [0.0; 3])?;
    let p = PressureField::new(ForcingSignal::constant(0.0), ForcingSignal::constant(-1.0), 1.0)?;
    let e = energy_balance(&u, &du, &cfg, &p, 0.0, 1.0)?;
    let lhs: f64 = e.metadata["lhs"].parse().unwrap();
    let rhs: f64 = e.metadata["rhs"].parse().unwrap();
    let mut failures = 0;
    for seed in 0..100 {
        let st = random_channel_state(seed, &cfg, 1.0, (8, 8, 65))?;
        failures += usize::from(!energy_balance(&st.u, &st.du_dt, &cfg, &st.pressure, st.t, 1.0)?.pass);
    }
    let pass = e.pass && (lhs - 1.0 / 6.0).abs() < 1e-3 && (rhs - 2.175).abs() < 1e-2 && failures == 0;
    Ok(outcome(pass, format!("Poiseuille lhs {lhs:.4} vs rhs {rhs:.4}, random failures {failures}/100")))
}

fn c9(_: &mut Produced) -> Result<Outcome> {
    let phi = GridField::from_fn(1.0, 1999, |x| (PI * x).sin())?;
    let pc = poincare_check(&phi)?;
    let lc = linf_check(&PeriodicSample::from_fn(1.0, 64, |y| (2.0 * PI * y).sin())?);
    let pa = (pc.lhs - PI * PI / 2.0).abs().max((pc.rhs - 0.5).abs());
    let la = (lc.lhs - 1.0).abs().max((lc.rhs - PI / 6f64.sqrt()).abs());
    let mut fp = 0;
    let mut fl = 0;
    for seed in 0..1000 {
        fp += usize::from(!poincare_check(&random_sine_profile(seed, 1.0, 255)?)?.pass);
        fl += usize::from(!linf_check(&random_trig_periodic(seed, 1.0, 64)?).pass);
    }
    let pass = pa <= 1e-10 && la <= 1e-10 && fp == 0 && fl == 0;
    Ok(outcome(
        pass,
        format!("analytic defects {pa:.2e}, {la:.2e} <= 1e-10; failures poincare {fp}/1000, linf {fl}/1000"),
    ))
}

fn c10(_: &mut Produced) -> Result<Outcome> {
    let start = Instant::now();
    let e = poisson_kernel_bound_scan(6.0, &ScanRegion::disc(1.0), (101, 101, 360))?;
    let el = start.elapsed();
    Ok(outcome(e.pass && within(el, 10.0), format!("max |dH/dx1| {:.4} <= 32, {el:.2?} < 10s", e.measured)))
}

fn c11(_: &mut Produced) -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for (p0, p1) in [(0.0, -1.0), (5.0, -1.0), (-3.0, 2.5), (10.0, -10.0)] {
        let p = PressureField::new(ForcingSignal::constant(p0), ForcingSignal::constant(p1), 1.0)?;
        let s = PlaneSamples::from_fn((-1.0, -1.0), (0.1, 0.1), (21, 21), |x1, x2| p.eval(x1, x2, 0.0));
        worst = worst.max(harmonicity_residual(&s)?);
    }
    let q = PlaneSamples::from_fn((-1.0, -1.0), (0.1, 0.1), (21, 21), |x1, _| x1 * x1);
    let q_res = harmonicity_residual(&q)?;
    let tau = 2.0 * PI;
    let a = PlaneSamples::periodic((tau, tau), (64, 64), |x, _| x.sin());
    let b = PlaneSamples::periodic((tau, tau), (64, 64), |_, y| y.sin());
    let jac = jacobian_defect(&a, &b)?;
    let pass = worst <= 1e-11 && q_res >= 1.0 && jac >= 0.5;
    Ok(outcome(pass, format!("residual {worst:.2e} <= 1e-11; controls flagged: x1^2 {q_res:.2}, sine pair {jac:.2}")))
}

fn c12(_: &mut Produced) -> Result<Outcome> {
    let dir = std::env::temp_dir().join(format!("chanflow-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_chanflow"))
        .args(["verify", "--suite", "all", "--out"])
        .arg(&report)
        .output()
        .unwrap()
        .status;
    let text = std::fs::read_to_string(&report).unwrap_or_default();
    let schema = text.starts_with("{\"schema\":1,");
    let checks = text.matches("\"name\":").count();
    let mut fixture = String::from("x3,U\n");
    for j in 0..=100 {
        let x = j as f64 / 100.0;
        fixture.push_str(&format!("{x},{}\n", x * (1.0 - x) + 0.01 * x));
    }
    let path = dir.join("fixture.csv");
    std::fs::write(&path, fixture).unwrap();
    let bad = Command::new(env!("CARGO_BIN_EXE_chanflow"))
        .args(["verify", "--suite", "identities", "--fixture"])
        .arg(&path)
        .output()
        .unwrap()
        .status;
    std::fs::remove_dir_all(&dir).ok();
    let pass = status.code() == Some(0) && schema && checks >= 12 && bad.code() == Some(1);
    Ok(outcome(
        pass,
        format!("verify all exit {:?}, schema 1: {schema}, {checks} checks; injected fixture exit {:?}", status.code(), bad.code()),
    ))
}

type Criterion = fn(&mut Produced) -> Result<Outcome>;

fn main() {
    let criteria: [(&str, Criterion); 12] = [
        ("poiseuille recovery", c1),
        ("alpha closed form", c2),
        ("series identities", c3),
        ("kernel consistency", c4),
        ("oracle equivalence", c5),
        ("symmetry", c6),
        ("mode decay", c7),
        ("energy inequality", c8),
        ("poincare and linf", c9),
        ("poisson kernel bound", c10),
        ("harmonicity and jacobian", c11),
        ("cli verify", c12),
    ];
    let mut produced = Produced::default();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run(&mut produced).unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        failed += usize::from(!o.pass);
        println!("criterion {:>2} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
