//! Verification suites behind `chanflow verify`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use chanflow_core::analysis::random::{
    random_admissible_forcing, random_channel_state, random_divergence_free, random_sine_profile,
    random_trig_periodic,
};
use chanflow_core::analysis::*;
use chanflow_core::oracle::*;
use chanflow_core::spectral::*;
use chanflow_core::{
    ChannelConfig, CheckEntry, Error, ForcingSignal, GridField, Result, SineSpectrum, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Inequalities,
    Oracle,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Inequalities => "inequalities",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

type CheckFn = fn(u64) -> Result<Vec<CheckEntry>>;

const IDENTITIES: &[(&str, CheckFn)] = &[
    ("poiseuille_recovery", poiseuille_recovery),
    ("alpha_closed_form", alpha_closed_form),
    ("series_rates", series_rates),
    ("kernel_consistency", kernel_consistency),
    ("model_reduction", model_reduction),
    ("symmetry_spectral", symmetry_spectral),
    ("symmetry_negative_control", symmetry_negative_control),
    ("q_field", q_field_check),
];

const INEQUALITIES: &[(&str, CheckFn)] = &[
    ("poincare", poincare),
    ("linf", linf),
    ("energy", energy),
    ("mode_decay", mode_decay),
    ("poisson_kernel_bound", poisson_bound),
    ("pressure_growth", pressure_growth),
    ("harmonicity", harmonicity),
    ("jacobian", jacobian),
    ("average_x2", average_x2_check),
    ("nonlinear_orthogonality", orthogonality),
];

const ORACLE: &[(&str, CheckFn)] = &[
    ("oracle_nse", oracle_nse),
    ("oracle_alpha", oracle_alpha),
    ("oracle_symmetry", oracle_symmetry),
    ("oracle_max_principle", oracle_max_principle),
];

/// Seeds for the randomised checks: a fixed stream per `seed`.
fn seeds(seed: u64, count: u64) -> impl Iterator<Item = u64> {
    (0..count).map(move |i| seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i))
}

pub fn run_suite(suite: Suite, seed: u64) -> VerificationReport {
    let mut checks: Vec<(&str, CheckFn)> = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend_from_slice(IDENTITIES);
    }
    if matches!(suite, Suite::Inequalities | Suite::All) {
        checks.extend_from_slice(INEQUALITIES);
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        checks.extend_from_slice(ORACLE);
    }
    let results: Vec<Vec<CheckEntry>> = checks
        .par_iter()
        .map(|&(name, check)| match check(seed) {
            Ok(entries) => entries,
            Err(e) => vec![CheckEntry::at_most(name, f64::NAN, 0.0).with_meta("error", e)],
        })
        .collect();
    let mut report = VerificationReport::new();
    for entries in results {
        for e in entries {
            report.push(e);
        }
    }
    report.sort();
    report
}

/// Reflection-symmetry check on user-supplied profile samples.
pub fn fixture_check(values: &[f64]) -> CheckEntry {
    CheckEntry::at_most("symmetry_defect[fixture]", symmetry_defect(values), 1e-12)
        .with_meta("samples", values.len())
}

#[derive(Debug, Serialize)]
pub struct ReportDocument<'a> {
    pub schema: u32,
    pub suite: &'a str,
    pub seed: u64,
    pub passed: bool,
    pub checks: &'a [CheckEntry],
}

fn unit() -> ChannelConfig {
    ChannelConfig::default()
}

fn sup_on_grid(samples: usize, h: f64, f: impl Fn(f64) -> f64) -> f64 {
    chanflow_core::field::uniform_points(h, samples).fold(0.0, |m, x| m.max(f(x).abs()))
}

/// Flags `Ok` as a failure: the measured value is 1 when the expected error
/// was raised.
fn expect_error<T>(name: &str, result: Result<T>, want: fn(&Error) -> bool) -> CheckEntry {
    let (hit, detail) = match &result {
        Ok(_) => (0.0, "accepted".to_string()),
        Err(e) => (if want(e) { 1.0 } else { 0.0 }, e.to_string()),
    };
    CheckEntry::at_least(name, hit, 1.0).with_meta("outcome", detail)
}

fn poiseuille_recovery(_: u64) -> Result<Vec<CheckEntry>> {
    let f = ForcingSignal::constant(-1.0);
    let s = nse_profile(&f, &unit(), 0.0, 2001)?;
    let closed = poiseuille_closed(&unit(), -1.0)?;
    let d = sup_on_grid(1001, 1.0, |x| s.eval(x) - closed(x));
    Ok(vec![CheckEntry::at_most("poiseuille_recovery", d, 1e-6)
        .with_number("tail_bound", nse_tail_bound(&unit(), -1.0, 2001))])
}

fn alpha_closed_form(_: u64) -> Result<Vec<CheckEntry>> {
    let cfg = unit().with_alpha(1.0);
    let f = ForcingSignal::constant(-1.0);
    let s = alpha_profile(&f, &cfg, 0.0, 2001)?;
    let closed = alpha_closed(&cfg, -1.0)?;
    let d = sup_on_grid(1001, 1.0, |x| s.eval(x) - closed(x));
    Ok(vec![
        CheckEntry::at_most("alpha_closed_form", d, 1e-8)
            .with_number("tail_bound", alpha_tail_bound(&cfg, -1.0, 2001)),
        CheckEntry::at_most("alpha_midpoint", (s.eval(0.5) - 0.0118189).abs(), 1e-6)
            .with_number("value", s.eval(0.5)),
    ])
}

fn series_rates(_: u64) -> Result<Vec<CheckEntry>> {
    let sizes = [25.0, 50.0, 100.0, 200.0];
    let mut par = Vec::new();
    let mut cosh = Vec::new();
    for &k in &sizes {
        par.push(sup_defect(1.0, 1001, |x| identity_parabola_series(x, 1.0, k as usize))?);
        cosh.push(sup_defect(1.0, 1001, |x| identity_cosh_series(x, 1.0, 1.0, k as usize))?);
    }
    let meta = |e: CheckEntry, v: &[f64]| {
        v.iter().zip(sizes).fold(e, |e, (d, k)| e.with_number(format!("defect[K={k}]"), *d))
    };
    Ok(vec![
        meta(CheckEntry::at_most("parabola_series_rate", fit_log_slope(&sizes, &par), -1.9), &par),
        meta(CheckEntry::at_most("cosh_series_rate", fit_log_slope(&sizes, &cosh), -1.9), &cosh),
    ])
}

fn forcing_programs() -> Vec<ForcingSignal> {
    vec![
        ForcingSignal::constant(-1.0),
        ForcingSignal::new(-1.0, vec![(0.0, -1.0), (1.0, -3.0)]).expect("valid knots"),
        ForcingSignal::new(-0.5, vec![(-0.5, -0.5), (0.25, -2.0), (0.75, -0.2), (1.5, -1.0)])
            .expect("valid knots"),
    ]
}

fn kernel_consistency(_: u64) -> Result<Vec<CheckEntry>> {
    let cfg = ChannelConfig { pi1: 2.0, ..unit() };
    let mut worst = 0.0_f64;
    for p1 in forcing_programs() {
        let profile = nse_profile(&p1.scaled(1.0 / cfg.pi1), &cfg, 1.2, 501)?;
        for x in chanflow_core::field::uniform_points(1.0, 101) {
            worst = worst.max((mean_velocity_from_kernel(&p1, &cfg, 1.2, x, 501)? - profile.eval(x)).abs());
        }
    }
    Ok(vec![CheckEntry::at_most("kernel_consistency", worst, 1e-12).with_meta("programs", 3)])
}

fn model_reduction(_: u64) -> Result<Vec<CheckEntry>> {
    let mut worst = 0.0_f64;
    for f in forcing_programs() {
        for t in [-1.0, 0.5, 2.0] {
            let a = alpha_profile(&f, &unit(), t, 501)?;
            let n = nse_profile(&f, &unit(), t, 501)?;
            for (x, y) in a.coeffs().iter().zip(n.coeffs()) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    Ok(vec![CheckEntry::at_most("model_reduction", worst, 0.0)])
}

fn symmetry_spectral(_: u64) -> Result<Vec<CheckEntry>> {
    let mut worst = 0.0_f64;
    for f in forcing_programs() {
        for t in [0.0, 0.6, 2.0] {
            worst = worst.max(symmetry_defect(&nse_profile(&f, &unit(), t, 2001)?));
            worst = worst.max(symmetry_defect(&alpha_profile(&f, &unit().with_alpha(1.0), t, 2001)?));
        }
    }
    Ok(vec![CheckEntry::at_most("symmetry_defect[spectral]", worst, 1e-12)])
}

fn symmetry_negative_control(_: u64) -> Result<Vec<CheckEntry>> {
    let v: Vec<f64> = (0..=1000).map(|j| (2.0 * PI * j as f64 / 1000.0).sin()).collect();
    Ok(vec![CheckEntry::at_least("symmetry_defect[negative_control]", symmetry_defect(&v), 1.99)])
}

fn q_field_check(_: u64) -> Result<Vec<CheckEntry>> {
    let p = nse_profile(&ForcingSignal::constant(-1.0), &unit(), 0.0, 2001)?;
    let q = q_field(&p, -1.0, &unit().with_alpha(1.0), 0.0, 0.5);
    Ok(vec![CheckEntry::at_most("q_field_midpoint", (q + 0.0078125).abs(), 1e-8).with_number("value", q)])
}

fn poincare(seed: u64) -> Result<Vec<CheckEntry>> {
    let phi = GridField::from_fn(1.0, 1999, |x| (PI * x).sin())?;
    let out = poincare_check(&phi)?;
    let analytic = (out.lhs - PI * PI / 2.0).abs().max((out.rhs - 0.5).abs());
    let mut failures = 0;
    let mut min_ratio = f64::INFINITY;
    for s in seeds(seed, 1000) {
        let r = poincare_check(&random_sine_profile(s, 1.0, 255)?)?;
        if !r.pass {
            failures += 1;
        }
        if r.rhs > 0.0 {
            min_ratio = min_ratio.min((r.lhs + r.slack) / r.rhs);
        }
    }
    let slip = GridField::new(1.0, vec![0.0, 1.0, 2.0, 1.0, 0.5])?;
    Ok(vec![
        CheckEntry::at_most("poincare[analytic]", analytic, 1e-10).with_number("lhs", out.lhs),
        CheckEntry::at_most("poincare[random]", failures as f64, 0.0)
            .with_meta("seeds", 1000)
            .with_number("min_lhs_over_rhs", min_ratio),
        expect_error("poincare[negative_control]", poincare_check(&slip), |e| {
            *e == Error::BoundaryViolation
        }),
    ])
}

fn linf(seed: u64) -> Result<Vec<CheckEntry>> {
    let s = linf_check(&PeriodicSample::from_fn(1.0, 64, |y| (2.0 * PI * y).sin())?);
    let analytic = (s.lhs - 1.0).abs().max((s.rhs - PI / 6f64.sqrt()).abs());
    let mut failures = 0;
    let mut flipped = 0;
    let mut raw_failures = 0;
    for sd in seeds(seed, 1000) {
        let r = linf_check(&random_trig_periodic(sd, 1.0, 64)?);
        failures += usize::from(!r.pass);
        flipped += usize::from(r.flipped);
        raw_failures += usize::from(r.lhs > r.rhs_raw + r.slack + 1e-10 * r.rhs_raw.abs());
    }
    Ok(vec![
        CheckEntry::at_most("linf[analytic]", analytic, 1e-10).with_number("rhs", s.rhs),
        CheckEntry::at_most("linf[random]", failures as f64, 0.0)
            .with_meta("seeds", 1000)
            .with_meta("sign_flipped", flipped)
            .with_meta("raw_form_failures", raw_failures),
        expect_error("linf[negative_control]", PeriodicSample::new(1.0, vec![0.0; 7]), |e| {
            matches!(e, Error::InvalidGrid(_))
        }),
    ])
}

fn energy(seed: u64) -> Result<Vec<CheckEntry>> {
    let cfg = unit();
    let dims = (8, 8, 2001);
    let u = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, x| [0.5 * x * (1.0 - x), 0.0, 0.0])?;
    let du = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, _| [0.0; 3])?;
    let p = PressureField::new(ForcingSignal::constant(0.0), ForcingSignal::constant(-1.0), 1.0)?;
    let mut poiseuille = energy_balance(&u, &du, &cfg, &p, 0.0, 1.0)?;
    poiseuille.name = "energy[poiseuille]".into();
    let mut failures = 0;
    let mut worst = f64::NEG_INFINITY;
    for s in seeds(seed, 100) {
        let st = random_channel_state(s, &cfg, 1.0, (8, 8, 65))?;
        let e = energy_balance(&st.u, &st.du_dt, &cfg, &st.pressure, st.t, 1.0)?;
        failures += usize::from(!e.pass);
        worst = worst.max(e.measured);
    }
    let lifted = Field3::from_fn((1.0, 1.0, 1.0), (8, 8, 17), |_, _, x| [x * (1.0 - x), 0.0, 0.1])?;
    Ok(vec![
        poiseuille,
        CheckEntry::at_most("energy[random]", failures as f64, 0.0)
            .with_meta("seeds", 100)
            .with_number("max_lhs_minus_rhs", worst),
        expect_error(
            "energy[negative_control]",
            energy_balance(&lifted, &lifted, &cfg, &p, 0.0, 1.0),
            |e| *e == Error::NonzeroNormalVelocity,
        ),
    ])
}

fn mode_decay(seed: u64) -> Result<Vec<CheckEntry>> {
    let cfg = ChannelConfig { pi2: 2.0 * PI, ..unit() };
    let s = SolverSettings::new(200, 1e-3, 0.0, 1.0)?;
    let mut out = Vec::new();
    for n in [1, 2, 4] {
        let init = random_sine_profile(seed.wrapping_add(n as u64), 1.0, 200)?;
        out.push(mode_decay_check(n, &cfg, &s, &init)?);
    }
    out.push(expect_error(
        "mode_decay[negative_control]",
        mode_decay_check(1, &cfg, &s, &GridField::zeros(1.0, 200)?),
        |e| *e == Error::ZeroInitialData,
    ));
    Ok(out)
}

fn poisson_bound(_: u64) -> Result<Vec<CheckEntry>> {
    let tight = ScanRegion { x1: (0.5, 0.5), x2: (0.0, 0.0), max_radius: None };
    Ok(vec![
        poisson_kernel_bound_scan(6.0, &ScanRegion::disc(1.0), (101, 101, 360))?
            .with_meta("region", "|z| <= 1 within [-1,1]^2"),
        expect_error(
            "poisson_kernel_bound[negative_control]",
            poisson_kernel_bound_scan(1.0, &tight, (1, 1, 36)),
            |e| matches!(e, Error::PreconditionViolation(_)),
        ),
    ])
}

fn pressure_growth(seed: u64) -> Result<Vec<CheckEntry>> {
    let ys: Vec<f64> = (-100..=100).map(f64::from).collect();
    let mut worst = f64::NEG_INFINITY;
    for s in seeds(seed, 1000) {
        let p1 = random_admissible_forcing(s, 2.0, 0.0, 1.0)?;
        let p0 = random_admissible_forcing(s ^ 0x5555, 5.0, 0.0, 1.0)?.scaled(-1.0);
        let p = PressureField::new(p0, p1, 1.5)?;
        worst = worst.max(pressure_growth_check(&p, &ys, &[0.0, 0.4, 1.0], 2.0)?.measured);
    }
    let steep = PressureField::new(ForcingSignal::constant(0.0), ForcingSignal::constant(-3.0), 1.0)?;
    Ok(vec![
        CheckEntry::at_most("pressure_growth", worst, 0.0).with_meta("seeds", 1000),
        expect_error(
            "pressure_growth[negative_control]",
            pressure_growth_check(&steep, &[1.0], &[0.0], 1.0),
            |e| matches!(e, Error::PreconditionViolation(_)),
        ),
    ])
}

fn harmonicity(_: u64) -> Result<Vec<CheckEntry>> {
    let mut worst = 0.0_f64;
    for (p0, p1) in [(0.0, -1.0), (5.0, -1.0), (-3.0, 2.5), (10.0, -10.0)] {
        let p = PressureField::new(ForcingSignal::constant(p0), ForcingSignal::constant(p1), 1.0)?;
        let s = PlaneSamples::from_fn((-1.0, -1.0), (0.1, 0.1), (21, 21), |x1, x2| p.eval(x1, x2, 0.0));
        worst = worst.max(harmonicity_residual(&s)?);
    }
    let q = PlaneSamples::from_fn((-1.0, -1.0), (0.1, 0.1), (21, 21), |x1, _| x1 * x1);
    Ok(vec![
        CheckEntry::at_most("harmonicity[pressure]", worst, 1e-11),
        CheckEntry::at_least("harmonicity[negative_control]", harmonicity_residual(&q)?, 1.0),
    ])
}

fn jacobian(_: u64) -> Result<Vec<CheckEntry>> {
    let tau = 2.0 * PI;
    let f = |x: f64| (x - 0.3).sin() + 0.2 * (2.0 * x).cos();
    let u1 = PlaneSamples::periodic((tau, tau), (64, 64), |x, _| f(x));
    let u2 = PlaneSamples::periodic((tau, tau), (64, 64), |x, _| f(x).powi(2) - f(x));
    let a = PlaneSamples::periodic((tau, tau), (64, 64), |x, _| x.sin());
    let b = PlaneSamples::periodic((tau, tau), (64, 64), |_, y| y.sin());
    Ok(vec![
        CheckEntry::at_most("jacobian[functional]", jacobian_defect(&u1, &u2)?, 1e-8),
        CheckEntry::at_least("jacobian[negative_control]", jacobian_defect(&a, &b)?, 0.5),
    ])
}

fn average_x2_check(_: u64) -> Result<Vec<CheckEntry>> {
    let period = 2.0;
    let m = 256;
    let x2: Vec<f64> = (0..=m).map(|j| j as f64 * period / m as f64).collect();
    let x3: Vec<f64> = (0..=20).map(|l| l as f64 / 20.0).collect();
    let mut worst = 0.0_f64;
    for n in 1..=4 {
        let profiles: Vec<Vec<f64>> = x2
            .iter()
            .map(|&y| x3.iter().map(|&x| x * (1.0 - x) * (2.0 * PI * n as f64 * y / period + 0.3).sin()).collect())
            .collect();
        worst = worst.max(average_x2(&x2, &profiles, period)?.iter().fold(0.0, |a: f64, v| a.max(v.abs())));
    }
    Ok(vec![
        CheckEntry::at_most("average_x2[nonzero_modes]", worst, 1e-12),
        expect_error(
            "average_x2[negative_control]",
            average_x2(&[0.0, 0.1, 0.3], &[vec![0.0], vec![0.0], vec![0.0]], 0.4),
            |e| *e == Error::NonUniformGrid,
        ),
    ])
}

fn orthogonality(seed: u64) -> Result<Vec<CheckEntry>> {
    let dims = (64, 64, 65);
    let u = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, x2, _| [(2.0 * PI * x2).sin(), 0.0, 0.0])?;
    let v = Field3::from_fn((1.0, 1.0, 1.0), dims, |x1, _, _| [0.0, (2.0 * PI * x1).sin(), 0.0])?;
    let mut worst = 0.0_f64;
    for s in seeds(seed, 20) {
        let a = random_divergence_free(s, (1.0, 2.0, 1.0), (16, 16, 129))?;
        let b = random_divergence_free(s ^ 0xABCD, (1.0, 2.0, 1.0), (16, 16, 129))?;
        worst = worst.max(nonlinear_orthogonality(&a, &b)?);
    }
    let bad = Field3::from_fn((1.0, 1.0, 1.0), (16, 16, 17), |x1, _, _| [(2.0 * PI * x1).sin(), 0.0, 0.0])?;
    Ok(vec![
        CheckEntry::at_most("nonlinear_orthogonality[trig]", nonlinear_orthogonality(&u, &v)?, 1e-10),
        CheckEntry::at_most("nonlinear_orthogonality[random]", worst, 1e-3).with_meta("seeds", 20),
        expect_error("nonlinear_orthogonality[negative_control]", nonlinear_orthogonality(&bad, &bad), |e| {
            matches!(e, Error::DivergenceViolation(_))
        }),
    ])
}

fn piecewise() -> ForcingSignal {
    ForcingSignal::new(-1.0, vec![(0.0, -1.0), (0.5, -2.0), (1.0, -0.5), (1.5, -1.5), (2.0, -1.0)])
        .expect("valid knots")
}

const REFERENCE_MODES: usize = 20001;

/// Relative L2 errors of the oracle against the spectral solution at `t = 2`
/// on the base grid and on the refined grid.
fn oracle_errors(cfg: &ChannelConfig, f: &ForcingSignal, from_history: bool) -> Result<(f64, f64, f64)> {
    let alpha = cfg.is_alpha_model();
    let profile = |g: &ForcingSignal, t: f64| {
        if alpha {
            alpha_profile(g, cfg, t, REFERENCE_MODES)
        } else {
            nse_profile(g, cfg, t, REFERENCE_MODES)
        }
    };
    let zero = SineSpectrum::zeros(cfg.h, 1)?;
    let reference = if from_history {
        profile(f, 2.0)?
    } else if alpha {
        alpha_profile_from(&zero, 0.0, f, cfg, 2.0, REFERENCE_MODES)?
    } else {
        nse_profile_from(&zero, 0.0, f, cfg, 2.0, REFERENCE_MODES)?
    };
    let start = if from_history { Some(profile(f, 0.0)?) } else { None };
    let base = SolverSettings::new(200, 1e-3, 0.0, 2.0)?;
    let mut errs = Vec::new();
    let mut sym = 0.0_f64;
    for s in [base, base.refined()] {
        let init = match &start {
            Some(p) => p.to_grid(s.n)?,
            None => GridField::zeros(cfg.h, s.n)?,
        };
        let out = if alpha { fd_alpha_solve(f, cfg, &s, &init)? } else { fd_nse_solve(f, cfg, &s, &init)? };
        sym = sym.max(symmetry_defect(&out));
        errs.push(out.relative_l2_distance(&reference.to_grid(s.n)?)?);
    }
    Ok((errs[0], errs[1], sym))
}

fn oracle_entries(label: &str, cfg: ChannelConfig) -> Result<Vec<CheckEntry>> {
    let (c0, c1, cs) = oracle_errors(&cfg, &ForcingSignal::constant(-1.0), false)?;
    let slow = cfg.with_nu(0.1);
    let (s0, s1, _) = oracle_errors(&slow, &ForcingSignal::constant(-1.0), false)?;
    let (p0, p1, ps) = oracle_errors(&cfg, &piecewise(), true)?;
    Ok(vec![
        CheckEntry::at_most(format!("oracle_{label}[constant]"), c0, 1e-3).with_number("refined", c1),
        CheckEntry::at_most(format!("oracle_{label}[piecewise]"), p0, 1e-3).with_number("refined", p1),
        CheckEntry::at_least(format!("oracle_{label}[order]"), (s0 / s1).min(p0 / p1), 3.0)
            .with_number("ratio_constant_nu0.1", s0 / s1)
            .with_number("ratio_piecewise", p0 / p1),
        CheckEntry::at_most(format!("symmetry_defect[oracle_{label}_runs]"), cs.max(ps), 1e-6),
    ])
}

fn oracle_nse(_: u64) -> Result<Vec<CheckEntry>> {
    oracle_entries("nse", unit())
}

fn oracle_alpha(_: u64) -> Result<Vec<CheckEntry>> {
    oracle_entries("alpha", unit().with_alpha(1.0))
}

fn oracle_symmetry(_: u64) -> Result<Vec<CheckEntry>> {
    let s = SolverSettings::new(200, 1e-3, 0.0, 1.0)?;
    let init = GridField::from_fn(1.0, 200, |x| (PI * x).sin() + 0.3 * (3.0 * PI * x).sin())?;
    let a = fd_nse_solve(&piecewise(), &unit(), &s, &init)?;
    let b = fd_alpha_solve(&piecewise(), &unit().with_alpha(0.5), &s, &init)?;
    Ok(vec![CheckEntry::at_most(
        "symmetry_defect[oracle_end_state]",
        symmetry_defect(&a).max(symmetry_defect(&b)),
        1e-6,
    )])
}

fn oracle_max_principle(seed: u64) -> Result<Vec<CheckEntry>> {
    let mut lowest = f64::INFINITY;
    for s in seeds(seed, 10) {
        let f = random_admissible_forcing(s, 3.0, 0.0, 1.0)?;
        let settings = SolverSettings::new(200, 1e-3, 0.0, 1.0)?;
        let traj = fd_nse_trajectory(&f, &unit(), &settings, &GridField::zeros(1.0, 200)?, 1)?;
        for (_, g) in &traj {
            lowest = g.values().iter().fold(lowest, |m, &v| m.min(v));
        }
    }
    Ok(vec![CheckEntry::at_least("oracle_max_principle", lowest, 0.0).with_meta("seeds", 10)])
}
