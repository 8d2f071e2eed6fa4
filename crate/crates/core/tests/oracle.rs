use std::f64::consts::PI;

use chanflow_core::analysis::{random, symmetry_defect};
use chanflow_core::oracle::*;
use chanflow_core::spectral::*;
use chanflow_core::{ChannelConfig, Error, ForcingSignal, GridField, SineSpectrum};

fn unit() -> ChannelConfig {
    ChannelConfig::default()
}

fn piecewise() -> ForcingSignal {
    ForcingSignal::new(-1.0, vec![(0.0, -1.0), (0.5, -2.0), (1.0, -0.5), (1.5, -1.5), (2.0, -1.0)]).unwrap()
}

#[test]
fn constant_forcing_reaches_poiseuille() {
    let s = SolverSettings::new(200, 1e-3, 0.0, 2.0).unwrap();
    let out = fd_nse_solve(&ForcingSignal::constant(-1.0), &unit(), &s, &GridField::zeros(1.0, 200).unwrap()).unwrap();
    let closed = GridField::from_fn(1.0, 200, poiseuille_closed(&unit(), -1.0).unwrap()).unwrap();
    assert!(out.relative_l2_distance(&closed).unwrap() <= 1e-3);
}

#[test]
fn alpha_constant_forcing_reaches_cosh_profile() {
    let cfg = unit().with_alpha(1.0);
    let s = SolverSettings::new(200, 1e-3, 0.0, 3.0).unwrap();
    let out = fd_alpha_solve(&ForcingSignal::constant(-1.0), &cfg, &s, &GridField::zeros(1.0, 200).unwrap()).unwrap();
    let closed = GridField::from_fn(1.0, 200, alpha_closed(&cfg, -1.0).unwrap()).unwrap();
    assert!(out.relative_l2_distance(&closed).unwrap() <= 1e-3);
}

#[test]
fn heat_mode_decays_exactly() {
    let s = SolverSettings::new(200, 1e-3, 0.0, 0.1).unwrap();
    let init = GridField::from_fn(1.0, 200, |x| (PI * x).sin()).unwrap();
    let out = fd_nse_solve(&ForcingSignal::constant(0.0), &unit(), &s, &init).unwrap();
    let decay = (-PI * PI * 0.1).exp();
    for j in 0..out.values().len() {
        assert!((out.values()[j] - decay * (PI * out.x(j)).sin()).abs() < 1e-4);
    }
}

#[test]
fn alpha_mode_decay_rate_is_independent_of_alpha() {
    let s = SolverSettings::new(200, 1e-3, 0.0, 0.2).unwrap();
    let init = GridField::from_fn(1.0, 200, |x| (PI * x).sin()).unwrap();
    for alpha in [0.1, 1.0, 3.0] {
        let out = fd_alpha_solve(&ForcingSignal::constant(0.0), &unit().with_alpha(alpha), &s, &init).unwrap();
        let rate = -(out.l2_norm() / init.l2_norm()).ln() / 0.2;
        assert!((rate - PI * PI).abs() < 1e-3 * PI * PI, "alpha={alpha}: {rate}");
    }
}

#[test]
fn trajectory_records_requested_snapshots() {
    let s = SolverSettings::new(20, 0.01, 0.0, 1.0).unwrap();
    let z = GridField::zeros(1.0, 20).unwrap();
    let traj = fd_nse_trajectory(&ForcingSignal::constant(-1.0), &unit(), &s, &z, 10).unwrap();
    assert_eq!(traj.len(), 11);
    assert_eq!(traj[0].0, 0.0);
    assert_eq!(traj[10].0, 1.0);
}

#[test]
fn rejects_slip_and_mismatched_initial_data() {
    let s = SolverSettings::new(5, 0.1, 0.0, 1.0).unwrap();
    let slip = GridField::new(1.0, vec![1.0; 7]).unwrap();
    assert_eq!(fd_nse_solve(&ForcingSignal::constant(0.0), &unit(), &s, &slip).unwrap_err(), Error::NoSlipViolation);
    let other = GridField::zeros(1.0, 6).unwrap();
    assert!(matches!(
        fd_nse_solve(&ForcingSignal::constant(0.0), &unit(), &s, &other),
        Err(Error::ShapeMismatch(_))
    ));
}

fn errors_nse(cfg: &ChannelConfig, f: &ForcingSignal, from_history: bool) -> (f64, f64) {
    let mut out = Vec::new();
    for s in [
        SolverSettings::new(200, 1e-3, 0.0, 2.0).unwrap(),
        SolverSettings::new(200, 1e-3, 0.0, 2.0).unwrap().refined(),
    ] {
        let (init, reference) = if from_history {
            (
                nse_profile(f, cfg, 0.0, 20001).unwrap().to_grid(s.n).unwrap(),
                nse_profile(f, cfg, 2.0, 20001).unwrap(),
            )
        } else {
            let zero = SineSpectrum::zeros(cfg.h, 1).unwrap();
            (GridField::zeros(cfg.h, s.n).unwrap(), nse_profile_from(&zero, 0.0, f, cfg, 2.0, 20001).unwrap())
        };
        let got = fd_nse_solve(f, cfg, &s, &init).unwrap();
        out.push(got.relative_l2_distance(&reference.to_grid(s.n).unwrap()).unwrap());
    }
    (out[0], out[1])
}

fn errors_alpha(cfg: &ChannelConfig, f: &ForcingSignal, from_history: bool) -> (f64, f64) {
    let mut out = Vec::new();
    for s in [
        SolverSettings::new(200, 1e-3, 0.0, 2.0).unwrap(),
        SolverSettings::new(200, 1e-3, 0.0, 2.0).unwrap().refined(),
    ] {
        let (init, reference) = if from_history {
            (
                alpha_profile(f, cfg, 0.0, 20001).unwrap().to_grid(s.n).unwrap(),
                alpha_profile(f, cfg, 2.0, 20001).unwrap(),
            )
        } else {
            let zero = SineSpectrum::zeros(cfg.h, 1).unwrap();
            (GridField::zeros(cfg.h, s.n).unwrap(), alpha_profile_from(&zero, 0.0, f, cfg, 2.0, 20001).unwrap())
        };
        let got = fd_alpha_solve(f, cfg, &s, &init).unwrap();
        out.push(got.relative_l2_distance(&reference.to_grid(s.n).unwrap()).unwrap());
    }
    (out[0], out[1])
}

#[test]
fn nse_oracle_agrees_with_spectral_and_converges() {
    let (c, c_fine) = errors_nse(&unit(), &ForcingSignal::constant(-1.0), false);
    assert!(c <= 1e-9 && c_fine <= 1e-9, "{c} {c_fine}");
    let (c, c_fine) = errors_nse(&unit().with_nu(0.1), &ForcingSignal::constant(-1.0), false);
    assert!(c <= 1e-3 && c / c_fine >= 3.0, "{c} {c_fine}");
    let (p, p_fine) = errors_nse(&unit(), &piecewise(), true);
    assert!(p <= 1e-3 && p / p_fine >= 3.0, "{p} {p_fine}");
}

#[test]
fn alpha_oracle_agrees_with_spectral_and_converges() {
    let cfg = unit().with_alpha(1.0);
    let (c, c_fine) = errors_alpha(&cfg.with_nu(0.1), &ForcingSignal::constant(-1.0), false);
    assert!(c <= 1e-3 && c / c_fine >= 3.0, "{c} {c_fine}");
    let (p, p_fine) = errors_alpha(&cfg, &piecewise(), true);
    assert!(p <= 1e-3 && p / p_fine >= 3.0, "{p} {p_fine}");
}

#[test]
fn symmetric_start_stays_symmetric() {
    let s = SolverSettings::new(200, 1e-3, 0.0, 1.0).unwrap();
    let init = GridField::from_fn(1.0, 200, |x| (PI * x).sin() + 0.3 * (3.0 * PI * x).sin()).unwrap();
    let out = fd_nse_solve(&piecewise(), &unit(), &s, &init).unwrap();
    assert!(symmetry_defect(&out) <= 1e-6);
    let out = fd_alpha_solve(&piecewise(), &unit().with_alpha(0.5), &s, &init).unwrap();
    assert!(symmetry_defect(&out) <= 1e-6);
}

#[test]
fn discrete_maximum_principle() {
    for seed in 0..20 {
        let f = random::random_admissible_forcing(seed, 3.0, 0.0, 1.0).unwrap();
        let s = SolverSettings::new(200, 1e-3, 0.0, 1.0).unwrap();
        let traj = fd_nse_trajectory(&f, &unit(), &s, &GridField::zeros(1.0, 200).unwrap(), 1).unwrap();
        for (t, g) in &traj {
            assert!(g.values().iter().all(|&v| v >= 0.0), "seed {seed}, t = {t}");
        }
    }
}

#[test]
fn mode_decay_examples() {
    let cfg = ChannelConfig {
        pi2: 2.0 * PI,
        ..unit()
    };
    let s = SolverSettings::new(200, 1e-3, 0.0, 1.0).unwrap();
    let sine = GridField::from_fn(1.0, 200, |x| (PI * x).sin()).unwrap();
    let e = mode_decay_check(1, &cfg, &s, &sine).unwrap();
    assert!(e.pass);
    let bound: f64 = e.metadata["bound_rate"].parse().unwrap();
    let observed: f64 = e.metadata["observed_rate"].parse().unwrap();
    assert_eq!(bound, 4.0);
    assert!((observed - 2.0 * (1.0 + PI * PI)).abs() < 0.01, "{observed}");
    assert_eq!(
        mode_decay_check(1, &cfg, &s, &GridField::zeros(1.0, 200).unwrap()).unwrap_err(),
        Error::ZeroInitialData
    );
    let mut last = 0.0;
    for n in [1, 2, 4] {
        let e = mode_decay_check(n, &cfg, &s, &sine).unwrap();
        let rate: f64 = e.metadata["bound_rate"].parse().unwrap();
        assert!(e.pass && rate > last);
        last = rate;
    }
}

#[test]
fn mode_energy_never_increases() {
    let cfg = ChannelConfig {
        pi2: 2.0 * PI,
        ..unit()
    };
    for seed in 0..10 {
        let init = random::random_sine_profile(seed, 1.0, 100).unwrap();
        let s = SolverSettings::new(100, 5e-3, 0.0, 0.5).unwrap();
        let hist = mode_energy_history(1 + seed as usize % 3, &cfg, &s, &init).unwrap();
        assert!(hist.windows(2).all(|w| w[1].1 <= w[0].1));
    }
}
