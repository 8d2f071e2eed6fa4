//! Energy inequality for class-P channel flows, and the vanishing of the
//! trilinear term for divergence-free fields.

use super::field3::Field3;
use super::pressure::PressureField;
use crate::config::ChannelConfig;
use crate::error::{Error, Result};
use crate::field::trapezoid;
use crate::report::CheckEntry;

struct EnergyTerms {
    lhs: f64,
    rhs: f64,
}

fn mean_square_of_average(u: &Field3, comp: usize, axis: usize) -> f64 {
    // int over the remaining periodic direction and x3 of <u_comp>_axis^2
    let (n1, n2, n3) = u.dims();
    let v = u.component(comp);
    let (outer, inner, other_period) = if axis == 0 { (n2, n1, u.pi2) } else { (n1, n2, u.pi1) };
    let mut total = 0.0;
    for o in 0..outer {
        let mut avg = vec![0.0; n3];
        for i in 0..inner {
            let base = if axis == 0 { u.index(i, o, 0) } else { u.index(o, i, 0) };
            for (a, x) in avg.iter_mut().zip(&v[base..base + n3]) {
                *a += x;
            }
        }
        let sq: Vec<f64> = avg.iter().map(|a| (a / inner as f64).powi(2)).collect();
        total += trapezoid(&sq, u.dx3());
    }
    total * other_period / outer as f64
}

fn energy_terms(u: &Field3, du_dt: &Field3, cfg: &ChannelConfig, p_bar: f64) -> EnergyTerms {
    let nu = cfg.nu;
    let mut dissipation = 0.0;
    let mut diag = 0.0;
    let mut rate = 0.0;
    for k in 0..2 {
        let prod: Vec<f64> = u.component(k).iter().zip(du_dt.component(k)).map(|(a, b)| a * b).collect();
        rate += 2.0 * u.integrate(&prod);
        for l in 0..3 {
            let d = u.derivative(k, l);
            let sq: Vec<f64> = d.iter().map(|x| x * x).collect();
            let int = u.integrate(&sq);
            dissipation += int;
            if k == l {
                diag += int;
            }
        }
    }
    let lhs = rate + 2.0 * nu * dissipation - nu * diag;
    let (pi1, pi2, h) = (u.pi1, u.pi2, u.h);
    let averages = mean_square_of_average(u, 0, 0) + mean_square_of_average(u, 1, 1);
    let rhs = p_bar * p_bar * pi1 * pi2 * h / (6.0 * nu)
        + p_bar.powf(1.5) * (pi1 + pi2) * h
        + p_bar.sqrt() * averages;
    EnergyTerms { lhs, rhs }
}

fn check_walls(u: &Field3) -> Result<()> {
    let (n1, n2, n3) = u.dims();
    let scale = (0..3)
        .flat_map(|c| u.component(c).iter())
        .fold(1.0_f64, |m, v| m.max(v.abs()));
    for c in 0..3 {
        let v = u.component(c);
        for i in 0..n1 {
            for j in 0..n2 {
                if v[u.index(i, j, 0)].abs() > 1e-12 * scale
                    || v[u.index(i, j, n3 - 1)].abs() > 1e-12 * scale
                {
                    return Err(Error::NoSlipViolation);
                }
            }
        }
    }
    Ok(())
}

/// Evaluates both sides of the energy inequality
///
/// `d/dt int|u|^2 + 2 nu int |grad u|^2 - nu int ((d1 u1)^2 + (d2 u2)^2)
///   <= p_bar^2 pi1 pi2 h / (6 nu) + p_bar^{3/2} (pi1 + pi2) h
///      + p_bar^{1/2} sum_j int <u_j>_j^2`
///
/// for a field with `u3 = 0`. `du_dt` is the time derivative of `u` at `t`.
/// A grid-refinement pair supplies the discretization slack when the grid
/// can be coarsened.
pub fn energy_balance(
    u: &Field3,
    du_dt: &Field3,
    cfg: &ChannelConfig,
    pressure: &PressureField,
    t: f64,
    p_bar: f64,
) -> Result<CheckEntry> {
    let cfg = cfg.validate()?;
    if !(p_bar.is_finite() && p_bar > 0.0) {
        return Err(Error::NonPositiveParameter("p_bar"));
    }
    if !u.same_shape(du_dt) {
        return Err(Error::ShapeMismatch("u and du_dt grids differ".into()));
    }
    let box_ok = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b;
    if !(box_ok(u.pi1, cfg.pi1) && box_ok(u.pi2, cfg.pi2) && box_ok(u.h, cfg.h)) {
        return Err(Error::ShapeMismatch("field box differs from channel configuration".into()));
    }
    let scale = u.component(0).iter().chain(u.component(1)).fold(1.0_f64, |m, v| m.max(v.abs()));
    if u.component(2).iter().any(|v| v.abs() > 1e-12 * scale) {
        return Err(Error::NonzeroNormalVelocity);
    }
    check_walls(u)?;
    let p1 = pressure.p1.eval(t);
    if !(-p1 > 0.0 && -p1 <= p_bar) {
        return Err(Error::PreconditionViolation(format!(
            "need 0 < -p1(t) <= p_bar, got p1 = {p1}, p_bar = {p_bar}"
        )));
    }
    let fine = energy_terms(u, du_dt, &cfg, p_bar);
    let slack = match (u.coarsened(), du_dt.coarsened()) {
        (Some(uc), Some(dc)) => {
            let coarse = energy_terms(&uc, &dc, &cfg, p_bar);
            (fine.lhs - coarse.lhs).abs() + (fine.rhs - coarse.rhs).abs()
        }
        _ => 0.0,
    };
    Ok(CheckEntry::at_most("energy_inequality", fine.lhs - fine.rhs - slack, 0.0)
        .with_number("lhs", fine.lhs)
        .with_number("rhs", fine.rhs)
        .with_number("slack", slack)
        .with_number("p1", p1)
        .with_number("t", t))
}

/// `|int (u . grad) v . v|` for divergence-free `u`.
pub fn nonlinear_orthogonality(u: &Field3, v: &Field3) -> Result<f64> {
    if !u.same_shape(v) {
        return Err(Error::ShapeMismatch("u and v grids differ".into()));
    }
    let len = u.component(0).len();
    let mut div = vec![0.0; len];
    let mut grad_scale = 0.0_f64;
    for c in 0..3 {
        let d = u.derivative(c, c);
        for (a, b) in div.iter_mut().zip(&d) {
            *a += b;
            grad_scale = grad_scale.max(b.abs());
        }
    }
    let worst = div.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if worst > 1e-8 * grad_scale.max(1.0) {
        return Err(Error::DivergenceViolation(worst));
    }
    let mut integrand = vec![0.0; len];
    for k in 0..3 {
        let vk = v.component(k);
        for l in 0..3 {
            let ul = u.component(l);
            if ul.iter().all(|&x| x == 0.0) {
                continue;
            }
            let d = v.derivative(k, l);
            for idx in 0..len {
                integrand[idx] += ul[idx] * d[idx] * vk[idx];
            }
        }
    }
    Ok(u.integrate(&integrand).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::ForcingSignal;
    use std::f64::consts::PI;

    fn pressure(p1: f64) -> PressureField {
        PressureField::new(ForcingSignal::constant(0.0), ForcingSignal::constant(p1), 1.0).unwrap()
    }

    #[test]
    fn poiseuille_reference_values() {
        let cfg = ChannelConfig::default();
        let dims = (8, 8, 2001);
        let u = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, x| [0.5 * x * (1.0 - x), 0.0, 0.0]).unwrap();
        let du = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, _| [0.0; 3]).unwrap();
        let e = energy_balance(&u, &du, &cfg, &pressure(-1.0), 0.0, 1.0).unwrap();
        let lhs: f64 = e.metadata["lhs"].parse().unwrap();
        let rhs: f64 = e.metadata["rhs"].parse().unwrap();
        assert!((lhs - 1.0 / 6.0).abs() < 1e-6);
        assert!((rhs - (1.0 / 6.0 + 2.0 + 1.0 / 120.0)).abs() < 1e-6);
        assert!(e.pass);
    }

    #[test]
    fn preconditions() {
        let cfg = ChannelConfig::default();
        let dims = (8, 8, 9);
        let slip = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, _| [1.0, 0.0, 0.0]).unwrap();
        let zero = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, _, _| [0.0; 3]).unwrap();
        assert_eq!(
            energy_balance(&slip, &zero, &cfg, &pressure(-1.0), 0.0, 1.0).unwrap_err(),
            Error::NoSlipViolation
        );
        let other = Field3::from_fn((1.0, 1.0, 1.0), (8, 8, 11), |_, _, _| [0.0; 3]).unwrap();
        assert!(matches!(
            energy_balance(&zero, &other, &cfg, &pressure(-1.0), 0.0, 1.0),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(energy_balance(&zero, &zero, &cfg, &pressure(-1.0), 0.0, 1.0).unwrap().pass);
    }

    #[test]
    fn orthogonality_examples() {
        let dims = (16, 16, 17);
        let u = Field3::from_fn((1.0, 1.0, 1.0), dims, |_, x2, _| [(2.0 * PI * x2).sin(), 0.0, 0.0]).unwrap();
        let v = Field3::from_fn((1.0, 1.0, 1.0), dims, |x1, _, _| [0.0, (2.0 * PI * x1).sin(), 0.0]).unwrap();
        assert!(nonlinear_orthogonality(&u, &v).unwrap() < 1e-10);
        let bad = Field3::from_fn((1.0, 1.0, 1.0), dims, |x1, _, _| [(2.0 * PI * x1).sin(), 0.0, 0.0]).unwrap();
        assert!(matches!(
            nonlinear_orthogonality(&bad, &v),
            Err(Error::DivergenceViolation(_))
        ));
    }
}
