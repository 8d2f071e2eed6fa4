//! Planar checks on the pressure and velocity: discrete harmonicity, the
//! Jacobian of `(u1, u2)`, and the Poisson-kernel derivative bound.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::report::CheckEntry;

/// Samples on a uniform `(x1, x2)` grid, row-major in `x1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneSamples {
    pub origin: (f64, f64),
    pub spacing: (f64, f64),
    pub n1: usize,
    pub n2: usize,
    pub values: Vec<f64>,
}

impl PlaneSamples {
    pub fn from_fn(
        origin: (f64, f64),
        spacing: (f64, f64),
        (n1, n2): (usize, usize),
        f: impl Fn(f64, f64) -> f64,
    ) -> Self {
        let mut values = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                values.push(f(
                    origin.0 + i as f64 * spacing.0,
                    origin.1 + j as f64 * spacing.1,
                ));
            }
        }
        Self {
            origin,
            spacing,
            n1,
            n2,
            values,
        }
    }

    /// `n1 x n2` samples covering one period in each direction.
    pub fn periodic(
        (pi1, pi2): (f64, f64),
        (n1, n2): (usize, usize),
        f: impl Fn(f64, f64) -> f64,
    ) -> Self {
        Self::from_fn((0.0, 0.0), (pi1 / n1 as f64, pi2 / n2 as f64), (n1, n2), f)
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n2 + j]
    }
}

/// Largest five-point Laplacian over interior nodes.
pub fn harmonicity_residual(p: &PlaneSamples) -> Result<f64> {
    if p.n1 < 5 || p.n2 < 5 {
        return Err(Error::GridTooSmall);
    }
    if p.values.len() != p.n1 * p.n2 {
        return Err(Error::ShapeMismatch("sample count does not match grid".into()));
    }
    let (d1, d2) = p.spacing;
    let mut worst = 0.0_f64;
    for i in 1..p.n1 - 1 {
        for j in 1..p.n2 - 1 {
            let c = p.at(i, j);
            let lap = (p.at(i + 1, j) - 2.0 * c + p.at(i - 1, j)) / (d1 * d1)
                + (p.at(i, j + 1) - 2.0 * c + p.at(i, j - 1)) / (d2 * d2);
            worst = worst.max(lap.abs());
        }
    }
    Ok(worst)
}

/// Largest `|d(u1, u2)/d(x1, x2)|` using periodic central differences.
pub fn jacobian_defect(u1: &PlaneSamples, u2: &PlaneSamples) -> Result<f64> {
    if (u1.n1, u1.n2) != (u2.n1, u2.n2) || u1.spacing != u2.spacing {
        return Err(Error::ShapeMismatch("u1 and u2 grids differ".into()));
    }
    let (n1, n2) = (u1.n1, u1.n2);
    if n1 < 3 || n2 < 3 {
        return Err(Error::GridTooSmall);
    }
    let (d1, d2) = u1.spacing;
    let diff = |u: &PlaneSamples, i: usize, j: usize| {
        (
            (u.at((i + 1) % n1, j) - u.at((i + n1 - 1) % n1, j)) / (2.0 * d1),
            (u.at(i, (j + 1) % n2) - u.at(i, (j + n2 - 1) % n2)) / (2.0 * d2),
        )
    };
    let mut worst = 0.0_f64;
    for i in 0..n1 {
        for j in 0..n2 {
            let (a1, a2) = diff(u1, i, j);
            let (b1, b2) = diff(u2, i, j);
            worst = worst.max((a1 * b2 - a2 * b1).abs());
        }
    }
    Ok(worst)
}

/// Poisson kernel of the unit disc, `H(w, theta) = (1 - |w|^2) / |e^{i theta} - w|^2`.
pub fn poisson_kernel(x1: f64, x2: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let r2 = x1 * x1 + x2 * x2;
    (1.0 - r2) / (1.0 + r2 - 2.0 * (x1 * c + x2 * s))
}

/// `dH/dx1` at `w = (x1, x2)`, differentiated directly from [`poisson_kernel`].
pub fn poisson_dh_dx1(x1: f64, x2: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let d = 1.0 + x1 * x1 + x2 * x2 - 2.0 * (x1 * c + x2 * s);
    let num = -4.0 * x1 + 2.0 * c + 2.0 * x1 * x1 * c - 2.0 * x2 * x2 * c + 4.0 * x1 * x2 * s;
    num / (d * d)
}

/// Rectangle of `z` values, optionally clipped to a disc about the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRegion {
    pub x1: (f64, f64),
    pub x2: (f64, f64),
    pub max_radius: Option<f64>,
}

impl ScanRegion {
    pub fn disc(r: f64) -> Self {
        Self {
            x1: (-r, r),
            x2: (-r, r),
            max_radius: Some(r),
        }
    }

    fn farthest(&self) -> f64 {
        let cx = self.x1.0.abs().max(self.x1.1.abs());
        let cy = self.x2.0.abs().max(self.x2.1.abs());
        let corner = cx.hypot(cy);
        self.max_radius.map_or(corner, |r| corner.min(r))
    }
}

/// Scans `|(1/a) dH/dx1 (z/a, theta)|`, the `z`-derivative of the kernel
/// used to represent `P` on the disc of radius `a`, and checks it against 32.
pub fn poisson_kernel_bound_scan(
    a: f64,
    region: &ScanRegion,
    (n1, n2, n_theta): (usize, usize, usize),
) -> Result<CheckEntry> {
    if n1 < 1 || n2 < 1 || n_theta < 1 {
        return Err(Error::GridTooSmall);
    }
    let z_max = region.farthest();
    if a.is_nan() || a <= 4.0 * z_max + 1.0 {
        return Err(Error::PreconditionViolation(format!(
            "radius a = {a} must exceed 4|z| + 1 = {}",
            4.0 * z_max + 1.0
        )));
    }
    let thetas: Vec<(f64, f64)> = (0..n_theta)
        .map(|k| (2.0 * PI * k as f64 / n_theta as f64).sin_cos())
        .collect();
    let step = |range: (f64, f64), n: usize, i: usize| {
        if n == 1 {
            range.0
        } else if i + 1 == n {
            range.1
        } else {
            range.0 + (range.1 - range.0) * i as f64 / (n - 1) as f64
        }
    };
    let mut worst = 0.0_f64;
    let mut chain = 0.0_f64;
    let mut points = 0usize;
    for i in 0..n1 {
        let z1 = step(region.x1, n1, i);
        for j in 0..n2 {
            let z2 = step(region.x2, n2, j);
            let r = z1.hypot(z2);
            if region.max_radius.is_some_and(|m| r > m) {
                continue;
            }
            points += 1;
            let (x1, x2) = (z1 / a, z2 / a);
            for &(s, c) in &thetas {
                let d = 1.0 + x1 * x1 + x2 * x2 - 2.0 * (x1 * c + x2 * s);
                let num =
                    -4.0 * x1 + 2.0 * c + 2.0 * x1 * x1 * c - 2.0 * x2 * x2 * c + 4.0 * x1 * x2 * s;
                worst = worst.max((num / (d * d)).abs() / a);
            }
            let q = r / a;
            chain = chain.max(4.0 * (z1.abs() / a + 2.0 * q * q + 1.0) / (a * (1.0 - q).powi(4)));
        }
    }
    Ok(CheckEntry::at_most("poisson_kernel_bound", worst, 32.0)
        .with_number("a", a)
        .with_number("chain_estimate", chain)
        .with_meta("z_points", points)
        .with_meta("theta_points", n_theta)
        .with_meta(
            "numerator",
            "-4x1 + 2cos + 2x1^2 cos - 2x2^2 cos + 4x1x2 sin (recomputed from H directly; a -2x2x2^2 cos term would be a slip)",
        ))
}
