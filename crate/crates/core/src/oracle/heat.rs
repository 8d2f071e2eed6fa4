//! Crank–Nicolson stepping of `du/dt = nu u'' - r u + s(t)` on the interior
//! nodes of a uniform grid with homogeneous Dirichlet walls.

use super::tridiag::{ThomasFactor, Tridiagonal};

pub(crate) struct CrankNicolson {
    explicit: Tridiagonal,
    implicit: ThomasFactor,
    scratch: Vec<f64>,
}

impl CrankNicolson {
    pub(crate) fn new(n: usize, dx: f64, nu: f64, reaction: f64, dt: f64) -> Self {
        let r = 0.5 * dt * nu / (dx * dx);
        let rho = 0.5 * dt * reaction;
        let explicit = Tridiagonal::toeplitz(n, 1.0 - 2.0 * r - rho, r);
        let implicit = Tridiagonal::toeplitz(n, 1.0 + 2.0 * r + rho, -r).factor();
        Self {
            explicit,
            implicit,
            scratch: vec![0.0; n],
        }
    }

    /// One step; `source_dt` is `dt * s(t + dt/2)`.
    pub(crate) fn step(&mut self, interior: &mut [f64], source_dt: f64) {
        self.explicit.apply(interior, &mut self.scratch);
        for (u, e) in interior.iter_mut().zip(&self.scratch) {
            *u = e + source_dt;
        }
        self.implicit.solve_in_place(interior);
    }
}

/// Second-difference operator `(I - alpha^2 D^2)` with Dirichlet walls.
pub(crate) fn helmholtz(n: usize, dx: f64, alpha: f64) -> Tridiagonal {
    let a2 = alpha * alpha / (dx * dx);
    Tridiagonal::toeplitz(n, 1.0 + 2.0 * a2, -a2)
}
