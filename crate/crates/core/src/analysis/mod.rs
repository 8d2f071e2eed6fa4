//! Numeric checks of the averages, symmetries, inequalities and pressure
//! structure satisfied by channel flows.

mod averages;
mod energy;
mod field3;
mod harmonic;
mod inequalities;
mod periodic;
mod pressure;
pub mod random;

pub use averages::{average_x2, symmetry_defect, Profile, SYMMETRY_SAMPLES};
pub use energy::{energy_balance, nonlinear_orthogonality};
pub use field3::Field3;
pub use harmonic::{
    harmonicity_residual, jacobian_defect, poisson_dh_dx1, poisson_kernel, poisson_kernel_bound_scan,
    PlaneSamples, ScanRegion,
};
pub use inequalities::{
    linf_check, poincare_check, poincare_sine_lhs, LinfOutcome, PeriodicSample, PoincareOutcome,
};
pub use periodic::{periodic_derivative, PeriodicDerivative};
pub use pressure::{pressure_differences, pressure_eval, pressure_growth_check, PressureField};
