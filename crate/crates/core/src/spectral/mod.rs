//! Analytic channel-flow solutions in a Fourier sine basis.
//!
//! For the velocity form `(U(x3, t), 0, 0)` both the NSE and the NS-alpha
//! model reduce to a forced heat equation per sine mode. Only odd modes are
//! forced, so every profile built here is symmetric about the midplane.

mod closed;
mod expint;
mod identities;
mod solution;

pub use closed::{alpha_closed, alpha_tail_bound, cosh_ratio, nse_tail_bound, poiseuille_closed};
pub use expint::{exp_convolve, exp_convolve_from, ModeRate};
pub use identities::{
    fit_log_slope, identity_cosh_series, identity_parabola_series, sup_defect, SeriesIdentity,
};
pub use solution::{
    alpha_mode_solution, alpha_profile, alpha_profile_from, kernel_k, mean_velocity_from_kernel,
    nse_mode_solution, nse_profile, nse_profile_from, q_field, DEFAULT_MODES,
};
