//! Laminar channel flow `u = (U(x3, t), 0, 0)` between walls at `x3 = 0` and
//! `x3 = h`, driven by a time-dependent pressure gradient, for the
//! Navier–Stokes equations and the Navier–Stokes-alpha model.
//!
//! * [`spectral`]: sine-series solutions, closed forms and series identities.
//! * [`oracle`]: an independent finite-difference solver.
//! * [`analysis`]: averages, symmetry, inequality and pressure checks.

pub mod analysis;
pub mod config;
pub mod error;
pub mod field;
pub mod forcing;
pub mod oracle;
pub mod report;
pub mod spectral;

pub use config::ChannelConfig;
pub use error::{Error, Result};
pub use field::{GridField, SineSpectrum};
pub use forcing::ForcingSignal;
pub use report::{CheckEntry, Relation, VerificationReport};
