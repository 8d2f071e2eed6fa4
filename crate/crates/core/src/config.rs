use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Channel geometry and fluid parameters.
///
/// The channel occupies `R x R x [0, h]`; solutions are periodic in `x1` and
/// `x2` with periods `pi1` and `pi2`. `alpha = 0` selects the Navier-Stokes
/// equations, `alpha > 0` the NS-alpha model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub h: f64,
    pub nu: f64,
    pub alpha: f64,
    pub pi1: f64,
    pub pi2: f64,
}

impl Default for ChannelConfig {
    fn default() -> Self {
        Self {
            h: 1.0,
            nu: 1.0,
            alpha: 0.0,
            pi1: 1.0,
            pi2: 1.0,
        }
    }
}

impl ChannelConfig {
    pub fn new(h: f64, nu: f64, alpha: f64, pi1: f64, pi2: f64) -> Result<Self> {
        Self {
            h,
            nu,
            alpha,
            pi1,
            pi2,
        }
        .validate()
    }

    /// Returns `self` unchanged when every invariant holds.
    pub fn validate(self) -> Result<Self> {
        let fields = [
            ("h", self.h),
            ("nu", self.nu),
            ("alpha", self.alpha),
            ("pi1", self.pi1),
            ("pi2", self.pi2),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(Error::NonFinite(name));
            }
        }
        for (name, value) in [("h", self.h), ("nu", self.nu), ("pi1", self.pi1), ("pi2", self.pi2)] {
            if value <= 0.0 {
                return Err(Error::NonPositiveParameter(name));
            }
        }
        if self.alpha < 0.0 {
            return Err(Error::NegativeParameter("alpha"));
        }
        Ok(self)
    }

    pub fn with_alpha(self, alpha: f64) -> Self {
        Self { alpha, ..self }
    }

    pub fn with_nu(self, nu: f64) -> Self {
        Self { nu, ..self }
    }

    pub fn is_alpha_model(&self) -> bool {
        self.alpha > 0.0
    }

    /// Fails with [`Error::Domain`] unless `0 <= x <= h`.
    pub fn check_position(&self, x: f64) -> Result<()> {
        if x.is_finite() && (0.0..=self.h).contains(&x) {
            Ok(())
        } else {
            Err(Error::Domain { x, h: self.h })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_config_is_valid() {
        let cfg = ChannelConfig::new(1.0, 1.0, 0.0, 1.0, 1.0).unwrap();
        assert!(!cfg.is_alpha_model());
    }

    #[test]
    fn alpha_config_is_valid() {
        let cfg = ChannelConfig::new(1.0, 1.0, 1.0, 2.0 * PI, 2.0 * PI).unwrap();
        assert!(cfg.is_alpha_model());
    }

    #[test]
    fn zero_height_is_rejected() {
        let err = ChannelConfig::new(0.0, 1.0, 0.0, 1.0, 1.0).unwrap_err();
        assert_eq!(err, Error::NonPositiveParameter("h"));
    }

    #[test]
    fn negative_alpha_and_nan_are_rejected() {
        assert_eq!(
            ChannelConfig::new(1.0, 1.0, -0.1, 1.0, 1.0).unwrap_err(),
            Error::NegativeParameter("alpha")
        );
        assert_eq!(
            ChannelConfig::new(1.0, f64::NAN, 0.0, 1.0, 1.0).unwrap_err(),
            Error::NonFinite("nu")
        );
        assert_eq!(
            ChannelConfig::new(1.0, 1.0, 0.0, 1.0, -2.0).unwrap_err(),
            Error::NonPositiveParameter("pi2")
        );
    }

    #[test]
    fn validate_is_idempotent() {
        let cfg = ChannelConfig::new(2.0, 0.5, 0.3, 1.0, 3.0).unwrap();
        assert_eq!(cfg.validate().unwrap().validate().unwrap(), cfg);
    }
}
