use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance policy shared by every comparison in the crate.
///
/// `eq_tol` decides scalar equality and inequality clearance, `set_tol`
/// decides whether two spectra match and bounds residuals, and `cone_tol` is
/// the slack allowed when testing membership in a cone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eq_tol: f64,
    pub set_tol: f64,
    pub cone_tol: f64,
}

impl Tolerance {
    pub const DEFAULT_EQ: f64 = 1e-9;
    pub const DEFAULT_SET: f64 = 1e-6;
    pub const DEFAULT_CONE: f64 = 1e-9;

    pub fn new(eq_tol: f64, set_tol: f64, cone_tol: f64) -> Result<Self> {
        if !(eq_tol.is_finite() && eq_tol > 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "eq_tol must be positive, got {eq_tol}"
            )));
        }
        if !(set_tol.is_finite() && set_tol > 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "set_tol must be positive, got {set_tol}"
            )));
        }
        if !(cone_tol.is_finite() && cone_tol >= 0.0) {
            return Err(Error::InvalidTolerance(format!(
                "cone_tol must be nonnegative, got {cone_tol}"
            )));
        }
        if eq_tol > set_tol {
            return Err(Error::InvalidTolerance(format!(
                "eq_tol ({eq_tol}) must not exceed set_tol ({set_tol})"
            )));
        }
        Ok(Self {
            eq_tol,
            set_tol,
            cone_tol,
        })
    }

    /// Default tolerances with `eq_tol` replaced.
    pub fn with_eq_tol(eq_tol: f64) -> Result<Self> {
        Self::new(eq_tol, Self::DEFAULT_SET, Self::DEFAULT_CONE)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eq_tol: Self::DEFAULT_EQ,
            set_tol: Self::DEFAULT_SET,
            cone_tol: Self::DEFAULT_CONE,
        }
    }
}
