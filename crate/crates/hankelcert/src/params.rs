//! Class parameters `(lambda, mu, t)` and their domain checks.

use thiserror::Error;

/// Parameter domain violations.
///
/// `t = 1` gets its own variant: the sign arguments behind the bound are
/// strict inequalities that fail exactly at the boundary, so callers may
/// want to report it separately from a generic out-of-range `t`.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("lambda must satisfy lambda >= 1 (got {0})")]
    LambdaOutOfRange(f64),
    #[error("mu must satisfy mu >= 0 (got {0})")]
    MuOutOfRange(f64),
    #[error("t must lie in the open interval (1/2, 1) (got {0})")]
    TOutOfRange(f64),
    #[error("t = 1 is outside the supported domain; the bound requires t < 1")]
    TAtUpperBoundary,
}

/// The triple `(lambda, mu, t)` selecting a function class.
///
/// Invariants, enforced by [`ClassParams::new`]:
/// `lambda >= 1`, `mu >= 0`, `1/2 < t < 1`. These imply that the
/// denominators `lambda + mu`, `2 lambda + mu`, `3 lambda + mu` are
/// strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    lambda: f64,
    mu: f64,
    t: f64,
}

impl ClassParams {
    pub fn new(lambda: f64, mu: f64, t: f64) -> Result<Self, ParamError> {
        if lambda.is_nan() || lambda < 1.0 {
            return Err(ParamError::LambdaOutOfRange(lambda));
        }
        if mu.is_nan() || mu < 0.0 {
            return Err(ParamError::MuOutOfRange(mu));
        }
        if t == 1.0 {
            return Err(ParamError::TAtUpperBoundary);
        }
        if t.is_nan() || t <= 0.5 || t >= 1.0 {
            return Err(ParamError::TOutOfRange(t));
        }
        Ok(Self { lambda, mu, t })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Same class, different `t`. Convenient for scans over `t`.
    pub fn with_t(&self, t: f64) -> Result<Self, ParamError> {
        Self::new(self.lambda, self.mu, t)
    }
}
