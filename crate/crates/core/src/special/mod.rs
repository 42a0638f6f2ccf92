//! Exponential integral, `Li(x^w)` and complex `Γ`.
//!
//! Every power `x^w` with real `x > 0` is formed with the real logarithm of
//! `x`, so `Li(x^w)` means `Ei(w log x)` on the principal branch.

mod ei;
mod gamma;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use ei::{ei, ei_asymptotic, ei_continued_fraction, ei_series, li_gamma_residual, li_power, EI_CROSSOVER};
pub use gamma::{gamma, ln_gamma};

/// `s = σ + it`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub re: f64,
    pub im: f64,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Self { re, im })
        } else {
            Err(Error::InvalidArgument(format!("non-finite point {re} + {im}i")))
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}
