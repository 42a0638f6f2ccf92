use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which of the three regimes `Re s < 1/2`, `Re s = 1/2`, `Re s > 1/2` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AimCase {
    I,
    II,
    III,
}

impl fmt::Display for AimCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AimCase::I => "I",
            AimCase::II => "II",
            AimCase::III => "III",
        })
    }
}

/// An evaluation point `s`. Points on the critical line are marked
/// explicitly instead of being inferred from `Re s == 0.5`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvalPoint {
    /// `s` with `Re s ≠ 1/2`.
    Generic { re: f64, im: f64 },
    /// `s = 1/2 + it` exactly.
    CriticalLine { t: f64 },
}

impl EvalPoint {
    pub fn generic(s: Complex64) -> Result<Self> {
        if !(s.re.is_finite() && s.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite s = {s}")));
        }
        if s.re == 0.5 {
            return Err(Error::InvalidArgument(
                "Re s = 1/2 must be given as a critical-line point, not a generic one".into(),
            ));
        }
        Ok(EvalPoint::Generic { re: s.re, im: s.im })
    }

    pub fn critical(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite t = {t}")));
        }
        Ok(EvalPoint::CriticalLine { t })
    }

    /// Builds a point from its components and the on-the-line flag; the flag requires `re = 0.5`.
    pub fn from_parts(re: f64, im: f64, on_critical_line: bool) -> Result<Self> {
        if on_critical_line {
            if re != 0.5 {
                return Err(Error::InvalidArgument(format!(
                    "critical-line flag set but Re s = {re}"
                )));
            }
            Self::critical(im)
        } else {
            Self::generic(Complex64::new(re, im))
        }
    }

    pub fn s(&self) -> Complex64 {
        match *self {
            EvalPoint::Generic { re, im } => Complex64::new(re, im),
            EvalPoint::CriticalLine { t } => Complex64::new(0.5, t),
        }
    }

    pub fn on_critical_line(&self) -> bool {
        matches!(self, EvalPoint::CriticalLine { .. })
    }

    /// `s = 1/2` exactly.
    pub fn is_center(&self) -> bool {
        matches!(self, EvalPoint::CriticalLine { t } if *t == 0.0)
    }

    pub fn case(&self) -> AimCase {
        match *self {
            EvalPoint::CriticalLine { .. } => AimCase::II,
            EvalPoint::Generic { re, .. } if re < 0.5 => AimCase::I,
            EvalPoint::Generic { .. } => AimCase::III,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch() {
        assert_eq!(EvalPoint::generic(Complex64::new(0.3, 1.0)).unwrap().case(), AimCase::I);
        assert_eq!(EvalPoint::generic(Complex64::new(0.75, 0.0)).unwrap().case(), AimCase::III);
        assert_eq!(EvalPoint::critical(0.0).unwrap().case(), AimCase::II);
        assert!(EvalPoint::generic(Complex64::new(0.5, 0.0)).is_err());
        assert!(EvalPoint::from_parts(0.6, 0.0, true).is_err());
        assert!(EvalPoint::from_parts(0.5, 2.0, true).unwrap().on_critical_line());
    }
}
