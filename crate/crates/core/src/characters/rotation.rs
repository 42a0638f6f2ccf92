use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;

/// The root of unity `e(num/den) = exp(2πi·num/den)`, kept in lowest terms with `0 ≤ num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rotation {
    num: u64,
    den: u64,
}

impl Rotation {
    pub const ONE: Rotation = Rotation { num: 0, den: 1 };

    pub fn new(num: i128, den: u64) -> Self {
        assert!(den > 0, "rotation denominator must be positive");
        let r = num.rem_euclid(den as i128) as u64;
        let g = gcd(r, den);
        Rotation {
            num: r / g,
            den: den / g,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// Multiplicative order of the root of unity.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn conj(self) -> Self {
        Rotation::new(-(self.num as i128), self.den)
    }

    pub fn pow(self, m: u64) -> Self {
        Rotation::new(self.num as i128 * m as i128, self.den)
    }

    pub fn to_complex(self) -> Complex64 {
        match (self.num, self.den) {
            (0, _) => Complex64::new(1.0, 0.0),
            (1, 2) => Complex64::new(-1.0, 0.0),
            (1, 4) => Complex64::new(0.0, 1.0),
            (3, 4) => Complex64::new(0.0, -1.0),
            (n, d) => Complex64::from_polar(1.0, std::f64::consts::TAU * n as f64 / d as f64),
        }
    }
}

impl Mul for Rotation {
    type Output = Rotation;

    fn mul(self, rhs: Rotation) -> Rotation {
        let l = self.den / gcd(self.den, rhs.den) * rhs.den;
        let n = self.num as i128 * (l / self.den) as i128 + rhs.num as i128 * (l / rhs.den) as i128;
        Rotation::new(n, l)
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}
