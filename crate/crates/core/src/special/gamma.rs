use num_complex::Complex64;

use crate::{Error, Result};

/// `B_{2k}` for `k = 1..=10`.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const SHIFT_TO: f64 = 15.0;

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

fn stirling(w: Complex64) -> Complex64 {
    let half_ln_2pi = 0.5 * std::f64::consts::TAU.ln();
    let mut acc = (w - 0.5) * w.ln() - w + half_ln_2pi;
    let w2 = w * w;
    let mut wp = w;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let n = 2.0 * (k + 1) as f64;
        acc += b / (n * (n - 1.0) * wp);
        wp *= w2;
    }
    acc
}

/// `log Γ(z)` for `Re z ≥ 1/2` (principal value of the log of the Stirling form; not
/// the continuous branch).
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Domain(format!("Γ has a pole at {z}")));
    }
    if z.re < 0.5 {
        return Ok(gamma(z)?.ln());
    }
    let shift = (SHIFT_TO - z.re).ceil().max(0.0) as usize;
    let mut denom = Complex64::new(0.0, 0.0);
    for k in 0..shift {
        denom += (z + k as f64).ln();
    }
    Ok(stirling(z + shift as f64) - denom)
}

/// Complex `Γ(z)` by reflection, upward shift and Stirling's series.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("Γ at non-finite argument {z}")));
    }
    if is_pole(z) {
        return Err(Error::Domain(format!("Γ has a pole at {z}")));
    }
    if z.re < 0.5 {
        let pi = std::f64::consts::PI;
        return Ok(pi / ((z * pi).sin() * gamma(1.0 - z)?));
    }
    let shift = (SHIFT_TO - z.re).ceil().max(0.0) as usize;
    let mut prod = Complex64::new(1.0, 0.0);
    for k in 0..shift {
        prod *= z + k as f64;
    }
    Ok(stirling(z + shift as f64).exp() / prod)
}
