use num_complex::Complex64;

use crate::numeric::{exprel, ComplexSum};
use crate::{Error, Result};

/// `B_{2j}` for `j = 1..=20`.
const BERNOULLI: [f64; 20] = [
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
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
];

fn check_a(a: f64) -> Result<()> {
    if a > 0.0 && a <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("Hurwitz parameter must lie in (0, 1], got {a}")))
    }
}

/// `ζ(s, a) − 1/(s − 1)`, entire in `s`, with an error estimate.
///
/// Euler–Maclaurin with `N = ⌈|s|⌉ + 20` explicit terms and up to 20
/// Bernoulli corrections.
pub fn hurwitz_zeta_regular(s: Complex64, a: f64) -> Result<(Complex64, f64)> {
    check_a(a)?;
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite s = {s}")));
    }
    let n = s.norm().ceil() as usize + 20;
    let mut sum = ComplexSum::new();
    let mut scale = 0.0;
    for k in 0..n {
        let t = (-s * (k as f64 + a).ln()).exp();
        scale += t.norm();
        sum.add(t);
    }
    let na = n as f64 + a;
    let l = na.ln();
    let na_s = (-s * l).exp();
    sum.add(-l * exprel((1.0 - s) * l));
    sum.add(0.5 * na_s);
    let mut poch = s * na_s / na;
    let mut fact = 2.0;
    let mut last = f64::INFINITY;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let term = poch * (b / fact);
        sum.add(term);
        last = term.norm();
        if last <= 1e-17 * sum.value().norm() {
            break;
        }
        let k = 2.0 * (j + 1) as f64;
        poch *= (s + k - 1.0) * (s + k) / (na * na);
        fact *= (k + 1.0) * (k + 2.0);
    }
    let value = sum.value();
    Ok((value, last + 4.0 * f64::EPSILON * scale.max(value.norm())))
}

/// `ζ(s, a) = Σ_{n ≥ 0} (n + a)^{−s}` continued to `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Domain("ζ(s, a) has a pole at s = 1".into()));
    }
    let (reg, _) = hurwitz_zeta_regular(s, a)?;
    Ok(reg + 1.0 / (s - 1.0))
}
