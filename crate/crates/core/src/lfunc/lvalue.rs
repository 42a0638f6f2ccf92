use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::hurwitz_zeta_regular;
use crate::characters::DirichletCharacter;
use crate::numeric::ComplexSum;
use crate::special::ComplexPoint;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LMethod {
    Hurwitz,
    Series,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LValue {
    pub s: ComplexPoint,
    pub chi: String,
    pub value: Complex64,
    pub method: LMethod,
    pub est_error: f64,
}

/// `L(s, χ) = q^{−s} Σ_{a=1}^{q} χ(a) ζ(s, a/q)`.
///
/// The pole of each `ζ(s, a/q)` is split off, so `L(1, χ)` is finite for
/// non-principal `χ`.
pub fn l_value(s: Complex64, chi: &DirichletCharacter) -> Result<LValue> {
    let q = chi.modulus();
    let one = Complex64::new(1.0, 0.0);
    if chi.is_principal() && s == one {
        return Err(Error::Pole(format!("L(s, {}) has a pole at s = 1", chi.label())));
    }
    let mut sum = ComplexSum::new();
    let mut err = 0.0;
    let mut mass = 0.0;
    for a in 1..=q {
        let c = chi.value(a);
        if c.norm() == 0.0 {
            continue;
        }
        let (z, e) = hurwitz_zeta_regular(s, a as f64 / q as f64)?;
        sum.add(c * z);
        err += e;
        mass += 1.0;
    }
    if chi.is_principal() {
        sum.add(mass / (s - one));
    }
    let scale = (-s * (q as f64).ln()).exp();
    let value = scale * sum.value();
    Ok(LValue {
        s: s.into(),
        chi: chi.label().to_string(),
        value,
        method: LMethod::Hurwitz,
        est_error: err * scale.norm(),
    })
}

/// Direct partial sum `Σ_{n ≤ terms} χ(n) n^{−s}`; needs `Re s > 1`.
pub fn l_value_series(s: Complex64, chi: &DirichletCharacter, terms: u64) -> Result<LValue> {
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("Dirichlet series diverges at Re s = {}", s.re)));
    }
    let mut sum = ComplexSum::new();
    for n in 1..=terms {
        let c = chi.value(n);
        if c.norm() != 0.0 {
            sum.add(c * (-s * (n as f64).ln()).exp());
        }
    }
    let tail = (terms as f64).powf(1.0 - s.re) / (s.re - 1.0);
    Ok(LValue {
        s: s.into(),
        chi: chi.label().to_string(),
        value: sum.value(),
        method: LMethod::Series,
        est_error: tail,
    })
}

/// `log L(s, χ)` on the branch obtained by continuation along the horizontal
/// segment from `Re s = 3` (where it equals the Dirichlet-series logarithm).
///
/// For a principal character at real `s` the principal logarithm is returned;
/// the horizontal path would cross the pole at `s = 1`.
pub fn log_l(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    let eval = |sigma: f64| -> Result<Complex64> {
        let v = l_value(Complex64::new(sigma, s.im), chi)?.value;
        if v.norm() == 0.0 {
            return Err(Error::Domain(format!("L(s, {}) vanishes at {sigma} + {}i", chi.label(), s.im)));
        }
        Ok(v)
    };
    if chi.is_principal() && s.im == 0.0 {
        return Ok(eval(s.re)?.ln());
    }
    let mut sigma = s.re.max(3.0);
    let mut prev = eval(sigma)?;
    let mut arg = prev.arg();
    let mut step = 0.25;
    while sigma > s.re {
        let next = (sigma - step).max(s.re);
        let v = eval(next)?;
        let d = (v / prev).arg();
        if d.abs() > 0.5 && step > 1e-9 {
            step *= 0.5;
            continue;
        }
        arg += d;
        prev = v;
        sigma = next;
        step = (step * 1.5).min(0.25);
    }
    Ok(Complex64::new(prev.norm().ln(), arg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(s: &str) -> DirichletCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn chi4_values() {
        let c = chi("4.1");
        let v1 = l_value(Complex64::new(1.0, 0.0), &c).unwrap();
        assert!((v1.value.re - std::f64::consts::FRAC_PI_4).abs() < 1e-13);
        assert_eq!(v1.method, LMethod::Hurwitz);
        let vh = l_value(Complex64::new(0.5, 0.0), &c).unwrap().value;
        assert!((vh.re - 0.667_691_457_189_609_2).abs() < 1e-13);
    }

    #[test]
    fn principal_pole() {
        assert!(l_value(Complex64::new(1.0, 0.0), &chi("1.0")).is_err());
        assert!(l_value(Complex64::new(1.0, 0.0), &chi("3.0")).is_err());
        // L(2, χ₀ mod 3) = (1 − 1/9) ζ(2)
        let v = l_value(Complex64::new(2.0, 0.0), &chi("3.0")).unwrap().value;
        assert!((v.re - 8.0 / 9.0 * std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13);
    }

    #[test]
    fn log_branch_is_continuous_from_the_right() {
        let c = chi("5.1");
        let s = Complex64::new(0.6, 30.0);
        let l = log_l(s, &c).unwrap();
        let v = l_value(s, &c).unwrap().value;
        assert!((l.exp() - v).norm() < 1e-10 * v.norm());
        // at Re s ≥ 3 the branch is the principal one
        let s3 = Complex64::new(3.0, 7.0);
        assert!((log_l(s3, &c).unwrap() - l_value(s3, &c).unwrap().value.ln()).norm() < 1e-14);
    }
}
