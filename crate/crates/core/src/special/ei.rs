use num_complex::Complex64;

use crate::numeric::{ComplexSum, EULER_GAMMA};
use crate::{Error, Result};

/// `|z|` beyond which the asymptotic expansion is used.
pub const EI_CROSSOVER: f64 = 40.0;

/// Inside the crossover disk, points with `|z| − Re z` above this use the
/// continued fraction: the power series would cancel catastrophically there.
const CF_THRESHOLD: f64 = 6.0;

const MAX_TERMS: usize = 2000;

fn i_pi_sign(z: Complex64) -> Complex64 {
    if z.im > 0.0 {
        Complex64::new(0.0, std::f64::consts::PI)
    } else if z.im < 0.0 {
        Complex64::new(0.0, -std::f64::consts::PI)
    } else {
        Complex64::new(0.0, 0.0)
    }
}

/// Principal-branch `Ei(z)`. On the negative real axis the real part is returned.
pub fn ei(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("Ei at non-finite argument {z}")));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("Ei has a logarithmic singularity at 0".into()));
    }
    let r = z.norm();
    Ok(if r > EI_CROSSOVER {
        ei_asymptotic(z)
    } else if r - z.re > CF_THRESHOLD {
        ei_continued_fraction(z)
    } else {
        ei_series(z)
    })
}

/// `γ + Log z + Σ z^k/(k·k!)`, with `log|z|` on the negative real axis.
pub fn ei_series(z: Complex64) -> Complex64 {
    let log = if z.im == 0.0 && z.re < 0.0 {
        Complex64::new((-z.re).ln(), 0.0)
    } else {
        z.ln()
    };
    let mut sum = ComplexSum::new();
    let mut t = Complex64::new(1.0, 0.0);
    for k in 1..MAX_TERMS {
        t *= z / k as f64;
        let term = t / k as f64;
        sum.add(term);
        if k as f64 > z.norm() && term.norm() <= 1e-17 * sum.value().norm() {
            break;
        }
    }
    sum.value() + log + EULER_GAMMA
}

/// `e^z/z · Σ k!/z^k + iπ sgn(Im z)`, summed until the terms stop decreasing.
pub fn ei_asymptotic(z: Complex64) -> Complex64 {
    let mut sum = ComplexSum::new();
    let mut t = Complex64::new(1.0, 0.0);
    sum.add(t);
    for k in 1..MAX_TERMS {
        let next = t * (k as f64) / z;
        if next.norm() >= t.norm() {
            break;
        }
        t = next;
        sum.add(t);
        if t.norm() < 1e-18 {
            break;
        }
    }
    z.exp() / z * sum.value() + i_pi_sign(z)
}

/// `−E₁(−z) + iπ sgn(Im z)` with `E₁` from its continued fraction (modified Lentz).
pub fn ei_continued_fraction(z: Complex64) -> Complex64 {
    let w = -z;
    let tiny = 1e-300;
    let mut b = w + 1.0;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_TERMS {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (d * a + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    let e1 = h * (-w).exp();
    -e1 + i_pi_sign(z)
}

/// `Li(x^w) = Ei(w log x)`.
pub fn li_power(x: f64, w: Complex64) -> Result<Complex64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Li(x^w) needs x > 0, got {x}")));
    }
    if x == 1.0 {
        return Err(Error::Domain("Li(1) diverges".into()));
    }
    if w.norm() == 0.0 {
        return Err(Error::Domain("Li(x^0) = Li(1) diverges".into()));
    }
    ei(w * x.ln())
}

/// `(Li(1+h) − log|h|) − γ`, from the series for `Ei(log(1+h))`.
pub fn li_gamma_residual(h: f64) -> Result<f64> {
    if h == 0.0 {
        return Err(Error::Domain("h = 0".into()));
    }
    if !(h.abs() < 0.5) {
        return Err(Error::InvalidArgument(format!("need 0 < |h| < 0.5, got {h}")));
    }
    let u = h.ln_1p();
    // log|u| − log|h| = log(log(1+h)/h)
    let mut acc = (u / h).ln();
    let mut t = 1.0;
    for k in 1..200 {
        t *= u / k as f64;
        let term = t / k as f64;
        acc += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LI2: f64 = 1.045_163_780_117_492_8;

    #[test]
    fn li2() {
        let v = ei(Complex64::new(2f64.ln(), 0.0)).unwrap();
        assert!((v.re - LI2).abs() < 1e-14 && v.im == 0.0);
        assert!((li_power(2.0, Complex64::new(1.0, 0.0)).unwrap().re - LI2).abs() < 1e-14);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(ei(Complex64::new(0.0, 0.0)).is_err());
        assert!(li_power(1.0, Complex64::new(0.5, 0.0)).is_err());
        assert!(li_gamma_residual(0.0).is_err());
    }

    #[test]
    fn negative_axis_real_values() {
        // E1(1) = 0.21938393439552027368
        let v = ei(Complex64::new(-1.0, 0.0)).unwrap();
        assert!((v.re + 0.219_383_934_395_520_27).abs() < 1e-15 && v.im == 0.0);
        // E1(10) = 4.1569689296853242774e-6
        let v = ei(Complex64::new(-10.0, 0.0)).unwrap();
        assert!((v.re + 4.156_968_929_685_324e-6).abs() < 1e-19);
    }

    #[test]
    fn residual_small_h() {
        assert!(li_gamma_residual(1e-8).unwrap().abs() < 1e-6);
        assert!(li_gamma_residual(-1e-8).unwrap().abs() < 1e-6);
        assert!(li_gamma_residual(0.1).unwrap().abs() < 0.06);
    }
}
