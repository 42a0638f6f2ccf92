use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{sieve, PrimeTable};
use crate::characters::DirichletCharacter;
use crate::numeric::{ln_1p, ComplexSum};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartialProduct {
    /// `Π_{p ≤ x} (1 − χ(p)p^{−s})^{−1}`
    pub value: Complex64,
    /// `Σ_{p ≤ x} −Log(1 − χ(p)p^{−s})`
    pub log: Complex64,
    pub primes: usize,
}

fn check(s: Complex64, x: f64) -> Result<u64> {
    if s.norm() == 0.0 || !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("invalid s = {s}")));
    }
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::InvalidArgument(format!("invalid x = {x}")));
    }
    Ok(x.floor() as u64)
}

pub fn partial_product(s: Complex64, chi: &DirichletCharacter, x: f64) -> Result<PartialProduct> {
    let n = check(s, x)?;
    partial_product_from(&sieve(n)?, s, chi, x)
}

pub fn partial_product_from(primes: &PrimeTable, s: Complex64, chi: &DirichletCharacter, x: f64) -> Result<PartialProduct> {
    let n = check(s, x)?;
    primes.ensure_covers(n)?;
    let ps = primes.up_to(n);
    let mut acc = ComplexSum::new();
    for &p in ps {
        let c = chi.value(p);
        if c.norm() == 0.0 {
            continue;
        }
        let w = -c * (-s * (p as f64).ln()).exp();
        if (w + 1.0).norm() == 0.0 {
            return Err(Error::Pole(format!("factor at p = {p} vanishes")));
        }
        acc.add(-ln_1p(w));
    }
    let log = acc.value();
    Ok(PartialProduct {
        value: log.exp(),
        log,
        primes: ps.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_small_products() {
        let c4: DirichletCharacter = "4.1".parse().unwrap();
        let p = partial_product(Complex64::new(2.0, 0.0), &c4, 1.0).unwrap();
        assert_eq!((p.value, p.log, p.primes), (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), 0));
        let one: DirichletCharacter = "1.0".parse().unwrap();
        let p = partial_product(Complex64::new(1.0, 0.0), &one, 10.0).unwrap();
        assert!((p.value.re - 4.375).abs() < 1e-13);
        assert!(partial_product(Complex64::new(0.0, 0.0), &one, 10.0).is_err());
    }
}
