//! Chebyshev functions in arithmetic progressions and summatory functions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{euler_phi, gcd, sieve, ArithTables, PrimeTable};
use crate::characters::DirichletCharacter;
use crate::numeric::{ComplexSum, NeumaierSum};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidueClass {
    pub a: u64,
    /// `θ(x; q, a)`
    pub theta: f64,
    /// `ψ(x; q, a)`
    pub psi: f64,
    /// `π(x; q, a)`
    pub pi: u64,
    /// `θ(x; q, a) − x/φ(q)`
    pub remainder: f64,
}

/// Prime statistics up to `x` split by reduced residue class mod `q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeSummary {
    pub x: f64,
    pub q: u64,
    pub phi: u64,
    /// One row per `a` coprime to `q`, ascending in `a`.
    pub classes: Vec<ResidueClass>,
    /// Number of primes `≤ x` dividing `q`; they lie in no reduced class.
    pub primes_dividing_q: u64,
}

impl PrimeSummary {
    pub fn class(&self, a: u64) -> Option<&ResidueClass> {
        let a = a % self.q;
        self.classes.binary_search_by_key(&a, |c| c.a).ok().map(|i| &self.classes[i])
    }

    pub fn max_abs_remainder(&self) -> f64 {
        self.classes.iter().map(|c| c.remainder.abs()).fold(0.0, f64::max)
    }
}

fn check_x(x: f64) -> Result<u64> {
    if !x.is_finite() || x < 2.0 {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    Ok(x.floor() as u64)
}

pub fn chebyshev_ap(x: f64, q: u64) -> Result<PrimeSummary> {
    let n = check_x(x)?;
    chebyshev_ap_from(&sieve(n)?, x, q)
}

pub fn chebyshev_ap_from(primes: &PrimeTable, x: f64, q: u64) -> Result<PrimeSummary> {
    let n = check_x(x)?;
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be ≥ 1".into()));
    }
    primes.ensure_covers(n)?;
    let qi = q as usize;
    let mut theta = vec![NeumaierSum::new(); qi];
    let mut psi = vec![NeumaierSum::new(); qi];
    let mut count = vec![0u64; qi];
    let mut dividing = 0u64;
    for &p in primes.up_to(n) {
        if q % p == 0 {
            dividing += 1;
            continue;
        }
        let lp = (p as f64).ln();
        let r = (p % q) as usize;
        theta[r].add(lp);
        count[r] += 1;
        let mut pk = p as u128;
        while pk <= n as u128 {
            psi[(pk % q as u128) as usize].add(lp);
            pk *= p as u128;
        }
    }
    let phi = euler_phi(q);
    let classes = (0..q)
        .filter(|&a| gcd(a, q) == 1)
        .map(|a| {
            let t = theta[a as usize].value();
            ResidueClass {
                a,
                theta: t,
                psi: psi[a as usize].value(),
                pi: count[a as usize],
                remainder: t - x / phi as f64,
            }
        })
        .collect();
    Ok(PrimeSummary {
        x,
        q,
        phi,
        classes,
        primes_dividing_q: dividing,
    })
}

/// `ψ(x, χ) = Σ_{p^k ≤ x} χ(p^k) log p`.
pub fn psi_twisted(x: f64, chi: &DirichletCharacter) -> Result<Complex64> {
    let n = check_x(x)?;
    psi_twisted_from(&sieve(n)?, x, chi)
}

pub fn psi_twisted_from(primes: &PrimeTable, x: f64, chi: &DirichletCharacter) -> Result<Complex64> {
    let n = check_x(x)?;
    primes.ensure_covers(n)?;
    let q = chi.modulus() as u128;
    let mut acc = ComplexSum::new();
    for &p in primes.up_to(n) {
        let lp = (p as f64).ln();
        let mut pk = p as u128;
        while pk <= n as u128 {
            acc.add(chi.value((pk % q) as u64) * lp);
            pk *= p as u128;
        }
    }
    Ok(acc.value())
}

/// Which summatory function [`summatory`] evaluates.
#[derive(Clone, Copy, Debug)]
pub enum Summatory<'a> {
    /// `Σ μ(n)`
    Mertens,
    /// `Σ λ(n)`
    Liouville,
    /// `Σ χ(n) μ(n)`
    MertensTwisted(&'a DirichletCharacter),
}

pub fn summatory(x: f64, kind: Summatory<'_>) -> Result<Complex64> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::InvalidArgument(format!("x must be ≥ 1, got {x}")));
    }
    let n = x.floor() as u64;
    let t = ArithTables::new(n)?;
    Ok(match kind {
        Summatory::Mertens => Complex64::new(t.mertens(n) as f64, 0.0),
        Summatory::Liouville => Complex64::new(t.liouville_sum(n) as f64, 0.0),
        Summatory::MertensTwisted(chi) => {
            let mut acc = ComplexSum::new();
            for k in 1..=n {
                let mu = t.moebius(k);
                if mu != 0 {
                    acc.add(chi.value(k) * mu as f64);
                }
            }
            acc.value()
        }
    })
}

pub fn mertens(x: f64) -> Result<i64> {
    summatory(x, Summatory::Mertens).map(|z| z.re as i64)
}

pub fn liouville_sum(x: f64) -> Result<i64> {
    summatory(x, Summatory::Liouville).map(|z| z.re as i64)
}

pub fn mertens_twisted(x: f64, chi: &DirichletCharacter) -> Result<Complex64> {
    summatory(x, Summatory::MertensTwisted(chi))
}

/// `σ_{−s}(n) = Σ_{d | n} d^{−s}`.
pub fn divisor_sigma(n: u64, s: Complex64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be ≥ 1".into()));
    }
    Ok(super::divisors(n)
        .into_iter()
        .map(|d| (-s * (d as f64).ln()).exp())
        .collect::<ComplexSum>()
        .value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_x() {
        assert!(chebyshev_ap(1.5, 4).is_err());
        assert!(chebyshev_ap(100.0, 0).is_err());
    }

    #[test]
    fn theta_mod_one_is_theta() {
        let s = chebyshev_ap(30.0, 1).unwrap();
        let expect: f64 = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29].iter().map(|&p| (p as f64).ln()).sum();
        assert!((s.classes[0].theta - expect).abs() < 1e-12);
        assert_eq!(s.classes[0].pi, 10);
    }

    #[test]
    fn divisor_sigma_at_zero_counts_divisors() {
        assert_eq!(divisor_sigma(12, Complex64::new(0.0, 0.0)).unwrap().re, 6.0);
        let v = divisor_sigma(6, Complex64::new(-1.0, 0.0)).unwrap();
        assert!((v.re - 12.0).abs() < 1e-12);
    }
}
