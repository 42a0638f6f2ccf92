use num_complex::Complex64;

use crate::arith::{sieve, ArithTables};
use crate::numeric::{ComplexSum, NeumaierSum};
use crate::{Error, Result};

/// `P_x(s) = exp(Σ_{2 ≤ n ≤ x} Λ(n)/(n^s log n))`.
pub fn p_x(s: Complex64, x: f64) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("invalid x = {x}")));
    }
    if x < 2.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let n = x.floor() as u64;
    let t = ArithTables::new(n)?;
    let mut acc = ComplexSum::new();
    for k in 2..=n {
        let lam = t.mangoldt(k);
        if lam != 0.0 {
            let ln = (k as f64).ln();
            acc.add((-s * ln).exp() * (lam / ln));
        }
    }
    Ok(acc.value().exp())
}

/// `(Σ_{p ≤ x} Σ_{k ≥ 1} 1/(k p^{k/2}) − Σ_{2 ≤ n ≤ x} Λ(n)/(√n log n)) − log √2`,
/// with the inner `k`-sum stopped once `p^{k/2} > 10^{16}`.
pub fn sqrt2_log_residual(x: f64) -> Result<f64> {
    if !(x.is_finite() && x >= 2.0) {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    let n = x.floor() as u64;
    let primes = sieve(n)?;
    let mut full = NeumaierSum::new();
    for &p in primes.primes() {
        let root = (p as f64).sqrt();
        let mut pk = root;
        let mut k = 1u32;
        while pk <= 1e16 {
            full.add(1.0 / (k as f64 * pk));
            k += 1;
            pk *= root;
        }
    }
    let t = ArithTables::new(n)?;
    let mut partial = NeumaierSum::new();
    for m in 2..=n {
        let lam = t.mangoldt(m);
        if lam != 0.0 {
            let mf = m as f64;
            partial.add(lam / (mf.sqrt() * mf.ln()));
        }
    }
    Ok(full.value() - partial.value() - std::f64::consts::SQRT_2.ln())
}
