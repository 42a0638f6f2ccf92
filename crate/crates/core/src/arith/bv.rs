//! Bombieri–Vinogradov type maxima.

use rayon::prelude::*;

use super::{euler_phi, gcd, sieve, PrimeTable};
use crate::numeric::NeumaierSum;
use crate::{Error, Result};

/// `Σ_{q ≤ Q} max_{y ≤ x} max_{(a,q)=1} |θ(y; q, a) − y/φ(q)|`.
///
/// `θ(y; q, a) − y/φ(q)` is piecewise linear and decreasing between primes,
/// so the supremum over real `y ≤ x` is attained as a one-sided limit at a
/// prime `p ≡ a (mod q)` or at `y = x`. Both one-sided limits are evaluated.
pub fn bv_sum(x: f64, big_q: u64) -> Result<f64> {
    if !x.is_finite() || x < 2.0 {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    bv_sum_from(&sieve(x.floor() as u64)?, x, big_q)
}

pub fn bv_sum_from(primes: &PrimeTable, x: f64, big_q: u64) -> Result<f64> {
    if !x.is_finite() || x < 2.0 {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    if big_q == 0 {
        return Err(Error::InvalidArgument("Q must be ≥ 1".into()));
    }
    let n = x.floor() as u64;
    primes.ensure_covers(n)?;
    let ps = primes.up_to(n);
    let terms: Vec<f64> = (1..=big_q).into_par_iter().map(|q| max_deviation(ps, x, q)).collect();
    Ok(terms.into_iter().collect::<NeumaierSum>().value())
}

fn max_deviation(primes: &[u64], x: f64, q: u64) -> f64 {
    let phi = euler_phi(q) as f64;
    let mut theta = vec![NeumaierSum::new(); q as usize];
    let mut best = 0.0f64;
    for &p in primes {
        let r = (p % q) as usize;
        if gcd(r as u64, q) != 1 {
            continue;
        }
        let y = p as f64 / phi;
        best = best.max((y - theta[r].value()).abs());
        theta[r].add((p as f64).ln());
        best = best.max((y - theta[r].value()).abs());
    }
    for a in 0..q {
        if gcd(a, q) == 1 {
            best = best.max((x / phi - theta[a as usize].value()).abs());
        }
    }
    best
}
