//! Independent reference computations used by the acceptance checks.
//!
//! Nothing here calls the sieve, the Hurwitz route or the Chebyshev tables;
//! primality is decided by trial division and series are summed directly.

use crate::arith::is_prime_trial;
use crate::numeric::NeumaierSum;

/// `Σ_{k ≥ 0} (−1)^k a_k` for a totally monotone `a`, by the Cohen–Villegas–Zagier
/// acceleration with `n` terms.
pub fn alternating_sum(a: impl Fn(usize) -> f64, n: usize) -> f64 {
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    let nf = n as f64;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        let kf = k as f64;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// `L(σ, χ₄) = Σ (−1)^k (2k+1)^{−σ}` for real `σ > 0`.
pub fn l_chi4_real(sigma: f64) -> f64 {
    alternating_sum(|k| (2.0 * k as f64 + 1.0).powf(-sigma), 60)
}

/// Catalan's constant `L(2, χ₄)`.
pub fn catalan() -> f64 {
    l_chi4_real(2.0)
}

/// `(θ, ψ, π)` of `x` in each class `a mod q`, by a loop over `n ≤ x` with trial division.
pub fn naive_chebyshev(x: u64, q: u64) -> Vec<(u64, f64, f64, u64)> {
    let mut theta = vec![NeumaierSum::new(); q as usize];
    let mut psi = vec![NeumaierSum::new(); q as usize];
    let mut count = vec![0u64; q as usize];
    for n in 2..=x {
        // smallest prime factor p; n is a prime power iff n is a power of p
        let p = (2..).take_while(|d| d * d <= n).find(|d| n % d == 0).unwrap_or(n);
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        if m != 1 || q % p == 0 {
            continue;
        }
        let r = (n % q) as usize;
        let lp = (p as f64).ln();
        psi[r].add(lp);
        if n == p {
            theta[r].add(lp);
            count[r] += 1;
        }
    }
    (0..q)
        .filter(|&a| crate::arith::gcd(a, q) == 1)
        .map(|a| {
            let i = a as usize;
            (a, theta[i].value(), psi[i].value(), count[i])
        })
        .collect()
}

/// Recomputes the Bombieri–Vinogradov maximum class by class: for each
/// `(q, a)` the primes of the class are listed, `θ` is accumulated along
/// them, and `|y/φ − θ(y)|` is taken just before and at each prime and at `y = x`.
pub fn naive_bv(x: f64, big_q: u64) -> f64 {
    let n = x.floor() as u64;
    let primes: Vec<u64> = (2..=n).filter(|&p| is_prime_trial(p)).collect();
    let mut total = NeumaierSum::new();
    for q in 1..=big_q {
        let phi = (1..=q).filter(|&a| crate::arith::gcd(a, q) == 1).count() as f64;
        let mut worst = 0.0f64;
        for a in (0..q).filter(|&a| crate::arith::gcd(a, q) == 1) {
            let class: Vec<u64> = primes.iter().copied().filter(|p| p % q == a).collect();
            let mut theta = NeumaierSum::new();
            for &p in &class {
                let y = p as f64 / phi;
                worst = worst.max((y - theta.value()).abs());
                theta.add((p as f64).ln());
                worst = worst.max((y - theta.value()).abs());
            }
            worst = worst.max((x / phi - theta.value()).abs());
        }
        total.add(worst);
    }
    total.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_sums() {
        // Leibniz and log 2
        assert!((alternating_sum(|k| 1.0 / (2 * k + 1) as f64, 40) - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!((alternating_sum(|k| 1.0 / (k + 1) as f64, 40) - std::f64::consts::LN_2).abs() < 1e-15);
        assert!((catalan() - 0.915_965_594_177_219).abs() < 1e-15);
    }
}
