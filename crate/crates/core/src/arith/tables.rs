//! Linear-sieve tables of multiplicative and additive functions.

use crate::{Error, Result};

/// `μ`, `λ`, `ω`, `Ω`, `Λ` for all `1 ≤ n ≤ limit`.
#[derive(Clone, Debug)]
pub struct ArithTables {
    limit: usize,
    moebius: Vec<i8>,
    big_omega: Vec<u8>,
    small_omega: Vec<u8>,
    /// Prime `p` if `n` is a power of `p`, else 0.
    prime_power_base: Vec<u32>,
}

impl ArithTables {
    pub fn new(limit: u64) -> Result<Self> {
        if limit > u32::MAX as u64 {
            return Err(Error::Resource(format!("table limit {limit} exceeds 2^32 − 1")));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        let mut moebius = vec![0i8; n + 1];
        let mut big_omega = vec![0u8; n + 1];
        let mut small_omega = vec![0u8; n + 1];
        let mut base = vec![0u32; n + 1];
        if n >= 1 {
            moebius[1] = 1;
        }
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
                moebius[i] = -1;
                big_omega[i] = 1;
                small_omega[i] = 1;
                base[i] = i as u32;
            }
            for &p in &primes {
                let m = i * p as usize;
                if p > spf[i] || m > n {
                    break;
                }
                spf[m] = p;
                big_omega[m] = big_omega[i] + 1;
                if p == spf[i] {
                    moebius[m] = 0;
                    small_omega[m] = small_omega[i];
                    base[m] = if base[i] == p { p } else { 0 };
                } else {
                    moebius[m] = -moebius[i];
                    small_omega[m] = small_omega[i] + 1;
                }
            }
        }
        Ok(Self {
            limit: n,
            moebius,
            big_omega,
            small_omega,
            prime_power_base: base,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit as u64
    }

    pub fn moebius(&self, n: u64) -> i8 {
        self.moebius[n as usize]
    }

    pub fn liouville(&self, n: u64) -> i8 {
        if self.big_omega[n as usize] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn big_omega(&self, n: u64) -> u8 {
        self.big_omega[n as usize]
    }

    pub fn small_omega(&self, n: u64) -> u8 {
        self.small_omega[n as usize]
    }

    pub fn mangoldt(&self, n: u64) -> f64 {
        match self.prime_power_base[n as usize] {
            0 => 0.0,
            p => (p as f64).ln(),
        }
    }

    /// `M(x) = Σ_{n ≤ x} μ(n)`.
    pub fn mertens(&self, x: u64) -> i64 {
        (1..=x.min(self.limit as u64)).map(|n| self.moebius(n) as i64).sum()
    }

    /// `L(x) = Σ_{n ≤ x} λ(n)`.
    pub fn liouville_sum(&self, x: u64) -> i64 {
        (1..=x.min(self.limit as u64)).map(|n| self.liouville(n) as i64).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorize, mobius};

    #[test]
    fn agrees_with_factorization() {
        let t = ArithTables::new(2000).unwrap();
        for n in 1..=2000u64 {
            let f = factorize(n);
            assert_eq!(t.moebius(n), mobius(n), "mu({n})");
            assert_eq!(t.small_omega(n) as usize, f.len());
            assert_eq!(t.big_omega(n) as u32, f.iter().map(|&(_, e)| e).sum::<u32>());
            let lam = if f.len() == 1 { (f[0].0 as f64).ln() } else { 0.0 };
            assert_eq!(t.mangoldt(n), lam, "Lambda({n})");
        }
    }

    #[test]
    fn known_summatory_values() {
        let t = ArithTables::new(1000).unwrap();
        assert_eq!(t.mertens(10), -1);
        assert_eq!(t.mertens(100), 1);
        assert_eq!(t.mertens(1000), 2);
        assert_eq!(t.liouville_sum(10), 0);
        assert_eq!(t.liouville_sum(100), -2);
    }
}
