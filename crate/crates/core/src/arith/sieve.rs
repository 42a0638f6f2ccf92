//! Segmented sieve of Eratosthenes.

use rayon::prelude::*;

use crate::{Error, Result};

/// Default segment length (numbers per segment).
pub const DEFAULT_SEGMENT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveConfig {
    /// Numbers per segment.
    pub segment_size: usize,
    /// Upper bound in bytes for the materialized prime list plus working buffers.
    pub memory_budget: usize,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            segment_size: DEFAULT_SEGMENT,
            memory_budget: 2 << 30,
        }
    }
}

/// All primes `≤ limit`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Primes `≤ x`. `x` may exceed the limit, in which case the whole table is returned.
    pub fn up_to(&self, x: u64) -> &[u64] {
        &self.primes[..self.primes.partition_point(|&p| p <= x)]
    }

    pub fn count_up_to(&self, x: u64) -> usize {
        self.up_to(x).len()
    }

    /// Membership test; only meaningful for `n ≤ limit`.
    pub fn contains(&self, n: u64) -> bool {
        debug_assert!(n <= self.limit);
        self.primes.binary_search(&n).is_ok()
    }

    /// Checks that `x` is covered by this table.
    pub fn ensure_covers(&self, x: u64) -> Result<()> {
        if x > self.limit {
            Err(Error::InvalidArgument(format!(
                "prime table covers x ≤ {}, requested {x}",
                self.limit
            )))
        } else {
            Ok(())
        }
    }
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn small_primes(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut mark = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if mark[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                mark[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Sieve `[lo, hi)` with the given base primes (which must cover `√hi`).
fn sieve_segment<'a>(lo: u64, hi: u64, base: &[u64], buf: &'a mut Vec<bool>) -> impl Iterator<Item = u64> + 'a {
    buf.clear();
    buf.resize((hi - lo) as usize, true);
    for &p in base {
        if p * p >= hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m < hi {
            buf[(m - lo) as usize] = false;
            m += p;
        }
    }
    buf.iter()
        .enumerate()
        .filter(move |&(i, &b)| b && lo + i as u64 >= 2)
        .map(move |(i, _)| lo + i as u64)
}

fn prime_count_upper(x: u64) -> u64 {
    if x < 17 {
        return 7;
    }
    let xf = x as f64;
    (1.25506 * xf / xf.ln()).ceil() as u64
}

fn segments(x: u64, size: usize) -> Vec<(u64, u64)> {
    let size = size as u64;
    let end = x + 1;
    (0..end.div_ceil(size))
        .map(|i| (i * size, ((i + 1) * size).min(end)))
        .collect()
}

fn check_config(cfg: &SieveConfig) -> Result<()> {
    if cfg.segment_size == 0 {
        return Err(Error::InvalidArgument("segment size must be positive".into()));
    }
    Ok(())
}

pub fn sieve(x: u64) -> Result<PrimeTable> {
    sieve_with(x, &SieveConfig::default())
}

/// Materializes all primes `≤ x`. Segments are processed in parallel and
/// concatenated in order, so the result is independent of scheduling.
pub fn sieve_with(x: u64, cfg: &SieveConfig) -> Result<PrimeTable> {
    check_config(cfg)?;
    let need = prime_count_upper(x) as usize * std::mem::size_of::<u64>()
        + cfg.segment_size * rayon::current_num_threads();
    if need > cfg.memory_budget {
        return Err(Error::Resource(format!(
            "sieving to {x} needs about {need} bytes, budget is {}",
            cfg.memory_budget
        )));
    }
    let base = small_primes(isqrt(x));
    let parts: Vec<Vec<u64>> = segments(x, cfg.segment_size)
        .into_par_iter()
        .map_init(Vec::new, |buf, (lo, hi)| sieve_segment(lo, hi, &base, buf).collect())
        .collect();
    let mut primes = Vec::with_capacity(parts.iter().map(Vec::len).sum());
    for p in parts {
        primes.extend(p);
    }
    Ok(PrimeTable { limit: x, primes })
}

/// `π(x)` without materializing the primes.
pub fn count_primes(x: u64, cfg: &SieveConfig) -> Result<u64> {
    check_config(cfg)?;
    let base = small_primes(isqrt(x));
    Ok(segments(x, cfg.segment_size)
        .into_par_iter()
        .map_init(Vec::new, |buf, (lo, hi)| sieve_segment(lo, hi, &base, buf).count() as u64)
        .sum())
}

/// Streams the primes `≤ x` one segment at a time, in ascending order.
pub struct PrimeSegments {
    base: Vec<u64>,
    bounds: std::vec::IntoIter<(u64, u64)>,
    buf: Vec<bool>,
}

impl PrimeSegments {
    pub fn new(x: u64, cfg: &SieveConfig) -> Result<Self> {
        check_config(cfg)?;
        Ok(Self {
            base: small_primes(isqrt(x)),
            bounds: segments(x, cfg.segment_size).into_iter(),
            buf: Vec::new(),
        })
    }
}

impl Iterator for PrimeSegments {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let (lo, hi) = self.bounds.next()?;
        Some(sieve_segment(lo, hi, &self.base, &mut self.buf).collect())
    }
}
