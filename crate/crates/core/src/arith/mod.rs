//! Prime sieving and arithmetic functions.

mod bv;
mod chebyshev;
mod nt;
mod sieve;
mod tables;

pub use bv::{bv_sum, bv_sum_from};
pub use chebyshev::{
    chebyshev_ap, chebyshev_ap_from, divisor_sigma, liouville_sum, mertens, mertens_twisted, psi_twisted,
    psi_twisted_from, summatory, PrimeSummary, ResidueClass, Summatory,
};
pub use nt::{divisors, euler_phi, factorize, gcd, is_prime_trial, mobius, pow_mod};
pub use sieve::{count_primes, sieve, sieve_with, PrimeSegments, PrimeTable, SieveConfig, DEFAULT_SEGMENT};
pub use tables::ArithTables;
