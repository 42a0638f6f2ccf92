//! Partial Euler products of Dirichlet L-functions.
//!
//! The crate computes both sides of the GRH asymptotics for
//! `Π_{p ≤ x} (1 − χ(p) p^{−s})^{−1}`: the left-hand side directly from a
//! segmented prime sieve, and the right-hand side term by term from
//! Chebyshev functions in progressions, complex logarithmic integrals,
//! `L`-values and sums over nontrivial zeros.
//!
//! Module map:
//!
//! * [`arith`] sieving, Chebyshev functions in progressions, Möbius/Liouville tables
//! * [`characters`] Dirichlet characters with exact root-of-unity values
//! * [`special`] `Ei`, `Li(x^w)` and complex `Γ`
//! * [`lfunc`] Hurwitz zeta, `L(s, χ)`, Taylor data and the functional equation
//! * [`zeros`] zero fixtures and zero sums
//! * [`asymptotics`] partial products, right-hand sides, DRH ratios and sweeps
//! * [`verify`] the acceptance criteria as runnable checks

pub mod arith;
pub mod asymptotics;
pub mod characters;
mod error;
pub mod lfunc;
pub mod numeric;
pub mod special;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use num_complex::Complex64;
