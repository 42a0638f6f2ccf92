//! Nontrivial zeros from fixture files and the sums over them.
//!
//! All zeros are taken in GRH form `ρ = 1/2 ± iγ`. A file lists the positive
//! ordinates `γ` of one `L(s, ψ)`; the zeros of `L(s, ψ)` below the real
//! axis are the conjugates of the zeros of `L(s, ψ̄)`, so for complex `ψ` they
//! are read from the file of `ψ̄`.
//!
//! # File format
//!
//! UTF-8 text. Lines starting with `#` are header or comment lines; the keys
//! `label=`, `source=` and `complete_to=` are recognized. Every other
//! nonblank line holds one ordinate, strictly ascending, positive, written
//! with at least 12 significant digits. `complete_to` claims that every zero
//! with `0 < γ ≤ complete_to` is listed.

mod list;
mod sums;

pub use list::{load_zeros, parse_zeros, zero_key, ZeroBank, ZeroList, MIN_SIGNIFICANT_DIGITS};
pub use sums::{explicit_psi_rhs, zero_reciprocal_sum, zero_sum_s, ExplicitRhs, ZeroSum, POLE_GUARD};
