//! Dirichlet characters with exact values.
//!
//! Values are stored as rotations `e(k/n)` with `k/n` reduced, so products and
//! powers of characters are exact and orthogonality sums can be tallied
//! without rounding.
//!
//! # Labels
//!
//! `(Z/qZ)^×` is decomposed by the Chinese remainder theorem over the prime
//! powers of `q` in ascending order of the prime. Each odd `p^e` contributes
//! one cyclic component generated by the least primitive root mod `p^e`;
//! `4` contributes a component of order 2 generated by `3`; `2^e` with
//! `e ≥ 3` contributes the two components `⟨−1⟩` (order 2) and `⟨5⟩` (order
//! `2^{e−2}`), in that order. A character is an exponent vector `(k_j)` with
//! `χ(g_j) = e(k_j / n_j)`, and the label `q.i` encodes it as the mixed-radix
//! integer `i = k_0 + n_0 (k_1 + n_1 (k_2 + …))`. Index 0 is the principal
//! character; `4.1` is the nontrivial character mod 4 and `5.k` has
//! `χ(2) = e(k/4)`.

mod character;
mod counting;
mod gauss;
mod group;
mod rotation;

pub use character::{character, characters_mod, CharacterLabel, DirichletCharacter};
pub use counting::{delta2_formula, delta_m, delta_m_by_prime_powers, eta, orthogonality_sum, primitive_count};
pub use gauss::{gauss_and_epsilon, RootNumber};
pub use group::{Component, UnitGroup};
pub use rotation::Rotation;
