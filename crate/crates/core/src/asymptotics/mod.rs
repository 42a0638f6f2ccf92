//! Partial Euler products and the right-hand sides of their GRH asymptotics.
//!
//! The logarithm of a partial product is the sum of the principal logarithms
//! of its factors, `Σ_{p ≤ x} −Log(1 − χ(p)p^{−s})`, which is continuous in
//! `x`; it is generally not the principal logarithm of the product.

mod drh;
mod moments;
mod point;
mod product;
mod rhs;
mod sweep;

pub use drh::{conrad_limit_check, drh_ratio, drh_sweep, DrhModel, DrhRatio};
pub use moments::{p_x, sqrt2_log_residual};
pub use point::{AimCase, EvalPoint};
pub use product::{partial_product, partial_product_from, PartialProduct};
pub use rhs::{
    rhs_aim, rhs_aim_with, rhs_ramanujan, rhs_ramanujan_with, CaseOneSigns, ChainBound, ChainTerm, LogLTerm,
    PowerTerm, RhsFlavor, RhsModel, RhsOptions, TermBreakdown, ZeroTerm,
};
pub use sweep::{sweep, SweepReport, SweepRow};
