//! `L(s, χ)` through the Hurwitz zeta function, its Taylor data and the
//! completed function `Λ(s, χ)`.

mod completed;
mod hurwitz;
mod lvalue;
mod taylor;

pub use completed::{completed, functional_residual};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_regular};
pub use lvalue::{l_value, l_value_series, log_l, LMethod, LValue};
pub use taylor::{
    l_derivative, taylor_coefficients, taylor_on_line, vanishing_order, ContourSpec, TaylorData, MAX_ORDER,
    VANISHING_THRESHOLD,
};
