use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{partial_product_from, AimCase, EvalPoint, RhsFlavor, RhsModel, RhsOptions};
use crate::arith::{chebyshev_ap_from, sieve};
use crate::characters::DirichletCharacter;
use crate::zeros::ZeroBank;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub x: f64,
    pub lhs_log: Complex64,
    pub rhs_log: Complex64,
    pub residual: Complex64,
    /// `max_a |θ(x; q, a) − x/φ(q)| / (√x log x)`
    pub e_ratio: f64,
    /// `|Σ_a χ(a) Li((φ(q)θ(x; q, a))^{1−s})|`
    pub li_sum_diag: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub point: EvalPoint,
    pub character: String,
    pub case_tag: AimCase,
    pub zeros_included: bool,
    pub rows: Vec<SweepRow>,
}

/// Validates a strictly ascending grid with all points `≥ 2`; returns `⌊max⌋`.
pub(crate) fn check_grid(grid: &[f64]) -> Result<u64> {
    let Some(&last) = grid.last() else {
        return Err(Error::InvalidArgument("empty x grid".into()));
    };
    if grid.iter().any(|x| !(x.is_finite() && *x >= 2.0)) {
        return Err(Error::InvalidArgument("grid points must be finite and ≥ 2".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("x grid must be strictly ascending".into()));
    }
    Ok(last.floor() as u64)
}

/// Left and right sides of the general formula along `grid`. Rows are computed
/// in parallel and reported in grid order.
pub fn sweep(
    point: EvalPoint,
    chi: &DirichletCharacter,
    grid: &[f64],
    zeros: Option<&ZeroBank>,
    opts: RhsOptions,
) -> Result<SweepReport> {
    let top = check_grid(grid)?;
    let primes = sieve(top)?;
    let model = RhsModel::new(RhsFlavor::Aim, point, chi, opts)?;
    let s = point.s();
    let phi = chi.phi() as f64;
    let rows = grid
        .par_iter()
        .map(|&x| {
            let lhs = partial_product_from(&primes, s, chi, x)?.log;
            let b = model.breakdown(&primes, x, zeros)?;
            let summary = chebyshev_ap_from(&primes, x, chi.modulus())?;
            Ok(SweepRow {
                x,
                lhs_log: lhs,
                rhs_log: b.total_rhs_log,
                residual: lhs - b.total_rhs_log,
                e_ratio: summary.max_abs_remainder() / (x.sqrt() * x.ln()),
                li_sum_diag: phi * b.li_theta_term.norm(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        point,
        character: chi.label().to_string(),
        case_tag: model.case(),
        zeros_included: zeros.is_some(),
        rows,
    })
}
