use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::rhs::li_theta_block;
use super::{partial_product_from, ZeroTerm};
use crate::arith::{sieve, PrimeTable};
use crate::characters::{eta, DirichletCharacter};
use crate::lfunc::{taylor_on_line, TaylorData};
use crate::numeric::EULER_GAMMA;
use crate::zeros::{zero_sum_s, ZeroBank};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrhRatio {
    pub x: f64,
    pub t: f64,
    pub character: String,
    /// Order of vanishing `m` of `L(s, χ)` at `s = 1/2 + it`.
    pub order: usize,
    /// `L^{(m)}(s, χ)/m!`
    pub leading: Complex64,
    /// `L^{(m)}(s, χ)/(e^{mγ} m!)`, times `√2` when applied.
    pub limit: Complex64,
    pub sqrt2_applied: bool,
    /// `(log x)^m Π_{p ≤ x} (1 − χ(p)p^{−s})^{−1}`
    pub lhs: Complex64,
    pub ratio: Complex64,
    /// The ratio against the limit without the `√2` factor.
    pub ratio_without_sqrt2: Complex64,
    /// `ratio / exp(Li block + (x^{1/2−s} + S)/log x)`; `S` only when zeros are given.
    pub corrected_ratio: Complex64,
    pub zero_term: ZeroTerm,
}

/// Taylor data at `1/2 + it`, computed once and reused across `x`.
#[derive(Clone, Debug)]
pub struct DrhModel {
    chi: DirichletCharacter,
    t: f64,
    taylor: TaylorData,
    order: usize,
    leading: Complex64,
    sqrt2: bool,
}

impl DrhModel {
    pub fn new(chi: &DirichletCharacter, t: f64) -> Result<Self> {
        if chi.is_principal() {
            return Err(Error::InvalidArgument("the limit needs a non-principal character".into()));
        }
        let taylor = taylor_on_line(chi, t)?;
        Ok(DrhModel {
            chi: chi.clone(),
            t,
            order: taylor.vanishing_order.expect("checked by taylor_on_line"),
            leading: taylor.leading.expect("checked by taylor_on_line"),
            taylor,
            sqrt2: t == 0.0 && eta(chi, 2) == 1,
        })
    }

    pub fn taylor(&self) -> &TaylorData {
        &self.taylor
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn lhs(&self, primes: &PrimeTable, x: f64) -> Result<Complex64> {
        let s = Complex64::new(0.5, self.t);
        let prod = partial_product_from(primes, s, &self.chi, x)?;
        Ok((prod.log + self.order as f64 * x.ln().ln()).exp())
    }

    fn base_limit(&self) -> Complex64 {
        self.leading * (-(self.order as f64) * EULER_GAMMA).exp()
    }

    pub fn ratio_at(&self, primes: &PrimeTable, x: f64, zeros: Option<&ZeroBank>) -> Result<DrhRatio> {
        if !(x.is_finite() && x >= 2.0) {
            return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
        }
        let s = Complex64::new(0.5, self.t);
        let lhs = self.lhs(primes, x)?;
        let base = self.base_limit();
        let limit = if self.sqrt2 { base * std::f64::consts::SQRT_2 } else { base };
        let ratio = lhs / limit;
        let lx = x.ln();
        let (li, _) = li_theta_block(primes, x, &self.chi, s)?;
        let x_half_minus_s = ((0.5 - s) * lx).exp();
        let zero_term = match zeros {
            None => ZeroTerm::Omitted,
            Some(bank) => {
                let z = zero_sum_s(s, x, &self.chi, bank)?;
                ZeroTerm::Included {
                    value: z.value / lx,
                    tail_bound: z.tail_bound / lx,
                    zeros_used: z.zeros_used,
                }
            }
        };
        let exponent = li + x_half_minus_s / lx + zero_term.value().unwrap_or_default();
        Ok(DrhRatio {
            x,
            t: self.t,
            character: self.chi.label().to_string(),
            order: self.order,
            leading: self.leading,
            limit,
            sqrt2_applied: self.sqrt2,
            lhs,
            ratio,
            ratio_without_sqrt2: lhs / base,
            corrected_ratio: ratio / exponent.exp(),
            zero_term,
        })
    }

    /// `|Π (log x)^m / (B_t e^{−mγ})|`, with `√2` under the same rule as the ratio.
    pub fn conrad_at(&self, primes: &PrimeTable, x: f64) -> Result<f64> {
        let lhs = self.lhs(primes, x)?;
        let base = self.base_limit();
        let limit = if self.sqrt2 { base * std::f64::consts::SQRT_2 } else { base };
        Ok((lhs / limit).norm())
    }
}

fn check_x(x: f64) -> Result<u64> {
    if !(x.is_finite() && x >= 2.0) {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    Ok(x.floor() as u64)
}

pub fn drh_ratio(chi: &DirichletCharacter, t: f64, x: f64, zeros: Option<&ZeroBank>) -> Result<DrhRatio> {
    let n = check_x(x)?;
    DrhModel::new(chi, t)?.ratio_at(&sieve(n)?, x, zeros)
}

/// Ratios along an ascending grid, sharing one sieve and one Taylor expansion.
pub fn drh_sweep(chi: &DirichletCharacter, t: f64, grid: &[f64], zeros: Option<&ZeroBank>) -> Result<Vec<DrhRatio>> {
    let top = super::sweep::check_grid(grid)?;
    let primes = sieve(top)?;
    let model = DrhModel::new(chi, t)?;
    grid.iter().map(|&x| model.ratio_at(&primes, x, zeros)).collect()
}

pub fn conrad_limit_check(chi: &DirichletCharacter, t: f64, x: f64) -> Result<f64> {
    let n = check_x(x)?;
    DrhModel::new(chi, t)?.conrad_at(&sieve(n)?, x)
}
