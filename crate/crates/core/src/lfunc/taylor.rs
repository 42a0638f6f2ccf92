use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::l_value;
use crate::characters::DirichletCharacter;
use crate::numeric::ComplexSum;
use crate::special::ComplexPoint;
use crate::{Error, Result};

/// Highest derivative order supported.
pub const MAX_ORDER: usize = 6;

/// A coefficient counts as nonzero above this magnitude.
pub const VANISHING_THRESHOLD: f64 = 1e-6;

/// Circle of the Cauchy integral.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub radius: f64,
    pub nodes: usize,
}

impl Default for ContourSpec {
    fn default() -> Self {
        Self { radius: 0.05, nodes: 64 }
    }
}

/// Taylor coefficients `c_j = f^{(j)}(s₀)/j!`, `j = 0..=m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaylorData {
    pub center: ComplexPoint,
    pub coefficients: Vec<Complex64>,
    /// `|c_j(N) − c_j(2N)|` from rerunning the rule with twice the nodes.
    pub est_error: Vec<f64>,
    /// Index of the first coefficient above [`VANISHING_THRESHOLD`].
    pub vanishing_order: Option<usize>,
    /// `c_m` for `m` the vanishing order.
    pub leading: Option<Complex64>,
    pub contour: ContourSpec,
}

impl TaylorData {
    fn new(center: Complex64, coefficients: Vec<Complex64>, est_error: Vec<f64>, contour: ContourSpec) -> Self {
        let vanishing_order = coefficients.iter().position(|c| c.norm() > VANISHING_THRESHOLD);
        TaylorData {
            center: center.into(),
            leading: vanishing_order.map(|m| coefficients[m]),
            coefficients,
            est_error,
            vanishing_order,
            contour,
        }
    }
}

/// Trapezoid rule on `|s − s₀| = r` for the first `m + 1` Taylor
/// coefficients of `f`. Nodes are evaluated in parallel and summed in node order.
pub fn taylor_coefficients<F>(f: F, center: Complex64, m: usize, contour: ContourSpec) -> Result<TaylorData>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    if contour.nodes < m + 2 || !(contour.radius > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "contour with {} nodes and radius {} cannot resolve order {m}",
            contour.nodes, contour.radius
        )));
    }
    let n2 = 2 * contour.nodes;
    let angle = |k: usize| std::f64::consts::TAU * k as f64 / n2 as f64;
    let values: Vec<Complex64> = (0..n2)
        .into_par_iter()
        .map(|k| f(center + Complex64::from_polar(contour.radius, angle(k))))
        .collect::<Result<_>>()?;
    let coeffs = |stride: usize| -> Vec<Complex64> {
        let count = n2 / stride;
        (0..=m)
            .map(|j| {
                let sum: ComplexSum = (0..n2)
                    .step_by(stride)
                    .map(|k| values[k] * Complex64::from_polar(1.0, -(j as f64) * angle(k)))
                    .collect();
                sum.value() / (count as f64 * contour.radius.powi(j as i32))
            })
            .collect()
    };
    let coarse = coeffs(2);
    let fine = coeffs(1);
    let est = coarse.iter().zip(&fine).map(|(a, b)| (a - b).norm()).collect();
    Ok(TaylorData::new(center, coarse, est, contour))
}

/// Taylor data of `L(s, χ)` at `s₀` up to order `m ≤ 6`.
pub fn l_derivative(s0: Complex64, chi: &DirichletCharacter, m: usize) -> Result<TaylorData> {
    if m > MAX_ORDER {
        return Err(Error::InvalidArgument(format!("order {m} exceeds {MAX_ORDER}")));
    }
    taylor_coefficients(|s| Ok(l_value(s, chi)?.value), s0, m, ContourSpec::default())
}

/// Taylor data of `L(s, χ)` at `1/2 + it` to order 6; fails if no coefficient clears the threshold.
pub fn taylor_on_line(chi: &DirichletCharacter, t: f64) -> Result<TaylorData> {
    let s0 = Complex64::new(0.5, t);
    let data = l_derivative(s0, chi, MAX_ORDER)?;
    if data.vanishing_order.is_none() {
        return Err(Error::Undetermined(format!("L(s, {}) at s = 1/2 + {t}i", chi.label())));
    }
    Ok(data)
}

/// Order of vanishing of `L(s, χ)` at `1/2 + it`.
pub fn vanishing_order(chi: &DirichletCharacter, t: f64) -> Result<usize> {
    Ok(taylor_on_line(chi, t)?.vanishing_order.expect("checked"))
}
