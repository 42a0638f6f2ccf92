//! Term-by-term right-hand sides for `log Π_{p ≤ x} (1 − χ(p)p^{−s})^{−1}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{AimCase, EvalPoint};
use crate::arith::{chebyshev_ap_from, sieve, PrimeTable};
use crate::characters::{eta, DirichletCharacter};
use crate::lfunc::{l_value, log_l, taylor_on_line, VANISHING_THRESHOLD};
use crate::numeric::EULER_GAMMA;
use crate::special::li_power;
use crate::zeros::{zero_sum_s, ZeroBank};
use crate::{Error, Result};

/// Upper limit for the `Li(x^{1−ks})/k` chain when `Re s < 1/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainBound {
    /// `k ≤ [1 + 1/(2σ)]`
    #[default]
    OnePlus,
    /// `k ≤ [2 + 1/(2σ)]`
    TwoPlus,
}

/// Signs of the `Re s < 1/2` terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseOneSigns {
    /// Every term carries the sign it has in the expansion of
    /// `log Π (1 − χ(p)p^{−s})^{−1}`, matching the `Re s ≥ 1/2` formulas:
    /// `+Li` block, `+Li(x^{1−ks})/k`, `(2s−1+η₂)x^{1/2−s}/((2s−1) log x)`, `+S/log x`.
    #[default]
    Continuous,
    /// The alternate sign set. For general `χ`: chain and `S` term negated,
    /// power term over `(1 − 2s)`. For `ζ`: `Li(θ^{1−s})`, chain and `S`
    /// term negated, power term `−2s x^{1/2−s}/((1−2s) log x)`.
    Alternate,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsOptions {
    pub chain_bound: ChainBound,
    pub case_one_signs: CaseOneSigns,
    /// Evaluate a given case's formula regardless of where `s` lies.
    pub force_case: Option<AimCase>,
}

/// General Dirichlet formula, or its `ζ` specialization anchored at `|ζ(s)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsFlavor {
    Aim,
    Ramanujan,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainTerm {
    pub k: u64,
    /// Signed contribution `±Li(x^{1−ks})/k`.
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerTerm {
    pub name: String,
    pub eta2: u8,
    pub value: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroTerm {
    /// No zeros were supplied; the total excludes `S_s(x, χ)/log x`.
    Omitted,
    Included {
        /// `±S_s(x, χ)/log x`
        value: Complex64,
        tail_bound: f64,
        zeros_used: usize,
    },
}

impl ZeroTerm {
    pub fn value(&self) -> Option<Complex64> {
        match *self {
            ZeroTerm::Omitted => None,
            ZeroTerm::Included { value, .. } => Some(value),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LogLTerm {
    /// `Re s < 1/2`: no `L`-value appears.
    Absent,
    Value { value: Complex64 },
    /// `L` vanishes to order `m`; contributes `log c_m − mγ − m log log x`.
    Vanishing {
        order: usize,
        leading: Complex64,
        value: Complex64,
    },
}

impl LogLTerm {
    pub fn value(&self) -> Option<Complex64> {
        match *self {
            LogLTerm::Absent => None,
            LogLTerm::Value { value } | LogLTerm::Vanishing { value, .. } => Some(value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermBreakdown {
    pub flavor: RhsFlavor,
    pub case_tag: AimCase,
    pub point: EvalPoint,
    pub s: Complex64,
    pub x: f64,
    pub character: String,
    /// `φ(q)^{−1} Σ_a χ(a) Li((φ(q)θ(x; q, a))^{1−s})`, signed.
    pub li_theta_term: Complex64,
    pub li_chain: Vec<ChainTerm>,
    pub power_terms: Vec<PowerTerm>,
    pub sqrt2_applied: bool,
    /// `log √2` when applied, else 0.
    pub sqrt2_term: Complex64,
    pub zero_term: ZeroTerm,
    pub log_l: LogLTerm,
    /// Classes with `θ(x; q, a) = 0`, whose `Li` term is set to 0.
    pub degenerate_classes: Vec<u64>,
    /// `Re s ≥ 1`: evaluated outside the critical strip.
    pub off_strip: bool,
    pub total_rhs_log: Complex64,
}

impl TermBreakdown {
    /// The summands of `total_rhs_log`, in summation order.
    pub fn parts(&self) -> Vec<Complex64> {
        let mut v = vec![self.li_theta_term];
        v.extend(self.li_chain.iter().map(|c| c.value));
        v.extend(self.power_terms.iter().map(|p| p.value));
        v.push(self.sqrt2_term);
        v.extend(self.zero_term.value());
        v.extend(self.log_l.value());
        v
    }

    pub fn sum_of_parts(&self) -> Complex64 {
        self.parts().into_iter().sum()
    }
}

#[derive(Clone, Copy, Debug)]
enum Anchor {
    Absent,
    Value(Complex64),
    Vanishing { order: usize, leading: Complex64 },
}

/// The `x`-independent part of a right-hand side: case, `L`-value anchor and chain.
#[derive(Clone, Debug)]
pub struct RhsModel {
    flavor: RhsFlavor,
    point: EvalPoint,
    case: AimCase,
    chi: DirichletCharacter,
    eta2: u8,
    chain: Vec<u64>,
    sqrt2: bool,
    anchor: Anchor,
    opts: RhsOptions,
}

impl RhsModel {
    pub fn new(flavor: RhsFlavor, point: EvalPoint, chi: &DirichletCharacter, opts: RhsOptions) -> Result<Self> {
        let s = point.s();
        if !(s.re > 0.0) {
            return Err(Error::InvalidArgument(format!("need Re s > 0, got {s}")));
        }
        if !chi.is_primitive() {
            return Err(Error::Contract(format!("{} is not primitive", chi.label())));
        }
        if flavor == RhsFlavor::Ramanujan && (chi.modulus() != 1 || s.im != 0.0) {
            return Err(Error::InvalidArgument("the ζ formula needs real s and the trivial character".into()));
        }
        let case = opts.force_case.unwrap_or(point.case());
        let eta2 = eta(chi, 2);
        let chain = if case == AimCase::I {
            let lead = match opts.chain_bound {
                ChainBound::OnePlus => 1.0,
                ChainBound::TwoPlus => 2.0,
            };
            let top = (lead + 1.0 / (2.0 * s.re)).floor() as u64;
            let phi = chi.phi();
            (1..=top / phi).map(|j| j * phi).filter(|&k| k >= 2).collect()
        } else {
            Vec::new()
        };
        let anchor = match (case, flavor) {
            (AimCase::I, _) => Anchor::Absent,
            (_, RhsFlavor::Ramanujan) => Anchor::Value(Complex64::new(l_value(s, chi)?.value.norm().ln(), 0.0)),
            (_, RhsFlavor::Aim) => {
                let v = l_value(s, chi)?.value;
                if v.norm() > VANISHING_THRESHOLD {
                    Anchor::Value(log_l(s, chi)?)
                } else if point.on_critical_line() {
                    let data = taylor_on_line(chi, s.im)?;
                    let order = data.vanishing_order.expect("checked by taylor_on_line");
                    let leading = data.leading.expect("checked by taylor_on_line");
                    if order == 0 {
                        Anchor::Value(leading.ln())
                    } else {
                        Anchor::Vanishing { order, leading }
                    }
                } else {
                    return Err(Error::Domain(format!("L(s, {}) vanishes at s = {s}", chi.label())));
                }
            }
        };
        Ok(RhsModel {
            flavor,
            point,
            case,
            chi: chi.clone(),
            eta2,
            chain,
            sqrt2: case == AimCase::II && point.is_center() && eta2 == 1,
            anchor,
            opts,
        })
    }

    pub fn case(&self) -> AimCase {
        self.case
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.chi
    }

    pub fn point(&self) -> EvalPoint {
        self.point
    }

    /// The full breakdown at `x`; `primes` must cover `x`.
    pub fn breakdown(&self, primes: &PrimeTable, x: f64, zeros: Option<&ZeroBank>) -> Result<TermBreakdown> {
        let s = self.point.s();
        let one = Complex64::new(1.0, 0.0);
        let alternate = self.case == AimCase::I && self.opts.case_one_signs == CaseOneSigns::Alternate;
        let lx = x.ln();
        let (mut li, degenerate) = li_theta_block(primes, x, &self.chi, s)?;
        if alternate && self.flavor == RhsFlavor::Ramanujan {
            li = -li;
        }

        let chain_sign = if alternate { -1.0 } else { 1.0 };
        let li_chain = self
            .chain
            .iter()
            .map(|&k| {
                Ok(ChainTerm {
                    k,
                    value: chain_sign * li_power(x, one - s * k as f64)? / k as f64,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let xp = (s * -1.0 + 0.5) * lx;
        let x_half_minus_s = xp.exp();
        let eta2 = self.eta2;
        let two_s_m1 = 2.0 * s - 1.0;
        let mut power_terms = Vec::new();
        match self.case {
            AimCase::I | AimCase::III => {
                let coef = two_s_m1 + eta2 as f64;
                let (name, value) = if alternate && self.flavor == RhsFlavor::Aim {
                    ("(2s-1+eta2) x^(1/2-s) / ((1-2s) log x)", coef * x_half_minus_s / (-two_s_m1 * lx))
                } else {
                    ("(2s-1+eta2) x^(1/2-s) / ((2s-1) log x)", coef * x_half_minus_s / (two_s_m1 * lx))
                };
                power_terms.push(PowerTerm { name: name.into(), eta2, value });
            }
            AimCase::II => {
                power_terms.push(PowerTerm {
                    name: "x^(1/2-s) / log x".into(),
                    eta2,
                    value: x_half_minus_s / lx,
                });
                if !self.sqrt2 {
                    let value = if eta2 == 0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        let x_1m2s = (-two_s_m1 * lx).exp();
                        let x_sm_half = (-xp).exp();
                        x_1m2s * (2.0 * x_sm_half - 1.0) / (2.0 * two_s_m1 * lx)
                    };
                    power_terms.push(PowerTerm {
                        name: "eta2 x^(1-2s) (2 x^(s-1/2) - 1) / (2 (2s-1) log x)".into(),
                        eta2,
                        value,
                    });
                }
            }
        }

        let sqrt2_term = if self.sqrt2 {
            Complex64::new(std::f64::consts::SQRT_2.ln(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };

        let zero_term = match zeros {
            None => ZeroTerm::Omitted,
            Some(bank) => {
                let z = zero_sum_s(s, x, &self.chi, bank)?;
                let sign = if alternate { -1.0 } else { 1.0 };
                ZeroTerm::Included {
                    value: sign * z.value / lx,
                    tail_bound: z.tail_bound / lx,
                    zeros_used: z.zeros_used,
                }
            }
        };

        let log_l = match self.anchor {
            Anchor::Absent => LogLTerm::Absent,
            Anchor::Value(value) => LogLTerm::Value { value },
            Anchor::Vanishing { order, leading } => LogLTerm::Vanishing {
                order,
                leading,
                value: leading.ln() - order as f64 * (EULER_GAMMA + lx.ln()),
            },
        };

        let mut out = TermBreakdown {
            flavor: self.flavor,
            case_tag: self.case,
            point: self.point,
            s,
            x,
            character: self.chi.label().to_string(),
            li_theta_term: li,
            li_chain,
            power_terms,
            sqrt2_applied: self.sqrt2,
            sqrt2_term,
            zero_term,
            log_l,
            degenerate_classes: degenerate,
            off_strip: self.case == AimCase::III && s.re >= 1.0,
            total_rhs_log: Complex64::new(0.0, 0.0),
        };
        out.total_rhs_log = out.sum_of_parts();
        Ok(out)
    }
}

/// `φ(q)^{−1} Σ_a χ(a) Li((φ(q)θ(x; q, a))^{1−s})` and the classes with `θ = 0` (skipped).
pub(crate) fn li_theta_block(
    primes: &PrimeTable,
    x: f64,
    chi: &DirichletCharacter,
    s: Complex64,
) -> Result<(Complex64, Vec<u64>)> {
    let summary = chebyshev_ap_from(primes, x, chi.modulus())?;
    let phi = summary.phi as f64;
    let mut li = Complex64::new(0.0, 0.0);
    let mut degenerate = Vec::new();
    for class in &summary.classes {
        if class.theta == 0.0 {
            degenerate.push(class.a);
            continue;
        }
        li += chi.value(class.a) * li_power(phi * class.theta, 1.0 - s)?;
    }
    Ok((li / phi, degenerate))
}

fn check_x(x: f64) -> Result<u64> {
    if !(x.is_finite() && x >= 2.0) {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    Ok(x.floor() as u64)
}

pub fn rhs_aim(point: EvalPoint, chi: &DirichletCharacter, x: f64, zeros: Option<&ZeroBank>) -> Result<TermBreakdown> {
    rhs_aim_with(point, chi, x, zeros, RhsOptions::default())
}

pub fn rhs_aim_with(
    point: EvalPoint,
    chi: &DirichletCharacter,
    x: f64,
    zeros: Option<&ZeroBank>,
    opts: RhsOptions,
) -> Result<TermBreakdown> {
    let n = check_x(x)?;
    RhsModel::new(RhsFlavor::Aim, point, chi, opts)?.breakdown(&sieve(n)?, x, zeros)
}

/// The `ζ` formula; `point` must be real (`CriticalLine { t: 0 }` for `s = 1/2`).
pub fn rhs_ramanujan(point: EvalPoint, x: f64, zeros: Option<&ZeroBank>) -> Result<TermBreakdown> {
    rhs_ramanujan_with(point, x, zeros, RhsOptions::default())
}

pub fn rhs_ramanujan_with(point: EvalPoint, x: f64, zeros: Option<&ZeroBank>, opts: RhsOptions) -> Result<TermBreakdown> {
    let n = check_x(x)?;
    let trivial: DirichletCharacter = "1.0".parse()?;
    RhsModel::new(RhsFlavor::Ramanujan, point, &trivial, opts)?.breakdown(&sieve(n)?, x, zeros)
}
