use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ZeroBank, ZeroList};
use crate::arith::gcd;
use crate::characters::{characters_mod, delta_m, DirichletCharacter, Rotation};
use crate::numeric::{ComplexSum, NeumaierSum};
use crate::{Error, Result};

/// Minimum admissible `|ρ − s|`.
pub const POLE_GUARD: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroSum {
    pub value: Complex64,
    /// Bound on the contribution of the zeros above the completeness heights.
    pub tail_bound: f64,
    pub zeros_used: usize,
}

/// Upper bound for `Σ_{|γ| > T} 1/|γ|²` over the zeros of an `L`-function of conductor `q`.
fn tail_mass(q: u64, t: f64) -> f64 {
    let scaled = q as f64 * t / std::f64::consts::TAU;
    if scaled < std::f64::consts::E {
        f64::INFINITY
    } else {
        (scaled.ln() + 1.0) / (std::f64::consts::PI * t)
    }
}

fn rho(gamma: f64) -> Complex64 {
    Complex64::new(0.5, gamma)
}

/// Positive and negative ordinates of `L(s, ψ)` up to a common height.
struct ZeroSet<'a> {
    upper: &'a [f64],
    lower: &'a [f64],
    height: f64,
    conductor: u64,
}

fn zero_set<'a>(bank: &'a ZeroBank, psi: &DirichletCharacter) -> Result<ZeroSet<'a>> {
    let up: &ZeroList = bank.for_character(psi)?;
    let down: &ZeroList = bank.for_character(&psi.conj())?;
    let height = up.complete_to().min(down.complete_to());
    Ok(ZeroSet {
        upper: up.up_to(height),
        lower: down.up_to(height),
        height,
        conductor: psi.conductor(),
    })
}

/// `Σ_a χ(a) ψ̄(a)`, tallied exactly.
fn pairing(chi: &DirichletCharacter, psi: &DirichletCharacter) -> Complex64 {
    let mut tally: std::collections::BTreeMap<Rotation, u64> = Default::default();
    for a in 0..chi.modulus() {
        if let (Some(x), Some(y)) = (chi.rotation(a), psi.rotation(a)) {
            *tally.entry(x * y.conj()).or_default() += 1;
        }
    }
    tally.into_iter().map(|(r, c)| r.to_complex() * c as f64).sum()
}

/// `S_s(x, χ) = −(s/φ(q)) Σ_a χ(a) Σ_ψ ψ̄(a) Σ_ρ x^{ρ−s}/(ρ(ρ−s))`.
///
/// Every character mod `q` needs a zero list, even when its weight vanishes.
/// Zeros above the common completeness height of `ψ` and `ψ̄` are dropped and
/// accounted for in `tail_bound`.
pub fn zero_sum_s(s: Complex64, x: f64, chi: &DirichletCharacter, bank: &ZeroBank) -> Result<ZeroSum> {
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("x must exceed 1, got {x}")));
    }
    let lx = x.ln();
    let term = |r: Complex64| -> Result<Complex64> {
        let d = r - s;
        if d.norm() < POLE_GUARD {
            return Err(Error::Pole(format!("s = {s} coincides with the zero {r}")));
        }
        Ok((d * lx).exp() / (r * d))
    };
    let phi = chi.phi() as f64;
    let chars = characters_mod(chi.modulus())?;
    let mut total = ComplexSum::new();
    let mut tail = 0.0;
    let mut used = 0;
    for psi in &chars {
        let set = zero_set(bank, psi)?;
        let w = pairing(chi, psi);
        if w.norm() == 0.0 {
            continue;
        }
        let mut z = ComplexSum::new();
        if psi.is_real() {
            for &g in set.upper {
                z.add(term(rho(g))? + term(rho(-g))?);
            }
        } else {
            for &g in set.upper {
                z.add(term(rho(g))?);
            }
            for &g in set.lower {
                z.add(term(rho(-g))?);
            }
        }
        used += set.upper.len() + if psi.is_real() { set.upper.len() } else { set.lower.len() };
        total.add(w * z.value());
        tail += w.norm() / phi * tail_mass(set.conductor, set.height);
    }
    Ok(ZeroSum {
        value: -s / phi * total.value(),
        tail_bound: s.norm() * x.powf(0.5 - s.re) * tail,
        zeros_used: used,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplicitRhs {
    /// Real part of the truncated right-hand side.
    pub value: f64,
    /// Imaginary residue of the character sum (should be at rounding level).
    pub imag: f64,
    /// Size `x^{1/5}` of the omitted error term.
    pub omitted_bound: f64,
    pub zeros_used: usize,
}

/// `δ₂(q,a)√x + δ₃(q,a)x^{1/3} + Σ_ψ ψ̄(a) Σ_{|γ| ≤ T} (x^ρ − x^{ρ/2})/ρ`,
/// the truncated right-hand side for `φ(q)(x/φ(q) − θ(x; q, a))`.
pub fn explicit_psi_rhs(x: f64, q: u64, a: u64, bank: &ZeroBank, truncate_t: f64) -> Result<ExplicitRhs> {
    if !(x >= 2.0) {
        return Err(Error::InvalidArgument(format!("x must be ≥ 2, got {x}")));
    }
    if q == 0 || gcd(a % q, q) != 1 {
        return Err(Error::InvalidArgument(format!("need gcd(a, q) = 1, got a = {a}, q = {q}")));
    }
    let a = a % q;
    let lx = x.ln();
    let mut total = ComplexSum::new();
    let mut scale = NeumaierSum::new();
    let mut used = 0;
    for psi in characters_mod(q)? {
        let set = zero_set(bank, &psi)?;
        if truncate_t > set.height {
            return Err(Error::BeyondCompleteness {
                label: super::zero_key(&psi),
                complete_to: set.height,
                requested: truncate_t,
            });
        }
        let up = &set.upper[..set.upper.partition_point(|&g| g <= truncate_t)];
        let down = &set.lower[..set.lower.partition_point(|&g| g <= truncate_t)];
        let mut z = ComplexSum::new();
        for r in up.iter().map(|&g| rho(g)).chain(down.iter().map(|&g| rho(-g))) {
            let t = ((r * lx).exp() - (r * 0.5 * lx).exp()) / r;
            scale.add(t.norm());
            z.add(t);
        }
        used += up.len() + down.len();
        total.add(psi.value(a).conj() * z.value());
    }
    let d2 = delta_m(q, a, 2)? as f64;
    let d3 = delta_m(q, a, 3)? as f64;
    let main = d2 * x.sqrt() + d3 * x.cbrt();
    let z = total.value();
    if z.im.abs() > 1e-8 * scale.value().max(1.0) {
        return Err(Error::Contract(format!(
            "explicit formula sum has imaginary part {} (scale {})",
            z.im,
            scale.value()
        )));
    }
    Ok(ExplicitRhs {
        value: main + z.re,
        imag: z.im,
        omitted_bound: x.powf(0.2),
        zeros_used: used,
    })
}

/// `Σ_{0 < γ ≤ T} 1/|1/2 + iγ|`.
pub fn zero_reciprocal_sum(zeros: &ZeroList, t: f64) -> Result<f64> {
    if t > zeros.complete_to() {
        return Err(Error::BeyondCompleteness {
            label: zeros.label().to_string(),
            complete_to: zeros.complete_to(),
            requested: t,
        });
    }
    Ok(zeros
        .up_to(t)
        .iter()
        .map(|&g| 1.0 / rho(g).norm())
        .collect::<NeumaierSum>()
        .value())
}
