use num_complex::Complex64;

use super::l_value;
use crate::characters::{gauss_and_epsilon, DirichletCharacter};
use crate::special::gamma;
use crate::{Error, Result};

fn require_primitive(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_primitive() {
        Ok(())
    } else {
        Err(Error::Contract(format!(
            "{} is not primitive (conductor {})",
            chi.label(),
            chi.conductor()
        )))
    }
}

/// `Λ(s, χ) = (q/π)^{s/2} Γ((s + ν)/2) L(s, χ)`.
pub fn completed(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    require_primitive(chi)?;
    let q = chi.modulus() as f64;
    let nu = chi.parity() as f64;
    let factor = (s * 0.5 * (q / std::f64::consts::PI).ln()).exp();
    Ok(factor * gamma((s + nu) * 0.5)? * l_value(s, chi)?.value)
}

/// `|Λ(s, χ) − ε(χ) Λ(1 − s, χ̄)| / max(|Λ(s, χ)|, 10^{−300})`.
pub fn functional_residual(s: Complex64, chi: &DirichletCharacter) -> Result<f64> {
    require_primitive(chi)?;
    let left = completed(s, chi)?;
    let eps = gauss_and_epsilon(chi).epsilon;
    let right = eps * completed(1.0 - s, &chi.conj())?;
    Ok((left - right).norm() / left.norm().max(1e-300))
}
