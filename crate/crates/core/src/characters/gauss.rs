use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DirichletCharacter, Rotation};
use crate::numeric::ComplexSum;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootNumber {
    /// `τ(χ) = Σ_{a mod q} χ(a) e(a/q)`
    pub gauss: Complex64,
    /// `ε(χ) = i^{−ν} τ(χ) / √q`, of modulus 1 when `χ` is primitive.
    pub epsilon: Complex64,
}

pub fn gauss_and_epsilon(chi: &DirichletCharacter) -> RootNumber {
    let q = chi.modulus();
    let gauss = (0..q)
        .filter_map(|a| chi.rotation(a).map(|r| (r * Rotation::new(a as i128, q)).to_complex()))
        .collect::<ComplexSum>()
        .value();
    let i_pow = if chi.parity() == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, -1.0)
    };
    RootNumber {
        gauss,
        epsilon: i_pow * gauss / (q as f64).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi4_gauss_sum() {
        let r = gauss_and_epsilon(&"4.1".parse().unwrap());
        assert!((r.gauss - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert!((r.epsilon - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let one = gauss_and_epsilon(&"1.0".parse().unwrap());
        assert_eq!(one.gauss, Complex64::new(1.0, 0.0));
    }
}
