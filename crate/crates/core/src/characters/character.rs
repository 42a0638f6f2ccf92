use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Rotation, UnitGroup};
use crate::arith::{divisors, gcd};
use crate::{Error, Result};

/// `q.index`, e.g. `4.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharacterLabel {
    pub modulus: u64,
    pub index: u64,
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.modulus, self.index)
    }
}

impl FromStr for CharacterLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("character label must look like q.index, got {s:?}"));
        let (q, i) = s.trim().split_once('.').ok_or_else(bad)?;
        Ok(CharacterLabel {
            modulus: q.parse().map_err(|_| bad())?,
            index: i.parse().map_err(|_| bad())?,
        })
    }
}

/// A Dirichlet character mod `q`.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    index: u64,
    exponents: Vec<u64>,
    rotations: Vec<Option<Rotation>>,
    values: Vec<Complex64>,
    conductor: u64,
    order: u64,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("label", &self.label().to_string())
            .field("exponents", &self.exponents)
            .field("conductor", &self.conductor)
            .finish()
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.index == other.index
    }
}

impl Eq for DirichletCharacter {}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl DirichletCharacter {
    fn from_exponents(group: Arc<UnitGroup>, exponents: Vec<u64>) -> Self {
        let comps = group.components();
        let q = group.modulus();
        let mut index = 0u64;
        for (c, &k) in comps.iter().zip(&exponents).rev() {
            index = index * c.order + k;
        }
        let big_n = comps.iter().fold(1, |acc, c| lcm(acc, c.order));
        let rotations: Vec<Option<Rotation>> = (0..q)
            .map(|n| {
                group.log(n).map(|l| {
                    let num: u128 = comps
                        .iter()
                        .zip(&exponents)
                        .zip(l)
                        .map(|((c, &k), &e)| k as u128 * e as u128 * (big_n / c.order) as u128)
                        .sum();
                    Rotation::new((num % big_n as u128) as i128, big_n)
                })
            })
            .collect();
        let values = rotations
            .iter()
            .map(|r| r.map_or(Complex64::new(0.0, 0.0), Rotation::to_complex))
            .collect();
        let order = comps
            .iter()
            .zip(&exponents)
            .fold(1, |acc, (c, &k)| lcm(acc, c.order / gcd(k, c.order)));
        let conductor = divisors(q)
            .into_iter()
            .find(|&d| {
                (1..q)
                    .step_by(d as usize)
                    .all(|n| rotations[n as usize].is_none_or(Rotation::is_one))
            })
            .unwrap_or(q);
        DirichletCharacter {
            group,
            index,
            exponents,
            rotations,
            values,
            conductor,
            order,
        }
    }

    fn from_index(group: Arc<UnitGroup>, index: u64) -> Result<Self> {
        if index >= group.order() {
            return Err(Error::InvalidArgument(format!(
                "character index {index} out of range for modulus {} (φ = {})",
                group.modulus(),
                group.order()
            )));
        }
        let mut rest = index;
        let exponents = group
            .components()
            .iter()
            .map(|c| {
                let k = rest % c.order;
                rest /= c.order;
                k
            })
            .collect();
        Ok(Self::from_exponents(group, exponents))
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn label(&self) -> CharacterLabel {
        CharacterLabel {
            modulus: self.modulus(),
            index: self.index,
        }
    }

    pub fn group(&self) -> &UnitGroup {
        &self.group
    }

    /// Exponents `k_j` with `χ(g_j) = e(k_j / n_j)`.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `φ(q)`.
    pub fn phi(&self) -> u64 {
        self.group.order()
    }

    /// Exact value at `n`, `None` when `gcd(n, q) > 1`.
    pub fn rotation(&self, n: u64) -> Option<Rotation> {
        self.rotations[(n % self.modulus()) as usize]
    }

    pub fn value(&self, n: u64) -> Complex64 {
        self.values[(n % self.modulus()) as usize]
    }

    /// Value at a possibly negative integer.
    pub fn value_signed(&self, n: i64) -> Complex64 {
        self.value(n.rem_euclid(self.modulus() as i64) as u64)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus()
    }

    pub fn is_principal(&self) -> bool {
        self.index == 0
    }

    /// Order of `χ` in the character group.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    /// `0` if `χ(−1) = 1`, `1` if `χ(−1) = −1`.
    pub fn parity(&self) -> u8 {
        let q = self.modulus();
        match self.rotation(q - 1) {
            Some(r) if !r.is_one() => 1,
            _ => 0,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus() != other.modulus() {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply characters mod {} and mod {}",
                self.modulus(),
                other.modulus()
            )));
        }
        let exps = self
            .group
            .components()
            .iter()
            .zip(self.exponents.iter().zip(&other.exponents))
            .map(|(c, (&a, &b))| (a + b) % c.order)
            .collect();
        Ok(Self::from_exponents(self.group.clone(), exps))
    }

    pub fn conj(&self) -> Self {
        let exps = self
            .group
            .components()
            .iter()
            .zip(&self.exponents)
            .map(|(c, &k)| (c.order - k) % c.order)
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }

    pub fn pow(&self, m: u64) -> Self {
        let exps = self
            .group
            .components()
            .iter()
            .zip(&self.exponents)
            .map(|(c, &k)| (k as u128 * m as u128 % c.order as u128) as u64)
            .collect();
        Self::from_exponents(self.group.clone(), exps)
    }

    /// The primitive character mod the conductor that induces `χ`.
    pub fn primitive_inducing(&self) -> Self {
        if self.is_primitive() {
            return self.clone();
        }
        let q = self.modulus();
        let f = self.conductor;
        characters_mod(f)
            .expect("conductor divides a valid modulus")
            .into_iter()
            .find(|psi| (1..q).all(|n| self.rotation(n).is_none() || psi.rotation(n % f) == self.rotation(n)))
            .expect("every character is induced by a primitive one")
    }
}

/// All `φ(q)` characters mod `q`, in label order.
pub fn characters_mod(q: u64) -> Result<Vec<DirichletCharacter>> {
    let group = Arc::new(UnitGroup::new(q)?);
    (0..group.order())
        .map(|i| DirichletCharacter::from_index(group.clone(), i))
        .collect()
}

pub fn character(label: CharacterLabel) -> Result<DirichletCharacter> {
    DirichletCharacter::from_index(Arc::new(UnitGroup::new(label.modulus)?), label.index)
}

impl FromStr for DirichletCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        character(s.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(s: &str) -> DirichletCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn chi4() {
        let c = chi("4.1");
        let v: Vec<f64> = (0..4).map(|n| c.value(n).re).collect();
        assert_eq!(v, vec![0.0, 1.0, 0.0, -1.0]);
        assert_eq!(c.parity(), 1);
        assert!(c.is_primitive());
        assert_eq!(c.order(), 2);
    }

    #[test]
    fn mod5_labels() {
        for k in 0..4u64 {
            assert_eq!(chi(&format!("5.{k}")).rotation(2), Some(Rotation::new(k as i128, 4)));
        }
        let orders: Vec<u64> = characters_mod(5).unwrap().iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 4, 2, 4]);
        assert_eq!(chi("3.1").value(2).re, -1.0);
    }

    #[test]
    fn conductors_mod_12() {
        let f: Vec<u64> = characters_mod(12).unwrap().iter().map(|c| c.conductor()).collect();
        let mut sorted = f.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 3, 4, 12]);
    }

    #[test]
    fn label_round_trip() {
        for c in characters_mod(24).unwrap() {
            assert_eq!(chi(&c.label().to_string()), c);
        }
        assert!("4".parse::<CharacterLabel>().is_err());
        assert!("4.4".parse::<DirichletCharacter>().is_err());
    }

    #[test]
    fn inducing_character() {
        let c = characters_mod(12).unwrap().into_iter().find(|c| c.conductor() == 4).unwrap();
        assert_eq!(c.primitive_inducing(), chi("4.1"));
        assert_eq!(chi("1.0").primitive_inducing(), chi("1.0"));
        assert_eq!(chi("7.0").primitive_inducing(), chi("1.0"));
    }
}
