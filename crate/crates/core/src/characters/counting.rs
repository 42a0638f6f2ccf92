//! Power-residue counts and the orthogonality relation they satisfy.

use num_complex::Complex64;

use super::{DirichletCharacter, Rotation};
use crate::arith::{euler_phi, factorize, gcd, mobius, pow_mod};
use crate::{Error, Result};

/// `δ_m(q, a) = #{x mod q : x^m ≡ a (mod q)}`, by direct scan.
pub fn delta_m(q: u64, a: u64, m: u32) -> Result<u64> {
    check(q, a, m)?;
    Ok((0..q).filter(|&x| pow_mod(x, m as u64, q) == a % q).count() as u64)
}

fn check(q: u64, a: u64, m: u32) -> Result<()> {
    if q == 0 || m == 0 {
        return Err(Error::InvalidArgument("need q ≥ 1 and m ≥ 1".into()));
    }
    if a >= q {
        return Err(Error::InvalidArgument(format!("residue {a} not reduced mod {q}")));
    }
    Ok(())
}

/// `δ_m(q, a)` as the product of the scans mod each prime power of `q`.
pub fn delta_m_by_prime_powers(q: u64, a: u64, m: u32) -> Result<u64> {
    check(q, a, m)?;
    Ok(factorize(q)
        .into_iter()
        .map(|(p, e)| {
            let pe = p.pow(e);
            (0..pe).filter(|&x| pow_mod(x, m as u64, pe) == a % pe).count() as u64
        })
        .product())
}

/// Closed form for `δ_2(q, a)` when `a` is a unit square mod `q`:
/// `2^{ω(q)−1}` times 4, 2, 1 or 2 according as `2^3 | q`, `2^2 ‖ q`, `2 ‖ q` or `q` is odd.
pub fn delta2_formula(q: u64) -> u64 {
    let f = factorize(q);
    let n2 = f.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);
    let factor = match n2 {
        0 => 2,
        1 => 1,
        2 => 2,
        _ => 4,
    };
    // 2^{ω−1}·factor, written to stay integral when ω = 0.
    (1u64 << f.len()) * factor / 2
}

/// `1` if `χ^m` is principal, else `0`.
pub fn eta(chi: &DirichletCharacter, m: u32) -> u8 {
    (chi.order() != 0 && m as u64 % chi.order() == 0) as u8
}

/// `Σ_{(a,q)=1} χ(a) δ_m(q, a)`, tallied exactly over roots of unity before conversion.
pub fn orthogonality_sum(chi: &DirichletCharacter, m: u32) -> Result<Complex64> {
    let q = chi.modulus();
    if m == 0 {
        return Err(Error::InvalidArgument("m must be ≥ 1".into()));
    }
    let mut count = vec![0u64; q as usize];
    for x in 0..q {
        count[pow_mod(x, m as u64, q) as usize] += 1;
    }
    let mut tally: std::collections::BTreeMap<Rotation, u64> = Default::default();
    for a in 0..q {
        if gcd(a, q) == 1 && count[a as usize] > 0 {
            *tally.entry(chi.rotation(a).expect("unit")).or_default() += count[a as usize];
        }
    }
    Ok(tally.into_iter().map(|(r, c)| r.to_complex() * c as f64).sum())
}

/// Number of primitive characters mod `q`: `Σ_{dr = q} μ(d) φ(r)`.
pub fn primitive_count(q: u64) -> i64 {
    crate::arith::divisors(q)
        .into_iter()
        .map(|d| mobius(d) as i64 * euler_phi(q / d) as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::characters_mod;

    #[test]
    fn examples() {
        assert_eq!(delta_m(8, 1, 2).unwrap(), 4);
        assert_eq!(delta_m(5, 4, 2).unwrap(), 2);
        assert_eq!(delta_m(9, 1, 1).unwrap(), 1);
        assert_eq!(delta2_formula(8), 4);
        assert_eq!(delta2_formula(1), 1);
        assert!(delta_m(5, 5, 2).is_err());
    }

    #[test]
    fn eta_values() {
        let c4: DirichletCharacter = "4.1".parse().unwrap();
        let c5: DirichletCharacter = "5.1".parse().unwrap();
        assert_eq!(eta(&c4, 2), 1);
        assert_eq!(eta(&c5, 2), 0);
        assert_eq!(eta(&c5, 4), 1);
        assert_eq!(eta(&"7.0".parse().unwrap(), 3), 1);
    }

    #[test]
    fn primitive_counts_match_enumeration() {
        for q in 1..=60u64 {
            let n = characters_mod(q).unwrap().iter().filter(|c| c.is_primitive()).count() as i64;
            assert_eq!(primitive_count(q), n, "q={q}");
        }
    }
}
