use crate::arith::{euler_phi, factorize, gcd, pow_mod};
use crate::{Error, Result};

/// Largest modulus for which the full discrete-log table is built.
const MAX_MODULUS: u64 = 10_000_000;

/// One cyclic factor of `(Z/qZ)^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    /// The prime whose power this component lives in.
    pub prime: u64,
    pub order: u64,
    /// Generator as a residue mod `q` (lifted by CRT, `≡ 1` at the other primes).
    pub generator: u64,
}

/// `(Z/qZ)^×` with discrete logarithms for every unit.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    q: u64,
    phi: u64,
    components: Vec<Component>,
    /// Exponent vector of each residue; empty for non-units.
    logs: Vec<Vec<u64>>,
    units: Vec<bool>,
}

enum Local {
    Trivial,
    Cyclic { log: Vec<u64> },
    TwoPower { log5: Vec<u64> },
}

fn least_primitive_root(pe: u64, p: u64) -> u64 {
    let phi = euler_phi(pe);
    let ps: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..pe)
        .find(|&g| g % p != 0 && ps.iter().all(|&r| pow_mod(g, phi / r, pe) != 1))
        .expect("odd prime powers are cyclic")
}

fn power_table(g: u64, order: u64, m: u64) -> Vec<u64> {
    let mut log = vec![u64::MAX; m as usize];
    let mut h = 1u64;
    for k in 0..order {
        log[h as usize] = k;
        h = h * g % m;
    }
    log
}

fn crt_lift(r: u64, pe: u64, q: u64) -> u64 {
    let rest = q / pe;
    (0..rest)
        .map(|t| r % pe + pe * t)
        .find(|&v| v % rest == 1 % rest)
        .expect("coprime moduli")
}

impl UnitGroup {
    pub fn new(q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("modulus must be ≥ 1".into()));
        }
        if q > MAX_MODULUS {
            return Err(Error::Resource(format!("modulus {q} exceeds {MAX_MODULUS}")));
        }
        let mut locals = Vec::new();
        let mut components = Vec::new();
        for (p, e) in factorize(q) {
            let pe = p.pow(e);
            let local = if p == 2 {
                match e {
                    1 => Local::Trivial,
                    2 => {
                        components.push(Component { prime: 2, order: 2, generator: crt_lift(3, 4, q) });
                        Local::Cyclic { log: power_table(3, 2, 4) }
                    }
                    _ => {
                        let order5 = pe / 4;
                        components.push(Component { prime: 2, order: 2, generator: crt_lift(pe - 1, pe, q) });
                        components.push(Component { prime: 2, order: order5, generator: crt_lift(5, pe, q) });
                        Local::TwoPower { log5: power_table(5, order5, pe) }
                    }
                }
            } else {
                let g = least_primitive_root(pe, p);
                let order = pe / p * (p - 1);
                components.push(Component { prime: p, order, generator: crt_lift(g, pe, q) });
                Local::Cyclic { log: power_table(g, order, pe) }
            };
            locals.push((pe, local));
        }
        let mut logs = Vec::with_capacity(q as usize);
        let mut units = Vec::with_capacity(q as usize);
        for n in 0..q {
            if gcd(n, q) != 1 {
                logs.push(Vec::new());
                units.push(false);
                continue;
            }
            let mut v = Vec::with_capacity(components.len());
            for (pe, local) in &locals {
                let r = n % pe;
                match local {
                    Local::Trivial => {}
                    Local::Cyclic { log, .. } => v.push(log[r as usize]),
                    Local::TwoPower { log5, .. } => {
                        if r % 4 == 1 {
                            v.extend([0, log5[r as usize]]);
                        } else {
                            v.extend([1, log5[(pe - r) as usize]]);
                        }
                    }
                }
            }
            logs.push(v);
            units.push(true);
        }
        Ok(UnitGroup {
            q,
            phi: euler_phi(q),
            components,
            logs,
            units,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn order(&self) -> u64 {
        self.phi
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_unit(&self, n: u64) -> bool {
        self.units[(n % self.q) as usize]
    }

    /// Exponent vector of `n` with respect to the component generators, or `None` for non-units.
    pub fn log(&self, n: u64) -> Option<&[u64]> {
        let i = (n % self.q) as usize;
        self.units[i].then(|| self.logs[i].as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_reconstruct_units() {
        for q in 1..=200u64 {
            let g = UnitGroup::new(q).unwrap();
            assert_eq!(g.components().iter().map(|c| c.order).product::<u64>(), g.order(), "q={q}");
            for n in 0..q {
                let Some(l) = g.log(n) else { continue };
                let mut acc = 1 % q;
                for (c, &k) in g.components().iter().zip(l) {
                    acc = acc * pow_mod(c.generator, k, q) % q;
                }
                assert_eq!(acc, n % q, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn canonical_generators() {
        assert_eq!(UnitGroup::new(5).unwrap().components()[0].generator, 2);
        assert_eq!(UnitGroup::new(4).unwrap().components()[0].generator, 3);
        let g16 = UnitGroup::new(16).unwrap();
        assert_eq!(g16.components().iter().map(|c| (c.generator, c.order)).collect::<Vec<_>>(), vec![(15, 2), (5, 4)]);
    }
}
