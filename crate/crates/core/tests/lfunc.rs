use std::f64::consts::PI;

use eulerlab::characters::{characters_mod, DirichletCharacter};
use eulerlab::lfunc::*;
use eulerlab::verify::oracles;
use eulerlab::Complex64;
use proptest::prelude::*;

fn chi(label: &str) -> DirichletCharacter {
    label.parse().unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

// first ordinates from the frozen fixtures
const ZETA_GAMMA1: f64 = 14.134_725_141_734_693_790;
const CHI4_GAMMA1: f64 = 6.020_948_904_697_596_654_9;

#[test]
fn chi4_against_alternating_series() {
    let c4 = chi("4.1");
    for sigma in [0.3, 0.5, 0.75, 1.0, 2.0, 3.5] {
        let got = l_value(c(sigma, 0.0), &c4).unwrap().value;
        assert!((got.re - oracles::l_chi4_real(sigma)).abs() < 1e-11, "σ = {sigma}");
        assert!(got.im.abs() < 1e-14);
    }
    assert!((l_value(c(1.0, 0.0), &c4).unwrap().value.re - PI / 4.0).abs() < 1e-12);
}

#[test]
fn zeta_special_values() {
    let one = chi("1.0");
    assert!((l_value(c(2.0, 0.0), &one).unwrap().value.re - PI * PI / 6.0).abs() < 1e-13);
    assert!((l_value(c(0.0, 0.0), &one).unwrap().value.re + 0.5).abs() < 1e-13);
    assert!((l_value(c(0.5, 0.0), &one).unwrap().value.re + 1.460_354_508_809_586_8).abs() < 1e-12);
    assert!(l_value(c(1.0, 0.0), &one).is_err());
    assert!(l_value(c(0.5, ZETA_GAMMA1), &one).unwrap().value.norm() < 1e-10);
}

#[test]
fn hurwitz_reference() {
    assert!((hurwitz_zeta(c(2.0, 0.0), 0.5).unwrap().re - PI * PI / 2.0).abs() < 1e-12);
    // ζ(0, a) = 1/2 − a
    assert!((hurwitz_zeta(c(0.0, 0.0), 0.3).unwrap().re - 0.2).abs() < 1e-12);
}

#[test]
fn series_consistency_at_three() {
    for q in 1..=12 {
        for x in characters_mod(q).unwrap() {
            for t in [0.0, 4.0, -11.5] {
                let s = c(3.0, t);
                let a = l_value(s, &x).unwrap().value;
                let b = l_value_series(s, &x, 100_000).unwrap().value;
                assert!((a - b).norm() < 1e-8, "{} at {s}", x.label());
            }
        }
    }
    assert!(l_value_series(c(1.0, 0.0), &chi("4.1"), 10).is_err());
}

#[test]
fn imprimitive_values_drop_euler_factors() {
    // χ mod 8 induced from χ₄ has the same Euler factors except at 2, where both vanish
    let eight = chi("8.1");
    let four = chi("4.1");
    let s = c(0.7, 3.0);
    assert!((l_value(s, &eight).unwrap().value - l_value(s, &four).unwrap().value).norm() < 1e-12);
    // the principal character mod 6 loses the factors at 2 and 3
    let six = chi("6.0");
    let z = l_value(s, &chi("1.0")).unwrap().value;
    let factor = (1.0 - (-s * 2f64.ln()).exp()) * (1.0 - (-s * 3f64.ln()).exp());
    assert!((l_value(s, &six).unwrap().value - z * factor).norm() < 1e-12);
}

#[test]
fn functional_equation_holds() {
    for q in [1, 3, 4, 5, 7, 8, 12, 13] {
        for x in characters_mod(q).unwrap().into_iter().filter(|x| x.is_primitive()) {
            for s in [c(0.2, 1.0), c(0.7, -15.0), c(0.5, 25.0)] {
                assert!(functional_residual(s, &x).unwrap() < 1e-8, "{} at {s}", x.label());
            }
        }
    }
    assert!(completed(c(0.3, 0.0), &chi("8.1")).is_err());
}

#[test]
fn log_l_branch() {
    let c4 = chi("4.1");
    for s in [c(0.6, 2.0), c(0.9, -30.0), c(0.55, 40.0)] {
        let lv = l_value(s, &c4).unwrap().value;
        let lg = log_l(s, &c4).unwrap();
        assert!((lg.exp() - lv).norm() < 1e-10 * lv.norm());
    }
    // near σ = 3 the branch is the principal one
    let s = c(3.0, 1.0);
    assert!((log_l(s, &c4).unwrap() - l_value(s, &c4).unwrap().value.ln()).norm() < 1e-12);
}

#[test]
fn taylor_matches_finite_differences() {
    let x = chi("5.1");
    let s0 = c(0.6, 7.0);
    let d = l_derivative(s0, &x, 2).unwrap();
    let h = 1e-4;
    let f = |s: Complex64| l_value(s, &x).unwrap().value;
    let d1 = (f(s0 + h) - f(s0 - h)) / (2.0 * h);
    let d2 = (f(s0 + h) - 2.0 * f(s0) + f(s0 - h)) / (h * h);
    assert!((d.coefficients[0] - f(s0)).norm() < 1e-12);
    assert!((d.coefficients[1] - d1).norm() < 1e-7);
    assert!((d.coefficients[2] - d2 / 2.0).norm() < 1e-4);
    assert!(d.est_error.iter().all(|&e| e < 1e-10));
    assert!(l_derivative(s0, &x, 7).is_err());
}

#[test]
fn vanishing_orders() {
    assert_eq!(vanishing_order(&chi("4.1"), CHI4_GAMMA1).unwrap(), 1);
    assert_eq!(vanishing_order(&chi("1.0"), ZETA_GAMMA1).unwrap(), 1);
    assert_eq!(vanishing_order(&chi("4.1"), 0.0).unwrap(), 0);
    let d = taylor_on_line(&chi("4.1"), CHI4_GAMMA1).unwrap();
    assert!(d.coefficients[0].norm() < 1e-10);
    assert!(d.leading.unwrap().norm() > 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_symmetry(q in 3u64..30, i in 0usize..100, re in 0.05f64..2.5, im in -40.0f64..40.0) {
        let all = characters_mod(q).unwrap();
        let x = &all[i % all.len()];
        let s = c(re, im);
        prop_assume!(!(x.is_principal() && (s - 1.0).norm() < 0.05));
        let a = l_value(s, x).unwrap().value;
        let b = l_value(s.conj(), &x.conj()).unwrap().value;
        prop_assert!((a.conj() - b).norm() <= 1e-11 * a.norm().max(1.0));
    }
}
