use std::path::PathBuf;

use eulerlab::arith::chebyshev_ap;
use eulerlab::characters::DirichletCharacter;
use eulerlab::zeros::*;
use eulerlab::{Complex64, Error};

fn bank() -> ZeroBank {
    ZeroBank::load_dir(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros")).unwrap()
}

fn chi(label: &str) -> DirichletCharacter {
    label.parse().unwrap()
}

#[test]
fn fixtures_load() {
    let b = bank();
    let labels: Vec<&str> = b.labels().collect();
    for l in ["zeta", "3.1", "4.1", "5.1", "5.2", "5.3"] {
        assert!(labels.contains(&l), "{l}");
    }
    let z = b.get("zeta").unwrap();
    assert_eq!(z.count(), 200);
    assert!((z.ordinates()[0] - 14.134_725_141_734_694).abs() < 1e-14);
    assert_eq!(b.for_character(&chi("8.1")).unwrap().label(), "4.1");
    assert_eq!(b.for_character(&chi("12.0")).unwrap().label(), "zeta");
    assert!(matches!(b.for_character(&chi("7.1")), Err(Error::MissingZeros(_))));
}

#[test]
fn parse_round_trip() {
    let list = ZeroList::new("3.1", vec![8.039_737_155_681_472, 11.249_206_208_354_4], "test", 12.0).unwrap();
    let back = parse_zeros(&list.to_fixture_string(), "mem").unwrap();
    assert_eq!(back.ordinates(), list.ordinates());
    assert_eq!(back.complete_to(), 12.0);
    assert_eq!(back.label(), "3.1");
}

#[test]
fn parse_rejects_bad_input() {
    let cases = [
        "14.134725141734693790\n",
        "# label=zeta\n14.1347\n",
        "# label=zeta\n21.022039638771554993\n14.134725141734693790\n",
        "# label=zeta\n-14.134725141734693790\n",
        "# label=zeta\nfourteen\n",
    ];
    for text in cases {
        assert!(matches!(parse_zeros(text, "mem"), Err(Error::ZeroParse { .. })), "{text:?}");
    }
    let ok = parse_zeros("# label=zeta\n\n14.134725141734693790\n", "mem").unwrap();
    assert_eq!(ok.complete_to(), ok.ordinates()[0]);
}

#[test]
fn two_zero_toy_sum() {
    let mut b = ZeroBank::new();
    b.insert(ZeroList::new("zeta", vec![6.0], "toy", 6.0).unwrap());
    let s = Complex64::new(0.75, 0.0);
    let x: f64 = 100.0;
    let got = zero_sum_s(s, x, &chi("1.0"), &b).unwrap();
    let term = |r: Complex64| (r - s).scale(x.ln()).exp() / (r * (r - s));
    let expect = -s * (term(Complex64::new(0.5, 6.0)) + term(Complex64::new(0.5, -6.0)));
    assert!((got.value - expect).norm() < 1e-14);
    assert_eq!(got.zeros_used, 2);
    // qT/2π < e: no usable tail estimate
    assert!(got.tail_bound.is_infinite());
}

#[test]
fn tail_bound_shrinks_with_height() {
    let b = bank();
    let s = Complex64::new(0.75, 0.0);
    let c4 = chi("4.1");
    let mut last = f64::INFINITY;
    for n in [20, 50, 100] {
        let z = zero_sum_s(s, 1e4, &c4, &b.truncated(n)).unwrap();
        assert!(z.tail_bound < last, "n = {n}");
        last = z.tail_bound;
    }
}

#[test]
fn pole_guard() {
    let b = bank();
    let g = b.get("4.1").unwrap().ordinates()[0];
    let r = zero_sum_s(Complex64::new(0.5, g), 100.0, &chi("4.1"), &b);
    assert!(matches!(r, Err(Error::Pole(_))));
}

#[test]
fn explicit_formula_mod_four() {
    let b = bank();
    let x = 5000.0;
    let summary = chebyshev_ap(x, 4).unwrap();
    for a in [1, 3] {
        let theta = summary.class(a).unwrap().theta;
        let actual = 2.0 * (x / 2.0 - theta);
        let rhs = explicit_psi_rhs(x, 4, a, &b, 100.0).unwrap();
        assert!(rhs.imag.abs() < 1e-8 * x);
        assert!((rhs.value - actual).abs() < 0.5 * x.sqrt(), "a = {a}: {} vs {actual}", rhs.value);
    }
    assert!(matches!(explicit_psi_rhs(x, 4, 1, &b, 250.0), Err(Error::BeyondCompleteness { .. })));
    assert!(explicit_psi_rhs(x, 4, 2, &b, 100.0).is_err());
}

#[test]
fn reciprocal_sum() {
    let b = bank();
    let z = b.get("zeta").unwrap();
    let first = zero_reciprocal_sum(z, 15.0).unwrap();
    assert!((first - 1.0 / (0.25 + 14.134_725_141_734_694f64.powi(2)).sqrt()).abs() < 1e-15);
    assert!(zero_reciprocal_sum(z, 1000.0).is_err());
}
