use std::path::PathBuf;

use eulerlab::arith::sieve;
use eulerlab::asymptotics::*;
use eulerlab::characters::DirichletCharacter;
use eulerlab::verify::oracles;
use eulerlab::zeros::ZeroBank;
use eulerlab::Complex64;
use proptest::prelude::*;

fn chi(label: &str) -> DirichletCharacter {
    label.parse().unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn bank() -> ZeroBank {
    ZeroBank::load_dir(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros")).unwrap()
}

#[test]
fn eval_point_rules() {
    assert!(EvalPoint::generic(c(0.5, 3.0)).is_err());
    assert_eq!(EvalPoint::generic(c(0.3, 0.0)).unwrap().case(), AimCase::I);
    assert_eq!(EvalPoint::critical(0.0).unwrap().case(), AimCase::II);
    assert!(EvalPoint::critical(0.0).unwrap().is_center());
    assert_eq!(EvalPoint::generic(c(0.75, 1.0)).unwrap().case(), AimCase::III);
    let p = EvalPoint::from_parts(0.5, 2.0, true).unwrap();
    assert_eq!(p, EvalPoint::critical(2.0).unwrap());
}

#[test]
fn partial_product_examples() {
    let c4 = chi("4.1");
    let p = partial_product(c(2.0, 0.0), &c4, 100.0).unwrap();
    assert!((p.value.re - oracles::catalan()).abs() < 3e-3);
    assert_eq!(p.primes, 25);
    let empty = partial_product(c(0.5, 0.0), &c4, 1.5).unwrap();
    assert_eq!(empty.value, c(1.0, 0.0));
    assert_eq!(empty.primes, 0);
    assert!(partial_product(c(0.0, 0.0), &c4, 10.0).is_err());
    // principal character: the empty factor at p = 2 for q = 4
    let z2 = partial_product(c(2.0, 0.0), &chi("1.0"), 1e5).unwrap().value.re;
    let z2_odd = partial_product(c(2.0, 0.0), &chi("4.0"), 1e5).unwrap().value.re;
    assert!((z2 / z2_odd - 4.0 / 3.0).abs() < 1e-12);
}

#[test]
fn off_strip_example() {
    let c4 = chi("4.1");
    let p = EvalPoint::generic(c(2.0, 0.0)).unwrap();
    let b = rhs_aim(p, &c4, 1e5, None).unwrap();
    let lhs = partial_product(p.s(), &c4, 1e5).unwrap().log;
    assert!(b.off_strip);
    assert!((lhs - b.total_rhs_log).norm() < 1e-3);
}

#[test]
fn case_one_chain() {
    let p = EvalPoint::generic(c(0.2, 0.0)).unwrap();
    let b = rhs_aim(p, &chi("4.1"), 1e4, None).unwrap();
    assert_eq!(b.case_tag, AimCase::I);
    assert_eq!(b.li_chain.iter().map(|t| t.k).collect::<Vec<_>>(), vec![2]);
    assert_eq!(b.log_l, LogLTerm::Absent);
    let wide = rhs_aim_with(
        p,
        &chi("4.1"),
        1e4,
        None,
        RhsOptions { chain_bound: ChainBound::TwoPlus, ..RhsOptions::default() },
    )
    .unwrap();
    assert_eq!(wide.li_chain.iter().map(|t| t.k).collect::<Vec<_>>(), vec![2, 4]);
    // ζ: k ≤ 1 + 1/(2σ), so k = 2 at σ = 0.3 and k = 2..=4 at σ = 0.2
    let z = rhs_ramanujan(EvalPoint::generic(c(0.3, 0.0)).unwrap(), 1e4, None).unwrap();
    assert_eq!(z.li_chain.iter().map(|t| t.k).collect::<Vec<_>>(), vec![2]);
    let z = rhs_ramanujan(p, 1e4, None).unwrap();
    assert_eq!(z.li_chain.iter().map(|t| t.k).collect::<Vec<_>>(), vec![2, 3]);
}

#[test]
fn breakdown_is_additive() {
    let b = bank();
    let cases = [
        (EvalPoint::generic(c(0.3, 2.0)).unwrap(), "5.1"),
        (EvalPoint::critical(0.0).unwrap(), "4.1"),
        (EvalPoint::critical(3.0).unwrap(), "5.2"),
        (EvalPoint::generic(c(0.8, -1.0)).unwrap(), "3.1"),
    ];
    for (p, l) in cases {
        let t = rhs_aim(p, &chi(l), 2e4, Some(&b)).unwrap();
        let sum: Complex64 = t.parts().into_iter().sum();
        assert_eq!(t.total_rhs_log, sum);
        assert!(matches!(t.zero_term, ZeroTerm::Included { .. }));
    }
}

#[test]
fn imprimitive_is_rejected() {
    let p = EvalPoint::generic(c(0.8, 0.0)).unwrap();
    assert!(rhs_aim(p, &chi("8.1"), 1e3, None).is_err());
    assert!(rhs_ramanujan(EvalPoint::generic(c(0.8, 1.0)).unwrap(), 1e3, None).is_err());
}

#[test]
fn trivial_character_matches_zeta_formula() {
    let one = chi("1.0");
    let pts = [
        EvalPoint::generic(c(0.3, 0.0)).unwrap(),
        EvalPoint::critical(0.0).unwrap(),
        EvalPoint::generic(c(0.75, 0.0)).unwrap(),
        EvalPoint::generic(c(2.0, 0.0)).unwrap(),
    ];
    for p in pts {
        let a = rhs_aim(p, &one, 5e4, None).unwrap();
        let r = rhs_ramanujan(p, 5e4, None).unwrap();
        assert!((a.total_rhs_log.re - r.total_rhs_log.re).abs() < 1e-10, "{p:?}");
        assert_eq!(a.sqrt2_applied, r.sqrt2_applied);
    }
}

#[test]
fn case_boundary_continuity() {
    // Case III just right of the line against the Case II formula off the centre, η₂ = 0
    let x5 = chi("5.1");
    let near = EvalPoint::generic(c(0.5 + 1e-3, 2.0)).unwrap();
    let on = EvalPoint::critical(2.0).unwrap();
    let a = rhs_aim(near, &x5, 1e5, None).unwrap();
    let b = rhs_aim(on, &x5, 1e5, None).unwrap();
    assert!((a.total_rhs_log - b.total_rhs_log).norm() < 1e-2);
}

#[test]
fn vanishing_anchor_on_a_zero() {
    let b = bank();
    let g = b.get("4.1").unwrap().ordinates()[0];
    let t = rhs_aim(EvalPoint::critical(g).unwrap(), &chi("4.1"), 1e4, None).unwrap();
    match t.log_l {
        LogLTerm::Vanishing { order, .. } => assert_eq!(order, 1),
        other => panic!("expected a vanishing anchor, got {other:?}"),
    }
    assert!(rhs_aim(EvalPoint::generic(c(0.75, 0.0)).unwrap(), &chi("1.0"), 1e3, None).is_ok());
}

#[test]
fn case_three_residual_shrinks_with_zeros() {
    let b = bank();
    let c4 = chi("4.1");
    let p = EvalPoint::generic(c(0.75, 0.0)).unwrap();
    let r = |x: f64| {
        let lhs = partial_product(p.s(), &c4, x).unwrap().log;
        (lhs - rhs_aim(p, &c4, x, Some(&b)).unwrap().total_rhs_log).norm()
    };
    // frozen from an independent mpmath evaluation
    assert!((r(1e3) - 2.4846e-2).abs() < 1e-5);
    assert!(r(1e5) < 3e-3);
}

#[test]
fn drh_examples() {
    let c4 = chi("4.1");
    let r = drh_ratio(&c4, 0.0, 1e6, None).unwrap();
    assert_eq!(r.order, 0);
    assert!(r.sqrt2_applied);
    // independent value 0.94016
    assert!((r.ratio.re - 0.94016).abs() < 5e-5);
    assert!((r.ratio_without_sqrt2 / r.ratio - std::f64::consts::SQRT_2).norm() < 1e-12);
    let r5 = drh_ratio(&chi("5.1"), 0.0, 1e6, None).unwrap();
    assert!(!r5.sqrt2_applied);
    assert!((r5.ratio - 1.0).norm() < 0.1);
    assert!(drh_ratio(&chi("4.0"), 0.0, 1e4, None).is_err());
}

#[test]
fn drh_and_conrad_agree_without_vanishing() {
    for (l, t) in [("4.1", 0.0), ("5.1", 0.0), ("3.1", 2.5)] {
        let x = chi(l);
        let r = drh_ratio(&x, t, 1e5, None).unwrap();
        let m = conrad_limit_check(&x, t, 1e5).unwrap();
        assert!((r.ratio.norm() - m).abs() < 1e-12, "{l}");
    }
}

#[test]
fn drh_at_a_simple_zero() {
    let b = bank();
    let g = b.get("4.1").unwrap().ordinates()[0];
    let grid = [1e3, 1e4, 1e5, 1e6];
    let rows = drh_sweep(&chi("4.1"), g, &grid, None).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.order == 1 && !r.sqrt2_applied));
    assert!((rows[3].ratio - 1.0).norm() < 0.5);
}

#[test]
fn sweep_examples() {
    let p = EvalPoint::generic(c(0.75, 0.0)).unwrap();
    let grid = [1e3, 1e4, 1e5];
    let rep = sweep(p, &chi("4.1"), &grid, None, RhsOptions::default()).unwrap();
    assert_eq!(rep.rows.len(), 3);
    assert_eq!(rep.case_tag, AimCase::III);
    assert!(!rep.zeros_included);
    let primes = sieve(100_000).unwrap();
    for row in &rep.rows {
        let lhs = partial_product_from(&primes, p.s(), &chi("4.1"), row.x).unwrap().log;
        assert_eq!(row.lhs_log, lhs);
        assert_eq!(row.residual, row.lhs_log - row.rhs_log);
        assert!(row.e_ratio > 0.0 && row.e_ratio < 1.0);
    }
    assert!(sweep(p, &chi("4.1"), &[1e4, 1e3], None, RhsOptions::default()).is_err());
    assert!(sweep(p, &chi("4.1"), &[], None, RhsOptions::default()).is_err());
}

#[test]
fn moments() {
    let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
    assert!((p_x(c(2.0, 0.0), 1e4).unwrap() - pi2_6).norm() < 1e-3);
    assert_eq!(p_x(c(2.0, 0.0), 1.0).unwrap(), c(1.0, 0.0));
    assert!(sqrt2_log_residual(1e6).unwrap().abs() < 0.02);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_log_matches_value(re in 0.3f64..3.0, im in -20.0f64..20.0, x in 2.0f64..5000.0) {
        let p = partial_product(c(re, im), &chi("5.2"), x).unwrap();
        prop_assert!((p.log.exp() - p.value).norm() <= 1e-12 * p.value.norm());
    }

    #[test]
    fn additivity_everywhere(re in 0.05f64..2.0, im in -10.0f64..10.0, x in 100.0f64..20_000.0) {
        prop_assume!((re - 0.5).abs() > 1e-3);
        let t = rhs_aim(EvalPoint::generic(c(re, im)).unwrap(), &chi("5.1"), x, None).unwrap();
        prop_assert_eq!(t.total_rhs_log, t.sum_of_parts());
    }
}
