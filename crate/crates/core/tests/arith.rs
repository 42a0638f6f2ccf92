use eulerlab::arith::*;
use proptest::prelude::*;

fn trial_primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime_trial(n)).collect()
}

#[test]
fn small_prime_counts() {
    let t = sieve(1_000_000).unwrap();
    assert_eq!(t.count_up_to(10), 4);
    assert_eq!(t.count_up_to(100), 25);
    assert_eq!(t.count_up_to(10_000), 1229);
    assert_eq!(t.len(), 78_498);
    assert!(t.contains(999_983) && !t.contains(999_981));
}

#[test]
fn segment_size_does_not_matter() {
    let x = 300_007;
    let base = sieve(x).unwrap();
    for seg in [64, 1000, 1 << 12] {
        let cfg = SieveConfig { segment_size: seg, ..SieveConfig::default() };
        assert_eq!(sieve_with(x, &cfg).unwrap().primes(), base.primes());
        assert_eq!(count_primes(x, &cfg).unwrap(), base.len() as u64);
    }
}

#[test]
#[ignore = "several seconds; run with --ignored"]
fn pi_of_a_billion() {
    assert_eq!(count_primes(1_000_000_000, &SieveConfig::default()).unwrap(), 50_847_534);
}

#[test]
fn memory_budget_is_enforced() {
    let cfg = SieveConfig { memory_budget: 1 << 10, ..SieveConfig::default() };
    assert!(sieve_with(1_000_000, &cfg).is_err());
}

#[test]
fn classes_partition_theta() {
    let x = 50_000.0;
    let all = chebyshev_ap(x, 1).unwrap().classes[0].clone();
    for q in [3, 8, 12, 30] {
        let s = chebyshev_ap(x, q).unwrap();
        let primes_dividing: f64 = factorize(q).iter().map(|&(p, _)| (p as f64).ln()).sum();
        let theta: f64 = s.classes.iter().map(|c| c.theta).sum();
        assert!((theta + primes_dividing - all.theta).abs() < 1e-8, "q = {q}");
        let pi: u64 = s.classes.iter().map(|c| c.pi).sum();
        assert_eq!(pi + s.primes_dividing_q, all.pi);
        for c in &s.classes {
            assert!(c.psi >= c.theta);
            assert!((c.remainder - (c.theta - x / s.phi as f64)).abs() < 1e-9);
        }
    }
}

#[test]
fn chebyshev_rejects_small_x() {
    assert!(chebyshev_ap(1.5, 3).is_err());
    assert!(chebyshev_ap(10.0, 0).is_err());
}

#[test]
fn mertens_and_liouville() {
    assert_eq!(mertens(10.0).unwrap(), -1);
    assert_eq!(mertens(1000.0).unwrap(), 2);
    assert_eq!(liouville_sum(10.0).unwrap(), 0);
    assert_eq!(liouville_sum(100.0).unwrap(), -2);
    let t = ArithTables::new(2000).unwrap();
    for n in 1..=2000 {
        assert_eq!(t.moebius(n), mobius(n), "n = {n}");
    }
}

#[test]
fn bv_grows_with_q() {
    let a = bv_sum(20_000.0, 5).unwrap();
    let b = bv_sum(20_000.0, 10).unwrap();
    assert!(b > a && a > 0.0);
    assert!(bv_sum(20_000.0, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn segments_match_trial_division(lo in 0u64..200_000, len in 0u64..3000, seg in 16usize..5000) {
        let hi = lo + len;
        let cfg = SieveConfig { segment_size: seg, ..SieveConfig::default() };
        let t = sieve_with(hi, &cfg).unwrap();
        let got: Vec<u64> = t.up_to(hi).iter().copied().filter(|&p| p >= lo).collect();
        prop_assert_eq!(got, trial_primes(lo, hi));
    }

    #[test]
    fn phi_matches_count(n in 1u64..5000) {
        let direct = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
        prop_assert_eq!(euler_phi(n), direct);
        let prod: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
        prop_assert_eq!(prod, n);
    }
}
