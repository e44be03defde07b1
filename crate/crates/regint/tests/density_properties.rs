//! Distribution-level behaviour of the greedy selection: dense coverage of
//! (1, 10) at the default prime limit, certified gap bounds, and agreement
//! with the function values on the selected product.

use regint::arith::Factorization;
use regint::density::{evaluate_ratio, greedy_subseries, RatioKind};
use regint::ratio::Ratio;

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

#[test]
fn hundred_targets_within_tolerance() {
    let mut seed = 0x2545_F491_4F6C_DD1Du64;
    for i in 0..100 {
        let u = (xorshift(&mut seed) >> 11) as f64 / (1u64 << 53) as f64;
        let delta = 1.01 + u * (10.0 - 1.01);
        for kind in [RatioKind::PsiOverV, RatioKind::VOverPhi] {
            let r = greedy_subseries(kind, delta, 1_000_000).unwrap();
            assert!(
                r.error <= 1e-4,
                "target {i}: {} misses delta {delta} by {:e}",
                kind.name(),
                r.error
            );
            assert!(r.never_overshoots());
            assert!(!r.limit_saturated);
            let bound = r.gap_bound.expect("unsaturated run certifies a bound");
            assert!(
                r.error <= r.achieved * (bound.exp() - 1.0) + 1e-12,
                "gap bound violated at delta {delta}"
            );
        }
    }
}

#[test]
fn selected_products_match_function_values() {
    // Small targets keep the selection short enough for an exact 64-bit m.
    for (kind, delta) in [
        (RatioKind::PsiOverV, 1.25),
        (RatioKind::PsiOverV, 2.0),
        (RatioKind::VOverPhi, 1.75),
        (RatioKind::VOverPhi, 3.0),
    ] {
        let r = greedy_subseries(kind, delta, 10_000).unwrap();
        let exact = r.exact_ratio.expect("short selections stay exact");
        let eval = evaluate_ratio(kind, &r.selected_primes).unwrap();
        assert_eq!(eval.exact, Some(exact));
        let factors: Vec<(u64, u32)> = r.selected_primes.iter().map(|&p| (p, 1)).collect();
        let profile = Factorization::from_factors(&factors).unwrap().profile().unwrap();
        let direct = match kind {
            RatioKind::PsiOverV => Ratio::new(profile.psi as u128, profile.v as u128),
            RatioKind::VOverPhi => Ratio::new(profile.v as u128, profile.phi as u128),
        }
        .unwrap();
        assert_eq!(direct, exact, "function values disagree at delta {delta}");
    }
}

#[test]
fn log_value_tracks_exact_ratio() {
    let eval = evaluate_ratio(RatioKind::PsiOverV, &[2, 3, 5, 7, 11]).unwrap();
    let exact = eval.exact.unwrap();
    assert!((eval.log_value - exact.to_f64().ln()).abs() < 1e-12);
}

#[test]
fn wide_selection_drops_exact_ratio_but_keeps_log() {
    // Enough primes to overflow any 128-bit numerator.
    let primes: Vec<u64> = regint::arith::primes_up_to(300);
    let eval = evaluate_ratio(RatioKind::VOverPhi, &primes).unwrap();
    assert!(eval.exact.is_none());
    assert!(eval.log_value.is_finite() && eval.log_value > 0.0);
}
