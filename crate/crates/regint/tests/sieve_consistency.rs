//! Sieve-vs-direct agreement at scale, plus distributional sanity checks.

use regint::arith::factorize;
use regint::sieve::{ScanOptions, SpfTable};

#[test]
fn sieve_agrees_with_direct_path_to_100_000() {
    let table = SpfTable::new(100_000).unwrap();
    for p in table.profiles(1, 100_000).unwrap() {
        let direct = factorize(p.n).unwrap().profile().unwrap();
        assert_eq!(p, direct, "sieve and direct evaluation disagree at {}", p.n);
    }
}

#[test]
fn squarefree_density_near_six_over_pi_squared() {
    let table = SpfTable::new(1_000_000).unwrap();
    let count = table
        .profiles(1, 1_000_000)
        .unwrap()
        .filter(|p| p.squarefree)
        .count() as f64;
    let density = count / 1e6;
    let expected = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
    assert!(
        (density - expected).abs() <= 0.005,
        "squarefree density {density} too far from {expected}"
    );
}

#[test]
fn equal_points_reverify_exactly() {
    let table = SpfTable::new(100_001).unwrap();
    let scan = table.scan(1, 100_000, &ScanOptions::default()).unwrap();
    for &n in &scan.equal_points {
        let v = factorize(n).unwrap().v().unwrap();
        let v_next = factorize(n + 1).unwrap().v().unwrap();
        assert_eq!(v, v_next, "equal point {n} does not reverify");
    }
    // V(3) = V(4) is the classical first coincidence.
    assert!(scan.equal_points.contains(&3));
}

#[test]
fn parallel_halves_merge_to_sequential_result() {
    let table = SpfTable::new(50_001).unwrap();
    let opts = ScanOptions::default();
    let whole = table.scan(1, 50_000, &opts).unwrap();
    let mid = 24_137;
    let (left, right) = std::thread::scope(|scope| {
        let left = scope.spawn(|| table.scan(1, mid, &opts).unwrap());
        let right = scope.spawn(|| table.scan(mid + 1, 50_000, &opts).unwrap());
        (left.join().unwrap(), right.join().unwrap())
    });
    assert_eq!(left.merge(right, &opts).unwrap(), whole);
}
