//! Named verification suites: each one packages a claim about the library so
//! it can be re-run from the command line or from the acceptance tests with a
//! single call.

use crate::arith::{factorize, gcd};
use crate::density::{evaluate_ratio, greedy_subseries, RatioKind};
use crate::error::Error;
use crate::ratio::Ratio;
use crate::sieve::{ScanOptions, SpfTable};
use crate::witness::{
    linnik_witness_liminf, linnik_witness_limsup, prop1_ascending_witness,
    prop1_descending_witness, prop3_gap_witness, GapDirection, WitnessDetails,
};
use crate::Factorization;

/// Counts over the scan of `[1, 100000]`, fixed by a first verified run and
/// kept as regression values. The single equal point in that interval is
/// n = 3, so the two counts plus one partition the interval.
pub const A_MEMBERS_AT_100_000: u64 = 66_122;
pub const B_MEMBERS_AT_100_000: u64 = 33_877;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn counts(&self) -> (usize, usize) {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        (ok, self.checks.len())
    }
}

pub const SUITE_NAMES: [&str; 8] = [
    "oracle",
    "identities",
    "ratio_sets",
    "multiplicativity",
    "extremes",
    "witnesses",
    "density",
    "cross",
];

/// Runs one named suite, or all of them for `"all"`. `limit` overrides the
/// suite's principal bound where one exists.
pub fn run_suite(name: &str, limit: Option<u64>) -> Result<Vec<SuiteResult>, Error> {
    let one = |r: SuiteResult| Ok(vec![r]);
    match name {
        "oracle" => one(oracle_counts(limit.unwrap_or(3_000))),
        "identities" => one(identity_range(limit.unwrap_or(1_000_000))?),
        "ratio_sets" => one(ratio_sets_scan(limit.unwrap_or(100_000))?),
        "multiplicativity" => one(multiplicativity_grid(limit.unwrap_or(200))?),
        "extremes" => one(difference_extremes(limit.unwrap_or(1_000_000))?),
        "witnesses" => one(witness_examples(limit.unwrap_or(1_000_000))),
        "density" => one(density_targets(limit.unwrap_or(1_000_000))),
        "cross" => one(cross_consistency(limit.unwrap_or(1_000_000))),
        "all" => {
            let mut all = Vec::new();
            for suite in SUITE_NAMES {
                all.extend(run_suite(suite, limit)?);
            }
            Ok(all)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?} or \"all\""
        ))),
    }
}

/// Brute-force regular count: walks every x in `[0, n)` for every `a`,
/// deliberately avoiding the gcd criterion so it can stand as an independent
/// reference for it.
pub fn count_regular_brute(n: u64) -> u64 {
    (1..=n).filter(|&a| brute_has_solution(a, n)).count() as u64
}

fn brute_has_solution(a: u64, n: u64) -> bool {
    let target = a % n;
    let sq = ((a as u128 * a as u128) % n as u128) as u64;
    let mut residue = 0u64;
    for _ in 0..n {
        if residue == target {
            return true;
        }
        residue += sq;
        if residue >= n {
            residue -= n;
        }
    }
    false
}

/// Criterion: V from the factorization formula equals the brute-force count
/// of solvable congruences for every n up to the limit.
pub fn oracle_counts(limit: u64) -> SuiteResult {
    let mut mismatches = Vec::new();
    for n in 1..=limit {
        let v = factorize(n).and_then(|f| f.v()).expect("small n cannot overflow");
        if v != count_regular_brute(n) {
            mismatches.push(n);
            if mismatches.len() >= 5 {
                break;
            }
        }
    }
    let passed = mismatches.is_empty();
    SuiteResult {
        suite: "oracle",
        checks: vec![CheckOutcome::new(
            format!("formula count matches brute-force count for all n <= {limit}"),
            passed,
            if passed { format!("{limit} values agree") } else { format!("mismatches at {mismatches:?}") },
        )],
    }
}

/// Criterion: the identity suite over `[2, limit]` via the sieve, zero
/// violations allowed. Also pins n = 4 as the unique non-squarefree value
/// below the limit with V(n) > n - 2.
pub fn identity_range(limit: u64) -> Result<SuiteResult, Error> {
    let table = SpfTable::new(limit.max(8))?;
    let mut sandwich = 0u64;
    let mut squarefree_iff = 0u64;
    let mut three_quarters = 0u64;
    let mut minus_two = 0u64;
    let mut exceptions = Vec::new();
    for p in table.profiles(2, limit)? {
        let n = p.n;
        if !(p.phi < p.v && p.v <= n && n <= p.psi) {
            sandwich += 1;
        }
        if (p.v == n) != p.squarefree {
            squarefree_iff += 1;
        }
        if n % 4 == 0 && 4 * p.v > 3 * n {
            three_quarters += 1;
        }
        if !p.squarefree {
            if n >= 8 && p.v > n - 2 {
                minus_two += 1;
            }
            if p.v > n - 2 {
                exceptions.push(n);
            }
        }
    }
    let checks = vec![
        CheckOutcome::new(
            format!("phi(n) < V(n) <= n <= psi(n) on [2, {limit}]"),
            sandwich == 0,
            format!("{sandwich} violations"),
        ),
        CheckOutcome::new(
            "V(n) = n exactly for squarefree n",
            squarefree_iff == 0,
            format!("{squarefree_iff} violations"),
        ),
        CheckOutcome::new(
            "V(n) <= 3n/4 whenever 4 divides n",
            three_quarters == 0,
            format!("{three_quarters} violations"),
        ),
        CheckOutcome::new(
            "V(n) <= n-2 for non-squarefree n >= 8",
            minus_two == 0,
            format!("{minus_two} violations"),
        ),
        CheckOutcome::new(
            "n = 4 is the unique non-squarefree exception to V(n) <= n-2",
            exceptions == [4],
            format!("exceptions: {exceptions:?}"),
        ),
    ];
    Ok(SuiteResult { suite: "identities", checks })
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

/// Criterion: the scan of `[1, limit]` classifies plenty of n on each side of
/// ratio 1, the partition is exact, and membership agrees with direct
/// evaluation on 1000 deterministic random samples. At the canonical limit
/// of 100000 the counts are pinned to regression values.
pub fn ratio_sets_scan(limit: u64) -> Result<SuiteResult, Error> {
    let table = SpfTable::new(limit + 1)?;
    let scan = table.scan(1, limit, &ScanOptions::default())?;
    let mut checks = vec![
        CheckOutcome::new(
            "trichotomy partition of the interval",
            scan.partition_holds(),
            format!(
                "{} above + {} below + {} equal over {} values",
                scan.above.count,
                scan.below.count,
                scan.equal_points.len(),
                limit
            ),
        ),
        CheckOutcome::new("no identity violations during the scan", scan.violations.is_empty(), format!("{} violations", scan.violations.len())),
        CheckOutcome::new(
            "at least limit/10 members on each side",
            scan.above.count >= limit / 10 && scan.below.count >= limit / 10,
            format!("above = {}, below = {}", scan.above.count, scan.below.count),
        ),
    ];
    if limit == 100_000 {
        checks.push(CheckOutcome::new(
            "pinned regression counts at 100000",
            scan.above.count == A_MEMBERS_AT_100_000 && scan.below.count == B_MEMBERS_AT_100_000,
            format!(
                "above = {} (expected {A_MEMBERS_AT_100_000}), below = {} (expected {B_MEMBERS_AT_100_000})",
                scan.above.count, scan.below.count
            ),
        ));
    }
    // Direct (sieve-free) cross-check of the classification on random samples.
    if scan.above.values.is_some() {
        let mut seed = 0x9E37_79B9_7F4A_7C15u64;
        let mut disagreements = 0u64;
        for _ in 0..1000 {
            let n = xorshift(&mut seed) % limit + 1;
            let v = factorize(n).and_then(|f| f.v()).expect("small values cannot overflow");
            let v_next = factorize(n + 1).and_then(|f| f.v()).expect("small values cannot overflow");
            let (expect_above, expect_below) = (v_next > v, v_next < v);
            if scan.above.contains(n) != Some(expect_above)
                || scan.below.contains(n) != Some(expect_below)
            {
                disagreements += 1;
            }
        }
        checks.push(CheckOutcome::new(
            "1000 random memberships agree with direct evaluation",
            disagreements == 0,
            format!("{disagreements} disagreements"),
        ));
    }
    Ok(SuiteResult { suite: "ratio_sets", checks })
}

/// Criterion: `V(mn) <= m * V(n)` over the whole grid and exact
/// multiplicativity on its coprime pairs.
pub fn multiplicativity_grid(size: u64) -> Result<SuiteResult, Error> {
    let table = SpfTable::new((size * size).max(4))?;
    let v: Vec<u64> = std::iter::once(0)
        .chain(table.profiles(1, size * size)?.map(|p| p.v))
        .collect();
    let mut submultiplicative = 0u64;
    let mut multiplicative = 0u64;
    for m in 1..=size {
        for n in 1..=size {
            let vm_n = v[(m * n) as usize];
            if vm_n > m * v[n as usize] {
                submultiplicative += 1;
            }
            if gcd(m, n) == 1 && vm_n != v[m as usize] * v[n as usize] {
                multiplicative += 1;
            }
        }
    }
    Ok(SuiteResult {
        suite: "multiplicativity",
        checks: vec![
            CheckOutcome::new(
                format!("V(mn) <= m*V(n) for all m, n <= {size}"),
                submultiplicative == 0,
                format!("{submultiplicative} violations"),
            ),
            CheckOutcome::new(
                "V(mn) = V(m)V(n) on coprime pairs",
                multiplicative == 0,
                format!("{multiplicative} violations"),
            ),
        ],
    })
}

/// Criterion: the difference `V(n+1) - V(n)` reaches at least +limit/10 and
/// at most -limit/10 somewhere below the limit.
pub fn difference_extremes(limit: u64) -> Result<SuiteResult, Error> {
    let table = SpfTable::new(limit)?;
    let scan = table.scan(1, limit - 1, &ScanOptions { list_threshold: 0 })?;
    let threshold = (limit / 10) as i64;
    Ok(SuiteResult {
        suite: "extremes",
        checks: vec![
            CheckOutcome::new(
                format!("max difference >= {threshold}"),
                scan.max_diff.diff >= threshold,
                format!("max {} at n = {}", scan.max_diff.diff, scan.max_diff.n),
            ),
            CheckOutcome::new(
                format!("min difference <= -{threshold}"),
                scan.min_diff.diff <= -threshold,
                format!("min {} at n = {}", scan.min_diff.diff, scan.min_diff.n),
            ),
        ],
    })
}

/// Criterion: every witness search on the canonical inputs succeeds with all
/// checks passing; the exact ratio factorization is re-verified here for the
/// liminf reports.
pub fn witness_examples(max_steps: u64) -> SuiteResult {
    let mut checks = Vec::new();

    let prime_sets: [&[u64]; 3] = [&[2, 3], &[3, 5], &[2, 3, 5]];
    let expected_ascending = [7u64, 31, 31];
    let expected_descending = [11u64, 89, 59];
    for (i, set) in prime_sets.iter().enumerate() {
        match prop1_ascending_witness(set, max_steps) {
            Ok(r) => {
                checks.push(CheckOutcome::new(
                    format!("ascending witness for {set:?}"),
                    r.all_checks_pass() && r.witness_prime == expected_ascending[i],
                    format!("witness {}, {} checks", r.witness_prime, r.checks.len()),
                ));
            }
            Err(e) => checks.push(CheckOutcome::new(
                format!("ascending witness for {set:?}"),
                false,
                e.to_string(),
            )),
        }
        match prop1_descending_witness(set, max_steps) {
            Ok(r) => {
                checks.push(CheckOutcome::new(
                    format!("descending witness for {set:?}"),
                    r.all_checks_pass() && r.witness_prime == expected_descending[i],
                    format!("witness {}, {} checks", r.witness_prime, r.checks.len()),
                ));
            }
            Err(e) => checks.push(CheckOutcome::new(
                format!("descending witness for {set:?}"),
                false,
                e.to_string(),
            )),
        }
    }

    for x in [3u64, 5, 7, 11, 13] {
        match linnik_witness_liminf(x, max_steps) {
            Ok(r) => {
                let mut ok = r.all_checks_pass();
                // Re-verify the exact ratio factorization from the reported parts.
                if let WitnessDetails::Prop2 { smooth_part, rough_part, .. } = r.details {
                    let q = r.witness_prime;
                    let product = smooth_part * rough_part;
                    let v_prev = factorize(product).and_then(|f| f.v()).expect("q-1 fits u64");
                    let v_smooth = factorize(smooth_part).and_then(|f| f.v()).unwrap();
                    let v_rough = factorize(rough_part).and_then(|f| f.v()).unwrap();
                    let lhs = Ratio::new(q as u128, product as u128)
                        .and_then(|r1| r1.checked_mul(Ratio::new(smooth_part as u128, v_smooth as u128)?))
                        .and_then(|r12| r12.checked_mul(Ratio::new(rough_part as u128, v_rough as u128)?));
                    let rhs = Ratio::new(q as u128, v_prev as u128);
                    ok &= lhs.is_some() && lhs == rhs;
                } else {
                    ok = false;
                }
                checks.push(CheckOutcome::new(
                    format!("liminf witness for x = {x}"),
                    ok,
                    format!("witness {} after {} steps", r.witness_prime, r.steps_tried),
                ));
            }
            Err(e) => checks.push(CheckOutcome::new(format!("liminf witness for x = {x}"), false, e.to_string())),
        }
        match linnik_witness_limsup(x, max_steps) {
            Ok(r) => checks.push(CheckOutcome::new(
                format!("limsup witness for x = {x}"),
                r.all_checks_pass(),
                format!("witness {} after {} steps", r.witness_prime, r.steps_tried),
            )),
            Err(e) => checks.push(CheckOutcome::new(format!("limsup witness for x = {x}"), false, e.to_string())),
        }
    }

    // Gap witnesses grow without bound as the floor rises.
    let mut gaps = Vec::new();
    let mut ok = true;
    for p_min in [10u64, 100, 1_000, 10_000, 100_000] {
        match prop3_gap_witness(GapDirection::Up, p_min, max_steps) {
            Ok(r) => {
                if let WitnessDetails::Prop3 { gap, .. } = r.details {
                    gaps.push(gap);
                }
                ok &= r.all_checks_pass();
            }
            Err(_) => ok = false,
        }
    }
    let increasing = gaps.windows(2).all(|w| w[0] < w[1]);
    checks.push(CheckOutcome::new(
        "gap witnesses strictly increase over rising floors",
        ok && increasing && gaps.len() == 5,
        format!("gaps {gaps:?}"),
    ));

    SuiteResult { suite: "witnesses", checks }
}

// The second entry is the literal decimal target, not sqrt(2).
#[allow(clippy::approx_constant)]
const DENSITY_TARGETS: [f64; 5] = [1.1, 1.41421356, 2.0, 3.0, 10.0];

/// Criterion: greedy selection reaches every target within 1e-4 without ever
/// overshooting, and the designated exact hits come out with error zero
/// through the rational path.
pub fn density_targets(prime_limit: u64) -> SuiteResult {
    let mut checks = Vec::new();
    for kind in [RatioKind::PsiOverV, RatioKind::VOverPhi] {
        for delta in DENSITY_TARGETS {
            match greedy_subseries(kind, delta, prime_limit) {
                Ok(r) => checks.push(CheckOutcome::new(
                    format!("{} reaches {delta}", kind.name()),
                    r.error <= 1e-4 && r.never_overshoots(),
                    format!("error {:.3e} with {} primes", r.error, r.selected_primes.len()),
                )),
                Err(e) => checks.push(CheckOutcome::new(
                    format!("{} reaches {delta}", kind.name()),
                    false,
                    e.to_string(),
                )),
            }
        }
    }
    let exact_hits: [(RatioKind, f64, &[u64]); 4] = [
        (RatioKind::PsiOverV, 2.0, &[2, 3]),
        (RatioKind::PsiOverV, 1.5, &[2]),
        (RatioKind::PsiOverV, 1.2, &[5]),
        (RatioKind::VOverPhi, 2.0, &[2]),
    ];
    for (kind, delta, expected) in exact_hits {
        match greedy_subseries(kind, delta, prime_limit) {
            Ok(r) => checks.push(CheckOutcome::new(
                format!("exact hit {} at {delta}", kind.name()),
                r.selected_primes == expected && r.error == 0.0 && r.exact_ratio.is_some(),
                format!("selected {:?}, error {:e}", r.selected_primes, r.error),
            )),
            Err(e) => checks.push(CheckOutcome::new(
                format!("exact hit {} at {delta}", kind.name()),
                false,
                e.to_string(),
            )),
        }
    }
    SuiteResult { suite: "density", checks }
}

/// Criterion: for greedy outputs with at most 15 selected primes, the
/// standalone ratio evaluation and the function values on `m` (the product of
/// the selected primes) agree with the greedy's own exact ratio, all as
/// reduced rationals.
pub fn cross_consistency(prime_limit: u64) -> SuiteResult {
    let mut checks = Vec::new();
    for kind in [RatioKind::PsiOverV, RatioKind::VOverPhi] {
        for delta in DENSITY_TARGETS {
            let r = match greedy_subseries(kind, delta, prime_limit) {
                Ok(r) => r,
                Err(e) => {
                    checks.push(CheckOutcome::new(
                        format!("cross-check {} at {delta}", kind.name()),
                        false,
                        e.to_string(),
                    ));
                    continue;
                }
            };
            if r.selected_primes.len() > 15 {
                checks.push(CheckOutcome::new(
                    format!("cross-check {} at {delta}", kind.name()),
                    true,
                    format!("skipped: {} primes selected", r.selected_primes.len()),
                ));
                continue;
            }
            let eval = evaluate_ratio(kind, &r.selected_primes).expect("selection is valid");
            let factors: Vec<(u64, u32)> = r.selected_primes.iter().map(|&p| (p, 1)).collect();
            let direct = Factorization::from_factors(&factors)
                .and_then(|f| {
                    let profile = f.profile()?;
                    Ok(match kind {
                        RatioKind::PsiOverV => (profile.psi, profile.v),
                        RatioKind::VOverPhi => (profile.v, profile.phi),
                    })
                })
                .ok()
                .and_then(|(num, den)| Ratio::new(num as u128, den as u128));
            let agree = r.exact_ratio.is_some()
                && eval.exact == r.exact_ratio
                && direct == r.exact_ratio;
            checks.push(CheckOutcome::new(
                format!("cross-check {} at {delta}", kind.name()),
                agree,
                format!(
                    "greedy {:?}, standalone {:?}, direct {:?}",
                    r.exact_ratio, eval.exact, direct
                ),
            ));
        }
    }
    SuiteResult { suite: "cross", checks }
}
