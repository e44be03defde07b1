//! Smallest-prime-factor sieve and everything built on it: bulk profile
//! computation, CSV emission, and range scans for the behaviour of
//! `V(n+1)/V(n)` and `V(n+1)-V(n)`.

use crate::arith::{ArithProfile, Factorization};
use crate::error::Error;
use std::io::{self, Write};

/// Default memory cap on the sieve limit.
pub const DEFAULT_LIMIT_CAP: u64 = 100_000_000;

/// Table of least prime factors for `2..=limit`, built by a linear sieve
/// (each composite is crossed exactly once, by its smallest prime).
///
/// Entries are 32-bit, so the limit must stay below 2^32; the default cap is
/// far below that. The table is immutable after construction and can be
/// shared freely across threads.
pub struct SpfTable {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfTable {
    /// Builds the table for `2..=limit` under [`DEFAULT_LIMIT_CAP`].
    pub fn new(limit: u64) -> Result<SpfTable, Error> {
        SpfTable::with_cap(limit, DEFAULT_LIMIT_CAP)
    }

    /// Builds the table with an explicit cap.
    pub fn with_cap(limit: u64, cap: u64) -> Result<SpfTable, Error> {
        if limit < 2 {
            return Err(Error::InvalidInput("sieve limit must be at least 2".into()));
        }
        if limit > cap {
            return Err(Error::CapExceeded { requested: limit, cap });
        }
        if limit >= u32::MAX as u64 {
            return Err(Error::Overflow(
                "sieve entries are 32-bit; limit must be below 2^32".into(),
            ));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let spf_i = spf[i];
            for &p in &primes {
                if p > spf_i || i * p as usize > n {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        Ok(SpfTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Least prime dividing `n`, for `2 <= n <= limit`.
    pub fn spf(&self, n: u64) -> u64 {
        assert!((2..=self.limit).contains(&n), "spf query out of range");
        self.spf[n as usize] as u64
    }

    /// Factorization of `n <= limit` by walking the chain of least primes.
    pub fn factorize(&self, n: u64) -> Result<Factorization, Error> {
        if n == 0 || n > self.limit {
            return Err(Error::InvalidInput(format!(
                "n must lie in [1, {}]; got {n}",
                self.limit
            )));
        }
        let mut factors = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        Factorization::from_factors(&factors)
    }

    /// Profile of a single `n <= limit`, all four functions in one chain walk.
    pub fn profile(&self, n: u64) -> Result<ArithProfile, Error> {
        if n == 0 || n > self.limit {
            return Err(Error::InvalidInput(format!(
                "n must lie in [1, {}]; got {n}",
                self.limit
            )));
        }
        // limit < 2^32 keeps every accumulator far below u64::MAX:
        // psi, sigma < 6n < 2^35.
        let mut v = 1u64;
        let mut phi = 1u64;
        let mut psi = 1u64;
        let mut sigma = 1u64;
        let mut squarefree = true;
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut pe = 1u64;
            let mut sig = 1u64;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                pe *= p;
                sig = sig * p + 1;
                e += 1;
            }
            squarefree &= e == 1;
            v *= pe - pe / p + 1;
            phi *= pe - pe / p;
            psi *= (pe / p) * (p + 1);
            sigma *= sig;
        }
        Ok(ArithProfile { n, v, phi, psi, sigma, squarefree })
    }

    /// Streaming profiles for `lo..=hi` in increasing order; nothing is
    /// materialized beyond the current element.
    pub fn profiles(&self, lo: u64, hi: u64) -> Result<Profiles<'_>, Error> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidInput(format!("bad interval [{lo}, {hi}]")));
        }
        if hi > self.limit {
            return Err(Error::InvalidInput(format!(
                "interval end {hi} exceeds sieve limit {}",
                self.limit
            )));
        }
        Ok(Profiles { table: self, next: lo, end: hi })
    }

    /// Scans `[lo, hi]`, comparing `V(n+1)` with `V(n)` for every `n` in the
    /// interval (so `hi + 1` must also be under the sieve limit), tracking
    /// membership counts, difference extrema, and identity violations.
    pub fn scan(&self, lo: u64, hi: u64, options: &ScanOptions) -> Result<RangeScanResult, Error> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidInput(format!("bad interval [{lo}, {hi}]")));
        }
        if hi + 1 > self.limit {
            return Err(Error::InvalidInput(format!(
                "scan needs profiles through {}; sieve limit is {}",
                hi + 1,
                self.limit
            )));
        }
        let span = hi - lo + 1;
        let store_lists = span <= options.list_threshold;
        let mut above = Membership::new(store_lists);
        let mut below = Membership::new(store_lists);
        let mut equal_points = Vec::new();
        let mut max_diff: Option<DiffPoint> = None;
        let mut min_diff: Option<DiffPoint> = None;
        let mut violations = Vec::new();

        let mut current = self.profile(lo)?;
        for n in lo..=hi {
            let next = self.profile(n + 1)?;
            record_identity_violations(&current, &mut violations);
            let diff = next.v as i64 - current.v as i64;
            match diff.cmp(&0) {
                std::cmp::Ordering::Greater => above.push(n),
                std::cmp::Ordering::Less => below.push(n),
                std::cmp::Ordering::Equal => equal_points.push(n),
            }
            // Strict comparisons keep the first (smallest n) on ties.
            if max_diff.map_or(true, |m| diff > m.diff) {
                max_diff = Some(DiffPoint { n, diff });
            }
            if min_diff.map_or(true, |m| diff < m.diff) {
                min_diff = Some(DiffPoint { n, diff });
            }
            current = next;
        }

        Ok(RangeScanResult {
            lo,
            hi,
            above,
            below,
            equal_points,
            max_diff: max_diff.expect("non-empty interval"),
            min_diff: min_diff.expect("non-empty interval"),
            violations,
        })
    }
}

/// Identity checks applied to every scanned profile. Any failure is recorded
/// rather than panicking, so a scan can report exactly what broke.
fn record_identity_violations(p: &ArithProfile, out: &mut Vec<Violation>) {
    let n = p.n;
    if n == 1 {
        if p.v != 1 || p.phi != 1 || p.psi != 1 || p.sigma != 1 || !p.squarefree {
            out.push(Violation { n, description: "profile of 1 must be all ones".into() });
        }
        return;
    }
    if !(p.phi < p.v) {
        out.push(Violation { n, description: format!("phi(n) < V(n) fails: {} >= {}", p.phi, p.v) });
    }
    if !(p.v <= n) {
        out.push(Violation { n, description: format!("V(n) <= n fails: {} > {n}", p.v) });
    }
    if !(n <= p.psi) {
        out.push(Violation { n, description: format!("n <= psi(n) fails: {} < {n}", p.psi) });
    }
    if !(n <= p.sigma) {
        out.push(Violation { n, description: format!("n <= sigma(n) fails: {} < {n}", p.sigma) });
    }
    if (p.v == n) != p.squarefree {
        out.push(Violation { n, description: "V(n) = n must hold exactly for squarefree n".into() });
    }
    if n % 4 == 0 && 4 * p.v > 3 * n {
        out.push(Violation { n, description: format!("V(n) <= 3n/4 fails for 4 | n: V = {}", p.v) });
    }
    if !p.squarefree && n >= 8 && p.v > n - 2 {
        out.push(Violation {
            n,
            description: format!("V(n) <= n - 2 fails for non-squarefree n >= 8: V = {}", p.v),
        });
    }
}

pub struct Profiles<'a> {
    table: &'a SpfTable,
    next: u64,
    end: u64,
}

impl Iterator for Profiles<'_> {
    type Item = ArithProfile;

    fn next(&mut self) -> Option<ArithProfile> {
        if self.next > self.end {
            return None;
        }
        let n = self.next;
        self.next += 1;
        Some(self.table.profile(n).expect("range checked at construction"))
    }
}

/// Scan configuration. Membership lists are stored only when the interval has
/// at most `list_threshold` elements; counts are always kept.
#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub list_threshold: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { list_threshold: 1_000_000 }
    }
}

/// A membership tally with an optional explicit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub count: u64,
    pub values: Option<Vec<u64>>,
}

impl Membership {
    fn new(store: bool) -> Membership {
        Membership { count: 0, values: store.then(Vec::new) }
    }

    fn push(&mut self, n: u64) {
        self.count += 1;
        if let Some(values) = &mut self.values {
            values.push(n);
        }
    }

    pub fn contains(&self, n: u64) -> Option<bool> {
        self.values.as_ref().map(|v| v.binary_search(&n).is_ok())
    }
}

/// Location of an extreme difference `V(n+1) - V(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiffPoint {
    pub n: u64,
    pub diff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: u64,
    pub description: String,
}

/// Outcome of a scan over `[lo, hi]`.
///
/// `above` holds the n with `V(n+1) > V(n)`, `below` those with
/// `V(n+1) < V(n)`; together with `equal_points` they partition the interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeScanResult {
    pub lo: u64,
    pub hi: u64,
    pub above: Membership,
    pub below: Membership,
    pub equal_points: Vec<u64>,
    pub max_diff: DiffPoint,
    pub min_diff: DiffPoint,
    pub violations: Vec<Violation>,
}

impl RangeScanResult {
    /// The trichotomy identity: every n is classified exactly once.
    pub fn partition_holds(&self) -> bool {
        self.above.count + self.below.count + self.equal_points.len() as u64
            == self.hi - self.lo + 1
    }

    /// Merges the result for an adjacent interval on the right. The merge is
    /// deterministic (smaller n wins extrema ties) and reproduces a
    /// sequential scan of the union bit for bit.
    pub fn merge(self, right: RangeScanResult, options: &ScanOptions) -> Result<RangeScanResult, Error> {
        if right.lo != self.hi + 1 {
            return Err(Error::InvalidInput(format!(
                "cannot merge [{}, {}] with non-adjacent [{}, {}]",
                self.lo, self.hi, right.lo, right.hi
            )));
        }
        let span = right.hi - self.lo + 1;
        let store = span <= options.list_threshold;
        let join = |a: Membership, b: Membership| -> Membership {
            let values = match (store, a.values, b.values) {
                (true, Some(mut va), Some(vb)) => {
                    va.extend(vb);
                    Some(va)
                }
                _ => None,
            };
            Membership { count: a.count + b.count, values }
        };
        let pick_max = if right.max_diff.diff > self.max_diff.diff { right.max_diff } else { self.max_diff };
        let pick_min = if right.min_diff.diff < self.min_diff.diff { right.min_diff } else { self.min_diff };
        let mut equal_points = self.equal_points;
        equal_points.extend(right.equal_points);
        let mut violations = self.violations;
        violations.extend(right.violations);
        Ok(RangeScanResult {
            lo: self.lo,
            hi: right.hi,
            above: join(self.above, right.above),
            below: join(self.below, right.below),
            equal_points,
            max_diff: pick_max,
            min_diff: pick_min,
            violations,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list = |values: &Option<Vec<u64>>| -> serde_json::Value {
            match values {
                Some(v) => serde_json::Value::Array(
                    v.iter().map(|n| serde_json::Value::String(n.to_string())).collect(),
                ),
                None => serde_json::Value::Null,
            }
        };
        serde_json::json!({
            "lo": self.lo.to_string(),
            "hi": self.hi.to_string(),
            "a_members": { "count": self.above.count.to_string(), "values": list(&self.above.values) },
            "b_members": { "count": self.below.count.to_string(), "values": list(&self.below.values) },
            "equal_points": self.equal_points.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            "max_diff": { "n": self.max_diff.n.to_string(), "diff": self.max_diff.diff.to_string() },
            "min_diff": { "n": self.min_diff.n.to_string(), "diff": self.min_diff.diff.to_string() },
            "violations": self.violations.iter().map(|v| serde_json::json!({
                "n": v.n.to_string(),
                "description": v.description,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Emits profiles as CSV: header `n,V,phi,psi,sigma,squarefree`, one row per
/// n, squarefree as 0/1.
pub fn write_csv<W: Write>(out: &mut W, profiles: impl Iterator<Item = ArithProfile>) -> io::Result<()> {
    writeln!(out, "n,V,phi,psi,sigma,squarefree")?;
    for p in profiles {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            p.n,
            p.v,
            p.phi,
            p.psi,
            p.sigma,
            u8::from(p.squarefree)
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;

    #[test]
    fn spf_examples() {
        let t = SpfTable::new(10).unwrap();
        assert_eq!(t.spf(4), 2);
        assert_eq!(t.spf(9), 3);
        assert_eq!(t.spf(7), 7);
        let t = SpfTable::new(100).unwrap();
        for p in arith::primes_up_to(100) {
            assert_eq!(t.spf(p), p, "primes are their own least factor");
        }
    }

    #[test]
    fn spf_of_large_prime() {
        let t = SpfTable::new(1_000_000).unwrap();
        assert_eq!(t.spf(999_983), 999_983);
        assert!(arith::is_prime(999_983));
    }

    #[test]
    fn cap_refusal_names_the_cap() {
        match SpfTable::with_cap(1000, 100) {
            Err(Error::CapExceeded { requested, cap }) => {
                assert_eq!((requested, cap), (1000, 100));
            }
            Err(other) => panic!("expected cap refusal, got {other:?}"),
            Ok(_) => panic!("expected cap refusal, got a table"),
        }
    }

    #[test]
    fn profile_examples() {
        let t = SpfTable::new(200).unwrap();
        let one = t.profile(1).unwrap();
        assert_eq!((one.v, one.phi, one.psi, one.sigma, one.squarefree), (1, 1, 1, 1, true));
        assert_eq!(t.profile(12).unwrap().v, 9);
        assert_eq!(t.profile(100).unwrap().v, 63);
        assert_eq!(
            t.profile(100).unwrap().v,
            arith::reg_set(100).unwrap().len() as u64
        );
    }

    #[test]
    fn profiles_match_direct_evaluation() {
        let t = SpfTable::new(5_000).unwrap();
        for p in t.profiles(1, 5_000).unwrap() {
            let direct = arith::factorize(p.n).unwrap().profile().unwrap();
            assert_eq!(p, direct, "sieve and direct paths disagree at {}", p.n);
        }
    }

    #[test]
    fn scan_small_interval() {
        let t = SpfTable::new(20).unwrap();
        let r = t.scan(1, 12, &ScanOptions::default()).unwrap();
        assert!(r.partition_holds());
        assert!(r.violations.is_empty());
        assert_eq!(r.above.contains(10), Some(true));
        assert_eq!(r.below.contains(11), Some(true));
        assert_eq!(r.below.contains(7), Some(true));
        assert_eq!(r.equal_points, vec![3]);
        assert_eq!(r.above.count, 9);
        assert_eq!(r.below.count, 2);
    }

    #[test]
    fn scan_window_extrema() {
        // V(96) = 51, V(97) = 97, so the largest jump in [90, 100] is 46 at 96.
        let t = SpfTable::new(200).unwrap();
        let r = t.scan(90, 100, &ScanOptions::default()).unwrap();
        assert_eq!(r.max_diff, DiffPoint { n: 96, diff: 46 });
        assert_eq!(r.min_diff, DiffPoint { n: 95, diff: -44 });
        // Cross-check against direct evaluation over the window.
        let v = |n: u64| arith::factorize(n).unwrap().v().unwrap() as i64;
        for n in 90..=100u64 {
            let diff = v(n + 1) - v(n);
            assert!(diff <= 46 && diff >= -44);
        }
    }

    #[test]
    fn merge_reproduces_sequential_scan() {
        let t = SpfTable::new(2_001).unwrap();
        let opts = ScanOptions::default();
        let whole = t.scan(1, 2_000, &opts).unwrap();
        let left = t.scan(1, 777, &opts).unwrap();
        let right = t.scan(778, 2_000, &opts).unwrap();
        assert_eq!(left.merge(right, &opts).unwrap(), whole);
        let bad = t.scan(1, 10, &opts).unwrap();
        let disjoint = t.scan(100, 200, &opts).unwrap();
        assert!(bad.merge(disjoint, &opts).is_err());
    }

    #[test]
    fn count_only_mode_above_threshold() {
        let t = SpfTable::new(200).unwrap();
        let opts = ScanOptions { list_threshold: 10 };
        let r = t.scan(1, 100, &opts).unwrap();
        assert!(r.above.values.is_none());
        assert!(r.below.values.is_none());
        assert!(r.partition_holds());
    }

    #[test]
    fn csv_golden() {
        let t = SpfTable::new(10).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, t.profiles(1, 5).unwrap()).unwrap();
        let expected = "n,V,phi,psi,sigma,squarefree\n\
                        1,1,1,1,1,1\n\
                        2,2,1,3,3,1\n\
                        3,3,2,4,4,1\n\
                        4,3,2,6,7,0\n\
                        5,5,4,6,6,1\n";
        assert_eq!(String::from_utf8(buf).unwrap(), expected);
    }

    #[test]
    fn scan_requires_room_for_hi_plus_one() {
        let t = SpfTable::new(100).unwrap();
        assert!(t.scan(1, 100, &ScanOptions::default()).is_err());
        assert!(t.scan(1, 99, &ScanOptions::default()).is_ok());
    }
}
