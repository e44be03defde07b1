//! Greedy prime-subseries selection: drive the ratio `psi(m)/V(m)` or
//! `V(m)/phi(m)` of a squarefree `m` (represented by its prime list) as close
//! to a target `delta > 1` as the primes below a limit allow.
//!
//! For a prime `p` the ratio gains a factor `1 + u` with `u = 1/p`
//! (psi over V) or `u = 1/(p-1)` (V over phi). Those terms decrease to zero
//! and their logs diverge, so scanning primes in increasing order and taking
//! each one that still fits under `log(delta)` converges: whenever a prime is
//! skipped, the remaining gap is smaller than that prime's term.
//!
//! Decisions are made on an exact `u128` rational for as long as it fits,
//! then on compensated log sums; this certifies hits like `delta = 1.2`
//! selecting exactly `{5}` with error 0, without trusting float equality.

use crate::arith::{is_prime, primes_up_to};
use crate::error::Error;
use crate::ratio::Ratio;

/// Default largest prime considered by [`greedy_subseries`].
pub const DEFAULT_PRIME_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    PsiOverV,
    VOverPhi,
}

impl RatioKind {
    pub fn name(self) -> &'static str {
        match self {
            RatioKind::PsiOverV => "psi_over_v",
            RatioKind::VOverPhi => "v_over_phi",
        }
    }

    pub fn parse(name: &str) -> Option<RatioKind> {
        match name {
            "psi_over_v" => Some(RatioKind::PsiOverV),
            "v_over_phi" => Some(RatioKind::VOverPhi),
            _ => None,
        }
    }
}

/// The additive term `u` a prime contributes: `1/p` or `1/(p-1)`.
pub fn term(kind: RatioKind, p: u64) -> f64 {
    match kind {
        RatioKind::PsiOverV => 1.0 / p as f64,
        RatioKind::VOverPhi => 1.0 / (p - 1) as f64,
    }
}

/// The multiplicative step `1 + u` as an exact rational.
fn step_ratio(kind: RatioKind, p: u64) -> Ratio {
    let (num, den) = match kind {
        RatioKind::PsiOverV => (p + 1, p),
        RatioKind::VOverPhi => (p, p - 1),
    };
    Ratio::new(num as u128, den as u128).expect("prime denominators are nonzero")
}

// Kahan-compensated accumulator for the log-space sum.
#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

#[derive(Debug, Clone)]
pub struct DensityApproximation {
    pub kind: RatioKind,
    pub delta: f64,
    pub selected_primes: Vec<u64>,
    /// Log of the achieved product.
    pub log_product: f64,
    pub achieved: f64,
    pub error: f64,
    /// Certified bound on `log(delta) - log_product`, from the largest prime
    /// skipped after the final selection; absent when nothing beyond the last
    /// selection was skipped.
    pub gap_bound: Option<f64>,
    pub prime_limit: u64,
    pub limit_saturated: bool,
    /// Exact reduced product while it fits 128 bits.
    pub exact_ratio: Option<Ratio>,
}

impl DensityApproximation {
    /// Re-walks the selection and confirms that no prefix product exceeds
    /// `delta`, using the same dual exact/log evaluation as the greedy.
    pub fn never_overshoots(&self) -> bool {
        let mut state = ProductState::new();
        for &p in &self.selected_primes {
            state.include(self.kind, p);
            if !state.within(self.delta) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.name(),
            "delta": self.delta,
            "selected_primes": self.selected_primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "log_product": self.log_product,
            "achieved": self.achieved,
            "error": self.error,
            "gap_bound": self.gap_bound,
            "prime_limit": self.prime_limit.to_string(),
            "limit_saturated": self.limit_saturated,
            "exact_ratio": self.exact_ratio.map(|r| serde_json::json!({
                "num": r.num().to_string(),
                "den": r.den().to_string(),
            })),
        })
    }
}

// Running product, exact for as long as u128 holds it, log-space after.
struct ProductState {
    exact: Option<Ratio>,
    log_sum: Kahan,
}

impl ProductState {
    fn new() -> ProductState {
        ProductState { exact: Some(Ratio::ONE), log_sum: Kahan::default() }
    }

    /// Would including `p` keep the product at or under `delta`?
    fn fits(&self, kind: RatioKind, p: u64, delta: f64, log_delta: f64) -> bool {
        if let Some(r) = self.exact {
            if let Some(next) = r.checked_mul(step_ratio(kind, p)) {
                return next.to_f64() <= delta;
            }
        }
        let mut probe = self.log_sum;
        probe.add((term(kind, p)).ln_1p());
        probe.sum <= log_delta
    }

    fn include(&mut self, kind: RatioKind, p: u64) {
        self.exact = self.exact.and_then(|r| r.checked_mul(step_ratio(kind, p)));
        self.log_sum.add(term(kind, p).ln_1p());
    }

    fn within(&self, delta: f64) -> bool {
        match self.exact {
            Some(r) => r.to_f64() <= delta,
            None => self.log_sum.sum <= delta.ln(),
        }
    }

    fn achieved(&self) -> f64 {
        match self.exact {
            Some(r) => r.to_f64(),
            None => self.log_sum.sum.exp(),
        }
    }

    fn log_product(&self) -> f64 {
        match self.exact {
            Some(r) => r.to_f64().ln(),
            None => self.log_sum.sum,
        }
    }
}

/// Scans primes up to `prime_limit` in increasing order and takes every one
/// whose step keeps the product at or under `delta` (ties included).
pub fn greedy_subseries(kind: RatioKind, delta: f64, prime_limit: u64) -> Result<DensityApproximation, Error> {
    if !delta.is_finite() || delta <= 1.0 {
        return Err(Error::InvalidInput(format!("delta must be a finite number above 1; got {delta}")));
    }
    if prime_limit < 2 {
        return Err(Error::InvalidInput("prime limit must be at least 2".into()));
    }
    let log_delta = delta.ln();
    let primes = primes_up_to(prime_limit);
    let mut state = ProductState::new();
    let mut selected = Vec::new();
    let mut largest_skipped: Option<u64> = None;
    for &p in &primes {
        if state.fits(kind, p, delta, log_delta) {
            state.include(kind, p);
            selected.push(p);
        } else {
            largest_skipped = Some(p);
        }
    }
    // The gap bound needs a skip after the final selection; the increasing
    // scan order means that is just the largest skipped prime, when it beats
    // the last selection.
    let beyond_last = match (largest_skipped, selected.last()) {
        (Some(q), Some(&last)) if q > last => Some(q),
        (Some(q), None) => Some(q),
        _ => None,
    };
    let achieved = state.achieved();
    Ok(DensityApproximation {
        kind,
        delta,
        selected_primes: selected,
        log_product: state.log_product(),
        achieved,
        error: (achieved - delta).abs(),
        gap_bound: beyond_last.map(|q| term(kind, q).ln_1p()),
        prime_limit,
        limit_saturated: beyond_last.is_none(),
        exact_ratio: state.exact,
    })
}

/// Value of the ratio for an explicit prime list: the exact reduced rational
/// when it fits 128 bits (`None` on width overflow, not an error) plus the
/// log-space value always.
pub struct RatioEvaluation {
    pub exact: Option<Ratio>,
    pub log_value: f64,
}

pub fn evaluate_ratio(kind: RatioKind, primes: &[u64]) -> Result<RatioEvaluation, Error> {
    let mut last = 0u64;
    for &p in primes {
        if p <= last {
            return Err(Error::InvalidInput("primes must strictly increase".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        last = p;
    }
    let mut exact = Some(Ratio::ONE);
    let mut log_sum = Kahan::default();
    for &p in primes {
        exact = exact.and_then(|r| r.checked_mul(step_ratio(kind, p)));
        log_sum.add(term(kind, p).ln_1p());
    }
    Ok(RatioEvaluation { exact, log_value: log_sum.sum })
}
