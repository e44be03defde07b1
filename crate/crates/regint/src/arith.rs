//! Exact integer arithmetic: primality, factorization, the regularity
//! criterion, and the multiplicative functions V, phi, psi, sigma evaluated
//! from prime-power decompositions.
//!
//! An `a` in `[1, n]` is regular modulo `n` when `a*a*x = a (mod n)` has a
//! solution. The fast criterion used here: the congruence is solvable exactly
//! when `gcd(a*a, n)` divides `a`, equivalently when every prime of `n` that
//! divides `a` divides it to the full multiplicity it has in `n`.

use crate::error::Error;
use crate::ratio::gcd_u128;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

/// Default cap for [`reg_set`] enumeration.
pub const REG_SET_CAP: u64 = 1_000_000;

/// Greatest common divisor; `gcd(0, 0) = 0` by convention.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

// Strong-pseudoprime bases with no composite survivor below 2^64
// (Sinclair's seven-base set).
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Deterministic primality test, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 101 * 101 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for mut a in MR_BASES {
        a %= n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// The primes up to `limit` inclusive, by a plain sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// An integer together with its sorted prime-power decomposition.
///
/// Invariants: primes strictly increase, every listed prime is prime, and the
/// product of the prime powers reconstructs `n` exactly. `n = 1` has an empty
/// factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit prime powers, validating every
    /// invariant. The product must fit in 64 bits.
    pub fn from_factors(factors: &[(u64, u32)]) -> Result<Factorization, Error> {
        let mut n: u64 = 1;
        let mut last = 0u64;
        for &(p, e) in factors {
            if p <= last {
                return Err(Error::InvalidInput(format!(
                    "primes must strictly increase, saw {p} after {last}"
                )));
            }
            if !is_prime(p) {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
            if e == 0 {
                return Err(Error::InvalidInput("exponents must be positive".into()));
            }
            last = p;
            let pe = checked_pow(p, e)?;
            n = n
                .checked_mul(pe)
                .ok_or_else(|| Error::Overflow("factor product exceeds 64 bits".into()))?;
        }
        Ok(Factorization {
            n,
            factors: factors.to_vec(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Count of regular residues: the product of `p^e - p^(e-1) + 1`.
    pub fn v(&self) -> Result<u64, Error> {
        self.multiplicative("V", |p, e| {
            let pe = checked_pow(p, e)?;
            Ok(pe - pe / p + 1)
        })
    }

    /// Euler totient.
    pub fn phi(&self) -> Result<u64, Error> {
        self.multiplicative("phi", |p, e| {
            let pe = checked_pow(p, e)?;
            Ok(pe - pe / p)
        })
    }

    /// Dedekind psi: the product of `p^(e-1) * (p + 1)`.
    pub fn psi(&self) -> Result<u64, Error> {
        self.multiplicative("psi", |p, e| {
            let pe1 = checked_pow(p, e - 1)?;
            pe1.checked_mul(p + 1)
                .ok_or_else(|| Error::Overflow("psi term exceeds 64 bits".into()))
        })
    }

    /// Sum of divisors, as a product of geometric sums in pure integer
    /// arithmetic.
    pub fn sigma(&self) -> Result<u64, Error> {
        self.multiplicative("sigma", |p, e| {
            let mut sum = 1u64;
            let mut power = 1u64;
            for _ in 0..e {
                power = power
                    .checked_mul(p)
                    .ok_or_else(|| Error::Overflow("sigma term exceeds 64 bits".into()))?;
                sum = sum
                    .checked_add(power)
                    .ok_or_else(|| Error::Overflow("sigma term exceeds 64 bits".into()))?;
            }
            Ok(sum)
        })
    }

    /// All four function values plus the squarefree flag.
    pub fn profile(&self) -> Result<ArithProfile, Error> {
        Ok(ArithProfile {
            n: self.n,
            v: self.v()?,
            phi: self.phi()?,
            psi: self.psi()?,
            sigma: self.sigma()?,
            squarefree: self.is_squarefree(),
        })
    }

    fn multiplicative(
        &self,
        what: &str,
        term: impl Fn(u64, u32) -> Result<u64, Error>,
    ) -> Result<u64, Error> {
        let mut acc = 1u64;
        for &(p, e) in &self.factors {
            acc = acc
                .checked_mul(term(p, e)?)
                .ok_or_else(|| Error::Overflow(format!("{what}({}) exceeds 64 bits", self.n)))?;
        }
        Ok(acc)
    }
}

fn checked_pow(p: u64, e: u32) -> Result<u64, Error> {
    p.checked_pow(e)
        .ok_or_else(|| Error::Overflow(format!("{p}^{e} exceeds 64 bits")))
}

/// Per-n record of the four function values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArithProfile {
    pub n: u64,
    pub v: u64,
    pub phi: u64,
    pub psi: u64,
    pub sigma: u64,
    pub squarefree: bool,
}

/// Factors any positive 64-bit integer: trial division by the primes below
/// 100, then Brent-cycle splitting with per-call random parameters and
/// deterministic certification of every prime found.
pub fn factorize(n: u64) -> Result<Factorization, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    for p in SMALL_PRIMES {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if m > 1 {
        if m < 101 * 101 || is_prime(m) {
            factors.push((m, 1));
        } else {
            let mut rng = SmallRng::from_entropy();
            let mut pending = vec![m];
            let mut found: Vec<u64> = Vec::new();
            while let Some(t) = pending.pop() {
                if is_prime(t) {
                    found.push(t);
                } else {
                    let d = pollard_rho(t, &mut rng);
                    pending.push(d);
                    pending.push(t / d);
                }
            }
            found.sort_unstable();
            let mut i = 0;
            while i < found.len() {
                let p = found[i];
                let mut e = 0u32;
                while i < found.len() && found[i] == p {
                    e += 1;
                    i += 1;
                }
                factors.push((p, e));
            }
        }
    }
    factors.sort_unstable_by_key(|&(p, _)| p);
    debug_assert_eq!(
        factors
            .iter()
            .map(|&(p, e)| p.checked_pow(e).unwrap())
            .product::<u64>(),
        n
    );
    Ok(Factorization { n, factors })
}

// Splits an odd composite with no prime factor below 100. Retries with fresh
// random parameters until a nontrivial divisor appears.
fn pollard_rho(n: u64, rng: &mut SmallRng) -> u64 {
    debug_assert!(n > 1 && n % 2 == 1 && !is_prime(n));
    loop {
        let c = rng.gen_range(1..n);
        let start = rng.gen_range(2..n);
        if let Some(d) = rho_round(n, start, c) {
            return d;
        }
    }
}

fn rho_round(n: u64, start: u64, c: u64) -> Option<u64> {
    let step = |x: u64| -> u64 { ((x as u128 * x as u128 + c as u128) % n as u128) as u64 };
    let mut slow = start;
    let mut fast = start;
    let mut product = 1u64;
    let mut saved = (slow, fast);
    let mut count = 0u32;
    loop {
        slow = step(slow);
        fast = step(step(fast));
        if slow == fast {
            return None;
        }
        product = mul_mod(product, slow.abs_diff(fast), n);
        count += 1;
        if count % 64 == 0 {
            let d = gcd(product, n);
            if d > 1 {
                if d < n {
                    return Some(d);
                }
                // The batch jumped past a factor; replay it one step at a time.
                let (mut s, mut f) = saved;
                for _ in 0..64 {
                    s = step(s);
                    f = step(step(f));
                    let d = gcd(s.abs_diff(f), n);
                    if d > 1 {
                        return if d < n { Some(d) } else { None };
                    }
                }
                return None;
            }
            product = 1;
            saved = (slow, fast);
        }
    }
}

/// Whether `a*a*x = a (mod n)` is solvable, decided by the gcd criterion.
///
/// `a` ranges over `[1, n]`; `a = n` stands for the zero residue, which is
/// always regular (`x = 0`).
pub fn is_regular(a: u64, n: u64) -> Result<bool, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if a == 0 || a > n {
        return Err(Error::InvalidInput(format!(
            "a must lie in [1, n]; got a={a}, n={n}"
        )));
    }
    let d = gcd_u128(a as u128 * a as u128, n as u128);
    Ok(a as u128 % d == 0)
}

/// The sorted regular residues in `[1, n]`, under the default cap.
pub fn reg_set(n: u64) -> Result<Vec<u64>, Error> {
    reg_set_with_cap(n, REG_SET_CAP)
}

/// As [`reg_set`], with an explicit enumeration cap.
pub fn reg_set_with_cap(n: u64, cap: u64) -> Result<Vec<u64>, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    let prime_powers: Vec<(u64, u64)> = factorize(n)?
        .factors()
        .iter()
        .map(|&(p, e)| (p, p.pow(e)))
        .collect();
    Ok((1..=n)
        .filter(|&a| prime_powers.iter().all(|&(p, pe)| a % p != 0 || a % pe == 0))
        .collect())
}
