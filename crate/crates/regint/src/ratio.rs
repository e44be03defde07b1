//! A minimal exact rational on `u128`, used to certify products of prime
//! ratios without floating-point ambiguity.

use std::fmt;

/// A non-negative rational kept in lowest terms. Multiplication is checked:
/// it returns `None` instead of wrapping once 128 bits are not enough.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u128,
    den: u128,
}

impl Ratio {
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    /// Builds `num/den` reduced to lowest terms. `den` must be nonzero.
    pub fn new(num: u128, den: u128) -> Option<Ratio> {
        if den == 0 {
            return None;
        }
        if num == 0 {
            return Some(Ratio { num: 0, den: 1 });
        }
        let g = gcd_u128(num, den);
        Some(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u128 {
        self.num
    }

    pub fn den(&self) -> u128 {
        self.den
    }

    /// Cross-reduced product; `None` when the result does not fit `u128`.
    pub fn checked_mul(self, other: Ratio) -> Option<Ratio> {
        let g1 = gcd_u128(self.num.max(1), other.den);
        let g2 = gcd_u128(other.num.max(1), self.den);
        let num = (self.num / g1).checked_mul(other.num / g2)?;
        let den = (self.den / g2).checked_mul(other.den / g1)?;
        Some(Ratio { num, den })
    }

    /// Nearest-double approximation. Exact (correctly rounded) whenever both
    /// parts are below 2^53, which covers every certified "exact hit".
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
