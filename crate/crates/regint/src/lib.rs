//! Regular integers modulo n.
//!
//! A residue `a` in `[1, n]` is regular when `a*a*x = a (mod n)` has a
//! solution; `V(n)` counts them. This crate evaluates `V` and its companions
//! (`phi`, `psi`, `sigma`) exactly, scans ranges for the behaviour of
//! `V(n+1)/V(n)` and `V(n+1)-V(n)`, searches arithmetic progressions for
//! fully verified prime witnesses of that behaviour, and drives the ratios
//! `psi/V` and `V/phi` arbitrarily close to any target above 1 by greedy
//! prime selection.
//!
//! Modules:
//! - [`arith`]: primality, factorization, regularity, and the four functions.
//! - [`sieve`]: smallest-prime-factor table for bulk profiles and range scans.
//! - [`witness`]: bounded prime-progression searches with verified checks.
//! - [`density`]: greedy subseries selection toward a target ratio.
//! - [`verify`]: named end-to-end verification suites.

pub mod arith;
pub mod density;
pub mod error;
pub mod ratio;
pub mod sieve;
pub mod verify;
pub mod witness;

pub use arith::{factorize, gcd, is_prime, is_regular, reg_set, ArithProfile, Factorization};
pub use error::Error;
