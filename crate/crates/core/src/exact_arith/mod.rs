//! Integer and rational primitives shared by the rest of the crate.

mod int;
mod rational;

pub(crate) use int::try_inverse;
pub use int::{
    gcd, is_prime, mod_inverse, prime_divisors, totient, totient_sieve, totient_sieve_with_budget,
    TOTIENT_SIEVE_BUDGET,
};
pub use rational::Rational;
