use crate::error::{Error, Result};

/// Largest sieve the library will allocate (entries, 4 bytes each).
pub const TOTIENT_SIEVE_BUDGET: u64 = 400_000_000;

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The inverse of `a` modulo `c`, in `[0, c)`. For `c = 1` this is 0.
pub fn mod_inverse(a: i64, c: u64) -> Result<u64> {
    if c == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let residue = (a as i128).rem_euclid(c as i128) as u64;
    try_inverse(residue, c).ok_or_else(|| Error::not_coprime(a, c, gcd(a, c as i64)))
}

/// Inverse of a residue `0 <= a < c`, or `None` when `gcd(a, c) != 1`.
pub(crate) fn try_inverse(a: u64, c: u64) -> Option<u64> {
    debug_assert!(c > 0 && a < c);
    // Remainders stay below c and the Bezout coefficients below c in magnitude.
    let (mut r0, mut r1) = (c, a);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q as i128 * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(c as i128) as u64)
}

/// Euler's totient for every `c` in `1..=x`; entry `c - 1` holds `phi(c)`.
pub fn totient_sieve(x: u64) -> Result<Vec<u32>> {
    totient_sieve_with_budget(x, TOTIENT_SIEVE_BUDGET)
}

pub fn totient_sieve_with_budget(x: u64, budget: u64) -> Result<Vec<u32>> {
    if x == 0 {
        return Err(Error::InvalidArgument("totient sieve needs x >= 1".into()));
    }
    if x > budget || x > u32::MAX as u64 {
        return Err(Error::ResourceLimit {
            what: "totient sieve",
            requested: x,
            budget: budget.min(u32::MAX as u64),
        });
    }
    let n = x as usize;
    // phi[i] starts at i and is multiplied by (1 - 1/p) for each prime p | i.
    let mut phi: Vec<u32> = (0..=n as u32).collect();
    for p in 2..=n {
        if phi[p] as usize == p {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u32;
            }
        }
    }
    phi.remove(0);
    Ok(phi)
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut f = 5u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) || n.is_multiple_of(f + 2) {
            return false;
        }
        f += 6;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's totient of a single value.
pub fn totient(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}
