use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{gcd, Rational};

/// The sawtooth `((x))`: `{x} - 1/2` off the integers, 0 on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        &x.fract() - &Rational::new(1, 2)
    }
}

fn check_args(a: i64, c: i64) -> Result<()> {
    if c < 1 {
        return Err(Error::InvalidArgument(format!(
            "modulus c = {c} must be >= 1"
        )));
    }
    let g = gcd(a, c);
    if g != 1 {
        return Err(Error::not_coprime(a, c, g));
    }
    Ok(())
}

/// `s(a; c)` straight from the sawtooth definition, in O(c).
///
/// Both sawtooth factors share the denominator `2c`, so the sum is accumulated as
/// an integer over `4c^2`: `((n/c)) = (2n - c)/(2c)` for `0 < n < c` and
/// `((na/c)) = (2r - c)/(2c)` with `r = na mod c` (zero when `r = 0`).
pub fn dedekind_sum_naive(a: i64, c: i64) -> Result<Rational> {
    check_args(a, c)?;
    let c = c as i128;
    let step = (a as i128).rem_euclid(c);
    let mut r = 0i128;
    let mut acc = 0i128;
    for n in 1..c {
        r += step;
        if r >= c {
            r -= c;
        }
        if r != 0 {
            acc += (2 * n - c) * (2 * r - c);
        }
    }
    Ok(Rational::new(acc, 4 * c * c))
}

/// `(a^2 + c^2 + 1)/(12ac) - 1/4`, the reciprocity defect `s(a;c) + s(c;a)`.
fn reciprocity_term(a: i128, c: i128) -> Rational {
    let small = (|| {
        let ac = a.checked_mul(c)?;
        let num = a
            .checked_mul(a)?
            .checked_add(c.checked_mul(c)?)?
            .checked_add(1)?
            .checked_sub(ac.checked_mul(3)?)?;
        Some((num, ac.checked_mul(12)?))
    })();
    match small {
        Some((num, den)) => Rational::new(num, den),
        None => {
            let (a, c) = (BigInt::from(a), BigInt::from(c));
            let num = &a * &a + &c * &c + 1 - 3 * &a * &c;
            Rational::from_bigs(num, 12 * a * c)
        }
    }
}

/// `s(1; c) = (c - 1)(c - 2)/(12c)`.
fn base_term(c: i128) -> Rational {
    match (c - 1).checked_mul(c - 2) {
        Some(num) if c < i128::MAX / 12 => Rational::new(num, 12 * c),
        _ => {
            let c = BigInt::from(c);
            Rational::from_bigs((&c - 1) * (&c - 2), 12 * c)
        }
    }
}

/// `s(a; c)` in O(log c) rational operations.
///
/// Each step reduces `a` mod `c`, folds `a > c/2` onto `c - a` by oddness, and
/// applies reciprocity `s(a;c) = -1/4 + (a^2 + c^2 + 1)/(12ac) - s(c mod a; a)`.
/// The loop stops at `a = 1` (closed form) or `a = 0` (`c = 1`, value 0).
pub fn dedekind_sum_fast(a: i64, c: i64) -> Result<Rational> {
    check_args(a, c)?;
    let mut c = c as i128;
    let mut a = (a as i128).rem_euclid(c);
    let mut acc = Rational::zero();
    let mut negate = false;
    loop {
        if 2 * a > c {
            a = c - a;
            negate = !negate;
        }
        let term = match a {
            0 => break,
            1 => base_term(c),
            _ => reciprocity_term(a, c),
        };
        acc = if negate { &acc - &term } else { &acc + &term };
        if a == 1 {
            break;
        }
        negate = !negate;
        (a, c) = (c % a, a);
    }
    Ok(acc)
}

/// Arbitrary-precision variant of [`dedekind_sum_fast`].
pub fn dedekind_sum_big(a: &BigInt, c: &BigInt) -> Result<Rational> {
    if let (Some(a), Some(c)) = (a.to_i64(), c.to_i64()) {
        return dedekind_sum_fast(a, c);
    }
    if !c.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "modulus c = {c} must be >= 1"
        )));
    }
    let g = a.gcd(c);
    if !g.is_one() {
        return Err(Error::not_coprime(a, c, g));
    }
    let mut c = c.clone();
    let mut a = a.mod_floor(&c);
    let mut acc = Rational::zero();
    let mut negate = false;
    let quarter = Rational::new(1, 4);
    loop {
        if &a * 2 > c {
            a = &c - &a;
            negate = !negate;
        }
        if a.is_zero() {
            break;
        }
        let term = if a.is_one() {
            Rational::from_bigs((&c - 1) * (&c - 2), 12 * &c)
        } else {
            &Rational::from_bigs(&a * &a + &c * &c + 1, 12 * &a * &c) - &quarter
        };
        acc = if negate { &acc - &term } else { &acc + &term };
        if a.is_one() {
            break;
        }
        negate = !negate;
        let r = c.mod_floor(&a);
        c = std::mem::replace(&mut a, r);
    }
    Ok(acc)
}
