use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// An element `(a b; c d)` of SL(2, Z).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMatrix {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        if m.det().is_one() {
            Ok(m)
        } else {
            Err(Error::NotUnimodular(m.to_string()))
        }
    }

    fn new_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let m = UnimodularMatrix { a, b, c, d };
        debug_assert!(m.det().is_one());
        m
    }

    pub fn identity() -> Self {
        Self::new_unchecked(1.into(), 0.into(), 0.into(), 1.into())
    }

    /// `S = (0 -1; 1 0)`.
    pub fn s() -> Self {
        Self::new_unchecked(0.into(), (-1).into(), 1.into(), 0.into())
    }

    /// `T^m = (1 m; 0 1)`.
    pub fn t_pow(m: i64) -> Self {
        Self::new_unchecked(1.into(), m.into(), 0.into(), 1.into())
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn inverse(&self) -> Self {
        Self::new_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// Entries as `[a, b, c, d]` when all fit in `i64`.
    pub fn to_i64s(&self) -> Option<[i64; 4]> {
        Some([
            self.a.to_i64()?,
            self.b.to_i64()?,
            self.c.to_i64()?,
            self.d.to_i64()?,
        ])
    }

    /// The automorphy factor `j(g, z) = cz + d`.
    pub fn j(&self, z: Complex64) -> Complex64 {
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        z * c + d
    }

    /// Möbius action `z -> (az + b)/(cz + d)`.
    pub fn act(&self, z: Complex64) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (z * a + b) / self.j(z)
    }
}

impl<'b> Mul<&'b UnimodularMatrix> for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, r: &'b UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix::new_unchecked(
            &self.a * &r.a + &self.b * &r.c,
            &self.a * &r.b + &self.b * &r.d,
            &self.c * &r.a + &self.d * &r.c,
            &self.c * &r.b + &self.d * &r.d,
        )
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, r: UnimodularMatrix) -> UnimodularMatrix {
        &self * &r
    }
}

impl Neg for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn neg(self) -> UnimodularMatrix {
        UnimodularMatrix::new_unchecked(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn neg(self) -> UnimodularMatrix {
        -&self
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators of SL(2, Z) used for random words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    SInv,
    T,
    TInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::S, Generator::SInv, Generator::T, Generator::TInv];

    pub fn matrix(self) -> UnimodularMatrix {
        match self {
            Generator::S => UnimodularMatrix::s(),
            Generator::SInv => UnimodularMatrix::s().inverse(),
            Generator::T => UnimodularMatrix::t(),
            Generator::TInv => UnimodularMatrix::t_pow(-1),
        }
    }
}

/// `length` generators drawn uniformly, deterministically from `seed`.
pub fn random_word(length: usize, seed: u64) -> Vec<Generator> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..length)
        .map(|_| Generator::ALL[rng.random_range(0..Generator::ALL.len())])
        .collect()
}

/// Left-to-right product of a word.
pub fn word_product(word: &[Generator]) -> UnimodularMatrix {
    word.iter()
        .fold(UnimodularMatrix::identity(), |acc, g| &acc * &g.matrix())
}

/// Product of a random word of the given length.
pub fn random_group_word(length: usize, seed: u64) -> Result<UnimodularMatrix> {
    if length == 0 {
        return Err(Error::InvalidArgument("word length must be >= 1".into()));
    }
    let m = word_product(&random_word(length, seed));
    if !m.det().is_one() {
        return Err(Error::NotUnimodular(m.to_string()));
    }
    Ok(m)
}

impl Default for UnimodularMatrix {
    fn default() -> Self {
        Self::identity()
    }
}

impl UnimodularMatrix {
    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn rejects_bad_determinant() {
        let err = UnimodularMatrix::new(2, 0, 0, 1).unwrap_err();
        assert_eq!(err.name(), "NotUnimodular");
    }

    #[test]
    fn word_examples() {
        assert_eq!(word_product(&[Generator::T]), m(1, 1, 0, 1));
        assert_eq!(word_product(&[Generator::S, Generator::T]), m(0, -1, 1, 1));
        let s = UnimodularMatrix::s();
        assert_eq!(&s * &s, -UnimodularMatrix::identity());
        assert!((&s * &Generator::SInv.matrix()).is_identity());
    }

    #[test]
    fn random_words_are_deterministic_and_unimodular() {
        for seed in 0..50 {
            let g = random_group_word(1 + seed as usize % 30, seed).unwrap();
            assert!(g.det().is_one());
            assert_eq!(g, random_group_word(1 + seed as usize % 30, seed).unwrap());
        }
        assert_ne!(random_word(40, 1), random_word(40, 2));
        assert!(random_group_word(0, 1).is_err());
    }

    #[test]
    fn action_is_compatible_with_products() {
        let g = m(2, 1, 1, 1);
        let h = m(1, -3, 0, 1);
        let z = Complex64::new(0.3, 1.7);
        let lhs = (&g * &h).act(z);
        let rhs = g.act(h.act(z));
        assert!((lhs - rhs).norm() < 1e-12);
        assert!(((&g * &h).j(z) - g.j(h.act(z)) * h.j(z)).norm() < 1e-12);
    }
}
