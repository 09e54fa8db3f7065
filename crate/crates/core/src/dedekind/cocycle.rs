//! The integer cocycle Φ, the real cocycle φ and its shift ψ, and the Dedekind symbol.
//!
//! For `c = 0` the automorphy factor `(cz + d)/(i sign(-d))` is the constant
//! `d/(i sign(-d)) = i`, whose principal logarithm carries `pi i/2`. That is
//! absorbed into `φ(±T^m) = m/12 - 1/4`, which is why φ and `Φ/12` differ
//! exactly on the c = 0 matrices. The resulting ψ satisfies
//! `ψ(T^m) = m/12` and `ψ(-I) = -1/2`.

use num_traits::{Signed, Zero};

use crate::cosets::{complete_matrix, DoubleCoset};
use crate::dedekind::matrix::UnimodularMatrix;
use crate::dedekind::sums::dedekind_sum_big;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Φ(γ): `b/d` if `c = 0`, else `(a + d)/c - 12 sign(c) s(a; |c|)`. Always an integer.
pub fn phi_cocycle(g: &UnimodularMatrix) -> Result<Rational> {
    let value = if g.c().is_zero() {
        Rational::from_bigs(g.b().clone(), g.d().clone())
    } else {
        let s = dedekind_sum_big(g.a(), &g.c().abs())?;
        let twelve_s = &Rational::from(if g.c().is_positive() { 12i64 } else { -12 }) * &s;
        &Rational::from_bigs(g.a() + g.d(), g.c().clone()) - &twelve_s
    };
    if !value.is_integer() {
        return Err(Error::IntegralityViolation {
            value: value.to_string(),
        });
    }
    Ok(value)
}

/// φ(γ) for SL(2, Z): `Φ/12`, shifted by `-1/4` on the c = 0 matrices.
pub fn phi_normalized(g: &UnimodularMatrix) -> Result<Rational> {
    let phi = &phi_cocycle(g)? / &Rational::from(12i64);
    if g.c().is_zero() {
        Ok(&phi - &Rational::new(1, 4))
    } else {
        Ok(phi)
    }
}

/// ψ(γ) = φ(γ) - sign(c(-d))/4 with `c(-d) = c` if `c != 0`, else `-d`.
///
/// Defined on matrices, not on ±-classes: `ψ(-γ) != ψ(γ)` in general.
pub fn psi_cocycle(g: &UnimodularMatrix) -> Result<Rational> {
    let phi = phi_normalized(g)?;
    let positive = if g.c().is_zero() {
        g.d().is_negative()
    } else {
        g.c().is_positive()
    };
    let quarter = Rational::new(1, 4);
    Ok(if positive {
        &phi - &quarter
    } else {
        &phi + &quarter
    })
}

/// `(a + d)/(12c) - φ(γ)` for any matrix with `c != 0`.
pub fn symbol_from_matrix(g: &UnimodularMatrix) -> Result<Rational> {
    if g.c().is_zero() {
        return Err(Error::InfinityCoset);
    }
    let trace_part = Rational::from_bigs(g.a() + g.d(), 12 * g.c());
    Ok(&trace_part - &phi_normalized(g)?)
}

/// The Dedekind symbol of a double coset of SL(2, Z), via its canonical completion.
pub fn dedekind_symbol(coset: &DoubleCoset) -> Result<Rational> {
    if !coset.group().is_sl2z() {
        return Err(Error::UnsupportedGroup {
            op: "dedekind_symbol",
            group: coset.group().to_string(),
        });
    }
    symbol_from_matrix(&complete_matrix(coset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::GroupSpec;
    use crate::dedekind::matrix::random_group_word;
    use crate::dedekind::sums::dedekind_sum_naive;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::new(a, b, c, d).unwrap()
    }

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_cocycle(&m(1, 1, 0, 1)).unwrap(), r(1, 1));
        assert_eq!(phi_cocycle(&m(0, -1, 1, 0)).unwrap(), Rational::zero());
        assert_eq!(phi_cocycle(&m(1, 0, 1, 1)).unwrap(), r(2, 1));
        assert_eq!(phi_cocycle(&m(-1, 0, 0, -1)).unwrap(), Rational::zero());
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_cocycle(&m(1, 1, 0, 1)).unwrap(), r(1, 12));
        assert_eq!(psi_cocycle(&m(1, 5, 0, 1)).unwrap(), r(5, 12));
        assert_eq!(psi_cocycle(&m(0, -1, 1, 0)).unwrap(), r(-1, 4));
        assert_eq!(psi_cocycle(&m(-1, 0, 0, -1)).unwrap(), r(-1, 2));
        assert_eq!(
            psi_cocycle(&UnimodularMatrix::identity()).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn psi_is_additive_across_translations() {
        // ψ(T^m γ T^n) = ψ(γ) + (m + n)/12
        for seed in 0..200 {
            let g = random_group_word(1 + seed as usize % 12, seed).unwrap();
            let base = psi_cocycle(&g).unwrap();
            for (mm, nn) in [(1, 0), (0, 1), (-2, 3), (4, -1)] {
                let h = &(&UnimodularMatrix::t_pow(mm) * &g) * &UnimodularMatrix::t_pow(nn);
                let expect = &base + &r((mm + nn) as i128, 12);
                assert_eq!(psi_cocycle(&h).unwrap(), expect, "g = {g}");
            }
        }
    }

    #[test]
    fn phi_is_integral_on_random_words() {
        for seed in 0..500 {
            let g = random_group_word(1 + seed as usize % 30, seed).unwrap();
            assert!(phi_cocycle(&g).unwrap().is_integer());
        }
    }

    #[test]
    fn symbol_examples() {
        let g = GroupSpec::sl2z();
        let sym = |a, c| dedekind_symbol(&DoubleCoset::new(g, a, c).unwrap()).unwrap();
        assert_eq!(sym(1, 3), r(1, 18));
        assert_eq!(sym(0, 1), Rational::zero());
        assert_eq!(sym(2, 5), Rational::zero());
        assert_eq!(sym(2, 5), dedekind_sum_naive(2, 5).unwrap());
    }

    #[test]
    fn symbol_rejects_infinity_and_other_groups() {
        assert_eq!(
            symbol_from_matrix(&m(1, 3, 0, 1)).unwrap_err(),
            Error::InfinityCoset
        );
        let g0 = GroupSpec::gamma0(2).unwrap();
        let coset = DoubleCoset::new(g0, 1, 2).unwrap();
        assert_eq!(
            dedekind_symbol(&coset).unwrap_err().name(),
            "UnsupportedGroup"
        );
    }

    #[test]
    fn symbol_with_negative_c_is_signed_sum() {
        // sign(c) s(a; |c|) for c < 0
        let g = m(-1, 0, -3, -1);
        assert_eq!(
            symbol_from_matrix(&g).unwrap(),
            -dedekind_sum_naive(-1, 3).unwrap()
        );
    }
}
