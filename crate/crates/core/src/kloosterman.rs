//! Classical and multiplier-twisted Kloosterman sums, and the Vardi identity
//!
//! `Σ_a e(k S(a, c)) = e(-k/4) S(⌈k/12⌉, ⌈k/12⌉; c, χ_k)` checked modulus by modulus.

use num_complex::Complex64;

use crate::cosets::{complete_matrix, DoubleCoset, GroupSpec};
use crate::dedekind::{dedekind_symbol, multiplier, MultiplierSystem, Weight};
use crate::error::{Error, Result};
use crate::exact_arith::{gcd, is_prime, try_inverse, Rational};
use crate::par;
use crate::sum::{unit, CompensatedComplex};

/// A Kloosterman sum at one modulus together with its number of terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KloostermanValue {
    pub c: u64,
    pub m: i64,
    pub n: i64,
    pub value: Complex64,
    pub term_count: u64,
}

/// Weighting of the terms in [`kloosterman_partial_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weighting {
    Unweighted,
    OverC,
}

impl std::str::FromStr for Weighting {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unweighted" | "none" => Ok(Weighting::Unweighted),
            "over_c" | "over-c" => Ok(Weighting::OverC),
            _ => Err(Error::InvalidArgument(format!("unknown weighting {s:?}"))),
        }
    }
}

/// Pairs `(a, a^-1 mod c)` over the units mod `c`.
fn unit_pairs(c: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..c).filter_map(move |a| try_inverse(a, c).map(|d| (a, d)))
}

fn check_modulus(c: u64) -> Result<()> {
    if c == 0 {
        Err(Error::InvalidArgument("modulus c must be >= 1".into()))
    } else {
        Ok(())
    }
}

fn classical_sum(m: i64, n: i64, c: u64) -> (Complex64, u64) {
    let cm = c as i128;
    let m = (m as i128).rem_euclid(cm);
    let n = (n as i128).rem_euclid(cm);
    let mut acc = CompensatedComplex::new();
    let mut terms = 0;
    let narrow = c <= u32::MAX as u64;
    for (a, d) in unit_pairs(c) {
        let r = if narrow {
            // m, n, a, d < 2^32: each product fits, and so does the sum mod c
            ((m as u64 * a) % c + (n as u64 * d) % c) % c
        } else {
            ((m * a as i128 + n * d as i128) % cm) as u64
        };
        acc.add(unit(r as f64 / c as f64));
        terms += 1;
    }
    (acc.value(), terms)
}

/// `S(m, n; c) = Σ e((ma + nd)/c)` over units `a` with `ad ≡ 1 (mod c)`.
pub fn kloosterman_classical(m: i64, n: i64, c: u64) -> Result<KloostermanValue> {
    check_modulus(c)?;
    let (value, term_count) = classical_sum(m, n, c);
    Ok(KloostermanValue {
        c,
        m,
        n,
        value,
        term_count,
    })
}

/// `S(m, n; c)` for every `c` in `1..=c_max`.
pub fn kloosterman_scan(m: i64, n: i64, c_max: u64) -> Vec<KloostermanValue> {
    par::map_blocks(1, c_max, par::BLOCK, |lo, hi| {
        (lo..=hi)
            .map(|c| {
                let (value, term_count) = classical_sum(m, n, c);
                KloostermanValue {
                    c,
                    m,
                    n,
                    value,
                    term_count,
                }
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

fn require_sl2z(group: GroupSpec, op: &'static str) -> Result<()> {
    if group.is_sl2z() {
        Ok(())
    } else {
        Err(Error::UnsupportedGroup {
            op,
            group: group.to_string(),
        })
    }
}

/// `Σ conj(χ(γ)) e(((m - α)a + (n - α)d)/c)` over the completed coset representatives.
fn twisted_sum(
    ms: &MultiplierSystem,
    m_shift: &Rational,
    n_shift: &Rational,
    c: u64,
) -> Result<(Complex64, u64)> {
    let group = ms.group();
    let k = ms.weight();
    let mut acc = CompensatedComplex::new();
    let mut terms = 0;
    for (a, d) in unit_pairs(c) {
        let coset = DoubleCoset::new(group, a, c)?;
        let gamma = complete_matrix(&coset);
        let chi = multiplier(ms, &gamma)?;
        // frequencies are k-multiples: (m - α) = k * m_shift
        let freq = &(m_shift * &Rational::from(a as i64)) + &(n_shift * &Rational::from(d as i64));
        let arg = &freq / &Rational::from(c as i64);
        acc.add(chi.conj() * k.unit(&arg));
        terms += 1;
    }
    Ok((acc.value(), terms))
}

/// `S(⌈kV/4π⌉, ⌈kV/4π⌉; c, χ_k)` on SL(2, Z), where `m - α = kV/4π`.
pub fn kloosterman_twisted(k: &Weight, c: u64, group: GroupSpec) -> Result<KloostermanValue> {
    check_modulus(c)?;
    require_sl2z(group, "kloosterman_twisted")?;
    let ms = MultiplierSystem::new(k.clone(), group);
    let shift = group.v_over_4pi();
    let (value, term_count) = twisted_sum(&ms, &shift, &shift, c)?;
    let m = ms.frequency();
    Ok(KloostermanValue {
        c,
        m,
        n: m,
        value,
        term_count,
    })
}

/// General `S(m, n; c, χ_k)` for arbitrary frequencies; no accuracy contract.
#[cfg(feature = "experimental")]
pub fn kloosterman_twisted_general(
    m: i64,
    n: i64,
    k: &Weight,
    c: u64,
    group: GroupSpec,
) -> Result<KloostermanValue> {
    check_modulus(c)?;
    require_sl2z(group, "kloosterman_twisted_general")?;
    let ms = MultiplierSystem::new(k.clone(), group);
    let Some(alpha) = ms.alpha_exact().cloned() else {
        return Err(Error::InvalidArgument(
            "general twisted sums need a rational weight".into(),
        ));
    };
    let Weight::Exact(kr) = k else { unreachable!() };
    // express (m - α) and (n - α) as multiples of k so one phase path serves both
    let m_shift = &(&Rational::from(m) - &alpha) / kr;
    let n_shift = &(&Rational::from(n) - &alpha) / kr;
    let (value, term_count) = twisted_sum(&ms, &m_shift, &n_shift, c)?;
    Ok(KloostermanValue {
        c,
        m,
        n,
        value,
        term_count,
    })
}

/// `Σ_a e(k S(Γ∞ (a *; c *) Γ∞))` over the cosets at modulus `c`.
pub fn vardi_lhs(k: &Weight, c: u64, group: GroupSpec) -> Result<Complex64> {
    check_modulus(c)?;
    require_sl2z(group, "vardi_lhs")?;
    let mut acc = CompensatedComplex::new();
    for a in 0..c {
        if gcd(a as i64, c as i64) != 1 {
            continue;
        }
        let symbol = dedekind_symbol(&DoubleCoset::new(group, a, c)?)?;
        acc.add(k.unit(&symbol));
    }
    Ok(acc.value())
}

/// `|vardi_lhs - e(-k/4) S(⌈k/12⌉, ⌈k/12⌉; c, χ_k)|` on SL(2, Z).
pub fn vardi_check(k: &Weight, c: u64) -> Result<f64> {
    let group = GroupSpec::sl2z();
    let lhs = vardi_lhs(k, c, group)?;
    let twisted = kloosterman_twisted(k, c, group)?.value;
    let rotation = k.unit(&Rational::new(-1, 4));
    Ok((lhs - rotation * twisted).norm())
}

/// Vardi residuals for every `c` in `1..=c_max`, in order.
pub fn vardi_scan(k: &Weight, c_max: u64) -> Result<Vec<(u64, f64)>> {
    par::map_blocks(1, c_max, 8, |lo, hi| {
        (lo..=hi)
            .map(|c| vardi_check(k, c).map(|r| (c, r)))
            .collect::<Result<Vec<_>>>()
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()
    .map(|blocks| blocks.into_iter().flatten().collect())
}

/// `Σ_{c <= x} S(m, n; c)` or `Σ_{c <= x} S(m, n; c)/c`.
///
/// Blocks of moduli are summed in parallel and combined in block order, so the
/// result is independent of the thread count.
pub fn kloosterman_partial_sum(m: i64, n: i64, x: f64, weighting: Weighting) -> Result<Complex64> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "partial sum needs x >= 1, got {x}"
        )));
    }
    let c_max = x.floor() as u64;
    if c_max > crate::exact_arith::TOTIENT_SIEVE_BUDGET {
        return Err(Error::ResourceLimit {
            what: "Kloosterman partial sum",
            requested: c_max,
            budget: crate::exact_arith::TOTIENT_SIEVE_BUDGET,
        });
    }
    let blocks = par::map_blocks(1, c_max, par::BLOCK, |lo, hi| {
        let mut acc = CompensatedComplex::new();
        for c in lo..=hi {
            let (s, _) = classical_sum(m, n, c);
            acc.add(match weighting {
                Weighting::Unweighted => s,
                Weighting::OverC => s / c as f64,
            });
        }
        acc.value()
    });
    Ok(blocks.into_iter().collect::<CompensatedComplex>().value())
}

/// `|S(m, n; p)| / (2 sqrt p)`, at most 1 by Weil's bound.
pub fn weil_ratio(m: i64, n: i64, p: u64) -> Result<f64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mn = (m as i128 * n as i128).rem_euclid(p as i128);
    if mn == 0 {
        return Err(Error::not_coprime(m as i128 * n as i128, p, p));
    }
    let s = kloosterman_classical(m, n, p)?;
    Ok(s.value.norm() / (2.0 * (p as f64).sqrt()))
}
