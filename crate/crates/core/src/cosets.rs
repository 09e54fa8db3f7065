//! Double cosets `Γ∞ \ Γ / Γ∞` for SL(2, Z) and Γ0(N): enumeration, counting and
//! the zeta function of the coset counts.
//!
//! A coset with `c != 0` is determined by its left column `(a, c)` with `c > 0`
//! and `0 <= a < c`. For Γ0(N) the admissible columns are exactly those with
//! `N | c` and `gcd(a, c) = 1`: the completion `d = a^-1 mod c`,
//! `b = (ad - 1)/c` has lower-left entry `c ≡ 0 mod N`, so it lies in Γ0(N),
//! and any matrix of Γ0(N) has such a column. Hence `a_c = φ(c) [N | c]`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::dedekind::UnimodularMatrix;
use crate::error::{Error, Result};
use crate::exact_arith::{gcd, mod_inverse, prime_divisors, totient, totient_sieve, Rational};
use crate::sum::Compensated;

/// Largest number of cosets a single enumeration may project to yield.
pub const ENUMERATION_BUDGET: u64 = 2_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sl2z,
    Gamma0,
}

/// SL(2, Z) or Γ0(N), with its index μ in PSL(2, Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    kind: GroupKind,
    level: u64,
    index: u64,
}

impl GroupSpec {
    pub fn sl2z() -> Self {
        GroupSpec {
            kind: GroupKind::Sl2z,
            level: 1,
            index: 1,
        }
    }

    /// Γ0(N); `N = 1` is SL(2, Z) itself.
    pub fn gamma0(level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be >= 1".into()));
        }
        if level == 1 {
            return Ok(Self::sl2z());
        }
        // μ = N ∏_{p | N} (1 + 1/p)
        let index = prime_divisors(level)
            .into_iter()
            .try_fold(level, |acc, p| (acc / p).checked_mul(p + 1))
            .ok_or_else(|| Error::InvalidArgument(format!("index of Γ0({level}) overflows")))?;
        Ok(GroupSpec {
            kind: GroupKind::Gamma0,
            level,
            index,
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn is_sl2z(&self) -> bool {
        self.kind == GroupKind::Sl2z
    }

    /// Hyperbolic area `V = (π/3) μ`.
    pub fn covolume(&self) -> f64 {
        PI / 3.0 * self.index as f64
    }

    /// `V/4π = μ/12`, exactly.
    pub fn v_over_4pi(&self) -> Rational {
        Rational::new(self.index as i128, 12)
    }

    pub fn contains(&self, g: &UnimodularMatrix) -> bool {
        (g.c() % BigInt::from(self.level)) == BigInt::from(0)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Sl2z => write!(f, "sl2z"),
            GroupKind::Gamma0 => write!(f, "gamma0({})", self.level),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// `sl2z`, `gamma0(N)`, `gamma0:N` or `g0:N` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if matches!(lower.as_str(), "sl2z" | "sl(2,z)" | "psl2z") {
            return Ok(Self::sl2z());
        }
        let level = ["gamma0", "g0"]
            .iter()
            .find_map(|p| lower.strip_prefix(p))
            .map(|rest| {
                rest.trim_start_matches([':', '(', '_'])
                    .trim_end_matches(')')
                    .to_string()
            })
            .and_then(|n| n.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown group {s:?}")))?;
        Self::gamma0(level)
    }
}

/// The double coset with left column `(a, c)`, `c > 0`, `0 <= a < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DoubleCoset {
    group: GroupSpec,
    c: u64,
    a: u64,
}

impl DoubleCoset {
    pub fn new(group: GroupSpec, a: u64, c: u64) -> Result<Self> {
        if c == 0 || a >= c {
            return Err(Error::InvalidCoset(format!(
                "need 0 <= a < c, got a = {a}, c = {c}"
            )));
        }
        if !c.is_multiple_of(group.level) {
            return Err(Error::InvalidCoset(format!(
                "{group} requires {} | c, got c = {c}",
                group.level
            )));
        }
        let g = gcd(a as i64, c as i64);
        if g != 1 {
            return Err(Error::not_coprime(a, c, g));
        }
        Ok(DoubleCoset { group, c, a })
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    /// The lower-right entry `d = a^-1 mod c` of the canonical completion.
    pub fn d(&self) -> u64 {
        mod_inverse(self.a as i64, self.c).expect("coset columns are coprime")
    }
}

/// Column `(a; c)` completed to `(a b; c d)` with `d = a^-1 mod c`, `b = (ad - 1)/c`.
pub fn complete_matrix(coset: &DoubleCoset) -> UnimodularMatrix {
    let (a, c, d) = (coset.a as i128, coset.c as i128, coset.d() as i128);
    let b = (a * d - 1) / c;
    UnimodularMatrix::new(a, b, c, d).expect("completion has determinant 1")
}

/// `a_c`: number of cosets with lower-left entry `c`.
pub fn coset_count_at(group: GroupSpec, c: u64) -> u64 {
    if c == 0 || !c.is_multiple_of(group.level) {
        0
    } else {
        totient(c)
    }
}

/// Residues `0 <= a < c` coprime to `c` (just `0` when `c = 1`).
pub fn units(c: u64) -> impl Iterator<Item = u64> {
    (0..c).filter(move |&a| gcd(a as i64, c as i64) == 1)
}

fn cutoff(x: f64) -> Result<u64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "cutoff must be finite and >= 0, got {x}"
        )));
    }
    Ok(x.floor() as u64)
}

/// Cosets with `c <= x`, ordered by `c` then `a`.
pub struct CosetIter {
    group: GroupSpec,
    c: u64,
    a: u64,
    c_max: u64,
}

impl Iterator for CosetIter {
    type Item = DoubleCoset;

    fn next(&mut self) -> Option<DoubleCoset> {
        while self.c <= self.c_max {
            while self.a < self.c {
                let a = self.a;
                self.a += 1;
                if gcd(a as i64, self.c as i64) == 1 {
                    return Some(DoubleCoset {
                        group: self.group,
                        c: self.c,
                        a,
                    });
                }
            }
            self.c += self.group.level;
            self.a = 0;
        }
        None
    }
}

pub fn enumerate_cosets(group: GroupSpec, x: f64) -> Result<CosetIter> {
    enumerate_cosets_with_budget(group, x, ENUMERATION_BUDGET)
}

pub fn enumerate_cosets_with_budget(group: GroupSpec, x: f64, budget: u64) -> Result<CosetIter> {
    let c_max = cutoff(x)?;
    let projected = (x * x / (PI * group.covolume())).ceil();
    if projected > budget as f64 {
        return Err(Error::ResourceLimit {
            what: "coset enumeration",
            requested: projected as u64,
            budget,
        });
    }
    Ok(CosetIter {
        group,
        c: group.level,
        a: 0,
        c_max,
    })
}

/// π(x) against the main term `x^2/(π V)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountReport {
    pub x: f64,
    pub count: u64,
    pub main_term: f64,
    pub ratio: f64,
    pub remainder: f64,
}

/// Counts cosets with `c <= x` by summing totients from a sieve.
pub fn pi_count(group: GroupSpec, x: f64) -> Result<CountReport> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "pi_count needs x >= 1, got {x}"
        )));
    }
    let n = cutoff(x)?;
    let phi = totient_sieve(n)?;
    let count: u64 = phi
        .iter()
        .enumerate()
        .filter(|(i, _)| (*i as u64 + 1).is_multiple_of(group.level))
        .map(|(_, &v)| v as u64)
        .sum();
    let main_term = x * x / (PI * group.covolume());
    Ok(CountReport {
        x,
        count,
        main_term,
        ratio: count as f64 / main_term,
        remainder: count as f64 - main_term,
    })
}

/// `Σ_{c <= x} a_c / c^{2s}`, ascending in `c` with compensated summation.
pub fn zeta_partial(group: GroupSpec, s: f64, x: f64) -> Result<f64> {
    if !(s.is_finite() && s > 0.5) {
        return Err(Error::InvalidArgument(format!(
            "zeta_partial needs s > 1/2, got {s}"
        )));
    }
    if !x.is_finite() || x < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "zeta_partial needs x >= 1, got {x}"
        )));
    }
    let phi = totient_sieve(cutoff(x)?)?;
    let acc: Compensated = phi
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1, v))
        .filter(|(c, _)| c % group.level == 0)
        .map(|(c, v)| v as f64 / (c as f64).powf(2.0 * s))
        .collect();
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(group: GroupSpec, x: f64) -> Vec<(u64, u64)> {
        enumerate_cosets(group, x)
            .unwrap()
            .map(|k| (k.a(), k.c()))
            .collect()
    }

    #[test]
    fn group_constants() {
        let g = GroupSpec::sl2z();
        assert_eq!(g.index(), 1);
        assert!((g.covolume() - PI / 3.0).abs() < 1e-15);
        assert_eq!(GroupSpec::gamma0(2).unwrap().index(), 3);
        assert_eq!(GroupSpec::gamma0(6).unwrap().index(), 12);
        assert_eq!(GroupSpec::gamma0(4).unwrap().index(), 6);
        assert_eq!(GroupSpec::gamma0(1).unwrap(), g);
        assert_eq!(
            GroupSpec::gamma0(6).unwrap().v_over_4pi(),
            Rational::new(1, 1)
        );
        assert!(GroupSpec::gamma0(0).is_err());
    }

    #[test]
    fn group_parsing() {
        assert_eq!("sl2z".parse::<GroupSpec>().unwrap(), GroupSpec::sl2z());
        for s in ["gamma0(6)", "gamma0:6", "G0:6", "gamma0_6"] {
            assert_eq!(
                s.parse::<GroupSpec>().unwrap(),
                GroupSpec::gamma0(6).unwrap()
            );
        }
        assert!("gamma1(3)".parse::<GroupSpec>().is_err());
        let g = GroupSpec::gamma0(5).unwrap();
        assert_eq!(g.to_string().parse::<GroupSpec>().unwrap(), g);
    }

    #[test]
    fn count_at_examples() {
        let sl = GroupSpec::sl2z();
        assert_eq!(coset_count_at(sl, 1), 1);
        assert_eq!(coset_count_at(sl, 10), 4);
        assert_eq!(coset_count_at(GroupSpec::gamma0(2).unwrap(), 5), 0);
        for c in 1..300 {
            assert!(coset_count_at(sl, c) <= c);
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(pairs(GroupSpec::sl2z(), 2.5), vec![(0, 1), (1, 2)]);
        assert_eq!(
            pairs(GroupSpec::gamma0(2).unwrap(), 4.0),
            vec![(1, 2), (1, 4), (3, 4)]
        );
        assert!(pairs(GroupSpec::sl2z(), 0.5).is_empty());
    }

    #[test]
    fn enumeration_budget() {
        let err = enumerate_cosets_with_budget(GroupSpec::sl2z(), 1000.0, 1000)
            .err()
            .unwrap();
        assert_eq!(err.name(), "ResourceLimit");
        assert!(enumerate_cosets(GroupSpec::sl2z(), f64::NAN).is_err());
    }

    #[test]
    fn completion_examples() {
        let sl = GroupSpec::sl2z();
        let mat = |a, c| complete_matrix(&DoubleCoset::new(sl, a, c).unwrap());
        assert_eq!(mat(0, 1), UnimodularMatrix::new(0, -1, 1, 0).unwrap());
        assert_eq!(mat(1, 2), UnimodularMatrix::new(1, 0, 2, 1).unwrap());
        assert_eq!(mat(3, 5), UnimodularMatrix::new(3, 1, 5, 2).unwrap());
    }

    #[test]
    fn coset_validation() {
        let sl = GroupSpec::sl2z();
        assert_eq!(DoubleCoset::new(sl, 2, 4).unwrap_err().name(), "NotCoprime");
        assert_eq!(
            DoubleCoset::new(sl, 5, 5).unwrap_err().name(),
            "InvalidCoset"
        );
        assert_eq!(
            DoubleCoset::new(sl, 0, 0).unwrap_err().name(),
            "InvalidCoset"
        );
        let g0 = GroupSpec::gamma0(3).unwrap();
        assert_eq!(
            DoubleCoset::new(g0, 1, 4).unwrap_err().name(),
            "InvalidCoset"
        );
    }

    #[test]
    fn completions_are_members() {
        for group in [
            GroupSpec::sl2z(),
            GroupSpec::gamma0(2).unwrap(),
            GroupSpec::gamma0(6).unwrap(),
        ] {
            for coset in enumerate_cosets(group, 60.0).unwrap() {
                let m = complete_matrix(&coset);
                assert_eq!(m.det(), BigInt::from(1));
                assert!(group.contains(&m));
                assert_eq!(m.c(), &BigInt::from(coset.c()));
                assert_eq!(m.a() % coset.c(), BigInt::from(coset.a()));
            }
        }
    }

    #[test]
    fn count_examples() {
        let r = pi_count(GroupSpec::sl2z(), 10.0).unwrap();
        assert_eq!(r.count, 32);
        assert_eq!(
            pi_count(GroupSpec::gamma0(2).unwrap(), 10.0).unwrap().count,
            13
        );
        let one = pi_count(GroupSpec::sl2z(), 1.0).unwrap();
        assert_eq!(one.count, 1);
        assert!((one.main_term - 3.0 / (PI * PI)).abs() < 1e-15);
        assert!((one.main_term - 0.3040).abs() < 1e-4);
        assert!(pi_count(GroupSpec::sl2z(), 0.5).is_err());
    }

    #[test]
    fn enumeration_matches_count() {
        for group in [
            GroupSpec::sl2z(),
            GroupSpec::gamma0(2).unwrap(),
            GroupSpec::gamma0(6).unwrap(),
        ] {
            for x in [10.0, 100.0, 1000.0] {
                let n = enumerate_cosets(group, x).unwrap().count() as u64;
                assert_eq!(n, pi_count(group, x).unwrap().count, "{group} x = {x}");
            }
        }
    }

    #[test]
    fn zeta_examples() {
        let sl = GroupSpec::sl2z();
        assert_eq!(zeta_partial(sl, 2.0, 1.0).unwrap(), 1.0);
        assert_eq!(
            zeta_partial(GroupSpec::gamma0(2).unwrap(), 2.0, 2.0).unwrap(),
            0.0625
        );
        assert!(zeta_partial(sl, 0.5, 10.0).is_err());
        assert!(zeta_partial(sl, 2.0, 0.0).is_err());
    }
}
