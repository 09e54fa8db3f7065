use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::cosets::GroupSpec;
use crate::dedekind::cocycle::psi_cocycle;
use crate::dedekind::matrix::UnimodularMatrix;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::sum::unit;

/// A real weight `k`.
///
/// Rational weights keep every phase exact until the final reduction mod 1;
/// floating weights use double precision throughout.
#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Exact(Rational),
    Float(f64),
}

/// Maps a double in `[0, 1]` to `[0, 1)`; a rounded-up 1.0 is the same point mod 1.
fn wrap_unit(x: f64) -> f64 {
    if x >= 1.0 {
        0.0
    } else {
        x
    }
}

impl Weight {
    pub fn exact(k: Rational) -> Self {
        Weight::Exact(k)
    }

    pub fn integer(k: i64) -> Self {
        Weight::Exact(Rational::from(k))
    }

    pub fn float(k: f64) -> Result<Self> {
        if k.is_finite() {
            Ok(Weight::Float(k))
        } else {
            Err(Error::InvalidArgument(format!(
                "weight must be finite, got {k}"
            )))
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Weight::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Weight::Exact(r) => r.to_f64(),
            Weight::Float(k) => *k,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Weight::Exact(r) => r.signum() > 0,
            Weight::Float(k) => *k > 0.0,
        }
    }

    /// `{k x}` in `[0, 1)`.
    pub fn phase(&self, x: &Rational) -> f64 {
        match self {
            Weight::Exact(k) => wrap_unit((k * x).fract().to_f64()),
            Weight::Float(k) => {
                let whole = x.floor().to_f64();
                let part = x.fract().to_f64();
                let p = (k * whole).rem_euclid(1.0) + k * part;
                wrap_unit(p.rem_euclid(1.0))
            }
        }
    }

    /// `e(k x)` with the phase reduced mod 1 first.
    pub fn unit(&self, x: &Rational) -> Complex64 {
        unit(self.phase(x))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Exact(r) => write!(f, "{r}"),
            Weight::Float(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// `"1/2"` and `"12"` are exact; anything with a decimal point or exponent is a double.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let is_integer = {
            let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if s.contains('/') || is_integer {
            return s.parse::<Rational>().map(Weight::Exact);
        }
        let k: f64 = s
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("not a weight: {s:?}")))?;
        Weight::float(k)
    }
}

/// The weight-k multiplier `χ_k = e(k ψ)` on a group, with its cusp parameter α.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierSystem {
    weight: Weight,
    group: GroupSpec,
    alpha: f64,
    alpha_exact: Option<Rational>,
    frequency: i64,
}

impl MultiplierSystem {
    /// α = ⌈kV/4π⌉ - kV/4π.
    pub fn new(weight: Weight, group: GroupSpec) -> Self {
        let v4pi = group.v_over_4pi();
        let (alpha, alpha_exact, frequency) = match &weight {
            Weight::Exact(k) => {
                let kv = k * &v4pi;
                let ceil = -(-&kv).floor();
                let alpha = &ceil - &kv;
                let freq = ceil.to_f64() as i64;
                (alpha.to_f64(), Some(alpha), freq)
            }
            Weight::Float(k) => {
                let kv = k * v4pi.to_f64();
                let ceil = kv.ceil();
                (ceil - kv, None, ceil as i64)
            }
        };
        MultiplierSystem {
            weight,
            group,
            alpha,
            alpha_exact,
            frequency,
        }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    /// The scalar in `[0, 1)` with `χ(T) = e(-α)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn alpha_exact(&self) -> Option<&Rational> {
        self.alpha_exact.as_ref()
    }

    /// ⌈kV/4π⌉, the Kloosterman frequency paired with this system.
    pub fn frequency(&self) -> i64 {
        self.frequency
    }
}

/// χ_k(γ) = e(k ψ(γ)) on SL(2, Z).
pub fn multiplier(ms: &MultiplierSystem, g: &UnimodularMatrix) -> Result<Complex64> {
    if !ms.group.is_sl2z() {
        return Err(Error::UnsupportedGroup {
            op: "multiplier",
            group: ms.group.to_string(),
        });
    }
    Ok(ms.weight.unit(&psi_cocycle(g)?))
}
