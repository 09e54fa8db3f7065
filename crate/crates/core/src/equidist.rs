//! Equidistribution mod 1 of `{k S(a; c)}` over all cosets with `c <= x`.

use num_complex::Complex64;

use crate::cosets::{enumerate_cosets, GroupSpec};
use crate::dedekind::{dedekind_sum_fast, Weight};
use crate::error::{Error, Result};
use crate::exact_arith::gcd;
use crate::par;
use crate::sum::{unit, CompensatedComplex};

/// Number of samples per task in the stream statistics.
const SAMPLE_BLOCK: usize = 4096;

/// Where a stream came from, when it was generated rather than supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct StreamSource {
    pub k: Weight,
    pub group: GroupSpec,
    pub x: f64,
}

/// Ordered values in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleStream {
    source: Option<StreamSource>,
    values: Vec<f64>,
}

impl SampleStream {
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !(0.0..1.0).contains(*v)) {
            return Err(Error::InvalidArgument(format!(
                "stream value {v} is outside [0, 1)"
            )));
        }
        Ok(SampleStream {
            source: None,
            values,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn source(&self) -> Option<&StreamSource> {
        self.source.as_ref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn non_empty(&self) -> Result<&[f64]> {
        if self.values.is_empty() {
            Err(Error::EmptyStream)
        } else {
            Ok(&self.values)
        }
    }
}

/// `{k s(a; c)}` for every coset of SL(2, Z) with `c <= x`, in enumeration order.
pub fn sample_stream(k: &Weight, group: GroupSpec, x: f64) -> Result<SampleStream> {
    if !group.is_sl2z() {
        return Err(Error::UnsupportedGroup {
            op: "sample_stream",
            group: group.to_string(),
        });
    }
    if !k.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "weight must be positive, got {k}"
        )));
    }
    // validates x and the enumeration budget
    enumerate_cosets(group, x)?;
    let c_max = x.floor() as u64;
    let blocks = par::map_blocks(1, c_max, par::BLOCK, |lo, hi| {
        let mut out = Vec::new();
        for c in lo..=hi {
            for a in 0..c {
                if gcd(a as i64, c as i64) == 1 {
                    let s = dedekind_sum_fast(a as i64, c as i64)?;
                    out.push(k.phase(&s));
                }
            }
        }
        Ok(out)
    });
    let mut values = Vec::new();
    for block in blocks {
        values.extend(block?);
    }
    Ok(SampleStream {
        source: Some(StreamSource {
            k: k.clone(),
            group,
            x,
        }),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylReport {
    pub m: i64,
    pub weyl_sum: Complex64,
    pub normalized: f64,
}

/// `Σ e(m v)` over the stream.
pub fn weyl_sum(stream: &SampleStream, m: i64) -> Result<WeylReport> {
    let values = stream.non_empty()?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "Weyl frequency m must be nonzero".into(),
        ));
    }
    let chunks: Vec<&[f64]> = values.chunks(SAMPLE_BLOCK).collect();
    let partials = par::map_slice(&chunks, |chunk| {
        chunk
            .iter()
            .map(|&v| unit((m as f64 * v).rem_euclid(1.0)))
            .collect::<CompensatedComplex>()
            .value()
    });
    let weyl_sum = partials.into_iter().collect::<CompensatedComplex>().value();
    Ok(WeylReport {
        m,
        weyl_sum,
        normalized: (weyl_sum.norm() / values.len() as f64).min(1.0),
    })
}

/// `D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N)` over the sorted values.
pub fn star_discrepancy(stream: &SampleStream) -> Result<f64> {
    let mut sorted = stream.non_empty()?.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    Ok(sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let i = i as f64;
            ((i + 1.0) / n - x).max(x - i / n)
        })
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    pub star_discrepancy: f64,
    pub et_bound: f64,
    pub truncation: u32,
    /// Normalized Weyl sums for `m = 1..=truncation`.
    pub weyl_normalized: Vec<f64>,
}

/// Erdős–Turán: `D* <= 3/(M + 1) + 3 Σ_{m <= M} |Σ e(m v)|/(N m)`.
pub fn erdos_turan_bound(stream: &SampleStream, truncation: u32) -> Result<DiscrepancyReport> {
    stream.non_empty()?;
    if truncation == 0 {
        return Err(Error::InvalidArgument("truncation M must be >= 1".into()));
    }
    let weyl_normalized = (1..=truncation as i64)
        .map(|m| weyl_sum(stream, m).map(|w| w.normalized))
        .collect::<Result<Vec<_>>>()?;
    let tail: f64 = weyl_normalized
        .iter()
        .enumerate()
        .map(|(i, w)| w / (i + 1) as f64)
        .sum();
    Ok(DiscrepancyReport {
        star_discrepancy: star_discrepancy(stream)?,
        et_bound: 3.0 / (truncation as f64 + 1.0) + 3.0 * tail,
        truncation,
        weyl_normalized,
    })
}

/// Counts in `[j/bins, (j+1)/bins)`.
pub fn histogram(stream: &SampleStream, bins: usize) -> Result<Vec<u64>> {
    let values = stream.non_empty()?;
    if bins == 0 {
        return Err(Error::InvalidArgument("bins must be >= 1".into()));
    }
    let mut counts = vec![0u64; bins];
    for &v in values {
        let j = ((v * bins as f64) as usize).min(bins - 1);
        counts[j] += 1;
    }
    Ok(counts)
}
