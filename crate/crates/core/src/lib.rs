//! Exact Dedekind sums and Dedekind symbols on the double cosets of SL(2, Z)
//! and Γ0(N), double coset counting, classical and multiplier-twisted
//! Kloosterman sums, and equidistribution statistics for `{k S}` mod 1.
//!
//! Arithmetic on sums and cocycles is exact ([`Rational`]); complex values are
//! only formed at the end, from phases already reduced mod 1. Scans over
//! moduli run on rayon when the default `parallel` feature is enabled and
//! sequentially otherwise; both give bit-identical results.

pub mod cosets;
pub mod dedekind;
pub mod equidist;
mod error;
pub mod exact_arith;
pub mod kloosterman;
pub mod par;
pub mod sum;

pub use cosets::{
    complete_matrix, coset_count_at, enumerate_cosets, pi_count, zeta_partial, CountReport,
    DoubleCoset, GroupKind, GroupSpec,
};
pub use dedekind::{
    dedekind_sum_fast, dedekind_sum_naive, dedekind_symbol, multiplier, phi_cocycle, psi_cocycle,
    random_group_word, sawtooth, MultiplierSystem, UnimodularMatrix, Weight,
};
pub use equidist::{
    erdos_turan_bound, histogram, sample_stream, star_discrepancy, weyl_sum, DiscrepancyReport,
    SampleStream, WeylReport,
};
pub use error::{Error, Result};
pub use exact_arith::{gcd, mod_inverse, totient_sieve, Rational};
pub use kloosterman::{
    kloosterman_classical, kloosterman_partial_sum, kloosterman_scan, kloosterman_twisted,
    vardi_check, vardi_lhs, vardi_scan, weil_ratio, KloostermanValue, Weighting,
};
pub use num_complex::Complex64;
