//! Dedekind sums, the cocycles Φ and ψ, Dedekind symbols and the χ_k multiplier.

mod cocycle;
mod matrix;
mod multiplier;
mod sums;

pub use cocycle::{dedekind_symbol, phi_cocycle, phi_normalized, psi_cocycle, symbol_from_matrix};
pub use matrix::{random_group_word, random_word, word_product, Generator, UnimodularMatrix};
pub use multiplier::{multiplier, MultiplierSystem, Weight};
pub use sums::{dedekind_sum_big, dedekind_sum_fast, dedekind_sum_naive, sawtooth};
