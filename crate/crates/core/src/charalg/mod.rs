//! Monomial and character algebra.

mod character;
mod json;
mod lweight;
mod monomial;
mod text;
mod tpoly;

pub use character::{Character, CharacterError, Term};
pub use json::{CharacterDoc, CoeffDoc, DocError, JordanDoc, TermDoc};
pub use lweight::{exponents_to_lweight, monomial_to_lweight, LWeightView, NodeRoots};
pub use monomial::{
    apply_lowering, i_part, is_i_dominant, y_exponents, Exponents, Monomial, Orbit, Site, SiteCounts,
    SpectralShift,
};
pub use text::{parse_exponents, parse_monomial, parse_site, render_monomial, ParseError};
pub use tpoly::TPoly;

/// Dimension of the module: the sum of all coefficients at `t = 1`.
pub fn mass_at_t1(ch: &Character) -> num_bigint::BigInt {
    ch.mass_at_t1()
}

/// Drinfeld roots per node, read from the highest monomial.
pub fn drinfeld_roots(ch: &Character) -> std::collections::BTreeMap<usize, Vec<SpectralShift>> {
    ch.drinfeld_roots()
}
