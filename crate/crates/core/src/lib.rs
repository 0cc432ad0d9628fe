//! q,t-characters of standard modules over simply laced quantum affine
//! algebras.
//!
//! * [`rootdata`]: Dynkin diagrams of types A, D, E.
//! * [`charalg`]: monomials `Y_{i,n}`, t-polynomials, characters, text and
//!   JSON formats.
//! * [`sl2`]: q-segments and simple rank-one characters.
//! * [`fm`]: the Frenkel–Mukhin expansion for fundamental modules.
//! * [`fusion`]: twisted products and standard modules.
//! * [`jordan`]: decoding coefficients into Jordan filtration data.
//!
//! ```
//! use qtchar::{fundamental_qt, RootDatum, SpectralShift};
//!
//! let d4: RootDatum = "D4".parse().unwrap();
//! let ch = fundamental_qt(&d4, 2, &SpectralShift::at(0)).unwrap();
//! assert_eq!(ch.len(), 28);
//! assert_eq!(ch.mass_at_t1(), 29.into());
//! ```

pub mod charalg;
pub mod dot;
pub mod fixtures;
pub mod fm;
pub mod fusion;
pub mod jordan;
pub mod par;
pub mod rootdata;
pub mod sl2;

pub use charalg::{Character, CharacterDoc, Exponents, Monomial, Orbit, Site, SpectralShift, TPoly, Term};
pub use fm::{fundamental_qt, fundamental_qt_with, FmError, FmOptions};
pub use fusion::{
    bb_twist, standard_module_qt, standard_module_qt_with, twisted_product, FactorSpec, FusionError,
};
pub use jordan::{decode, encode, validate_poincare, JordanError, JordanProfile};
pub use par::Exec;
pub use rootdata::{Family, RootDataError, RootDatum};
