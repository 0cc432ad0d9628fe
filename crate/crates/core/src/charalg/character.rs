//! Characters: finite sums `Σ P_m(t) · m` with a distinguished highest
//! monomial.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use thiserror::Error;

use super::monomial::{Exponents, Monomial, Orbit, Site, SpectralShift};
use super::tpoly::TPoly;
use crate::rootdata::RootDatum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("highest monomial {monomial} has nonzero lowering data")]
    HighestNotHighest { monomial: String },
    #[error("highest monomial {monomial} must have coefficient 1, found {coeff}")]
    HighestCoefficient { monomial: String, coeff: String },
    #[error("monomial {monomial} has highest-weight data different from the highest monomial")]
    WeightMismatch { monomial: String },
    #[error("monomial {monomial} occurs twice with different lowering data")]
    PayloadMismatch { monomial: String },
}

/// One term `coeff · monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: TPoly,
}

/// A q,t-character keyed by `Y`-exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    datum: RootDatum,
    highest: Monomial,
    terms: BTreeMap<Exponents, Term>,
}

impl Character {
    /// The character `1 · highest`.
    pub fn new(datum: RootDatum, highest: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(
            highest.y().clone(),
            Term {
                monomial: highest.clone(),
                coeff: TPoly::one(),
            },
        );
        Character {
            datum,
            highest,
            terms,
        }
    }

    /// The unit character with the single monomial `1`.
    pub fn trivial(datum: RootDatum) -> Self {
        Character::new(datum, Monomial::identity())
    }

    /// Builds and checks a character from explicit terms. Terms with the same
    /// monomial accumulate; zero coefficients are dropped.
    pub fn from_terms(
        datum: RootDatum,
        highest: Monomial,
        terms: impl IntoIterator<Item = (Monomial, TPoly)>,
    ) -> Result<Self, CharacterError> {
        if !highest.v().is_empty() {
            return Err(CharacterError::HighestNotHighest {
                monomial: highest.to_string(),
            });
        }
        let mut map: BTreeMap<Exponents, Term> = BTreeMap::new();
        for (m, c) in terms {
            if m.w() != highest.w() {
                return Err(CharacterError::WeightMismatch {
                    monomial: m.to_string(),
                });
            }
            match map.get_mut(m.y()) {
                Some(t) => {
                    if t.monomial.v() != m.v() {
                        return Err(CharacterError::PayloadMismatch {
                            monomial: m.to_string(),
                        });
                    }
                    t.coeff += &c;
                }
                None => {
                    map.insert(
                        m.y().clone(),
                        Term {
                            monomial: m,
                            coeff: c,
                        },
                    );
                }
            }
        }
        map.retain(|_, t| !t.coeff.is_zero());
        match map.get(highest.y()) {
            Some(t) if t.coeff.is_one() => {}
            other => {
                return Err(CharacterError::HighestCoefficient {
                    monomial: highest.to_string(),
                    coeff: other.map(|t| t.coeff.to_string()).unwrap_or_else(|| "0".into()),
                })
            }
        }
        Ok(Character {
            datum,
            highest,
            terms: map,
        })
    }

    // Unchecked constructor for engines that maintain the invariants.
    pub(crate) fn from_raw(datum: RootDatum, highest: Monomial, terms: BTreeMap<Exponents, Term>) -> Self {
        Character {
            datum,
            highest,
            terms,
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn highest(&self) -> &Monomial {
        &self.highest
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, y: &Exponents) -> Option<&TPoly> {
        self.terms.get(y).map(|t| &t.coeff)
    }

    pub fn term(&self, y: &Exponents) -> Option<&Term> {
        self.terms.get(y)
    }

    pub fn contains(&self, y: &Exponents) -> bool {
        self.terms.contains_key(y)
    }

    /// Terms in canonical `y` order.
    pub fn iter(&self) -> impl Iterator<Item = &Term> + '_ {
        self.terms.values()
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Term> {
        &self.terms
    }

    /// Terms in output order: lowering degree, then canonical monomial.
    pub fn sorted_terms(&self) -> Vec<&Term> {
        let mut out: Vec<&Term> = self.terms.values().collect();
        out.sort_by(|a, b| a.monomial.output_cmp(&b.monomial));
        out
    }

    /// Sum of all coefficients at `t = 1` (the dimension of the module).
    pub fn mass_at_t1(&self) -> BigInt {
        self.terms.values().map(|t| t.coeff.eval_at_one()).sum()
    }

    /// Roots of the Drinfeld polynomials, read off the highest monomial.
    pub fn drinfeld_roots(&self) -> BTreeMap<usize, Vec<SpectralShift>> {
        let mut out: BTreeMap<usize, Vec<SpectralShift>> =
            self.datum.nodes().map(|i| (i, Vec::new())).collect();
        for (site, &k) in self.highest.w() {
            let roots = out.entry(site.node).or_default();
            roots.extend(std::iter::repeat_n(site.at.clone(), k as usize));
        }
        out
    }

    /// Orbits occurring in the highest monomial.
    pub fn orbits(&self) -> BTreeSet<Orbit> {
        self.highest.w().keys().map(|s| s.at.orbit.clone()).collect()
    }

    /// Whether every coefficient is 1.
    pub fn is_thin(&self) -> bool {
        self.terms.values().all(|t| t.coeff.is_one())
    }

    /// Relabels every site; `f` must be injective.
    pub fn map_sites(&self, f: impl Fn(&Site) -> Site) -> Character {
        let terms = self
            .terms
            .values()
            .map(|t| {
                let m = t.monomial.map_sites(&f);
                (
                    m.y().clone(),
                    Term {
                        monomial: m,
                        coeff: t.coeff.clone(),
                    },
                )
            })
            .collect();
        Character {
            datum: self.datum.clone(),
            highest: self.highest.map_sites(&f),
            terms,
        }
    }

    /// Moves every spectral parameter to orbit `orbit`, adding `delta` to its
    /// shift. Intended for single-orbit characters.
    pub fn translated(&self, orbit: &Orbit, delta: i64) -> Character {
        self.map_sites(|s| Site::new(s.node, SpectralShift::new(orbit.clone(), s.at.shift + delta)))
    }

    /// The value at `t = 1` as a map from monomial to multiplicity.
    pub fn at_t1(&self) -> BTreeMap<Exponents, BigInt> {
        self.terms
            .iter()
            .map(|(y, t)| (y.clone(), t.coeff.eval_at_one()))
            .collect()
    }
}
