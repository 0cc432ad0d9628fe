//! JSON documents for characters.
//!
//! ```json
//! { "type": "D4", "orbits": ["a"], "highest": "2_0",
//!   "terms": [ { "monomial": "1_1 2_2^-1 3_1 4_1",
//!                "w": {"2_0": 1}, "v": {"2_1": 1},
//!                "coeff": [[0, 1]] } ] }
//! ```
//!
//! Coefficients are `[t-exponent, integer]` pairs sorted by exponent.
//! Integers outside the `i64` range are written as decimal strings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::character::{Character, CharacterError};
use super::monomial::{Monomial, SiteCounts};
use super::text::{parse_monomial, parse_site, render_monomial, ParseError};
use super::tpoly::TPoly;
use crate::rootdata::{RootDataError, RootDatum};

#[derive(Debug, Error)]
pub enum DocError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("cannot parse {what} {text:?}: {source}")]
    Parse {
        what: &'static str,
        text: String,
        source: ParseError,
    },
    #[error("missing {field} for monomial {monomial:?}")]
    MissingField { field: &'static str, monomial: String },
    #[error("monomial {monomial:?} disagrees with its w/v data, which give {computed:?}")]
    PayloadMismatch { monomial: String, computed: String },
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Coefficient polynomial as `[[exp, coeff], ...]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoeffDoc(pub TPoly);

struct CoeffInt<'a>(&'a BigInt);

impl Serialize for CoeffInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for CoeffDoc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (d, c) in self.0.iter() {
            seq.serialize_element(&(d, CoeffInt(c)))?;
        }
        seq.end()
    }
}

struct BigIntDe(BigInt);

impl<'de> Deserialize<'de> for BigIntDe {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = BigIntDe;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigIntDe, E> {
                Ok(BigIntDe(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigIntDe, E> {
                Ok(BigIntDe(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigIntDe, E> {
                v.parse().map(BigIntDe).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

impl<'de> Deserialize<'de> for CoeffDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = CoeffDoc;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<CoeffDoc, A::Error> {
                let mut p = TPoly::zero();
                while let Some((e, c)) = seq.next_element::<(i32, BigIntDe)>()? {
                    p.add_term(e, c.0);
                }
                Ok(CoeffDoc(p))
            }
        }
        d.deserialize_seq(V)
    }
}

/// Jordan annotation of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanDoc {
    pub n: u32,
    pub blocks: Vec<u32>,
    pub graded: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub monomial: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<BTreeMap<String, u32>>,
    pub coeff: CoeffDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan: Option<JordanDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterDoc {
    #[serde(rename = "type")]
    pub type_name: String,
    #[serde(default)]
    pub orbits: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highest: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial: Option<bool>,
    pub terms: Vec<TermDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
}

impl CharacterDoc {
    pub fn from_json(s: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json_pretty(&self) -> String {
        // serialization of these plain structs cannot fail
        serde_json::to_string_pretty(self).expect("serializable document")
    }

    pub fn datum(&self) -> Result<RootDatum, DocError> {
        Ok(self.type_name.parse()?)
    }
}

fn counts_to_doc(c: &SiteCounts) -> BTreeMap<String, u32> {
    c.iter().map(|(s, &k)| (s.to_string(), k)).collect()
}

fn counts_from_doc(datum: &RootDatum, c: &BTreeMap<String, u32>) -> Result<SiteCounts, DocError> {
    let mut out = SiteCounts::new();
    for (k, &n) in c {
        let site = parse_site(k, Some(datum)).map_err(|source| DocError::Parse {
            what: "site",
            text: k.clone(),
            source,
        })?;
        *out.entry(site).or_insert(0) += n;
    }
    Ok(out)
}

impl Character {
    /// Document with terms in output order (lowering degree, then monomial).
    pub fn to_doc(&self) -> CharacterDoc {
        CharacterDoc {
            type_name: self.datum().name(),
            orbits: self.orbits().iter().map(|o| o.to_string()).collect(),
            highest: Some(self.highest().to_string()),
            source: None,
            partial: None,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|t| TermDoc {
                    monomial: render_monomial(t.monomial.y()),
                    w: Some(counts_to_doc(t.monomial.w())),
                    v: Some(counts_to_doc(t.monomial.v())),
                    coeff: CoeffDoc(t.coeff.clone()),
                    jordan: None,
                })
                .collect(),
            edges: None,
        }
    }

    /// Rebuilds a character; every term needs its `w` and `v` data, which
    /// must reproduce the stated monomial.
    pub fn from_doc(doc: &CharacterDoc) -> Result<Character, DocError> {
        let datum = doc.datum()?;
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            let missing = |field| DocError::MissingField {
                field,
                monomial: t.monomial.clone(),
            };
            let w = counts_from_doc(&datum, t.w.as_ref().ok_or_else(|| missing("w"))?)?;
            let v = counts_from_doc(&datum, t.v.as_ref().ok_or_else(|| missing("v"))?)?;
            let m = Monomial::from_parts(&datum, w, v)?;
            let stated = parse_monomial(&t.monomial, &datum).map_err(|source| DocError::Parse {
                what: "monomial",
                text: t.monomial.clone(),
                source,
            })?;
            if &stated != m.y() {
                return Err(DocError::PayloadMismatch {
                    monomial: t.monomial.clone(),
                    computed: m.to_string(),
                });
            }
            terms.push((m, t.coeff.0.clone()));
        }
        let highest = match &doc.highest {
            Some(h) => {
                let y = parse_monomial(h, &datum).map_err(|source| DocError::Parse {
                    what: "highest monomial",
                    text: h.clone(),
                    source,
                })?;
                terms
                    .iter()
                    .find(|(m, _)| m.y() == &y && m.v().is_empty())
                    .map(|(m, _)| m.clone())
                    .ok_or(CharacterError::HighestCoefficient {
                        monomial: h.clone(),
                        coeff: "0".into(),
                    })?
            }
            None => terms
                .iter()
                .find(|(m, _)| m.v().is_empty())
                .map(|(m, _)| m.clone())
                .ok_or(DocError::MissingField {
                    field: "highest",
                    monomial: String::new(),
                })?,
        };
        Ok(Character::from_terms(datum, highest, terms)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::monomial::Site;

    fn a1_doublet() -> Character {
        let a1: RootDatum = "A1".parse().unwrap();
        let w: SiteCounts = [(Site::at(1, 0), 1)].into_iter().collect();
        let top = Monomial::highest(w.clone());
        let low = Monomial::from_parts(&a1, w, [(Site::at(1, 1), 1)].into_iter().collect()).unwrap();
        Character::from_terms(
            a1,
            top.clone(),
            [(top, TPoly::one()), (low, TPoly::from_coeffs(&[1, 0, 1]))],
        )
        .unwrap()
    }

    #[test]
    fn round_trip() {
        let ch = a1_doublet();
        let doc = ch.to_doc();
        let text = doc.to_json_pretty();
        let back = CharacterDoc::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(Character::from_doc(&back).unwrap(), ch);
    }

    #[test]
    fn big_coefficients_as_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let doc = CoeffDoc(TPoly::monomial(2, big.clone()));
        let s = serde_json::to_string(&doc).unwrap();
        assert_eq!(s, r#"[[2,"123456789012345678901234567890"]]"#);
        let back: CoeffDoc = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0.coeff(2), big);
    }

    #[test]
    fn rejects_inconsistent_payload() {
        let mut doc = a1_doublet().to_doc();
        doc.terms[1].monomial = "1_4^-1".into();
        assert!(matches!(
            Character::from_doc(&doc),
            Err(DocError::PayloadMismatch { .. })
        ));
    }
}
