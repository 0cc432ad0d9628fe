//! Reference characters transcribed by hand from published graphs, and the
//! comparison used to check computed characters against them.
//!
//! A fixture is a character document whose `highest` monomial names the
//! standard module to compute. Complete fixtures must match term for term
//! and edge for edge; partial ones only list a subset of terms and edges.

use std::collections::BTreeSet;
use std::fmt;

use crate::charalg::{parse_monomial, Character, CharacterDoc, DocError, Exponents, SpectralShift, TPoly};
use crate::dot::string_edges;
use crate::fm::FmOptions;
use crate::fusion::{standard_module_qt_with, FactorSpec, FusionError};
use crate::par::Exec;

/// An embedded fixture file.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub json: &'static str,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "d4_node2",
        json: include_str!("../fixtures/d4_node2.json"),
    },
    Fixture {
        name: "a2_v1a_v1a",
        json: include_str!("../fixtures/a2_v1a_v1a.json"),
    },
    Fixture {
        name: "a2_v1a_v2ae",
        json: include_str!("../fixtures/a2_v1a_v2ae.json"),
    },
    Fixture {
        name: "e6_node3_partial",
        json: include_str!("../fixtures/e6_node3_partial.json"),
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn doc(&self) -> Result<CharacterDoc, DocError> {
        CharacterDoc::from_json(self.json)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error(transparent)]
    Doc(#[from] DocError),
    #[error("fixture has no highest monomial")]
    NoHighest,
    #[error("highest monomial {0} is not dominant")]
    NotDominant(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

/// Fundamental factors read off a dominant highest monomial.
pub fn factors_of(doc: &CharacterDoc) -> Result<Vec<FactorSpec>, FixtureError> {
    let datum = doc.datum()?;
    let text = doc.highest.as_deref().ok_or(FixtureError::NoHighest)?;
    let y = parse_monomial(text, &datum).map_err(|source| DocError::Parse {
        what: "highest monomial",
        text: text.to_string(),
        source,
    })?;
    if !y.is_dominant() || y.is_empty() {
        return Err(FixtureError::NotDominant(text.to_string()));
    }
    let mut out = Vec::new();
    for (site, e) in y.iter() {
        for _ in 0..e {
            out.push(FactorSpec::new(
                site.node,
                SpectralShift::new(site.at.orbit.clone(), site.at.shift),
            ));
        }
    }
    Ok(out)
}

/// Computes the standard module named by the fixture's highest monomial.
pub fn compute(doc: &CharacterDoc, opts: &FmOptions, exec: Exec) -> Result<Character, FixtureError> {
    let datum = doc.datum()?;
    Ok(standard_module_qt_with(&datum, &factors_of(doc)?, opts, exec)?)
}

/// One disagreement between a fixture and a computed character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    MissingTerm {
        monomial: String,
        expected: TPoly,
    },
    ExtraTerm {
        monomial: String,
        found: TPoly,
    },
    WrongCoefficient {
        monomial: String,
        expected: TPoly,
        found: TPoly,
    },
    MissingEdge {
        upper: String,
        lower: String,
    },
    ExtraEdge {
        upper: String,
        lower: String,
    },
    BadMonomial {
        text: String,
        reason: String,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::MissingTerm { monomial, expected } => {
                write!(f, "term {monomial} with coefficient {expected} not computed")
            }
            Mismatch::ExtraTerm { monomial, found } => {
                write!(
                    f,
                    "computed term {monomial} with coefficient {found} not in fixture"
                )
            }
            Mismatch::WrongCoefficient {
                monomial,
                expected,
                found,
            } => write!(f, "term {monomial}: expected {expected}, computed {found}"),
            Mismatch::MissingEdge { upper, lower } => {
                write!(f, "edge {upper} -> {lower} not computed")
            }
            Mismatch::ExtraEdge { upper, lower } => {
                write!(f, "computed edge {upper} -> {lower} not in fixture")
            }
            Mismatch::BadMonomial { text, reason } => write!(f, "fixture monomial {text:?}: {reason}"),
        }
    }
}

/// Every disagreement, coefficient problems first; the first entry is the
/// smallest counterexample in output order.
pub fn compare(doc: &CharacterDoc, ch: &Character) -> Vec<Mismatch> {
    let datum = ch.datum();
    let partial = doc.partial.unwrap_or(false);
    let mut out = Vec::new();
    let parse = |text: &str, out: &mut Vec<Mismatch>| -> Option<Exponents> {
        match parse_monomial(text, datum) {
            Ok(y) => Some(y),
            Err(e) => {
                out.push(Mismatch::BadMonomial {
                    text: text.to_string(),
                    reason: e.to_string(),
                });
                None
            }
        }
    };

    let mut listed = BTreeSet::new();
    let mut term_issues = Vec::new();
    for t in &doc.terms {
        let Some(y) = parse(&t.monomial, &mut out) else {
            continue;
        };
        match ch.term(&y) {
            None => term_issues.push((
                None,
                Mismatch::MissingTerm {
                    monomial: t.monomial.clone(),
                    expected: t.coeff.0.clone(),
                },
            )),
            Some(found) if found.coeff != t.coeff.0 => term_issues.push((
                Some(found.monomial.clone()),
                Mismatch::WrongCoefficient {
                    monomial: t.monomial.clone(),
                    expected: t.coeff.0.clone(),
                    found: found.coeff.clone(),
                },
            )),
            Some(_) => {}
        }
        listed.insert(y);
    }
    if !partial {
        for t in ch.iter() {
            if !listed.contains(t.monomial.y()) {
                term_issues.push((
                    Some(t.monomial.clone()),
                    Mismatch::ExtraTerm {
                        monomial: t.monomial.to_string(),
                        found: t.coeff.clone(),
                    },
                ));
            }
        }
    }
    // computed monomials first in output order, then ones that were never computed
    term_issues.sort_by(|(a, _), (b, _)| match (a, b) {
        (Some(a), Some(b)) => a.output_cmp(b),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => std::cmp::Ordering::Equal,
    });
    out.extend(term_issues.into_iter().map(|(_, m)| m));

    if let Some(edges) = &doc.edges {
        let computed: BTreeSet<(Exponents, Exponents)> = string_edges(ch)
            .unwrap_or_default()
            .into_iter()
            .map(|e| (e.upper, e.lower))
            .collect();
        let mut expected = BTreeSet::new();
        for [u, l] in edges {
            let (Some(uy), Some(ly)) = (parse(u, &mut out), parse(l, &mut out)) else {
                continue;
            };
            if !computed.contains(&(uy.clone(), ly.clone())) {
                out.push(Mismatch::MissingEdge {
                    upper: u.clone(),
                    lower: l.clone(),
                });
            }
            expected.insert((uy, ly));
        }
        if !partial {
            for (u, l) in computed.difference(&expected) {
                out.push(Mismatch::ExtraEdge {
                    upper: u.to_string(),
                    lower: l.to_string(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        for f in FIXTURES {
            let doc = f.doc().unwrap();
            assert!(!doc.terms.is_empty(), "{}", f.name);
            assert!(!factors_of(&doc).unwrap().is_empty());
        }
    }

    #[test]
    fn small_fixtures_match() {
        for name in ["d4_node2", "a2_v1a_v1a", "a2_v1a_v2ae"] {
            let doc = fixture(name).unwrap().doc().unwrap();
            let ch = compute(&doc, &FmOptions::default(), Exec::default()).unwrap();
            let diff = compare(&doc, &ch);
            assert!(diff.is_empty(), "{name}: {}", diff[0]);
        }
    }

    #[test]
    fn tampering_is_caught() {
        let mut doc = fixture("a2_v1a_v1a").unwrap().doc().unwrap();
        let ch = compute(&doc, &FmOptions::default(), Exec::default()).unwrap();
        doc.terms[1].coeff.0 = TPoly::one();
        doc.terms.pop();
        let diff = compare(&doc, &ch);
        assert!(matches!(diff[0], Mismatch::WrongCoefficient { .. }), "{diff:?}");
        assert!(diff.iter().any(|m| matches!(m, Mismatch::ExtraTerm { .. })));
    }
}
