//! Lowering graphs of a character.
//!
//! [`a_step_edges`] joins every pair of present monomials `m`,
//! `m·A_{i,n}^{-1}`. [`string_edges`] keeps only the steps inside the
//! `i`-strings of the character's sl2 decompositions; this is the graph
//! usually drawn for a q-character, and the one [`to_dot`] emits.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

use crate::charalg::{Character, Exponents, Site};
use crate::fm::{string_decomposition, FmError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub upper: Exponents,
    pub lower: Exponents,
    pub site: Site,
}

/// All single A-steps between monomials of `ch`, sorted.
pub fn a_step_edges(ch: &Character) -> Vec<Edge> {
    let datum = ch.datum();
    let sites: BTreeSet<&Site> = ch.iter().flat_map(|t| t.monomial.v().keys()).collect();
    let mut out = Vec::new();
    for t in ch.iter() {
        for &s in &sites {
            let mut y = t.monomial.y().clone();
            y.add_inverse_a(datum, s, 1);
            if ch.contains(&y) {
                out.push(Edge {
                    upper: t.monomial.y().clone(),
                    lower: y,
                    site: s.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// Steps `m -> m·A_{i,n}^{-1}` between consecutive monomials of one
/// `i`-string, over all directions `i`, sorted.
pub fn string_edges(ch: &Character) -> Result<Vec<Edge>, FmError> {
    let datum = ch.datum();
    let mut out = BTreeSet::new();
    for i in datum.nodes() {
        for s in string_decomposition(ch, i)? {
            let members = s.monomials(datum, i);
            let index: HashMap<&Exponents, usize> =
                members.iter().enumerate().map(|(k, m)| (m.y(), k)).collect();
            let sites: BTreeSet<Site> = s
                .template
                .iter()
                .flat_map(|(steps, _)| steps.iter().map(|(at, _)| Site::new(i, at.clone())))
                .collect();
            for m in &members {
                for site in &sites {
                    let mut y = m.y().clone();
                    y.add_inverse_a(datum, site, 1);
                    if index.contains_key(&y) {
                        out.insert(Edge {
                            upper: m.y().clone(),
                            lower: y,
                            site: site.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: one node per monomial labelled with its coefficient
/// and monomial, one edge per string step labelled with the node index.
/// Characters without an sl2 decomposition fall back to all A-steps.
pub fn to_dot(ch: &Character) -> String {
    let terms = ch.sorted_terms();
    let ids: HashMap<&Exponents, usize> = terms
        .iter()
        .enumerate()
        .map(|(k, t)| (t.monomial.y(), k))
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "digraph \"{}\" {{",
        escape(&format!("{} {}", ch.datum(), ch.highest()))
    );
    out.push_str("  node [shape=box];\n");
    for (k, t) in terms.iter().enumerate() {
        let mono = if t.monomial.y().is_empty() {
            "1".to_string()
        } else {
            t.monomial.to_string()
        };
        let label = if t.coeff.is_one() {
            mono
        } else {
            format!("({}) {}", t.coeff, mono)
        };
        let _ = writeln!(out, "  m{k} [label=\"{}\"];", escape(&label));
    }
    let mut edges: Vec<(usize, usize, usize)> = string_edges(ch)
        .unwrap_or_else(|_| a_step_edges(ch))
        .iter()
        .map(|e| (ids[&e.upper], ids[&e.lower], e.site.node))
        .collect();
    edges.sort_unstable();
    for (u, l, node) in edges {
        let _ = writeln!(out, "  m{u} -> m{l} [label=\"{node}\"];");
    }
    out.push_str("}\n");
    out
}
