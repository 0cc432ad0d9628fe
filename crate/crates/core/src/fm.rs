//! Frenkel–Mukhin expansion of q,t-characters of modules with a single
//! dominant monomial.
//!
//! Monomials are settled in order of lowering degree. A monomial that is not
//! `i`-dominant for some `i` lies inside an `i`-string started earlier, so
//! its coefficient is what the direction-`i` expansions have deposited; all
//! such directions must agree. For each direction in which the monomial is
//! `i`-dominant, the part of its coefficient not yet explained by direction
//! `i` starts a new string: it is multiplied by the simple sl2 character of
//! the monomial's `i`-part and spread over the lower monomials.
//!
//! The finished character is audited: for every node it must split into
//! simple sl2 characters with nonnegative coefficients.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::charalg::{Character, Exponents, Monomial, Site, SiteCounts, SpectralShift, TPoly, Term};
use crate::fusion::FusionError;
use crate::par::{self, Exec};
use crate::rootdata::{RootDataError, RootDatum};
use crate::sl2::{sl2_template, Template};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FmError {
    #[error("inconsistent expansion at {monomial} in direction {node}")]
    InconsistentExpansion { monomial: String, node: usize },
    #[error("second dominant monomial {monomial}")]
    NonMinuscule { monomial: String },
    #[error("lowering degree exceeded the cap of {cap}")]
    DepthExceeded { cap: u64 },
    #[error("audit failed in direction {node} at {monomial}")]
    AuditFailed { monomial: String, node: usize },
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("sl2 template: {0}")]
    Template(#[from] FusionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FmOptions {
    /// Largest lowering degree a monomial may reach.
    pub depth_cap: u64,
    /// Run the post-pass decomposition audit.
    pub audit: bool,
    /// Strategy for the per-node audit.
    pub exec: Exec,
}

impl Default for FmOptions {
    fn default() -> Self {
        FmOptions {
            depth_cap: 200,
            audit: true,
            exec: Exec::default(),
        }
    }
}

#[derive(Default)]
struct TemplateCache(HashMap<Vec<SpectralShift>, std::sync::Arc<Template>>);

impl TemplateCache {
    fn get(&mut self, roots: Vec<SpectralShift>) -> Result<std::sync::Arc<Template>, FmError> {
        if let Some(t) = self.0.get(&roots) {
            return Ok(t.clone());
        }
        let t = std::sync::Arc::new(sl2_template(&roots)?);
        self.0.insert(roots, t.clone());
        Ok(t)
    }
}

// Roots of the i-part of a monomial known to be i-dominant.
fn i_roots(m: &Monomial, i: usize) -> Vec<SpectralShift> {
    let mut roots = Vec::new();
    for (site, e) in m.y().node_entries(i) {
        roots.extend(std::iter::repeat_n(site.at.clone(), e as usize));
    }
    roots
}

fn lower_along(datum: &RootDatum, m: &Monomial, i: usize, steps: &[(SpectralShift, u32)]) -> Monomial {
    let mut out = m.clone();
    for (at, k) in steps {
        out = out.lowered_by(datum, &Site::new(i, at.clone()), *k);
    }
    out
}

struct ExpansionState<'a> {
    datum: &'a RootDatum,
    result: HashMap<Exponents, Term>,
    ledger: Vec<HashMap<Exponents, TPoly>>,
    pending: HashMap<Exponents, Monomial>,
    frontier: BTreeSet<(u64, Exponents)>,
    templates: TemplateCache,
    cap: u64,
}

impl ExpansionState<'_> {
    fn enqueue(&mut self, m: Monomial) -> Result<(), FmError> {
        if self.result.contains_key(m.y()) || self.pending.contains_key(m.y()) {
            return Ok(());
        }
        if m.v_degree() > self.cap {
            return Err(FmError::DepthExceeded { cap: self.cap });
        }
        self.frontier.insert((m.v_degree(), m.y().clone()));
        self.pending.insert(m.y().clone(), m);
        Ok(())
    }

    fn settle(&mut self, m: &Monomial, is_top: bool) -> Result<TPoly, FmError> {
        if is_top {
            return Ok(TPoly::one());
        }
        let inconsistent = |node| FmError::InconsistentExpansion {
            monomial: m.to_string(),
            node,
        };
        let mut coeff: Option<TPoly> = None;
        for i in self.datum.nodes() {
            if m.is_i_dominant(i) {
                continue;
            }
            let c = self.ledger[i].get(m.y()).cloned().unwrap_or_default();
            match &coeff {
                None => coeff = Some(c),
                Some(prev) if *prev != c => return Err(inconsistent(i)),
                Some(_) => {}
            }
        }
        let coeff = coeff.ok_or_else(|| FmError::NonMinuscule {
            monomial: m.to_string(),
        })?;
        if coeff.is_zero() || coeff.has_negative_coeff() {
            let node = self.datum.nodes().find(|&i| !m.is_i_dominant(i)).unwrap_or(0);
            return Err(inconsistent(node));
        }
        Ok(coeff)
    }

    fn expand(&mut self, m: &Monomial, coeff: &TPoly) -> Result<(), FmError> {
        for i in self.datum.nodes() {
            if !m.is_i_dominant(i) {
                continue;
            }
            let roots = i_roots(m, i);
            if roots.is_empty() {
                continue;
            }
            let done = self.ledger[i].get(m.y()).cloned().unwrap_or_default();
            let residual = coeff - &done;
            if residual.has_negative_coeff() {
                return Err(FmError::InconsistentExpansion {
                    monomial: m.to_string(),
                    node: i,
                });
            }
            if residual.is_zero() {
                continue;
            }
            let template = self.templates.get(roots)?;
            for (steps, p) in template.iter().filter(|(s, _)| !s.is_empty()) {
                let target = lower_along(self.datum, m, i, steps);
                self.ledger[i]
                    .entry(target.y().clone())
                    .or_default()
                    .add_product_shifted(&residual, p, 0);
                self.enqueue(target)?;
            }
        }
        Ok(())
    }
}

/// q,t-character of the fundamental module `V_{node}(shift)` with default
/// options.
pub fn fundamental_qt(datum: &RootDatum, node: usize, shift: &SpectralShift) -> Result<Character, FmError> {
    fundamental_qt_with(datum, node, shift, &FmOptions::default())
}

pub fn fundamental_qt_with(
    datum: &RootDatum,
    node: usize,
    shift: &SpectralShift,
    opts: &FmOptions,
) -> Result<Character, FmError> {
    datum.check_node(node)?;
    let w: SiteCounts = [(Site::new(node, shift.clone()), 1)].into_iter().collect();
    expand_from_highest(datum, Monomial::highest(w), opts)
}

/// Runs the expansion from an arbitrary highest monomial. Fails with
/// [`FmError::NonMinuscule`] when a second dominant monomial shows up.
pub fn expand_from_highest(
    datum: &RootDatum,
    highest: Monomial,
    opts: &FmOptions,
) -> Result<Character, FmError> {
    for s in highest.w().keys() {
        datum.check_node(s.node)?;
    }
    let mut st = ExpansionState {
        datum,
        result: HashMap::new(),
        ledger: vec![HashMap::new(); datum.rank() + 1],
        pending: HashMap::new(),
        frontier: BTreeSet::new(),
        templates: TemplateCache::default(),
        cap: opts.depth_cap,
    };
    st.enqueue(highest.clone())?;
    while let Some((_, y)) = st.frontier.pop_first() {
        let m = st.pending.remove(&y).expect("frontier entries are pending");
        let coeff = st.settle(&m, y == *highest.y())?;
        st.expand(&m, &coeff)?;
        st.result.insert(y, Term { monomial: m, coeff });
    }
    let ch = Character::from_raw(datum.clone(), highest, st.result.into_iter().collect());
    if opts.audit {
        audit(&ch, opts.exec)?;
    }
    Ok(ch)
}

/// Checks that, for every node `i`, the character is a nonnegative
/// combination of simple sl2 characters attached to `i`-dominant monomials.
pub fn audit(ch: &Character, exec: Exec) -> Result<(), FmError> {
    let nodes: Vec<usize> = ch.datum().nodes().collect();
    par::map(exec, &nodes, |&i| string_decomposition(ch, i).map(|_| ()))
        .into_iter()
        .collect()
}

/// One `i`-string of a character: an `i`-dominant monomial, its
/// multiplicity, and the simple sl2 character spread below it.
#[derive(Debug, Clone)]
pub struct IString {
    pub top: Monomial,
    pub multiplicity: TPoly,
    pub template: std::sync::Arc<Template>,
}

/// Splits `ch` into `i`-strings, peeling off `i`-dominant monomials in
/// order of lowering degree. Fails when a multiplicity would be negative or
/// a string leaves the character.
pub fn string_decomposition(ch: &Character, i: usize) -> Result<Vec<IString>, FmError> {
    let datum = ch.datum();
    let fail = |m: &Monomial| FmError::AuditFailed {
        monomial: m.to_string(),
        node: i,
    };
    let mut remaining: HashMap<&Exponents, TPoly> =
        ch.terms().iter().map(|(y, t)| (y, t.coeff.clone())).collect();
    let mut templates = TemplateCache::default();
    let mut out = Vec::new();
    for term in ch.sorted_terms() {
        let m = &term.monomial;
        let r = remaining.get(m.y()).cloned().unwrap_or_default();
        if r.is_zero() {
            continue;
        }
        if r.has_negative_coeff() || !m.is_i_dominant(i) {
            return Err(fail(m));
        }
        let template = templates.get(i_roots(m, i))?;
        for (steps, p) in template.iter() {
            let target = lower_along(datum, m, i, steps);
            let Some(slot) = remaining.get_mut(target.y()) else {
                return Err(fail(&target));
            };
            *slot -= &(&r * p);
        }
        out.push(IString {
            top: m.clone(),
            multiplicity: r,
            template,
        });
    }
    match remaining.iter().find(|(_, c)| !c.is_zero()) {
        None => Ok(out),
        Some((y, _)) => Err(FmError::AuditFailed {
            monomial: y.to_string(),
            node: i,
        }),
    }
}

impl IString {
    /// Monomials of the string, in template order.
    pub fn monomials(&self, datum: &RootDatum, i: usize) -> Vec<Monomial> {
        self.template
            .iter()
            .map(|(steps, _)| lower_along(datum, &self.top, i, steps))
            .collect()
    }
}
