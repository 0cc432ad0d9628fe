//! Root-multiset view of an ℓ-weight: per node, the numerator roots
//! `α_{i,k}` and denominator roots `β_{i,k}` of `Q_i / R_i`.
//!
//! Only the root multisets are kept; the scalar `ε`-prefactors of the
//! generating series are left out.

use std::collections::BTreeMap;

use super::monomial::{Exponents, Monomial, Site, SpectralShift};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeRoots {
    pub numerator: Vec<SpectralShift>,
    pub denominator: Vec<SpectralShift>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LWeightView {
    pub nodes: BTreeMap<usize, NodeRoots>,
}

impl LWeightView {
    /// Reassembles `Π_k Y_{i,α} Y_{i,β}^{-1}`.
    pub fn reconstruct(&self) -> Exponents {
        let mut y = Exponents::new();
        for (&i, roots) in &self.nodes {
            for a in &roots.numerator {
                y.add(Site::new(i, a.clone()), 1);
            }
            for b in &roots.denominator {
                y.add(Site::new(i, b.clone()), -1);
            }
        }
        y
    }

    pub fn node(&self, i: usize) -> Option<&NodeRoots> {
        self.nodes.get(&i)
    }
}

pub fn exponents_to_lweight(y: &Exponents) -> LWeightView {
    let mut view = LWeightView::default();
    for (site, e) in y.iter() {
        let roots = view.nodes.entry(site.node).or_default();
        let target = if e > 0 {
            &mut roots.numerator
        } else {
            &mut roots.denominator
        };
        target.extend(std::iter::repeat_n(site.at.clone(), e.unsigned_abs() as usize));
    }
    view
}

pub fn monomial_to_lweight(m: &Monomial) -> LWeightView {
    exponents_to_lweight(m.y())
}
