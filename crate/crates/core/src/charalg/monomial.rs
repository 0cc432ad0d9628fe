//! ℓ-weight monomials in the variables `Y_{i,n}`.
//!
//! A monomial carries its highest-weight data `w` and lowering data `v`;
//! the `Y`-exponents `y` are derived from them through the inverse
//! A-variables `A_{i,n}^{-1} = Y_{i,n-1}^{-1} Y_{i,n+1}^{-1} Π_{j~i} Y_{j,n}`.
//! Equality, ordering and hashing look at `y` only.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::rootdata::{RootDataError, RootDatum};

/// Name of a `q^Z`-orbit of spectral parameters. Shifts on different orbits
/// never interact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit(Arc<str>);

impl Orbit {
    pub const DEFAULT_NAME: &'static str = "a";

    /// Orbit names are nonempty ASCII alphanumeric strings.
    pub fn new(name: &str) -> Option<Self> {
        if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric()) {
            Some(Orbit(Arc::from(name)))
        } else {
            None
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_default(&self) -> bool {
        &*self.0 == Self::DEFAULT_NAME
    }

    // Sorts before every valid orbit; used for range bounds only.
    fn least() -> Self {
        Orbit(Arc::from(""))
    }
}

impl Default for Orbit {
    fn default() -> Self {
        Orbit(Arc::from(Self::DEFAULT_NAME))
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Spectral parameter `a·ε^shift` on the orbit of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralShift {
    pub orbit: Orbit,
    pub shift: i64,
}

impl SpectralShift {
    pub fn new(orbit: Orbit, shift: i64) -> Self {
        SpectralShift { orbit, shift }
    }

    /// Shift on the default orbit.
    pub fn at(shift: i64) -> Self {
        SpectralShift {
            orbit: Orbit::default(),
            shift,
        }
    }

    pub fn offset(&self, delta: i64) -> Self {
        SpectralShift {
            orbit: self.orbit.clone(),
            shift: self.shift + delta,
        }
    }
}

impl fmt::Display for SpectralShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbit.is_default() {
            write!(f, "{}", self.shift)
        } else {
            write!(f, "{}@{}", self.shift, self.orbit)
        }
    }
}

/// A variable index `(i, a·ε^n)`. Ordered by node, then orbit, then shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub node: usize,
    pub at: SpectralShift,
}

impl Site {
    pub fn new(node: usize, at: SpectralShift) -> Self {
        Site { node, at }
    }

    /// Site on the default orbit.
    pub fn at(node: usize, shift: i64) -> Self {
        Site {
            node,
            at: SpectralShift::at(shift),
        }
    }

    pub fn offset(&self, delta: i64) -> Self {
        Site {
            node: self.node,
            at: self.at.offset(delta),
        }
    }

    fn node_floor(node: usize) -> Self {
        Site {
            node,
            at: SpectralShift {
                orbit: Orbit::least(),
                shift: i64::MIN,
            },
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.node, self.at.shift)?;
        if !self.at.orbit.is_default() {
            write!(f, "@{}", self.at.orbit)?;
        }
        Ok(())
    }
}

/// Nonnegative multiplicities on sites (`w` and `v` data).
pub type SiteCounts = BTreeMap<Site, u32>;

/// Sparse `Y`-exponent map; zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(BTreeMap<Site, i64>);

impl Exponents {
    pub fn new() -> Self {
        Exponents::default()
    }

    pub fn add(&mut self, site: Site, delta: i64) {
        if delta == 0 {
            return;
        }
        match self.0.entry(site) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += delta;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, site: &Site) -> i64 {
        self.0.get(site).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Site, i64)> + '_ {
        self.0.iter().map(|(s, &e)| (s, e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_map(&self) -> &BTreeMap<Site, i64> {
        &self.0
    }

    /// Entries for a single node.
    pub fn node_entries(&self, node: usize) -> impl Iterator<Item = (&Site, i64)> + '_ {
        self.0
            .range(Site::node_floor(node)..Site::node_floor(node + 1))
            .map(|(s, &e)| (s, e))
    }

    /// Adds the exponents of `A_{i,n}^{-1}` `count` times.
    pub fn add_inverse_a(&mut self, datum: &RootDatum, site: &Site, count: i64) {
        self.add(site.offset(-1), -count);
        self.add(site.offset(1), -count);
        for &j in datum.adj(site.node) {
            self.add(Site::new(j, site.at.clone()), count);
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&e| e >= 0)
    }

    pub fn product(&self, other: &Exponents) -> Exponents {
        let mut out = self.clone();
        for (s, e) in other.iter() {
            out.add(s.clone(), e);
        }
        out
    }

    pub fn map_sites(&self, f: impl Fn(&Site) -> Site) -> Exponents {
        let mut out = Exponents::new();
        for (s, e) in self.iter() {
            out.add(f(s), e);
        }
        out
    }
}

impl FromIterator<(Site, i64)> for Exponents {
    fn from_iter<T: IntoIterator<Item = (Site, i64)>>(iter: T) -> Self {
        let mut out = Exponents::new();
        for (s, e) in iter {
            out.add(s, e);
        }
        out
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_monomial(self))
    }
}

/// `Y`-exponents of the monomial with highest data `w` and lowering data `v`.
pub fn y_exponents(datum: &RootDatum, w: &SiteCounts, v: &SiteCounts) -> Exponents {
    let mut y = Exponents::new();
    for (s, &k) in w {
        y.add(s.clone(), i64::from(k));
    }
    for (s, &k) in v {
        y.add_inverse_a(datum, s, i64::from(k));
    }
    y
}

/// An ℓ-weight monomial with its `(w, v)` payload.
#[derive(Debug, Clone)]
pub struct Monomial {
    w: SiteCounts,
    v: SiteCounts,
    y: Exponents,
    v_degree: u64,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn identity() -> Self {
        Monomial {
            w: SiteCounts::new(),
            v: SiteCounts::new(),
            y: Exponents::new(),
            v_degree: 0,
        }
    }

    /// Highest monomial `Π Y_{i,n}^{w_{i,n}}`.
    pub fn highest(w: SiteCounts) -> Self {
        let w: SiteCounts = w.into_iter().filter(|&(_, k)| k > 0).collect();
        let y = w.iter().map(|(s, &k)| (s.clone(), i64::from(k))).collect();
        Monomial {
            w,
            v: SiteCounts::new(),
            y,
            v_degree: 0,
        }
    }

    /// Monomial from explicit `(w, v)` data; nodes are checked against `datum`.
    pub fn from_parts(datum: &RootDatum, w: SiteCounts, v: SiteCounts) -> Result<Self, RootDataError> {
        for s in w.keys().chain(v.keys()) {
            datum.check_node(s.node)?;
        }
        let w: SiteCounts = w.into_iter().filter(|&(_, k)| k > 0).collect();
        let v: SiteCounts = v.into_iter().filter(|&(_, k)| k > 0).collect();
        let y = y_exponents(datum, &w, &v);
        let v_degree = v.values().map(|&k| u64::from(k)).sum();
        Ok(Monomial { w, v, y, v_degree })
    }

    pub fn w(&self) -> &SiteCounts {
        &self.w
    }

    pub fn v(&self) -> &SiteCounts {
        &self.v
    }

    pub fn y(&self) -> &Exponents {
        &self.y
    }

    pub fn into_y(self) -> Exponents {
        self.y
    }

    /// Total lowering degree `Σ v_{i,n}`.
    pub fn v_degree(&self) -> u64 {
        self.v_degree
    }

    /// `self · A_{i,n}^{-1}`, i.e. `v_{i,n} += 1`.
    pub fn lowered(&self, datum: &RootDatum, site: &Site) -> Monomial {
        self.lowered_by(datum, site, 1)
    }

    /// `self · A_{i,n}^{-count}`.
    pub fn lowered_by(&self, datum: &RootDatum, site: &Site, count: u32) -> Monomial {
        let mut out = self.clone();
        if count == 0 {
            return out;
        }
        *out.v.entry(site.clone()).or_insert(0) += count;
        out.y.add_inverse_a(datum, site, i64::from(count));
        out.v_degree += u64::from(count);
        out
    }

    /// Product of monomials: `w`, `v` and `y` all add.
    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (s, &k) in &other.w {
            *out.w.entry(s.clone()).or_insert(0) += k;
        }
        for (s, &k) in &other.v {
            *out.v.entry(s.clone()).or_insert(0) += k;
        }
        for (s, e) in other.y.iter() {
            out.y.add(s.clone(), e);
        }
        out.v_degree += other.v_degree;
        out
    }

    /// Relabels every site; `f` must be injective.
    pub fn map_sites(&self, f: impl Fn(&Site) -> Site) -> Monomial {
        Monomial {
            w: self.w.iter().map(|(s, &k)| (f(s), k)).collect(),
            v: self.v.iter().map(|(s, &k)| (f(s), k)).collect(),
            y: self.y.map_sites(&f),
            v_degree: self.v_degree,
        }
    }

    /// `{ n ↦ y_{i,n} }` for the fixed node `i`.
    pub fn i_part(&self, i: usize) -> BTreeMap<SpectralShift, i64> {
        self.y.node_entries(i).map(|(s, e)| (s.at.clone(), e)).collect()
    }

    pub fn is_i_dominant(&self, i: usize) -> bool {
        self.y.node_entries(i).all(|(_, e)| e >= 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.y.is_dominant()
    }

    /// Whether the stored `y` matches the one regenerated from `(w, v)`.
    pub fn is_consistent(&self, datum: &RootDatum) -> bool {
        y_exponents(datum, &self.w, &self.v) == self.y
    }

    /// Output order: lowering degree, then canonical `y` order.
    pub fn output_cmp(&self, other: &Monomial) -> Ordering {
        self.v_degree
            .cmp(&other.v_degree)
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.y == other.y
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.y.hash(state);
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.y.fmt(f)
    }
}

/// `m · A_{i,n}^{-1}`.
pub fn apply_lowering(datum: &RootDatum, m: &Monomial, i: usize, n: &SpectralShift) -> Monomial {
    m.lowered(datum, &Site::new(i, n.clone()))
}

/// Restriction of `m`'s exponents to node `i`.
pub fn i_part(m: &Monomial, i: usize) -> BTreeMap<SpectralShift, i64> {
    m.i_part(i)
}

pub fn is_i_dominant(m: &Monomial, i: usize) -> bool {
    m.is_i_dominant(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(entries: &[(usize, i64, u32)]) -> SiteCounts {
        entries.iter().map(|&(i, n, k)| (Site::at(i, n), k)).collect()
    }

    #[test]
    fn highest_has_y_equal_w() {
        let d4: RootDatum = "D4".parse().unwrap();
        let m = Monomial::from_parts(&d4, counts(&[(2, 0, 1)]), SiteCounts::new()).unwrap();
        assert_eq!(m.to_string(), "2_0");
    }

    #[test]
    fn d4_first_lowering() {
        let d4: RootDatum = "D4".parse().unwrap();
        let m = Monomial::highest(counts(&[(2, 0, 1)]));
        let l = apply_lowering(&d4, &m, 2, &SpectralShift::at(1));
        assert_eq!(l.to_string(), "1_1 2_2^-1 3_1 4_1");
        assert!(l.is_consistent(&d4));
        assert_eq!(l.v_degree(), 1);
    }

    #[test]
    fn a2_two_lowerings() {
        let a2: RootDatum = "A2".parse().unwrap();
        let m = Monomial::from_parts(&a2, counts(&[(1, 0, 1)]), counts(&[(1, 1, 1), (2, 2, 1)])).unwrap();
        assert_eq!(m.to_string(), "2_3^-1");
        let one = apply_lowering(
            &a2,
            &Monomial::highest(counts(&[(1, 0, 1)])),
            1,
            &SpectralShift::at(1),
        );
        assert_eq!(one.to_string(), "1_2^-1 2_1");
    }

    #[test]
    fn lowering_commutes() {
        let d4: RootDatum = "D4".parse().unwrap();
        let m = Monomial::highest(counts(&[(2, 0, 1)]));
        let a = Site::at(2, 1);
        let b = Site::at(1, 2);
        let x = m.lowered(&d4, &a).lowered(&d4, &b);
        let y = m.lowered(&d4, &b).lowered(&d4, &a);
        assert_eq!(x, y);
        assert_eq!(x.v(), y.v());
    }

    #[test]
    fn i_part_and_dominance() {
        let d4: RootDatum = "D4".parse().unwrap();
        let y: Exponents = [
            (Site::at(1, 3), -1),
            (Site::at(2, 2), 2),
            (Site::at(3, 3), -1),
            (Site::at(4, 3), -1),
        ]
        .into_iter()
        .collect();
        let m = Monomial {
            w: SiteCounts::new(),
            v: SiteCounts::new(),
            y,
            v_degree: 0,
        };
        assert_eq!(m.i_part(2), BTreeMap::from([(SpectralShift::at(2), 2)]));
        assert_eq!(m.i_part(1), BTreeMap::from([(SpectralShift::at(3), -1)]));
        assert!(!m.is_i_dominant(1));
        assert!(m.is_i_dominant(2));
        let top = Monomial::highest(counts(&[(2, 0, 1)]));
        assert!(top.i_part(1).is_empty());
        assert!(is_i_dominant(&top, 2));
        let _ = d4;
    }

    #[test]
    fn mixed_signs_not_dominant() {
        let y: Exponents = [(Site::at(2, 2), 1), (Site::at(2, 4), -1)].into_iter().collect();
        let m = Monomial {
            w: SiteCounts::new(),
            v: SiteCounts::new(),
            y,
            v_degree: 0,
        };
        assert!(!m.is_i_dominant(2));
    }

    #[test]
    fn orbit_names() {
        assert!(Orbit::new("b2").is_some());
        assert!(Orbit::new("").is_none());
        assert!(Orbit::new("a b").is_none());
        assert!(Orbit::default().is_default());
    }
}
