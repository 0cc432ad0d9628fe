//! Rank-one engine: q-segments, ladder characters and simple sl2
//! q,t-characters.

use std::collections::BTreeMap;

use crate::charalg::{Character, Monomial, Orbit, Site, SiteCounts, SpectralShift, TPoly};
use crate::fusion::{twisted_product_with, FusionError};
use crate::par::Exec;
use crate::rootdata::{Family, RootDatum};

/// The step-2 chain `head, head+2, ..., head+2(length-1)` on one orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub orbit: Orbit,
    pub head: i64,
    pub length: u32,
}

impl Segment {
    pub fn new(orbit: Orbit, head: i64, length: u32) -> Self {
        assert!(length >= 1, "segments are nonempty");
        Segment { orbit, head, length }
    }

    pub fn shifts(&self) -> impl Iterator<Item = i64> + '_ {
        (0..i64::from(self.length)).map(move |j| self.head + 2 * j)
    }

    pub fn last(&self) -> i64 {
        self.head + 2 * (i64::from(self.length) - 1)
    }

    /// Two segments are linked when neither contains the other and their
    /// union is again a segment.
    pub fn is_linked(&self, other: &Segment) -> bool {
        if self.orbit != other.orbit || (self.head - other.head).rem_euclid(2) != 0 {
            return false;
        }
        let contains = |a: &Segment, b: &Segment| a.head <= b.head && b.last() <= a.last();
        if contains(self, other) || contains(other, self) {
            return false;
        }
        // union is a chain iff the gap between them is at most one step
        let (lo, hi) = if self.head <= other.head {
            (self, other)
        } else {
            (other, self)
        };
        hi.head <= lo.last() + 2
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    /// Orbit, then head, then longer first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.orbit
            .cmp(&other.orbit)
            .then(self.head.cmp(&other.head))
            .then(other.length.cmp(&self.length))
    }
}

/// Splits a root multiset into pairwise non-linked segments by repeatedly
/// taking the longest chain from the smallest remaining shift.
pub fn decompose_segments(roots: &[SpectralShift]) -> Vec<Segment> {
    let mut by_orbit: BTreeMap<&Orbit, BTreeMap<i64, u32>> = BTreeMap::new();
    for r in roots {
        *by_orbit.entry(&r.orbit).or_default().entry(r.shift).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    for (orbit, mut counts) in by_orbit {
        while let Some((&start, _)) = counts.iter().next() {
            let mut s = start;
            let mut length = 0;
            while let Some(c) = counts.get_mut(&s) {
                *c -= 1;
                if *c == 0 {
                    counts.remove(&s);
                }
                length += 1;
                s += 2;
            }
            out.push(Segment::new(orbit.clone(), start, length));
        }
    }
    out.sort();
    out
}

pub(crate) fn a1() -> RootDatum {
    RootDatum::new(Family::A, 1).expect("A1 is a valid type")
}

/// Thin q-character of the evaluation module attached to one segment:
/// `l + 1` monomials, the `k`-th step lowering at `head + 2(l-k) - 1`.
pub fn ladder_character(seg: &Segment) -> Character {
    let datum = a1();
    let w: SiteCounts = seg
        .shifts()
        .map(|n| (Site::new(1, SpectralShift::new(seg.orbit.clone(), n)), 1))
        .collect();
    let top = Monomial::highest(w);
    let mut terms = vec![(top.clone(), TPoly::one())];
    let mut m = top.clone();
    let l = i64::from(seg.length);
    for k in 0..l {
        let site = Site::new(
            1,
            SpectralShift::new(seg.orbit.clone(), seg.head + 2 * (l - k) - 1),
        );
        m = m.lowered(&datum, &site);
        terms.push((m.clone(), TPoly::one()));
    }
    Character::from_terms(datum, top, terms).expect("ladder terms are distinct and consistent")
}

/// Simple sl2 q,t-character with the given Drinfeld roots: the twisted
/// product of the ladders of its segments in canonical order.
pub fn sl2_simple_qt(roots: &[SpectralShift]) -> Result<Character, FusionError> {
    let datum = a1();
    let mut acc = Character::trivial(datum.clone());
    for seg in decompose_segments(roots) {
        acc = twisted_product_with(&datum, &acc, &ladder_character(&seg), Exec::Sequential)?;
    }
    Ok(acc)
}

/// Lowering steps and coefficients of a simple sl2 character, with the
/// rank-one sites reduced to their spectral parameters.
pub type Template = Vec<(Vec<(SpectralShift, u32)>, TPoly)>;

pub(crate) fn sl2_template(roots: &[SpectralShift]) -> Result<Template, FusionError> {
    let ch = sl2_simple_qt(roots)?;
    Ok(ch
        .sorted_terms()
        .into_iter()
        .map(|t| {
            let steps = t.monomial.v().iter().map(|(s, &k)| (s.at.clone(), k)).collect();
            (steps, t.coeff.clone())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn roots(shifts: &[i64]) -> Vec<SpectralShift> {
        shifts.iter().map(|&n| SpectralShift::at(n)).collect()
    }

    fn seg(head: i64, length: u32) -> Segment {
        Segment::new(Orbit::default(), head, length)
    }

    fn coeff(ch: &Character, s: &str) -> TPoly {
        let y = crate::charalg::parse_monomial(s, ch.datum()).unwrap();
        ch.get(&y).cloned().unwrap_or_default()
    }

    #[test]
    fn decompositions() {
        assert_eq!(decompose_segments(&roots(&[0])), vec![seg(0, 1)]);
        assert_eq!(decompose_segments(&roots(&[2, 2])), vec![seg(2, 1), seg(2, 1)]);
        assert_eq!(
            decompose_segments(&roots(&[0, 2, 2, 4])),
            vec![seg(0, 3), seg(2, 1)]
        );
        assert_eq!(decompose_segments(&roots(&[4, 0, 2])), vec![seg(0, 3)]);
        assert_eq!(decompose_segments(&roots(&[0, 3])), vec![seg(0, 1), seg(3, 1)]);
    }

    #[test]
    fn linkage() {
        assert!(seg(0, 2).is_linked(&seg(2, 2)));
        assert!(!seg(0, 3).is_linked(&seg(2, 1)));
        assert!(seg(0, 1).is_linked(&seg(2, 1)));
        assert!(!seg(0, 1).is_linked(&seg(4, 1)));
        assert!(!seg(0, 1).is_linked(&seg(1, 1)));
    }

    #[test]
    fn ladders() {
        let l = ladder_character(&seg(0, 1));
        assert_eq!(l.len(), 2);
        assert!(l.contains(&crate::charalg::parse_exponents("1_2^-1", None).unwrap()));
        let l = ladder_character(&seg(0, 2));
        let rendered: Vec<String> = l.sorted_terms().iter().map(|t| t.monomial.to_string()).collect();
        assert_eq!(rendered, ["1_0 1_2", "1_0 1_4^-1", "1_2^-1 1_4^-1"]);
        let l = ladder_character(&seg(1, 1));
        let rendered: Vec<String> = l.sorted_terms().iter().map(|t| t.monomial.to_string()).collect();
        assert_eq!(rendered, ["1_1", "1_3^-1"]);
    }

    #[test]
    fn simple_characters() {
        let ch = sl2_simple_qt(&roots(&[0])).unwrap();
        assert!(ch.is_thin());
        assert_eq!(ch.len(), 2);

        let ch = sl2_simple_qt(&roots(&[0, 0])).unwrap();
        assert_eq!(ch.len(), 3);
        assert!(coeff(&ch, "1_0^2").is_one());
        assert_eq!(coeff(&ch, "1_0 1_2^-1"), TPoly::from_coeffs(&[1, 0, 1]));
        assert!(coeff(&ch, "1_2^-2").is_one());

        let ch = sl2_simple_qt(&roots(&[0, 2])).unwrap();
        assert_eq!(ch.len(), 3);
        assert!(ch.is_thin());
    }

    #[test]
    fn triple_root_is_t_binomial() {
        let ch = sl2_simple_qt(&roots(&[0, 0, 0])).unwrap();
        let mid = TPoly::from_coeffs(&[1, 0, 1, 0, 1]);
        assert_eq!(coeff(&ch, "1_0^2 1_2^-1"), mid);
        assert_eq!(coeff(&ch, "1_0 1_2^-2"), mid);
        assert_eq!(ch.mass_at_t1(), BigInt::from(8));
    }
}
