//! Twisted products of q,t-characters and standard modules.
//!
//! The product of two characters multiplies monomials and weights each pair
//! by `t^{2p}`, where `p` is the rank of the positive attracting block of the
//! tangent space at the fixed-point pair. In `(w, v)` coordinates `p` is the
//! bilinear form computed by [`twist_form`].

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::charalg::{Character, Exponents, Monomial, Site, SiteCounts, SpectralShift, Term};
use crate::fm::{fundamental_qt_with, FmError, FmOptions};
use crate::par::{self, Exec};
use crate::rootdata::{RootDataError, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("negative twist {p} between {left} and {right}")]
    NegativeTwist { p: i64, left: String, right: String },
    #[error("characters over different root data ({left} and {right})")]
    DatumMismatch { left: String, right: String },
    #[error("a standard module needs at least one factor")]
    EmptyFactors,
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("fundamental character of node {node}: {source}")]
    Fundamental { node: usize, source: Box<FmError> },
}

/// A fundamental factor `V_{node}(shift)` of a standard module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSpec {
    pub node: usize,
    pub shift: SpectralShift,
}

impl FactorSpec {
    pub fn new(node: usize, shift: SpectralShift) -> Self {
        FactorSpec { node, shift }
    }

    /// Factor on the default orbit.
    pub fn at(node: usize, shift: i64) -> Self {
        FactorSpec {
            node,
            shift: SpectralShift::at(shift),
        }
    }

    fn canonical_key(&self) -> (&SpectralShift, usize) {
        (&self.shift, self.node)
    }
}

fn count(c: &SiteCounts, s: &Site) -> i64 {
    c.get(s).map_or(0, |&k| i64::from(k))
}

/// The pairing `p(m1, m2)`, summed over sites of a common orbit:
///
/// `w1_{i,n} v2_{i,n-1} + v1_{i,n} w2_{i,n-1} - v1_{i,n} v2_{i,n}
///  - v1_{i,n} v2_{i,n-2} + Σ_{j~i} v1_{j,n} v2_{i,n-1}`.
pub fn twist_form(datum: &RootDatum, m1: &Monomial, m2: &Monomial) -> i64 {
    let (w2, v2) = (m2.w(), m2.v());
    if v2.is_empty() && m1.v().is_empty() {
        return 0;
    }
    let mut p = 0;
    if !v2.is_empty() {
        for (s, &a) in m1.w() {
            p += i64::from(a) * count(v2, &s.offset(-1));
        }
    }
    for (s, &a) in m1.v() {
        let below = s.offset(-1);
        let mut inner = count(w2, &below) - count(v2, s) - count(v2, &s.offset(-2));
        for &j in datum.adj(s.node) {
            inner += count(v2, &Site::new(j, below.at.clone()));
        }
        p += i64::from(a) * inner;
    }
    p
}

/// [`twist_form`] checked to be nonnegative.
pub fn bb_twist(datum: &RootDatum, m1: &Monomial, m2: &Monomial) -> Result<u32, FusionError> {
    let p = twist_form(datum, m1, m2);
    u32::try_from(p).map_err(|_| FusionError::NegativeTwist {
        p,
        left: m1.to_string(),
        right: m2.to_string(),
    })
}

type Acc = Result<HashMap<Exponents, Term>, FusionError>;

fn merge(a: Acc, b: Acc) -> Acc {
    let (mut a, b) = (a?, b?);
    if a.len() < b.len() {
        return merge(Ok(b), Ok(a));
    }
    for (y, t) in b {
        match a.get_mut(&y) {
            Some(u) => u.coeff += &t.coeff,
            None => {
                a.insert(y, t);
            }
        }
    }
    Ok(a)
}

/// `χ1 ⊛ χ2` with the default execution strategy.
pub fn twisted_product(datum: &RootDatum, x1: &Character, x2: &Character) -> Result<Character, FusionError> {
    twisted_product_with(datum, x1, x2, Exec::default())
}

/// `χ1 ⊛ χ2`: the coefficient of `m` is
/// `Σ_{m1 m2 = m} χ1[m1] χ2[m2] t^{2 p(m1, m2)}`. The outer sum over the
/// terms of `χ1` is split across threads under [`Exec::Parallel`].
pub fn twisted_product_with(
    datum: &RootDatum,
    x1: &Character,
    x2: &Character,
    exec: Exec,
) -> Result<Character, FusionError> {
    for x in [x1, x2] {
        if x.datum() != datum {
            return Err(FusionError::DatumMismatch {
                left: datum.name(),
                right: x.datum().name(),
            });
        }
    }
    let left: Vec<&Term> = x1.iter().collect();
    let right: Vec<&Term> = x2.iter().collect();
    let acc = par::fold_reduce(
        exec,
        &left,
        || Ok(HashMap::new()),
        |acc: Acc, t1| {
            let mut acc = acc?;
            for t2 in &right {
                let p = bb_twist(datum, &t1.monomial, &t2.monomial)?;
                let m = t1.monomial.product(&t2.monomial);
                let entry = acc.entry(m.y().clone()).or_insert_with(|| Term {
                    monomial: m,
                    coeff: Default::default(),
                });
                entry
                    .coeff
                    .add_product_shifted(&t1.coeff, &t2.coeff, 2 * p as i32);
            }
            Ok(acc)
        },
        merge,
    )?;
    let terms: BTreeMap<Exponents, Term> = acc.into_iter().filter(|(_, t)| !t.coeff.is_zero()).collect();
    let highest = x1.highest().product(x2.highest());
    Ok(Character::from_raw(datum.clone(), highest, terms))
}

/// Default options and strategy for [`standard_module_qt_with`].
pub fn standard_module_qt(datum: &RootDatum, factors: &[FactorSpec]) -> Result<Character, FusionError> {
    standard_module_qt_with(datum, factors, &FmOptions::default(), Exec::default())
}

/// q,t-character of the standard module `V_{i1}(a1) ⊗ ... ⊗ V_{ik}(ak)`:
/// fundamental characters in ascending `(orbit, shift, node)` order,
/// multiplied from the left.
pub fn standard_module_qt_with(
    datum: &RootDatum,
    factors: &[FactorSpec],
    opts: &FmOptions,
    exec: Exec,
) -> Result<Character, FusionError> {
    if factors.is_empty() {
        return Err(FusionError::EmptyFactors);
    }
    for f in factors {
        datum.check_node(f.node)?;
    }
    let mut sorted: Vec<&FactorSpec> = factors.iter().collect();
    sorted.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));

    let mut nodes: Vec<usize> = sorted.iter().map(|f| f.node).collect();
    nodes.sort_unstable();
    nodes.dedup();
    let computed = par::map(exec, &nodes, |&node| {
        fundamental_qt_with(datum, node, &SpectralShift::at(0), opts).map_err(|e| FusionError::Fundamental {
            node,
            source: Box::new(e),
        })
    });
    let mut base: HashMap<usize, Character> = HashMap::new();
    for (node, ch) in nodes.into_iter().zip(computed) {
        base.insert(node, ch?);
    }

    let mut acc: Option<Character> = None;
    for f in sorted {
        let x = base[&f.node].translated(&f.shift.orbit, f.shift.shift);
        acc = Some(match acc {
            None => x,
            Some(a) => twisted_product_with(datum, &a, &x, exec)?,
        });
    }
    Ok(acc.expect("at least one factor"))
}

/// Evaluates many standard modules; modules are spread across threads under
/// [`Exec::Parallel`] and each product runs sequentially.
pub fn standard_modules_batch(
    datum: &RootDatum,
    modules: &[Vec<FactorSpec>],
    opts: &FmOptions,
    exec: Exec,
) -> Vec<Result<Character, FusionError>> {
    par::map(exec, modules, |factors| {
        standard_module_qt_with(datum, factors, opts, Exec::Sequential)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::{parse_monomial, TPoly};

    fn m(datum: &RootDatum, w: &[(usize, i64)], v: &[(usize, i64)]) -> Monomial {
        let c = |xs: &[(usize, i64)]| -> SiteCounts {
            let mut out = SiteCounts::new();
            for &(i, n) in xs {
                *out.entry(Site::at(i, n)).or_insert(0) += 1;
            }
            out
        };
        Monomial::from_parts(datum, c(w), c(v)).unwrap()
    }

    #[test]
    fn twist_examples() {
        let a2: RootDatum = "A2".parse().unwrap();
        let h = m(&a2, &[(1, 0)], &[]);
        assert_eq!(twist_form(&a2, &h, &h), 0);
        let x = m(&a2, &[(1, 0)], &[(1, 1), (2, 2)]);
        let y = m(&a2, &[(1, 0)], &[(1, 1)]);
        assert_eq!(bb_twist(&a2, &x, &y).unwrap(), 1);
        assert_eq!(bb_twist(&a2, &y, &x).unwrap(), 0);
        let z = m(&a2, &[(2, 1)], &[]);
        assert_eq!(bb_twist(&a2, &x, &z).unwrap(), 1);
    }

    #[test]
    fn cross_orbit_twist_vanishes() {
        let a2: RootDatum = "A2".parse().unwrap();
        let x = m(&a2, &[(1, 0)], &[(1, 1), (2, 2)]);
        let b = crate::charalg::Orbit::new("b").unwrap();
        let y = m(&a2, &[(1, 0)], &[(1, 1)])
            .map_sites(|s| Site::new(s.node, SpectralShift::new(b.clone(), s.at.shift)));
        assert_eq!(twist_form(&a2, &x, &y), 0);
        assert_eq!(twist_form(&a2, &y, &x), 0);
    }

    #[test]
    fn negative_twist_is_an_error() {
        let a1: RootDatum = "A1".parse().unwrap();
        let x = m(&a1, &[], &[(1, 1)]);
        assert!(matches!(
            bb_twist(&a1, &x, &x),
            Err(FusionError::NegativeTwist { p: -1, .. })
        ));
    }

    #[test]
    fn unit_is_neutral() {
        let a2: RootDatum = "A2".parse().unwrap();
        let v1 = standard_module_qt(&a2, &[FactorSpec::at(1, 0)]).unwrap();
        let one = Character::trivial(a2.clone());
        assert_eq!(twisted_product(&a2, &v1, &one).unwrap(), v1);
        assert_eq!(twisted_product(&a2, &one, &v1).unwrap(), v1);
    }

    #[test]
    fn a2_square_of_fundamental() {
        let a2: RootDatum = "A2".parse().unwrap();
        let ch = standard_module_qt(&a2, &[FactorSpec::at(1, 0), FactorSpec::at(1, 0)]).unwrap();
        let thick = TPoly::from_coeffs(&[1, 0, 1]);
        let expected = [
            ("1_0^2", TPoly::one()),
            ("1_0 1_2^-1 2_1", thick.clone()),
            ("1_2^-2 2_1^2", TPoly::one()),
            ("1_0 2_3^-1", thick.clone()),
            ("1_2^-1 2_1 2_3^-1", thick),
            ("2_3^-2", TPoly::one()),
        ];
        assert_eq!(ch.len(), expected.len());
        for (s, c) in expected {
            let y = parse_monomial(s, &a2).unwrap();
            assert_eq!(ch.get(&y), Some(&c), "{s}");
        }
    }

    #[test]
    fn rank_one_square() {
        let a1: RootDatum = "A1".parse().unwrap();
        let v = standard_module_qt(&a1, &[FactorSpec::at(1, 0)]).unwrap();
        let sq = twisted_product(&a1, &v, &v).unwrap();
        let mid = parse_monomial("1_0 1_2^-1", &a1).unwrap();
        assert_eq!(sq.get(&mid), Some(&TPoly::from_coeffs(&[1, 0, 1])));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn single_factor_is_fundamental() {
        let d4: RootDatum = "D4".parse().unwrap();
        let s = standard_module_qt(&d4, &[FactorSpec::at(2, 0)]).unwrap();
        let f = crate::fm::fundamental_qt(&d4, 2, &SpectralShift::at(0)).unwrap();
        assert_eq!(s, f);
    }

    #[test]
    fn errors() {
        let a2: RootDatum = "A2".parse().unwrap();
        assert_eq!(standard_module_qt(&a2, &[]), Err(FusionError::EmptyFactors));
        assert!(matches!(
            standard_module_qt(&a2, &[FactorSpec::at(3, 0)]),
            Err(FusionError::RootData(_))
        ));
        let d4: RootDatum = "D4".parse().unwrap();
        let x = Character::trivial(d4);
        assert!(matches!(
            twisted_product(&a2, &x, &x),
            Err(FusionError::DatumMismatch { .. })
        ));
    }

    #[test]
    fn batch_matches_single() {
        let a2: RootDatum = "A2".parse().unwrap();
        let mods = vec![
            vec![FactorSpec::at(1, 0), FactorSpec::at(2, 1)],
            vec![FactorSpec::at(2, 0)],
        ];
        for exec in [Exec::Sequential, Exec::Parallel] {
            let out = standard_modules_batch(&a2, &mods, &FmOptions::default(), exec);
            for (f, r) in mods.iter().zip(out) {
                assert_eq!(r.unwrap(), standard_module_qt(&a2, f).unwrap());
            }
        }
    }
}
