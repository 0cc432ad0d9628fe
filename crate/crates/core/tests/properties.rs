//! Randomized invariants of the character algebra, the sl2 engine, fusion
//! and the Jordan codec.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::SizeRange;

use qtchar::charalg::{
    exponents_to_lweight, parse_monomial, render_monomial, Character, Exponents, Orbit, Site, TPoly,
};
use qtchar::fusion::{standard_module_qt_with, twisted_product_with};
use qtchar::jordan::{decode, encode, sigma, validate_poincare, JordanProfile};
use qtchar::sl2::{decompose_segments, sl2_simple_qt};
use qtchar::{fundamental_qt, Exec, FactorSpec, FmOptions, RootDatum, SpectralShift};

fn orbit(k: u8) -> Orbit {
    Orbit::new(["a", "b", "c1"][k as usize % 3]).unwrap()
}

fn exponents(rank: usize) -> impl Strategy<Value = Exponents> {
    prop::collection::vec((1..=rank, 0u8..3, -8i64..8, -3i64..=3), 0..8).prop_map(|entries| {
        let mut y = Exponents::new();
        for (node, o, shift, e) in entries {
            y.add(Site::new(node, SpectralShift::new(orbit(o), shift)), e);
        }
        y
    })
}

fn roots(len: impl Into<SizeRange>) -> impl Strategy<Value = Vec<SpectralShift>> {
    prop::collection::vec((0u8..2, 0i64..10), len).prop_map(|v| {
        v.into_iter()
            .map(|(o, s)| SpectralShift::new(orbit(o), s))
            .collect()
    })
}

fn datum(name: &str) -> RootDatum {
    name.parse().unwrap()
}

fn factors(rank: usize, len: impl Into<SizeRange>) -> impl Strategy<Value = Vec<FactorSpec>> {
    prop::collection::vec((1..=rank, 0i64..=8), len)
        .prop_map(|v| v.into_iter().map(|(n, s)| FactorSpec::at(n, s)).collect())
}

fn multiset<T: Ord + Clone>(items: impl IntoIterator<Item = T>) -> BTreeMap<T, usize> {
    let mut out = BTreeMap::new();
    for x in items {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

fn seq() -> FmOptions {
    FmOptions {
        exec: Exec::Sequential,
        ..FmOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(y in exponents(4)) {
        let d4 = datum("D4");
        let text = render_monomial(&y);
        prop_assert_eq!(parse_monomial(&text, &d4).unwrap(), y.clone());
        // braces and explicit default orbits are accepted on input
        let verbose: Vec<String> = y
            .iter()
            .map(|(s, e)| format!("{}_{{{}}}@{}^{{{}}}", s.node, s.at.shift, s.at.orbit, e))
            .collect();
        prop_assert_eq!(parse_monomial(&verbose.join(" "), &d4).unwrap(), y);
    }

    #[test]
    fn lweight_reconstructs(y in exponents(6)) {
        let view = exponents_to_lweight(&y);
        for roots in view.nodes.values() {
            for r in &roots.numerator {
                prop_assert!(!roots.denominator.contains(r));
            }
        }
        prop_assert_eq!(view.reconstruct(), y);
    }

    #[test]
    fn segments_preserve_roots(rs in roots(0..7), seed in any::<u64>()) {
        let segs = decompose_segments(&rs);
        let spread = segs
            .iter()
            .flat_map(|s| s.shifts().map(|n| SpectralShift::new(s.orbit.clone(), n)).collect::<Vec<_>>());
        prop_assert_eq!(multiset(spread), multiset(rs.iter().cloned()));

        let mut shuffled = rs.clone();
        let k = shuffled.len().max(1);
        shuffled.rotate_left(seed as usize % k);
        if seed % 2 == 0 {
            shuffled.reverse();
        }
        prop_assert_eq!(decompose_segments(&shuffled), segs.clone());

        for (a, i) in segs.iter().zip(0..) {
            for b in &segs[i + 1..] {
                prop_assert!(!a.is_linked(b), "{:?} and {:?} are linked", a, b);
            }
        }
    }

    #[test]
    fn sl2_mass_is_product_over_segments(rs in roots(1..5)) {
        let ch = sl2_simple_qt(&rs).unwrap();
        let expected: u64 = decompose_segments(&rs).iter().map(|s| u64::from(s.length) + 1).product();
        prop_assert_eq!(ch.mass_at_t1(), BigInt::from(expected));
    }

    #[test]
    fn equal_roots_give_symmetric_coefficients(u in 1usize..6, shift in -4i64..4) {
        let ch = sl2_simple_qt(&vec![SpectralShift::at(shift); u]).unwrap();
        prop_assert_eq!(ch.len(), u + 1);
        for t in ch.iter() {
            prop_assert!(validate_poincare(&t.coeff).is_pass(), "{} {}", t.coeff, t.monomial);
        }
    }

    #[test]
    fn tpoly_ring(a in prop::collection::vec(-5i64..6, 0..6), b in prop::collection::vec(-5i64..6, 0..6)) {
        let (a, b) = (TPoly::from_coeffs(&a), TPoly::from_coeffs(&b));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        let mut acc = TPoly::zero();
        acc.add_product_shifted(&a, &b, 2);
        prop_assert_eq!(acc, (&a * &b).shifted(2));
    }

    #[test]
    fn jordan_codec(n in 0u32..9, extra in prop::collection::vec(0u32..5, 0..6)) {
        let blocks: Vec<u32> = std::iter::once(n + 1)
            .chain(extra.iter().map(|&k| n + 1 - 2 * (k % (n / 2 + 1))))
            .collect();
        let profile = JordanProfile::from_blocks(n, blocks.clone()).unwrap();
        let p = encode(&profile).unwrap();
        prop_assert!(validate_poincare(&p).is_pass(), "{}", p);
        prop_assert_eq!(p.eval_at_one(), BigInt::from(blocks.iter().sum::<u32>()));
        prop_assert_eq!(profile.mass(), u64::from(blocks.iter().sum::<u32>()));
        prop_assert_eq!(profile.graded.iter().sum::<u64>(), profile.mass());
        prop_assert_eq!(p.max_degree(), Some(2 * n as i32));
        let back = decode(&p).unwrap();
        prop_assert_eq!(&back, &profile);
        prop_assert_eq!(encode(&back).unwrap(), p.clone());
        for k in 0..=n {
            let s = sigma(n, k).unwrap();
            prop_assert_eq!(BigInt::from(back.graded[k as usize]), p.coeff(2 * s as i32));
            if k < n {
                let drop = back.graded[k as usize] - back.graded[k as usize + 1];
                let count = back.blocks.iter().filter(|&&b| b == k + 1).count() as u64;
                prop_assert_eq!(drop, count);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exec_strategies_agree(ty in 0usize..3, fs in factors(3, 1..4)) {
        let d = datum(["A2", "A3", "D4"][ty]);
        let fs: Vec<FactorSpec> = fs.into_iter().map(|f| FactorSpec::at((f.node - 1) % d.rank() + 1, f.shift.shift)).collect();
        let s = standard_module_qt_with(&d, &fs, &seq(), Exec::Sequential).unwrap();
        let p = standard_module_qt_with(&d, &fs, &FmOptions::default(), Exec::Parallel).unwrap();
        prop_assert_eq!(s, p);
    }

    #[test]
    fn product_order_and_mass(fs in factors(3, 2..4)) {
        let a3 = datum("A3");
        let base = standard_module_qt_with(&a3, &fs, &seq(), Exec::Sequential).unwrap();
        let mut reversed = fs.clone();
        reversed.reverse();
        prop_assert_eq!(&standard_module_qt_with(&a3, &reversed, &seq(), Exec::Sequential).unwrap(), &base);

        let mass: BigInt = fs
            .iter()
            .map(|f| fundamental_qt(&a3, f.node, &SpectralShift::at(0)).unwrap().mass_at_t1())
            .product();
        prop_assert_eq!(base.mass_at_t1(), mass);
    }

    #[test]
    fn disjoint_orbits_do_not_twist(i in 1usize..=4, j in 1usize..=4, s in -4i64..4) {
        let d4 = datum("D4");
        let x = fundamental_qt(&d4, i, &SpectralShift::at(0)).unwrap();
        let y = fundamental_qt(&d4, j, &SpectralShift::at(0)).unwrap().translated(&orbit(1), s);
        let xy = twisted_product_with(&d4, &x, &y, Exec::Sequential).unwrap();
        prop_assert_eq!(xy.len(), x.len() * y.len());
        for a in x.iter() {
            for b in y.iter() {
                let m = a.monomial.y().product(b.monomial.y());
                prop_assert_eq!(xy.get(&m).unwrap(), &(&a.coeff * &b.coeff));
            }
        }
    }

    #[test]
    fn json_round_trip(fs in factors(2, 1..4)) {
        let a2 = datum("A2");
        let ch = standard_module_qt_with(&a2, &fs, &seq(), Exec::Sequential).unwrap();
        let doc = ch.to_doc();
        let text = doc.to_json_pretty();
        let back = qtchar::CharacterDoc::from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(Character::from_doc(&back).unwrap(), ch);
    }
}
