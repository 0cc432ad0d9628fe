//! Jordan filtrations of ℓ-weight spaces from coefficient polynomials.
//!
//! A coefficient `P(t) = Σ b_d t^d` of top degree `2n` is the Poincaré
//! polynomial of a component of complex dimension `n`. Read as an sl2
//! character it splits into strings: the number of Jordan chains of length
//! `l` is `b_{n+l-1} - b_{n+l+1}`. The graded pieces of the filtration are
//! `dim F_k/F_{k-1} = b_{2σ(k)}` with
//!
//! * `σ(k) = ⌊n/2⌋ - k/2` for even `k`,
//! * `σ(k) = ⌊n/2⌋ + ⌈k/2⌉` for odd `k`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::charalg::{Character, CharacterDoc, Exponents, JordanDoc, TPoly};

/// Largest total multiplicity the decoder will expand into explicit blocks.
pub const MAX_MASS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("sigma index {k} out of range 0..={n}")]
    IndexOutOfRange { n: u32, k: u32 },
    #[error("not a Poincaré polynomial: {report}")]
    NotAPoincarePolynomial { report: ValidationReport },
    #[error("negative number of Jordan chains of length {length}")]
    NegativeMultiplicity { length: u32 },
    #[error("inconsistent Jordan profile: {reason}")]
    InconsistentProfile { reason: String },
    #[error("coefficient too large to expand into Jordan blocks")]
    TooLarge,
    #[error("at monomial {monomial}: {source}")]
    AtMonomial {
        monomial: String,
        source: Box<JordanError>,
    },
}

/// `σ(k)` for a component of dimension `n`.
pub fn sigma(n: u32, k: u32) -> Result<u32, JordanError> {
    if k > n {
        return Err(JordanError::IndexOutOfRange { n, k });
    }
    Ok(if k.is_multiple_of(2) {
        n / 2 - k / 2
    } else {
        n / 2 + k.div_ceil(2)
    })
}

/// One failed hard-Lefschetz check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Zero,
    ConstantTermBelowOne,
    NegativeDegree(i32),
    OddDegree(i32),
    NotPalindromic(i32),
    NonPositiveCoefficient(i32),
    NotUnimodal(i32),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Zero => write!(f, "polynomial is zero"),
            Violation::ConstantTermBelowOne => write!(f, "constant term below 1"),
            Violation::NegativeDegree(d) => write!(f, "negative degree {d}"),
            Violation::OddDegree(d) => write!(f, "odd degree {d}"),
            Violation::NotPalindromic(d) => write!(f, "not palindromic at degree {d}"),
            Violation::NonPositiveCoefficient(d) => write!(f, "non-positive coefficient at degree {d}"),
            Violation::NotUnimodal(d) => write!(f, "not unimodal at degree {d}"),
        }
    }
}

/// Result of [`validate_poincare`]; empty means the polynomial passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return write!(f, "pass");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks that `p` is nonzero with constant term at least 1, supported in
/// even nonnegative degrees, palindromic, with positive unimodal
/// coefficients.
pub fn validate_poincare(p: &TPoly) -> ValidationReport {
    let mut v = Vec::new();
    let (Some(lo), Some(top)) = (p.min_degree(), p.max_degree()) else {
        return ValidationReport {
            violations: vec![Violation::Zero],
        };
    };
    if p.coeff(0) < BigInt::one() {
        v.push(Violation::ConstantTermBelowOne);
    }
    if lo < 0 {
        v.push(Violation::NegativeDegree(lo));
    }
    for (d, _) in p.iter() {
        if d % 2 != 0 {
            v.push(Violation::OddDegree(d));
        }
    }
    if lo >= 0 {
        if let Some(d) = (0..=top).find(|&d| p.coeff(d) != p.coeff(top - d)) {
            v.push(Violation::NotPalindromic(d));
        }
        let evens: Vec<BigInt> = (0..=top).step_by(2).map(|d| p.coeff(d)).collect();
        if let Some(j) = evens.iter().position(|c| !c.is_positive()) {
            v.push(Violation::NonPositiveCoefficient(2 * j as i32));
        }
        // once the sequence has dropped it may not rise again; report the valley
        let mut dropped = false;
        for j in 1..evens.len() {
            if evens[j] < evens[j - 1] {
                dropped = true;
            } else if dropped && evens[j] > evens[j - 1] {
                v.push(Violation::NotUnimodal(2 * (j as i32 - 1)));
                break;
            }
        }
    }
    ValidationReport { violations: v }
}

/// Jordan data of one ℓ-weight space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanProfile {
    /// Complex dimension of the component (half the top degree).
    pub n: u32,
    /// Jordan chain lengths, longest first.
    pub blocks: Vec<u32>,
    /// `graded[k] = dim F_k / F_{k-1}` for `k = 0..=n`.
    pub graded: Vec<u64>,
    /// `σ(0), ..., σ(n)`.
    pub sigma: Vec<u32>,
}

impl JordanProfile {
    /// Builds the profile with the given chains. Chains must have lengths in
    /// `1..=n+1` of the parity of `n+1`, and one must have length `n+1`.
    pub fn from_blocks(n: u32, mut blocks: Vec<u32>) -> Result<Self, JordanError> {
        let bad = |reason: String| JordanError::InconsistentProfile { reason };
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        if blocks.first() != Some(&(n + 1)) {
            return Err(bad(format!("longest chain must have length {}", n + 1)));
        }
        if let Some(b) = blocks.iter().find(|&&b| b == 0 || (b + n).is_multiple_of(2)) {
            return Err(bad(format!("chain length {b} has the wrong parity for n = {n}")));
        }
        if blocks.len() as u64 > MAX_MASS {
            return Err(JordanError::TooLarge);
        }
        let graded = (0..=n)
            .map(|k| blocks.iter().filter(|&&b| b > k).count() as u64)
            .collect();
        let sigma = (0..=n).map(|k| sigma(n, k)).collect::<Result<_, _>>()?;
        Ok(JordanProfile {
            n,
            blocks,
            graded,
            sigma,
        })
    }

    /// Dimension of the space: the total length of all chains.
    pub fn mass(&self) -> u64 {
        self.blocks.iter().map(|&b| u64::from(b)).sum()
    }

    pub fn to_doc(&self) -> JordanDoc {
        JordanDoc {
            n: self.n,
            blocks: self.blocks.clone(),
            graded: self.graded.clone(),
        }
    }
}

fn small(c: &BigInt) -> Result<u64, JordanError> {
    match c.to_u64() {
        Some(x) if x <= MAX_MASS => Ok(x),
        _ => Err(JordanError::TooLarge),
    }
}

/// Jordan profile encoded by a valid Poincaré polynomial.
pub fn decode(p: &TPoly) -> Result<JordanProfile, JordanError> {
    let report = validate_poincare(p);
    if !report.is_pass() {
        return Err(JordanError::NotAPoincarePolynomial { report });
    }
    if p.eval_at_one() > BigInt::from(MAX_MASS) {
        return Err(JordanError::TooLarge);
    }
    let top = p.max_degree().expect("validated polynomial is nonzero");
    let n = (top / 2) as u32;
    let b = |d: i64| -> BigInt { i32::try_from(d).map(|d| p.coeff(d)).unwrap_or_default() };
    let mut blocks = Vec::new();
    for l in (1..=n + 1).rev() {
        let d = i64::from(n) + i64::from(l) - 1;
        if d % 2 != 0 {
            continue;
        }
        let count = b(d) - b(d + 2);
        if count.is_negative() {
            return Err(JordanError::NegativeMultiplicity { length: l });
        }
        if !count.is_zero() {
            blocks.extend(std::iter::repeat_n(l, small(&count)? as usize));
        }
    }
    let profile = JordanProfile::from_blocks(n, blocks)?;
    // the filtration read directly off the coefficients
    for k in 0..=n {
        let direct = small(&p.coeff(2 * sigma(n, k)? as i32))?;
        if direct != profile.graded[k as usize] {
            return Err(JordanError::InconsistentProfile {
                reason: format!(
                    "graded dimension {k} is {direct}, chains give {}",
                    profile.graded[k as usize]
                ),
            });
        }
    }
    Ok(profile)
}

/// `Σ_{l ∈ blocks} t^{n-l+1} (1 + t^2 + ... + t^{2(l-1)})`.
pub fn encode(profile: &JordanProfile) -> Result<TPoly, JordanError> {
    let rebuilt = JordanProfile::from_blocks(profile.n, profile.blocks.clone())?;
    if &rebuilt != profile {
        return Err(JordanError::InconsistentProfile {
            reason: "graded dimensions or sigma disagree with the chains".into(),
        });
    }
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &l in &profile.blocks {
        *counts.entry(l).or_insert(0) += 1;
    }
    let mut p = TPoly::zero();
    for (l, c) in counts {
        let start = (profile.n + 1 - l) as i32;
        for j in 0..l as i32 {
            p.add_term(start + 2 * j, BigInt::from(c));
        }
    }
    Ok(p)
}

/// Decodes every coefficient of a character.
pub fn annotate_character(ch: &Character) -> Result<BTreeMap<Exponents, JordanProfile>, JordanError> {
    ch.iter()
        .map(|t| {
            decode(&t.coeff)
                .map(|p| (t.monomial.y().clone(), p))
                .map_err(|e| JordanError::AtMonomial {
                    monomial: t.monomial.to_string(),
                    source: Box::new(e),
                })
        })
        .collect()
}

/// Fills in the `jordan` field of every term of a document.
pub fn annotate_doc(doc: &mut CharacterDoc) -> Result<(), JordanError> {
    for t in &mut doc.terms {
        let profile = decode(&t.coeff.0).map_err(|e| JordanError::AtMonomial {
            monomial: t.monomial.clone(),
            source: Box::new(e),
        })?;
        t.jordan = Some(profile.to_doc());
    }
    Ok(())
}
