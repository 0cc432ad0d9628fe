//! Sparse Laurent polynomials in `t` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial `Σ c_d t^d`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::monomial(0, 1)
    }

    /// `c · t^d`.
    pub fn monomial(d: i32, c: impl Into<BigInt>) -> Self {
        let mut p = TPoly::zero();
        p.add_term(d, c.into());
        p
    }

    /// `t^d`.
    pub fn t_pow(d: i32) -> Self {
        TPoly::monomial(d, 1)
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated
    /// degrees are summed.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = TPoly::zero();
        for (d, c) in pairs {
            p.add_term(d, c.into());
        }
        p
    }

    /// Dense coefficients `c_0, c_1, ...` starting at degree 0.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        TPoly::from_pairs(coeffs.iter().enumerate().map(|(d, c)| (d as i32, c.clone())))
    }

    pub fn add_term(&mut self, d: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `t^d` (zero when absent).
    pub fn coeff(&self, d: i32) -> BigInt {
        self.terms.get(&d).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, d: i32) -> Option<&BigInt> {
        self.terms.get(&d)
    }

    /// Nonzero terms in ascending degree.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `t^k`.
    pub fn shifted(&self, k: i32) -> TPoly {
        if k == 0 {
            return self.clone();
        }
        TPoly {
            terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Multiplies every coefficient by an integer.
    pub fn scaled(&self, c: &BigInt) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(&d, x)| (d, x * c)).collect(),
        }
    }

    /// `self += other · t^k`.
    pub fn add_shifted(&mut self, other: &TPoly, k: i32) {
        for (&d, c) in &other.terms {
            self.add_term(d + k, c.clone());
        }
    }

    /// `self += a · b · t^k`.
    pub fn add_product_shifted(&mut self, a: &TPoly, b: &TPoly, k: i32) {
        for (&da, ca) in &a.terms {
            for (&db, cb) in &b.terms {
                self.add_term(da + db + k, ca * cb);
            }
        }
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        for (&d, c) in &rhs.terms {
            self.add_term(d, -c);
        }
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        out.add_product_shifted(self, rhs, 0);
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }
}

impl fmt::Display for TPoly {
    /// Renders like `1+3t^2+3t^4+t^6`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in &self.terms {
            let abs = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let unit = abs.is_one();
            match d {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{abs}t")?,
                _ if unit => write!(f, "t^{d}")?,
                _ => write!(f, "{abs}t^{d}")?,
            }
        }
        Ok(())
    }
}
