//! Exact sparse polynomials in `x1, x2, ...` with big-integer coefficients.
//!
//! Monomials are ordered by the inverse lexicographic order: exponent
//! vectors are compared starting from the highest-indexed variable. Term
//! maps are stored in that order, and rendering lists terms from largest
//! to smallest.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// An exponent vector `x1^a1 * x2^a2 * ...` with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial { exponents }
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut exponents = vec![0; i];
        exponents[i - 1] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_i` (1-based); zero past the stored length.
    pub fn exponent(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.exponents.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Number of variables up to the last one with nonzero exponent.
    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exponents.len().max(other.exponents.len());
        let exponents = (1..=len).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Monomial::new(exponents)
    }

    /// The monomial with the exponents of `x_j` and `x_{j+1}` exchanged.
    pub fn swap(&self, j: usize) -> Monomial {
        let mut exponents = self.padded(j + 1);
        exponents.swap(j - 1, j);
        Monomial::new(exponents)
    }

    fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.exponents.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.padded(i);
        v[i - 1] = e;
        Monomial::new(v)
    }
}

/// `a <_invlex b`: the exponents agree above some index `i` and `a_i < b_i`.
pub fn invlex_less(a: &Monomial, b: &Monomial) -> bool {
    a.cmp(b) == Ordering::Less
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.exponents.len().max(other.exponents.len());
        for i in (1..=len).rev() {
            match self.exponent(i).cmp(&other.exponent(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", idx + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial stored as a map from monomials to nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn var(i: usize) -> Self {
        Self::from_monomial(Monomial::var(i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, BigInt::one())
    }

    pub fn term(m: Monomial, coeff: BigInt) -> Self {
        let mut p = SparsePolynomial::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = SparsePolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing invlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &BigInt) -> SparsePolynomial {
        if c.is_zero() {
            return SparsePolynomial::zero();
        }
        SparsePolynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePolynomial {
        SparsePolynomial { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    /// `s_j . f`: exchange `x_j` and `x_{j+1}`.
    pub fn swap_vars(&self, j: usize) -> SparsePolynomial {
        assert!(j >= 1, "variables are 1-based");
        SparsePolynomial::from_terms(self.terms.iter().map(|(m, c)| (m.swap(j), c.clone())))
    }

    /// `(f - s_j f) / (x_j - x_{j+1})`, computed monomial by monomial.
    ///
    /// For `x_j^p x_{j+1}^q` with `p > q` the quotient is
    /// `x_j^q x_{j+1}^q * sum_{t=0}^{p-q-1} x_j^{p-q-1-t} x_{j+1}^t`; the case
    /// `p < q` is the negation of the swapped one and `p == q` gives zero.
    pub fn divided_difference(&self, j: usize) -> SparsePolynomial {
        assert!(j >= 1, "divided differences are indexed from 1");
        let mut out = SparsePolynomial::zero();
        for (m, c) in &self.terms {
            let p = m.exponent(j);
            let q = m.exponent(j + 1);
            let (lo, hi, coeff) = match p.cmp(&q) {
                Ordering::Equal => continue,
                Ordering::Greater => (q, p, c.clone()),
                Ordering::Less => (p, q, -c),
            };
            let gap = hi - lo;
            for t in 0..gap {
                let term = m.with_exponent(j, lo + gap - 1 - t).with_exponent(j + 1, lo + t);
                out.add_term(term, coeff.clone());
            }
        }
        out
    }

    /// The Demazure operator `f -> d_i(x_i f)`.
    pub fn demazure(&self, i: usize) -> SparsePolynomial {
        self.mul_monomial(&Monomial::var(i)).divided_difference(i)
    }

    /// Evaluation at `x_1 = x_2 = ... = 1`.
    pub fn principal_specialization(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Every nonzero coefficient equals one.
    pub fn is_zero_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    pub fn max_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().max()
    }

    /// Largest variable index occurring in any term.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::num_vars).max().unwrap_or(0)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm { exponents: m.exponents().to_vec(), coeff: c.to_string() })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self, ParseError> {
        let mut p = SparsePolynomial::zero();
        for t in terms {
            let c = t
                .coeff
                .parse::<BigInt>()
                .map_err(|_| ParseError::new(&t.coeff, "coefficient is not a decimal integer"))?;
            p.add_term(Monomial::new(t.exponents.clone()), c);
        }
        Ok(p)
    }
}

/// One entry of the polynomial JSON serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

impl Serialize for SparsePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        SparsePolynomial::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the rendering produced by `Display`, e.g. `x1*x2^2 - 3*x3 + 1`.
impl FromStr for SparsePolynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new(s, "empty polynomial"));
        }
        let mut out = SparsePolynomial::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let token = &body[..end];
            rest = &body[end..];
            if token.is_empty() {
                return Err(ParseError::new(s, "dangling sign"));
            }
            let mut coeff = BigInt::from(sign);
            let mut mono = Monomial::one();
            for factor in token.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, exp) = match var.split_once('^') {
                        Some((i, e)) => (i, e),
                        None => (var, "1"),
                    };
                    let idx: usize = idx
                        .parse()
                        .ok()
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| ParseError::new(factor, "bad variable index"))?;
                    let exp: u32 = exp.parse().map_err(|_| ParseError::new(factor, "bad exponent"))?;
                    let mut v = vec![0; idx];
                    v[idx - 1] = exp;
                    mono = mono.mul(&Monomial::new(v));
                } else {
                    let c: BigInt = factor.parse().map_err(|_| ParseError::new(factor, "bad coefficient"))?;
                    coeff *= c;
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(mut self, rhs: SparsePolynomial) -> SparsePolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &SparsePolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        SparsePolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self * &rhs
    }
}
