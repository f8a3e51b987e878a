//! Two-variable Laurent polynomials with exact integer coefficients.
//!
//! A polynomial is a finitely supported map from exponent vectors in `Z^2`
//! to nonzero `BigInt` coefficients. The zero polynomial is the empty map.
//! Terms are kept in lexicographic order on `(x, y)`, which makes display,
//! hashing of the term list and test diffs deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An exponent vector `(x, y)` of a Laurent monomial.
///
/// The derived ordering is lexicographic on `(x, y)`; it is the canonical
/// term order everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec {
    pub x: i64,
    pub y: i64,
}

impl ExpVec {
    pub const fn new(x: i64, y: i64) -> Self {
        ExpVec { x, y }
    }

    pub const fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    fn checked_add(self, other: ExpVec) -> ExpVec {
        ExpVec {
            x: self.x.checked_add(other.x).expect("exponent overflow"),
            y: self.y.checked_add(other.y).expect("exponent overflow"),
        }
    }
}

impl Neg for ExpVec {
    type Output = ExpVec;
    fn neg(self) -> ExpVec {
        ExpVec::new(-self.x, -self.y)
    }
}

impl Add for ExpVec {
    type Output = ExpVec;
    fn add(self, other: ExpVec) -> ExpVec {
        self.checked_add(other)
    }
}

impl Sub for ExpVec {
    type Output = ExpVec;
    fn sub(self, other: ExpVec) -> ExpVec {
        ExpVec::new(self.x - other.x, self.y - other.y)
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A finite subset of `Z^2`, used as a covering neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    points: BTreeSet<ExpVec>,
}

impl Shape {
    pub fn from_points<I: IntoIterator<Item = ExpVec>>(points: I) -> Self {
        Shape {
            points: points.into_iter().collect(),
        }
    }

    pub fn contains(&self, p: &ExpVec) -> bool {
        self.points.contains(p)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExpVec> {
        self.points.iter()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.points {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// A Laurent polynomial in two variables with `BigInt` coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        LaurentPoly2::monomial(ExpVec::new(0, 0), c)
    }

    pub fn monomial<C: Into<BigInt>>(exp: ExpVec, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly2 { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zero coefficients.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (ExpVec, C)>,
    {
        let mut map: BTreeMap<ExpVec, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        LaurentPoly2 { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms in the support.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at the given exponent (zero if absent).
    pub fn coeff(&self, e: &ExpVec) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic order on `(x, y)`.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExpVec> {
        self.terms.keys()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by the monomial `X^shift`, translating the support.
    pub fn mul_monomial(&self, shift: ExpVec) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.checked_add(shift), c.clone()))
            .collect();
        LaurentPoly2 { terms }
    }

    /// Componentwise minimum of the support exponents. `None` for zero.
    pub fn min_exponents(&self) -> Option<ExpVec> {
        if self.is_zero() {
            return None;
        }
        let x = self.terms.keys().map(|e| e.x).min().unwrap();
        let y = self.terms.keys().map(|e| e.y).min().unwrap();
        Some(ExpVec::new(x, y))
    }

    /// Exact division in the Laurent ring over the integers.
    ///
    /// Returns `Some(q)` with `q * divisor == self` when the division is
    /// exact, `None` otherwise. Both operands are monomial-normalized to
    /// proper polynomials first; the quotient of proper polynomials is
    /// computed by cancelling lexicographic leading terms.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero.
    pub fn div_exact(&self, divisor: &LaurentPoly2) -> Option<LaurentPoly2> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly2::zero());
        }
        let f_min = self.min_exponents().unwrap();
        let g_min = divisor.min_exponents().unwrap();
        let mut rem = self.mul_monomial(-f_min);
        let g = divisor.mul_monomial(-g_min);
        let (g_lead, g_lc) = g.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;

        let mut quot = LaurentPoly2::zero();
        while !rem.is_zero() {
            let (r_lead, r_lc) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (*e, c.clone())
            };
            let q_exp = r_lead - g_lead;
            if q_exp.x < 0 || q_exp.y < 0 {
                return None;
            }
            let (q_c, q_r) = num_integer::Integer::div_rem(&r_lc, &g_lc);
            if !q_r.is_zero() {
                return None;
            }
            let q_term = LaurentPoly2::monomial(q_exp, q_c);
            rem = &rem - &(&q_term * &g);
            quot = &quot + &q_term;
        }
        Some(quot.mul_monomial(f_min - g_min))
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly2 { terms }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly2 { terms }
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly2 { terms }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut terms: BTreeMap<ExpVec, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.checked_add(*e2);
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly2 { terms }
    }
}

/// The characteristic polynomial `f_D = sum over u in D of X^(-u)`.
///
/// Convolving it with a binary configuration counts, at each cell, the
/// ones inside the translated neighborhood.
///
/// # Panics
///
/// Panics if the shape is empty.
pub fn char_poly(shape: &Shape) -> LaurentPoly2 {
    assert!(!shape.is_empty(), "empty neighborhood shape");
    LaurentPoly2::from_terms(shape.iter().map(|u| (-*u, BigInt::one())))
}

fn write_term(f: &mut fmt::Formatter<'_>, e: &ExpVec, abs_c: &BigInt) -> fmt::Result {
    let has_vars = !e.is_zero();
    if !abs_c.is_one() || !has_vars {
        write!(f, "{abs_c}")?;
    }
    let mut need_sep = false;
    if e.x != 0 {
        if e.x == 1 {
            write!(f, "x")?;
        } else {
            write!(f, "x^{}", e.x)?;
        }
        need_sep = true;
    }
    if e.y != 0 {
        if need_sep {
            write!(f, "*")?;
        }
        if e.y == 1 {
            write!(f, "y")?;
        } else {
            write!(f, "y^{}", e.y)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly2 {
    /// Canonical text form: terms in lexicographic order on `(x, y)`,
    /// joined with ` + ` / ` - `. Round-trips through [`crate::parse_poly`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, e, &c.abs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(terms.iter().map(|&(x, y, c)| (ExpVec::new(x, y), c)))
}
