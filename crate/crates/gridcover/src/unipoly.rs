//! Univariate integer polynomials.
//!
//! Coefficients are `BigInt`, stored constant term first with a nonzero
//! leading coefficient; the zero polynomial is the empty sequence. The gcd
//! is computed with a fraction-free (primitive pseudo-remainder) sequence,
//! so no rational arithmetic is ever needed, and is normalized to content
//! one with a positive leading coefficient so that equality of factors is
//! directly testable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A univariate integer polynomial in the variable `t`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// Builds a polynomial from coefficients, constant term first.
    /// Trailing zeros are trimmed.
    pub fn from_coeffs<C: Into<BigInt>, I: IntoIterator<Item = C>>(coeffs: I) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content removed and leading coefficient made positive.
    /// The zero polynomial maps to itself.
    pub fn primitive_positive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut divisor = self.content();
        if self.leading().unwrap().is_negative() {
            divisor = -divisor;
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c / &divisor).collect(),
        }
    }

    /// Exact long division over the integers: `Some(q)` with
    /// `q * divisor == self`, or `None` if the division is not exact in
    /// `Z[t]`. For a primitive divisor this coincides with divisibility
    /// over the rationals.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero.
    pub fn try_div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let deg_d = divisor.degree().unwrap();
        let deg_n = self.degree().unwrap();
        if deg_n < deg_d {
            return None;
        }
        let lc_d = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); deg_n - deg_d + 1];
        while let Some(deg_r) = rem.degree() {
            if deg_r < deg_d {
                return None;
            }
            let (q, r) = rem.leading().unwrap().div_rem(&lc_d);
            if !r.is_zero() {
                return None;
            }
            let k = deg_r - deg_d;
            rem = &rem - &divisor.shift_up(k).scale(&q);
            quot[k] = q;
        }
        Some(UniPoly::from_coeffs(quot))
    }

    /// Evaluation at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)))
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

/// Pseudo-remainder of `a` by `b`: the remainder of `lc(b)^k * a` divided
/// by `b`, computed entirely in `Z[t]`. Zero iff `b` divides `a` over the
/// rationals.
fn pseudo_rem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let deg_b = b.degree().expect("pseudo_rem by zero");
    let lc_b = b.leading().unwrap().clone();
    let mut r = a.clone();
    while let Some(deg_r) = r.degree() {
        if deg_r < deg_b {
            break;
        }
        let lc_r = r.leading().unwrap().clone();
        r = &r.scale(&lc_b) - &b.shift_up(deg_r - deg_b).scale(&lc_r);
    }
    r
}

/// Greatest common divisor over the rationals, returned as a primitive
/// integer polynomial with positive leading coefficient. `gcd(p, 0)` is
/// the normalized `p`.
///
/// # Panics
///
/// Panics if both arguments are zero.
pub fn gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    assert!(!(p.is_zero() && q.is_zero()), "gcd of two zero polynomials");
    let mut a = p.primitive_positive();
    let mut b = q.primitive_positive();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_positive();
        a = b;
        b = r;
    }
    a.primitive_positive()
}

/// Folded gcd of a list; the constant 1 means no common factor.
///
/// # Panics
///
/// Panics if the list is empty or every element is zero.
pub fn gcd_many(ps: &[UniPoly]) -> UniPoly {
    assert!(!ps.is_empty(), "gcd of an empty list");
    let mut acc = UniPoly::zero();
    for p in ps {
        if p.is_zero() {
            continue;
        }
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    assert!(!acc.is_zero(), "gcd of an all-zero list");
    acc
}

/// The all-ones polynomial `1 + t + ... + t^(n-1)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn all_ones(n: usize) -> UniPoly {
    assert!(n >= 1, "all_ones requires n >= 1");
    UniPoly::from_coeffs(vec![BigInt::one(); n])
}

fn divisors(n: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The `d`-th cyclotomic polynomial, computed by exact division of
/// `t^d - 1` by the cyclotomic polynomials of the proper divisors of `d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn cyclotomic(d: usize) -> UniPoly {
    assert!(d >= 1, "cyclotomic requires d >= 1");
    if d == 1 {
        return UniPoly::from_coeffs(vec![-1, 1]);
    }
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[0] = -BigInt::one();
    coeffs[d] = BigInt::one();
    let mut result = UniPoly::from_coeffs(coeffs);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        result = result
            .try_div_exact(&cyclotomic(e))
            .expect("cyclotomic division is exact");
    }
    result
}

/// Whether `p` divides `q` over the rationals.
///
/// # Panics
///
/// Panics if `p` is zero.
pub fn divides(p: &UniPoly, q: &UniPoly) -> bool {
    assert!(!p.is_zero(), "divisibility by the zero polynomial");
    if q.is_zero() {
        return true;
    }
    if q.degree() < p.degree() {
        return false;
    }
    pseudo_rem(q, p).is_zero()
}

impl fmt::Display for UniPoly {
    /// Ascending powers of `t`, e.g. `1+t^2+t^3` or `-1+t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if !a.is_one() || k == 0 {
                write!(f, "{a}")?;
            }
            if k == 1 {
                write!(f, "t")?;
            } else if k > 1 {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn gcd_of_all_ones_four_and_six() {
        // all_ones(4) = (1+t)(1+t^2), all_ones(6) = (1+t)(1+t^2+t^4)
        let g = gcd(&all_ones(4), &all_ones(6));
        assert_eq!(g, up(&[1, 1]));
    }

    #[test]
    fn gcd_with_self_normalizes() {
        let p = up(&[-2, 0, -4]);
        assert_eq!(gcd(&p, &p), up(&[1, 0, 2]));
    }

    #[test]
    fn gcd_unit_versus_nonconstant() {
        for k in [-3i64, 0, 2, 5] {
            if k == 1 {
                continue;
            }
            let c = up(&[1 - k]);
            if c.is_zero() {
                continue;
            }
            assert_eq!(gcd(&up(&[1, 1]), &c), UniPoly::one());
        }
    }

    #[test]
    fn gcd_with_zero() {
        let p = up(&[2, 4]);
        assert_eq!(gcd(&p, &UniPoly::zero()), up(&[1, 2]));
        assert_eq!(gcd(&UniPoly::zero(), &p), up(&[1, 2]));
    }

    #[test]
    #[should_panic(expected = "gcd of two zero")]
    fn gcd_rejects_double_zero() {
        gcd(&UniPoly::zero(), &UniPoly::zero());
    }

    #[test]
    fn gcd_many_examples() {
        // a nonzero constant forces gcd 1
        let set = [up(&[3]), up(&[1, 1]), up(&[1, 0, 1, 1])];
        assert_eq!(gcd_many(&set), UniPoly::one());

        assert_eq!(gcd_many(&[all_ones(4), all_ones(8)]), all_ones(4));
        assert_eq!(gcd_many(&[up(&[-3, -6])]), up(&[1, 2]));
    }

    #[test]
    fn all_ones_small() {
        assert_eq!(all_ones(1), UniPoly::one());
        assert_eq!(all_ones(3), up(&[1, 1, 1]));
        assert_eq!(all_ones(5), up(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), up(&[-1, 1]));
        assert_eq!(cyclotomic(2), up(&[1, 1]));
        assert_eq!(cyclotomic(3), up(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), up(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), up(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), up(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&up(&[1, 1]), &all_ones(4)));
        assert!(!divides(&up(&[1, 1]), &all_ones(3)));
        assert!(divides(&up(&[1, 1]), &UniPoly::zero()));
        // non-primitive divisor, rational quotient
        assert!(divides(&up(&[2, 2]), &up(&[1, 1])));
    }

    #[test]
    fn exact_division() {
        let p = &up(&[1, 1]) * &up(&[1, 0, 1]);
        assert_eq!(p.try_div_exact(&up(&[1, 1])), Some(up(&[1, 0, 1])));
        assert_eq!(up(&[1, 1, 1]).try_div_exact(&up(&[1, 1])), None);
    }

    fn arb_unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(UniPoly::from_coeffs)
    }

    /// Nonzero by construction: the generated leading coefficient never
    /// vanishes, so the degree lands in `[min_deg, max_deg]`.
    fn arb_nonzero_unipoly(min_deg: usize, max_deg: usize) -> impl Strategy<Value = UniPoly> {
        (
            proptest::collection::vec(-6i64..=6, min_deg..=max_deg),
            1i64..=6,
            proptest::bool::ANY,
        )
            .prop_map(|(mut coeffs, lead, negative)| {
                coeffs.push(if negative { -lead } else { lead });
                UniPoly::from_coeffs(coeffs)
            })
    }

    proptest! {
        #[test]
        fn gcd_of_all_ones_matches_index_gcd(m in 1usize..=60, n in 1usize..=60) {
            let expected = all_ones(num_integer::gcd(m, n));
            prop_assert_eq!(gcd(&all_ones(m), &all_ones(n)), expected);
        }

        #[test]
        fn all_ones_common_factor_iff_index_gcd(m in 1usize..=40, n in 1usize..=40) {
            let g = gcd(&all_ones(m), &all_ones(n));
            let expect_common = num_integer::gcd(m, n) > 1;
            prop_assert_eq!(g.degree().unwrap() >= 1, expect_common);
        }

        #[test]
        fn gcd_is_primitive_positive_and_divides_both(p in arb_unipoly(8), q in arb_unipoly(8)) {
            prop_assume!(!p.is_zero() || !q.is_zero());
            let g = gcd(&p, &q);
            prop_assert!(g.content().is_one());
            prop_assert!(g.leading().unwrap().is_positive());
            prop_assert!(divides(&g, &p));
            prop_assert!(divides(&g, &q));
        }

        #[test]
        fn gcd_detects_planted_common_factor(
            h in arb_nonzero_unipoly(1, 3),
            p in arb_nonzero_unipoly(0, 4),
            q in arb_nonzero_unipoly(0, 4),
        ) {
            let g = gcd(&(&h * &p), &(&h * &q));
            prop_assert!(divides(&h.primitive_positive(), &g));
        }
    }

    #[test]
    fn cyclotomic_product_reconstructs_t_pow_minus_one() {
        for d in 1usize..=30 {
            let mut prod = UniPoly::one();
            for e in divisors(d) {
                prod = &prod * &cyclotomic(e);
            }
            let mut coeffs = vec![BigInt::zero(); d + 1];
            coeffs[0] = -BigInt::one();
            coeffs[d] = BigInt::one();
            assert_eq!(prod, UniPoly::from_coeffs(coeffs), "d = {d}");
        }
    }

    #[test]
    fn cyclotomic_divides_t_pow_minus_one() {
        for d in 1usize..=30 {
            let mut coeffs = vec![BigInt::zero(); d + 1];
            coeffs[0] = -BigInt::one();
            coeffs[d] = BigInt::one();
            assert!(divides(&cyclotomic(d), &UniPoly::from_coeffs(coeffs)));
        }
    }
}
