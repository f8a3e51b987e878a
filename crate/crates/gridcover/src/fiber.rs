//! Fibers of a polynomial along a direction.
//!
//! For a primitive direction `v`, the `v`-fibers of a polynomial are its
//! restrictions to the lines `u + Zv`; every nonzero fiber is a monomial
//! or a line polynomial, and the polynomial is the sum of its fibers. The
//! normal form of a fiber reads its coefficients along `v` starting at
//! the support point closest to minus infinity, producing a univariate
//! polynomial with nonzero constant and leading terms. Two fibers have the
//! same normal form exactly when they agree up to a monomial factor.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::geometry::Direction;
use crate::laurent::{ExpVec, LaurentPoly2};
use crate::unipoly::UniPoly;

/// Value of the linear functional `u . perp(v)`; constant exactly on each
/// line `u + Zv`, and zero on the line through the origin.
fn line_key(u: &ExpVec, v: &Direction) -> i128 {
    let perp = v.perp();
    u.x as i128 * perp.x as i128 + u.y as i128 * perp.y as i128
}

/// Signed position along `v`; strictly increasing along each line.
fn position_along(u: &ExpVec, v: &Direction) -> i128 {
    let w = v.vector();
    u.x as i128 * w.x as i128 + u.y as i128 * w.y as i128
}

/// Splits `f` into its nonzero `v`-fibers.
///
/// Returns `(base, fiber)` pairs ordered by the line key, where `base` is
/// the support point of the fiber that minimizes the position along `v`.
/// The fibers partition the terms of `f`: their sum reproduces `f`.
///
/// # Panics
///
/// Panics if `f` is zero.
pub fn fibers(f: &LaurentPoly2, v: Direction) -> Vec<(ExpVec, LaurentPoly2)> {
    assert!(!f.is_zero(), "zero polynomial has no fibers");
    let mut groups: BTreeMap<i128, Vec<(ExpVec, BigInt)>> = BTreeMap::new();
    for (e, c) in f.terms() {
        groups
            .entry(line_key(e, &v))
            .or_default()
            .push((*e, c.clone()));
    }
    groups
        .into_values()
        .map(|terms| {
            let base = *terms
                .iter()
                .map(|(e, _)| e)
                .min_by_key(|e| position_along(e, &v))
                .unwrap();
            (base, LaurentPoly2::from_terms(terms))
        })
        .collect()
}

/// Normal form of a single fiber: the proper polynomial `a_0 + a_1 t +
/// ... + a_n t^n` with `fiber = X^base * (a_0 + a_1 X^v + ...)`,
/// `a_0 != 0` and `a_n != 0`. The normal form of a monomial is its
/// coefficient.
///
/// # Panics
///
/// Panics if the fiber is zero or its support does not lie on a single
/// line in direction `v`.
pub fn normal_form(fiber: &LaurentPoly2, v: Direction) -> UniPoly {
    assert!(!fiber.is_zero(), "zero fiber has no normal form");
    let base = *fiber
        .support()
        .min_by_key(|e| position_along(e, &v))
        .unwrap();
    let w = v.vector();
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (e, c) in fiber.terms() {
        let delta = *e - base;
        let k = if w.x != 0 {
            delta.x / w.x
        } else {
            delta.y / w.y
        };
        assert!(
            k >= 0 && delta.x == k * w.x && delta.y == k * w.y,
            "fiber support is not on a single line in direction {v}"
        );
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

/// The normal forms of the fibers of `f` in an undirected direction,
/// with the fiber through the origin kept apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSet {
    /// Canonical undirected representative of the direction.
    pub direction: Direction,
    /// Normal forms of every nonzero fiber.
    pub all_forms: BTreeSet<UniPoly>,
    /// Normal forms of the fibers away from the origin line.
    pub off_origin_forms: BTreeSet<UniPoly>,
    /// Normal form of the fiber on the line through the origin; zero when
    /// that fiber is empty.
    pub origin_form: UniPoly,
}

/// Computes the fiber normal forms of `f` along the canonical undirected
/// representative of `v`.
///
/// # Panics
///
/// Panics if `f` is zero.
pub fn fiber_set(f: &LaurentPoly2, v: Direction) -> FiberSet {
    let direction = v.canonical_undirected();
    let mut origin_form = UniPoly::zero();
    let mut off_origin_forms = BTreeSet::new();
    for (base, fiber) in fibers(f, direction) {
        let form = normal_form(&fiber, direction);
        if line_key(&base, &direction) == 0 {
            origin_form = form;
        } else {
            off_origin_forms.insert(form);
        }
    }
    let mut all_forms = off_origin_forms.clone();
    if !origin_form.is_zero() {
        all_forms.insert(origin_form.clone());
    }
    FiberSet {
        direction,
        all_forms,
        off_origin_forms,
        origin_form,
    }
}
