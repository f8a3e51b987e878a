//! Line polynomial factors of a Laurent polynomial.
//!
//! A line polynomial is a non-monomial polynomial whose support lies on a
//! single line. A polynomial has a line polynomial factor in direction `v`
//! exactly when its `v`-fiber normal forms have a common factor, and the
//! only possible directions are those with outer edges in both
//! orientations. [`line_factors`] therefore scans the candidate
//! directions and reports, per direction, the greatest common factor of
//! the fiber normal forms.

use std::collections::BTreeSet;
use std::fmt;

use crate::fiber::{fiber_set, fibers, normal_form};
use crate::geometry::{candidate_line_directions, Direction};
use crate::laurent::{ExpVec, LaurentPoly2};
use crate::unipoly::{gcd_many, UniPoly};

/// One detected line factor: an undirected direction together with the
/// greatest common factor of the fiber normal forms in that direction
/// (primitive, positive leading coefficient, degree at least one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFactorEntry {
    pub direction: Direction,
    pub factor: UniPoly,
}

/// All line factor directions of a polynomial, sorted by canonical
/// direction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LineFactorReport {
    pub entries: Vec<LineFactorEntry>,
}

impl LineFactorReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn directions(&self) -> impl Iterator<Item = Direction> + '_ {
        self.entries.iter().map(|e| e.direction)
    }
}

impl fmt::Display for LineFactorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "none");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}: {}", e.direction, e.factor)?;
        }
        Ok(())
    }
}

/// Greatest common line factor of `f` in direction `v`, as the normal
/// form of the factor; `None` when the fiber normal forms are coprime.
///
/// # Panics
///
/// Panics if `f` is zero.
pub fn line_factor_in_direction(f: &LaurentPoly2, v: Direction) -> Option<UniPoly> {
    assert!(!f.is_zero(), "zero polynomial rejected");
    let forms: Vec<UniPoly> = fiber_set(f, v).all_forms.into_iter().collect();
    let g = gcd_many(&forms);
    if g.degree().unwrap() >= 1 {
        Some(g)
    } else {
        None
    }
}

/// Finds every direction in which `f` has a line polynomial factor,
/// with the greatest common factor per direction.
///
/// # Panics
///
/// Panics if `f` is zero.
pub fn line_factors(f: &LaurentPoly2) -> LineFactorReport {
    assert!(!f.is_zero(), "zero polynomial rejected");
    let entries = candidate_line_directions(f)
        .into_iter()
        .filter_map(|v| {
            line_factor_in_direction(f, v).map(|factor| LineFactorEntry {
                direction: v,
                factor,
            })
        })
        .collect();
    LineFactorReport { entries }
}

/// Trichotomy on the distinct directions of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectionClass {
    NoLineFactors,
    SingleDirection(Direction),
    MultipleDirections(BTreeSet<Direction>),
}

pub fn classify_directions(report: &LineFactorReport) -> DirectionClass {
    let dirs: BTreeSet<Direction> = report.directions().collect();
    match dirs.len() {
        0 => DirectionClass::NoLineFactors,
        1 => DirectionClass::SingleDirection(*dirs.iter().next().unwrap()),
        _ => DirectionClass::MultipleDirections(dirs),
    }
}

/// Re-expands a univariate polynomial as a line polynomial in direction
/// `v`, substituting `t = X^v`.
pub fn expand_line_poly(phi: &UniPoly, v: Direction) -> LaurentPoly2 {
    let w = v.vector();
    LaurentPoly2::from_terms(
        phi.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (ExpVec::new(w.x * k as i64, w.y * k as i64), c.clone())),
    )
}

/// Divides `f` by the line polynomial with normal form `phi` in direction
/// `v`, fiber by fiber. `phi` must be primitive; returns `None` when the
/// division is not exact.
///
/// # Panics
///
/// Panics if `f` is zero or `phi` is constant or zero.
pub fn divide_by_line_factor(
    f: &LaurentPoly2,
    phi: &UniPoly,
    v: Direction,
) -> Option<LaurentPoly2> {
    assert!(!f.is_zero(), "zero polynomial rejected");
    assert!(
        phi.degree().is_some_and(|d| d >= 1),
        "divisor must be a line polynomial"
    );
    let mut quotient = LaurentPoly2::zero();
    let w = v.vector();
    for (base, fib) in fibers(f, v) {
        let q = normal_form(&fib, v).try_div_exact(phi)?;
        let expanded = LaurentPoly2::from_terms(q.coeffs().iter().enumerate().map(|(k, c)| {
            (
                base + ExpVec::new(w.x * k as i64, w.y * k as i64),
                c.clone(),
            )
        }));
        quotient = &quotient + &expanded;
    }
    Some(quotient)
}
