//! Independent brute-force oracles for the property and acceptance
//! tests.
//!
//! These deliberately avoid the fiber-gcd criterion so that agreement
//! with the production code is evidence rather than circularity:
//! [`brute_line_factor`] enumerates the integer polynomial divisors of a
//! single fiber normal form (any line factor must divide every fiber, in
//! particular that one) and tests each candidate by direct exact division
//! in the Laurent ring; [`brute_enumerate`] filters every cell assignment
//! of a fundamental domain with no pruning. Completeness over speed:
//! these run only in the test suite.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::covering::CoveringProblem;
use crate::fiber::{fibers, normal_form};
use crate::geometry::Direction;
use crate::laurent::LaurentPoly2;
use crate::line_factors::expand_line_poly;
use crate::torus::{verify_covering, CoverCheck, PeriodLattice, TorusConfig};
use crate::unipoly::{divides, UniPoly};
use crate::Error;

/// Cell cap for the unpruned enumeration.
pub const BRUTE_CAP_CELLS: u64 = 16;

/// Positive divisors of `|n|` for nonzero `n`.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n: i64 = n
        .abs()
        .try_into()
        .expect("oracle expects small coefficients");
    assert!(n != 0);
    let mut divs = Vec::new();
    let mut i = 1i64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(BigInt::from(i));
            if i != n / i {
                divs.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    divs
}

/// Lagrange interpolation through `(xs[i], ys[i])` when the result has
/// integer coefficients; `None` otherwise.
fn interpolate_integer(xs: &[i64], ys: &[BigInt]) -> Option<UniPoly> {
    // P = sum ys[i] * L_i / w_i with L_i = prod_{j != i} (t - xs[j]) and
    // w_i = prod_{j != i} (xs[i] - xs[j]); clear denominators through the
    // product W of all w_i and check divisibility coefficient-wise.
    let n = xs.len();
    let mut numerators = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = UniPoly::one();
        let mut w = BigInt::from(1);
        for j in 0..n {
            if i == j {
                continue;
            }
            l = &l * &UniPoly::from_coeffs(vec![BigInt::from(-xs[j]), BigInt::from(1)]);
            w *= BigInt::from(xs[i] - xs[j]);
        }
        numerators.push(l);
        weights.push(w);
    }
    let big_w: BigInt = weights.iter().product();
    let mut sum = UniPoly::zero();
    for i in 0..n {
        let scale = &ys[i] * (&big_w / &weights[i]);
        sum = &sum + &numerators[i].scale(&scale);
    }
    let coeffs: Option<Vec<BigInt>> = sum
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = num_integer::Integer::div_rem(c, &big_w);
            if r.is_zero() {
                Some(q)
            } else {
                None
            }
        })
        .collect();
    coeffs.map(UniPoly::from_coeffs)
}

/// Evaluation points for a degree-`k` divisor search: the `k + 1`
/// smallest-magnitude integers that are not roots of `psi`.
fn sample_points(psi: &UniPoly, k: usize) -> Vec<i64> {
    let mut xs = Vec::with_capacity(k + 1);
    let mut magnitude = 0i64;
    while xs.len() < k + 1 {
        let candidates: &[i64] = if magnitude == 0 {
            &[0]
        } else {
            &[magnitude, -magnitude]
        };
        for &x in candidates {
            if xs.len() < k + 1 && !psi.eval(&BigInt::from(x)).is_zero() {
                xs.push(x);
            }
        }
        magnitude += 1;
    }
    xs
}

/// All primitive positive divisors of `psi` of degree exactly `k`,
/// found by divisor interpolation: a degree-`k` divisor is pinned by its
/// values at `k + 1` points, and each value divides the value of `psi`
/// there.
fn divisors_of_degree(psi: &UniPoly, k: usize) -> BTreeSet<UniPoly> {
    let xs = sample_points(psi, k);
    let value_choices: Vec<Vec<BigInt>> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let divs = positive_divisors(&psi.eval(&BigInt::from(*x)));
            if i == 0 {
                // candidates are normalized up to sign afterwards, so the
                // first value can be fixed positive
                divs
            } else {
                divs.iter().flat_map(|d| [d.clone(), -d]).collect()
            }
        })
        .collect();

    let mut found = BTreeSet::new();
    let mut ys: Vec<BigInt> = vec![BigInt::zero(); xs.len()];
    let mut idx = vec![0usize; xs.len()];
    'outer: loop {
        for (slot, &i) in idx.iter().enumerate() {
            ys[slot] = value_choices[slot][i].clone();
        }
        if let Some(cand) = interpolate_integer(&xs, &ys) {
            if cand.degree() == Some(k) && divides(&cand, psi) {
                found.insert(cand.primitive_positive());
            }
        }
        // odometer increment
        for slot in 0..xs.len() {
            idx[slot] += 1;
            if idx[slot] < value_choices[slot].len() {
                continue 'outer;
            }
            idx[slot] = 0;
        }
        break;
    }
    found
}

/// All primitive positive nonunit divisors of `psi` with degree in
/// `[1, max_degree]`. Divisors above half the degree are recovered as
/// complements of low-degree ones, so the interpolation search never
/// exceeds degree `deg(psi) / 2`.
fn nonunit_divisors(psi: &UniPoly, max_degree: usize) -> Vec<UniPoly> {
    let prim = psi.primitive_positive();
    let deg = prim.degree().expect("nonzero fiber");
    let mut all: BTreeSet<UniPoly> = BTreeSet::new();
    if deg >= 1 {
        all.insert(prim.clone());
    }
    let mut low: BTreeSet<UniPoly> = BTreeSet::new();
    for k in 1..=deg / 2 {
        low.extend(divisors_of_degree(&prim, k));
    }
    for h in &low {
        let cofactor = prim
            .try_div_exact(h)
            .expect("divisor search found a non-divisor")
            .primitive_positive();
        if cofactor.degree().is_some_and(|d| d >= 1) {
            all.insert(cofactor);
        }
    }
    all.extend(low);
    all.into_iter()
        .filter(|h| h.degree().is_some_and(|d| d >= 1 && d <= max_degree))
        .collect()
}

/// Trial-division oracle for line polynomial factors: picks the fiber of
/// `f` with the smallest normal form, enumerates its divisors up to
/// `degree_bound`, and returns a maximal-degree divisor whose expansion
/// along `v` exactly divides `f` in the Laurent ring.
///
/// # Panics
///
/// Panics if `f` is zero or `degree_bound` is zero.
pub fn brute_line_factor(f: &LaurentPoly2, v: Direction, degree_bound: usize) -> Option<UniPoly> {
    assert!(!f.is_zero(), "zero polynomial rejected");
    assert!(degree_bound >= 1, "degree bound must be positive");
    let v = v.canonical_undirected();
    let forms: Vec<UniPoly> = fibers(f, v)
        .iter()
        .map(|(_, fib)| normal_form(fib, v))
        .collect();
    let psi = forms
        .iter()
        .min_by_key(|p| p.degree())
        .expect("nonzero polynomial has a fiber");
    if psi.degree() == Some(0) {
        return None;
    }
    let mut candidates = nonunit_divisors(psi, degree_bound);
    candidates.sort_by_key(|c| std::cmp::Reverse(c.degree()));
    candidates
        .into_iter()
        .find(|cand| f.div_exact(&expand_line_poly(cand, v)).is_some())
}

/// Unpruned covering enumeration: filters all `2^(p q)` assignments by
/// the covering condition.
pub fn brute_enumerate(
    problem: &CoveringProblem,
    lattice: PeriodLattice,
) -> Result<Vec<TorusConfig>, Error> {
    let n = lattice.area() as u64;
    if n > BRUTE_CAP_CELLS {
        return Err(Error::CapExceeded {
            requested: n,
            cap: BRUTE_CAP_CELLS,
        });
    }
    let n = n as usize;
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let cells: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        let config = TorusConfig::new(lattice, cells);
        if verify_covering(&config, problem) == CoverCheck::Ok {
            found.push(config);
        }
    }
    Ok(found)
}
