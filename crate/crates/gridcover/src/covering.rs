//! Covering problems on the grid and their forced-periodicity analysis.
//!
//! A covering problem is a finite neighborhood `D` together with covering
//! constants `b` and `a`. Every `(D,b,a)`-covering is periodized by
//! `g = f_D - (b - a)`, so the line factor structure of `g` constrains
//! every covering at once: no line factors force two-periodicity, factors
//! in a single direction force periodicity in that direction. The
//! verdicts are universally quantified over the covering set and hold
//! vacuously when no covering exists.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::fiber::fiber_set;
use crate::geometry::{is_convex, outer_edge_directions, Direction};
use crate::laurent::{char_poly, ExpVec, LaurentPoly2, Shape};
use crate::line_factors::{
    classify_directions, line_factors, DirectionClass, LineFactorEntry, LineFactorReport,
};
use crate::unipoly::{all_ones, gcd, UniPoly};
use crate::Error;

/// The three translation invariant grids with named neighborhoods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Square,
    King,
    Triangular,
}

impl GridKind {
    pub fn name(&self) -> &'static str {
        match self {
            GridKind::Square => "square",
            GridKind::King => "king",
            GridKind::Triangular => "triangular",
        }
    }

    /// Unit steps of the grid graph.
    pub fn steps(&self) -> &'static [(i64, i64)] {
        match self {
            GridKind::Square => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
            GridKind::King => &[
                (1, 0),
                (-1, 0),
                (0, 1),
                (0, -1),
                (1, 1),
                (1, -1),
                (-1, 1),
                (-1, -1),
            ],
            GridKind::Triangular => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)],
        }
    }
}

/// Ball of the graph metric, by breadth-first expansion of the step set.
pub fn ball_by_bfs(steps: &[(i64, i64)], r: u32) -> Shape {
    let mut reached: BTreeSet<ExpVec> = BTreeSet::new();
    let mut frontier = vec![ExpVec::new(0, 0)];
    reached.insert(ExpVec::new(0, 0));
    for _ in 0..r {
        let mut next = Vec::new();
        for p in frontier {
            for &(dx, dy) in steps {
                let q = ExpVec::new(p.x + dx, p.y + dy);
                if reached.insert(q) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    Shape::from_points(reached)
}

/// The closed `r`-ball of the origin in the given grid.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn grid_ball(kind: GridKind, r: u32) -> Shape {
    assert!(r >= 1, "neighborhood radius must be at least 1");
    let r_i = r as i64;
    match kind {
        GridKind::Square => Shape::from_points(
            (-r_i..=r_i)
                .flat_map(|x| (-r_i..=r_i).map(move |y| ExpVec::new(x, y)))
                .filter(|p| p.x.abs() + p.y.abs() <= r_i),
        ),
        GridKind::King => Shape::from_points(
            (-r_i..=r_i).flat_map(|x| (-r_i..=r_i).map(move |y| ExpVec::new(x, y))),
        ),
        GridKind::Triangular => ball_by_bfs(kind.steps(), r),
    }
}

/// A neighborhood given either as a named grid ball or an explicit shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeighborhoodSpec {
    Grid { kind: GridKind, radius: u32 },
    Explicit(Shape),
}

impl NeighborhoodSpec {
    /// Resolves to the concrete point set.
    ///
    /// # Panics
    ///
    /// Panics on radius zero or an empty explicit shape.
    pub fn shape(&self) -> Shape {
        match self {
            NeighborhoodSpec::Grid { kind, radius } => grid_ball(*kind, *radius),
            NeighborhoodSpec::Explicit(shape) => {
                assert!(!shape.is_empty(), "empty neighborhood shape");
                shape.clone()
            }
        }
    }
}

/// A `(D, b, a)` covering problem: each cell of a covering must see
/// exactly `b` ones in its neighborhood if it is a one, `a` if it is a
/// zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringProblem {
    shape: Shape,
    b: u32,
    a: u32,
}

impl CoveringProblem {
    /// A neighborhood can never contain more ones than cells, so both
    /// constants are required to be at most `|D|`.
    pub fn new(shape: Shape, b: u32, a: u32) -> Result<Self, Error> {
        assert!(!shape.is_empty(), "empty neighborhood shape");
        let size = shape.len();
        if b as usize > size || a as usize > size {
            return Err(Error::InvalidConstants { b, a, size });
        }
        Ok(CoveringProblem { shape, b, a })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    /// `b - a`, the constant subtracted from the characteristic
    /// polynomial.
    pub fn delta(&self) -> i64 {
        self.b as i64 - self.a as i64
    }
}

/// The periodizer `g = f_D - (b - a)` of every `(D,b,a)`-covering.
pub fn periodizer(p: &CoveringProblem) -> LaurentPoly2 {
    let f_d = char_poly(&p.shape);
    &f_d - &LaurentPoly2::constant(BigInt::from(p.delta()))
}

/// Forced-periodicity verdict for every covering of a problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Every covering is two-periodic.
    AllTwoPeriodic,
    /// Every covering is periodic in the given direction.
    AllPeriodicInDirection(Direction),
    /// The analysis does not force periodicity.
    Inconclusive,
}

/// Verdict with the supporting line factor evidence and the analyzed
/// periodizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: LineFactorReport,
    pub periodizer: LaurentPoly2,
}

fn verdict_from_report(report: &LineFactorReport) -> Verdict {
    match classify_directions(report) {
        DirectionClass::NoLineFactors => Verdict::AllTwoPeriodic,
        DirectionClass::SingleDirection(v) => Verdict::AllPeriodicInDirection(v),
        DirectionClass::MultipleDirections(_) => Verdict::Inconclusive,
    }
}

/// Classifies a covering problem by the line factors of its periodizer.
///
/// The single degenerate case `D = {0}`, `b - a = 1` has the zero
/// periodizer, which carries no information; it is reported as
/// `Inconclusive` with empty evidence.
pub fn classify(p: &CoveringProblem) -> Classification {
    let g = periodizer(p);
    if g.is_zero() {
        return Classification {
            verdict: Verdict::Inconclusive,
            evidence: LineFactorReport::default(),
            periodizer: g,
        };
    }
    let report = line_factors(&g);
    Classification {
        verdict: verdict_from_report(&report),
        evidence: report,
        periodizer: g,
    }
}

/// Length of an all-ones normal form; convex neighborhoods produce no
/// other off-origin forms.
fn all_ones_length(form: &UniPoly) -> usize {
    let n = form.degree().expect("nonzero form") + 1;
    assert_eq!(
        form,
        &all_ones(n),
        "fiber of a convex shape is not an all-ones run"
    );
    n
}

/// Specialization of [`classify`] to convex neighborhoods.
///
/// For a convex `D` every fiber of `f_D` is a contiguous run of ones, so
/// per direction the common factor reduces to arithmetic on run lengths:
/// with `b = a` the fibers share a factor iff the gcd `d` of the run
/// lengths exceeds one, and otherwise iff the all-ones polynomial of the
/// off-origin length gcd and the origin fiber share a factor. The result
/// always coincides with [`classify`].
pub fn classify_convex(p: &CoveringProblem) -> Result<Classification, Error> {
    if !is_convex(&p.shape) {
        return Err(Error::NonConvex);
    }
    let g = periodizer(p);
    if g.is_zero() {
        return Ok(Classification {
            verdict: Verdict::Inconclusive,
            evidence: LineFactorReport::default(),
            periodizer: g,
        });
    }

    let directions: BTreeSet<Direction> = outer_edge_directions(&g)
        .iter()
        .map(Direction::canonical_undirected)
        .collect();

    let mut entries = Vec::new();
    for v in directions {
        let fs = fiber_set(&g, v);
        let factor = if p.delta() == 0 {
            let d = fs
                .all_forms
                .iter()
                .map(all_ones_length)
                .fold(0, num_integer::gcd);
            (d >= 2).then(|| all_ones(d))
        } else {
            let d = fs
                .off_origin_forms
                .iter()
                .map(all_ones_length)
                .fold(0, num_integer::gcd);
            let common = if d == 0 {
                // all support on the origin line
                fs.origin_form.primitive_positive()
            } else if fs.origin_form.is_zero() {
                all_ones(d)
            } else {
                gcd(&all_ones(d), &fs.origin_form)
            };
            (common.degree().is_some_and(|deg| deg >= 1)).then_some(common)
        };
        if let Some(factor) = factor {
            entries.push(LineFactorEntry {
                direction: v,
                factor,
            });
        }
    }

    let report = LineFactorReport { entries };
    Ok(Classification {
        verdict: verdict_from_report(&report),
        evidence: report,
        periodizer: g,
    })
}
