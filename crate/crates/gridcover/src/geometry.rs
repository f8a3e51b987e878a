//! Convex geometry of polynomial supports.
//!
//! A direction is a primitive vector of `Z^2`. A polynomial has an outer
//! edge in direction `v` when its support fits in a closed half plane
//! whose boundary line is parallel to `v` and contains at least two
//! support points; these are exactly the edge directions of the convex
//! hull of the support, traversed clockwise. Line polynomial factors can
//! only occur in directions where both `v` and `-v` are outer edges,
//! which is what [`candidate_line_directions`] reports.

use std::collections::BTreeSet;
use std::fmt;

use crate::laurent::{ExpVec, LaurentPoly2, Shape};

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A primitive nonzero vector of `Z^2`.
///
/// The components of a primitive vector are relatively prime, so every
/// nonzero vector is parallel to exactly one primitive vector with the
/// same orientation. The derived ordering is lexicographic on the
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction(ExpVec);

impl Direction {
    /// The primitive vector parallel to `v` with the same orientation.
    ///
    /// # Panics
    ///
    /// Panics if `v` is zero.
    pub fn primitive(v: ExpVec) -> Direction {
        assert!(!v.is_zero(), "zero vector has no direction");
        let g = gcd_i64(v.x, v.y);
        Direction(ExpVec::new(v.x / g, v.y / g))
    }

    pub fn vector(&self) -> ExpVec {
        self.0
    }

    pub fn opposite(&self) -> Direction {
        Direction(-self.0)
    }

    /// The orthogonal vector `(v_y, -v_x)`; the linear functional
    /// `u . perp` is constant exactly on lines parallel to `self`.
    pub fn perp(&self) -> ExpVec {
        ExpVec::new(self.0.y, -self.0.x)
    }

    /// The canonical representative of the undirected line through this
    /// direction: positive x component, or zero x and positive y.
    pub fn canonical_undirected(&self) -> Direction {
        if self.0.x > 0 || (self.0.x == 0 && self.0.y > 0) {
            *self
        } else {
            self.opposite()
        }
    }

    pub fn is_parallel_to(&self, other: &Direction) -> bool {
        self.canonical_undirected() == other.canonical_undirected()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn cross(o: ExpVec, a: ExpVec, b: ExpVec) -> i128 {
    let (ax, ay) = (a.x as i128 - o.x as i128, a.y as i128 - o.y as i128);
    let (bx, by) = (b.x as i128 - o.x as i128, b.y as i128 - o.y as i128);
    ax * by - ay * bx
}

/// Convex hull by monotone chain, counterclockwise, collinear boundary
/// points dropped. Degenerate inputs return the distinct points
/// (one point, or the two endpoints of a segment).
pub fn convex_hull(points: &BTreeSet<ExpVec>) -> Vec<ExpVec> {
    let pts: Vec<ExpVec> = points.iter().copied().collect();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<ExpVec> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<ExpVec> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    if lower.len() == 1 && upper.len() == 1 {
        // all points collinear: keep the two extreme ones
        return vec![lower[0], upper[0]];
    }
    lower.extend(upper);
    lower
}

/// Directed outer edge directions of a nonzero polynomial: clockwise edge
/// directions of the convex hull of the support.
///
/// # Panics
///
/// Panics if `f` is zero.
pub fn outer_edge_directions(f: &LaurentPoly2) -> BTreeSet<Direction> {
    assert!(!f.is_zero(), "zero polynomial has no outer edges");
    let support: BTreeSet<ExpVec> = f.support().copied().collect();
    let hull = convex_hull(&support);
    let mut dirs = BTreeSet::new();
    match hull.len() {
        1 => {}
        2 => {
            let d = Direction::primitive(hull[1] - hull[0]);
            dirs.insert(d);
            dirs.insert(d.opposite());
        }
        n => {
            // hull is counterclockwise; walk it backwards for the
            // clockwise edge directions
            for i in 0..n {
                let from = hull[(i + 1) % n];
                let to = hull[i];
                dirs.insert(Direction::primitive(to - from));
            }
        }
    }
    dirs
}

/// Undirected directions in which `f` could have a line polynomial
/// factor: those with outer edges in both orientations.
///
/// # Panics
///
/// Panics if `f` is zero.
pub fn candidate_line_directions(f: &LaurentPoly2) -> BTreeSet<Direction> {
    let dirs = outer_edge_directions(f);
    dirs.iter()
        .filter(|d| dirs.contains(&d.opposite()))
        .map(Direction::canonical_undirected)
        .collect()
}

/// All lattice points of the real convex hull of a shape.
pub fn convex_fill(shape: &Shape) -> Shape {
    if shape.is_empty() {
        return Shape::from_points([]);
    }
    let points: BTreeSet<ExpVec> = shape.iter().copied().collect();
    let hull = convex_hull(&points);
    let min_x = points.iter().map(|p| p.x).min().unwrap();
    let max_x = points.iter().map(|p| p.x).max().unwrap();
    let min_y = points.iter().map(|p| p.y).min().unwrap();
    let max_y = points.iter().map(|p| p.y).max().unwrap();
    let mut filled = Vec::new();
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            let p = ExpVec::new(x, y);
            if hull_contains(&hull, p) {
                filled.push(p);
            }
        }
    }
    Shape::from_points(filled)
}

/// Whether every lattice point of the real convex hull of `D` belongs
/// to `D`.
pub fn is_convex(shape: &Shape) -> bool {
    convex_fill(shape).len() == shape.len()
}

fn hull_contains(hull: &[ExpVec], p: ExpVec) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == p,
        2 => {
            let (a, b) = (hull[0], hull[1]);
            if cross(a, b, p) != 0 {
                return false;
            }
            let (dx, dy) = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
            let t = (p.x as i128 - a.x as i128) * dx + (p.y as i128 - a.y as i128) * dy;
            let len2 = dx * dx + dy * dy;
            0 <= t && t <= len2
        }
        n => (0..n).all(|i| cross(hull[i], hull[(i + 1) % n], p) >= 0),
    }
}
