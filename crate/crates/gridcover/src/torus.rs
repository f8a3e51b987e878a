//! Two-periodic binary configurations on a fundamental domain.
//!
//! A rank-2 sublattice of `Z^2` has a unique Hermite-style basis
//! `(p, 0), (s, q)` with `p, q >= 1` and `0 <= s < p`; a configuration
//! periodic under both generators is stored on the `p x q` fundamental
//! domain and extends to all of `Z^2` by the quotient map. Covering
//! conditions and the periodizer identity are checked exactly on the
//! representatives, which suffices by periodicity.

use std::fmt;

use crate::covering::CoveringProblem;
use crate::laurent::{ExpVec, Shape};
use crate::Error;

/// Periods `(p, 0)` and `(s, q)` with `p, q >= 1`, `0 <= s < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PeriodLattice {
    p: i64,
    q: i64,
    s: i64,
}

impl PeriodLattice {
    /// # Panics
    ///
    /// Panics unless `p >= 1`, `q >= 1` and `0 <= s < p`.
    pub fn new(p: i64, q: i64, s: i64) -> Self {
        assert!(p >= 1 && q >= 1, "periods must be positive");
        assert!(0 <= s && s < p, "shear must satisfy 0 <= s < p");
        PeriodLattice { p, q, s }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// Index of the lattice in `Z^2`: the number of cells of the
    /// fundamental domain.
    pub fn area(&self) -> i64 {
        self.p * self.q
    }

    pub fn generators(&self) -> (ExpVec, ExpVec) {
        (ExpVec::new(self.p, 0), ExpVec::new(self.s, self.q))
    }

    /// Reduces a point to its representative `(i, j)` with `0 <= i < p`,
    /// `0 <= j < q`: subtract multiples of `(s, q)` to bring `y` into
    /// range, then reduce `x` modulo `p`.
    pub fn reduce(&self, u: ExpVec) -> (i64, i64) {
        let j = u.y.rem_euclid(self.q);
        let k = (u.y - j) / self.q;
        let i = (u.x - k * self.s).rem_euclid(self.p);
        (i, j)
    }

    fn index(&self, u: ExpVec) -> usize {
        let (i, j) = self.reduce(u);
        (j * self.p + i) as usize
    }
}

/// A binary configuration on the fundamental domain of a lattice.
/// Immutable after construction; the induced configuration on `Z^2` is
/// by construction periodic under both lattice generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusConfig {
    lattice: PeriodLattice,
    cells: Vec<u8>,
}

impl TorusConfig {
    /// Cells are indexed row-major: cell `(i, j)` at `j * p + i`.
    ///
    /// # Panics
    ///
    /// Panics if the cell count does not match the lattice area or a
    /// cell value is not 0 or 1.
    pub fn new(lattice: PeriodLattice, cells: Vec<u8>) -> Self {
        assert_eq!(cells.len() as i64, lattice.area(), "cell count mismatch");
        assert!(cells.iter().all(|&c| c <= 1), "cells must be 0 or 1");
        TorusConfig { lattice, cells }
    }

    pub fn constant(lattice: PeriodLattice, value: u8) -> Self {
        let n = lattice.area() as usize;
        TorusConfig::new(lattice, vec![value; n])
    }

    pub fn lattice(&self) -> PeriodLattice {
        self.lattice
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Value of the induced configuration at any point of `Z^2`.
    pub fn cell_at(&self, u: ExpVec) -> u8 {
        self.cells[self.lattice.index(u)]
    }

    pub fn ones(&self) -> usize {
        self.cells.iter().filter(|&&c| c == 1).count()
    }

    /// Text form: header `p q s`, then `q` rows of `p` characters from
    /// `{0,1}`; row `j` of the fundamental domain is line `j`, so `y`
    /// increases downward in file order.
    pub fn to_pattern_string(&self) -> String {
        let (p, q, s) = (self.lattice.p, self.lattice.q, self.lattice.s);
        let mut out = format!("{p} {q} {s}\n");
        for j in 0..q {
            for i in 0..p {
                let c = self.cells[(j * p + i) as usize];
                out.push(if c == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the pattern text format.
    pub fn from_pattern_str(text: &str) -> Result<Self, Error> {
        let bad = |m: &str| Error::Pattern(m.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("missing header line"))?;
        let nums: Vec<i64> = header
            .split_whitespace()
            .map(|w| w.parse::<i64>().map_err(|_| bad("header must be `p q s`")))
            .collect::<Result<_, _>>()?;
        let [p, q, s] = nums[..] else {
            return Err(bad("header must be `p q s`"));
        };
        if p < 1 || q < 1 || s < 0 || s >= p {
            return Err(bad("need p >= 1, q >= 1, 0 <= s < p"));
        }
        let mut cells = Vec::with_capacity((p * q) as usize);
        for j in 0..q {
            let row = lines
                .next()
                .ok_or_else(|| bad(&format!("missing row {j}")))?
                .trim();
            if row.len() as i64 != p {
                return Err(bad(&format!("row {j} must have {p} characters")));
            }
            for ch in row.chars() {
                match ch {
                    '0' => cells.push(0),
                    '1' => cells.push(1),
                    _ => return Err(bad(&format!("row {j} contains `{ch}`"))),
                }
            }
        }
        if lines.next().is_some() {
            return Err(bad("trailing content after the last row"));
        }
        Ok(TorusConfig::new(PeriodLattice::new(p, q, s), cells))
    }

    /// Plain PBM (`P1`) rendering with the same row orientation as the
    /// pattern format.
    pub fn to_pbm_string(&self) -> String {
        let (p, q) = (self.lattice.p, self.lattice.q);
        let mut out = format!("P1\n{p} {q}\n");
        for j in 0..q {
            for i in 0..p {
                if i > 0 {
                    out.push(' ');
                }
                out.push(if self.cells[(j * p + i) as usize] == 1 {
                    '1'
                } else {
                    '0'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for TorusConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pattern_string())
    }
}

/// Result of checking the covering condition on a fundamental domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverCheck {
    Ok,
    /// First cell (in row-major order) whose neighborhood count is wrong,
    /// with the observed count.
    Counterexample {
        cell: ExpVec,
        observed: u64,
    },
}

fn ball_count(config: &TorusConfig, shape: &Shape, u: ExpVec) -> u64 {
    shape.iter().map(|d| config.cell_at(u + *d) as u64).sum()
}

/// Checks the covering condition at every representative.
pub fn verify_covering(config: &TorusConfig, problem: &CoveringProblem) -> CoverCheck {
    let lat = config.lattice();
    for j in 0..lat.q() {
        for i in 0..lat.p() {
            let u = ExpVec::new(i, j);
            let observed = ball_count(config, problem.shape(), u);
            let target = if config.cell_at(u) == 1 {
                problem.b() as u64
            } else {
                problem.a() as u64
            };
            if observed != target {
                return CoverCheck::Counterexample { cell: u, observed };
            }
        }
    }
    CoverCheck::Ok
}

/// One covering constant recovered from a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantConstraint {
    Exactly(u64),
    /// No cell constrains the constant (all-ones leaves `a` free,
    /// all-zeros leaves `b` free).
    Unconstrained,
}

/// The unique `(b, a)` for which the configuration is a covering with
/// neighborhood `shape`, if any. Constants unconstrained by any cell are
/// reported as such rather than fixed arbitrarily.
pub fn consistent_constants(
    config: &TorusConfig,
    shape: &Shape,
) -> Option<(ConstantConstraint, ConstantConstraint)> {
    let lat = config.lattice();
    let mut b_seen: Option<u64> = None;
    let mut a_seen: Option<u64> = None;
    for j in 0..lat.q() {
        for i in 0..lat.p() {
            let u = ExpVec::new(i, j);
            let count = ball_count(config, shape, u);
            let slot = if config.cell_at(u) == 1 {
                &mut b_seen
            } else {
                &mut a_seen
            };
            match slot {
                Some(prev) if *prev != count => return None,
                _ => *slot = Some(count),
            }
        }
    }
    let wrap = |seen: Option<u64>| match seen {
        Some(c) => ConstantConstraint::Exactly(c),
        None => ConstantConstraint::Unconstrained,
    };
    Some((wrap(b_seen), wrap(a_seen)))
}

/// Checks the identity `f_D(X) c(X) = (b - a) c(X) + a 1(X)` coefficient
/// by coefficient on the fundamental domain. Equivalent to
/// [`verify_covering`] returning `Ok`.
pub fn periodizer_identity_check(config: &TorusConfig, problem: &CoveringProblem) -> bool {
    let lat = config.lattice();
    for j in 0..lat.q() {
        for i in 0..lat.p() {
            let u = ExpVec::new(i, j);
            let lhs = ball_count(config, problem.shape(), u) as i64;
            let rhs = problem.delta() * config.cell_at(u) as i64 + problem.a() as i64;
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Whether the induced configuration is `t`-periodic.
///
/// # Panics
///
/// Panics if `t` is zero.
pub fn is_t_periodic(config: &TorusConfig, t: ExpVec) -> bool {
    assert!(!t.is_zero(), "period vector must be nonzero");
    let lat = config.lattice();
    for j in 0..lat.q() {
        for i in 0..lat.p() {
            let u = ExpVec::new(i, j);
            if config.cell_at(u) != config.cell_at(u - t) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{grid_ball, GridKind};
    use proptest::prelude::*;

    /// The 5x5 diagonal code: cell (i,j) is a one iff 2i + j = 0 mod 5.
    pub(crate) fn diagonal_code() -> TorusConfig {
        let lat = PeriodLattice::new(5, 5, 0);
        let cells = (0..5)
            .flat_map(|j| (0..5).map(move |i| u8::from((2 * i + j) % 5 == 0)))
            .collect();
        TorusConfig::new(lat, cells)
    }

    fn square_problem(b: u32, a: u32) -> CoveringProblem {
        CoveringProblem::new(grid_ball(GridKind::Square, 1), b, a).unwrap()
    }

    #[test]
    fn cell_lookup_respects_generators() {
        let c = diagonal_code();
        for x in -7..=7 {
            for y in -7..=7 {
                let u = ExpVec::new(x, y);
                assert_eq!(c.cell_at(u), c.cell_at(u + ExpVec::new(5, 0)));
                assert_eq!(c.cell_at(u), c.cell_at(u + ExpVec::new(0, 5)));
            }
        }
        assert_eq!(c.cell_at(ExpVec::new(0, 0)), c.cells()[0]);

        let sheared = TorusConfig::new(PeriodLattice::new(2, 1, 1), vec![1, 0]);
        assert_eq!(
            sheared.cell_at(ExpVec::new(0, 0)),
            sheared.cell_at(ExpVec::new(1, 1))
        );
    }

    #[test]
    fn diagonal_code_is_perfect() {
        let c = diagonal_code();
        assert_eq!(verify_covering(&c, &square_problem(1, 1)), CoverCheck::Ok);
        assert!(periodizer_identity_check(&c, &square_problem(1, 1)));
    }

    #[test]
    fn diagonal_code_rejects_wrong_constants() {
        let c = diagonal_code();
        assert_eq!(
            verify_covering(&c, &square_problem(2, 1)),
            CoverCheck::Counterexample {
                cell: ExpVec::new(0, 0),
                observed: 1
            }
        );
        assert!(!periodizer_identity_check(&c, &square_problem(2, 1)));
    }

    #[test]
    fn constant_configs_are_vacuous_coverings() {
        let lat = PeriodLattice::new(3, 2, 1);
        let ones = TorusConfig::constant(lat, 1);
        let zeros = TorusConfig::constant(lat, 0);
        for kind in [GridKind::Square, GridKind::King, GridKind::Triangular] {
            let d = grid_ball(kind, 1);
            let full = d.len() as u32;
            let p_ones = CoveringProblem::new(d.clone(), full, 2).unwrap();
            assert_eq!(verify_covering(&ones, &p_ones), CoverCheck::Ok);
            let p_zeros = CoveringProblem::new(d, 3, 0).unwrap();
            assert_eq!(verify_covering(&zeros, &p_zeros), CoverCheck::Ok);
        }
    }

    #[test]
    fn recovered_constants() {
        let c = diagonal_code();
        let d = grid_ball(GridKind::Square, 1);
        assert_eq!(
            consistent_constants(&c, &d),
            Some((
                ConstantConstraint::Exactly(1),
                ConstantConstraint::Exactly(1)
            ))
        );

        // checkerboard under the king neighborhood: 5 of one color,
        // 4 of the other in every 3x3 block
        let board = TorusConfig::new(PeriodLattice::new(2, 2, 0), vec![1, 0, 0, 1]);
        let king = grid_ball(GridKind::King, 1);
        assert_eq!(
            consistent_constants(&board, &king),
            Some((
                ConstantConstraint::Exactly(5),
                ConstantConstraint::Exactly(4)
            ))
        );

        // a one-sided pattern that no constants fix
        let skew = TorusConfig::new(PeriodLattice::new(2, 2, 0), vec![1, 0, 0, 0]);
        assert_eq!(consistent_constants(&skew, &d), None);

        let ones = TorusConfig::constant(PeriodLattice::new(2, 2, 0), 1);
        assert_eq!(
            consistent_constants(&ones, &d),
            Some((
                ConstantConstraint::Exactly(5),
                ConstantConstraint::Unconstrained
            ))
        );
    }

    #[test]
    fn periodicity_tests() {
        let c = diagonal_code();
        assert!(is_t_periodic(&c, ExpVec::new(5, 0)));
        assert!(is_t_periodic(&c, ExpVec::new(1, -2)));
        assert!(is_t_periodic(&c, ExpVec::new(2, 1)));
        assert!(!is_t_periodic(&c, ExpVec::new(1, 0)));
    }

    #[test]
    fn pattern_roundtrip_and_pbm() {
        let c = diagonal_code();
        let text = c.to_pattern_string();
        assert!(text.starts_with("5 5 0\n10000\n00100\n"));
        let back = TorusConfig::from_pattern_str(&text).unwrap();
        assert_eq!(back, c);

        let small = TorusConfig::new(PeriodLattice::new(2, 1, 1), vec![1, 0]);
        assert_eq!(small.to_pbm_string(), "P1\n2 1\n1 0\n");
    }

    #[test]
    fn pattern_parse_errors() {
        assert!(TorusConfig::from_pattern_str("").is_err());
        assert!(TorusConfig::from_pattern_str("2 1\n10\n").is_err());
        assert!(TorusConfig::from_pattern_str("2 1 2\n10\n").is_err());
        assert!(TorusConfig::from_pattern_str("2 1 0\n102\n").is_err());
        assert!(TorusConfig::from_pattern_str("2 2 0\n10\n").is_err());
        assert!(TorusConfig::from_pattern_str("2 1 0\n10\n00\n").is_err());
    }

    fn arb_lattice() -> impl Strategy<Value = PeriodLattice> {
        (1i64..=4, 1i64..=4)
            .prop_flat_map(|(p, q)| (0..p).prop_map(move |s| PeriodLattice::new(p, q, s)))
    }

    fn arb_config() -> impl Strategy<Value = TorusConfig> {
        arb_lattice().prop_flat_map(|lat| {
            proptest::collection::vec(0u8..=1, lat.area() as usize)
                .prop_map(move |cells| TorusConfig::new(lat, cells))
        })
    }

    proptest! {
        #[test]
        fn lookup_respects_random_lattices(c in arb_config(), x in -9i64..=9, y in -9i64..=9) {
            let u = ExpVec::new(x, y);
            let (g1, g2) = c.lattice().generators();
            prop_assert_eq!(c.cell_at(u), c.cell_at(u + g1));
            prop_assert_eq!(c.cell_at(u), c.cell_at(u + g2));
        }

        #[test]
        fn count_check_equals_identity_check(c in arb_config(), b in 0u32..=5, a in 0u32..=5) {
            let d = grid_ball(GridKind::Square, 1);
            let problem = CoveringProblem::new(d, b, a).unwrap();
            let ok = verify_covering(&c, &problem) == CoverCheck::Ok;
            prop_assert_eq!(ok, periodizer_identity_check(&c, &problem));
        }

        #[test]
        fn recovered_constants_verify_uniquely(c in arb_config()) {
            let d = grid_ball(GridKind::Square, 1);
            if let Some((b_c, a_c)) = consistent_constants(&c, &d) {
                use ConstantConstraint::*;
                let bs: Vec<u64> = match b_c { Exactly(b) => vec![b], Unconstrained => (0..=5).collect() };
                let as_: Vec<u64> = match a_c { Exactly(a) => vec![a], Unconstrained => (0..=5).collect() };
                for &b in &bs {
                    for &a in &as_ {
                        let problem = CoveringProblem::new(d.clone(), b as u32, a as u32).unwrap();
                        prop_assert_eq!(verify_covering(&c, &problem), CoverCheck::Ok);
                    }
                }
                // no pair outside the reported constraints passes
                for b in 0u32..=5 {
                    for a in 0u32..=5 {
                        let in_reported = bs.contains(&(b as u64)) && as_.contains(&(a as u64));
                        if in_reported { continue; }
                        let problem = CoveringProblem::new(d.clone(), b, a).unwrap();
                        prop_assert_ne!(verify_covering(&c, &problem), CoverCheck::Ok);
                    }
                }
            }
        }
    }
}
