//! Bounded exhaustive search for coverings over two-periodic
//! configurations.
//!
//! Lattices are enumerated canonically in nondecreasing area; on each
//! lattice a depth-first assignment with forward checking enumerates
//! exactly the cell assignments that satisfy the covering condition.
//! The search never claims nonexistence: exhausting the area bound
//! without a witness yields `ExhaustedUnknown`.

use std::collections::BTreeMap;

use crate::covering::CoveringProblem;
use crate::laurent::ExpVec;
use crate::torus::{PeriodLattice, TorusConfig};
use crate::Error;

/// Hard cap on fundamental domain cells for enumeration and search.
pub const HARD_CAP_CELLS: u64 = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub lattices_tried: u64,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Found(TorusConfig),
    ExhaustedUnknown { area_bound: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// All lattices `(p, 0), (s, q)` with area up to the bound, ordered by
/// (area, p, s); each rank-2 sublattice of `Z^2` appears exactly once.
pub fn canonical_lattices(max_area: u64) -> Vec<PeriodLattice> {
    let mut out = Vec::new();
    for area in 1..=max_area as i64 {
        for p in 1..=area {
            if area % p != 0 {
                continue;
            }
            let q = area / p;
            for s in 0..p {
                out.push(PeriodLattice::new(p, q, s));
            }
        }
    }
    out
}

/// Per-cell constraint state for the forward-checking backtracker.
struct Solver<'a> {
    problem: &'a CoveringProblem,
    lattice: PeriodLattice,
    n: usize,
    /// `watchers[w]`: cells whose neighborhood ball contains `w`, with
    /// the multiplicity of `w` in that ball (small tori wrap the ball
    /// onto itself).
    watchers: Vec<Vec<(usize, u32)>>,
    value: Vec<Option<u8>>,
    assigned_sum: Vec<i64>,
    unassigned: Vec<i64>,
    nodes: u64,
    solutions: Vec<TorusConfig>,
    stop_after_first: bool,
}

impl<'a> Solver<'a> {
    fn new(problem: &'a CoveringProblem, lattice: PeriodLattice, stop_after_first: bool) -> Self {
        let n = lattice.area() as usize;
        let p = lattice.p();
        let mut watchers: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
        for j in 0..lattice.q() {
            for i in 0..p {
                let u = ExpVec::new(i, j);
                let cell = (j * p + i) as usize;
                let mut mults: BTreeMap<usize, u32> = BTreeMap::new();
                for d in problem.shape().iter() {
                    let (ri, rj) = lattice.reduce(u + *d);
                    *mults.entry((rj * p + ri) as usize).or_insert(0) += 1;
                }
                for (w, m) in mults {
                    watchers[w].push((cell, m));
                }
            }
        }
        let ball_size = problem.shape().len() as i64;
        Solver {
            problem,
            lattice,
            n,
            watchers,
            value: vec![None; n],
            assigned_sum: vec![0; n],
            unassigned: vec![ball_size; n],
            nodes: 0,
            solutions: Vec::new(),
            stop_after_first,
        }
    }

    /// A cell constraint is viable while some admissible target count
    /// remains reachable: the final count lies in
    /// `[assigned, assigned + unassigned]`, and the target is `b` or `a`
    /// once the cell value is fixed, either of them before.
    fn feasible(&self, u: usize) -> bool {
        let lo = self.assigned_sum[u];
        let hi = lo + self.unassigned[u];
        let reaches = |t: i64| lo <= t && t <= hi;
        match self.value[u] {
            Some(1) => reaches(self.problem.b() as i64),
            Some(_) => reaches(self.problem.a() as i64),
            None => reaches(self.problem.b() as i64) || reaches(self.problem.a() as i64),
        }
    }

    fn dfs(&mut self, cell: usize) {
        if cell == self.n {
            let cells = self.value.iter().map(|v| v.unwrap()).collect();
            self.solutions.push(TorusConfig::new(self.lattice, cells));
            return;
        }
        'values: for val in [0u8, 1] {
            self.nodes += 1;
            self.value[cell] = Some(val);
            for k in 0..self.watchers[cell].len() {
                let (u, m) = self.watchers[cell][k];
                self.assigned_sum[u] += m as i64 * val as i64;
                self.unassigned[u] -= m as i64;
            }
            let mut ok = self.feasible(cell);
            if ok {
                for k in 0..self.watchers[cell].len() {
                    if !self.feasible(self.watchers[cell][k].0) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.dfs(cell + 1);
            }
            for k in 0..self.watchers[cell].len() {
                let (u, m) = self.watchers[cell][k];
                self.assigned_sum[u] -= m as i64 * val as i64;
                self.unassigned[u] += m as i64;
            }
            self.value[cell] = None;
            if self.stop_after_first && !self.solutions.is_empty() {
                break 'values;
            }
        }
    }

    fn run(mut self) -> (Vec<TorusConfig>, u64) {
        self.dfs(0);
        (self.solutions, self.nodes)
    }
}

/// Every covering of the problem on the given lattice, in row-major
/// assignment order with 0 tried before 1.
///
/// Returns [`Error::CapExceeded`] when the fundamental domain has more
/// than [`HARD_CAP_CELLS`] cells.
pub fn enumerate_on_lattice(
    problem: &CoveringProblem,
    lattice: PeriodLattice,
) -> Result<Vec<TorusConfig>, Error> {
    let cells = lattice.area() as u64;
    if cells > HARD_CAP_CELLS {
        return Err(Error::CapExceeded {
            requested: cells,
            cap: HARD_CAP_CELLS,
        });
    }
    Ok(Solver::new(problem, lattice, false).run().0)
}

/// Searches canonical lattices of area up to `area_bound` and returns the
/// first covering found, or `ExhaustedUnknown` after an empty sweep.
///
/// Returns [`Error::CapExceeded`] when the bound exceeds
/// [`HARD_CAP_CELLS`].
pub fn search(problem: &CoveringProblem, area_bound: u64) -> Result<SearchOutcome, Error> {
    if area_bound > HARD_CAP_CELLS {
        return Err(Error::CapExceeded {
            requested: area_bound,
            cap: HARD_CAP_CELLS,
        });
    }
    let mut stats = SearchStats::default();
    for lattice in canonical_lattices(area_bound) {
        stats.lattices_tried += 1;
        let (solutions, nodes) = Solver::new(problem, lattice, true).run();
        stats.nodes_expanded += nodes;
        if let Some(witness) = solutions.into_iter().next() {
            return Ok(SearchOutcome {
                status: SearchStatus::Found(witness),
                stats,
            });
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::ExhaustedUnknown { area_bound },
        stats,
    })
}
