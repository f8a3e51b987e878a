//! Exact computational algebra for perfect coverings of the grid `Z^2`.
//!
//! A binary configuration is a *(D,b,a)-covering* when the neighborhood
//! `u + D` of every cell `u` contains exactly `b` ones if the cell itself
//! is a one and exactly `a` ones otherwise. Every such covering is
//! periodized by the Laurent polynomial `g = f_D - (b - a)`, where `f_D`
//! is the characteristic polynomial of the neighborhood. The directions
//! of the line polynomial factors of `g` decide forced periodicity:
//! no factors means every covering is two-periodic, factors in a single
//! direction mean every covering is periodic in that direction.
//!
//! The crate provides:
//!
//! * exact two-variable Laurent polynomial arithmetic with arbitrary
//!   precision integer coefficients ([`laurent`]),
//! * convex support geometry: outer edges and candidate directions
//!   ([`geometry`]),
//! * univariate integer polynomials with fraction-free gcd and cyclotomic
//!   polynomials ([`unipoly`]),
//! * fiber decomposition and normal forms ([`fiber`]),
//! * the line polynomial factor finder ([`mod@line_factors`]),
//! * forced-periodicity classification of covering problems
//!   ([`covering`]),
//! * two-periodic configurations on fundamental domains with exact
//!   covering verification ([`torus`]),
//! * bounded exhaustive search for coverings ([`mod@search`]),
//! * independent brute-force oracles used by the test suite ([`oracle`]).

pub mod covering;
pub mod fiber;
pub mod geometry;
pub mod laurent;
pub mod line_factors;
pub mod oracle;
pub mod parse;
pub mod search;
pub mod torus;
pub mod unipoly;

mod error;

pub use covering::{classify, classify_convex, grid_ball, periodizer};
pub use covering::{Classification, CoveringProblem, GridKind, NeighborhoodSpec, Verdict};
pub use error::Error;
pub use fiber::{fiber_set, fibers, normal_form, FiberSet};
pub use geometry::{candidate_line_directions, is_convex, outer_edge_directions, Direction};
pub use laurent::{char_poly, ExpVec, LaurentPoly2, Shape};
pub use line_factors::{
    classify_directions, line_factor_in_direction, line_factors, DirectionClass, LineFactorEntry,
    LineFactorReport,
};
pub use parse::parse_poly;
pub use search::HARD_CAP_CELLS;
pub use search::{enumerate_on_lattice, search, SearchOutcome, SearchStats, SearchStatus};
pub use torus::{
    consistent_constants, is_t_periodic, periodizer_identity_check, verify_covering,
    ConstantConstraint, CoverCheck, PeriodLattice, TorusConfig,
};
pub use unipoly::{all_ones, cyclotomic, divides, gcd, gcd_many, UniPoly};
