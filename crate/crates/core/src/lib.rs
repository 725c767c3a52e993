//! Minimum-width V-shapes covering planar point sets.
//!
//! A V-shape is the union of two half-strips ("arms") that share the
//! segment between two apexes. This crate computes narrowest covering
//! V-shapes exactly ([`solve_exact`]), within a constant factor
//! ([`approx_vshape`]) and within `1 + eps` ([`solve_ptas`]), and ships
//! brute-force oracles for testing ([`oracle`]).
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod approx13;
pub mod error;
pub mod exact;
pub mod exact_solver;
pub mod geom;
pub mod hull;
pub mod oracle;
pub mod ptas;
pub mod two_line;
pub mod vshape;

pub use approx13::{approx_vshape, two_strip_cover, ApproxResult, TwoStripCover, TwoStripMode};
pub use error::{Error, Result};
pub use exact_solver::{
    enumerate_empty_wedges, solve_both_inner, solve_both_outer, solve_exact, solve_inner_outer,
    IndexTier, SolveOptions, SolveReport,
};
pub use geom::{
    angle_bisector, dist_point_line, side_of, strip_through, Frame, Line, Point, Ray, Sign, Strip,
    Tolerance, UnitDir,
};
pub use hull::{
    build_halfplane_index, convex_hull, extreme_point, halfplane_extreme, insert_hull,
    min_width_strip, min_width_strip_constrained, outer_common_tangents, AngularInterval,
    FilterScanIndex, HalfPlane, HalfplaneExtremeIndex, Hull, HullDelta,
};
pub use oracle::{brute_force_optimum, brute_force_two_strip, OracleResult};
pub use ptas::{
    beta_gamma, candidate_anchor_pairs, coreset_insert, rotated_strip_width, solve_fixed_direction,
    solve_ptas, solve_ptas_with_anchors, AnchorCandidate, AnchorMode, CoresetMode, DirectionGrid,
    DirectionalCoreset, PtasOptions, PtasReport,
};
pub use two_line::{cut_candidates, min_vshape_two_lines, TwoLineInstance};
pub use vshape::{
    classify, is_canonical, strips_to_vshape, tilted_parallel_vshape, wedge_to_vshape,
    CanonicalType, VShape, Wedge, Widths,
};
