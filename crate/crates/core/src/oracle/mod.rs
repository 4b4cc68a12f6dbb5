//! Brute-force numerics that cross-check the closed-form results.

mod grid;
mod oscillator;
mod quadrature;
mod radial;
mod refine;

pub use grid::{simpson, trapezoid, RadialGrid, MIN_POINTS};
pub use oscillator::{
    default_betas, diag_deformed_oscillator, diag_deformed_oscillator_within, slope_check,
    Oscillator, SlopeCheck, MAX_COUPLING, MIN_BASIS, TRUNCATION_TOLERANCE,
};
pub use quadrature::{
    default_quadrature_grid, expectation_p2_numeric, expectation_p4_numeric, overlap,
    radial_integral, MAX_ORACLE_N, QUADRATURE_TOLERANCE,
};
pub use radial::{
    default_level_grid, level_check, solve_radial, LevelCheck, RadialLevel, DEFAULT_R_MIN_BOHR,
    MAX_LEVELS,
};
pub use refine::{refine_until, OracleResult, Resolution};

/// Default agreement demanded of refined eigenvalues.
pub const LEVEL_TOLERANCE: f64 = 1e-8;
/// Default agreement demanded of expectation values.
pub const EXPECTATION_TOLERANCE: f64 = 1e-6;
/// Default agreement demanded of the oscillator slope fit.
pub const SLOPE_TOLERANCE: f64 = 1e-4;
