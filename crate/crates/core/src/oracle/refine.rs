use serde::Serialize;

use super::grid::RadialGrid;
use crate::error::{Error, Result};

/// Resolution a numeric result was obtained at.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Resolution {
    Grid(RadialGrid),
    Basis(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    /// Absolute disagreement between the last two refinements.
    pub estimated_error: f64,
    pub resolution: Resolution,
    pub converged: bool,
    /// Number of refinements performed after the initial evaluation.
    pub refinements: u32,
}

/// Evaluates `compute(0)`, `compute(1)`, ... until two successive values agree
/// to relative `tolerance` or `max_refinements` is reached.
///
/// Each level is expected to double the resolution of the previous one.
/// Hitting the cap is not an error; the result carries `converged = false`.
pub fn refine_until<F>(tolerance: f64, max_refinements: u32, mut compute: F) -> Result<OracleResult>
where
    F: FnMut(u32) -> Result<(f64, Resolution)>,
{
    if !(tolerance > 0.0 && tolerance <= 1e-2) {
        return Err(Error::validation(format!(
            "refinement tolerance must lie in (0, 1e-2], got {tolerance}"
        )));
    }
    let (mut prev, mut resolution) = compute(0)?;
    let mut last_err = f64::INFINITY;
    for level in 1..=max_refinements {
        let (value, res) = compute(level)?;
        resolution = res;
        let diff = (value - prev).abs();
        last_err = diff;
        if diff <= tolerance * value.abs() || diff == 0.0 {
            return Ok(OracleResult {
                value,
                estimated_error: diff,
                resolution,
                converged: true,
                refinements: level,
            });
        }
        prev = value;
    }
    Ok(OracleResult {
        value: prev,
        estimated_error: last_err,
        resolution,
        converged: false,
        refinements: max_refinements,
    })
}
