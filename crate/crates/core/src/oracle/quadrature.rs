//! Expectation values of hydrogen eigenstates by radial quadrature.
//!
//! ⟨p⁴⟩ uses `p²ψ = 2m(E − V)ψ`, so `⟨p⁴⟩ = ‖p²ψ‖² = 4m² ⟨(E − V)²⟩` with
//! `V = −α/r`. No derivatives of the wavefunction are taken.

use super::grid::{simpson, RadialGrid};
use super::radial::DEFAULT_R_MIN_BOHR;
use super::refine::{refine_until, OracleResult, Resolution};
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::hydrogen::{bohr_energy, radial_wavefunction, HydrogenState};

/// Largest n the quadrature oracle is run for.
pub const MAX_ORACLE_N: u32 = 5;
/// Successive-refinement agreement demanded of quadrature results.
pub const QUADRATURE_TOLERANCE: f64 = 1e-10;
pub const MAX_QUADRATURE_REFINEMENTS: u32 = 8;

/// Grid covering states up to `n_max`: r_max = max(30 n_max, 40) Bohr radii,
/// spacing 0.05 Bohr radii.
pub fn default_quadrature_grid(n_max: u32, c: &Constants) -> Result<RadialGrid> {
    let a = c.bohr_length();
    let extent = (30 * n_max).max(40) as usize;
    RadialGrid::new(DEFAULT_R_MIN_BOHR * a, extent as f64 * a, extent * 20 + 1)
}

/// Simpson integral of `f(r) R₁(r) R₂(r) r²` over `grid`.
pub fn radial_integral<F>(
    s1: &HydrogenState,
    s2: &HydrogenState,
    grid: &RadialGrid,
    c: &Constants,
    f: F,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let values = grid
        .nodes()
        .map(|r| {
            let a = radial_wavefunction(s1, r, c)?;
            let b = radial_wavefunction(s2, r, c)?;
            Ok(f(r) * a * b * r * r)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(simpson(&values, grid.spacing()))
}

/// ∫ R₁ R₂ r² dr.
pub fn overlap(
    s1: &HydrogenState,
    s2: &HydrogenState,
    grid: &RadialGrid,
    c: &Constants,
) -> Result<f64> {
    radial_integral(s1, s2, grid, c, |_| 1.0)
}

fn refined_integral<F>(
    s: &HydrogenState,
    grid: &RadialGrid,
    c: &Constants,
    f: F,
) -> Result<OracleResult>
where
    F: Fn(f64) -> f64 + Copy,
{
    if s.n() > MAX_ORACLE_N {
        return Err(Error::Capability(format!(
            "quadrature oracle is limited to n <= {MAX_ORACLE_N}, got n = {}",
            s.n()
        )));
    }
    let result = refine_until(QUADRATURE_TOLERANCE, MAX_QUADRATURE_REFINEMENTS, |level| {
        let g = grid.refined_by(level);
        Ok((radial_integral(s, s, &g, c, f)?, Resolution::Grid(g)))
    })?;
    if !result.converged {
        return Err(Error::OracleResolution(format!(
            "quadrature for {s} did not converge within {MAX_QUADRATURE_REFINEMENTS} refinements \
             (last change {:e})",
            result.estimated_error
        )));
    }
    Ok(result)
}

/// ⟨p⁴⟩ in eV⁴ as `4m² ⟨(E_n + α/r)²⟩`.
pub fn expectation_p4_numeric(
    s: &HydrogenState,
    grid: &RadialGrid,
    c: &Constants,
) -> Result<OracleResult> {
    let e = bohr_energy(s, c).magnitude();
    let alpha = c.alpha();
    let m = c.electron_mass();
    let mut r = refined_integral(s, grid, c, move |r| {
        let k = e + alpha / r;
        k * k
    })?;
    let scale = 4.0 * m * m;
    r.value *= scale;
    r.estimated_error *= scale;
    Ok(r)
}

/// ⟨p²⟩ in eV² as `2m ⟨E_n + α/r⟩`.
pub fn expectation_p2_numeric(
    s: &HydrogenState,
    grid: &RadialGrid,
    c: &Constants,
) -> Result<OracleResult> {
    let e = bohr_energy(s, c).magnitude();
    let alpha = c.alpha();
    let m = c.electron_mass();
    let mut r = refined_integral(s, grid, c, move |r| e + alpha / r)?;
    r.value *= 2.0 * m;
    r.estimated_error *= 2.0 * m;
    Ok(r)
}
