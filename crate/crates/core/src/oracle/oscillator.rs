//! Harmonic oscillator with the minimal-length perturbation
//!
//! ```text
//! H = p²/2m + mω²x²/2 + (β/3m) p⁴
//! ```
//!
//! diagonalized in a truncated oscillator basis. The p², x² and p⁴ matrices
//! are built from ladder operators in a basis four states larger than the
//! truncation and then cut, so every retained element is exact.
//!
//! With `p₀ = √(mω)` the oscillator momentum scale, `H/ω` depends on β only
//! through `g = βp₀²`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_BASIS: usize = 20;
/// Largest admissible βp₀².
pub const MAX_COUPLING: f64 = 0.1;
/// Relative ground-energy change tolerated when the basis grows by 50%.
pub const TRUNCATION_TOLERANCE: f64 = 1e-10;

/// Exact matrices of π² = (p/p₀)², ξ² = (x/x₀)² and π⁴ in the lowest `n`
/// oscillator states. `sign` flips the convention x → −x.
fn ladder_matrices(n: usize, sign: f64) -> (DMatrix<f64>, DMatrix<f64>, DMatrix<f64>) {
    let big = n + 4;
    // a|k⟩ = √k |k−1⟩
    let lower = DMatrix::from_fn(big, big, |i, j| {
        if j == i + 1 {
            sign * (j as f64).sqrt()
        } else {
            0.0
        }
    });
    let raise = lower.transpose();
    // ξ = (a + a†)/√2, π = i(a† − a)/√2; π² = −(a† − a)²/2 is real
    let xi = (&lower + &raise) / std::f64::consts::SQRT_2;
    let d = &raise - &lower;
    let pi2 = -(&d * &d) / 2.0;
    let xi2 = &xi * &xi;
    let pi4 = &pi2 * &pi2;
    let cut = |m: DMatrix<f64>| m.view((0, 0), (n, n)).into_owned();
    (cut(pi2), cut(xi2), cut(pi4))
}

/// Problem definition: particle mass and oscillator momentum scale, both eV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Oscillator {
    pub mass: f64,
    pub momentum_scale: f64,
}

impl Oscillator {
    pub fn new(mass: f64, momentum_scale: f64) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite() && momentum_scale > 0.0 && momentum_scale.is_finite()) {
            return Err(Error::validation(
                "oscillator mass and momentum scale must be finite and positive",
            ));
        }
        Ok(Oscillator {
            mass,
            momentum_scale,
        })
    }

    /// ω = p₀²/m in eV.
    pub fn omega(&self) -> f64 {
        self.momentum_scale * self.momentum_scale / self.mass
    }

    fn check_beta(&self, beta: f64) -> Result<()> {
        let g = beta * self.momentum_scale * self.momentum_scale;
        if beta.is_nan() || beta < 0.0 || g > MAX_COUPLING {
            return Err(Error::validation(format!(
                "beta = {beta:e} gives beta p0^2 = {g:e}, outside [0, {MAX_COUPLING}]"
            )));
        }
        Ok(())
    }

    fn ground_energy(&self, beta: f64, basis_size: usize, sign: f64) -> f64 {
        let (pi2, xi2, pi4) = ladder_matrices(basis_size, sign);
        let g = beta * self.momentum_scale * self.momentum_scale;
        let h = (pi2 + xi2) * 0.5 + pi4 * (g / 3.0);
        let eig = SymmetricEigen::new(h);
        self.omega() * eig.eigenvalues.min()
    }

    /// ⟨0|p⁴|0⟩ in eV⁴, read off the constructed p⁴ matrix.
    pub fn ground_p4(&self, basis_size: usize) -> f64 {
        let (_, _, pi4) = ladder_matrices(basis_size.max(1), 1.0);
        pi4[(0, 0)] * self.momentum_scale.powi(4)
    }
}

/// Ground energies (eV) for each β in `betas`.
///
/// Fails when growing the basis by 50% moves a ground energy by more than
/// [`TRUNCATION_TOLERANCE`] (relative).
pub fn diag_deformed_oscillator(
    betas: &[f64],
    basis_size: usize,
    osc: &Oscillator,
) -> Result<Vec<(f64, f64)>> {
    diag_deformed_oscillator_within(betas, basis_size, osc, TRUNCATION_TOLERANCE)
}

/// As [`diag_deformed_oscillator`] with an explicit truncation tolerance.
pub fn diag_deformed_oscillator_within(
    betas: &[f64],
    basis_size: usize,
    osc: &Oscillator,
    truncation_tolerance: f64,
) -> Result<Vec<(f64, f64)>> {
    if basis_size < MIN_BASIS {
        return Err(Error::validation(format!(
            "basis size must be at least {MIN_BASIS}, got {basis_size}"
        )));
    }
    let larger = basis_size + basis_size / 2;
    betas
        .iter()
        .map(|&beta| {
            osc.check_beta(beta)?;
            let e = osc.ground_energy(beta, basis_size, 1.0);
            let e_big = osc.ground_energy(beta, larger, 1.0);
            if (e - e_big).abs() > truncation_tolerance * e.abs() {
                return Err(Error::OracleResolution(format!(
                    "ground energy at beta = {beta:e} moved by {:e} when the basis grew \
                     from {basis_size} to {larger}",
                    (e - e_big).abs() / e.abs()
                )));
            }
            Ok((beta, e))
        })
        .collect()
}

/// Numeric dE/dβ at β = 0 against first-order perturbation theory.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeCheck {
    pub oscillator: Oscillator,
    pub basis_size: usize,
    pub betas: Vec<f64>,
    pub ground_energies: Vec<f64>,
    /// Linear coefficient of a least-squares polynomial fit of E(β).
    pub numeric_slope: f64,
    /// ⟨0|p⁴|0⟩ / (3m).
    pub expected_slope: f64,
    pub relative_difference: f64,
}

/// Default β grid: βp₀² ∈ {0, 1e-4, ..., 5e-4}.
pub fn default_betas(osc: &Oscillator) -> Vec<f64> {
    let p2 = osc.momentum_scale * osc.momentum_scale;
    (0..6).map(|i| f64::from(i) * 1e-4 / p2).collect()
}

/// Least-squares fit of E(β) by a polynomial of degree up to 3; returns the
/// linear coefficient.
fn fitted_slope(betas: &[f64], energies: &[f64], beta_scale: f64) -> Result<f64> {
    let degree = (betas.len() - 1).min(3);
    if degree < 1 {
        return Err(Error::validation(
            "slope fit needs at least two beta values",
        ));
    }
    let x = DMatrix::from_fn(betas.len(), degree + 1, |i, k| {
        (betas[i] / beta_scale).powi(k as i32)
    });
    let y = DVector::from_column_slice(energies);
    let coeffs = x
        .svd(true, true)
        .solve(&y, 1e-14)
        .map_err(|e| Error::OracleResolution(format!("slope fit failed: {e}")))?;
    Ok(coeffs[1] / beta_scale)
}

pub fn slope_check(betas: &[f64], basis_size: usize, osc: &Oscillator) -> Result<SlopeCheck> {
    let points = diag_deformed_oscillator(betas, basis_size, osc)?;
    let energies: Vec<f64> = points.iter().map(|&(_, e)| e).collect();
    let beta_scale = betas.iter().copied().fold(0.0, f64::max);
    if beta_scale <= 0.0 {
        return Err(Error::validation("slope fit needs a positive beta value"));
    }
    let numeric_slope = fitted_slope(betas, &energies, beta_scale)?;
    let expected_slope = osc.ground_p4(basis_size) / (3.0 * osc.mass);
    Ok(SlopeCheck {
        oscillator: *osc,
        basis_size,
        betas: betas.to_vec(),
        ground_energies: energies,
        numeric_slope,
        expected_slope,
        relative_difference: ((numeric_slope - expected_slope) / expected_slope).abs(),
    })
}
