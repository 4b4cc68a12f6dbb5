//! Deformed Heisenberg algebra `[x, p] = iħ(1 + βp²)`.
//!
//! The minimal position uncertainty is Δx₀ = ħ√β. With ħ = c = 1, β carries
//! units of eV⁻² and Δx₀ of eV⁻¹. To first order in β the deformed momentum
//! is represented on ordinary wavefunctions as `p (1 + βp²/3)`, so the
//! kinetic energy picks up `(β/3m) p⁴`.

use serde::Serialize;

use crate::constants::Constants;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Deformation {
    beta: f64,
}

impl Deformation {
    /// The ordinary Heisenberg algebra.
    pub const NONE: Deformation = Deformation { beta: 0.0 };

    /// `beta` in eV⁻²; must be finite and non-negative.
    pub fn from_beta(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::validation(format!(
                "beta must be finite and non-negative, got {beta}"
            )));
        }
        Ok(Deformation { beta })
    }

    /// Minimal length given in meters.
    pub fn from_dx0(dx0_m: f64, c: &Constants) -> Result<Self> {
        if !dx0_m.is_finite() || dx0_m < 0.0 {
            return Err(Error::validation(format!(
                "minimal length must be finite and non-negative, got {dx0_m} m"
            )));
        }
        let natural = dx0_m / c.hbar_c();
        Ok(Deformation {
            beta: natural * natural,
        })
    }

    /// Minimal length equal to the reduced Compton wavelength, β = 1/m².
    pub fn sastry(c: &Constants) -> Self {
        Self::from_dx0(c.compton_wavelength(), c).expect("Compton wavelength is positive")
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Δx₀ = √β in eV⁻¹.
    pub fn dx0_natural(&self) -> f64 {
        self.beta.sqrt()
    }

    /// Δx₀ in meters.
    pub fn dx0_in_meters(&self, c: &Constants) -> f64 {
        self.dx0_natural() * c.hbar_c()
    }

    /// The factor `1 + βp²` multiplying iħ in the commutator.
    pub fn factor(&self, p: f64) -> f64 {
        1.0 + self.beta * p * p
    }

    /// Scales β by `k ≥ 0`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::from_beta(self.beta * k)
    }
}
