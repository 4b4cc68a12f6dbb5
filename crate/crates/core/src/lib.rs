//! Quantum mechanics with a minimal length, applied to hydrogen.
//!
//! The deformed commutator `[x, p] = iħ(1 + βp²)` implies a smallest
//! position uncertainty Δx₀ = ħ√β. To first order in β it shifts hydrogen
//! levels by `(β/3m)⟨p⁴⟩`. Comparing that shift with the precision of Lamb
//! shift and hyperfine measurements bounds Δx₀, and rules out tying Δx₀ to
//! the electron Compton wavelength.
//!
//! Internally ħ = c = 1 and energies are in eV.

pub mod bounds;
pub mod constants;
pub mod deformation;
pub mod energy;
pub mod error;
pub mod hydrogen;
pub mod oracle;

pub use constants::{load_constants, Constants};
pub use deformation::Deformation;
pub use energy::{Energy, EnergyUnit};
pub use error::{Error, Result};
pub use hydrogen::{HydrogenState, PerturbationCoefficient};
