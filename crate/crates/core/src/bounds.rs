//! Bounds on the minimal length from spectroscopic agreement.
//!
//! The first-order shift is linear in β, so requiring it to stay below an
//! experimental agreement tolerance gives β_max = tolerance / (shift per β).
//! Setting Δx₀ to the Compton wavelength instead gives a definite shift. The
//! ratio of that shift to the tolerance decides whether the identification
//! survives.

use std::fmt;

use serde::Serialize;

use crate::constants::Constants;
use crate::deformation::Deformation;
use crate::energy::{Energy, EnergyUnit};
use crate::error::{Error, Result};
use crate::hydrogen::{
    level_breakdown_with, smearing_shift_per_beta, HydrogenState, PerturbationCoefficient,
    ShiftBreakdown,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Excluded,
    Allowed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Excluded => "excluded",
            Verdict::Allowed => "allowed",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub state: HydrogenState,
    /// Second state when the tolerance applies to a transition.
    pub transition: Option<HydrogenState>,
    pub tolerance: Energy,
    /// eV⁻².
    pub beta_max: f64,
    pub dx0_max_m: f64,
    /// dx0_max over the reduced Compton wavelength.
    pub compton_ratio: f64,
    /// Shift with Δx₀ equal to the Compton wavelength, in eV.
    pub shift_at_compton: Energy,
    /// shift_at_compton / tolerance.
    pub exclusion_factor: f64,
    pub verdict: Verdict,
}

fn tolerance_ev(tolerance: Energy, c: &Constants) -> Result<f64> {
    let t = tolerance.to_ev(c);
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::validation(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    Ok(t)
}

/// Shift per unit β of one level, or of the difference between two levels.
fn shift_per_beta(s: &HydrogenState, other: Option<&HydrogenState>, c: &Constants) -> Result<f64> {
    let k = PerturbationCoefficient::DEFAULT;
    let own = smearing_shift_per_beta(s, c, k);
    match other {
        None => Ok(own),
        Some(o) => {
            let diff = (own - smearing_shift_per_beta(o, c, k)).abs();
            if diff == 0.0 {
                return Err(Error::validation(format!(
                    "{s} and {o} shift identically; the transition does not constrain beta"
                )));
            }
            Ok(diff)
        }
    }
}

/// Largest β whose first-order shift of `s` stays within `tolerance`.
pub fn max_deformation(s: &HydrogenState, tolerance: Energy, c: &Constants) -> Result<Deformation> {
    let t = tolerance_ev(tolerance, c)?;
    Deformation::from_beta(t / shift_per_beta(s, None, c)?)
}

/// Largest β whose shift of the `s → other` transition stays within `tolerance`.
pub fn max_deformation_transition(
    s: &HydrogenState,
    other: &HydrogenState,
    tolerance: Energy,
    c: &Constants,
) -> Result<Deformation> {
    let t = tolerance_ev(tolerance, c)?;
    Deformation::from_beta(t / shift_per_beta(s, Some(other), c)?)
}

pub fn bound_report(s: &HydrogenState, tolerance: Energy, c: &Constants) -> Result<BoundReport> {
    build_report(s, None, tolerance, c)
}

/// Bound from the agreement on the energy difference between `s` and `other`.
pub fn bound_report_transition(
    s: &HydrogenState,
    other: &HydrogenState,
    tolerance: Energy,
    c: &Constants,
) -> Result<BoundReport> {
    build_report(s, Some(other), tolerance, c)
}

fn build_report(
    s: &HydrogenState,
    other: Option<&HydrogenState>,
    tolerance: Energy,
    c: &Constants,
) -> Result<BoundReport> {
    let t = tolerance_ev(tolerance, c)?;
    let per_beta = shift_per_beta(s, other, c)?;
    let max = Deformation::from_beta(t / per_beta)?;
    let dx0_max_m = max.dx0_in_meters(c);
    let shift = Deformation::sastry(c).beta() * per_beta;
    let exclusion_factor = shift / t;
    Ok(BoundReport {
        state: *s,
        transition: other.copied(),
        tolerance,
        beta_max: max.beta(),
        dx0_max_m,
        compton_ratio: dx0_max_m / c.compton_wavelength(),
        shift_at_compton: Energy::ev(shift),
        exclusion_factor,
        verdict: if exclusion_factor > 1.0 {
            Verdict::Excluded
        } else {
            Verdict::Allowed
        },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub label: &'static str,
    pub value_ev: f64,
    pub value_mhz: f64,
}

/// Smearing shift next to the relativistic kinetic correction and, for 1S,
/// the Lamb shift and hyperfine references, sorted by decreasing magnitude.
pub fn comparison_table(
    s: &HydrogenState,
    d: &Deformation,
    c: &Constants,
) -> Result<Vec<ComparisonRow>> {
    let b = level_breakdown_with(s, d, c, PerturbationCoefficient::DEFAULT)?;
    Ok(comparison_from_breakdown(&b, c))
}

pub fn comparison_from_breakdown(b: &ShiftBreakdown, c: &Constants) -> Vec<ComparisonRow> {
    let mut entries = vec![
        ("smearing", Some(b.smearing)),
        ("relativistic_kinetic", Some(b.relativistic_kinetic)),
        ("lamb_reference", b.lamb_reference),
        ("hyperfine_reference", b.hyperfine_reference),
    ]
    .into_iter()
    .filter_map(|(label, e)| {
        e.map(|e| ComparisonRow {
            label,
            value_ev: e.to_ev(c),
            value_mhz: e.convert(EnergyUnit::MHz, c).magnitude(),
        })
    })
    .collect::<Vec<_>>();
    entries.sort_by(|a, b| b.value_ev.abs().total_cmp(&a.value_ev.abs()));
    entries
}
