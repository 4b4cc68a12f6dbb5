//! Physical constants and experimental reference data.
//!
//! Everything downstream works in natural units (ħ = c = 1) with energies in
//! eV. Lengths in meters only appear at the boundary, through `hbar_c`.
//!
//! Bundled defaults are CODATA 2018 plus the 1S Lamb shift and 1S hyperfine
//! splitting, with theory/experiment agreement of 1 MHz and 0.1 MHz.

use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::energy::{Energy, EnergyUnit};
use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../data/codata2018.json");

/// Keys of the constants file, in the order they are reported.
pub const KEYS: [&str; 8] = [
    "alpha",
    "electron_mass_ev",
    "hbar_c_ev_m",
    "planck_h_ev_s",
    "lamb_shift_1s_mhz",
    "hyperfine_1s_mhz",
    "lamb_agreement_mhz",
    "hyperfine_agreement_mhz",
];

/// Raw numeric contents of a constants file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantValues {
    pub alpha: f64,
    pub electron_mass_ev: f64,
    pub hbar_c_ev_m: f64,
    pub planck_h_ev_s: f64,
    pub lamb_shift_1s_mhz: f64,
    pub hyperfine_1s_mhz: f64,
    pub lamb_agreement_mhz: f64,
    pub hyperfine_agreement_mhz: f64,
}

impl ConstantValues {
    fn slot(&mut self, key: &str) -> Option<&mut f64> {
        Some(match key {
            "alpha" => &mut self.alpha,
            "electron_mass_ev" => &mut self.electron_mass_ev,
            "hbar_c_ev_m" => &mut self.hbar_c_ev_m,
            "planck_h_ev_s" => &mut self.planck_h_ev_s,
            "lamb_shift_1s_mhz" => &mut self.lamb_shift_1s_mhz,
            "hyperfine_1s_mhz" => &mut self.hyperfine_1s_mhz,
            "lamb_agreement_mhz" => &mut self.lamb_agreement_mhz,
            "hyperfine_agreement_mhz" => &mut self.hyperfine_agreement_mhz,
            _ => return None,
        })
    }

    /// `(key, value)` pairs in file order.
    pub fn entries(&self) -> [(&'static str, f64); 8] {
        [
            (KEYS[0], self.alpha),
            (KEYS[1], self.electron_mass_ev),
            (KEYS[2], self.hbar_c_ev_m),
            (KEYS[3], self.planck_h_ev_s),
            (KEYS[4], self.lamb_shift_1s_mhz),
            (KEYS[5], self.hyperfine_1s_mhz),
            (KEYS[6], self.lamb_agreement_mhz),
            (KEYS[7], self.hyperfine_agreement_mhz),
        ]
    }
}

/// Validated, immutable set of constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    values: ConstantValues,
}

impl Constants {
    /// Validates `values`, including the physical window on alpha.
    pub fn new(values: ConstantValues) -> Result<Self> {
        let c = Self::new_unrestricted(values)?;
        if !(1.0 / 138.0 < values.alpha && values.alpha < 1.0 / 137.0) {
            return Err(Error::validation(format!(
                "alpha = {} lies outside (1/138, 1/137)",
                values.alpha
            )));
        }
        Ok(c)
    }

    /// Only requires every value to be finite and strictly positive.
    ///
    /// Used for hypothetical worlds (scaled masses, alpha = 1) in scaling checks.
    pub fn new_unrestricted(values: ConstantValues) -> Result<Self> {
        for (key, v) in values.entries() {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::validation(format!(
                    "`{key}` must be finite and strictly positive, got {v}"
                )));
            }
        }
        Ok(Constants { values })
    }

    /// The bundled CODATA 2018 dataset.
    pub fn codata2018() -> Self {
        Self::from_json_complete(BUNDLED).expect("bundled constants are valid")
    }

    /// Parses a file that must define every key.
    pub fn from_json_complete(text: &str) -> Result<Self> {
        let map = parse_object(text)?;
        let mut values = ConstantValues {
            alpha: f64::NAN,
            electron_mass_ev: f64::NAN,
            hbar_c_ev_m: f64::NAN,
            planck_h_ev_s: f64::NAN,
            lamb_shift_1s_mhz: f64::NAN,
            hyperfine_1s_mhz: f64::NAN,
            lamb_agreement_mhz: f64::NAN,
            hyperfine_agreement_mhz: f64::NAN,
        };
        if let Some(key) = KEYS.iter().find(|k| !map.contains_key(**k)) {
            return Err(Error::MissingKey {
                key: key.to_string(),
            });
        }
        apply(&mut values, &map)?;
        Self::new(values)
    }

    /// Parses a file whose keys override `base`; absent keys keep the base value.
    pub fn from_json_overlay(text: &str, base: &Constants) -> Result<Self> {
        let map = parse_object(text)?;
        let mut values = base.values;
        apply(&mut values, &map)?;
        Self::new(values)
    }

    pub fn values(&self) -> &ConstantValues {
        &self.values
    }

    pub fn alpha(&self) -> f64 {
        self.values.alpha
    }

    /// Electron rest energy in eV.
    pub fn electron_mass(&self) -> f64 {
        self.values.electron_mass_ev
    }

    /// ħc in eV·m.
    pub fn hbar_c(&self) -> f64 {
        self.values.hbar_c_ev_m
    }

    /// Planck constant in eV·s.
    pub fn planck_h(&self) -> f64 {
        self.values.planck_h_ev_s
    }

    pub fn lamb_shift_1s(&self) -> Energy {
        Energy::new(self.values.lamb_shift_1s_mhz, EnergyUnit::MHz)
    }

    pub fn hyperfine_1s(&self) -> Energy {
        Energy::new(self.values.hyperfine_1s_mhz, EnergyUnit::MHz)
    }

    pub fn lamb_agreement(&self) -> Energy {
        Energy::new(self.values.lamb_agreement_mhz, EnergyUnit::MHz)
    }

    pub fn hyperfine_agreement(&self) -> Energy {
        Energy::new(self.values.hyperfine_agreement_mhz, EnergyUnit::MHz)
    }

    /// Reduced Compton wavelength ħ/(mc) in meters.
    pub fn compton_wavelength(&self) -> f64 {
        self.hbar_c() / self.electron_mass()
    }

    /// Bohr radius ħ/(mcα) in meters.
    pub fn bohr_radius(&self) -> f64 {
        self.hbar_c() / (self.electron_mass() * self.alpha())
    }

    /// Bohr radius in natural units (eV⁻¹), 1/(mα).
    pub fn bohr_length(&self) -> f64 {
        1.0 / (self.electron_mass() * self.alpha())
    }

    /// Copy with a different particle mass. Skips the alpha window check.
    pub fn with_electron_mass(&self, mass_ev: f64) -> Result<Self> {
        let mut values = self.values;
        values.electron_mass_ev = mass_ev;
        Self::new_unrestricted(values)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::codata2018()
    }
}

/// Loads constants from `path`, or the bundled dataset when `path` is `None`.
///
/// Keys present in the file override the bundled values. Unknown keys are
/// logged as warnings.
pub fn load_constants(path: Option<&Path>) -> Result<Constants> {
    let base = Constants::codata2018();
    match path {
        None => Ok(base),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| Error::Io {
                path: p.display().to_string(),
                source,
            })?;
            Constants::from_json_overlay(&text, &base)
        }
    }
}

fn parse_object(text: &str) -> Result<Map<String, Value>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Format {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    match value {
        Value::Object(map) => Ok(map),
        _ => Err(Error::Format {
            line: 1,
            column: 1,
            message: "top-level value must be a JSON object".into(),
        }),
    }
}

fn apply(values: &mut ConstantValues, map: &Map<String, Value>) -> Result<()> {
    for (key, value) in map {
        match values.slot(key) {
            Some(slot) => {
                *slot = value.as_f64().ok_or_else(|| {
                    Error::validation(format!("`{key}` must be a number, got {value}"))
                })?;
            }
            None => log::warn!("ignoring unknown constants key `{key}`"),
        }
    }
    Ok(())
}
