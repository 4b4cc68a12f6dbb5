use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::Constants;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EnergyUnit {
    #[serde(rename = "eV")]
    EV,
    MHz,
    GHz,
}

impl EnergyUnit {
    pub const ALL: [EnergyUnit; 3] = [EnergyUnit::EV, EnergyUnit::MHz, EnergyUnit::GHz];

    /// Energy in eV of one unit, using E = hν for frequencies.
    fn ev_per_unit(self, c: &Constants) -> f64 {
        match self {
            EnergyUnit::EV => 1.0,
            EnergyUnit::MHz => c.planck_h() * 1e6,
            EnergyUnit::GHz => c.planck_h() * 1e9,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EnergyUnit::EV => "eV",
            EnergyUnit::MHz => "MHz",
            EnergyUnit::GHz => "GHz",
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ev" => Ok(EnergyUnit::EV),
            "mhz" => Ok(EnergyUnit::MHz),
            "ghz" => Ok(EnergyUnit::GHz),
            _ => Err(Error::validation(format!(
                "unknown energy unit `{s}` (expected eV, MHz or GHz)"
            ))),
        }
    }
}

/// An energy magnitude tagged with its unit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Energy {
    magnitude: f64,
    unit: EnergyUnit,
}

impl Energy {
    pub fn new(magnitude: f64, unit: EnergyUnit) -> Self {
        Energy { magnitude, unit }
    }

    pub fn ev(magnitude: f64) -> Self {
        Energy::new(magnitude, EnergyUnit::EV)
    }

    pub fn mhz(magnitude: f64) -> Self {
        Energy::new(magnitude, EnergyUnit::MHz)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn unit(&self) -> EnergyUnit {
        self.unit
    }

    /// Same physical energy expressed in `target`.
    pub fn convert(self, target: EnergyUnit, c: &Constants) -> Energy {
        if self.unit == target {
            return self;
        }
        let ev = self.magnitude * self.unit.ev_per_unit(c);
        Energy::new(ev / target.ev_per_unit(c), target)
    }

    /// Magnitude in eV.
    pub fn to_ev(self, c: &Constants) -> f64 {
        self.convert(EnergyUnit::EV, c).magnitude
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.magnitude, self.unit)
    }
}

/// Parses `"1MHz"`, `"0.1 MHz"`, `"2.4e-3eV"`.
impl FromStr for Energy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .find(|ch: char| ch.is_ascii_alphabetic() && ch != 'e' && ch != 'E')
            .ok_or_else(|| Error::validation(format!("energy `{s}` lacks a unit")))?;
        // "eV" starts with 'e', so back up if the unit is eV
        let split = if s[..split].ends_with(['e', 'E']) && s[split..].starts_with(['V', 'v']) {
            split - 1
        } else {
            split
        };
        let (num, unit) = s.split_at(split);
        let magnitude: f64 = num
            .trim()
            .parse()
            .map_err(|_| Error::validation(format!("energy `{s}` has a malformed magnitude")))?;
        Ok(Energy::new(magnitude, unit.trim().parse()?))
    }
}
