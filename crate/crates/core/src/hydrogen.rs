//! Closed-form hydrogen physics: Bohr levels, momentum moments, the
//! first-order minimal-length shift and the standard α⁴ corrections.
//!
//! All energies are returned in eV, momenta in eV, lengths in eV⁻¹.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constants::Constants;
use crate::deformation::Deformation;
use crate::energy::Energy;
use crate::error::{Error, Result};

/// Largest n accepted by [`radial_wavefunction`].
pub const MAX_WAVEFUNCTION_N: u32 = 12;

const SHELLS: [char; 5] = ['s', 'p', 'd', 'f', 'g'];

/// A hydrogenic level `(n, l, j)`. `j` is stored doubled so it stays integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HydrogenState {
    n: u32,
    l: u32,
    two_j: Option<u32>,
}

impl HydrogenState {
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("principal quantum number must be >= 1"));
        }
        if l >= n {
            return Err(Error::validation(format!(
                "orbital quantum number l = {l} must be below n = {n}"
            )));
        }
        Ok(HydrogenState { n, l, two_j: None })
    }

    /// `two_j` is 2j, e.g. 3 for j = 3/2.
    pub fn with_two_j(n: u32, l: u32, two_j: u32) -> Result<Self> {
        let s = Self::new(n, l)?;
        let ok = two_j % 2 == 1 && (two_j == 2 * l + 1 || (l > 0 && two_j == 2 * l - 1));
        if !ok {
            return Err(Error::validation(format!(
                "j = {two_j}/2 is not l ± 1/2 for l = {l}"
            )));
        }
        Ok(HydrogenState {
            two_j: Some(two_j),
            ..s
        })
    }

    pub fn ground() -> Self {
        HydrogenState {
            n: 1,
            l: 0,
            two_j: Some(1),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn two_j(&self) -> Option<u32> {
        self.two_j
    }

    pub fn j(&self) -> Option<f64> {
        self.two_j.map(|t| f64::from(t) / 2.0)
    }

    /// Fills in j = l + 1/2 when absent. The flag reports whether it did.
    pub fn with_default_j(self) -> (Self, bool) {
        match self.two_j {
            Some(_) => (self, false),
            None => (
                HydrogenState {
                    two_j: Some(2 * self.l + 1),
                    ..self
                },
                true,
            ),
        }
    }

    pub fn is_ground(&self) -> bool {
        self.n == 1
    }

    fn nf(&self) -> f64 {
        f64::from(self.n)
    }
}

impl fmt::Display for HydrogenState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shell = SHELLS
            .get(self.l as usize)
            .copied()
            .map(String::from)
            .unwrap_or_else(|| format!("[l={}]", self.l));
        write!(f, "{}{}", self.n, shell)?;
        if let Some(t) = self.two_j {
            write!(f, "{t}/2")?;
        }
        Ok(())
    }
}

/// Spectroscopic notation: `1s`, `2p`, `2p3/2`, case-insensitive.
impl FromStr for HydrogenState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::validation(format!("malformed state `{s}` (expected e.g. 1s, 2p3/2)"));
        let shell_at = lower
            .find(|ch: char| ch.is_ascii_alphabetic())
            .ok_or_else(bad)?;
        let n: u32 = lower[..shell_at].parse().map_err(|_| bad())?;
        let mut rest = lower[shell_at..].chars();
        let shell = rest.next().ok_or_else(bad)?;
        let l = SHELLS.iter().position(|&c| c == shell).ok_or_else(bad)? as u32;
        let j_part = rest.as_str();
        if j_part.is_empty() {
            return Self::new(n, l);
        }
        let (num, den) = j_part.split_once('/').ok_or_else(bad)?;
        if den != "2" {
            return Err(bad());
        }
        let two_j: u32 = num.parse().map_err(|_| bad())?;
        Self::with_two_j(n, l, two_j)
    }
}

/// Coefficient `k` of the perturbation `H' = k (β/m) p⁴`.
///
/// The default 1/3 follows from representing the deformed momentum as
/// `p (1 + βp²/3)`; other values describe other first-order conventions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerturbationCoefficient(f64);

impl PerturbationCoefficient {
    pub const DEFAULT: PerturbationCoefficient = PerturbationCoefficient(1.0 / 3.0);

    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || k < 0.0 {
            return Err(Error::validation(format!(
                "perturbation coefficient must be finite and non-negative, got {k}"
            )));
        }
        Ok(PerturbationCoefficient(k))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl Default for PerturbationCoefficient {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// −mα²/(2n²).
pub fn bohr_energy(s: &HydrogenState, c: &Constants) -> Energy {
    let (m, a) = (c.electron_mass(), c.alpha());
    Energy::ev(-m * a * a / (2.0 * s.nf() * s.nf()))
}

/// ⟨p²⟩ = (mα/n)² in eV².
pub fn exp_p2(s: &HydrogenState, c: &Constants) -> f64 {
    let p = c.electron_mass() * c.alpha() / s.nf();
    p * p
}

/// ⟨p⁴⟩ = m⁴α⁴ [8n/(2l+1) − 3] / n⁴ in eV⁴.
pub fn exp_p4(s: &HydrogenState, c: &Constants) -> f64 {
    let n = s.nf();
    let ma = c.electron_mass() * c.alpha();
    let ma2 = ma * ma;
    ma2 * ma2 * (8.0 * n / f64::from(2 * s.l + 1) - 3.0) / (n * n * n * n)
}

/// Shift per unit β, `k ⟨p⁴⟩ / m`, in eV per eV⁻².
pub fn smearing_shift_per_beta(
    s: &HydrogenState,
    c: &Constants,
    k: PerturbationCoefficient,
) -> f64 {
    k.value() * exp_p4(s, c) / c.electron_mass()
}

/// First-order minimal-length shift with the default coefficient, (β/3m)⟨p⁴⟩.
pub fn smearing_shift(s: &HydrogenState, d: &Deformation, c: &Constants) -> Energy {
    smearing_shift_with(s, d, c, PerturbationCoefficient::DEFAULT)
}

pub fn smearing_shift_with(
    s: &HydrogenState,
    d: &Deformation,
    c: &Constants,
    k: PerturbationCoefficient,
) -> Energy {
    Energy::ev(d.beta() * smearing_shift_per_beta(s, c, k))
}

/// Relativistic kinetic correction −⟨p⁴⟩/(8m³).
pub fn relativistic_kinetic(s: &HydrogenState, c: &Constants) -> Energy {
    let m = c.electron_mass();
    Energy::ev(-exp_p4(s, c) / (8.0 * m * m * m))
}

/// Combined relativistic and spin-orbit shift −(mα⁴/2n⁴)(n/(j+½) − ¾).
pub fn fine_structure(s: &HydrogenState, c: &Constants) -> Result<Energy> {
    let two_j = s.two_j.ok_or_else(|| {
        Error::validation(format!(
            "fine structure of {s} needs j; supply it as e.g. {s}{}/2",
            2 * s.l + 1
        ))
    })?;
    let n = s.nf();
    let a2 = c.alpha() * c.alpha();
    let ma4 = c.electron_mass() * a2 * a2;
    let j_half = (f64::from(two_j) + 1.0) / 2.0;
    Ok(Energy::ev(-(ma4 / (2.0 * n.powi(4))) * (n / j_half - 0.75)))
}

/// Generalized Laguerre polynomial L_k^(alpha)(x) by upward recurrence.
pub fn laguerre(k: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for i in 1..k {
        let i = f64::from(i);
        let next = ((2.0 * i + 1.0 + alpha - x) * cur - (i + alpha) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Normalized radial function R_nl(r) with r in eV⁻¹, so ∫R² r² dr = 1.
pub fn radial_wavefunction(s: &HydrogenState, r: f64, c: &Constants) -> Result<f64> {
    if s.n > MAX_WAVEFUNCTION_N {
        return Err(Error::Capability(format!(
            "radial wavefunctions are limited to n <= {MAX_WAVEFUNCTION_N}, got n = {}",
            s.n
        )));
    }
    if r.is_nan() || r < 0.0 {
        return Err(Error::validation(format!("radius must be >= 0, got {r}")));
    }
    let (n, l) = (s.n, s.l);
    let nf = f64::from(n);
    let a = c.bohr_length();
    let scale = 2.0 / (nf * a);
    let norm = (scale.powi(3) * factorial(n - l - 1) / (2.0 * nf * factorial(n + l))).sqrt();
    let rho = scale * r;
    Ok(norm
        * (-rho / 2.0).exp()
        * rho.powi(l as i32)
        * laguerre(n - l - 1, f64::from(2 * l + 1), rho))
}

/// All corrections for one level, in eV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftBreakdown {
    pub state: HydrogenState,
    /// True when j was not given and l + 1/2 was assumed.
    pub j_defaulted: bool,
    pub bohr: Energy,
    pub relativistic_kinetic: Energy,
    pub fine_structure: Energy,
    /// 1S only.
    pub lamb_reference: Option<Energy>,
    /// 1S only.
    pub hyperfine_reference: Option<Energy>,
    pub smearing: Energy,
    pub deformation: Deformation,
    pub coefficient: PerturbationCoefficient,
}

pub fn level_breakdown(
    s: &HydrogenState,
    d: &Deformation,
    c: &Constants,
) -> Result<ShiftBreakdown> {
    level_breakdown_with(s, d, c, PerturbationCoefficient::DEFAULT)
}

pub fn level_breakdown_with(
    s: &HydrogenState,
    d: &Deformation,
    c: &Constants,
    k: PerturbationCoefficient,
) -> Result<ShiftBreakdown> {
    let (state, j_defaulted) = s.with_default_j();
    let ground_s = state.n == 1 && state.l == 0;
    let reference = |e: Energy| ground_s.then(|| Energy::ev(e.to_ev(c)));
    Ok(ShiftBreakdown {
        state,
        j_defaulted,
        bohr: bohr_energy(&state, c),
        relativistic_kinetic: relativistic_kinetic(&state, c),
        fine_structure: fine_structure(&state, c)?,
        lamb_reference: reference(c.lamb_shift_1s()),
        hyperfine_reference: reference(c.hyperfine_1s()),
        smearing: smearing_shift_with(&state, d, c, k),
        deformation: *d,
        coefficient: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::EnergyUnit;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn st(s: &str) -> HydrogenState {
        s.parse().unwrap()
    }

    fn ma4(c: &Constants) -> f64 {
        c.electron_mass() * c.alpha().powi(4)
    }

    #[test]
    fn state_parsing() {
        assert_eq!(st("1s"), HydrogenState::new(1, 0).unwrap());
        assert_eq!(st("2P3/2"), HydrogenState::with_two_j(2, 1, 3).unwrap());
        assert_eq!(st("2p1/2").j(), Some(0.5));
        assert_eq!(st("5g9/2").l(), 4);
        assert_eq!(st("10d").n(), 10);
        for bad in [
            "", "s", "1x", "1p", "2s3/2", "2p5/2", "2p3/4", "2p3", "0s", "1s1/2x",
        ] {
            assert!(bad.parse::<HydrogenState>().is_err(), "{bad} should fail");
        }
        assert!(HydrogenState::with_two_j(1, 0, 1).is_ok());
        assert!(HydrogenState::with_two_j(1, 0, 2).is_err());
    }

    #[test]
    fn state_display_round_trips() {
        for s in ["1s", "2p3/2", "3d5/2", "4f"] {
            assert_eq!(st(s).to_string(), s);
        }
    }

    #[test]
    fn bohr_ground_level() {
        let c = Constants::codata2018();
        let e = bohr_energy(&st("1s"), &c).magnitude();
        assert!((e + 13.6057).abs() < 1e-3);
        let e4 = bohr_energy(&st("4s"), &c).magnitude();
        assert!(rel(e4, e / 16.0) < 1e-15);
        assert_eq!(bohr_energy(&st("3s"), &c), bohr_energy(&st("3d5/2"), &c));
    }

    #[test]
    fn p2_moments() {
        let c = Constants::codata2018();
        assert!((exp_p2(&st("1s"), &c) - 1.39058e7).abs() < 1e3);
        assert!(rel(exp_p2(&st("2s"), &c), exp_p2(&st("1s"), &c) / 4.0) < 1e-15);
    }

    #[test]
    fn virial_identity() {
        let c = Constants::codata2018();
        for n in 1..=10 {
            for l in 0..n {
                let s = HydrogenState::new(n, l).unwrap();
                let kinetic = exp_p2(&s, &c) / (2.0 * c.electron_mass());
                assert!(rel(kinetic, -bohr_energy(&s, &c).magnitude()) < 1e-12);
            }
        }
    }

    #[test]
    fn p4_closed_form_coefficients() {
        let c = Constants::codata2018();
        let m4a4 = (c.electron_mass() * c.alpha()).powi(4);
        assert!(rel(exp_p4(&st("1s"), &c), 5.0 * m4a4) < 1e-14);
        assert!(rel(exp_p4(&st("2p"), &c), 7.0 / 48.0 * m4a4) < 1e-14);
    }

    #[test]
    fn p4_positive_up_to_n50() {
        let c = Constants::codata2018();
        for n in 1..=50 {
            for l in 0..n {
                assert!(exp_p4(&HydrogenState::new(n, l).unwrap(), &c) > 0.0);
            }
        }
    }

    #[test]
    fn smearing_values() {
        let c = Constants::codata2018();
        let d = Deformation::sastry(&c);
        let s = st("1s");
        assert_eq!(smearing_shift(&s, &Deformation::NONE, &c).magnitude(), 0.0);
        let e = smearing_shift(&s, &d, &c).magnitude();
        assert!((e - 2.415e-3).abs() < 1e-6);
        assert!(rel(e / ma4(&c), 5.0 / 3.0) < 1e-12);
        let half = smearing_shift(&s, &d.scaled(0.5).unwrap(), &c).magnitude();
        assert_eq!(half, e / 2.0);
    }

    #[test]
    fn relativistic_kinetic_values() {
        let c = Constants::codata2018();
        let s = st("1s");
        let rk = relativistic_kinetic(&s, &c).magnitude();
        assert!((rk + 9.056e-4).abs() < 1e-6);
        let sm = smearing_shift(&s, &Deformation::sastry(&c), &c).magnitude();
        assert!(rel(sm / rk.abs(), 8.0 / 3.0) < 1e-12);
        for n in 1..=8 {
            for l in 0..n {
                let s = HydrogenState::new(n, l).unwrap();
                assert!(relativistic_kinetic(&s, &c).magnitude() < 0.0);
            }
        }
    }

    #[test]
    fn fine_structure_values() {
        let c = Constants::codata2018();
        let split = fine_structure(&st("2p3/2"), &c).unwrap().magnitude()
            - fine_structure(&st("2p1/2"), &c).unwrap().magnitude();
        assert!(rel(split, ma4(&c) / 32.0) < 1e-12);
        assert!(rel(split, 4.528e-5) < 1e-3);
        // measured 2P fine-structure interval, 10.969 GHz
        let ghz = Energy::ev(split).convert(EnergyUnit::GHz, &c).magnitude();
        assert!(rel(ghz, 10.969) < 0.005);

        let g = fine_structure(&st("1s1/2"), &c).unwrap().magnitude();
        assert!(rel(g, -ma4(&c) / 8.0) < 1e-14);
        assert_eq!(
            fine_structure(&st("2s1/2"), &c).unwrap(),
            fine_structure(&st("2p1/2"), &c).unwrap()
        );
        assert!(matches!(
            fine_structure(&st("2p"), &c),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn ground_radial_closed_form() {
        let c = Constants::codata2018();
        let a = c.bohr_length();
        let s = st("1s");
        let r0 = radial_wavefunction(&s, 0.0, &c).unwrap();
        assert!(rel(r0, 2.0 * a.powf(-1.5)) < 1e-14);
        for x in [0.3, 1.0, 4.0] {
            let r = x * a;
            let v = radial_wavefunction(&s, r, &c).unwrap();
            assert!(rel(v, 2.0 * a.powf(-1.5) * (-x).exp()) < 1e-13);
        }
    }

    #[test]
    fn radial_2s_2p_closed_forms() {
        let c = Constants::codata2018();
        let a = c.bohr_length();
        let x: f64 = 1.7;
        let r = x * a;
        let r20 = (2.0 * a * a * a).powf(-0.5) * (1.0 - x / 2.0) * (-x / 2.0).exp();
        let r21 = (24.0 * a * a * a).powf(-0.5) * x * (-x / 2.0).exp();
        assert!(rel(radial_wavefunction(&st("2s"), r, &c).unwrap(), r20) < 1e-13);
        assert!(rel(radial_wavefunction(&st("2p"), r, &c).unwrap(), r21) < 1e-13);
    }

    #[test]
    fn radial_guard() {
        let c = Constants::codata2018();
        let s = HydrogenState::new(13, 0).unwrap();
        assert!(matches!(
            radial_wavefunction(&s, 1.0, &c),
            Err(Error::Capability(_))
        ));
        assert!(radial_wavefunction(&st("12s"), 1e-4, &c).is_ok());
        assert!(radial_wavefunction(&st("1s"), -1.0, &c).is_err());
    }

    #[test]
    fn breakdown_ground_sastry() {
        let c = Constants::codata2018();
        let b = level_breakdown(&st("1s"), &Deformation::sastry(&c), &c).unwrap();
        assert!(b.j_defaulted);
        assert_eq!(b.state.two_j(), Some(1));
        let sm = b.smearing.magnitude();
        let lamb = b.lamb_reference.unwrap().magnitude();
        let hfs = b.hyperfine_reference.unwrap().magnitude();
        assert!((sm / lamb - 71.45).abs() < 0.1);
        assert!((sm / hfs - 411.1).abs() < 0.5);
        assert!(sm > b.relativistic_kinetic.magnitude().abs());
        assert!(b.relativistic_kinetic.magnitude().abs() > lamb);
        assert!(lamb > hfs);
        assert!(b.bohr.magnitude() < 0.0);
    }

    #[test]
    fn breakdown_undeformed_and_excited() {
        let c = Constants::codata2018();
        let d = Deformation::sastry(&c);
        let b0 = level_breakdown(&st("1s"), &Deformation::NONE, &c).unwrap();
        let b1 = level_breakdown(&st("1s"), &d, &c).unwrap();
        assert_eq!(b0.smearing.magnitude(), 0.0);
        assert_eq!(b0.relativistic_kinetic, b1.relativistic_kinetic);
        assert_eq!(b0.fine_structure, b1.fine_structure);
        assert_eq!(b0.lamb_reference, b1.lamb_reference);

        let b2 = level_breakdown(&st("2p"), &d, &c).unwrap();
        assert!(b2.lamb_reference.is_none() && b2.hyperfine_reference.is_none());
        let m = c.electron_mass();
        let expected = d.beta() / (3.0 * m) * 7.0 / 48.0 * (m * c.alpha()).powi(4);
        assert!(rel(b2.smearing.magnitude(), expected) < 1e-13);
    }

    proptest! {
        #[test]
        fn smearing_linear_in_beta(k in 0.0f64..1e3, n in 1u32..8) {
            let c = Constants::codata2018();
            let s = HydrogenState::new(n, 0).unwrap();
            let d = Deformation::sastry(&c);
            let base = smearing_shift(&s, &d, &c).magnitude();
            let scaled = smearing_shift(&s, &d.scaled(k).unwrap(), &c).magnitude();
            prop_assert!((scaled - k * base).abs() <= 4.0 * f64::EPSILON * (k * base).abs());
        }

        #[test]
        fn smearing_non_negative(beta in 0.0f64..1e-9, n in 1u32..10, l_frac in 0.0f64..1.0) {
            let c = Constants::codata2018();
            let l = ((n as f64) * l_frac) as u32;
            let s = HydrogenState::new(n, l.min(n - 1)).unwrap();
            let d = Deformation::from_beta(beta).unwrap();
            prop_assert!(smearing_shift(&s, &d, &c).magnitude() >= 0.0);
        }
    }
}
