//! Command execution: configuration in, exit code and rendered bytes out.

use std::path::Path;

use smeared_core::bounds::{
    bound_report, bound_report_transition, comparison_from_breakdown, BoundReport,
};
use smeared_core::hydrogen::{exp_p4, level_breakdown_with, ShiftBreakdown};
use smeared_core::oracle::{
    default_betas, default_quadrature_grid, expectation_p4_numeric, level_check, slope_check,
    Oscillator, EXPECTATION_TOLERANCE, LEVEL_TOLERANCE, MAX_ORACLE_N, SLOPE_TOLERANCE,
};
use smeared_core::{
    load_constants, Constants, Deformation, Energy, EnergyUnit, HydrogenState,
    PerturbationCoefficient, Result,
};

use crate::config::{Command, DeformationSpec, Format, OracleCheck, RunConfig};
use crate::report::{render, Report, Value};

/// Refinement cap for the eigenvalue oracle.
pub const MAX_LEVEL_REFINEMENTS: u32 = 6;
/// Oscillator basis used by the slope check.
pub const SLOPE_BASIS: usize = 40;
/// Accepted error ratio per grid halving for a second-order scheme.
pub const CONVERGENCE_RATIO_RANGE: (f64, f64) = (3.5, 4.5);
/// Highest n examined per l when `oracle --check levels` has no `--n`.
const LEVELS_PER_L: u32 = 3;

/// What a finished command hands back to the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a parsed command. Computation errors give exit code 1; their
/// message goes to stderr, and with `--format json` stdout carries a small
/// error object so it stays parseable.
pub fn run(cfg: &RunConfig) -> Outcome {
    match execute(cfg) {
        Ok(report) => Outcome {
            code: 0,
            stdout: render(&report, cfg.format),
            stderr: String::new(),
        },
        Err(e) => {
            let stdout = match cfg.format {
                Format::Json => render(
                    &Report::new(command_name(&cfg.command))
                        .field("status", "error")
                        .field("kind", e.kind()),
                    Format::Json,
                ),
                _ => String::new(),
            };
            Outcome {
                code: 1,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

pub fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Levels { .. } => "levels",
        Command::Shift { .. } => "shift",
        Command::Bound { .. } => "bound",
        Command::Compare { .. } => "compare",
        Command::Oracle { .. } => "oracle",
    }
}

fn execute(cfg: &RunConfig) -> Result<Report> {
    let c = load_constants(cfg.constants_path.as_deref().map(Path::new))?;
    let u = cfg.units;
    match &cfg.command {
        Command::Levels { n_max } => levels(*n_max, u, &c),
        Command::Shift {
            state,
            deformation,
            coefficient,
        } => {
            let d = resolve(deformation, &c)?;
            shift(&level_breakdown_with(state, &d, &c, *coefficient)?, u, &c)
        }
        Command::Compare {
            state,
            deformation,
            coefficient,
        } => {
            let d = resolve(deformation, &c)?;
            compare(&level_breakdown_with(state, &d, &c, *coefficient)?, u, &c)
        }
        Command::Bound {
            state,
            tolerance,
            transition,
        } => {
            let (s, _) = state.with_default_j();
            let b = match transition {
                None => bound_report(&s, *tolerance, &c)?,
                Some(t) => bound_report_transition(&s, &t.with_default_j().0, *tolerance, &c)?,
            };
            Ok(bound(&b, u, &c))
        }
        Command::Oracle { check, n, l } => match check {
            OracleCheck::P4 => oracle_p4(*n, *l, &c),
            OracleCheck::Levels => oracle_levels(*n, *l, u, &c),
            OracleCheck::Slope => oracle_slope(u, &c),
        },
    }
}

pub fn resolve(spec: &DeformationSpec, c: &Constants) -> Result<Deformation> {
    match *spec {
        DeformationSpec::Beta(b) => Deformation::from_beta(b),
        DeformationSpec::Dx0 { meters, multiplier } => {
            Deformation::from_dx0(meters * multiplier, c)
        }
        DeformationSpec::Compton { multiplier } => {
            Deformation::from_dx0(c.compton_wavelength() * multiplier, c)
        }
    }
}

fn in_units(e: Energy, u: EnergyUnit, c: &Constants) -> f64 {
    e.convert(u, c).magnitude()
}

fn ratio(a: f64, b: Option<Energy>, c: &Constants) -> Value {
    b.map(|e| Value::Real(a / e.to_ev(c)))
        .unwrap_or(Value::Null)
}

fn levels(n_max: u32, u: EnergyUnit, c: &Constants) -> Result<Report> {
    let mut r = Report::new("levels")
        .field("units", u.as_str())
        .field("n_max", n_max)
        .table(
            "levels",
            &[
                "state",
                "n",
                "l",
                "j",
                "bohr",
                "relativistic_kinetic",
                "fine_structure",
            ],
        );
    for n in 1..=n_max {
        for l in 0..n {
            let twice_l = 2 * l;
            let js: Vec<u32> = if l == 0 {
                vec![1]
            } else {
                vec![twice_l - 1, twice_l + 1]
            };
            for two_j in js {
                let s = HydrogenState::with_two_j(n, l, two_j)?;
                let b = level_breakdown_with(
                    &s,
                    &Deformation::NONE,
                    c,
                    PerturbationCoefficient::DEFAULT,
                )?;
                r = r.row(vec![
                    s.to_string().into(),
                    n.into(),
                    l.into(),
                    Value::Real(f64::from(two_j) / 2.0),
                    in_units(b.bohr, u, c).into(),
                    in_units(b.relativistic_kinetic, u, c).into(),
                    in_units(b.fine_structure, u, c).into(),
                ]);
            }
        }
    }
    Ok(r)
}

fn breakdown_fields(r: Report, b: &ShiftBreakdown, u: EnergyUnit, c: &Constants) -> Report {
    let m_alpha4 = c.electron_mass() * c.alpha().powi(4);
    r.field("state", b.state.to_string())
        .field("j_defaulted", b.j_defaulted)
        .field("units", u.as_str())
        .field("beta", b.deformation.beta())
        .field("dx0_m", b.deformation.dx0_in_meters(c))
        .field("coefficient", b.coefficient.value())
        .field("bohr", in_units(b.bohr, u, c))
        .field(
            "relativistic_kinetic",
            in_units(b.relativistic_kinetic, u, c),
        )
        .field("fine_structure", in_units(b.fine_structure, u, c))
        .field(
            "lamb_reference",
            b.lamb_reference.map(|e| in_units(e, u, c)),
        )
        .field(
            "hyperfine_reference",
            b.hyperfine_reference.map(|e| in_units(e, u, c)),
        )
        .field("smearing", in_units(b.smearing, u, c))
        .field("smearing_over_m_alpha4", b.smearing.to_ev(c) / m_alpha4)
}

fn shift(b: &ShiftBreakdown, u: EnergyUnit, c: &Constants) -> Result<Report> {
    Ok(breakdown_fields(Report::new("shift"), b, u, c))
}

fn compare(b: &ShiftBreakdown, u: EnergyUnit, c: &Constants) -> Result<Report> {
    let smearing = b.smearing.to_ev(c);
    let mut r = breakdown_fields(Report::new("compare"), b, u, c)
        .field("smearing_over_lamb", ratio(smearing, b.lamb_reference, c))
        .field(
            "smearing_over_hyperfine",
            ratio(smearing, b.hyperfine_reference, c),
        )
        .table("ladder", &["label", "value_ev", "value_mhz"]);
    for row in comparison_from_breakdown(b, c) {
        r = r.row(vec![
            row.label.into(),
            row.value_ev.into(),
            row.value_mhz.into(),
        ]);
    }
    Ok(r)
}

fn bound(b: &BoundReport, u: EnergyUnit, c: &Constants) -> Report {
    Report::new("bound")
        .field("state", b.state.to_string())
        .field("transition", b.transition.map(|t| t.to_string()))
        .field("units", u.as_str())
        .field("tolerance", in_units(b.tolerance, u, c))
        .field("beta_max", b.beta_max)
        .field("dx0_max_m", b.dx0_max_m)
        .field("compton_wavelength_m", c.compton_wavelength())
        .field("compton_ratio", b.compton_ratio)
        .field("shift_at_compton", in_units(b.shift_at_compton, u, c))
        .field("exclusion_factor", b.exclusion_factor)
        .field("verdict", b.verdict.as_str())
}

fn oracle_p4(n: Option<u32>, l: Option<u32>, c: &Constants) -> Result<Report> {
    let states: Vec<HydrogenState> = match (n, l) {
        (Some(n), Some(l)) => vec![HydrogenState::new(n, l)?],
        (Some(n), None) => (0..n)
            .map(|l| HydrogenState::new(n, l))
            .collect::<Result<_>>()?,
        _ => (1..=MAX_ORACLE_N)
            .flat_map(|n| (0..n).map(move |l| HydrogenState::new(n, l)))
            .collect::<Result<_>>()?,
    };
    let mut all = true;
    let mut rows = Vec::new();
    for s in &states {
        let numeric = expectation_p4_numeric(s, &default_quadrature_grid(s.n(), c)?, c)?;
        let analytic = exp_p4(s, c);
        let rel = ((numeric.value - analytic) / analytic).abs();
        let agrees = numeric.converged && rel < EXPECTATION_TOLERANCE;
        all &= agrees;
        rows.push(vec![
            s.to_string().into(),
            s.n().into(),
            s.l().into(),
            analytic.into(),
            numeric.value.into(),
            rel.into(),
            numeric.estimated_error.into(),
            numeric.refinements.into(),
            numeric.converged.into(),
            agrees.into(),
        ]);
    }
    let mut r = Report::new("oracle")
        .field("check", "p4")
        .field("quantity", "expectation of p^4 in eV^4")
        .field("tolerance", EXPECTATION_TOLERANCE)
        .field("all_agree", all)
        .table(
            "results",
            &[
                "state",
                "n",
                "l",
                "analytic",
                "numeric",
                "relative_difference",
                "estimated_error",
                "refinements",
                "converged",
                "agrees",
            ],
        );
    for row in rows {
        r = r.row(row);
    }
    Ok(r)
}

fn oracle_levels(n: Option<u32>, l: Option<u32>, u: EnergyUnit, c: &Constants) -> Result<Report> {
    let ls: Vec<u32> = match l {
        Some(l) => vec![l],
        None => vec![0, 1, 2],
    };
    let (lo, hi) = CONVERGENCE_RATIO_RANGE;
    let mut all = true;
    let mut r = Report::new("oracle")
        .field("check", "levels")
        .field("units", u.as_str())
        .field("tolerance", LEVEL_TOLERANCE)
        .field("ratio_min", lo)
        .field("ratio_max", hi);
    let mut rows = Vec::new();
    for l in ls {
        let top = n.unwrap_or(l + LEVELS_PER_L);
        for n in l + 1..=top {
            let check = level_check(n, l, c, LEVEL_TOLERANCE, MAX_LEVEL_REFINEMENTS)?;
            let agrees = check.numeric.converged
                && check.relative_difference < LEVEL_TOLERANCE
                && (lo..=hi).contains(&check.convergence_ratio);
            all &= agrees;
            rows.push(vec![
                check.state.to_string().into(),
                n.into(),
                l.into(),
                in_units(Energy::ev(check.exact), u, c).into(),
                in_units(Energy::ev(check.numeric.value), u, c).into(),
                check.relative_difference.into(),
                check.convergence_ratio.into(),
                check.numeric.refinements.into(),
                check.numeric.converged.into(),
                agrees.into(),
            ]);
        }
    }
    r = r.field("all_agree", all).table(
        "results",
        &[
            "state",
            "n",
            "l",
            "exact",
            "numeric",
            "relative_difference",
            "convergence_ratio",
            "refinements",
            "converged",
            "agrees",
        ],
    );
    for row in rows {
        r = r.row(row);
    }
    Ok(r)
}

fn oracle_slope(u: EnergyUnit, c: &Constants) -> Result<Report> {
    let m = c.electron_mass();
    let osc = Oscillator::new(m, m * c.alpha())?;
    let check = slope_check(&default_betas(&osc), SLOPE_BASIS, &osc)?;
    let agrees = check.relative_difference < SLOPE_TOLERANCE;
    let mut r = Report::new("oracle")
        .field("check", "slope")
        .field("units", u.as_str())
        .field("mass_ev", osc.mass)
        .field("momentum_scale_ev", osc.momentum_scale)
        .field("basis_size", check.basis_size)
        .field("numeric_slope", check.numeric_slope)
        .field("expected_slope", check.expected_slope)
        .field("relative_difference", check.relative_difference)
        .field("tolerance", SLOPE_TOLERANCE)
        .field("agrees", agrees)
        .field(
            "note",
            "slopes in eV^3 (dE/dbeta); confirms the internal first-order convention (beta/3m) p^4",
        )
        .table("points", &["beta", "ground_energy"]);
    for (beta, e) in check.betas.iter().zip(&check.ground_energies) {
        r = r.row(vec![(*beta).into(), in_units(Energy::ev(*e), u, c).into()]);
    }
    Ok(r)
}
