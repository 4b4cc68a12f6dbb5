use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smeared_core::oracle::MAX_ORACLE_N;
use smeared_core::{Energy, EnergyUnit, HydrogenState, PerturbationCoefficient};

/// Largest `--n-max` accepted by `levels`.
pub const MAX_LEVELS_N: u32 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    P4,
    Levels,
    Slope,
}

/// How the deformation was requested on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeformationSpec {
    /// Minimal length in meters, times `multiplier`.
    Dx0 { meters: f64, multiplier: f64 },
    /// Reduced Compton wavelength times `multiplier`.
    Compton { multiplier: f64 },
    /// β in eV⁻².
    Beta(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Levels {
        n_max: u32,
    },
    Shift {
        state: HydrogenState,
        deformation: DeformationSpec,
        coefficient: PerturbationCoefficient,
    },
    Bound {
        state: HydrogenState,
        tolerance: Energy,
        transition: Option<HydrogenState>,
    },
    Compare {
        state: HydrogenState,
        deformation: DeformationSpec,
        coefficient: PerturbationCoefficient,
    },
    Oracle {
        check: OracleCheck,
        n: Option<u32>,
        l: Option<u32>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub units: EnergyUnit,
    pub format: Format,
    pub constants_path: Option<PathBuf>,
}

/// Bad command line. Maps to exit code 2.
#[derive(Debug)]
pub enum UsageError {
    /// `--help` or `--version`; the text goes to stdout and the exit code is 0.
    Info(String),
    Invalid(String),
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UsageError::Info(s) | UsageError::Invalid(s) => f.write_str(s),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "smeared",
    version,
    about = "Hydrogen level shifts from a minimal-length deformed Heisenberg algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Energy unit for reported energies.
    #[arg(long, global = true, default_value = "eV", value_parser = parse_unit)]
    units: EnergyUnit,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// JSON file overriding bundled constants.
    #[arg(long, global = true)]
    constants: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Bohr energies and α⁴ corrections for every level up to n-max.
    Levels {
        #[arg(long, default_value_t = 3)]
        n_max: u32,
    },
    /// First-order minimal-length shift of one level.
    Shift {
        #[arg(long, value_parser = parse_state)]
        state: HydrogenState,
        #[command(flatten)]
        deformation: DeformationArgs,
        /// Scale factor applied to --dx0, e.g. 2π for the non-reduced Compton wavelength.
        #[arg(long, requires = "dx0")]
        dx0_multiplier: Option<f64>,
        /// Perturbation coefficient k in H' = k (β/m) p⁴ (default 1/3).
        #[arg(long)]
        coefficient: Option<f64>,
    },
    /// Bound on the minimal length from an agreement tolerance.
    Bound {
        #[arg(long, value_parser = parse_state)]
        state: HydrogenState,
        /// Agreement tolerance with unit, e.g. 1MHz or 4e-9eV.
        #[arg(long, value_parser = parse_energy)]
        tolerance: Energy,
        /// Apply the tolerance to the transition between --state and this state.
        #[arg(long, value_parser = parse_state)]
        transition: Option<HydrogenState>,
    },
    /// Magnitude ladder of the smearing shift against standard corrections.
    Compare {
        #[arg(long, value_parser = parse_state)]
        state: HydrogenState,
        #[command(flatten)]
        deformation: DeformationArgs,
        /// Scale factor applied to --dx0, e.g. 2π for the non-reduced Compton wavelength.
        #[arg(long, requires = "dx0")]
        dx0_multiplier: Option<f64>,
        #[arg(long)]
        coefficient: Option<f64>,
    },
    /// Numerical cross-checks of the closed forms.
    Oracle {
        #[arg(long, value_enum)]
        check: OracleCheck,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DeformationArgs {
    /// Minimal length in meters, or `compton` for the reduced Compton wavelength.
    #[arg(long)]
    dx0: Option<String>,
    /// Deformation parameter β in eV⁻².
    #[arg(long)]
    beta: Option<f64>,
}

fn parse_unit(s: &str) -> Result<EnergyUnit, String> {
    s.parse().map_err(|e: smeared_core::Error| e.to_string())
}

fn parse_state(s: &str) -> Result<HydrogenState, String> {
    s.parse().map_err(|e: smeared_core::Error| e.to_string())
}

fn parse_energy(s: &str) -> Result<Energy, String> {
    s.parse().map_err(|e: smeared_core::Error| e.to_string())
}

fn invalid(msg: impl Into<String>) -> UsageError {
    UsageError::Invalid(msg.into())
}

fn deformation_spec(
    args: DeformationArgs,
    multiplier: Option<f64>,
) -> Result<DeformationSpec, UsageError> {
    if let Some(k) = multiplier {
        if !(k > 0.0 && k.is_finite()) {
            return Err(invalid("--dx0-multiplier must be positive"));
        }
        if args.dx0.is_none() {
            return Err(invalid("--dx0-multiplier requires --dx0"));
        }
    }
    let multiplier = multiplier.unwrap_or(1.0);
    match (args.dx0, args.beta) {
        (Some(d), None) if d.eq_ignore_ascii_case("compton") => {
            Ok(DeformationSpec::Compton { multiplier })
        }
        (Some(d), None) => {
            let meters: f64 = d
                .parse()
                .map_err(|_| invalid(format!("--dx0 expects meters or `compton`, got `{d}`")))?;
            if !(meters >= 0.0 && meters.is_finite()) {
                return Err(invalid("--dx0 must be a non-negative length"));
            }
            Ok(DeformationSpec::Dx0 { meters, multiplier })
        }
        (None, Some(b)) if b >= 0.0 && b.is_finite() => Ok(DeformationSpec::Beta(b)),
        (None, Some(_)) => Err(invalid("--beta must be non-negative")),
        _ => Err(invalid("give exactly one of --dx0 or --beta")),
    }
}

fn coefficient(k: Option<f64>) -> Result<PerturbationCoefficient, UsageError> {
    match k {
        None => Ok(PerturbationCoefficient::DEFAULT),
        Some(k) => PerturbationCoefficient::new(k).map_err(|e| invalid(e.to_string())),
    }
}

/// Parses a full argv (program name first) into a validated configuration.
pub fn parse_args<I, S>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => UsageError::Info(e.to_string()),
            _ => {
                let text = e.to_string();
                let first = text.lines().next().unwrap_or("invalid arguments");
                UsageError::Invalid(first.trim_start_matches("error: ").to_string())
            }
        }
    })?;
    let command = match cli.command {
        Cmd::Levels { n_max } => {
            if !(1..=MAX_LEVELS_N).contains(&n_max) {
                return Err(invalid(format!("--n-max must lie in 1..={MAX_LEVELS_N}")));
            }
            Command::Levels { n_max }
        }
        Cmd::Shift {
            state,
            deformation,
            dx0_multiplier,
            coefficient: k,
        } => Command::Shift {
            state,
            deformation: deformation_spec(deformation, dx0_multiplier)?,
            coefficient: coefficient(k)?,
        },
        Cmd::Compare {
            state,
            deformation,
            dx0_multiplier,
            coefficient: k,
        } => Command::Compare {
            state,
            deformation: deformation_spec(deformation, dx0_multiplier)?,
            coefficient: coefficient(k)?,
        },
        Cmd::Bound {
            state,
            tolerance,
            transition,
        } => {
            if !(tolerance.magnitude() > 0.0 && tolerance.magnitude().is_finite()) {
                return Err(invalid("--tolerance must be positive"));
            }
            Command::Bound {
                state,
                tolerance,
                transition,
            }
        }
        Cmd::Oracle { check, n, l } => {
            validate_oracle(check, n, l)?;
            Command::Oracle { check, n, l }
        }
    };
    Ok(RunConfig {
        command,
        units: cli.units,
        format: cli.format,
        constants_path: cli.constants,
    })
}

fn validate_oracle(check: OracleCheck, n: Option<u32>, l: Option<u32>) -> Result<(), UsageError> {
    match check {
        OracleCheck::Slope => {
            if n.is_some() || l.is_some() {
                return Err(invalid("--n and --l do not apply to the slope check"));
            }
        }
        OracleCheck::P4 => {
            if l.is_some() && n.is_none() {
                return Err(invalid("--l requires --n for the p4 check"));
            }
            if let Some(n) = n {
                if !(1..=MAX_ORACLE_N).contains(&n) {
                    return Err(invalid(format!("--n must lie in 1..={MAX_ORACLE_N}")));
                }
                if l.unwrap_or(0) >= n {
                    return Err(invalid("--l must be below --n"));
                }
            }
        }
        OracleCheck::Levels => {
            if let Some(l) = l {
                if l > 4 {
                    return Err(invalid("--l must lie in 0..=4 for the levels check"));
                }
            }
            if let Some(n) = n {
                if n > 8 || n <= l.unwrap_or(0) {
                    return Err(invalid(
                        "levels check needs l < n <= 8 (--n is the highest principal number)",
                    ));
                }
            }
        }
    }
    Ok(())
}
