//! Acceptance criteria 1–9, each run end to end through the command line
//! front end. One PASS/FAIL line per criterion is written to stdout.

mod common;

use std::fs;
use std::io::Write;
use std::time::{Duration, Instant};

use common::{golden_dir, json, num, smeared, GOLDEN_CASES};
use smeared_core::{Constants, Energy, EnergyUnit};

type Check = Result<String, String>;
/// Number, name, check and runtime limit.
type Criterion = (u32, &'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn m_alpha4() -> f64 {
    let c = Constants::codata2018();
    c.electron_mass() * c.alpha().powi(4)
}

fn smearing_magnitude() -> Check {
    let v = json(&[
        "shift", "--state", "1s", "--dx0", "compton", "--format", "json",
    ]);
    let shift = num(&v, "smearing");
    let closed = 5.0 / 3.0 * m_alpha4();
    ensure(
        rel(shift, closed) < 1e-6,
        format!("{shift:e} vs (5/3) m a^4 = {closed:e}"),
    )?;
    ensure(
        (1e-3..=1e-2).contains(&shift),
        format!("{shift:e} eV outside [1e-3, 1e-2]"),
    )?;
    Ok(format!("smearing = {shift:.4e} eV"))
}

fn magnitude_ladder() -> Check {
    let v = json(&[
        "compare", "--state", "1s", "--dx0", "compton", "--format", "json",
    ]);
    let rows = v["ladder"].as_array().ok_or("no ladder")?;
    let labels: Vec<&str> = rows.iter().filter_map(|r| r["label"].as_str()).collect();
    ensure(
        labels
            == [
                "smearing",
                "relativistic_kinetic",
                "lamb_reference",
                "hyperfine_reference",
            ],
        format!("order {labels:?}"),
    )?;
    let mags: Vec<f64> = rows.iter().map(|r| num(r, "value_ev").abs()).collect();
    ensure(
        mags.windows(2).all(|w| w[0] > w[1]),
        format!("not decreasing: {mags:?}"),
    )?;
    let lamb = num(&v, "smearing_over_lamb");
    let hfs = num(&v, "smearing_over_hyperfine");
    ensure(
        (30.0..=1000.0).contains(&lamb),
        format!("smearing/Lamb = {lamb}"),
    )?;
    ensure(
        (100.0..=3000.0).contains(&hfs),
        format!("smearing/hyperfine = {hfs}"),
    )?;
    Ok(format!(
        "smearing/Lamb = {lamb:.2}, smearing/hyperfine = {hfs:.2}"
    ))
}

fn exclusion_verdict() -> Check {
    let one = json(&[
        "bound",
        "--state",
        "1s",
        "--tolerance",
        "1MHz",
        "--format",
        "json",
    ]);
    let tenth = json(&[
        "bound",
        "--state",
        "1s",
        "--tolerance",
        "0.1MHz",
        "--format",
        "json",
    ]);
    let factor = num(&one, "exclusion_factor");
    ensure(one["verdict"] == "excluded", "1 MHz not excluded")?;
    ensure(tenth["verdict"] == "excluded", "0.1 MHz not excluded")?;
    ensure(
        (1e5..=1e7).contains(&factor),
        format!("exclusion factor {factor:e}"),
    )?;
    Ok(format!(
        "excluded at 1 MHz and 0.1 MHz, factor = {factor:.4e}"
    ))
}

fn bound_value() -> Check {
    let v = json(&[
        "bound",
        "--state",
        "1s",
        "--tolerance",
        "1MHz",
        "--format",
        "json",
    ]);
    let dx0 = num(&v, "dx0_max_m");
    let ratio = num(&v, "compton_ratio");
    ensure(
        (2.5e-16..=1.0e-15).contains(&dx0),
        format!("dx0_max = {dx0:e} m"),
    )?;
    ensure(
        (7e-4..=3e-3).contains(&ratio),
        format!("compton ratio {ratio:e}"),
    )?;
    let c = Constants::codata2018();
    let t = Energy::mhz(1.0).to_ev(&c);
    let m = c.electron_mass();
    let beta = t / (5.0 / 3.0 * m.powi(3) * c.alpha().powi(4));
    ensure(
        rel(num(&v, "beta_max"), beta) < 1e-6,
        format!("beta_max vs {beta:e}"),
    )?;
    Ok(format!(
        "dx0_max = {dx0:.4e} m, compton_ratio = {ratio:.4e}"
    ))
}

fn p4_oracle() -> Check {
    let v = json(&["oracle", "--check", "p4", "--format", "json"]);
    let rows = v["results"].as_array().ok_or("no results")?;
    ensure(rows.len() == 15, format!("{} states", rows.len()))?;
    let m4a4 = m_alpha4() * Constants::codata2018().electron_mass().powi(3);
    let mut worst: f64 = 0.0;
    for r in rows {
        let n = num(r, "n");
        let l = num(r, "l");
        let closed = (8.0 * n / (2.0 * l + 1.0) - 3.0) * m4a4 / n.powi(4);
        let d = rel(num(r, "numeric"), closed);
        ensure(
            r["converged"] == true,
            format!("{} did not converge", r["state"]),
        )?;
        ensure(
            d < 1e-6,
            format!("{}: relative difference {d:e}", r["state"]),
        )?;
        worst = worst.max(d);
    }
    Ok(format!("15 states, worst relative difference {worst:.2e}"))
}

fn level_oracle() -> Check {
    let v = json(&["oracle", "--check", "levels", "--format", "json"]);
    let rows = v["results"].as_array().ok_or("no results")?;
    let ls: Vec<f64> = rows.iter().map(|r| num(r, "l")).collect();
    ensure(
        [0.0, 1.0, 2.0].iter().all(|l| ls.contains(l)),
        "l = 0, 1, 2 not all covered",
    )?;
    let (mut worst, mut lo, mut hi) = (0.0f64, f64::INFINITY, 0.0f64);
    for r in rows {
        let d = num(r, "relative_difference");
        let ratio = num(r, "convergence_ratio");
        ensure(
            r["converged"] == true,
            format!("{} did not converge", r["state"]),
        )?;
        ensure(
            d < 1e-8,
            format!("{}: relative difference {d:e}", r["state"]),
        )?;
        ensure(
            (3.5..=4.5).contains(&ratio),
            format!("{}: ratio {ratio}", r["state"]),
        )?;
        worst = worst.max(d);
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    Ok(format!(
        "{} levels, worst relative difference {worst:.2e}, ratios in [{lo:.4}, {hi:.4}]",
        rows.len()
    ))
}

fn slope_proof() -> Check {
    let v = json(&["oracle", "--check", "slope", "--format", "json"]);
    let d = num(&v, "relative_difference");
    ensure(d < 1e-4, format!("relative difference {d:e}"))?;
    Ok(format!("slope relative difference {d:.2e}"))
}

fn units_and_constants() -> Check {
    let c = Constants::codata2018();
    let ev = Energy::mhz(1.0).convert(EnergyUnit::EV, &c).magnitude();
    ensure(
        rel(ev, 4.135667696e-9) < 1e-14,
        format!("1 MHz = {ev:e} eV"),
    )?;
    let back = Energy::ev(ev).convert(EnergyUnit::MHz, &c).magnitude();
    ensure((back - 1.0).abs() < 1e-14, format!("round trip {back}"))?;
    let ratio = c.compton_wavelength() / (c.alpha() * c.bohr_radius());
    ensure(
        (ratio - 1.0).abs() < 1e-12,
        format!("compton / (alpha a0) = {ratio}"),
    )?;
    Ok("1 MHz = 4.135667696e-9 eV; compton = alpha * a0".into())
}

fn determinism() -> Check {
    for (name, args) in GOLDEN_CASES {
        let first = smeared(args);
        ensure(first == smeared(args), format!("{name}: runs differ"))?;
        let golden =
            fs::read_to_string(golden_dir().join(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            first.stdout == golden,
            format!("{name}: differs from golden file"),
        )?;
    }
    Ok(format!(
        "{} commands byte-identical to golden files",
        GOLDEN_CASES.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        (
            1,
            "smearing magnitude",
            smearing_magnitude,
            Duration::from_secs(1),
        ),
        (
            2,
            "magnitude ladder",
            magnitude_ladder,
            Duration::from_secs(1),
        ),
        (
            3,
            "exclusion verdict",
            exclusion_verdict,
            Duration::from_secs(1),
        ),
        (4, "bound value", bound_value, Duration::from_secs(1)),
        (
            5,
            "p4 oracle equivalence",
            p4_oracle,
            Duration::from_secs(30),
        ),
        (
            6,
            "level oracle equivalence",
            level_oracle,
            Duration::from_secs(60),
        ),
        (7, "first-order slope", slope_proof, Duration::from_secs(10)),
        (
            8,
            "units and constants",
            units_and_constants,
            Duration::from_secs(1),
        ),
        (9, "determinism", determinism, Duration::from_secs(120)),
    ];
    let mut failed = Vec::new();
    // bypass the test harness capture so the lines always appear
    let mut out = std::io::stdout().lock();
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let line = match (&result, elapsed <= limit) {
            (Ok(detail), true) => format!("PASS criterion {id} ({name}): {detail} [{elapsed:.2?}]"),
            (Ok(detail), false) => {
                format!("FAIL criterion {id} ({name}): {detail} but took {elapsed:.2?} > {limit:?}")
            }
            (Err(why), _) => format!("FAIL criterion {id} ({name}): {why} [{elapsed:.2?}]"),
        };
        if line.starts_with("FAIL") {
            failed.push(id);
        }
        writeln!(out, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
