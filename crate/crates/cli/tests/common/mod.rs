#![allow(dead_code)]

use std::path::PathBuf;

use smeared_cli::{main_with_args, Outcome};

/// Every documented command, keyed by its golden file name.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("levels_table.txt", &["levels", "--n-max", "3"]),
    (
        "levels_json.json",
        &["--format", "json", "levels", "--n-max", "2"],
    ),
    (
        "levels_mhz_csv.csv",
        &[
            "levels", "--n-max", "2", "--units", "MHz", "--format", "csv",
        ],
    ),
    (
        "shift_1s_compton.txt",
        &["shift", "--state", "1s", "--dx0", "compton"],
    ),
    (
        "shift_2p32_compton.json",
        &[
            "shift", "--state", "2p3/2", "--dx0", "compton", "--format", "json",
        ],
    ),
    (
        "shift_1s_compton_2pi.csv",
        &[
            "shift",
            "--state",
            "1s",
            "--dx0",
            "compton",
            "--dx0-multiplier",
            "6.283185307179586",
            "--format",
            "csv",
        ],
    ),
    (
        "shift_2s_beta_mhz.txt",
        &[
            "shift", "--state", "2s", "--beta", "1e-18", "--units", "MHz",
        ],
    ),
    (
        "shift_1s_dx0_coefficient.json",
        &[
            "shift",
            "--state",
            "1s",
            "--dx0",
            "1e-15",
            "--coefficient",
            "1",
            "--format",
            "json",
        ],
    ),
    (
        "compare_1s_compton.txt",
        &["compare", "--state", "1s", "--dx0", "compton"],
    ),
    (
        "compare_1s_compton.json",
        &[
            "compare", "--state", "1s", "--dx0", "compton", "--format", "json",
        ],
    ),
    (
        "compare_1s_compton.csv",
        &[
            "compare", "--state", "1s", "--dx0", "compton", "--format", "csv",
        ],
    ),
    (
        "bound_1s_1mhz.txt",
        &["bound", "--state", "1s", "--tolerance", "1MHz"],
    ),
    (
        "bound_1s_1mhz.json",
        &[
            "bound",
            "--state",
            "1s",
            "--tolerance",
            "1MHz",
            "--format",
            "json",
        ],
    ),
    (
        "bound_1s_0.1mhz.csv",
        &[
            "bound",
            "--state",
            "1s",
            "--tolerance",
            "0.1MHz",
            "--format",
            "csv",
        ],
    ),
    (
        "bound_1s_2s_transition_ghz.txt",
        &[
            "bound",
            "--state",
            "1s",
            "--transition",
            "2s",
            "--tolerance",
            "1MHz",
            "--units",
            "GHz",
        ],
    ),
    (
        "oracle_p4_1s.json",
        &[
            "oracle", "--check", "p4", "--n", "1", "--l", "0", "--format", "json",
        ],
    ),
    (
        "oracle_p4_all.csv",
        &["oracle", "--check", "p4", "--format", "csv"],
    ),
    (
        "oracle_levels_l1.txt",
        &["oracle", "--check", "levels", "--l", "1"],
    ),
    (
        "oracle_slope.json",
        &["oracle", "--check", "slope", "--format", "json"],
    ),
];

pub fn smeared(args: &[&str]) -> Outcome {
    main_with_args(std::iter::once("smeared").chain(args.iter().copied()))
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let out = smeared(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout))
}

pub fn num(v: &serde_json::Value, key: &str) -> f64 {
    v[key]
        .as_f64()
        .unwrap_or_else(|| panic!("`{key}` is not a number in {v}"))
}
