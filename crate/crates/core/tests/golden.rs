//! Scenario and CLI reports compared byte-for-byte with checked-in files.
//! Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use plucker_core::cli;

fn golden(name: &str, args: &[&str]) {
    let out = cli::run(std::iter::once("plucker-lab").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out.stdout, expected, "{name} differs from its golden file");
}

#[test]
fn scenario_main() {
    golden("scenario_main.json", &["--format", "json", "scenario", "main"]);
    golden("scenario_main.txt", &["scenario", "main"]);
}

#[test]
fn scenario_special() {
    golden("scenario_special_2.json", &["--format", "json", "scenario", "special", "--lambda", "2"]);
    golden("scenario_special_2.txt", &["scenario", "special", "--lambda", "2"]);
}

#[test]
fn curve_reports() {
    golden("fermat_dual.json", &["--format", "json", "curve", "dual", "x0^3 + x1^3 + x2^3"]);
    golden("nodal_cubic.json", &["--format", "json", "curve", "analyze", "x1^2*x2 - x0^2*(x0 + x2)"]);
    golden("fermat_flexes.txt", &["curve", "flexes", "x0^3 + x1^3 + x2^3"]);
}

#[test]
fn heisenberg_and_chow_reports() {
    golden("heisenberg_fixed.txt", &["heisenberg", "fixed"]);
    golden("heisenberg_group.json", &["--format", "json", "heisenberg", "group"]);
    golden("chow_3.json", &["--format", "json", "chow", "report", "--d", "3"]);
}
