use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plucker-lab")).args(args).env_remove("PLUCKER_LAB_COLOR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = lab(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_cuspidal_cubic() {
    let v = json(&["curve", "analyze", "x1^2*x2 - x0^3"]);
    let sings = v["singularities"].as_array().unwrap();
    assert_eq!(sings.len(), 1);
    assert_eq!(sings[0]["kind"], "A2");
    assert_eq!(sings[0]["point"], "0:0:1");
    assert_eq!(v["genus"]["genus"], 0);
    assert_eq!(v["flex_count"], 1);
}

#[test]
fn analyze_with_lambda_and_vars() {
    let v = json(&["curve", "analyze", "a^3 + b^3 + c^3 - 3*lambda*a*b*c", "--vars", "a,b,c", "--lambda", "1"]);
    // at lambda = 1 the Hesse cubic splits into three lines
    assert_eq!(v["singularities"].as_array().unwrap().len(), 3);
    let o = lab(&["curve", "analyze", "a^3 + b^3 + c^3 - 3*lambda*a*b*c", "--vars", "a,b,c", "--lambda", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 singular points"));
}

#[test]
fn dual_and_flexes() {
    let v = json(&["curve", "dual", "x0*x2 - x1^2"]);
    assert_eq!(v["degree"], 2);
    let v = json(&["curve", "flexes", "x0^3 + x1^3 + x2^3"]);
    assert_eq!(v["count_with_multiplicity"], 9);
    assert_eq!(v["points"].as_array().unwrap().len(), 9);
}

#[test]
fn plucker_commands() {
    let v = json(&["plucker", "dual", "--d", "18", "--nodes", "36", "--cusps", "72"]);
    assert_eq!((v["m"].as_i64(), v["f"].as_i64(), v["b"].as_i64(), v["g"].as_i64()), (Some(18), Some(72), Some(36), Some(28)));
    let v = json(&["plucker", "dual", "--d", "4", "--tacnodes", "1"]);
    assert_eq!(v["nu"], 2);
    let v = json(&["plucker", "solve", "--d", "18", "--g", "28", "--m", "18"]);
    assert_eq!(v["status"], "feasible");
    assert_eq!((v["nu"].as_i64(), v["kappa"].as_i64()), (Some(36), Some(72)));
}

#[test]
fn infeasible_exits_one() {
    let o = lab(&["--format", "json", "plucker", "solve", "--d", "9", "--g", "28", "--m", "18"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "infeasible");
    assert_eq!(v["violated_identity"], serde_json::json!([18, 72]));
    let o = lab(&["plucker", "dual", "--d", "3", "--nodes", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("infeasible"));
}

#[test]
fn heisenberg_commands() {
    let o = lab(&["heisenberg", "orbit", "1:0:0"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("orbit of size 3"));
    assert_eq!(json(&["heisenberg", "orbit", "2:3:5"])["size"], 18);
    assert_eq!(json(&["heisenberg", "group"]).as_array().unwrap().len(), 18);
    let f = json(&["heisenberg", "fixed"]);
    assert_eq!(f["lines"].as_array().unwrap().len(), 9);
    assert_eq!(f["points"].as_array().unwrap().len(), 9);
    assert_eq!(f["triple_points"].as_array().unwrap().len(), 12);
}

#[test]
fn check_curve() {
    let v = json(&["heisenberg", "check-curve", "x0^3 + x1^3 + x2^3 - 3*lambda*x0*x1*x2"]);
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 4);
    assert_eq!(v["exceptional_lambdas"], serde_json::json!(["-1 - rho", "rho", "1"]));
    let v = json(&[
        "heisenberg",
        "check-curve",
        "--quadratic-map",
        "y0^6 + y1^6 + y2^6 + 2*(2*lambda^3 - 1)*(y0^3*y1^3 + y0^3*y2^3 + y1^3*y2^3) \
         - 6*lambda^2*y0*y1*y2*(y0^3 + y1^3 + y2^3) - 3*lambda*(lambda^3 - 4)*y0^2*y1^2*y2^2",
    ]);
    assert_eq!(v["exceptional_lambdas"].as_array().unwrap().len(), 3);
}

#[test]
fn chow_report() {
    let v = json(&["chow", "report", "--d", "3"]);
    assert_eq!(v["pa_gamma"], 28);
    assert_eq!(v["deg_omega"], 54);
    assert_eq!(v["pencil_count"], 18);
    assert_eq!(v["deg_B"], 18);
    assert_eq!(v["multiplicity_bound"], 2);
}

#[test]
fn scenario_main_passes() {
    let o = lab(&["scenario", "main"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains("[FAIL]"));
    assert!(text.ends_with("all checks passed\n"));
}

#[test]
fn file_input_and_out_path() {
    let dir = std::env::temp_dir().join(format!("plucker-lab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("curve.txt");
    std::fs::write(&input, "x1^2*x2 - x0^2*(x0 + x2)\n").unwrap();
    let out = dir.join("report.json");
    let o = lab(&["--format", "json", "--out", out.to_str().unwrap(), "curve", "analyze", "--file", input.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["singularities"][0]["kind"], "A1");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        &["curve", "analyze", "x0 + * x1"][..],
        &["curve", "analyze"],
        &["curve", "analyze", "x0^2 + x1", "--file", "f.txt"],
        &["curve", "analyze", "x0^2 + x1*x2 + q"],
        &["curve", "analyze", "x0^2 + x1"],
        &["curve", "analyze", "lambda*x0^2 + x1*x2"],
        &["curve", "analyze", "x0^2 + x1*x2", "--lambda", "1/0"],
        &["curve", "dual", "x0^5 + x1^5 + x2^5"],
        &["heisenberg", "orbit", "0:0:0"],
        &["scenario", "special", "--lambda", "1"],
        &["chow", "report", "--d", "1"],
    ] {
        let o = lab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        if !(args.len() == 2 || args.contains(&"--file")) {
            let err = String::from_utf8(o.stderr).unwrap();
            assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
            assert!(err.starts_with("error: "), "{args:?}: {err}");
        }
    }
}

#[test]
fn computational_errors_exit_one() {
    let o = lab(&["curve", "flexes", "x0*x1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "scenario", "special", "--lambda", "3"];
    assert_eq!(lab(&args).stdout, lab(&args).stdout);
}

#[test]
fn color_is_opt_in() {
    let plain = lab(&["scenario", "main"]);
    assert!(!stdout(&plain).contains('\x1b'));
    let colored = Command::new(env!("CARGO_BIN_EXE_plucker-lab"))
        .args(["scenario", "main"])
        .env("PLUCKER_LAB_COLOR", "1")
        .output()
        .unwrap();
    assert!(String::from_utf8(colored.stdout).unwrap().contains("\x1b[32m[PASS]"));
}
