//! Command-line front end for the `plucker-lab` binary.
//!
//! Exit status: 0 on success, 1 when a result is infeasible or a check
//! fails, 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::chow::numerology;
use crate::corpus::{run_main_theorem, run_special_case, ScenarioReport};
use crate::curve::{analyze, dual_curve_detailed, flexes, CurveReport, FlexReport, PlaneCurve, ProjectivePoint};
use crate::error::Error;
use crate::heisenberg::{curve_orbit_obstruction, enumerate_group_with_words, exceptional_lambdas, fixed_locus, orbit};
use crate::pluecker::{dual_invariants, solve_nodes_cusps, NodeCuspSolution};
use crate::polynomials::{parse_poly, MultiPoly};
use crate::scalars::Eis;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "plucker-lab", version, about = "Exact plane-curve and Plücker-number computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singularities, flexes and duals of a plane curve.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Plücker formulas.
    #[command(subcommand)]
    Plucker(PluckerCommand),
    /// The Heisenberg group action on the plane.
    #[command(subcommand)]
    Heisenberg(HeisenbergCommand),
    /// Intersection numbers on A x P2.
    #[command(subcommand)]
    Chow(ChowCommand),
    /// End-to-end scenarios.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
}

#[derive(Debug, Clone, Args)]
pub struct PolyInput {
    /// Polynomial text.
    pub poly: Option<String>,
    /// Read the polynomial from a file.
    #[arg(long, conflicts_with = "poly")]
    pub file: Option<std::path::PathBuf>,
    /// Comma-separated variable names.
    #[arg(long, default_value = "x0,x1,x2")]
    pub vars: String,
    /// Value substituted for lambda.
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CurveCommand {
    Analyze(PolyInput),
    Dual(PolyInput),
    Flexes(PolyInput),
}

#[derive(Debug, Subcommand)]
pub enum PluckerCommand {
    /// Class, flexes, bitangents and genus from degree, nodes and cusps.
    Dual {
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = 0)]
        nodes: i64,
        #[arg(long, default_value_t = 0)]
        cusps: i64,
        /// Tacnodes, each counted as two nodes.
        #[arg(long, default_value_t = 0)]
        tacnodes: i64,
    },
    /// Nodes and cusps from degree, genus and class.
    Solve {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        m: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeisenbergCommand {
    Group,
    Orbit {
        /// Point as `a:b:c`.
        point: String,
    },
    Fixed,
    CheckCurve {
        #[command(flatten)]
        input: PolyInput,
        /// Compose with the quadratic map first (input in y0, y1, y2).
        #[arg(long)]
        quadratic_map: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChowCommand {
    Report {
        #[arg(long)]
        d: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScenarioCommand {
    Special {
        #[arg(long)]
        lambda: String,
    },
    Main,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A diagnostic with its exit status.
struct Failure(i32, String);

fn usage(msg: String) -> Failure {
    Failure(EXIT_USAGE, msg)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::LambdaSymbolic
            | Error::NotHomogeneous
            | Error::NotPlanar(_)
            | Error::ZeroPoint
            | Error::UnsupportedDegree(_)
            | Error::InvalidArgument(_)
            | Error::ExcludedLambda(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure(code, e.to_string())
    }
}

struct Rendered {
    json: serde_json::Value,
    text: String,
    ok: bool,
}

fn rendered<T: Serialize>(value: &T, text: String, ok: bool) -> Rendered {
    Rendered { json: serde_json::to_value(value).expect("serializable"), text, ok }
}

fn color_enabled() -> bool {
    std::env::var("PLUCKER_LAB_COLOR").map(|v| v == "1").unwrap_or(false)
}

fn paint(text: String) -> String {
    if !color_enabled() {
        return text;
    }
    text.replace("[PASS]", "\x1b[32m[PASS]\x1b[0m").replace("[FAIL]", "\x1b[31m[FAIL]\x1b[0m")
}

/// Parses arguments and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let msg = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: msg, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    match dispatch(&cli.command) {
        Err(Failure(code, msg)) => Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Ok(r) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&r.json).expect("serializable") + "\n",
                Format::Text => paint(r.text),
            };
            let code = if r.ok { EXIT_OK } else { EXIT_FAILED };
            match &cli.out {
                Some(path) => match std::fs::write(path, &body) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Outcome { code, stdout: body, stderr: String::new() },
            }
        }
    }
}

fn parse_lambda(text: &str) -> Result<Eis, Failure> {
    Eis::parse(text).map_err(|e| usage(format!("--lambda: {e}")))
}

fn read_poly(input: &PolyInput) -> Result<MultiPoly, Failure> {
    let text = match (&input.poly, &input.file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
        }
        _ => return Err(usage("give a polynomial or --file".into())),
    };
    let vars: Vec<&str> = input.vars.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
    let p = parse_poly(text.trim(), &vars)?;
    Ok(match &input.lambda {
        Some(l) => p.specialize_lambda(&parse_lambda(l)?),
        None => p,
    })
}

fn read_curve(input: &PolyInput) -> Result<PlaneCurve, Failure> {
    let c = PlaneCurve::new(read_poly(input)?)?;
    if !c.is_lambda_free() {
        return Err(usage("the curve depends on lambda; pass --lambda".into()));
    }
    Ok(c)
}

fn dispatch(cmd: &Command) -> Result<Rendered, Failure> {
    match cmd {
        Command::Curve(c) => curve_cmd(c),
        Command::Plucker(c) => plucker_cmd(c),
        Command::Heisenberg(c) => heisenberg_cmd(c),
        Command::Chow(ChowCommand::Report { d }) => {
            let r = numerology(*d)?;
            let text = format!(
                "d = {}\np_a(Gamma) = {}\ndeg omega_Gamma = {}\nsingular members of a pencil = {}\ndeg B = {}\nmultiplicity bound = {}\n",
                r.d, r.pa_gamma, r.deg_omega, r.pencil_count, r.deg_b, r.multiplicity_bound
            );
            Ok(rendered(&r, text, true))
        }
        Command::Scenario(ScenarioCommand::Special { lambda }) => scenario(run_special_case(&parse_lambda(lambda)?)?),
        Command::Scenario(ScenarioCommand::Main) => scenario(run_main_theorem()?),
    }
}

fn scenario(r: ScenarioReport) -> Result<Rendered, Failure> {
    let ok = r.passed();
    Ok(rendered(&r, r.to_text(), ok))
}

fn curve_report_text(r: &CurveReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "curve {} (degree {})", r.equation, r.degree);
    let _ = writeln!(
        out,
        "{} singular point{}{}",
        r.singularities.len(),
        if r.singularities.len() == 1 { "" } else { "s" },
        if r.singular_locus_complete { "" } else { " resolved (locus incomplete)" }
    );
    for s in &r.singularities {
        let _ = writeln!(out, "  ({}): {}, multiplicity {}, delta {}", s.point, s.kind, s.multiplicity, s.delta);
    }
    let _ = writeln!(out, "genus g = {}", r.genus.genus);
    if let Some(w) = &r.genus.warning {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(f) = r.flex_count {
        let _ = writeln!(out, "flexes: {f}");
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

fn flex_text(r: &FlexReport) -> String {
    let mut out = format!(
        "flexes counted with multiplicity: {} (Bezout {} minus {} at singular points)\n",
        r.count_with_multiplicity, r.bezout_total, r.singular_contribution
    );
    for p in &r.points {
        let _ = writeln!(out, "  ({}) multiplicity {}", p.point, p.multiplicity);
    }
    if !r.complete {
        out.push_str("note: some flexes have coordinates outside Q(rho)\n");
    }
    out
}

fn curve_cmd(c: &CurveCommand) -> Result<Rendered, Failure> {
    match c {
        CurveCommand::Analyze(input) => {
            let r = analyze(&read_curve(input)?)?;
            Ok(rendered(&r, curve_report_text(&r), true))
        }
        CurveCommand::Dual(input) => {
            let curve = read_curve(input)?;
            let d = dual_curve_detailed(&curve)?;
            let json = json!({
                "input": curve.equation().render(),
                "dual": d.dual.equation().render(),
                "degree": d.dual.degree(),
                "discarded": d.discarded.iter().map(|(m, f)| json!({"multiplicity": m, "factor": f.render()})).collect::<Vec<_>>(),
            });
            let text = format!("dual curve (degree {}): {}\n", d.dual.degree(), d.dual.equation());
            Ok(Rendered { json, text, ok: true })
        }
        CurveCommand::Flexes(input) => {
            let r = flexes(&read_curve(input)?)?;
            Ok(rendered(&r, flex_text(&r), true))
        }
    }
}

fn plucker_cmd(c: &PluckerCommand) -> Result<Rendered, Failure> {
    match *c {
        PluckerCommand::Dual { d, nodes, cusps, tacnodes } => match dual_invariants(d, nodes + 2 * tacnodes, cusps) {
            Ok(v) => {
                let text = format!(
                    "d={} nu={} kappa={}\nm={} f={} b={} g={}\n",
                    v.d, v.nu, v.kappa, v.m, v.f, v.b, v.g
                );
                Ok(rendered(&v, text, true))
            }
            Err(Error::InfeasibleInvariants(reason)) => Ok(Rendered {
                json: json!({"status": "infeasible", "reason": reason}),
                text: format!("infeasible: {reason}\n"),
                ok: false,
            }),
            Err(e) => Err(e.into()),
        },
        PluckerCommand::Solve { d, g, m } => {
            let s = solve_nodes_cusps(d, g, m)?;
            let text = match &s {
                NodeCuspSolution::Feasible { nu, kappa } => format!("nu={nu} kappa={kappa}\n"),
                NodeCuspSolution::Infeasible { nu, kappa, diagnostic, .. } => {
                    format!("infeasible: raw solution nu={nu} kappa={kappa}\n{diagnostic}\n")
                }
            };
            let ok = s.is_feasible();
            Ok(rendered(&s, text, ok))
        }
    }
}

fn heisenberg_cmd(c: &HeisenbergCommand) -> Result<Rendered, Failure> {
    match c {
        HeisenbergCommand::Group => {
            let g = enumerate_group_with_words();
            let mut text = format!("{} elements\n", g.len());
            for e in &g {
                let _ = writeln!(text, "  {:<6} order {}  {}", e.word, e.order, e.matrix);
            }
            Ok(rendered(&g, text, true))
        }
        HeisenbergCommand::Orbit { point } => {
            let o = orbit(&ProjectivePoint::parse(point)?);
            let mut text = format!("orbit of size {}\n", o.size);
            for p in &o.points {
                let _ = writeln!(text, "  ({p})");
            }
            Ok(rendered(&o, text, true))
        }
        HeisenbergCommand::Fixed => {
            let f = fixed_locus();
            let mut text = String::from("fixed lines:\n");
            for l in &f.lines {
                let _ = writeln!(text, "  {}: {}", l.name, l.equation);
            }
            text.push_str("fixed points:\n");
            for p in &f.points {
                let _ = writeln!(text, "  {}: ({})", p.name, p.point);
            }
            let _ = writeln!(text, "triple points ({}):", f.triple_points.len());
            for p in &f.triple_points {
                let _ = writeln!(text, "  ({p})");
            }
            Ok(rendered(&f, text, true))
        }
        HeisenbergCommand::CheckCurve { input, quadratic_map } => {
            let mut input = input.clone();
            if *quadratic_map && input.vars == "x0,x1,x2" {
                input.vars = "y0,y1,y2".into();
            }
            let p = read_poly(&input)?;
            let obs = curve_orbit_obstruction(&p, *quadratic_map)?;
            let exceptional = exceptional_lambdas(&obs);
            let mut text = String::new();
            for o in &obs {
                let roots: Vec<String> = o.roots.iter().map(Eis::to_string).collect();
                let _ = writeln!(
                    text,
                    "{}: obstruction {}; on the curve for lambda in {{{}}}{}",
                    o.orbit,
                    o.obstruction,
                    roots.join(", "),
                    if o.contained_for_all_lambda { " (every lambda)" } else { "" }
                );
            }
            let ex: Vec<String> = exceptional.iter().map(Eis::to_string).collect();
            let _ = writeln!(text, "exceptional lambdas: {{{}}}", ex.join(", "));
            let json = json!({ "orbits": obs, "exceptional_lambdas": ex });
            Ok(Rendered { json, text, ok: true })
        }
    }
}
