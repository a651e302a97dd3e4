use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<R>(f: impl FnOnce(Python<'_>, &Bound<'_, PyDict>) -> R) -> R {
    static INIT: std::sync::Once = std::sync::Once::new();
    INIT.call_once(|| {
        use plucker_lab::plucker_lab as module;
        pyo3::append_to_inittab!(module);
        Python::initialize();
    });
    Python::attach(|py| {
        let globals = PyDict::new(py);
        globals.set_item("lab", py.import("plucker_lab").unwrap()).unwrap();
        f(py, &globals)
    })
}

fn check(code: &str) {
    with_module(|py, globals| {
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(globals), None) {
            e.display(py);
            panic!("python check failed");
        }
    });
}

#[test]
fn bindings() {
    check(
        r#"
c = lab.Curve("x1^2*x2 - x0^3")
assert c.degree == 3
r = c.analyze()
assert [s["kind"] for s in r["singularities"]] == ["A2"]
assert r["genus"]["genus"] == 0
assert c.singular_points() == (["0:0:1"], True)
assert c.contains("1:1:1") and not c.contains("1:0:1")

f = lab.Curve("x0^3 + x1^3 + x2^3")
d = f.dual()
assert d.degree == 6
pts, complete = d.singular_points()
assert complete and len(pts) == 9
assert all(d.classify(p)["kind"] == "A2" for p in pts)
assert f.flexes()["count_with_multiplicity"] == 9

h = lab.Curve("a^3 + b^3 + c^3 - 3*lambda*a*b*c", vars=["a", "b", "c"], lam="2")
assert h.singular_points() == ([], True)

v = lab.dual_invariants(18, 36, 72)
assert (v.m, v.f, v.b, v.g) == (18, 72, 36, 28)
assert v.is_consistent() and v.dual() == lab.PlueckerInvariants(18, 36, 72).dual()
s = lab.solve_nodes_cusps(9, 28, 18)
assert s["status"] == "infeasible" and s["violated_identity"] == [18, 72]

assert len(lab.enumerate_group()) == 18
assert sorted(lab.orbit("1:0:0")) == ["0:0:1", "0:1:0", "1:0:0"]
fl = lab.fixed_locus()
assert (len(fl["lines"]), len(fl["points"]), len(fl["triple_points"])) == (9, 9, 12)
assert lab.exceptional_lambdas("x0^3 + x1^3 + x2^3 - 3*lambda*x0*x1*x2") == ["-1 - rho", "rho", "1"]

assert lab.incidence_genus(3) == (28, 54)
assert lab.pencil_singular_count(3) == 18
assert lab.multiplicity_bound(3) == 2
assert lab.numerology(3)["deg_B"] == 18
assert lab.resultant("x^2 - y", "x - 1", "x", vars=["x", "y"]) == "-y + 1"
assert all(c["passed"] for c in lab.run_main_theorem()["checks"])
assert lab.corpus_curve("nodal-cubic").analyze()["singularities"][0]["kind"] == "A1"
"#,
    );
}

#[test]
fn errors_map_to_python_exceptions() {
    check(
        r#"
for bad in [lambda: lab.Curve("x0 + * x1"), lambda: lab.Curve("x0^2 + x1"),
            lambda: lab.dual_invariants(1, 0, 0), lambda: lab.run_special_case("1"),
            lambda: lab.Curve("x0^5 + x1^5 + x2^5").dual()]:
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
try:
    lab.Curve("x0*x1").flexes()
except RuntimeError:
    pass
else:
    raise AssertionError("expected RuntimeError")
"#,
    );
}
