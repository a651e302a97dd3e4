"""Smoke test for the plucker_lab extension module.

Build and install first:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/plucker_lab-*.whl
"""

import plucker_lab as lab


def main() -> None:
    cusp = lab.Curve("x1^2*x2 - x0^3")
    report = cusp.analyze()
    assert [s["kind"] for s in report["singularities"]] == ["A2"]
    assert report["genus"]["genus"] == 0

    dual = lab.Curve("x0^3 + x1^3 + x2^3").dual()
    points, complete = dual.singular_points()
    assert dual.degree == 6 and complete and len(points) == 9
    assert {dual.classify(p)["kind"] for p in points} == {"A2"}

    inv = lab.dual_invariants(18, 36, 72)
    assert (inv.m, inv.f, inv.b, inv.g) == (18, 72, 36, 28)
    assert lab.solve_nodes_cusps(18, 28, 18) == {"status": "feasible", "nu": 36, "kappa": 72}
    assert lab.solve_nodes_cusps(9, 28, 18)["violated_identity"] == [18, 72]

    assert len(lab.enumerate_group()) == 18
    assert len(lab.orbit("1:0:0")) == 3
    assert lab.incidence_genus(3) == (28, 54)
    assert lab.pencil_singular_count(3) == 18
    assert lab.multiplicity_bound(3) == 2

    special = lab.run_special_case("2")
    assert all(c["passed"] for c in special["checks"])
    assert all(c["passed"] for c in lab.run_main_theorem()["checks"])

    try:
        lab.run_special_case("1")
    except ValueError:
        pass
    else:
        raise AssertionError("lambda = 1 must be rejected")

    print("plucker_lab smoke test passed")


if __name__ == "__main__":
    main()
