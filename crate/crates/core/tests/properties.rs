use num_traits::{One, Zero};
use proptest::prelude::*;

use plucker_core::chow::{chern_twist, chow_mul, incidence_genus, pencil_singular_count, ChowClass};
use plucker_core::heisenberg::enumerate_group;
use plucker_core::pluecker::{dual_invariants, solve_nodes_cusps, NodeCuspSolution};
use plucker_core::polynomials::{parse_poly, resultant, MultiPoly};
use plucker_core::scalars::{lambda_roots, Eis, LambdaPoly};

const XY: [&str; 2] = ["x", "y"];
const X3: [&str; 3] = ["x0", "x1", "x2"];

fn eis() -> impl Strategy<Value = Eis> {
    (-6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(a, b, d)| &Eis::from_ints(a, b) * &Eis::ratio(1, d))
}

fn small_int_eis() -> impl Strategy<Value = Eis> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Eis::from_ints(a, b))
}

/// Polynomial in x, y with degree exactly `n >= 1` in x.
fn xy_poly(n: u32) -> impl Strategy<Value = MultiPoly> {
    let lower = prop::collection::vec(((0..n), 0u32..=2, -3i64..=3), 0..5);
    ((1i64..=3), (0u32..=1), lower).prop_map(move |(lc, ly, terms)| {
        let mut all = vec![(vec![n, ly], LambdaPoly::constant(Eis::int(lc)))];
        all.extend(terms.into_iter().map(|(i, j, c)| (vec![i, j], LambdaPoly::constant(Eis::int(c)))));
        MultiPoly::from_terms(&XY, all)
    })
}

fn homogeneous(d: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0..=d, 0..=d, small_int_eis()), 1..6).prop_map(move |terms| {
        MultiPoly::from_terms(
            &X3,
            terms.into_iter().filter(|(i, j, _)| i + j <= d).map(|(i, j, c)| (vec![i, j, d - i - j], LambdaPoly::constant(c))),
        )
    })
}

fn chow_class() -> impl Strategy<Value = ChowClass> {
    prop::collection::vec(-5i64..=5, 9).prop_map(|v| {
        let mut c = ChowClass::zero(3);
        for a in 0..3 {
            for b in 0..3 {
                c = c + ChowClass::monomial(3, a, b, v[3 * a + b]);
            }
        }
        c
    })
}

proptest! {
    #[test]
    fn eis_ring_axioms(a in eis(), b in eis(), c in eis()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &Eis::zero());
    }

    #[test]
    fn eis_inverse_and_norm(a in eis(), b in eis()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.norm(), (&a * &a.conj()).re().clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Eis::one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn rho_is_primitive_cube_root(k in -10i64..10) {
        prop_assert_eq!(Eis::rho_pow(k), Eis::rho_pow(k.rem_euclid(3)));
        let r = Eis::rho();
        prop_assert_eq!(&(&r * &r) + &r, -Eis::one());
    }

    #[test]
    fn eis_display_parses_back(a in eis()) {
        prop_assert_eq!(Eis::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn lambda_roots_finds_planted_roots(roots in prop::collection::vec(eis(), 1..4), quad in prop::bool::ANY) {
        let mut p = LambdaPoly::constant(Eis::int(2));
        for r in &roots {
            p = &p * &LambdaPoly::linear(r);
        }
        if quad {
            // lambda^2 - 2 has no roots in Q(rho)
            p = &p * &LambdaPoly::from_ints(&[-2, 0, 1]);
        }
        let report = lambda_roots(&p).unwrap();
        for r in &roots {
            prop_assert!(report.roots.contains(r), "{} missing from {:?}", r, report.roots);
        }
        for r in &report.roots {
            prop_assert!(p.eval(r).is_zero());
        }
    }

    #[test]
    fn euler_identity(f in (1u32..=5).prop_flat_map(homogeneous)) {
        prop_assume!(!f.is_zero());
        let text = f.render();
        let g = parse_poly(&text, &X3).unwrap();
        prop_assert_eq!(&g, &f);
        let deg = g.homogeneous_degree().unwrap() as i64;
        let mut euler = MultiPoly::zero(&X3);
        for i in 0..3 {
            euler = &euler + &(&MultiPoly::var(&X3, i) * &g.partial(i));
        }
        prop_assert_eq!(euler, g.scale_eis(&Eis::int(deg)));
    }

    #[test]
    fn substitute_commutes_with_evaluate(
        f in homogeneous(3),
        images in prop::collection::vec(homogeneous(1), 3),
        point in prop::collection::vec(small_int_eis(), 3),
    ) {
        let composed = f.substitute(&images).unwrap();
        let inner: Vec<Eis> = images.iter().map(|g| g.evaluate(&point).unwrap().coeff(0)).collect();
        prop_assert_eq!(composed.evaluate(&point).unwrap(), f.evaluate(&inner).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_symmetry(
        (m, n, f, g) in (1u32..=3, 1u32..=3).prop_flat_map(|(m, n)| (Just(m), Just(n), xy_poly(m), xy_poly(n)))
    ) {
        let fg = resultant(&f, &g, "x").unwrap();
        let gf = resultant(&g, &f, "x").unwrap();
        let sign = if (m * n) % 2 == 1 { -Eis::one() } else { Eis::one() };
        prop_assert_eq!(fg, gf.scale_eis(&sign));
    }

    #[test]
    fn resultant_multiplicativity(f in xy_poly(1), g in xy_poly(2), h in xy_poly(2)) {
        let lhs = resultant(&(&f * &g), &h, "x").unwrap();
        let rhs = &resultant(&f, &h, "x").unwrap() * &resultant(&g, &h, "x").unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_matches_root_product(
        a in 1i64..=3,
        b in 1i64..=3,
        rs in prop::collection::vec(small_int_eis(), 1..4),
        ss in prop::collection::vec(small_int_eis(), 1..4),
    ) {
        // Res(a prod(x - r), b prod(x - s)) = a^n b^m prod(r - s)
        let build = |lc: i64, roots: &[Eis]| {
            let mut p = MultiPoly::from_eis(&["x"], Eis::int(lc));
            for r in roots {
                p = &p * &(&MultiPoly::var(&["x"], 0) - &MultiPoly::from_eis(&["x"], r.clone()));
            }
            p
        };
        let res = resultant(&build(a, &rs), &build(b, &ss), "x").unwrap();
        let mut expected = Eis::int(a).pow(ss.len() as u32) * Eis::int(b).pow(rs.len() as u32);
        for r in &rs {
            for s in &ss {
                expected = &expected * &(r - s);
            }
        }
        prop_assert_eq!(res, MultiPoly::from_eis(&["x"], expected));
    }
}

proptest! {
    #[test]
    fn chow_ring_axioms(x in chow_class(), y in chow_class(), z in chow_class()) {
        prop_assert_eq!(chow_mul(&x, &y).unwrap(), chow_mul(&y, &x).unwrap());
        prop_assert_eq!(
            chow_mul(&chow_mul(&x, &y).unwrap(), &z).unwrap(),
            chow_mul(&x, &chow_mul(&y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(chow_mul(&x, &(y + z)).unwrap(), chow_mul(&x, &y).unwrap() + chow_mul(&x, &z).unwrap());
        prop_assert_eq!(chow_mul(&x, &ChowClass::one(3)).unwrap(), x);
    }

    #[test]
    fn chern_twist_inverts(c1 in chow_class(), c2 in chow_class(), c3 in chow_class(), m in chow_class()) {
        let (a, b, c) = chern_twist(&c1, &c2, &c3, &m).unwrap();
        let back = chern_twist(&a, &b, &c, &(-m)).unwrap();
        prop_assert_eq!(back, (c1, c2, c3));
    }
}

#[test]
fn mismatched_polarization_is_rejected() {
    assert!(chow_mul(&ChowClass::l(3), &ChowClass::l(2)).is_err());
}

#[test]
fn incidence_genus_adjunction() {
    for d in 1..=30 {
        let g = incidence_genus(d).unwrap();
        assert_eq!(2 * g.pa - 2, g.deg_omega, "d = {d}");
        assert_eq!(g.pa, 9 * d as i64 + 1);
    }
}

#[test]
fn pencil_count_is_six_d() {
    for d in 2..=20 {
        assert_eq!(pencil_singular_count(d).unwrap(), 6 * d as i64);
    }
    assert!(pencil_singular_count(1).is_err());
}

#[test]
fn pluecker_round_trip_exhaustive() {
    let mut feasible = 0;
    for d in 2..=20i64 {
        for nu in 0..=120 {
            for kappa in 0..=120 {
                let Ok(v) = dual_invariants(d, nu, kappa) else { continue };
                feasible += 1;
                assert!(v.is_consistent(), "{v:?}");
                if v.m >= 2 {
                    assert_eq!(dual_invariants(v.m, v.b, v.f).unwrap(), v.dual(), "{v:?}");
                    assert_eq!(
                        solve_nodes_cusps(d, v.g, v.m).unwrap(),
                        NodeCuspSolution::Feasible { nu, kappa },
                        "{v:?}"
                    );
                }
            }
        }
    }
    assert!(feasible > 1000);
}

#[test]
fn group_is_closed() {
    let g = enumerate_group();
    assert_eq!(g.len(), 18);
    for a in &g {
        assert!(g.contains(&a.inverse()));
        for b in &g {
            assert!(g.contains(&a.compose(b)));
        }
    }
}
