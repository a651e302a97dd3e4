//! The extended Heisenberg group of level 3 acting on the projective plane,
//! generated by the cyclic shift `sigma`, the diagonal `tau = diag(1, rho,
//! rho^2)` and the transposition `iota` of the last two coordinates.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::curve::ProjectivePoint;
use crate::error::{Error, Result};
use crate::polynomials::{quadratic_map, MultiPoly};
use crate::scalars::{lambda_roots, Eis, LambdaPoly};

pub type Matrix = [[Eis; 3]; 3];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Eis::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
    })
}

fn det(m: &Matrix) -> Eis {
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0]);
    &(&(&m[0][0] * &minor(1, 2, 1, 2)) - &(&m[0][1] * &minor(1, 2, 0, 2))) + &(&m[0][2] * &minor(1, 2, 0, 1))
}

fn adjugate(m: &Matrix) -> Matrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // cofactor of (j, i)
            let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
            let v = &(&m[rows[0]][cols[0]] * &m[rows[1]][cols[1]]) - &(&m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]);
            if (i + j) % 2 == 0 { v } else { -v }
        })
    })
}

fn cross(a: &[Eis; 3], b: &[Eis; 3]) -> [Eis; 3] {
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        &(&a[j] * &b[k]) - &(&a[k] * &b[j])
    })
}

/// Basis of the kernel of a 3x3 matrix.
fn nullspace(m: &Matrix) -> Vec<[Eis; 3]> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..3 {
        let Some(p) = (row..3).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().expect("nonzero pivot");
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[row].clone();
        for (r, line) in a.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, p) in line.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..3)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [Eis; 3] = std::array::from_fn(|_| Eis::zero());
            v[free] = Eis::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// An invertible 3x3 matrix up to scalars, normalized so that its first
/// nonzero entry in row-major order is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveTransform {
    matrix: Matrix,
}

impl ProjectiveTransform {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if det(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let lead = matrix.iter().flatten().find(|e| !e.is_zero()).expect("nonsingular").inv()?;
        Ok(ProjectiveTransform { matrix: matrix.map(|row| row.map(|e| &e * &lead)) })
    }

    fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        ProjectiveTransform::new(rows.map(|r| r.map(Eis::int))).expect("invertible")
    }

    pub fn identity() -> Self {
        ProjectiveTransform::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// `(x0, x1, x2) -> (x1, x2, x0)`.
    pub fn sigma() -> Self {
        ProjectiveTransform::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    }

    pub fn tau() -> Self {
        let z = Eis::zero;
        ProjectiveTransform::new([
            [Eis::one(), z(), z()],
            [z(), Eis::rho(), z()],
            [z(), z(), Eis::rho_pow(2)],
        ])
        .expect("invertible")
    }

    pub fn iota() -> Self {
        ProjectiveTransform::from_ints([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    }

    pub fn generators() -> [(char, ProjectiveTransform); 3] {
        [('s', Self::sigma()), ('t', Self::tau()), ('i', Self::iota())]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &ProjectiveTransform) -> ProjectiveTransform {
        ProjectiveTransform::new(mat_mul(&self.matrix, &other.matrix)).expect("product of invertibles")
    }

    pub fn inverse(&self) -> ProjectiveTransform {
        ProjectiveTransform::new(adjugate(&self.matrix)).expect("invertible")
    }

    pub fn is_identity(&self) -> bool {
        *self == ProjectiveTransform::identity()
    }

    /// Smallest `k >= 1` with `self^k` the identity, up to 12.
    pub fn order(&self) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=12 {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    pub fn apply(&self, p: &ProjectivePoint) -> ProjectivePoint {
        p.transform(&self.matrix).expect("invertible image is nonzero")
    }

    /// Image of the line with coefficient vector `n`: the row vector
    /// `n * self^-1`.
    pub fn apply_line(&self, n: &ProjectivePoint) -> ProjectivePoint {
        let inv = adjugate(&self.matrix);
        let c = n.coords();
        let img: [Eis; 3] = std::array::from_fn(|j| (0..3).fold(Eis::zero(), |acc, i| &acc + &(&c[i] * &inv[i][j])));
        ProjectivePoint::new(img).expect("nonzero")
    }

    /// `(g . F)(x) = F(g^-1 x)`.
    pub fn act_on_poly(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.nvars() != 3 {
            return Err(Error::NotPlanar(f.nvars()));
        }
        let inv = adjugate(&self.matrix);
        let vars = f.vars().to_vec();
        let images: Vec<MultiPoly> = (0..3)
            .map(|i| {
                (0..3).fold(MultiPoly::zero(&vars), |acc, j| &acc + &MultiPoly::var(&vars, j).scale_eis(&inv[i][j]))
            })
            .collect();
        f.substitute(&images)
    }

    /// `det(mu I - M)` as a polynomial in `mu`.
    fn characteristic_polynomial(&self) -> LambdaPoly {
        let m = &self.matrix;
        let tr = &(&m[0][0] + &m[1][1]) + &m[2][2];
        let minors = (0..3).fold(Eis::zero(), |acc, i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            &acc + &(&(&m[j][j] * &m[k][k]) - &(&m[j][k] * &m[k][j]))
        });
        LambdaPoly::new(vec![-det(m), minors, -tr, Eis::one()])
    }

    /// Eigenspaces over `Q(rho)`, each a basis of column vectors.
    pub fn eigenspaces(&self) -> Result<Vec<Vec<[Eis; 3]>>> {
        let roots = lambda_roots(&self.characteristic_polynomial())?;
        Ok(roots
            .roots
            .iter()
            .map(|mu| {
                let shifted: Matrix = std::array::from_fn(|i| {
                    std::array::from_fn(|j| if i == j { &self.matrix[i][j] - mu } else { self.matrix[i][j].clone() })
                });
                nullspace(&shifted)
            })
            .collect())
    }
}

impl fmt::Display for ProjectiveTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for ProjectiveTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ProjectiveTransform {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// A group element with a shortest word in the generators `s`, `t`, `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    pub word: String,
    pub order: u32,
    pub matrix: ProjectiveTransform,
}

/// Closure of the generators modulo scalars, as shortest words, sorted by
/// matrix.
pub fn enumerate_group_with_words() -> Vec<GroupElement> {
    let mut seen: BTreeMap<ProjectiveTransform, String> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(ProjectiveTransform::identity(), "e".into());
    queue.push_back((ProjectiveTransform::identity(), String::new()));
    while let Some((g, w)) = queue.pop_front() {
        for (c, gen) in ProjectiveTransform::generators() {
            let h = gen.compose(&g);
            if !seen.contains_key(&h) {
                let word = format!("{c}{w}");
                seen.insert(h.clone(), word.clone());
                queue.push_back((h, word));
            }
        }
    }
    seen.into_iter()
        .map(|(m, word)| GroupElement { word, order: m.order().expect("finite group"), matrix: m })
        .collect()
}

pub fn enumerate_group() -> Vec<ProjectiveTransform> {
    enumerate_group_with_words().into_iter().map(|g| g.matrix).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub points: Vec<ProjectivePoint>,
    pub size: usize,
}

impl Orbit {
    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.contains(p)
    }
}

pub fn orbit(p: &ProjectivePoint) -> Orbit {
    orbit_under(&enumerate_group(), p)
}

pub fn orbit_under(group: &[ProjectiveTransform], p: &ProjectivePoint) -> Orbit {
    let points: BTreeSet<ProjectivePoint> = group.iter().map(|g| g.apply(p)).collect();
    let points: Vec<_> = points.into_iter().collect();
    Orbit { size: points.len(), points }
}

/// Representatives of the four orbits of size 3, as named in the classical
/// table, with each orbit's points in table order.
pub fn order_three_orbits() -> Vec<(String, Vec<ProjectivePoint>)> {
    let r = Eis::rho;
    let r2 = || Eis::rho_pow(2);
    let o = Eis::one;
    let z = Eis::zero;
    let pt = |a: Eis, b: Eis, c: Eis| ProjectivePoint::new([a, b, c]).expect("nonzero");
    vec![
        ("O(1:0:0)".into(), vec![pt(o(), z(), z()), pt(z(), o(), z()), pt(z(), z(), o())]),
        ("O(1:1:1)".into(), vec![pt(o(), o(), o()), pt(o(), r(), r2()), pt(o(), r2(), r())]),
        ("O(1:1:rho)".into(), vec![pt(o(), o(), r()), pt(o(), r(), o()), pt(r(), o(), o())]),
        ("O(1:1:rho^2)".into(), vec![pt(o(), o(), r2()), pt(o(), r2(), o()), pt(r2(), o(), o())]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedLine {
    pub name: String,
    /// Coefficient vector `n` of the line `n . x = 0`.
    pub normal: ProjectivePoint,
    pub equation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPoint {
    pub name: String,
    pub point: ProjectivePoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedLocus {
    pub lines: Vec<FixedLine>,
    pub points: Vec<FixedPoint>,
    pub triple_points: Vec<ProjectivePoint>,
}

/// Lines `x1 = rho^i x0`, `x2 = rho^i x1`, `x0 = rho^i x2`, points
/// `(1 : -rho^i : 0)`, `(0 : 1 : -rho^i)`, `(-rho^i : 0 : 1)`, and the
/// points where three of the lines meet.
pub fn fixed_locus() -> FixedLocus {
    let mut lines = Vec::new();
    let mut points = Vec::new();
    for (j, (from, to)) in [(0usize, 1usize), (1, 2), (2, 0)].into_iter().enumerate() {
        for i in 0..3i64 {
            let r = Eis::rho_pow(i);
            let mut n: [Eis; 3] = std::array::from_fn(|_| Eis::zero());
            n[to] = Eis::one();
            n[from] = -r.clone();
            let normal = ProjectivePoint::new(n).expect("nonzero");
            lines.push(FixedLine {
                name: format!("l{}{i}", j + 1),
                equation: format!("x{to} = {}x{from}", ["", "rho*", "rho^2*"][i as usize]),
                normal,
            });
            let mut y: [Eis; 3] = std::array::from_fn(|_| Eis::zero());
            y[from] = Eis::one();
            y[to] = -r;
            points.push(FixedPoint { name: format!("y{}{i}", j + 1), point: ProjectivePoint::new(y).expect("nonzero") });
        }
    }
    let triple_points = triple_points(&lines.iter().map(|l| l.normal.clone()).collect::<Vec<_>>());
    FixedLocus { lines, points, triple_points }
}

fn triple_points(normals: &[ProjectivePoint]) -> Vec<ProjectivePoint> {
    let mut candidates = BTreeSet::new();
    for (a, n) in normals.iter().enumerate() {
        for m in &normals[a + 1..] {
            if let Ok(p) = ProjectivePoint::new(cross(n.coords(), m.coords())) {
                candidates.insert(p);
            }
        }
    }
    candidates
        .into_iter()
        .filter(|p| normals.iter().filter(|n| p.pair(n.coords()).is_zero()).count() == 3)
        .collect()
}

/// The fixed locus recomputed from eigenspaces of the nontrivial group
/// elements: two-dimensional eigenspaces give lines, one-dimensional ones
/// give points, and points already on a fixed line are dropped.
pub fn fixed_locus_from_eigenspaces() -> Result<(BTreeSet<ProjectivePoint>, BTreeSet<ProjectivePoint>, Vec<ProjectivePoint>)> {
    let mut lines = BTreeSet::new();
    let mut isolated = BTreeSet::new();
    for g in enumerate_group().iter().filter(|g| !g.is_identity()) {
        for space in g.eigenspaces()? {
            match space.len() {
                2 => {
                    lines.insert(ProjectivePoint::new(cross(&space[0], &space[1]))?);
                }
                1 => {
                    isolated.insert(ProjectivePoint::new(space[0].clone())?);
                }
                _ => {}
            }
        }
    }
    let points: BTreeSet<ProjectivePoint> = isolated
        .iter()
        .filter(|p| lines.iter().all(|n| !p.pair(n.coords()).is_zero()))
        .cloned()
        .collect();
    let normals: Vec<ProjectivePoint> = lines.iter().cloned().collect();
    Ok((lines, points, triple_points(&normals)))
}

/// Evaluation of a curve on one orbit of size 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitObstruction {
    pub orbit: String,
    pub points: Vec<ProjectivePoint>,
    pub values: Vec<LambdaPoly>,
    /// Monic gcd of the values; zero when the orbit lies on the curve for
    /// every lambda.
    pub obstruction: LambdaPoly,
    /// Lambdas for which the whole orbit lies on the curve.
    pub roots: Vec<Eis>,
    pub unresolved: Vec<LambdaPoly>,
    pub contained_for_all_lambda: bool,
}

/// For each orbit of size 3, the lambda-polynomial whose roots are exactly
/// the parameters at which the curve contains the orbit.
pub fn curve_orbit_obstruction(c: &MultiPoly, use_quadratic_map: bool) -> Result<Vec<OrbitObstruction>> {
    if c.nvars() != 3 {
        return Err(Error::NotPlanar(c.nvars()));
    }
    c.homogeneous_degree()?;
    let f = if use_quadratic_map { c.substitute(&quadratic_map())? } else { c.clone() };
    let mut out = Vec::new();
    for (name, points) in order_three_orbits() {
        let values = points.iter().map(|p| f.evaluate(p.coords())).collect::<Result<Vec<_>>>()?;
        let obstruction = values.iter().fold(LambdaPoly::zero(), |g, v| g.gcd(v));
        let (roots, unresolved) = if obstruction.is_zero() || obstruction.is_constant() {
            (Vec::new(), Vec::new())
        } else {
            let r = lambda_roots(&obstruction)?;
            (r.roots, r.unresolved)
        };
        out.push(OrbitObstruction {
            orbit: name,
            contained_for_all_lambda: obstruction.is_zero(),
            points,
            values,
            obstruction,
            roots,
            unresolved,
        });
    }
    Ok(out)
}

/// Union of the resolved exceptional parameters over all orbits.
pub fn exceptional_lambdas(obstructions: &[OrbitObstruction]) -> BTreeSet<Eis> {
    obstructions.iter().flat_map(|o| o.roots.iter().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::{bl2_sextic, parse_poly, X_VARS};

    #[test]
    fn group_has_eighteen_elements() {
        let g = enumerate_group();
        assert_eq!(g.len(), 18);
        assert!(g.contains(&ProjectiveTransform::identity()));
        let s = ProjectiveTransform::sigma();
        assert!(s.compose(&s).compose(&s).is_identity());
        for a in &g {
            assert!(matches!(a.order(), Some(1 | 2 | 3 | 6)));
            for b in &g {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn relations() {
        let (s, t, i) = (ProjectiveTransform::sigma(), ProjectiveTransform::tau(), ProjectiveTransform::iota());
        assert_eq!(i.compose(&s).compose(&i), s.compose(&s));
        assert_eq!(i.compose(&t).compose(&i), t.compose(&t));
        assert_eq!(s.compose(&t), t.compose(&s));
    }

    #[test]
    fn orbits() {
        let o = orbit(&ProjectivePoint::parse("1:0:0").unwrap());
        assert_eq!(o.size, 3);
        let o = orbit(&ProjectivePoint::parse("1:1:rho").unwrap());
        assert_eq!(o.size, 3);
        for s in ["1:1:rho", "1:rho:1", "rho:1:1"] {
            assert!(o.contains(&ProjectivePoint::parse(s).unwrap()));
        }
        assert_eq!(orbit(&ProjectivePoint::parse("1:2:3").unwrap()).size, 18);
        assert_eq!(orbit(&ProjectivePoint::parse("1:-1:0").unwrap()).size, 9);
    }

    #[test]
    fn fixed_locus_two_ways() {
        let f = fixed_locus();
        assert_eq!((f.lines.len(), f.points.len(), f.triple_points.len()), (9, 9, 12));
        assert_eq!(f.lines[0].equation, "x1 = x0");
        assert_eq!(f.lines[5].equation, "x2 = rho^2*x1");
        assert_eq!(f.points[0].point, ProjectivePoint::parse("1:-1:0").unwrap());
        let (lines, points, triples) = fixed_locus_from_eigenspaces().unwrap();
        let l: BTreeSet<_> = f.lines.iter().map(|l| l.normal.clone()).collect();
        let p: BTreeSet<_> = f.points.iter().map(|p| p.point.clone()).collect();
        assert_eq!(lines, l);
        assert_eq!(points, p);
        assert_eq!(triples, f.triple_points);
    }

    #[test]
    fn triple_points_form_the_four_small_orbits() {
        let f = fixed_locus();
        let g = enumerate_group();
        let mut table: Vec<ProjectivePoint> = order_three_orbits().into_iter().flat_map(|(_, p)| p).collect();
        table.sort();
        assert_eq!(f.triple_points, table);
        for (_, pts) in order_three_orbits() {
            let o = orbit_under(&g, &pts[0]);
            assert_eq!(o.size, 3);
            for p in &pts {
                assert!(o.contains(p));
            }
        }
    }

    #[test]
    fn stabilizers() {
        let f = fixed_locus();
        let g = enumerate_group();
        for l in &f.lines {
            assert!(g.iter().any(|h| !h.is_identity() && h.apply_line(&l.normal) == l.normal));
        }
        for y in &f.points {
            assert!(g.iter().any(|h| !h.is_identity() && h.apply(&y.point) == y.point));
        }
    }

    #[test]
    fn simple_obstructions() {
        let x0 = parse_poly("x0", &X_VARS).unwrap();
        let r = curve_orbit_obstruction(&x0, false).unwrap();
        assert_eq!(r[0].obstruction, LambdaPoly::one());
        let xyz = parse_poly("x0*x1*x2", &X_VARS).unwrap();
        let r = curve_orbit_obstruction(&xyz, false).unwrap();
        assert!(r[0].contained_for_all_lambda);
        let bad = parse_poly("x0 + x1^2", &X_VARS).unwrap();
        assert_eq!(curve_orbit_obstruction(&bad, false), Err(Error::NotHomogeneous));
    }

    #[test]
    fn composed_sextic_exceptional_set() {
        let r = curve_orbit_obstruction(&bl2_sextic(), true).unwrap();
        assert!(r.iter().all(|o| !o.obstruction.is_zero()));
        let set = exceptional_lambdas(&r);
        let want: BTreeSet<Eis> = [Eis::one(), Eis::rho(), Eis::rho_pow(2)].into_iter().collect();
        assert_eq!(set, want);
    }

    #[test]
    fn action_on_curves_is_covariant() {
        let f = parse_poly("x0^2*x1 + 2*x2^3", &X_VARS).unwrap();
        let g = ProjectiveTransform::sigma().compose(&ProjectiveTransform::tau());
        let p = ProjectivePoint::parse("1:2:-1").unwrap();
        let moved = g.act_on_poly(&f).unwrap();
        let before = f.evaluate(p.coords()).unwrap();
        let after = moved.evaluate(g.apply(&p).coords()).unwrap();
        // equal up to the scalar lost in normalizing the image point
        assert_eq!(before.is_zero(), after.is_zero());
        let on = ProjectivePoint::parse("2:0:-1").unwrap();
        let h = parse_poly("x0^3 + 8*x2^3", &X_VARS).unwrap();
        assert!(h.evaluate(on.coords()).unwrap().is_zero());
        assert!(g.act_on_poly(&h).unwrap().evaluate(g.apply(&on).coords()).unwrap().is_zero());
    }
}
