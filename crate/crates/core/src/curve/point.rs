use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomials::parse_point;
use crate::scalars::Eis;

/// A point of the projective plane over `Q(rho)`, normalized so that its
/// first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: [Eis; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [Eis; 3]) -> Result<Self> {
        let k = coords.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = coords[k].inv()?;
        let coords = coords.map(|c| &c * &inv);
        Ok(ProjectivePoint { coords })
    }

    pub fn from_slice(coords: &[Eis]) -> Result<Self> {
        let arr: [Eis; 3] = coords
            .to_vec()
            .try_into()
            .map_err(|v: Vec<Eis>| Error::ArityMismatch { expected: 3, found: v.len() })?;
        ProjectivePoint::new(arr)
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        ProjectivePoint::new([Eis::int(a), Eis::int(b), Eis::int(c)])
    }

    /// Parses `a:b:c` with the scalar grammar.
    pub fn parse(text: &str) -> Result<Self> {
        ProjectivePoint::from_slice(&parse_point(text)?)
    }

    pub fn coords(&self) -> &[Eis; 3] {
        &self.coords
    }

    /// Index of the coordinate normalized to 1.
    pub fn chart(&self) -> usize {
        self.coords.iter().position(|c| c.is_one()).expect("normalized point")
    }

    /// Image under a 3x3 matrix acting on column vectors.
    pub fn transform(&self, m: &[[Eis; 3]; 3]) -> Result<Self> {
        let img: [Eis; 3] = std::array::from_fn(|i| {
            (0..3).fold(Eis::zero(), |acc, j| &acc + &(&m[i][j] * &self.coords[j]))
        });
        ProjectivePoint::new(img)
    }

    /// The line `{u : u . p = 0}` viewed in dual coordinates equals `p`; this
    /// is the bilinear pairing with a line given by its coefficients.
    pub fn pair(&self, line: &[Eis; 3]) -> Eis {
        (0..3).fold(Eis::zero(), |acc, i| &acc + &(&line[i] * &self.coords[i]))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "{a}:{b}:{c}")
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
