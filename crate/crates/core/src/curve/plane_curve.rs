use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polynomials::{parse_poly, MultiPoly, X_VARS};
use crate::scalars::Eis;

/// A plane projective curve `F = 0` with `F` homogeneous in three variables.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    equation: MultiPoly,
    degree: u32,
}

impl PlaneCurve {
    pub fn new(equation: MultiPoly) -> Result<Self> {
        if equation.nvars() != 3 {
            return Err(Error::NotPlanar(equation.nvars()));
        }
        if equation.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = equation.homogeneous_degree()?;
        if degree == 0 {
            return Err(Error::InvalidArgument("a nonzero constant defines no curve".into()));
        }
        Ok(PlaneCurve { equation, degree })
    }

    /// Parses a curve in `x0, x1, x2`.
    pub fn parse(text: &str) -> Result<Self> {
        PlaneCurve::new(parse_poly(text, &X_VARS)?)
    }

    pub fn parse_in(text: &str, vars: &[impl AsRef<str>]) -> Result<Self> {
        PlaneCurve::new(parse_poly(text, vars)?)
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn vars(&self) -> &[String] {
        self.equation.vars()
    }

    pub fn is_lambda_free(&self) -> bool {
        self.equation.is_lambda_free()
    }

    pub(crate) fn require_specialized(&self) -> Result<()> {
        if self.is_lambda_free() {
            Ok(())
        } else {
            Err(Error::LambdaSymbolic)
        }
    }

    /// The curve with `lambda` replaced by `value`.
    pub fn specialize(&self, value: &Eis) -> Result<Self> {
        PlaneCurve::new(self.equation.specialize_lambda(value))
    }

    pub fn partials(&self) -> [MultiPoly; 3] {
        std::array::from_fn(|i| self.equation.partial(i))
    }

    pub fn contains(&self, p: &super::ProjectivePoint) -> bool {
        self.equation.evaluate(p.coords()).map(|v| v.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.equation)
    }
}

impl fmt::Debug for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneCurve(deg {}: {})", self.degree, self.equation)
    }
}

impl Serialize for PlaneCurve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.equation.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(PlaneCurve::parse("x0^3 + x1^3 + x2^3").unwrap().degree(), 3);
        assert_eq!(PlaneCurve::parse("x0^2 + x1"), Err(Error::NotHomogeneous));
        assert_eq!(PlaneCurve::parse("0"), Err(Error::ZeroPolynomial));
        assert!(matches!(PlaneCurve::parse_in("a + b", &["a", "b"]), Err(Error::NotPlanar(2))));
    }

    #[test]
    fn lambda_specialization() {
        let c = PlaneCurve::parse("x0^2 - lambda*x1*x2").unwrap();
        assert_eq!(c.require_specialized(), Err(Error::LambdaSymbolic));
        let s = c.specialize(&Eis::int(2)).unwrap();
        assert_eq!(s.equation(), PlaneCurve::parse("x0^2 - 2*x1*x2").unwrap().equation());
    }
}
