//! Exact scalars: the Eisenstein rationals `Q(rho)` and univariate
//! polynomials over them.

mod eis;
pub mod eisint;
pub mod factor;
mod lambda_poly;
mod roots;

pub use eis::Eis;
pub use lambda_poly::LambdaPoly;
pub(crate) use lambda_poly::{push_signed, render_term};
pub use roots::{lambda_roots, RootReport};

/// Univariate polynomials over `Q(rho)` in an affine coordinate share the
/// representation of lambda-polynomials.
pub type UniPoly = LambdaPoly;


use crate::error::Result;

/// Inverse in `Q(rho)`; fails on zero.
pub fn eis_invert(x: &Eis) -> Result<Eis> {
    x.inv()
}

/// `a^2 - ab + b^2`.
pub fn eis_norm(x: &Eis) -> num_rational::BigRational {
    x.norm()
}

