//! Sparse multivariate polynomials over `Q(rho)[lambda]`.

mod gcd;
mod multipoly;
mod parse;
mod resultant;
mod sextic;

pub use gcd::{content_in, gcd, primitive_part_in, squarefree_decomposition};
pub use multipoly::{Monomial, MultiPoly};
pub use parse::{parse_lambda_poly, parse_point, parse_poly};
pub use resultant::{bareiss_det, discriminant, resultant, sylvester_matrix};
pub(crate) use resultant::{discriminant_at, resultant_at};
pub use sextic::{bl2_sextic, composed_sextic, quadratic_map, SEXTIC_NOTE, SEXTIC_TEXT, X_VARS, Y_VARS};

use crate::error::Result;

/// Formal partial derivative with respect to a named variable.
pub fn partial_derivative(p: &MultiPoly, var: &str) -> Result<MultiPoly> {
    p.partial_derivative(var)
}

/// Composition `p(images)`.
pub fn substitute(p: &MultiPoly, images: &[MultiPoly]) -> Result<MultiPoly> {
    p.substitute(images)
}

/// Value of `p` at `point`, `lambda` kept symbolic.
pub fn evaluate(p: &MultiPoly, point: &[crate::scalars::Eis]) -> Result<crate::scalars::LambdaPoly> {
    p.evaluate(point)
}
