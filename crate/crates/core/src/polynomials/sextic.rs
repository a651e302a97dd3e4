//! The sextic `D(lambda)` from the (1,3) special case and the quadratic
//! coordinates it is written in.

use super::{parse_poly, MultiPoly};

pub const Y_VARS: [&str; 3] = ["y0", "y1", "y2"];
pub const X_VARS: [&str; 3] = ["x0", "x1", "x2"];

/// The mixed term uses `y0*y1*y2`; with it `D(lambda)` has 9 cusps.
pub const SEXTIC_NOTE: &str =
    "the mixed term of the sextic is -6*lambda^2*y0*y1*y2*(y0^3 + y1^3 + y2^3)";

pub const SEXTIC_TEXT: &str = "(y0^6 + y1^6 + y2^6) \
    + 2*(2*lambda^3 - 1)*(y0^3*y1^3 + y0^3*y2^3 + y1^3*y2^3) \
    - 6*lambda^2*y0*y1*y2*(y0^3 + y1^3 + y2^3) \
    - 3*lambda*(lambda^3 - 4)*y0^2*y1^2*y2^2";

/// `D(lambda)` in `y0, y1, y2` with `lambda` symbolic.
pub fn bl2_sextic() -> MultiPoly {
    parse_poly(SEXTIC_TEXT, &Y_VARS).expect("built-in sextic parses")
}

/// `y_i = 3 x_i^2 - 3 lambda x_j x_k` as polynomials in `x0, x1, x2`.
pub fn quadratic_map() -> [MultiPoly; 3] {
    [
        "3*x0^2 - 3*lambda*x1*x2",
        "3*x1^2 - 3*lambda*x0*x2",
        "3*x2^2 - 3*lambda*x0*x1",
    ]
    .map(|s| parse_poly(s, &X_VARS).expect("built-in map parses"))
}

/// `D(lambda)` pulled back along the quadratic map: degree 12 in `x`.
pub fn composed_sextic() -> MultiPoly {
    bl2_sextic().substitute(&quadratic_map()).expect("arity 3")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sextic_is_homogeneous_of_degree_6() {
        let d = bl2_sextic();
        assert_eq!(d.homogeneous_degree().unwrap(), 6);
        assert_eq!(d.lambda_degree(), 4);
    }

    #[test]
    fn composition_has_degree_12() {
        let c = composed_sextic();
        assert_eq!(c.homogeneous_degree().unwrap(), 12);
        assert_eq!(c.vars(), &X_VARS.map(String::from));
    }
}
