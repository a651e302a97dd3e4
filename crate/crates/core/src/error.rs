use thiserror::Error;

/// Errors raised by the exact kernels and the scenario runners.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("substitution images use different variable sets")]
    MixedVariables,

    #[error("polynomial has degree 0 in `{0}`")]
    DegenerateDegree(String),

    #[error("degree in `{var}` is {degree}, at least {required} required")]
    DegreeTooSmall {
        var: String,
        degree: usize,
        required: usize,
    },

    #[error("inexact division")]
    InexactDivision,

    #[error("polynomial still depends on lambda; specialize it first")]
    LambdaSymbolic,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("a plane curve needs exactly 3 variables, found {0}")]
    NotPlanar(usize),

    #[error("the zero vector is not a projective point")]
    ZeroPoint,

    #[error("point is not on the curve")]
    PointNotOnCurve,

    #[error("point is a smooth point of the curve")]
    NonsingularPoint,

    #[error("the Hessian vanishes identically")]
    ZeroHessian,

    #[error("the Hessian shares a component with the curve")]
    HessianCommonComponent,

    #[error("dual curves are supported for degrees 2 to 4, got {0}")]
    UnsupportedDegree(usize),

    #[error("degenerate elimination: {0}")]
    DegenerateElimination(String),

    #[error("infeasible invariants: {0}")]
    InfeasibleInvariants(String),

    #[error("chow classes built for different polarization degrees ({0} vs {1})")]
    MismatchedPolarization(u64, u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("lambda = {0} is excluded")]
    ExcludedLambda(String),

    #[error("singular matrix")]
    SingularMatrix,
}

pub type Result<T> = std::result::Result<T, Error>;
