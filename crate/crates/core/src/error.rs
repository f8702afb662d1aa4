use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different fields Q(sqrt {0}) and Q(sqrt {1})")]
    FieldMismatch(i64, i64),
    #[error("field tag {0} is not a square-free integer other than 0")]
    BadFieldTag(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("polynomial is not homogeneous: found degrees {0} and {1}")]
    NonHomogeneous(u32, u32),
    #[error("linear change is singular")]
    SingularMatrix,
    #[error("curve is not reduced")]
    NonReduced,
    #[error("Hilbert function did not stabilize before degree {0}; singularities may be non-isolated")]
    NonIsolatedSuspected(u32),
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("point is a smooth point of the curve")]
    NotSingular,
    #[error("singular point is not isolated")]
    NonIsolated,
    #[error("singularity is not simple")]
    NotSimple,
    #[error("no generic coordinate change found after {0} attempts")]
    GenericityFailure(usize),
    #[error("unknown curve family `{0}`")]
    UnknownFamily(String),
    #[error("parameter m = {m} outside the valid range for `{name}`")]
    ParamOutOfRange { name: String, m: i64 },
    #[error("curves share a common component")]
    SharedComponent,
    #[error("intersection point could not be located")]
    ProfileIncomplete,
    #[error("union acquires a non-simple singularity")]
    NonSimpleUnion,
    #[error("added component must be a smooth line or conic (got degree {0})")]
    UnsupportedComponent(u32),
    #[error("hypotheses could not be verified")]
    Unconfirmed,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("construction failed verification: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
