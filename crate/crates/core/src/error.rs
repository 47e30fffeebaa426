use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree too low to host C^{m} Hermite block: n = {n} < 2m+1 = {}", 2 * m + 1)]
    DegreeTooLow { m: usize, n: usize },

    #[error("form degree must be 0 or 1, got {0}")]
    InvalidFormDegree(usize),

    #[error("derivative of order {order} requested from `{name}`, which provides orders up to {available}")]
    MissingDerivative {
        name: String,
        order: usize,
        available: usize,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("Hermite basis h_({endpoint},{beta}) for m = {m} violates its endpoint conditions")]
    HermitePostcondition { m: usize, endpoint: usize, beta: usize },

    #[error("beta = {beta} out of range 0..={m}")]
    HermiteIndex { m: usize, beta: usize },

    #[error("form degree nu = {nu} out of range 0..={n_factors}")]
    NuOutOfRange { nu: usize, n_factors: usize },

    #[error("expected a form of degree {expected}, got degree {found}")]
    FormDegreeMismatch { expected: usize, found: usize },

    #[error("expected {expected} tensor factors, got {found}")]
    FactorCountMismatch { expected: usize, found: usize },

    #[error("quadrature order must be at least 1")]
    InvalidQuadratureOrder,

    #[error("probe degree {probe_degree} is below the element degree n = {n}")]
    ProbeDegreeTooLow { probe_degree: usize, n: usize },

    #[error("smooth input `{name}` disagrees with its exact polynomial at x = {x}")]
    InconsistentSmoothInput { name: String, x: f64 },

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
