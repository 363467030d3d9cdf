use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("evaluation point within the pole guard ({0})")]
    PoleProximity(String),
    #[error("value exceeds the representable floating range ({0})")]
    Overflow(String),
    #[error("derivative order {requested} exceeds the configured maximum {max}")]
    OrderTooLarge { requested: u32, max: u32 },
    #[error("a {kind} lies on the circle |z| = {r} (at |z| = {modulus})")]
    BoundaryPole { kind: &'static str, r: f64, modulus: f64 },
    #[error("root finder failed to converge: {0}")]
    RootFindingFailure(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("quadrature tolerance not met: {0}")]
    ToleranceNotMet(String),
    #[error("r-grid too small: {0}")]
    GridTooSmall(String),
    #[error("argument outside the valid domain: {0}")]
    DomainError(String),
    #[error("radius order violated: r = {r} must be strictly below rho = {rho}")]
    RadiusOrder { r: f64, rho: f64 },
    #[error("derivative orders must satisfy k > j >= 0, got k = {k}, j = {j}")]
    OrderError { k: u32, j: u32 },
    #[error("differential polynomial has no terms")]
    EmptyPolynomial,
    #[error("Clunie split rejected; terms of Q with degree above n = {n}: {terms}")]
    DegreeViolation { n: u32, terms: String },
    #[error("constant-in-w term P(z,0) vanishes identically")]
    ZeroConstantTerm,
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("cannot normalize model to f(0) = 1: {0}")]
    NormalizationError(String),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
