use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertical line has no above/below")]
    VerticalLine,

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall { what: &'static str, min: u64, got: u64 },

    #[error("{what} = {got} exceeds the configured maximum {max}")]
    LimitExceeded { what: &'static str, got: u64, max: u64 },

    #[error("point set is empty")]
    Empty,

    #[error("expected a power-of-two number of points, got {0}")]
    NotPowerOfTwo(usize),

    #[error("points {0} and {1} share the x-coordinate")]
    DuplicateX(usize, usize),

    #[error("points {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),

    #[error("point sets differ in size ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("input is not an isothetic drawing of the Horton set: {0}")]
    NotHorton(String),

    #[error("order type differs from the Horton set at triple ({0}, {1}, {2})")]
    OrderTypeMismatch(usize, usize, usize),

    #[error("{0}")]
    OutOfRange(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by a resource guard rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::LimitExceeded { .. })
    }
}
