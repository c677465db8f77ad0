use thiserror::Error;

/// Errors raised by the public operations of this crate.
///
/// Violations of divisibility facts that hold by construction (for example a
/// non-integral `a`-coordinate coming out of `z_to_a`) are not represented
/// here; those indicate a bug and panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("parts must be weakly decreasing (part {index} = {value} is smaller than the next part {next})")]
    NonMonotone { index: usize, value: u64, next: u64 },

    #[error("cell ({row}, {col}) is not in the Young diagram")]
    OutOfDiagram { row: usize, col: usize },

    #[error("beta-set has nonzero charge ({members} nonnegative members vs {gaps} negative gaps)")]
    ChargeNonzero { members: usize, gaps: usize },

    #[error("partition is not a {modulus}-core")]
    NotACore { modulus: u64 },

    #[error("s and t must be coprime (got s = {s}, t = {t})")]
    NotCoprime { s: u64, t: u64 },

    #[error("invalid z-coordinates: {0}")]
    InvalidZ(String),

    #[error("invalid u-coordinates: {0}")]
    InvalidU(String),

    #[error("invalid beta-set encoding: {0}")]
    InvalidBeta(String),

    #[error("invalid a-coordinates: {0}")]
    InvalidA(String),

    #[error("z-coordinates are not symmetric (z[{index}] != z[-{index}])")]
    NotSymmetric { index: usize },

    #[error("parity condition violated: {0}")]
    ParityViolation(String),

    #[error("negative entry {value} at index {index}")]
    NegativeEntry { index: usize, value: i64 },

    #[error("requested bound {requested} exceeds the cap {cap}")]
    CapExceeded { requested: u64, cap: u64 },

    #[error("set of size {size} is too large for explicit permutation counting (limit {limit})")]
    TooLarge { size: usize, limit: usize },

    #[error("invalid s-set: {0}")]
    InvalidSSet(String),

    #[error("modulus must be positive")]
    ZeroModulus,
}

pub type Result<T> = std::result::Result<T, CoreError>;
