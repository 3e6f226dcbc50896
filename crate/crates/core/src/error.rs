use thiserror::Error;

/// Errors raised by the period machinery and the simulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A bit string must contain at least one symbol.
    #[error("bit string is empty")]
    EmptyBitString,
    /// A symbol other than `0` or `1` was found while parsing.
    #[error("invalid bit {found:?} at position {position}")]
    InvalidBit {
        /// 1-indexed position of the offending symbol.
        position: usize,
        /// The offending character.
        found: char,
    },
    /// Run vectors are only defined for strings starting with `1`.
    #[error("bit string starts with 0")]
    StartsWithZero,
    /// The vector violates the defining constraints of `M`.
    #[error("not a run vector: {0}")]
    NotInM(&'static str),
    /// The operation needs `v_1 > 1`.
    #[error("run vector has v_1 <= 1 (not in M*)")]
    NotInMStar,
    /// The vector has no admissible start vector for the requested `p`.
    #[error("run vector is not in M_{p}^+")]
    NotInMpPlus {
        /// The requested band width parameter.
        p: usize,
    },
    /// An index argument is outside its allowed range.
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange {
        /// The offending index.
        index: usize,
        /// Largest admissible index.
        max: usize,
    },
    /// Cyclic parameters need a vector of positive even length.
    #[error("vector of length {0} is not of positive even length")]
    OddLength(usize),
    /// A progression coefficient must divide `gcd(alpha, gamma)`.
    #[error("{m} does not divide gcd(alpha, gamma) = {gcd}")]
    NotADivisor {
        /// The candidate coefficient.
        m: u64,
        /// `gcd(alpha, gamma)`.
        gcd: u64,
    },
    /// Parsing a run vector or parameter failed.
    #[error("parse error: {0}")]
    Parse(&'static str),
    /// Register parameters violate `0 <= k <= k + p < n`.
    #[error("invalid register parameters k={k}, p={p}, n={n}: need 0 <= k <= k+p < n")]
    InvalidParams {
        /// Lower end of the band.
        k: usize,
        /// Band width minus one.
        p: usize,
        /// Register length.
        n: usize,
    },
    /// A state's length does not match the register length.
    #[error("state has length {found}, register has length {expected}")]
    LengthMismatch {
        /// The register length `n`.
        expected: usize,
        /// The supplied length.
        found: usize,
    },
    /// The start weight lies outside `[k, k + p + 1]`.
    #[error("weight {weight} outside [k, k+p+1] = [{low}, {high}]")]
    WeightOutOfBand {
        /// Weight of the start state.
        weight: usize,
        /// `k`.
        low: usize,
        /// `k + p + 1`.
        high: usize,
    },
    /// All window weights along the orbit coincide; no parameter adjustment exists.
    #[error("window weight is constant along the orbit")]
    ConstantWeight,
    /// The weight extremes `0` and `p + 1` are not attained.
    #[error("parameters are not normalized: weight extremes 0 and p+1 not reached")]
    NotNormalized,
    /// Progression analysis needs a non-empty distance vector.
    #[error("distance vector is empty")]
    EmptyDistanceVector,
    /// An argument that must be positive was zero.
    #[error("{0} must be positive")]
    ZeroArgument(&'static str),
    /// Checked arithmetic overflowed.
    #[error("arithmetic overflow")]
    ArithmeticOverflow,
    /// The simulator hit its step budget before the start state recurred.
    #[error("start state did not recur within {0} steps")]
    IterationBudgetExceeded(u64),
    /// Exhaustive enumeration was requested for too many states.
    #[error("state space 2^{n} exceeds the limit 2^{limit}")]
    StateSpaceTooLarge {
        /// Register length.
        n: usize,
        /// Largest supported register length.
        limit: usize,
    },
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
