use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by game construction and solver operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A game needs at least one player.
    #[error("a game needs at least one player")]
    EmptyGame,
    /// A weight below 2 at the given 1-based position.
    #[error("weight {value} at position {position} is below 2")]
    InvalidWeight { position: usize, value: BigInt },
    /// A player index of 0 or beyond the game's player count.
    #[error("player {0} does not exist in this game")]
    InvalidPlayer(usize),
    /// The player is already a member of the coalition.
    #[error("player {0} is already in the coalition")]
    PlayerInCoalition(usize),
    /// The same player listed twice when building a coalition.
    #[error("player {0} appears more than once")]
    DuplicatePlayer(usize),
    /// An ordering that is not a bijection over 1..=n.
    #[error("permutation is not a bijection over 1..={expected}")]
    InvalidPermutation { expected: usize },
    /// A payoff vector of the wrong length for the game.
    #[error("expected {expected} payoffs, got {got}")]
    LengthMismatch { got: usize, expected: usize },
    /// Payoffs do not distribute the grand-coalition value exactly.
    #[error("payoffs sum to {sum}, expected {expected}")]
    NotAnImputation { sum: BigRational, expected: BigInt },
    /// The instance is too large for exhaustive enumeration.
    #[error("{n} players exceed the enumeration limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },
    /// Mixture coefficients must be nonnegative and sum to exactly 1.
    #[error("mixture coefficients must be nonnegative and sum to exactly 1")]
    BadMixture,
}

pub type Result<T> = std::result::Result<T, Error>;
