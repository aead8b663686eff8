//! Error type shared by all modules.

use num_bigint::BigInt;
use thiserror::Error;

use crate::rootsystem::Series;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The (series, rank) pair is outside the classification.
    #[error("invalid rank {rank} for series {series}: series {series} requires {allowed}")]
    InvalidRank {
        series: Series,
        rank: usize,
        allowed: &'static str,
    },

    /// A weight's coordinate vector has the wrong length for the root system.
    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    /// An operation defined only for dominant weights was given a
    /// non-dominant one.
    #[error("weight {weight} is not dominant")]
    NotDominant { weight: String },

    /// The weight system (or a tensor convolution) would exceed the
    /// configured total-mass cap. Never a silent truncation.
    #[error("weight system of {weight} has total mass {mass}, exceeding the cap of {cap}")]
    CapExceeded {
        weight: String,
        mass: BigInt,
        cap: u64,
    },

    /// A quantity that must be an integer by construction failed to reduce
    /// to one. Signals a construction bug, never a user error.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// A string did not parse as a Lie type.
    #[error("cannot parse {input:?} as a Lie type (expected a series letter A-G followed by a rank, e.g. \"B5\")")]
    ParseLieType { input: String },

    /// A string did not parse as a weight.
    #[error("cannot parse {input:?} as a weight: {reason}")]
    ParseWeight { input: String, reason: String },

    /// A string did not parse as a verification scope.
    #[error("cannot parse {input:?} as a verification scope (expected \"all\", \"dtable\", \"bounds\", a series letter like \"B\", or a type like \"E6\")")]
    ParseScope { input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
