use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::combinatorics::Partition;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("cannot parse partition {input:?}: {reason}")]
    PartitionSyntax { input: String, reason: String },

    #[error("partition {partition} has {len} rows, more than n = {n}")]
    TooManyRows {
        partition: Partition,
        len: usize,
        n: usize,
    },

    #[error("rank n = {0} is too small (need n >= {1})")]
    RankTooSmall(usize, usize),

    #[error("invalid group SL_{n}/mu_{d}: d must be a positive divisor of n and n >= 2")]
    InvalidGroup { n: usize, d: usize },

    #[error("weight has {got} coefficients, expected {expected} for SL_{n}", n = expected + 1)]
    WeightLength { got: usize, expected: usize },

    #[error(
        "dimension {dim} exceeds the enumeration ceiling {ceiling}; use the closed-form method"
    )]
    EnumerationCeiling { dim: BigUint, ceiling: u64 },

    #[error("{what}: {count} candidates exceed the ceiling {ceiling}")]
    CandidateCeiling {
        what: &'static str,
        count: BigUint,
        ceiling: u64,
    },

    #[error("closed form for n = {n}, partition {partition} is not integral: {value}")]
    NonIntegral {
        n: usize,
        partition: Partition,
        value: String,
    },

    #[error(
        "cross-check failed for n = {n}, partition {partition}: enumeration gave {enumeration}, closed form gave {closed_form}"
    )]
    CrossCheck {
        n: usize,
        partition: Partition,
        enumeration: BigInt,
        closed_form: BigInt,
    },

    #[error("cache mismatch for {key}: cached {cached}, recomputed {computed}")]
    CacheMismatch {
        key: String,
        cached: String,
        computed: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("unknown case {0:?}")]
    UnknownCase(String),

    #[error("ell = {0} must be an odd prime")]
    NotOddPrime(u64),

    #[error("ell = {ell} exceeds the configured ceiling {ceiling}")]
    EllCeiling { ell: u64, ceiling: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by bad input rather than by a failed computation.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotAPartition(_)
                | Error::PartitionSyntax { .. }
                | Error::TooManyRows { .. }
                | Error::RankTooSmall(..)
                | Error::InvalidGroup { .. }
                | Error::WeightLength { .. }
                | Error::EnumerationCeiling { .. }
                | Error::CandidateCeiling { .. }
                | Error::Usage(_)
                | Error::UnknownCase(_)
                | Error::NotOddPrime(_)
                | Error::EllCeiling { .. }
        )
    }

    /// True when two independent computations disagreed.
    pub fn is_cross_check(&self) -> bool {
        matches!(self, Error::CrossCheck { .. } | Error::CacheMismatch { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
