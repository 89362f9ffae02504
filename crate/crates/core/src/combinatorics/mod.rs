//! Partitions, semistandard tableaux, and Schur functor dimensions.

mod partition;
mod tableau;

pub use partition::Partition;
pub use tableau::{schur_dimension, ssyt_count, ssyt_stream, SsytStream, TableauContent};

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigUint {
    use num_bigint::BigUint;
    use num_traits::{One, Zero};
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}
