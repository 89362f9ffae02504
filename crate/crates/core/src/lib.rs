//! Second Chern classes of Schur functors of SL_n, generator tables for the
//! representation rings of SL_n/μ_d, and the gcd certificate for the image of
//! the cycle class map CH²(BG) → H⁴(BG, Z).
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: partitions, streaming semistandard tableaux, and
//!   hook-content dimensions.
//! * [`weights`]: dominant weights, the descent criterion, and the Hilbert
//!   basis of the congruence monoid.
//! * [`chern`]: n_λ by tableau enumeration and by the closed form, with
//!   cross-checking.
//! * [`repring`]: generator tables, image indices, stored cases, and the
//!   SL_{ℓ²}/μ_ℓ exploration.
//! * [`cli`]: the `schern` command-line front end and its result cache.
//!
//! ```
//! use schern::{chern, combinatorics::Partition};
//!
//! let lambda: Partition = "2,2,2".parse().unwrap();
//! let r = chern::c2(8, &lambda, chern::MethodChoice::Both, &Default::default()).unwrap();
//! assert_eq!(r.n_lambda, 700u32.into());
//! ```

pub mod chern;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod repring;
pub mod weights;

pub use error::{Error, Result};
