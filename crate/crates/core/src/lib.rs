//! Exact Stirling numbers of the first kind, Bernoulli and Euler numbers,
//! Bernoulli polynomials, and verification of the sum identities that tie
//! them together.
//!
//! All arithmetic is exact: integers are arbitrary precision and rationals
//! are kept in lowest terms, so identity checks are plain equality.

pub mod error;
pub mod identities;
pub mod num;
pub mod oracles;
pub mod poly;
pub mod sequences;

pub use error::{Error, Result};
pub use identities::{IdentityChecker, IdentityId, IdentityReport, IdentitySides, ReportRow};
pub use num::{ExactInt, ExactRat};
pub use poly::RatPoly;
pub use sequences::{BernoulliConvention, SeqCache};
