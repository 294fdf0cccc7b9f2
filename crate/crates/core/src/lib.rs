//! Exact volumes of spheres, balls and ball intersections in the sum-rank
//! metric over `F_{q^m}^n`, split into `ell` blocks of length `eta`.
//!
//! Every closed-form count in this crate is paired with a brute-force
//! counterpart in [`oracle`], which enumerates the whole space at tiny
//! parameters and serves as ground truth.
//!
//! Module map:
//!
//! - [`qkit`]: Gaussian binomials, rank counts and q-Krawtchouk values.
//! - [`compositions`]: bounded ordered partitions of a sum-rank weight.
//! - [`volumes`]: sphere and ball volumes and the weight distribution.
//! - [`intersections`]: rank-metric intersection numbers and the sum-rank
//!   ball intersection, exact and in the closed special-case forms.
//! - [`oracle`]: exhaustive enumeration over prime fields.
//! - [`report`] and [`verify`]: the machine-readable report and the
//!   formula-vs-oracle harness behind the `verify` command.
//!
//! With the default `parallel` feature the enumeration-heavy paths run on
//! rayon; without it every [`Strategy`] resolves to the sequential path.

pub mod compositions;
mod error;
mod exec;
pub mod intersections;
pub mod oracle;
mod params;
pub mod qkit;
pub mod report;
pub mod verify;
pub mod volumes;

pub use compositions::RankProfile;
pub use error::{Error, Result};
pub use exec::Strategy;
pub use params::Params;

/// Arbitrary-precision nonnegative count.
pub type Count = num_bigint::BigUint;

/// Arbitrary-precision signed integer, used where alternating sums appear.
pub type SignedCount = num_bigint::BigInt;
