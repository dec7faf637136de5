//! Special matchings, special partial matchings and the monoids of regressive
//! order-preserving endofunctions they generate, on finite graded posets.
//!
//! The crate is organised bottom-up:
//!
//! * [`poset`]: graded posets, Möbius functions, named families and products;
//! * [`endo`]: endofunctions, monoid closures, idempotent orders and Galois checks;
//! * [`matchings`]: enumeration of (partial) special matchings and their idempotents;
//! * [`analysis`]: fibers, interval retracts, projections and gradedness theorems;
//! * [`coxeter`]: symmetric groups under Bruhat order, parabolic projections and involutions;
//! * [`repro`]: exact reproduction of the numeric claims, used by the CLI.

pub mod analysis;
pub mod builtin;
pub mod config;
pub mod coxeter;
pub mod endo;
pub mod error;
pub mod matchings;
pub mod poset;
pub mod repro;
pub mod subset;

pub use endo::{Endo, MonoidClosure};
pub use error::{Error, Result};
pub use matchings::{Matching, PartialMatching};
pub use num_bigint::BigInt;
pub use poset::{Order, Poset};
pub use subset::ElementSubset;
