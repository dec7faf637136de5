//! Endofunctions of a poset and the monoid `Or(K)` of regressive
//! order-preserving ones.

mod closure;
mod function;
mod galois;
mod idempotents;
mod json;

pub use closure::{generate_closure, regressive_endos, MonoidClosure};
pub use function::{check_membership, compose, Endo, Membership};
pub use galois::{galois_check, galois_verify, GaloisReport};
pub use idempotents::{absorbs, idempotent_order, join_idempotents, IdempotentOrder};
pub use json::{ClosureReport, EndoJson, PosetRef};
