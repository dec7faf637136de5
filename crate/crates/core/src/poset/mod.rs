//! Finite graded posets.

mod families;
mod graded;
mod io;
mod iso;
mod order;

pub use families::{boolean_lattice, chain, divisor_poset, factorize, product, ProductIndex};
pub use graded::Poset;
pub use io::PosetJson;
pub use iso::{find_isomorphism, is_isomorphic};
pub use order::Order;

use crate::error::Result;
use crate::subset::ElementSubset;

/// Validating constructor; see [`Poset::build`].
pub fn build_poset(
    n: usize,
    covers: &[(usize, usize)],
    labels: Option<Vec<String>>,
) -> Result<Poset> {
    Poset::build(n, covers, labels)
}

/// `μ(x, y)` for `x ≤ y`.
pub fn mobius(p: &Poset, x: usize, y: usize) -> Result<num_bigint::BigInt> {
    p.mobius(x, y)
}

pub fn is_eulerian(p: &Poset) -> bool {
    p.is_eulerian()
}

/// `Some((m, M))` iff `s = [m, M]`.
pub fn is_interval(p: &Poset, s: &ElementSubset) -> Result<Option<(usize, usize)>> {
    p.order().is_interval(s)
}

pub fn ideal_below_atoms(p: &Poset, a: &ElementSubset) -> Result<ElementSubset> {
    p.ideal_below_atoms(a)
}
