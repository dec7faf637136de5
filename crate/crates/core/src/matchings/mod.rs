//! Special matchings and special partial matchings.

mod enumerate;
mod matching;
mod product;

use std::sync::Arc;

pub use enumerate::{
    enumerate_partial_matchings, enumerate_perfect_matchings, enumerate_special_matchings,
    enumerate_special_partial_matchings,
};
pub use matching::{
    idempotent_from_matching, idempotent_from_partial, is_special, satisfies_lifting, Direction,
    Matching, MatchingJson, PartialMatching,
};
pub use product::{product_decomposition_check, ProductDecomposition};

use crate::endo::{Endo, MonoidClosure};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// `M^K`: generated by the identity and `P^M` for every special matching `M`.
pub fn special_monoid(p: &Arc<Poset>) -> Result<MonoidClosure> {
    let gens = special_generators(p)?;
    MonoidClosure::generate(p.clone(), &gens)
}

/// `{id} ∪ {P^M : M special}` in enumeration order.
pub fn special_generators(p: &Arc<Poset>) -> Result<Vec<Endo>> {
    let mut gens = vec![Endo::identity(p.clone())];
    for m in enumerate_special_matchings(p) {
        gens.push(m.idempotent()?);
    }
    Ok(gens)
}

/// `{id} ∪ {P^{M_p} : M_p special partial}`; just the identity below two elements.
pub fn special_partial_generators(p: &Arc<Poset>) -> Result<Vec<Endo>> {
    let mut gens = vec![Endo::identity(p.clone())];
    match enumerate_special_partial_matchings(p) {
        Ok(ms) => {
            for m in ms {
                gens.push(m.idempotent()?);
            }
        }
        Err(Error::TooSmall) => {}
        Err(e) => return Err(e),
    }
    Ok(gens)
}

/// `M_p^K`: generated by the identity and `P^{M_p}` for every special partial matching.
pub fn special_partial_monoid(p: &Arc<Poset>) -> Result<MonoidClosure> {
    let gens = special_partial_generators(p)?;
    MonoidClosure::generate(p.clone(), &gens)
}
