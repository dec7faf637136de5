//! The order `P ≤ Q ⇔ PQ = QP = Q` on idempotents, and joins.

use std::sync::Arc;

use super::{Endo, MonoidClosure};
use crate::error::{Error, Result};
use crate::poset::Order;

/// Idempotents ordered by absorption. The identity, when present, is the minimum.
#[derive(Clone, Debug)]
pub struct IdempotentOrder {
    order: Order,
    elements: Vec<Endo>,
}

impl IdempotentOrder {
    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn elements(&self) -> &[Endo] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, e: &Endo) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.order.cover_pairs()
    }

    /// Least upper bound of two elements, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub = self.order.up_set(a).intersection(self.order.up_set(b));
        let mins = self.order.minimal_elements(&ub);
        (mins.len() == 1).then(|| mins[0])
    }

    /// Every pair has a join (with a minimum this makes a finite lattice).
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        self.order.minimum().is_some()
            && (0..n).all(|a| (a + 1..n).all(|b| self.join(a, b).is_some()))
    }
}

/// `P ≤ Q` iff `P∘Q = Q∘P = Q`.
pub fn absorbs(p: &Endo, q: &Endo) -> bool {
    let (pt, qt) = (p.table(), q.table());
    (0..pt.len()).all(|x| pt[qt[x] as usize] == qt[x] && qt[pt[x] as usize] == qt[x])
}

/// Builds the idempotent order; duplicates are collapsed and elements sorted by table.
pub fn idempotent_order(elems: &[Endo]) -> Result<IdempotentOrder> {
    let mut elements: Vec<Endo> = Vec::with_capacity(elems.len());
    for e in elems {
        e.require_idempotent()?;
        if let Some(first) = elements.first() {
            if !first.same_poset(e) {
                return Err(Error::PosetMismatch);
            }
        }
        elements.push(e.clone());
    }
    elements.sort_by(|a, b| a.table().cmp(b.table()));
    elements.dedup_by(|a, b| a.table() == b.table());
    let order = Order::from_relation(elements.len(), |i, j| absorbs(&elements[i], &elements[j]))?;
    Ok(IdempotentOrder { order, elements })
}

/// `p ∨ q`: the least idempotent of `⟨p, q⟩` absorbing both.
pub fn join_idempotents(p: &Endo, q: &Endo) -> Result<Endo> {
    p.require_idempotent()?;
    q.require_idempotent()?;
    if !p.same_poset(q) {
        return Err(Error::PosetMismatch);
    }
    let m = MonoidClosure::generate(Arc::clone(p.poset()), &[p.clone(), q.clone()])?;
    let candidates: Vec<Endo> = m
        .idempotents()
        .into_iter()
        .filter(|t| absorbs(p, t) && absorbs(q, t))
        .collect();
    let least: Vec<&Endo> = candidates
        .iter()
        .filter(|t| candidates.iter().all(|u| absorbs(t, u)))
        .collect();
    match least.as_slice() {
        [t] => Ok(Endo::clone(t)),
        _ => Err(Error::Invariant(format!(
            "{} least absorbing idempotents in the generated submonoid",
            least.len()
        ))),
    }
}
