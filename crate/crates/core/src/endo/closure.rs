//! Submonoids of `Or(K)` generated by a list of endofunctions.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::Endo;
use crate::config::DEFAULT_CLOSURE_BUDGET;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// A composition-closed set of endofunctions containing the identity.
///
/// Elements are ordered lexicographically by image table; each carries a
/// shortest word over the generator list.
#[derive(Clone, Debug)]
pub struct MonoidClosure {
    poset: Arc<Poset>,
    generators: Vec<Endo>,
    tables: Vec<Arc<[u32]>>,
    words: Vec<Vec<usize>>,
    index: HashMap<Arc<[u32]>, usize>,
    idempotents: Vec<usize>,
}

impl MonoidClosure {
    pub fn generate(poset: Arc<Poset>, generators: &[Endo]) -> Result<Self> {
        Self::generate_with_budget(poset, generators, DEFAULT_CLOSURE_BUDGET)
    }

    /// Breadth-first closure; fails with `ClosureOverflow` past `budget` elements.
    pub fn generate_with_budget(
        poset: Arc<Poset>,
        generators: &[Endo],
        budget: usize,
    ) -> Result<Self> {
        for (index, g) in generators.iter().enumerate() {
            if !Arc::ptr_eq(g.poset(), &poset) && **g.poset() != *poset {
                return Err(Error::PosetMismatch);
            }
            let m = g.membership();
            if !m.in_or() {
                return Err(Error::NotInOrK {
                    index,
                    regressive: m.regressive,
                    order_preserving: m.order_preserving,
                });
            }
        }
        let gens: Vec<&[u32]> = generators.iter().map(|g| g.table()).collect();
        let identity: Arc<[u32]> = (0..poset.len() as u32).collect::<Vec<_>>().into();

        let mut seen: HashMap<Arc<[u32]>, usize> = HashMap::new();
        let mut tables = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        seen.insert(identity, 0);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            // products are computed in parallel, merged in frontier × generator order
            let products: Vec<Vec<Vec<u32>>> = frontier
                .par_iter()
                .map(|&i| {
                    let e = &tables[i];
                    gens.iter()
                        .map(|g| g.iter().map(|&y| e[y as usize]).collect())
                        .collect()
                })
                .collect();
            let mut next = Vec::new();
            for (&i, prods) in frontier.iter().zip(products) {
                for (gi, t) in prods.into_iter().enumerate() {
                    if seen.contains_key(t.as_slice()) {
                        continue;
                    }
                    if tables.len() >= budget {
                        return Err(Error::ClosureOverflow { budget });
                    }
                    let t: Arc<[u32]> = t.into();
                    let mut w = words[i].clone();
                    w.push(gi);
                    seen.insert(t.clone(), tables.len());
                    next.push(tables.len());
                    tables.push(t);
                    words.push(w);
                }
            }
            frontier = next;
        }

        let mut perm: Vec<usize> = (0..tables.len()).collect();
        perm.sort_by(|&a, &b| tables[a].cmp(&tables[b]));
        let tables: Vec<Arc<[u32]>> = perm.iter().map(|&i| tables[i].clone()).collect();
        let words: Vec<Vec<usize>> = perm
            .iter()
            .map(|&i| std::mem::take(&mut words[i]))
            .collect();
        let index = tables
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let idempotents = tables
            .iter()
            .enumerate()
            .filter(|(_, t)| t.iter().all(|&y| t[y as usize] == y))
            .map(|(i, _)| i)
            .collect();
        Ok(Self {
            poset,
            generators: generators.to_vec(),
            tables,
            words,
            index,
            idempotents,
        })
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn generators(&self) -> &[Endo] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn table(&self, i: usize) -> &[u32] {
        &self.tables[i]
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn endo(&self, i: usize) -> Endo {
        Endo::from_table(self.poset.clone(), self.tables[i].clone())
            .with_word(self.words[i].clone())
    }

    pub fn endos(&self) -> impl Iterator<Item = Endo> + '_ {
        (0..self.len()).map(|i| self.endo(i))
    }

    pub fn position(&self, table: &[u32]) -> Option<usize> {
        self.index.get(table).copied()
    }

    pub fn contains(&self, f: &Endo) -> bool {
        f.same_poset_as(&self.poset) && self.position(f.table()).is_some()
    }

    pub fn identity_index(&self) -> usize {
        let id: Vec<u32> = (0..self.poset.len() as u32).collect();
        self.position(&id)
            .expect("closure always holds the identity")
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.tables[i], &self.tables[j]);
        let t: Vec<u32> = b.iter().map(|&y| a[y as usize]).collect();
        self.position(&t)
            .expect("closure is closed under composition")
    }

    pub fn idempotent_indices(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn idempotents(&self) -> Vec<Endo> {
        self.idempotents.iter().map(|&i| self.endo(i)).collect()
    }
}

impl Endo {
    pub(crate) fn same_poset_as(&self, p: &Arc<Poset>) -> bool {
        Arc::ptr_eq(self.poset(), p) || **self.poset() == **p
    }
}

/// Closure of a nonempty generator list; the poset is taken from the generators.
pub fn generate_closure(gens: &[Endo]) -> Result<MonoidClosure> {
    let first = gens
        .first()
        .ok_or_else(|| Error::BadParameter("no generators given".into()))?;
    MonoidClosure::generate(first.poset().clone(), gens)
}

/// Every element of `Or(K)`, lexicographic by table. Intended for small posets.
pub fn regressive_endos(poset: &Arc<Poset>, budget: usize) -> Result<Vec<Endo>> {
    let n = poset.len();
    let order: Vec<usize> = poset.linear_extension().to_vec();
    let mut table = vec![u32::MAX; n];
    let mut out: Vec<Vec<u32>> = Vec::new();

    fn go(
        p: &Poset,
        order: &[usize],
        pos: usize,
        table: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        budget: usize,
    ) -> Result<()> {
        let Some(&x) = order.get(pos) else {
            if out.len() >= budget {
                return Err(Error::ClosureOverflow { budget });
            }
            out.push(table.clone());
            return Ok(());
        };
        // f(x) ≤ x and f(c) ≤ f(x) for every lower cover c (already assigned)
        let mut cand = p.down_set(x).clone();
        for &c in p.lower_covers(x) {
            cand.intersect_with(p.up_set(table[c] as usize));
        }
        for v in cand.iter() {
            table[x] = v as u32;
            go(p, order, pos + 1, table, out, budget)?;
        }
        table[x] = u32::MAX;
        Ok(())
    }

    go(poset, &order, 0, &mut table, &mut out, budget)?;
    out.sort();
    Ok(out
        .into_iter()
        .map(|t| Endo::from_table(poset.clone(), t.into()))
        .collect())
}
