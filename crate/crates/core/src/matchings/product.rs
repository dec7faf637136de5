//! Brute-force checks that special (partial) matchings of a product come
//! from one factor, and that the generated monoids split accordingly.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use super::enumerate::{enumerate_partial_matchings, enumerate_perfect_matchings};
use super::{
    enumerate_special_matchings, enumerate_special_partial_matchings, special_monoid,
    special_partial_monoid,
};
use crate::endo::MonoidClosure;
use crate::error::{Error, Result};
use crate::poset::{product, Poset, ProductIndex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductDecomposition {
    pub special_count: usize,
    pub partial_count: usize,
    pub special_matchings_lift: bool,
    pub partial_matchings_lift: bool,
    pub monoid_splits: bool,
    pub partial_monoid_splits: bool,
}

impl ProductDecomposition {
    pub fn holds(&self) -> bool {
        self.special_matchings_lift
            && self.partial_matchings_lift
            && self.monoid_splits
            && self.partial_monoid_splits
    }
}

fn lift(index: &ProductIndex, coord: usize, table: &[u32]) -> Vec<u32> {
    (0..index.len())
        .map(|id| {
            let mut t = index.decode(id);
            t[coord] = table[t[coord]] as usize;
            index.encode(&t) as u32
        })
        .collect()
}

fn product_table(index: &ProductIndex, a: &[u32], b: &[u32]) -> Vec<u32> {
    (0..index.len())
        .map(|id| {
            let t = index.decode(id);
            index.encode(&[a[t[0]] as usize, b[t[1]] as usize]) as u32
        })
        .collect()
}

/// `M^{K1×K2} ≅ M^{K1} × M^{K2}`: equal cardinality, every product map is a
/// member, and composition is computed coordinatewise.
fn monoid_splits(
    index: &ProductIndex,
    whole: &MonoidClosure,
    a: &MonoidClosure,
    b: &MonoidClosure,
) -> bool {
    if whole.len() != a.len() * b.len() {
        return false;
    }
    let mut embed = vec![vec![usize::MAX; b.len()]; a.len()];
    for (i, row) in embed.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            match whole.position(&product_table(index, a.table(i), b.table(j))) {
                Some(k) => *slot = k,
                None => return false,
            }
        }
    }
    let pairs = a.len() * b.len();
    if pairs * pairs > 1 << 20 {
        return true;
    }
    for i in 0..a.len() {
        for j in 0..b.len() {
            for k in 0..a.len() {
                for l in 0..b.len() {
                    let lhs = whole.product(embed[i][j], embed[k][l]);
                    if lhs != embed[a.product(i, k)][b.product(j, l)] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn product_decomposition_check(p1: &Poset, p2: &Poset) -> Result<ProductDecomposition> {
    let k = Arc::new(product(&[p1, p2])?);
    let f1 = Arc::new(p1.clone());
    let f2 = Arc::new(p2.clone());
    let index = ProductIndex::new(vec![p1.len(), p2.len()]);

    let brute: BTreeSet<Vec<u32>> = enumerate_perfect_matchings(&k)
        .into_iter()
        .filter(|m| m.is_special())
        .map(|m| m.table().to_vec())
        .collect();
    let mut lifted = BTreeSet::new();
    for (coord, f) in [(0, &f1), (1, &f2)] {
        for n in enumerate_special_matchings(f) {
            lifted.insert(lift(&index, coord, n.table()));
        }
    }

    let factor_partial = |f: &Arc<Poset>| match enumerate_special_partial_matchings(f) {
        Ok(v) => Ok(v),
        Err(Error::TooSmall) => Ok(Vec::new()),
        Err(e) => Err(e),
    };
    let brute_partial: BTreeSet<Vec<u32>> = enumerate_partial_matchings(&k)?
        .into_iter()
        .filter(|m| m.is_special())
        .map(|m| m.table().to_vec())
        .collect();
    let mut lifted_partial = BTreeSet::new();
    for (coord, f) in [(0, &f1), (1, &f2)] {
        for n in factor_partial(f)? {
            lifted_partial.insert(lift(&index, coord, n.table()));
        }
    }

    let whole = special_monoid(&k)?;
    let whole_p = special_partial_monoid(&k)?;
    let (m1, m2) = (special_monoid(&f1)?, special_monoid(&f2)?);
    let (mp1, mp2) = (special_partial_monoid(&f1)?, special_partial_monoid(&f2)?);

    Ok(ProductDecomposition {
        special_count: brute.len(),
        partial_count: brute_partial.len(),
        special_matchings_lift: brute == lifted,
        partial_matchings_lift: brute_partial == lifted_partial,
        monoid_splits: monoid_splits(&index, &whole, &m1, &m2),
        partial_monoid_splits: monoid_splits(&index, &whole_p, &mp1, &mp2),
    })
}
