use std::ops::Deref;

use num_bigint::BigInt;

use super::order::Order;
use crate::config::element_cap;
use crate::error::{Error, Result};
use crate::subset::ElementSubset;

/// An immutable finite graded poset: minimum, maximum and a rank function
/// increasing by one along every cover.
///
/// Elements are the dense ids `0..len()`. Order queries are available through
/// `Deref<Target = Order>`.
#[derive(Clone, Debug)]
pub struct Poset {
    order: Order,
    rank: Vec<u32>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Validates covers (which may be redundant) into a graded poset.
    pub fn build(n: usize, covers: &[(usize, usize)], labels: Option<Vec<String>>) -> Result<Self> {
        check_size(n)?;
        let order = Order::from_covers(n, covers)?;
        Self::from_order(order, labels)
    }

    pub fn from_order(order: Order, labels: Option<Vec<String>>) -> Result<Self> {
        let n = order.len();
        check_size(n)?;
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::BadParameter(format!(
                    "{} labels for {n} elements",
                    l.len()
                )));
            }
        }
        let bottom = order.minimum().ok_or(Error::NoMinimum)?;
        let top = order.maximum().ok_or(Error::NoMaximum)?;

        let mut rank = vec![u32::MAX; n];
        rank[bottom] = 0;
        for &x in order.linear_extension() {
            debug_assert_ne!(rank[x], u32::MAX);
            for &y in order.upper_covers(x) {
                if rank[y] == u32::MAX {
                    rank[y] = rank[x] + 1;
                } else if rank[y] != rank[x] + 1 {
                    return Err(Error::NotGraded { lower: x, upper: y });
                }
            }
        }
        Ok(Self {
            order,
            rank,
            bottom,
            top,
            labels,
        })
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank(&self, x: usize) -> u32 {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// `ρ(y) − ρ(x)`.
    pub fn rank_diff(&self, x: usize, y: usize) -> i64 {
        self.rank[y] as i64 - self.rank[x] as i64
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks up an element by label, falling back to a numeric id.
    pub fn find(&self, token: &str) -> Option<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|s| s == token) {
                return Some(i);
            }
        }
        token.parse::<usize>().ok().filter(|&i| i < self.len())
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers(self.bottom).to_vec()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.lower_covers(self.top).to_vec()
    }

    /// `(−1)^{ρ(x,y)}`, with `μ(x,y)` checked for every comparable pair.
    pub fn is_eulerian(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for y in self.up_set(x).iter() {
                let expected = if self.rank_diff(x, y) % 2 == 0 { 1 } else { -1 };
                if self.mobius_i64(x, y) != Some(expected) {
                    return false;
                }
            }
        }
        assert!(
            self.has_diamond_property(),
            "Eulerian poset with a rank-2 interval that is not a diamond"
        );
        true
    }

    /// Every rank-2 interval has exactly four elements.
    pub fn has_diamond_property(&self) -> bool {
        (0..self.len()).all(|x| {
            self.up_set(x)
                .iter()
                .filter(|&y| self.rank_diff(x, y) == 2)
                .all(|y| self.interval(x, y).count() == 4)
        })
    }

    /// `K_A = {x : every atom below x lies in A}` for a set of atoms `A`.
    pub fn ideal_below_atoms(&self, a: &ElementSubset) -> Result<ElementSubset> {
        let atoms = ElementSubset::from_ids(self.len(), self.atoms());
        if let Some(id) = a.difference(&atoms).first() {
            return Err(Error::NotAtoms { id });
        }
        let forbidden = atoms.difference(a);
        let mut out = ElementSubset::empty(self.len());
        for x in 0..self.len() {
            if self.down_set(x).is_disjoint(&forbidden) {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// Möbius function; see [`Order::mobius`].
    pub fn mobius(&self, x: usize, y: usize) -> Result<BigInt> {
        self.order.mobius(x, y)
    }

    /// Tests whether the subposet induced on `s` is graded with this poset's
    /// rank function: it has a minimum and a maximum, and every induced cover
    /// raises `ρ` by exactly one. Returns a failing induced cover, or
    /// `(x, x)` for a missing bound, as the witness.
    pub fn induced_graded_with_rank(
        &self,
        s: &ElementSubset,
    ) -> std::result::Result<(), (usize, usize)> {
        assert!(!s.is_empty(), "gradedness of an empty subposet");
        let (sub, ids) = self.order.induced(s);
        if sub.minimum().is_none() {
            let m = self.order.minimal_elements(s);
            return Err((m[0], m[0]));
        }
        if sub.maximum().is_none() {
            let m = self.order.maximal_elements(s);
            return Err((m[0], m[0]));
        }
        for (a, b) in sub.cover_pairs() {
            let (x, y) = (ids[a], ids[b]);
            if self.rank_diff(x, y) != 1 {
                return Err((x, y));
            }
        }
        Ok(())
    }
}

impl Deref for Poset {
    type Target = Order;

    fn deref(&self) -> &Order {
        &self.order
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for Poset {}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParameter(
            "a poset needs at least one element".into(),
        ));
    }
    let cap = element_cap();
    if n > cap {
        return Err(Error::TooLarge { requested: n, cap });
    }
    Ok(())
}
