//! Finite partial orders stored as bitset rows.
//!
//! [`Order`] carries no grading assumptions; it is the substrate for
//! [`super::Poset`] and for induced subposets (images of idempotents,
//! complements, idempotent orders) whose gradedness is the thing under test.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::subset::{iter_and, ElementSubset};

/// One source row of the Möbius function, `y ↦ μ(x, y)`.
#[derive(Clone, Debug)]
enum MobiusRow {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl MobiusRow {
    fn get(&self, y: usize) -> BigInt {
        match self {
            MobiusRow::Small(v) => BigInt::from(v[y]),
            MobiusRow::Big(v) => v[y].clone(),
        }
    }

    fn get_i64(&self, y: usize) -> Option<i64> {
        match self {
            MobiusRow::Small(v) => Some(v[y]),
            MobiusRow::Big(v) => i64::try_from(&v[y]).ok(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Order {
    n: usize,
    up: Vec<ElementSubset>,
    down: Vec<ElementSubset>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    linear: Vec<usize>,
    mobius: Vec<OnceLock<MobiusRow>>,
}

impl Order {
    /// Builds the reflexive-transitive closure of a cover list.
    ///
    /// The input may contain redundant pairs; the stored covers are Hasse-reduced.
    pub fn from_covers(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::InvalidElement { id, n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected { a, b });
            }
            succ[a].push(b);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        let mut indeg = vec![0usize; n];
        for s in &succ {
            for &b in s {
                indeg[b] += 1;
            }
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
        let mut linear = Vec::with_capacity(n);
        while let Some(Reverse(x)) = heap.pop() {
            linear.push(x);
            for &b in &succ[x] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    heap.push(Reverse(b));
                }
            }
        }
        if linear.len() < n {
            let a = (0..n).find(|&x| indeg[x] > 0).unwrap();
            // walk predecessors inside the residual graph to name an edge on a cycle
            let b = succ[a]
                .iter()
                .copied()
                .find(|&b| indeg[b] > 0)
                .or_else(|| (0..n).find(|&p| indeg[p] > 0 && succ[p].contains(&a)))
                .unwrap_or(a);
            let (a, b) = if succ[a].contains(&b) { (a, b) } else { (b, a) };
            return Err(Error::CycleDetected { a, b });
        }

        let mut up = vec![ElementSubset::empty(n); n];
        for &x in linear.iter().rev() {
            let mut row = ElementSubset::singleton(n, x);
            for &b in &succ[x] {
                row.union_with(&up[b]);
            }
            up[x] = row;
        }
        Ok(Self::assemble(n, up, Some(linear)))
    }

    /// Builds an order from a relation predicate, validating the partial-order axioms.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut up = vec![ElementSubset::empty(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.insert(y);
                }
            }
            if !row.contains(x) {
                return Err(Error::InvalidRelation(format!(
                    "{x} is not related to itself"
                )));
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleDetected { a: x, b: y });
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::InvalidRelation(format!(
                        "{x} <= {y} but the relation is not transitive there"
                    )));
                }
            }
        }
        Ok(Self::assemble(n, up, None))
    }

    /// Builds an order from up-set rows the caller guarantees form a partial order.
    pub(crate) fn from_up_rows_unchecked(up: Vec<ElementSubset>) -> Self {
        let n = up.len();
        Self::assemble(n, up, None)
    }

    fn assemble(n: usize, up: Vec<ElementSubset>, linear: Option<Vec<usize>>) -> Self {
        let mut down = vec![ElementSubset::empty(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let linear = linear.unwrap_or_else(|| {
            // principal ideals grow strictly along the order
            let mut l: Vec<usize> = (0..n).collect();
            l.sort_by_key(|&x| (down[x].count(), x));
            l
        });

        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            let mut strict = up[x].clone();
            strict.remove(x);
            for y in strict.iter() {
                if down[y].intersection_count(&strict) == 1 {
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        let mobius = (0..n).map(|_| OnceLock::new()).collect();
        Self {
            n,
            up,
            down,
            upper_covers,
            lower_covers,
            linear,
            mobius,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.upper_covers[x].contains(&y)
    }

    /// `{y : x ≤ y}`.
    pub fn up_set(&self, x: usize) -> &ElementSubset {
        &self.up[x]
    }

    /// `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &ElementSubset {
        &self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// Hasse edges `(lower, upper)`, sorted lexicographically.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = (0..self.n)
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect();
        v.sort_unstable();
        v
    }

    /// A linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// `[x, y]`, empty when `x ≰ y`.
    pub fn interval(&self, x: usize, y: usize) -> ElementSubset {
        self.up[x].intersection(&self.down[y])
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.up[x].count() == self.n)
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.down[x].count() == self.n)
    }

    pub fn minimal_elements(&self, s: &ElementSubset) -> Vec<usize> {
        s.iter()
            .filter(|&m| self.down[m].intersection_count(s) == 1)
            .collect()
    }

    pub fn maximal_elements(&self, s: &ElementSubset) -> Vec<usize> {
        s.iter()
            .filter(|&m| self.up[m].intersection_count(s) == 1)
            .collect()
    }

    /// Returns `(m, M)` when `s` is exactly the interval `[m, M]`.
    pub fn is_interval(&self, s: &ElementSubset) -> Result<Option<(usize, usize)>> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mins = self.minimal_elements(s);
        let maxs = self.maximal_elements(s);
        if mins.len() != 1 || maxs.len() != 1 {
            return Ok(None);
        }
        let (m, top) = (mins[0], maxs[0]);
        Ok((self.interval(m, top) == *s).then_some((m, top)))
    }

    /// The subposet induced on `s`, with the map from new ids to old ids.
    pub fn induced(&self, s: &ElementSubset) -> (Order, Vec<usize>) {
        let ids = s.to_vec();
        let k = ids.len();
        let rows = ids
            .iter()
            .map(|&x| {
                ElementSubset::from_ids(
                    k,
                    ids.iter()
                        .enumerate()
                        .filter(|&(_, &y)| self.leq(x, y))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        (Order::from_up_rows_unchecked(rows), ids)
    }

    fn mobius_row(&self, x: usize) -> &MobiusRow {
        self.mobius[x].get_or_init(|| self.compute_mobius_row(x))
    }

    fn compute_mobius_row(&self, x: usize) -> MobiusRow {
        let n = self.n;
        let mut vals = vec![0i64; n];
        vals[x] = 1;
        let mut overflow = false;
        'outer: for &y in &self.linear {
            if y == x || !self.up[x].contains(y) {
                continue;
            }
            let mut sum: i64 = 0;
            for z in iter_and(&self.up[x], &self.down[y]) {
                if z == y {
                    continue;
                }
                match sum.checked_add(vals[z]) {
                    Some(s) => sum = s,
                    None => {
                        overflow = true;
                        break 'outer;
                    }
                }
            }
            match sum.checked_neg() {
                Some(v) => vals[y] = v,
                None => {
                    overflow = true;
                    break;
                }
            }
        }
        if !overflow {
            return MobiusRow::Small(vals);
        }
        let mut big = vec![BigInt::from(0); n];
        big[x] = BigInt::from(1);
        for &y in &self.linear {
            if y == x || !self.up[x].contains(y) {
                continue;
            }
            let mut sum = BigInt::from(0);
            for z in iter_and(&self.up[x], &self.down[y]) {
                if z != y {
                    sum += &big[z];
                }
            }
            big[y] = -sum;
        }
        MobiusRow::Big(big)
    }

    /// `μ(x, y)` for `x ≤ y`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<BigInt> {
        self.check_id(x)?;
        self.check_id(y)?;
        if !self.leq(x, y) {
            return Err(Error::NotComparable { x, y });
        }
        Ok(self.mobius_row(x).get(y))
    }

    /// `μ(x, y)` extended by zero to incomparable pairs.
    pub fn mobius_total(&self, x: usize, y: usize) -> BigInt {
        if self.leq(x, y) {
            self.mobius_row(x).get(y)
        } else {
            BigInt::from(0)
        }
    }

    /// `μ(x, y)` when it fits in an `i64` (zero for `x ≰ y`).
    pub fn mobius_i64(&self, x: usize, y: usize) -> Option<i64> {
        if self.leq(x, y) {
            self.mobius_row(x).get_i64(y)
        } else {
            Some(0)
        }
    }

    pub(crate) fn check_id(&self, id: usize) -> Result<()> {
        if id < self.n {
            Ok(())
        } else {
            Err(Error::InvalidElement { id, n: self.n })
        }
    }
}

impl PartialEq for Order {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.up == other.up
    }
}

impl Eq for Order {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_reduction() {
        // 0 < 1 < 2 with a redundant 0 < 2
        let o = Order::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(o.cover_pairs(), vec![(0, 1), (1, 2)]);
        assert!(o.leq(0, 2));
        assert!(!o.leq(2, 0));
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(matches!(
            Order::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected { .. })
        ));
        assert!(matches!(
            Order::from_covers(3, &[(0, 1), (1, 2), (2, 1)]),
            Err(Error::CycleDetected { .. })
        ));
        assert!(matches!(
            Order::from_covers(1, &[(0, 0)]),
            Err(Error::CycleDetected { .. })
        ));
    }

    #[test]
    fn relation_validation() {
        assert!(Order::from_relation(2, |x, y| x <= y).is_ok());
        assert!(matches!(
            Order::from_relation(2, |_, _| true),
            Err(Error::CycleDetected { .. })
        ));
        // 0<1, 1<2 but not 0<2
        let bad = |x: usize, y: usize| x == y || (x, y) == (0, 1) || (x, y) == (1, 2);
        assert!(matches!(
            Order::from_relation(3, bad),
            Err(Error::InvalidRelation(_))
        ));
    }

    #[test]
    fn antichain_has_no_bounds() {
        let o = Order::from_covers(2, &[]).unwrap();
        assert_eq!(o.minimum(), None);
        assert_eq!(o.maximum(), None);
        assert_eq!(o.mobius_total(0, 1), BigInt::from(0));
        assert!(o.mobius(0, 1).is_err());
    }

    #[test]
    fn mobius_overflow_falls_back_to_bigint() {
        // ordinal sum of antichains of size 2^16 would be too big; instead stack
        // k-antichains whose μ grows like (k-1)^levels
        let width = 60usize;
        let levels = 13usize;
        let n = 2 + width * levels;
        let mut covers = Vec::new();
        let id = |l: usize, i: usize| 1 + l * width + i;
        for i in 0..width {
            covers.push((0, id(0, i)));
            covers.push((id(levels - 1, i), n - 1));
        }
        for l in 0..levels - 1 {
            for i in 0..width {
                for j in 0..width {
                    covers.push((id(l, i), id(l + 1, j)));
                }
            }
        }
        let o = Order::from_covers(n, &covers).unwrap();
        // μ of an ordinal sum of antichains A_1..A_k is ∏ (|A_i| - 1) up to sign
        let expected = BigInt::from(width as i64 - 1).pow(levels as u32);
        let mu = o.mobius(0, n - 1).unwrap();
        let sign = if levels % 2 == 1 { -1 } else { 1 };
        assert_eq!(mu, expected * -sign);
        assert!(o.mobius_i64(0, n - 1).is_none());
    }
}
