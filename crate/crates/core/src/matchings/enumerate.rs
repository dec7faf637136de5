//! Backtracking enumeration of Hasse-diagram matchings.
//!
//! Elements are visited by increasing rank, then id. When an element is
//! reached every lower cover is already decided, so its partner is an
//! undecided upper cover (or itself, for partial matchings). In special mode
//! the cover condition is re-checked on every cover pair touched by a new
//! pair whose other endpoint is decided.

use std::sync::Arc;

use rayon::prelude::*;

use super::{Matching, PartialMatching};
use crate::error::{Error, Result};
use crate::poset::Poset;

const UNSET: u32 = u32::MAX;

struct Search<'a> {
    p: &'a Poset,
    order: Vec<usize>,
    partial: bool,
    special: bool,
}

impl Search<'_> {
    fn new(p: &Poset, partial: bool, special: bool) -> Search<'_> {
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.sort_by_key(|&x| (p.rank(x), x));
        Search {
            p,
            order,
            partial,
            special,
        }
    }

    fn cover_ok(&self, partner: &[u32], x: usize, y: usize) -> bool {
        let (mx, my) = (partner[x], partner[y]);
        mx == UNSET || my == UNSET || my as usize == x || self.p.leq(mx as usize, my as usize)
    }

    fn consistent(&self, partner: &[u32], a: usize) -> bool {
        if !self.special {
            return true;
        }
        self.p
            .lower_covers(a)
            .iter()
            .all(|&c| self.cover_ok(partner, c, a))
            && self
                .p
                .upper_covers(a)
                .iter()
                .all(|&u| self.cover_ok(partner, a, u))
    }

    fn candidates(&self, partner: &[u32], x: usize) -> Vec<usize> {
        let mut c = Vec::new();
        if self.partial && x != self.p.top() {
            c.push(x);
        }
        c.extend(
            self.p
                .upper_covers(x)
                .iter()
                .copied()
                .filter(|&y| partner[y] == UNSET),
        );
        c
    }

    /// Assigns `x ↔ y` and reports whether the state is still viable.
    fn assign(&self, partner: &mut [u32], x: usize, y: usize) -> bool {
        partner[x] = y as u32;
        partner[y] = x as u32;
        self.consistent(partner, x) && (x == y || self.consistent(partner, y))
    }

    fn next_undecided(&self, partner: &[u32], mut pos: usize) -> usize {
        while pos < self.order.len() && partner[self.order[pos]] != UNSET {
            pos += 1;
        }
        pos
    }

    fn run(&self, partner: &mut Vec<u32>, pos: usize, out: &mut Vec<Vec<u32>>) {
        let pos = self.next_undecided(partner, pos);
        let Some(&x) = self.order.get(pos) else {
            out.push(partner.clone());
            return;
        };
        for y in self.candidates(partner, x) {
            if self.assign(partner, x, y) {
                self.run(partner, pos + 1, out);
            }
            partner[x] = UNSET;
            partner[y] = UNSET;
        }
    }

    /// States after the first decision, explored in parallel.
    fn roots(&self) -> Vec<Vec<u32>> {
        let n = self.p.len();
        let blank = vec![UNSET; n];
        let mut roots = Vec::new();
        if self.partial {
            let top = self.p.top();
            for &c in self.p.lower_covers(top) {
                let mut s = blank.clone();
                if self.assign(&mut s, top, c) {
                    roots.push(s);
                }
            }
        } else {
            let x = self.order[0];
            for y in self.candidates(&blank, x) {
                let mut s = blank.clone();
                if self.assign(&mut s, x, y) {
                    roots.push(s);
                }
            }
        }
        roots
    }

    fn enumerate(&self) -> Vec<Vec<u32>> {
        let mut all: Vec<Vec<u32>> = self
            .roots()
            .into_par_iter()
            .flat_map_iter(|mut s| {
                let mut out = Vec::new();
                self.run(&mut s, 0, &mut out);
                out
            })
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

fn total(p: &Arc<Poset>, special: bool) -> Vec<Matching> {
    if p.len() % 2 == 1 {
        return Vec::new();
    }
    Search::new(p, false, special)
        .enumerate()
        .into_iter()
        .map(|t| Matching::from_table(p.clone(), t))
        .collect()
}

fn partial(p: &Arc<Poset>, special: bool) -> Result<Vec<PartialMatching>> {
    if p.len() < 2 {
        return Err(Error::TooSmall);
    }
    Ok(Search::new(p, true, special)
        .enumerate()
        .into_iter()
        .map(|t| PartialMatching::from_table(p.clone(), t))
        .collect())
}

/// All special matchings, sorted by partner table.
pub fn enumerate_special_matchings(p: &Arc<Poset>) -> Vec<Matching> {
    total(p, true)
}

/// All perfect matchings of the Hasse diagram, without the special filter.
pub fn enumerate_perfect_matchings(p: &Arc<Poset>) -> Vec<Matching> {
    total(p, false)
}

/// All special partial matchings, sorted by partner table.
pub fn enumerate_special_partial_matchings(p: &Arc<Poset>) -> Result<Vec<PartialMatching>> {
    partial(p, true)
}

/// All partial matchings (top matched down), without the special filter.
pub fn enumerate_partial_matchings(p: &Arc<Poset>) -> Result<Vec<PartialMatching>> {
    partial(p, false)
}
