use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::endo::Endo;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Position of an element relative to its partner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `x ⋖ M(x)`.
    Up,
    /// `M(x) ⋖ x`.
    Down,
    /// `M(x) = x` (partial matchings only).
    Fixed,
}

/// A perfect matching of the Hasse diagram, as an involution `M` with
/// `M(x) ⋖ x` or `x ⋖ M(x)` for every `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matching {
    poset: Arc<Poset>,
    partner: Vec<u32>,
}

/// A matching of the Hasse diagram (fixed points allowed) that moves the top down.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialMatching {
    poset: Arc<Poset>,
    partner: Vec<u32>,
}

/// `{"partner": [int,...], "partial": bool}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    pub partner: Vec<usize>,
    pub partial: bool,
}

fn check_involution(p: &Poset, partner: &[usize]) -> Result<()> {
    let n = p.len();
    if partner.len() != n {
        return Err(Error::NotAMatching(format!(
            "{} partners for {n} elements",
            partner.len()
        )));
    }
    for (x, &m) in partner.iter().enumerate() {
        if m >= n {
            return Err(Error::InvalidElement { id: m, n });
        }
        if partner[m] != x {
            return Err(Error::NotAMatching(format!("not involutive at {x}")));
        }
    }
    Ok(())
}

fn direction(p: &Poset, x: usize, m: usize) -> Direction {
    if m == x {
        Direction::Fixed
    } else if p.leq(x, m) {
        Direction::Up
    } else {
        Direction::Down
    }
}

/// `M(x) ≤ M(y)` for every cover `x ⋖ y` with `x ≠ M(y)`.
pub(crate) fn special_condition(p: &Poset, partner: &[u32]) -> bool {
    (0..p.len()).all(|x| {
        p.upper_covers(x)
            .iter()
            .all(|&y| partner[y] as usize == x || p.leq(partner[x] as usize, partner[y] as usize))
    })
}

/// `u ≤ v`, `u ≤ M(u)`, `M(v) ≤ v` imply `M(u) ≤ v` and `u ≤ M(v)`.
pub(crate) fn lifting_condition(p: &Poset, partner: &[u32]) -> bool {
    let m = |x: usize| partner[x] as usize;
    (0..p.len()).filter(|&u| p.leq(u, m(u))).all(|u| {
        p.up_set(u)
            .iter()
            .filter(|&v| p.leq(m(v), v))
            .all(|v| p.leq(m(u), v) && p.leq(u, m(v)))
    })
}

fn idempotent_table(p: &Poset, partner: &[u32]) -> Vec<usize> {
    (0..p.len())
        .map(|x| {
            let m = partner[x] as usize;
            if p.leq(x, m) {
                x
            } else {
                m
            }
        })
        .collect()
}

macro_rules! matching_common {
    ($t:ty, $partial:expr) => {
        impl $t {
            pub fn poset(&self) -> &Arc<Poset> {
                &self.poset
            }

            #[inline]
            pub fn partner(&self, x: usize) -> usize {
                self.partner[x] as usize
            }

            pub fn partners(&self) -> Vec<usize> {
                self.partner.iter().map(|&v| v as usize).collect()
            }

            pub(crate) fn table(&self) -> &[u32] {
                &self.partner
            }

            pub fn direction(&self, x: usize) -> Direction {
                direction(&self.poset, x, self.partner(x))
            }

            /// The cover condition defining special (partial) matchings.
            pub fn is_special(&self) -> bool {
                special_condition(&self.poset, &self.partner)
            }

            pub fn satisfies_lifting(&self) -> bool {
                lifting_condition(&self.poset, &self.partner)
            }

            pub fn to_json(&self) -> MatchingJson {
                MatchingJson {
                    partner: self.partners(),
                    partial: $partial,
                }
            }

            /// The idempotent sending each element to the lower end of its pair.
            pub fn idempotent(&self) -> Result<Endo> {
                if !self.is_special() {
                    return Err(Error::NotSpecial);
                }
                Endo::new(
                    self.poset.clone(),
                    idempotent_table(&self.poset, &self.partner),
                )
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_tuple(stringify!($t)).field(&self.partner).finish()
            }
        }
    };
}

matching_common!(Matching, false);
matching_common!(PartialMatching, true);

impl Matching {
    pub fn new(poset: Arc<Poset>, partner: Vec<usize>) -> Result<Self> {
        check_involution(&poset, &partner)?;
        for (x, &m) in partner.iter().enumerate() {
            if !(poset.covers(x, m) || poset.covers(m, x)) {
                return Err(Error::NotAMatching(format!(
                    "{x} and {m} are not related by a cover"
                )));
            }
        }
        Ok(Self::from_table(
            poset,
            partner.into_iter().map(|v| v as u32).collect(),
        ))
    }

    pub(crate) fn from_table(poset: Arc<Poset>, partner: Vec<u32>) -> Self {
        Self { poset, partner }
    }

    /// The same involution viewed as a partial matching.
    pub fn to_partial(&self) -> PartialMatching {
        PartialMatching {
            poset: self.poset.clone(),
            partner: self.partner.clone(),
        }
    }
}

impl PartialMatching {
    pub fn new(poset: Arc<Poset>, partner: Vec<usize>) -> Result<Self> {
        check_involution(&poset, &partner)?;
        for (x, &m) in partner.iter().enumerate() {
            if m != x && !(poset.covers(x, m) || poset.covers(m, x)) {
                return Err(Error::NotAMatching(format!(
                    "{x} and {m} are not related by a cover"
                )));
            }
        }
        let top = poset.top();
        if !poset.covers(partner[top], top) {
            return Err(Error::NotAMatching("top is not matched to a coatom".into()));
        }
        Ok(Self::from_table(
            poset,
            partner.into_iter().map(|v| v as u32).collect(),
        ))
    }

    pub(crate) fn from_table(poset: Arc<Poset>, partner: Vec<u32>) -> Self {
        Self { poset, partner }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.partner.len())
            .filter(|&x| self.partner(x) == x)
            .collect()
    }
}

pub fn is_special(m: &Matching) -> bool {
    m.is_special()
}

pub fn satisfies_lifting(m: &Matching) -> bool {
    m.satisfies_lifting()
}

/// `P^M`; fails with `NotSpecial` for non-special matchings.
pub fn idempotent_from_matching(m: &Matching) -> Result<Endo> {
    m.idempotent()
}

/// `P^{M_p}`; fails with `NotSpecial` for non-special partial matchings.
pub fn idempotent_from_partial(mp: &PartialMatching) -> Result<Endo> {
    mp.idempotent()
}
