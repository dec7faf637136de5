//! Classification of idempotents of `Or(K)`: fibers, interval retracts,
//! projections, Möbius functions of images and the gradedness theorems.

mod mobius;
mod report;

pub use mobius::{mobius_image, ImageMobius};
pub use report::{analyze, FiberSummary, IdempotentReport};

use serde::Serialize;

use crate::endo::{Endo, MonoidClosure};
use crate::error::Result;
use crate::subset::ElementSubset;

/// Outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Check {
    /// Hypotheses hold and so does the conclusion.
    Pass,
    /// Hypotheses hold but the conclusion fails: an invariant violation.
    Fail { witness: Vec<usize> },
    /// Hypotheses are not met; the observed outcome is reported as data.
    Unasserted { holds: bool },
}

impl Check {
    fn new(hypothesis: bool, outcome: std::result::Result<(), Vec<usize>>) -> Self {
        match (hypothesis, outcome) {
            (true, Ok(())) => Check::Pass,
            (true, Err(witness)) => Check::Fail { witness },
            (false, o) => Check::Unasserted { holds: o.is_ok() },
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Check::Fail { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass)
    }
}

/// Fiber maxima `v ↦ v^P`, or the first image point whose fiber is not an interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RetractOutcome {
    Retract { tops: Vec<(usize, usize)> },
    NotRetract { fiber_of: usize },
}

impl RetractOutcome {
    pub fn is_retract(&self) -> bool {
        matches!(self, RetractOutcome::Retract { .. })
    }
}

/// Checks whether every fiber `P_v` is an interval `[v, v^P]`, and that these
/// intervals partition the poset.
pub fn interval_retract(p: &Endo) -> Result<RetractOutcome> {
    p.require_idempotent()?;
    let k = p.poset();
    let mut tops = Vec::new();
    let mut covered = ElementSubset::empty(k.len());
    for v in p.image_set().iter() {
        let fiber = p.fiber(v);
        match k.order().is_interval(&fiber)? {
            Some((m, top)) if m == v => {
                let iv = k.interval(v, top);
                if !iv.is_disjoint(&covered) {
                    return Err(crate::Error::Invariant(format!(
                        "fiber interval of {v} overlaps another"
                    )));
                }
                covered.union_with(&iv);
                tops.push((v, top));
            }
            _ => return Ok(RetractOutcome::NotRetract { fiber_of: v }),
        }
    }
    if covered.count() != k.len() {
        return Err(crate::Error::Invariant(
            "fiber intervals do not cover the poset".into(),
        ));
    }
    Ok(RetractOutcome::Retract { tops })
}

/// A pair `x ≤ y` of image points with `[x, y] ∩ P_x` not an interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionWitness {
    pub x: usize,
    pub y: usize,
    pub set: Vec<usize>,
}

/// Searches image pairs by increasing rank difference, then lexicographically,
/// so the reported witness is the smallest failing pair.
pub fn projection_witness(p: &Endo) -> Result<Option<ProjectionWitness>> {
    p.require_idempotent()?;
    let k = p.poset();
    let image = p.image_set().to_vec();
    let mut pairs: Vec<(i64, usize, usize)> = Vec::new();
    for &x in &image {
        for &y in &image {
            if k.leq(x, y) {
                pairs.push((k.rank_diff(x, y), x, y));
            }
        }
    }
    pairs.sort_unstable();
    let fibers: std::collections::HashMap<usize, ElementSubset> =
        image.iter().map(|&x| (x, p.fiber(x))).collect();
    for (_, x, y) in pairs {
        let s = k.interval(x, y).intersection(&fibers[&x]);
        if k.order().is_interval(&s)?.is_none() {
            return Ok(Some(ProjectionWitness {
                x,
                y,
                set: s.to_vec(),
            }));
        }
    }
    Ok(None)
}

/// `[x, y] ∩ P_x` is an interval for all `x ≤ y` in `imm(P)`.
pub fn is_projection(p: &Endo) -> Result<bool> {
    Ok(projection_witness(p)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremFlags {
    /// `imm(P)` graded with the ambient rank (Eulerian `K`, projection).
    pub image_graded: Check,
    /// `(K ∖ imm(P)) ∪ {0̂}` graded with the ambient rank (Eulerian `K`, special projection).
    pub complement_graded: Check,
    /// Fibers are intervals partitioning `K` (special idempotent).
    pub partition_ok: Check,
    /// `P_{0̂} = K_A` with `A = P_{0̂} ∩ atom(K)` (Eulerian `K`, projection).
    pub atoms_ok: Check,
    /// For `u ≤ v` outside the image: `[u, v]` avoids the image iff `u ≮ P(v)`.
    pub complement_lemma: Check,
}

impl TheoremFlags {
    pub fn any_failure(&self) -> bool {
        [
            &self.image_graded,
            &self.complement_graded,
            &self.partition_ok,
            &self.atoms_ok,
            &self.complement_lemma,
        ]
        .iter()
        .any(|c| c.is_fail())
    }
}

/// Checks the structural theorems that apply to `p`. Special-ness is decided
/// by lookup in `closure`, which should be `M^K` or `M_p^K`.
pub fn verify_structure_theorems(p: &Endo, closure: &MonoidClosure) -> Result<TheoremFlags> {
    let special = closure.contains(p);
    theorem_flags(p, Some(special), p.poset().is_eulerian())
}

pub(crate) fn theorem_flags(
    p: &Endo,
    special: Option<bool>,
    eulerian: bool,
) -> Result<TheoremFlags> {
    p.require_idempotent()?;
    let k = p.poset();
    let projection = is_projection(p)?;
    let special = special.unwrap_or(false);
    let image = p.image_set();

    let image_graded = Check::new(
        eulerian && projection,
        k.induced_graded_with_rank(&image)
            .map_err(|(a, b)| vec![a, b]),
    );

    let mut rest = image.complement();
    rest.insert(k.bottom());
    let complement_graded = Check::new(
        eulerian && projection && special,
        k.induced_graded_with_rank(&rest)
            .map_err(|(a, b)| vec![a, b]),
    );

    let partition_ok = Check::new(
        special,
        match interval_retract(p)? {
            RetractOutcome::Retract { .. } => Ok(()),
            RetractOutcome::NotRetract { fiber_of } => Err(vec![fiber_of]),
        },
    );

    let bottom_fiber = p.fiber(k.bottom());
    let atoms = ElementSubset::from_ids(k.len(), k.atoms());
    let a = bottom_fiber.intersection(&atoms);
    let ka = k.ideal_below_atoms(&a)?;
    let atoms_ok = Check::new(
        eulerian && projection,
        if ka == bottom_fiber {
            Ok(())
        } else {
            Err(ka
                .difference(&bottom_fiber)
                .union(&bottom_fiber.difference(&ka))
                .to_vec())
        },
    );

    let outside = image.complement();
    let mut lemma = Ok(());
    'outer: for u in outside.iter() {
        for v in k.up_set(u).intersection(&outside).iter() {
            let avoids = k.interval(u, v).is_disjoint(&image);
            if avoids == k.lt(u, p.apply(v)) {
                lemma = Err(vec![u, v]);
                break 'outer;
            }
        }
    }
    let complement_lemma = Check::new(true, lemma);

    Ok(TheoremFlags {
        image_graded,
        complement_graded,
        partition_ok,
        atoms_ok,
        complement_lemma,
    })
}
