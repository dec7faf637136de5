use serde::Serialize;

use super::{
    interval_retract, projection_witness, theorem_flags, ProjectionWitness, RetractOutcome,
    TheoremFlags,
};
use crate::endo::{Endo, MonoidClosure};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberSummary {
    pub point: usize,
    pub members: Vec<usize>,
}

/// Everything known about one idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentReport {
    pub image: Vec<usize>,
    pub fibers: Vec<FiberSummary>,
    /// `v ↦ v^P`, present iff every fiber is an interval.
    pub retract_top: Option<Vec<(usize, usize)>>,
    pub non_interval_fiber: Option<usize>,
    pub is_projection: bool,
    pub projection_witness: Option<ProjectionWitness>,
    /// Membership in the supplied closure; absent without one.
    pub is_special_idempotent: Option<bool>,
    pub theorem_flags: TheoremFlags,
}

pub fn analyze(p: &Endo, closure: Option<&MonoidClosure>) -> Result<IdempotentReport> {
    p.require_idempotent()?;
    let image = p.image_set().to_vec();
    let fibers = image
        .iter()
        .map(|&v| FiberSummary {
            point: v,
            members: p.fiber(v).to_vec(),
        })
        .collect();
    let (retract_top, non_interval_fiber) = match interval_retract(p)? {
        RetractOutcome::Retract { tops } => (Some(tops), None),
        RetractOutcome::NotRetract { fiber_of } => (None, Some(fiber_of)),
    };
    let witness = projection_witness(p)?;
    let special = closure.map(|m| m.contains(p));
    let theorem_flags = theorem_flags(p, special, p.poset().is_eulerian())?;
    Ok(IdempotentReport {
        image,
        fibers,
        retract_top,
        non_interval_fiber,
        is_projection: witness.is_none(),
        projection_witness: witness,
        is_special_idempotent: special,
        theorem_flags,
    })
}
