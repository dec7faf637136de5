//! The Galois connection `(incl, P)` between `imm(P)` and `K` for an idempotent `P`.

use num_bigint::BigInt;
use serde::Serialize;

use super::Endo;
use crate::error::Result;

/// Outcome of [`galois_check`]; `None` fields mean the property holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    /// `(x, y)` with `x ∈ imm(P)` where `x ≤ P(y)` and `x ≤ y` disagree.
    pub adjunction_failure: Option<(usize, usize)>,
    /// `(x, v)` where the two Möbius sums differ.
    pub rota_failure: Option<(usize, usize)>,
}

impl GaloisReport {
    pub fn holds(&self) -> bool {
        self.adjunction_failure.is_none() && self.rota_failure.is_none()
    }
}

/// Checks the adjunction and the Möbius identity
/// `Σ_{y ∈ incl_v} μ_H(x,y) = Σ_{u ∈ P_x} μ_K(u,v)` for all `x ∈ H = imm(P)`, `v ∈ K`.
///
/// `μ_H` is computed from scratch on the induced subposet.
pub fn galois_check(p: &Endo) -> Result<GaloisReport> {
    p.require_idempotent()?;
    let k = p.poset();
    let n = k.len();
    let image = p.image_set();
    let (h, ids) = k.order().induced(&image);
    let mut local = vec![usize::MAX; n];
    for (i, &x) in ids.iter().enumerate() {
        local[x] = i;
    }

    let mut adjunction_failure = None;
    'adj: for &x in &ids {
        for y in 0..n {
            if k.leq(x, p.apply(y)) != k.leq(x, y) {
                adjunction_failure = Some((x, y));
                break 'adj;
            }
        }
    }

    let fibers: Vec<Vec<usize>> = ids.iter().map(|&x| p.fiber(x).to_vec()).collect();
    let mut rota_failure = None;
    'rota: for (i, &x) in ids.iter().enumerate() {
        for (v, &lv) in local.iter().enumerate() {
            let lhs = if lv != usize::MAX {
                h.mobius_total(i, lv)
            } else {
                BigInt::from(0)
            };
            let rhs: BigInt = fibers[i].iter().map(|&u| k.mobius_total(u, v)).sum();
            if lhs != rhs {
                rota_failure = Some((x, v));
                break 'rota;
            }
        }
    }
    Ok(GaloisReport {
        adjunction_failure,
        rota_failure,
    })
}

pub fn galois_verify(p: &Endo) -> Result<bool> {
    Ok(galois_check(p)?.holds())
}
