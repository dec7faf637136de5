use num_bigint::BigInt;

use super::is_projection;
use crate::endo::Endo;
use crate::error::{Error, Result};
use crate::poset::Order;
use crate::subset::ElementSubset;

/// Möbius function of `imm(P)` computed three ways:
///
/// 1. directly on the induced subposet;
/// 2. as `Σ_{z ∈ [x,y] ∩ P_x} μ_K(z, y)`;
/// 3. when `K` is Eulerian and `P` a projection, as `(−1)^{ρ(x,y)}` if
///    `[x, y] ⊆ imm(P)` and `0` otherwise.
pub struct ImageMobius<'a> {
    p: &'a Endo,
    image: ElementSubset,
    sub: Order,
    local: Vec<usize>,
    rule_applies: bool,
}

impl<'a> ImageMobius<'a> {
    pub fn new(p: &'a Endo) -> Result<Self> {
        p.require_idempotent()?;
        let k = p.poset();
        let image = p.image_set();
        let (sub, ids) = k.order().induced(&image);
        let mut local = vec![usize::MAX; k.len()];
        for (i, &x) in ids.iter().enumerate() {
            local[x] = i;
        }
        let rule_applies = k.is_eulerian() && is_projection(p)?;
        Ok(Self {
            p,
            image,
            sub,
            local,
            rule_applies,
        })
    }

    /// Whether the third route is available.
    pub fn rule_applies(&self) -> bool {
        self.rule_applies
    }

    /// The agreed value; disagreement between routes is an `Invariant` error.
    pub fn value(&self, x: usize, y: usize) -> Result<BigInt> {
        let k = self.p.poset();
        k.check_id(x)?;
        k.check_id(y)?;
        for id in [x, y] {
            if !self.image.contains(id) {
                return Err(Error::NotInImage { id });
            }
        }
        if !k.leq(x, y) {
            return Err(Error::NotComparable { x, y });
        }
        let direct = self.sub.mobius(self.local[x], self.local[y])?;
        let fiber = self.p.fiber(x);
        let galois: BigInt = k
            .interval(x, y)
            .intersection(&fiber)
            .iter()
            .map(|z| k.mobius_total(z, y))
            .sum();
        if direct != galois {
            return Err(Error::Invariant(format!(
                "image Möbius at ({x},{y}): direct {direct} vs Galois sum {galois}"
            )));
        }
        if self.rule_applies {
            let rule = if k.interval(x, y).is_subset(&self.image) {
                if k.rank_diff(x, y) % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            if direct != BigInt::from(rule) {
                return Err(Error::Invariant(format!(
                    "image Möbius at ({x},{y}): direct {direct} vs sign rule {rule}"
                )));
            }
        }
        Ok(direct)
    }

    /// Runs every comparable image pair; returns how many were checked.
    pub fn check_all(&self) -> Result<usize> {
        let k = self.p.poset();
        let mut count = 0;
        for x in self.image.iter() {
            for y in k.up_set(x).intersection(&self.image).iter() {
                self.value(x, y)?;
                count += 1;
            }
        }
        Ok(count)
    }
}

/// `μ_{imm(P)}(x, y)`, cross-checked across every applicable route.
pub fn mobius_image(p: &Endo, x: usize, y: usize) -> Result<BigInt> {
    ImageMobius::new(p)?.value(x, y)
}
