use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{idempotent_order, Endo, MonoidClosure};
use crate::error::{Error, Result};
use crate::poset::{Poset, PosetJson};

/// A poset given either by builtin spec (`"bruhat:3"`) or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetRef {
    Builtin(String),
    Inline(PosetJson),
}

impl PosetRef {
    pub fn resolve(&self) -> Result<Arc<Poset>> {
        match self {
            PosetRef::Builtin(s) => crate::builtin::resolve(s),
            PosetRef::Inline(j) => j.build().map(Arc::new),
        }
    }
}

/// `{"poset": ref-or-inline, "image": [int,...], "word": [int,...]?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoJson {
    pub poset: PosetRef,
    pub image: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
}

impl EndoJson {
    pub fn from_endo(f: &Endo, poset: PosetRef) -> Self {
        Self {
            poset,
            image: f.to_vec(),
            word: f.word().map(|w| w.to_vec()),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Resolves the poset and validates the table.
    pub fn to_endo(&self) -> Result<Endo> {
        let p = self.poset.resolve()?;
        let f = Endo::new(p, self.image.clone())?;
        Ok(match &self.word {
            Some(w) => f.with_word(w.clone()),
            None => f,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentSummary {
    pub index: usize,
    pub image: Vec<usize>,
    pub word: Vec<usize>,
    /// `(v, |P_v|)` for each image point.
    pub fibers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub poset_size: usize,
    pub generators: usize,
    pub size: usize,
    pub idempotent_count: usize,
    /// Hasse edges of the idempotent order, as positions in `idempotents`.
    pub idempotent_order_edges: Vec<(usize, usize)>,
    pub idempotents: Vec<IdempotentSummary>,
}

impl ClosureReport {
    pub fn new(m: &MonoidClosure) -> Result<Self> {
        let idems = m.idempotents();
        let order = idempotent_order(&idems)?;
        let summaries = order
            .elements()
            .iter()
            .map(|e| {
                let index = m.position(e.table()).expect("idempotent of the closure");
                let image = e.image_set().to_vec();
                let fibers = image.iter().map(|&v| (v, e.fiber(v).count())).collect();
                IdempotentSummary {
                    index,
                    image,
                    word: m.word(index).to_vec(),
                    fibers,
                }
            })
            .collect();
        Ok(Self {
            poset_size: m.poset().len(),
            generators: m.generators().len(),
            size: m.len(),
            idempotent_count: idems.len(),
            idempotent_order_edges: order.hasse_edges(),
            idempotents: summaries,
        })
    }
}
