use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::ElementSubset;

/// A total endofunction of a poset, stored as its image table.
///
/// Equality and hashing look only at the table (and require the same poset).
/// The optional word records a factorisation over some generator list,
/// rightmost factor applied first.
#[derive(Clone)]
pub struct Endo {
    poset: Arc<Poset>,
    image: Arc<[u32]>,
    word: Option<Vec<usize>>,
}

/// Result of [`check_membership`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub regressive: bool,
    pub order_preserving: bool,
}

impl Membership {
    /// Both flags set: the endofunction lies in `Or(K)`.
    pub fn in_or(&self) -> bool {
        self.regressive && self.order_preserving
    }
}

impl Endo {
    pub fn new(poset: Arc<Poset>, image: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if image.len() != n {
            return Err(Error::BadParameter(format!(
                "image table has {} entries for {n} elements",
                image.len()
            )));
        }
        if let Some(&id) = image.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidElement { id, n });
        }
        let table: Vec<u32> = image.into_iter().map(|v| v as u32).collect();
        Ok(Self::from_table(poset, table.into()))
    }

    pub(crate) fn from_table(poset: Arc<Poset>, image: Arc<[u32]>) -> Self {
        debug_assert_eq!(poset.len(), image.len());
        Self {
            poset,
            image,
            word: None,
        }
    }

    pub fn identity(poset: Arc<Poset>) -> Self {
        let t: Vec<u32> = (0..poset.len() as u32).collect();
        Self::from_table(poset, t.into())
    }

    pub fn constant(poset: Arc<Poset>, target: usize) -> Result<Self> {
        poset.check_id(target)?;
        let t = vec![target as u32; poset.len()];
        Ok(Self::from_table(poset, t.into()))
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn table(&self) -> &[u32] {
        &self.image
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize).collect()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn with_word(mut self, word: Vec<usize>) -> Self {
        self.word = Some(word);
        self
    }

    pub fn same_poset(&self, other: &Endo) -> bool {
        Arc::ptr_eq(&self.poset, &other.poset) || *self.poset == *other.poset
    }

    /// `self ∘ g`, i.e. `x ↦ self(g(x))`; words concatenate.
    pub fn compose(&self, g: &Endo) -> Result<Endo> {
        if !self.same_poset(g) {
            return Err(Error::PosetMismatch);
        }
        let table: Vec<u32> = g.image.iter().map(|&y| self.image[y as usize]).collect();
        let word = match (&self.word, &g.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(Endo {
            poset: self.poset.clone(),
            image: table.into(),
            word,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    pub fn is_idempotent(&self) -> bool {
        self.image.iter().all(|&y| self.image[y as usize] == y)
    }

    pub fn membership(&self) -> Membership {
        let p = &self.poset;
        let regressive = (0..p.len()).all(|x| p.leq(self.apply(x), x));
        // monotonicity on covers propagates along chains
        let order_preserving = p
            .cover_pairs()
            .into_iter()
            .all(|(x, y)| p.leq(self.apply(x), self.apply(y)));
        Membership {
            regressive,
            order_preserving,
        }
    }

    /// `imm(f)`.
    pub fn image_set(&self) -> ElementSubset {
        ElementSubset::from_ids(self.poset.len(), self.image.iter().map(|&v| v as usize))
    }

    /// `f_v = {x : f(x) = v}`.
    pub fn fiber(&self, v: usize) -> ElementSubset {
        ElementSubset::from_ids(
            self.poset.len(),
            (0..self.poset.len()).filter(|&x| self.apply(x) == v),
        )
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.apply(v) == v
    }

    pub(crate) fn require_idempotent(&self) -> Result<()> {
        if self.is_idempotent() {
            Ok(())
        } else {
            Err(Error::NotIdempotent)
        }
    }
}

impl PartialEq for Endo {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image && self.same_poset(other)
    }
}

impl Eq for Endo {}

impl Hash for Endo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.image.hash(state);
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Endo")
            .field("image", &self.image)
            .field("word", &self.word)
            .finish()
    }
}

/// Regressive and order-preserving flags, checked exhaustively.
pub fn check_membership(f: &Endo) -> Membership {
    f.membership()
}

pub fn compose(f: &Endo, g: &Endo) -> Result<Endo> {
    f.compose(g)
}
