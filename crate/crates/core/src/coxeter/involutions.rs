use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::bruhat::{all_permutations, dominance_rows, parabolic_map, MAX_BRUHAT_N};
use super::perm::{min_left, min_right, w0, GenSet, Permutation};
use crate::config::element_cap;
use crate::endo::Endo;
use crate::error::{Error, Result};
use crate::matchings::Matching;
use crate::poset::{Order, Poset};

/// An involution with its absolute length and rank `(ℓ + aℓ) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionElement {
    pub perm: Permutation,
    pub absolute_length: u32,
    pub rank: u32,
}

impl InvolutionElement {
    pub fn new(perm: Permutation) -> Result<Self> {
        if !perm.is_involution() {
            return Err(Error::BadParameter(format!("{perm} is not an involution")));
        }
        let absolute_length = perm.absolute_length();
        debug_assert_eq!((perm.length() + absolute_length) % 2, 0);
        let rank = (perm.length() + absolute_length) / 2;
        Ok(Self {
            perm,
            absolute_length,
            rank,
        })
    }
}

/// `Invol(S_n)` with the induced Bruhat order, ranked by `(ℓ + aℓ) / 2`.
pub struct InvolutionPoset {
    n: usize,
    poset: Arc<Poset>,
    elems: Vec<InvolutionElement>,
    index: HashMap<Permutation, usize>,
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<InvolutionPoset>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<InvolutionPoset>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Invol(S_n)`, `1 ≤ n ≤ 7`, built once per `n`.
pub fn involution_poset(n: usize) -> Result<Arc<InvolutionPoset>> {
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let p = Arc::new(InvolutionPoset::build(n)?);
    cache().lock().unwrap().entry(n).or_insert(p.clone());
    Ok(p)
}

impl InvolutionPoset {
    fn build(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BRUHAT_N {
            return Err(Error::BadParameter(format!(
                "involutions need 1 ≤ n ≤ {MAX_BRUHAT_N}, got {n}"
            )));
        }
        let mut elems: Vec<InvolutionElement> = all_permutations(n)
            .into_iter()
            .filter(|w| w.is_involution())
            .map(|w| InvolutionElement::new(w).unwrap())
            .collect();
        elems.sort_by(|a, b| (a.rank, a.perm.word()).cmp(&(b.rank, b.perm.word())));
        if elems.len() > element_cap() {
            return Err(Error::TooLarge {
                requested: elems.len(),
                cap: element_cap(),
            });
        }
        let perms: Vec<Permutation> = elems.iter().map(|e| e.perm.clone()).collect();
        let order = Order::from_up_rows_unchecked(dominance_rows(&perms));
        let labels = perms.iter().map(|w| w.to_string()).collect();
        let poset = Poset::from_order(order, Some(labels))?;
        if let Some(e) = elems
            .iter()
            .enumerate()
            .find(|(i, e)| poset.rank(*i) != e.rank)
        {
            return Err(Error::Invariant(format!(
                "rank of {} differs from (ℓ+aℓ)/2",
                e.1.perm
            )));
        }
        let index = perms.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(Self {
            n,
            poset: Arc::new(poset),
            elems,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn elements(&self) -> &[InvolutionElement] {
        &self.elems
    }

    pub fn perm(&self, id: usize) -> &Permutation {
        &self.elems[id].perm
    }

    pub fn id_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `M_s(v) = vs` if `svs = v`, else `svs`.
    pub fn twisted_matching(&self, s: usize) -> Result<Matching> {
        GenSet::from_indices([s]).check(self.n)?;
        let table = self
            .elems
            .iter()
            .map(|e| {
                let v = &e.perm;
                let svs = v.left_mul_simple(s).right_mul_simple(s);
                let image = if &svs == v {
                    v.right_mul_simple(s)
                } else {
                    svs
                };
                self.index[&image]
            })
            .collect();
        let m = Matching::new(self.poset.clone(), table)?;
        if !m.is_special() {
            return Err(Error::Invariant(format!("M_{s} is not special")));
        }
        Ok(m)
    }

    /// Restriction of `w ↦ f(w)` to involutions; fails if it leaves them.
    pub fn restrict(&self, f: impl Fn(&Permutation) -> Permutation) -> Result<Endo> {
        let table = self
            .elems
            .iter()
            .map(|e| {
                let w = f(&e.perm);
                self.id_of(&w)
                    .ok_or_else(|| Error::Invariant(format!("{w} is not an involution")))
            })
            .collect::<Result<Vec<_>>>()?;
        Endo::new(self.poset.clone(), table)
    }

    /// `P̂^J`: the restriction of `Q^J P^J`, checked against the product of
    /// `P^{M_s}` along a reduced word of `w_0(J)`.
    pub fn hat_projection(&self, j: GenSet) -> Result<Endo> {
        j.check(self.n)?;
        let restricted = self.restrict(|w| min_left(&min_right(w, j), j))?;
        let word = w0(self.n, j).reduced_word();
        let mut composite = Endo::identity(self.poset.clone());
        for &s in &word {
            composite = composite.compose(&self.twisted_matching(s)?.idempotent()?)?;
        }
        if composite != restricted {
            return Err(Error::Invariant(format!(
                "P̂^{j} differs from the product of P^(M_s) along {word:?}"
            )));
        }
        Ok(restricted.with_word(word))
    }

    /// `m(w, J)` restricted to involutions.
    pub fn parabolic_map(&self, id: usize, j: GenSet) -> Result<usize> {
        j.check(self.n)?;
        let m = parabolic_map(self.perm(id), j)?;
        self.id_of(&m).ok_or_else(|| {
            Error::Invariant(format!(
                "m({}, {j}) = {m} is not an involution",
                self.perm(id)
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::enumerate_special_matchings;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn invol_s3() {
        let inv = involution_poset(3).unwrap();
        let ranks: Vec<u32> = inv.elements().iter().map(|e| e.rank).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2]);
        assert!(inv.poset().is_eulerian());
    }

    #[test]
    fn invol_s4_sizes_and_matchings() {
        let inv = involution_poset(4).unwrap();
        assert_eq!(inv.poset().len(), 10);
        assert_eq!(enumerate_special_matchings(inv.poset()).len(), 6);
        let m1 = inv.twisted_matching(1).unwrap();
        let e = inv.id_of(&p("1234")).unwrap();
        assert_eq!(inv.perm(m1.partner(e)), &p("2134"));
        for n in 1..=5 {
            assert!(
                involution_poset(n).unwrap().poset().is_eulerian(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn twisted_idempotent_is_restricted_ps_qs() {
        let inv = involution_poset(4).unwrap();
        for s in 1..4 {
            let g = GenSet::from_indices([s]);
            let ps = inv.twisted_matching(s).unwrap().idempotent().unwrap();
            let qp = inv.restrict(|w| min_left(&min_right(w, g), g)).unwrap();
            assert_eq!(ps, qp);
        }
    }

    #[test]
    fn hat_projection_of_empty_set_is_identity() {
        let inv = involution_poset(4).unwrap();
        assert!(inv.hat_projection(GenSet::EMPTY).unwrap().is_identity());
        for bits in 0..8u32 {
            assert!(inv
                .hat_projection(GenSet::from_bits(bits << 1))
                .unwrap()
                .is_idempotent());
        }
    }

    #[test]
    fn parabolic_map_preserves_involutions() {
        let inv = involution_poset(4).unwrap();
        for id in 0..inv.poset().len() {
            for bits in 0..8u32 {
                inv.parabolic_map(id, GenSet::from_bits(bits << 1)).unwrap();
            }
        }
    }
}
