use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::perm::{min_left, min_right, parabolic_subgroup, w0, GenSet, Permutation};
use crate::config::element_cap;
use crate::endo::{Endo, MonoidClosure};
use crate::error::{Error, Result};
use crate::matchings::{enumerate_special_matchings, Matching};
use crate::poset::{Order, Poset};
use crate::subset::ElementSubset;

pub const MAX_BRUHAT_N: usize = 7;

/// `S_n` under Bruhat order. Ids are sorted by length, then lexicographically,
/// so `0` is the identity and the last id is `w_0`.
pub struct BruhatGroup {
    n: usize,
    poset: Arc<Poset>,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All permutations of `S_n` sorted by `(length, word)`.
pub(crate) fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut word: Vec<u8> = (1..=n as u8).collect();
    heap_permute(&mut word, n, &mut out);
    out.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
    out
}

fn heap_permute(word: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation::from_word_unchecked(word.clone()));
        return;
    }
    for i in 0..k {
        heap_permute(word, k - 1, out);
        if k.is_multiple_of(2) {
            word.swap(i, k - 1);
        } else {
            word.swap(0, k - 1);
        }
    }
}

/// Up-set rows of the Bruhat order restricted to `elems`, by the tableau criterion.
pub(crate) fn dominance_rows(elems: &[Permutation]) -> Vec<ElementSubset> {
    let tables: Vec<Vec<u8>> = elems.iter().map(|w| w.dominance()).collect();
    let n = elems.len();
    (0..n)
        .into_par_iter()
        .map(|u| {
            let mut row = ElementSubset::empty(n);
            for v in 0..n {
                if elems[u].length() <= elems[v].length()
                    && tables[u].iter().zip(&tables[v]).all(|(a, b)| a <= b)
                {
                    row.insert(v);
                }
            }
            row
        })
        .collect()
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<BruhatGroup>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BruhatGroup>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `S_n` under Bruhat order, built once per `n` and shared.
pub fn bruhat_group(n: usize) -> Result<Arc<BruhatGroup>> {
    if let Some(g) = cache().lock().unwrap().get(&n) {
        return Ok(g.clone());
    }
    let g = Arc::new(BruhatGroup::build(n)?);
    cache().lock().unwrap().entry(n).or_insert(g.clone());
    Ok(g)
}

/// The Bruhat poset of `S_n`, `1 ≤ n ≤ 7`, labelled in one-line notation.
pub fn bruhat_poset(n: usize) -> Result<Arc<Poset>> {
    Ok(bruhat_group(n)?.poset().clone())
}

impl BruhatGroup {
    fn build(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BRUHAT_N {
            return Err(Error::BadParameter(format!(
                "bruhat order needs 1 ≤ n ≤ {MAX_BRUHAT_N}, got {n}"
            )));
        }
        let size = factorial(n);
        if size > element_cap() {
            return Err(Error::TooLarge {
                requested: size,
                cap: element_cap(),
            });
        }
        let perms = all_permutations(n);
        let order = Order::from_up_rows_unchecked(dominance_rows(&perms));
        let labels = perms.iter().map(|w| w.to_string()).collect();
        let poset = Poset::from_order(order, Some(labels))?;
        if let Some(w) = perms
            .iter()
            .enumerate()
            .find(|(i, w)| poset.rank(*i) != w.length())
        {
            return Err(Error::Invariant(format!(
                "rank of {} differs from its length",
                w.1
            )));
        }
        let index = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Ok(Self {
            n,
            poset: Arc::new(poset),
            perms,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple generators, `n − 1`.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, id: usize) -> &Permutation {
        &self.perms[id]
    }

    pub fn id_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn id(&self, w: &Permutation) -> usize {
        self.index[w]
    }

    /// The endofunction `w ↦ f(w)` as an [`Endo`] on the Bruhat poset.
    pub fn endo(&self, f: impl Fn(&Permutation) -> Permutation + Sync) -> Endo {
        let table = self.perms.par_iter().map(|w| self.id(&f(w))).collect();
        Endo::new(self.poset.clone(), table).expect("permutation map stays in the group")
    }

    /// `proj` for `spec` as an endofunction.
    pub fn projection(&self, spec: &QuotientSpec) -> Result<Endo> {
        spec.validate()?;
        if spec.n != self.n {
            return Err(Error::PosetMismatch);
        }
        Ok(self.endo(|w| proj(spec, w)))
    }

    /// `P^J`: `w ↦ w^J`.
    pub fn p(&self, j: GenSet) -> Endo {
        self.endo(|w| min_right(w, j))
    }

    /// `Q^I`: `w ↦ ^I w`.
    pub fn q(&self, i: GenSet) -> Endo {
        self.endo(|w| min_left(w, i))
    }

    /// `Q^I P^J`.
    pub fn qp(&self, i: GenSet, j: GenSet) -> Endo {
        self.endo(|w| min_left(&min_right(w, j), i))
    }

    /// `P^w = P^{{s_1}} ⋯ P^{{s_k}}` (right) or `Q^w` (left) for the word `s_1 ⋯ s_k`.
    pub fn hecke_product(&self, side: Side, word: &[usize]) -> Result<Endo> {
        GenSet::from_indices(word.iter().copied()).check(self.n)?;
        let mut acc = Endo::identity(self.poset.clone());
        for &i in word {
            let g = match side {
                Side::Right => self.p(GenSet::from_indices([i])),
                Side::Left => self.q(GenSet::from_indices([i])),
                Side::Double => {
                    return Err(Error::BadParameter("hecke products are one-sided".into()));
                }
            };
            acc = acc.compose(&g)?;
        }
        Ok(acc.with_word(word.to_vec()))
    }

    /// Right and left multiplication matchings `w ↦ ws`, `w ↦ sw`, deduplicated.
    pub fn multiplication_matchings(&self) -> Vec<Matching> {
        let mut tables: Vec<Vec<usize>> = Vec::new();
        for i in 1..self.n {
            for left in [false, true] {
                let t: Vec<usize> = self
                    .perms
                    .iter()
                    .map(|w| {
                        self.id(&if left {
                            w.left_mul_simple(i)
                        } else {
                            w.right_mul_simple(i)
                        })
                    })
                    .collect();
                if !tables.contains(&t) {
                    tables.push(t);
                }
            }
        }
        tables
            .into_iter()
            .map(|t| Matching::new(self.poset.clone(), t).expect("multiplication is a matching"))
            .collect()
    }

    /// `W^{LR}`: the monoid generated by `P^M` over multiplication matchings.
    /// Checks that its idempotents are exactly the `Q^I P^J`, and for `n ≤ 4`
    /// that every special matching is a multiplication matching.
    pub fn closure_wlr(&self) -> Result<MonoidClosure> {
        let mults = self.multiplication_matchings();
        if self.n <= 4 {
            let special = enumerate_special_matchings(&self.poset);
            if special.len() != mults.len() || special.iter().any(|m| !mults.contains(m)) {
                return Err(Error::Invariant(format!(
                    "S_{} has special matchings that are not multiplication matchings",
                    self.n
                )));
            }
        }
        let mut gens = vec![Endo::identity(self.poset.clone())];
        for m in &mults {
            gens.push(m.idempotent()?);
        }
        let closure = MonoidClosure::generate(self.poset.clone(), &gens)?;
        let mut expected: Vec<Vec<u32>> = Vec::new();
        let full = 1u32 << self.n;
        for ib in (0..full).step_by(2) {
            for jb in (0..full).step_by(2) {
                let t = self.qp(
                    GenSet::from_bits(ib & (full - 2)),
                    GenSet::from_bits(jb & (full - 2)),
                );
                expected.push(t.table().to_vec());
            }
        }
        expected.sort();
        expected.dedup();
        let mut got: Vec<Vec<u32>> = closure
            .idempotent_indices()
            .iter()
            .map(|&i| closure.table(i).to_vec())
            .collect();
        got.sort();
        if got != expected {
            return Err(Error::Invariant(format!(
                "E(W^LR) has {} idempotents, expected {} distinct Q^I P^J",
                got.len(),
                expected.len()
            )));
        }
        Ok(closure)
    }

    pub fn parabolic_map(&self, w: &Permutation, j: GenSet) -> Result<Permutation> {
        j.check(self.n)?;
        parabolic_map(w, j)
    }

    pub fn coset_max(&self, u: &Permutation, v: &Permutation, j: GenSet) -> Result<Permutation> {
        j.check(self.n)?;
        coset_max(u, v, j)
    }

    /// Transitive closure of `u → ut` over transpositions `t` with `ℓ(ut) > ℓ(u)`.
    pub fn reflection_order(&self) -> Result<Order> {
        let mut pairs = Vec::new();
        for (u, w) in self.perms.iter().enumerate() {
            for a in 0..self.n {
                for b in a + 1..self.n {
                    let mut x = w.word().to_vec();
                    x.swap(a, b);
                    let x = Permutation::from_word_unchecked(x);
                    if x.length() > w.length() {
                        pairs.push((u, self.id(&x)));
                    }
                }
            }
        }
        Order::from_covers(self.perms.len(), &pairs)
    }
}

/// `m(w, J) = max{v ∈ W_J : v ≤ w}`.
pub fn parabolic_map(w: &Permutation, j: GenSet) -> Result<Permutation> {
    let below: Vec<Permutation> = parabolic_subgroup(w.n(), j)
        .into_iter()
        .filter(|v| v.bruhat_leq(w))
        .collect();
    maximum_of(&below).ok_or_else(|| Error::Invariant(format!("no maximum of W_J below {w}")))
}

/// `max(u W_J ∩ [u, v])` for `u ≤ v` in `W^J`.
pub fn coset_max(u: &Permutation, v: &Permutation, j: GenSet) -> Result<Permutation> {
    if !u.bruhat_leq(v) {
        return Err(Error::BadParameter(format!("{u} is not below {v}")));
    }
    let cands: Vec<Permutation> = parabolic_subgroup(u.n(), j)
        .iter()
        .map(|x| u.mul(x))
        .filter(|x| x.bruhat_leq(v))
        .collect();
    maximum_of(&cands).ok_or_else(|| Error::Invariant(format!("no maximum of {u}W_J below {v}")))
}

fn maximum_of(set: &[Permutation]) -> Option<Permutation> {
    let top = set.iter().max_by_key(|w| w.length())?;
    set.iter().all(|x| x.bruhat_leq(top)).then(|| top.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
    Double,
}

/// Which parabolic projection to take: right uses `J`, left uses `I`, double both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuotientSpec {
    pub n: usize,
    pub i: GenSet,
    pub j: GenSet,
    pub side: Side,
}

impl QuotientSpec {
    pub fn right(n: usize, j: GenSet) -> Self {
        Self {
            n,
            i: GenSet::EMPTY,
            j,
            side: Side::Right,
        }
    }

    pub fn left(n: usize, i: GenSet) -> Self {
        Self {
            n,
            i,
            j: GenSet::EMPTY,
            side: Side::Left,
        }
    }

    pub fn double(n: usize, i: GenSet, j: GenSet) -> Self {
        Self {
            n,
            i,
            j,
            side: Side::Double,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.i.check(self.n)?;
        self.j.check(self.n)?;
        match self.side {
            Side::Right if !self.i.is_empty() => {
                Err(Error::BadParameter("right quotient takes J only".into()))
            }
            Side::Left if !self.j.is_empty() => {
                Err(Error::BadParameter("left quotient takes I only".into()))
            }
            _ => Ok(()),
        }
    }
}

/// `w^J`, `^I w`, or the minimal element of `W_I w W_J`.
pub fn proj(spec: &QuotientSpec, w: &Permutation) -> Permutation {
    match spec.side {
        Side::Right => min_right(w, spec.j),
        Side::Left => min_left(w, spec.i),
        Side::Double => min_left(&min_right(w, spec.j), spec.i),
    }
}

/// `(w_0(I))^{I ∩ J_w} · w · w_0(J)` with `J_w = {w s w⁻¹ : s ∈ J}`: the top of
/// the double coset `W_I w W_J` for `w` its minimal element.
pub fn double_coset_top(w: &Permutation, i: GenSet, j: GenSet) -> Permutation {
    let n = w.n();
    let winv = w.inverse();
    let conj: Vec<Permutation> = j
        .indices()
        .into_iter()
        .map(|k| w.mul(&Permutation::simple(n, k)).mul(&winv))
        .collect();
    let k = GenSet::from_indices(
        i.indices()
            .into_iter()
            .filter(|&a| conj.contains(&Permutation::simple(n, a))),
    );
    min_right(&w0(n, i), k).mul(w).mul(&w0(n, j))
}
