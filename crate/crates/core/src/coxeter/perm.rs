use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation, with its length cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Box<[u8]>,
    length: u32,
}

fn inversions(w: &[u8]) -> u32 {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > 255 {
            return Err(Error::BadParameter(format!("permutation of size {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::BadParameter(format!(
                    "{word:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self::from_word_unchecked(word))
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        let length = inversions(&word);
        Self {
            word: word.into_boxed_slice(),
            length,
        }
    }

    /// Parses one-line notation such as `"2134"` (single digits, so `n ≤ 9`).
    pub fn parse(s: &str) -> Result<Self> {
        let word = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word).map_err(|_| Error::Parse(format!("bad permutation {s:?}")))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_word_unchecked((1..=n as u8).collect())
    }

    pub fn longest(n: usize) -> Self {
        Self::from_word_unchecked((1..=n as u8).rev().collect())
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} out of range for n = {n}");
        Self::identity(n).right_mul_simple(i)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Number of inversions.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// `w(k)` for `1 ≤ k ≤ n`.
    pub fn at(&self, k: usize) -> usize {
        self.word[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `(self · other)(k) = self(other(k))`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Self::from_word_unchecked(
            other
                .word
                .iter()
                .map(|&k| self.word[k as usize - 1])
                .collect(),
        )
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Self::from_word_unchecked(inv)
    }

    /// `w · s_i`: swaps positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut w = self.word.to_vec();
        w.swap(i - 1, i);
        Self::from_word_unchecked(w)
    }

    /// `s_i · w`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let i = i as u8;
        Self::from_word_unchecked(
            self.word
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.word[i - 1] > self.word[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.word.iter().position(|&x| x == v).unwrap();
        pos(i as u8) > pos(i as u8 + 1)
    }

    pub fn right_descents(&self) -> GenSet {
        GenSet::from_indices((1..self.n()).filter(|&i| self.has_right_descent(i)))
    }

    pub fn left_descents(&self) -> GenSet {
        GenSet::from_indices((1..self.n()).filter(|&i| self.has_left_descent(i)))
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(pos, &v)| self.word[v as usize - 1] as usize == pos + 1)
    }

    /// Minimal number of transpositions: `n` minus the number of cycles.
    pub fn absolute_length(&self) -> u32 {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.word[k] as usize - 1;
            }
        }
        (n - cycles) as u32
    }

    /// A reduced word `[a_1, …, a_k]` with `w = s_{a_1} ⋯ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length as usize);
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.right_mul_simple(i);
        }
        word.reverse();
        word
    }

    pub fn from_reduced_word(n: usize, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Self::identity(n), |w, &i| w.right_mul_simple(i))
    }

    /// `dominance[i][k] = #{j ≤ i : w(j) ≥ k}`, flattened; `u ≤ v` in Bruhat
    /// order iff `u`'s table is entrywise at most `v`'s.
    pub(crate) fn dominance(&self) -> Vec<u8> {
        let n = self.n();
        let mut table = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let prev = if i == 0 { 0 } else { table[(i - 1) * n + k] };
                table[i * n + k] = prev + (self.word[i] as usize > k) as u8;
            }
        }
        table
    }

    /// Bruhat order via the tableau criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n());
        self.length <= other.length
            && self
                .dominance()
                .iter()
                .zip(other.dominance())
                .all(|(a, b)| *a <= b)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in self.word.iter() {
            if self.n() <= 9 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v},")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Permutation::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A set of simple generators `s_i`, stored as a bitmask on `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        GenSet(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// All generators `{1, …, rank}`.
    pub fn full(rank: usize) -> Self {
        Self::from_indices(1..=rank)
    }

    /// `[a, b] = {a, …, b}`.
    pub fn range(a: usize, b: usize) -> Self {
        Self::from_indices(a..=b)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> Self {
        GenSet(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Maximal runs of consecutive generators, as `(first, last)`.
    pub fn blocks(self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < 32 {
            if self.contains(i) {
                let start = i;
                while i + 1 < 32 && self.contains(i + 1) {
                    i += 1;
                }
                out.push((start, i));
            }
            i += 1;
        }
        out
    }

    /// Checks every generator lies in `1..n`.
    pub fn check(self, n: usize) -> Result<()> {
        match self.indices().into_iter().find(|&i| i == 0 || i >= n) {
            Some(i) => Err(Error::BadParameter(format!("generator s_{i} not in S_{n}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for GenSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i >= 32) {
            return Err(serde::de::Error::custom("generator index too large"));
        }
        Ok(GenSet::from_indices(v))
    }
}

/// `w_0(J)`: reverses each block of consecutive generators of `J`.
pub fn w0(n: usize, j: GenSet) -> Permutation {
    let mut w: Vec<u8> = (1..=n as u8).collect();
    for (a, b) in j.blocks() {
        w[a - 1..=b].reverse();
    }
    Permutation::from_word_unchecked(w)
}

/// The minimal representative `w^J` of `w W_J`: sorts each block of positions.
pub fn min_right(w: &Permutation, j: GenSet) -> Permutation {
    let mut word = w.word.to_vec();
    for (a, b) in j.blocks() {
        word[a - 1..=b].sort_unstable();
    }
    Permutation::from_word_unchecked(word)
}

/// The minimal representative `^J w` of `W_J w`.
pub fn min_left(w: &Permutation, j: GenSet) -> Permutation {
    min_right(&w.inverse(), j).inverse()
}

/// All elements of the parabolic subgroup `W_J` of `S_n`, sorted.
pub fn parabolic_subgroup(n: usize, j: GenSet) -> Vec<Permutation> {
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(Permutation::identity(n));
    while let Some(w) = frontier.pop() {
        for i in j.indices() {
            let x = w.right_mul_simple(i);
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    seen.into_iter().collect()
}
