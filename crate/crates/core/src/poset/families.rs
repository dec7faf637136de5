//! Named poset families and Cartesian products.

use super::Poset;
use crate::error::{Error, Result};

/// The `n`-element chain `0 < 1 < … < n−1`.
pub fn chain(n: usize) -> Result<Poset> {
    if n == 0 {
        return Err(Error::BadParameter(
            "chain length must be at least 1".into(),
        ));
    }
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::build(n, &covers, None)
}

/// Subsets of `{1..k}` under inclusion; element ids are bitmasks.
pub fn boolean_lattice(k: usize) -> Result<Poset> {
    if k > 20 {
        return Err(Error::BadParameter(format!("boolean lattice of rank {k}")));
    }
    let n = 1usize << k;
    let mut covers = Vec::new();
    for x in 0..n {
        for b in 0..k {
            if x & (1 << b) == 0 {
                covers.push((x, x | (1 << b)));
            }
        }
    }
    let labels = (0..n)
        .map(|x| {
            let items: Vec<String> = (0..k)
                .filter(|b| x & (1 << b) != 0)
                .map(|b| (b + 1).to_string())
                .collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Poset::build(n, &covers, Some(labels))
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Divisors of `n` ordered by divisibility, labelled by value, ids ascending by value.
pub fn divisor_poset(n: u64) -> Result<Poset> {
    if n < 2 {
        return Err(Error::BadParameter(format!(
            "divisor poset needs n >= 2, got {n}"
        )));
    }
    let factors = factorize(n);
    let mut divisors = vec![1u64];
    for &(p, k) in &factors {
        let mut next = Vec::new();
        for &d in &divisors {
            let mut q = d;
            for _ in 0..=k {
                next.push(q);
                q *= p;
            }
        }
        divisors = next;
    }
    divisors.sort_unstable();
    let index = |d: u64| divisors.binary_search(&d).unwrap();
    let mut covers = Vec::new();
    for (i, &d) in divisors.iter().enumerate() {
        for &(p, _) in &factors {
            if n.is_multiple_of(d * p) {
                covers.push((i, index(d * p)));
            }
        }
    }
    let labels = divisors.iter().map(|d| d.to_string()).collect();
    Poset::build(divisors.len(), &covers, Some(labels))
}

/// Mixed-radix encoding of factor tuples; the last coordinate varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    sizes: Vec<usize>,
}

impl ProductIndex {
    pub fn new(sizes: Vec<usize>) -> Self {
        Self { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.sizes.len());
        tuple
            .iter()
            .zip(&self.sizes)
            .fold(0, |acc, (&t, &s)| acc * s + t)
    }

    pub fn decode(&self, mut id: usize) -> Vec<usize> {
        let mut t = vec![0; self.sizes.len()];
        for (slot, &s) in t.iter_mut().zip(&self.sizes).rev() {
            *slot = id % s;
            id /= s;
        }
        t
    }
}

/// Cartesian product with the componentwise order.
pub fn product(factors: &[&Poset]) -> Result<Poset> {
    if factors.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let index = ProductIndex::new(factors.iter().map(|p| p.len()).collect());
    let n = index.len();
    if n > crate::config::element_cap() {
        return Err(Error::TooLarge {
            requested: n,
            cap: crate::config::element_cap(),
        });
    }
    let mut covers = Vec::new();
    let mut labels = Vec::with_capacity(n);
    for id in 0..n {
        let t = index.decode(id);
        for (c, p) in factors.iter().enumerate() {
            for &u in p.upper_covers(t[c]) {
                let mut s = t.clone();
                s[c] = u;
                covers.push((id, index.encode(&s)));
            }
        }
        let parts: Vec<String> = t.iter().zip(factors).map(|(&x, p)| p.label(x)).collect();
        labels.push(format!("({})", parts.join(",")));
    }
    Poset::build(n, &covers, Some(labels))
}
