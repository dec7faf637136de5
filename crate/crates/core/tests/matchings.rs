use std::collections::BTreeSet;
use std::sync::Arc;

use matchmonoid::coxeter::{bruhat_group, involution_poset, GenSet, Permutation};
use matchmonoid::endo::regressive_endos;
use matchmonoid::matchings::{
    enumerate_partial_matchings, enumerate_perfect_matchings, enumerate_special_matchings,
    enumerate_special_partial_matchings, idempotent_from_matching, idempotent_from_partial,
    product_decomposition_check, special_partial_monoid, Direction,
};
use matchmonoid::poset::{boolean_lattice, chain, divisor_poset, product};
use matchmonoid::{Error, Matching, PartialMatching, Poset};
use proptest::prelude::*;

/// Every involution of the carrier pairing only cover-adjacent elements.
/// `partial` allows fixed points except at the top.
fn brute_matchings(p: &Poset, partial: bool) -> Vec<Vec<usize>> {
    fn go(p: &Poset, partial: bool, m: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = m.iter().position(|v| v.is_none()) else {
            out.push(m.iter().map(|v| v.unwrap()).collect());
            return;
        };
        if partial && x != p.top() {
            m[x] = Some(x);
            go(p, partial, m, out);
            m[x] = None;
        }
        for y in 0..p.len() {
            if y != x && m[y].is_none() && (p.covers(x, y) || p.covers(y, x)) {
                m[x] = Some(y);
                m[y] = Some(x);
                go(p, partial, m, out);
                m[x] = None;
                m[y] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(p, partial, &mut vec![None; p.len()], &mut out);
    if partial {
        out.retain(|m| m[p.top()] != p.top());
    }
    out.sort();
    out.dedup();
    out
}

fn definitionally_special(p: &Poset, m: &[usize]) -> bool {
    (0..p.len()).all(|x| (0..p.len()).all(|y| !p.covers(x, y) || x == m[y] || p.leq(m[x], m[y])))
}

fn test_posets() -> Vec<Arc<Poset>> {
    let mut v = vec![
        chain(2).unwrap(),
        chain(4).unwrap(),
        chain(5).unwrap(),
        boolean_lattice(2).unwrap(),
        boolean_lattice(3).unwrap(),
        divisor_poset(12).unwrap(),
        divisor_poset(24).unwrap(),
        divisor_poset(30).unwrap(),
        divisor_poset(36).unwrap(),
        product(&[&chain(3).unwrap(), &chain(3).unwrap()]).unwrap(),
        product(&[&boolean_lattice(2).unwrap(), &chain(3).unwrap()]).unwrap(),
    ];
    v.push((**bruhat_group(3).unwrap().poset()).clone());
    v.push((**involution_poset(4).unwrap().poset()).clone());
    v.into_iter().map(Arc::new).collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for p in test_posets() {
        let perfect: Vec<Vec<usize>> = enumerate_perfect_matchings(&p)
            .iter()
            .map(|m| m.partners())
            .collect();
        let mut sorted = perfect.clone();
        sorted.sort();
        assert_eq!(sorted, brute_matchings(&p, false));
        let special: Vec<Vec<usize>> = enumerate_special_matchings(&p)
            .iter()
            .map(|m| m.partners())
            .collect();
        let expected: Vec<Vec<usize>> = sorted
            .into_iter()
            .filter(|m| definitionally_special(&p, m))
            .collect();
        let mut got = special.clone();
        got.sort();
        assert_eq!(got, expected);

        let partial: BTreeSet<Vec<usize>> = enumerate_partial_matchings(&p)
            .unwrap()
            .iter()
            .map(|m| m.partners())
            .collect();
        let brute: Vec<Vec<usize>> = brute_matchings(&p, true);
        assert_eq!(partial.into_iter().collect::<Vec<_>>(), brute);
        let sp: BTreeSet<Vec<usize>> = enumerate_special_partial_matchings(&p)
            .unwrap()
            .iter()
            .map(|m| m.partners())
            .collect();
        let expected: BTreeSet<Vec<usize>> = brute
            .into_iter()
            .filter(|m| definitionally_special(&p, m))
            .collect();
        assert_eq!(sp, expected);
    }
}

#[test]
fn special_matching_counts() {
    let c2 = Arc::new(chain(2).unwrap());
    assert_eq!(enumerate_special_matchings(&c2).len(), 1);
    let d12 = Arc::new(divisor_poset(12).unwrap());
    let sm = enumerate_special_matchings(&d12);
    assert_eq!(sm.len(), 1);
    let (one, three) = (d12.find("1").unwrap(), d12.find("3").unwrap());
    assert_eq!(sm[0].partner(one), three);
    let inv = involution_poset(4).unwrap();
    assert_eq!(enumerate_special_matchings(inv.poset()).len(), 6);
    // odd number of elements: no perfect matching at all
    assert!(enumerate_special_matchings(&Arc::new(chain(3).unwrap())).is_empty());
}

#[test]
fn s3_matching_special_iff_lifting() {
    let g = bruhat_group(3).unwrap();
    let id = |s: &str| g.id_of(&Permutation::parse(s).unwrap()).unwrap();
    let mut partner = vec![0; 6];
    for (a, b) in [("123", "213"), ("132", "231"), ("312", "321")] {
        partner[id(a)] = id(b);
        partner[id(b)] = id(a);
    }
    let m = Matching::new(g.poset().clone(), partner).unwrap();
    assert_eq!(m.is_special(), m.satisfies_lifting());
    // e↔s, t↔st, ts↔sts is w ↦ s·w
    assert!(m.is_special());
    assert!(g.multiplication_matchings().contains(&m));
    // the hexagon has exactly four perfect matchings, all multiplication matchings
    let all = enumerate_perfect_matchings(g.poset());
    assert_eq!(all.len(), 4);
    assert!(all.iter().all(|m| m.is_special() && m.satisfies_lifting()));
    let b3 = Arc::new(boolean_lattice(3).unwrap());
    let bad: Vec<Matching> = enumerate_perfect_matchings(&b3)
        .into_iter()
        .filter(|m| !m.is_special())
        .collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|m| !m.satisfies_lifting()));
    for m in enumerate_perfect_matchings(g.poset()) {
        assert_eq!(m.is_special(), m.satisfies_lifting());
    }
}

#[test]
fn matching_validation() {
    let c3 = Arc::new(chain(3).unwrap());
    assert!(matches!(
        Matching::new(c3.clone(), vec![2, 1, 0]),
        Err(Error::NotAMatching(_))
    ));
    assert!(matches!(
        Matching::new(c3.clone(), vec![1, 0, 0]),
        Err(Error::NotAMatching(_))
    ));
    assert!(matches!(
        PartialMatching::new(c3.clone(), vec![0, 1, 2]),
        Err(Error::NotAMatching(_))
    ));
    let mp = PartialMatching::new(c3.clone(), vec![0, 2, 1]).unwrap();
    assert_eq!(mp.fixed_points(), vec![0]);
    assert_eq!(mp.direction(0), Direction::Fixed);
    assert_eq!(mp.direction(1), Direction::Up);
    assert_eq!(mp.direction(2), Direction::Down);
    assert!(matches!(
        enumerate_special_partial_matchings(&Arc::new(chain(1).unwrap())),
        Err(Error::TooSmall)
    ));
}

#[test]
fn idempotents_from_matchings() {
    let c2 = Arc::new(chain(2).unwrap());
    let swap = Matching::new(c2.clone(), vec![1, 0]).unwrap();
    assert_eq!(
        idempotent_from_matching(&swap).unwrap().to_vec(),
        vec![0, 0]
    );
    assert_eq!(
        idempotent_from_partial(&swap.to_partial()).unwrap(),
        idempotent_from_matching(&swap).unwrap()
    );
    let g = bruhat_group(3).unwrap();
    let right_s: Vec<usize> = g
        .perms()
        .iter()
        .map(|w| g.id_of(&w.right_mul_simple(1)).unwrap())
        .collect();
    let m = Matching::new(g.poset().clone(), right_s).unwrap();
    assert_eq!(m.idempotent().unwrap(), g.p(GenSet::from_indices([1])));
    let c3 = Arc::new(chain(3).unwrap());
    let mp = PartialMatching::new(c3, vec![0, 2, 1]).unwrap();
    assert_eq!(mp.idempotent().unwrap().to_vec(), vec![0, 1, 1]);
    let b2 = Arc::new(boolean_lattice(2).unwrap());
    // pairs ∅↔{1}, {2}↔{1,2} is special; ∅↔{1}, {2}↔{1,2} swapped sides is not a matching concern
    let ok = Matching::new(b2, vec![1, 0, 3, 2]).unwrap();
    assert!(ok.is_special());
}

#[test]
fn partial_counts() {
    for (n, f) in [(5, 3), (6, 5)] {
        let c = Arc::new(chain(n).unwrap());
        assert_eq!(enumerate_special_partial_matchings(&c).unwrap().len(), f);
    }
    let d12 = Arc::new(divisor_poset(12).unwrap());
    assert_eq!(enumerate_special_partial_matchings(&d12).unwrap().len(), 2);
}

#[test]
fn chain_partial_monoid_is_id_plus_or_of_shorter_chain() {
    for n in 3..=8 {
        let c = Arc::new(chain(n).unwrap());
        let m = special_partial_monoid(&c).unwrap();
        let short = Arc::new(chain(n - 2).unwrap());
        let or: BTreeSet<Vec<usize>> = regressive_endos(&short, 1 << 20)
            .unwrap()
            .iter()
            .map(|e| e.to_vec())
            .collect();
        let restricted: BTreeSet<Vec<usize>> = m
            .endos()
            .filter(|e| !e.is_identity())
            .map(|e| e.to_vec()[..n - 2].to_vec())
            .collect();
        assert_eq!(m.len(), 1 + or.len(), "c{n}");
        assert_eq!(restricted, or, "c{n}");
    }
}

#[test]
fn product_examples() {
    let c2 = chain(2).unwrap();
    let c3 = chain(3).unwrap();
    let r = product_decomposition_check(&c2, &c2).unwrap();
    assert!(r.holds());
    assert_eq!(r.special_count, 2);
    let r = product_decomposition_check(&c3, &c2).unwrap();
    assert!(r.holds());
    assert_eq!(r.special_count, 1);
    let r = product_decomposition_check(&c3, &c3).unwrap();
    assert!(r.holds());
    assert_eq!(r.special_count, 0);
}

fn small_poset() -> impl Strategy<Value = Arc<Poset>> {
    prop_oneof![
        (1usize..5, 1usize..4).prop_map(|(a, b)| product(&[
            &chain(a).unwrap(),
            &chain(b).unwrap()
        ])
        .unwrap()),
        (1usize..3, 1usize..4).prop_map(|(a, b)| product(&[
            &boolean_lattice(a).unwrap(),
            &chain(b).unwrap()
        ])
        .unwrap()),
        (2u64..400).prop_filter_map("small divisor poset", |n| {
            divisor_poset(n).ok().filter(|p| p.len() <= 12)
        }),
    ]
    .prop_map(Arc::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn special_iff_lifting(p in small_poset()) {
        for m in enumerate_perfect_matchings(&p) {
            prop_assert_eq!(m.is_special(), m.satisfies_lifting());
        }
    }

    #[test]
    fn special_idempotents_are_regressive_projections(p in small_poset()) {
        for m in enumerate_special_matchings(&p) {
            let e = m.idempotent().unwrap();
            prop_assert!(e.is_idempotent());
            prop_assert!(e.membership().in_or());
        }
        if p.len() >= 2 {
            for m in enumerate_special_partial_matchings(&p).unwrap() {
                let e = m.idempotent().unwrap();
                prop_assert!(e.is_idempotent());
                prop_assert!(e.membership().in_or());
            }
        }
    }
}
