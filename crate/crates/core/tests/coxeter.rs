use std::collections::BTreeSet;

use matchmonoid::coxeter::{
    bruhat_group, bruhat_poset, involution_poset, min_left, min_right, parabolic_map,
    parabolic_subgroup, proj, projection_tables, w0, GenSet, Permutation, QuotientSpec, Side,
    TableKind,
};
use matchmonoid::matchings::special_monoid;
use matchmonoid::poset::{chain, is_isomorphic};
use proptest::prelude::*;

fn perm(s: &str) -> Permutation {
    Permutation::parse(s).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u8).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn genset(rank: usize) -> impl Strategy<Value = GenSet> {
    (0u32..1 << rank).prop_map(|b| GenSet::from_bits(b << 1))
}

#[test]
fn bruhat_examples() {
    assert!(is_isomorphic(&bruhat_poset(2).unwrap(), &chain(2).unwrap()));
    let s3 = bruhat_poset(3).unwrap();
    assert_eq!(s3.len(), 6);
    assert_eq!(s3.maximal_elements(&s3.up_set(0).clone()), vec![s3.top()]);
    assert!(s3.is_eulerian());
    let g4 = bruhat_group(4).unwrap();
    assert_eq!(g4.poset().rank(g4.id_of(&perm("4321")).unwrap()), 6);
    assert!(bruhat_poset(5).unwrap().is_eulerian());
    assert!(bruhat_poset(8).is_err());
}

#[test]
fn tableau_criterion_matches_reflection_closure_on_s5() {
    let g = bruhat_group(5).unwrap();
    assert_eq!(&g.reflection_order().unwrap(), g.poset().order());
}

#[test]
fn right_projection_of_longest_element() {
    // w0 = sts; stripping the descent t on the right leaves ts = 312
    let spec = QuotientSpec::right(3, GenSet::from_indices([2]));
    assert_eq!(proj(&spec, &perm("321")), perm("312"));
    let t = Permutation::simple(3, 2);
    let s = Permutation::simple(3, 1);
    assert_eq!(proj(&spec, &perm("321")), t.mul(&s));
    // the left quotient strips it on the other side
    let left = QuotientSpec::left(3, GenSet::from_indices([2]));
    assert_eq!(proj(&left, &perm("321")), s.mul(&t));
}

#[test]
fn double_projection_fiber_of_identity_is_double_coset() {
    let g = bruhat_group(3).unwrap();
    let (i, j) = (GenSet::from_indices([1]), GenSet::from_indices([2]));
    let e = g.qp(i, j);
    let fiber: BTreeSet<Permutation> = e.fiber(0).iter().map(|x| g.perm(x).clone()).collect();
    let mut coset = BTreeSet::new();
    for a in parabolic_subgroup(3, i) {
        for b in parabolic_subgroup(3, j) {
            coset.insert(a.mul(&b));
        }
    }
    assert_eq!(fiber, coset);
}

#[test]
fn spec_validation() {
    assert!(QuotientSpec::right(4, GenSet::from_indices([4]))
        .validate()
        .is_err());
    let mut bad = QuotientSpec::right(4, GenSet::from_indices([1]));
    bad.i = GenSet::from_indices([2]);
    assert!(bad.validate().is_err());
    assert!(
        QuotientSpec::double(4, GenSet::from_indices([2]), GenSet::from_indices([3]))
            .validate()
            .is_ok()
    );
    assert_eq!(bad.side, Side::Right);
}

#[test]
fn special_monoid_of_s4_is_wlr() {
    let g = bruhat_group(4).unwrap();
    let wlr = g.closure_wlr().unwrap();
    let m = special_monoid(g.poset()).unwrap();
    assert_eq!(wlr.len(), m.len());
    for i in 0..m.len() {
        assert_eq!(wlr.table(i), m.table(i));
    }
}

#[test]
fn parabolic_map_restricts_to_involutions() {
    let inv = involution_poset(5).unwrap();
    for id in 0..inv.poset().len() {
        for bits in 0..16u32 {
            let j = GenSet::from_bits(bits << 1);
            let m = inv.parabolic_map(id, j).unwrap();
            assert!(inv.perm(m).is_involution());
        }
    }
}

#[test]
fn involution_poset_sizes() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| involution_poset(n).unwrap().poset().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
}

#[test]
#[ignore = "extended profile: S6 tables"]
fn s6_tables() {
    assert!(projection_tables(5, TableKind::Group).unwrap().matches());
    assert!(projection_tables(5, TableKind::Involutions)
        .unwrap()
        .matches());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn length_is_additive_on_cosets(w in permutation(6), j in genset(5)) {
        let wj = min_right(&w, j);
        let rest = wj.inverse().mul(&w);
        prop_assert_eq!(wj.length() + rest.length(), w.length());
        prop_assert!(rest.bruhat_leq(&w0(6, j)));
        prop_assert!(wj.bruhat_leq(&w));
        let jw = min_left(&w, j);
        prop_assert_eq!(jw.length() + w.mul(&jw.inverse()).length(), w.length());
    }

    #[test]
    fn double_projections_commute(w in permutation(6), i in genset(5), j in genset(5)) {
        let a = min_left(&min_right(&w, j), i);
        let b = min_right(&min_left(&w, i), j);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&proj(&QuotientSpec::double(6, i, j), &w), &a);
        prop_assert!(a.left_descents().intersection(i).is_empty());
        prop_assert!(a.right_descents().intersection(j).is_empty());
    }

    #[test]
    fn parabolic_map_is_below(w in permutation(5), j in genset(4)) {
        let m = parabolic_map(&w, j).unwrap();
        prop_assert!(m.bruhat_leq(&w));
        prop_assert!(parabolic_subgroup(5, j).contains(&m));
    }

    #[test]
    fn bruhat_order_is_compatible_with_projections(u in permutation(5), v in permutation(5), j in genset(4)) {
        if u.bruhat_leq(&v) {
            prop_assert!(min_right(&u, j).bruhat_leq(&min_right(&v, j)));
            prop_assert!(min_left(&u, j).bruhat_leq(&min_left(&v, j)));
        }
    }
}
