use std::collections::HashMap;
use std::sync::Arc;

use matchmonoid::coxeter::{bruhat_group, involution_poset, GenSet};
use matchmonoid::endo::{
    absorbs, check_membership, galois_check, galois_verify, generate_closure, idempotent_order,
    join_idempotents, regressive_endos, EndoJson, PosetRef,
};
use matchmonoid::matchings::{special_generators, special_monoid};
use matchmonoid::poset::{boolean_lattice, chain, divisor_poset, product};
use matchmonoid::{Endo, Error, MonoidClosure, Poset};
use proptest::prelude::*;

fn all_maps_in_or(p: &Arc<Poset>) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    let mut t = vec![0usize; n];
    loop {
        let regressive = (0..n).all(|x| p.leq(t[x], x));
        let monotone = (0..n).all(|x| (0..n).all(|y| !p.leq(x, y) || p.leq(t[x], t[y])));
        if regressive && monotone {
            out.push(t.clone());
        }
        let mut i = 0;
        while i < n && t[i] == n - 1 {
            t[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        t[i] += 1;
    }
    out.sort();
    out
}

#[test]
fn membership_examples() {
    let b2 = Arc::new(boolean_lattice(2).unwrap());
    let id = Endo::identity(b2.clone());
    assert!(check_membership(&id).in_or());
    let bottom = Endo::constant(b2.clone(), 0).unwrap();
    assert!(check_membership(&bottom).in_or());
    let c3 = Arc::new(chain(3).unwrap());
    let f = Endo::new(c3, vec![0, 0, 2]).unwrap();
    assert!(check_membership(&f).in_or());
    let g = Endo::new(b2, vec![0, 1, 2, 1]).unwrap();
    let m = check_membership(&g);
    assert!(m.regressive);
    assert!(!m.order_preserving);
}

#[test]
fn composition_applies_right_factor_first() {
    let c3 = Arc::new(chain(3).unwrap());
    let f = Endo::new(c3.clone(), vec![0, 0, 2])
        .unwrap()
        .with_word(vec![1]);
    let g = Endo::new(c3.clone(), vec![0, 1, 1])
        .unwrap()
        .with_word(vec![2]);
    let fg = f.compose(&g).unwrap();
    assert_eq!(fg.to_vec(), vec![0, 0, 0]);
    assert_eq!(fg.word(), Some(&[1, 2][..]));
    let gf = g.compose(&f).unwrap();
    assert_eq!(gf.to_vec(), vec![0, 0, 1]);
    let other = Endo::identity(Arc::new(chain(4).unwrap()));
    assert!(matches!(f.compose(&other), Err(Error::PosetMismatch)));
}

#[test]
fn regressive_endos_match_brute_force() {
    let posets = [
        boolean_lattice(2).unwrap(),
        product(&[&chain(2).unwrap(), &chain(3).unwrap()]).unwrap(),
        divisor_poset(12).unwrap(),
        chain(5).unwrap(),
    ];
    for p in posets {
        let p = Arc::new(p);
        let got: Vec<Vec<usize>> = regressive_endos(&p, 1 << 20)
            .unwrap()
            .iter()
            .map(|e| e.to_vec())
            .collect();
        assert_eq!(got, all_maps_in_or(&p));
    }
}

#[test]
fn closure_examples() {
    let b2 = Arc::new(boolean_lattice(2).unwrap());
    let m = generate_closure(&[Endo::identity(b2.clone())]).unwrap();
    assert_eq!(m.len(), 1);
    assert!(matches!(generate_closure(&[]), Err(Error::BadParameter(_))));
    let p30 = Arc::new(divisor_poset(30).unwrap());
    let m = special_monoid(&p30).unwrap();
    assert_eq!(m.len(), 8);
    assert_eq!(m.idempotent_indices().len(), 8);
}

#[test]
fn closure_words_evaluate_to_their_tables() {
    let inv = involution_poset(4).unwrap();
    let gens = special_generators(inv.poset()).unwrap();
    let m = MonoidClosure::generate(inv.poset().clone(), &gens).unwrap();
    assert_eq!(m.len(), 46);
    for i in 0..m.len() {
        let mut acc = Endo::identity(inv.poset().clone());
        for &g in m.word(i) {
            acc = acc.compose(&gens[g]).unwrap();
        }
        assert_eq!(acc.table(), m.table(i));
    }
}

#[test]
fn closure_budget_overflow() {
    let inv = involution_poset(4).unwrap();
    let gens = special_generators(inv.poset()).unwrap();
    assert!(matches!(
        MonoidClosure::generate_with_budget(inv.poset().clone(), &gens, 10),
        Err(Error::ClosureOverflow { budget: 10 })
    ));
}

#[test]
fn idempotents_of_or_b2_form_a_lattice() {
    let b2 = Arc::new(boolean_lattice(2).unwrap());
    let idems: Vec<Endo> = regressive_endos(&b2, 1 << 20)
        .unwrap()
        .into_iter()
        .filter(|e| e.is_idempotent())
        .collect();
    let order = idempotent_order(&idems).unwrap();
    assert!(order.is_lattice());
    let one = idempotent_order(&[Endo::identity(b2.clone())]).unwrap();
    assert_eq!(one.len(), 1);
    let bad = Endo::new(b2, vec![0, 0, 1, 3]).unwrap();
    assert!(matches!(
        idempotent_order(&[bad]),
        Err(Error::NotIdempotent)
    ));
}

#[test]
fn joins_on_s3() {
    let g = bruhat_group(3).unwrap();
    let (s, t) = (GenSet::from_indices([1]), GenSet::from_indices([2]));
    assert_eq!(join_idempotents(&g.p(s), &g.q(s)).unwrap(), g.qp(s, s));
    assert_eq!(
        join_idempotents(&g.p(s), &g.p(t)).unwrap(),
        g.p(GenSet::full(2))
    );
    assert_eq!(join_idempotents(&g.q(t), &g.p(s)).unwrap(), g.qp(t, s));
}

#[test]
fn galois_examples() {
    let b2 = Arc::new(boolean_lattice(2).unwrap());
    assert!(galois_verify(&Endo::identity(b2)).unwrap());
    let g = bruhat_group(3).unwrap();
    assert!(galois_verify(&g.p(GenSet::from_indices([2]))).unwrap());
    let inv = involution_poset(4).unwrap();
    assert!(galois_verify(&inv.hat_projection(GenSet::from_indices([1])).unwrap()).unwrap());
    let c3 = Arc::new(chain(3).unwrap());
    let not_idem = Endo::new(c3, vec![0, 0, 1]).unwrap();
    assert!(matches!(galois_check(&not_idem), Err(Error::NotIdempotent)));
}

#[test]
fn galois_holds_for_every_idempotent_of_or() {
    for p in [
        boolean_lattice(2).unwrap(),
        product(&[&chain(2).unwrap(), &chain(3).unwrap()]).unwrap(),
        divisor_poset(12).unwrap(),
    ] {
        let p = Arc::new(p);
        for e in regressive_endos(&p, 1 << 20).unwrap() {
            if e.is_idempotent() {
                assert!(galois_check(&e).unwrap().holds(), "{:?}", e.table());
            }
        }
    }
}

#[test]
fn endo_json_round_trip() {
    let g = bruhat_group(3).unwrap();
    let e = g.p(GenSet::from_indices([1]));
    let j = EndoJson::from_endo(&e, PosetRef::Builtin("bruhat:3".into()));
    let s = serde_json::to_string(&j).unwrap();
    let back = EndoJson::parse(&s).unwrap().to_endo().unwrap();
    assert_eq!(back.table(), e.table());
    let inline = EndoJson::from_endo(&e, PosetRef::Inline(g.poset().to_json()));
    let back = EndoJson::parse(&serde_json::to_string(&inline).unwrap())
        .unwrap()
        .to_endo()
        .unwrap();
    assert_eq!(back.table(), e.table());
    assert!(matches!(
        EndoJson::parse("{\"poset\": 3}"),
        Err(Error::Parse(_))
    ));
}

fn invol_closure() -> (Vec<Endo>, MonoidClosure) {
    let inv = involution_poset(4).unwrap();
    let gens = special_generators(inv.poset()).unwrap();
    let m = MonoidClosure::generate(inv.poset().clone(), &gens).unwrap();
    (gens, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_independent_of_generator_order(perm in Just((0..7usize).collect::<Vec<_>>()).prop_shuffle()) {
        let (gens, m) = invol_closure();
        let shuffled: Vec<Endo> = perm.iter().map(|&i| gens[i].clone()).collect();
        let m2 = MonoidClosure::generate(m.poset().clone(), &shuffled).unwrap();
        prop_assert_eq!(m.len(), m2.len());
        for i in 0..m.len() {
            prop_assert_eq!(m.table(i), m2.table(i));
        }
    }

    #[test]
    fn fixed_points_of_products(word in prop::collection::vec(0usize..7, 1..6)) {
        let (gens, _) = invol_closure();
        let mut f = Endo::identity(gens[0].poset().clone());
        for &g in &word {
            f = f.compose(&gens[g]).unwrap();
        }
        for v in 0..f.poset().len() {
            prop_assert_eq!(f.fixes(v), word.iter().all(|&g| gens[g].fixes(v)));
        }
        if f.is_idempotent() {
            let mut meet = f.poset().order().up_set(f.poset().bottom()).clone();
            for &g in &word {
                meet.intersect_with(&gens[g].image_set());
            }
            prop_assert_eq!(f.image_set(), meet);
        }
    }

    #[test]
    fn absorption_is_a_partial_order(a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let (_, m) = invol_closure();
        let idems = m.idempotents();
        let (p, q, r) = (&idems[a % idems.len()], &idems[b % idems.len()], &idems[c % idems.len()]);
        prop_assert!(absorbs(p, p));
        if absorbs(p, q) && absorbs(q, p) {
            prop_assert_eq!(p, q);
        }
        if absorbs(p, q) && absorbs(q, r) {
            prop_assert!(absorbs(p, r));
        }
        if absorbs(p, q) {
            prop_assert!(q.image_set().is_subset(&p.image_set()));
        }
    }
}

#[test]
fn word_lookup_is_consistent() {
    let (_, m) = invol_closure();
    let mut seen = HashMap::new();
    for i in 0..m.len() {
        assert!(seen.insert(m.table(i).to_vec(), i).is_none());
        assert_eq!(m.position(m.table(i)), Some(i));
    }
    assert_eq!(
        m.table(m.identity_index()),
        (0..10u32).collect::<Vec<_>>().as_slice()
    );
}
