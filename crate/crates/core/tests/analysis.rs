use std::sync::Arc;

use matchmonoid::analysis::{
    analyze, interval_retract, is_projection, mobius_image, projection_witness,
    verify_structure_theorems, Check, ImageMobius, RetractOutcome,
};
use matchmonoid::coxeter::{bruhat_group, double_coset_top, involution_poset, GenSet, Permutation};
use matchmonoid::endo::regressive_endos;
use matchmonoid::matchings::{
    enumerate_special_matchings, special_generators, special_monoid, special_partial_monoid,
};
use matchmonoid::poset::{boolean_lattice, chain, divisor_poset, product};
use matchmonoid::{Endo, Error, MonoidClosure};
use num_bigint::BigInt;
use proptest::prelude::*;

fn perm(s: &str) -> Permutation {
    Permutation::parse(s).unwrap()
}

#[test]
fn identity_report() {
    let g = bruhat_group(3).unwrap();
    let m = special_monoid(g.poset()).unwrap();
    let r = analyze(&Endo::identity(g.poset().clone()), Some(&m)).unwrap();
    assert_eq!(r.image, (0..6).collect::<Vec<_>>());
    assert!(r.fibers.iter().all(|f| f.members == vec![f.point]));
    assert!(r.is_projection);
    assert_eq!(r.is_special_idempotent, Some(true));
    assert!(r.retract_top.is_some());
    let f = &r.theorem_flags;
    for c in [
        &f.image_graded,
        &f.complement_graded,
        &f.partition_ok,
        &f.atoms_ok,
        &f.complement_lemma,
    ] {
        assert_eq!(c, &Check::Pass);
    }
}

#[test]
fn divisor_matching_idempotent() {
    let d12 = Arc::new(divisor_poset(12).unwrap());
    let m = &enumerate_special_matchings(&d12)[0];
    let r = analyze(&m.idempotent().unwrap(), None).unwrap();
    assert!(r.fibers.iter().all(|f| f.members.len() == 2));
    assert!(r.is_projection);
    assert_eq!(r.is_special_idempotent, None);
    // not Eulerian: gradedness is observed, not asserted
    assert!(matches!(
        r.theorem_flags.image_graded,
        Check::Unasserted { .. }
    ));
}

#[test]
fn non_projection_on_s3() {
    let g = bruhat_group(3).unwrap();
    let e = g.qp(GenSet::from_indices([2]), GenSet::from_indices([1]));
    assert!(!is_projection(&e).unwrap());
    let w = projection_witness(&e).unwrap().unwrap();
    let labels: Vec<String> = w.set.iter().map(|&x| g.perm(x).to_string()).collect();
    assert_eq!(labels, vec!["123", "132", "213"]);
    assert_eq!(g.perm(w.x), &perm("123"));
    assert_eq!(g.perm(w.y), &perm("231"));
    let r = analyze(&e, None).unwrap();
    assert!(!r.is_projection);
}

#[test]
fn parabolic_fibers_are_cosets() {
    let g = bruhat_group(3).unwrap();
    let s = GenSet::from_indices([1]);
    let p = g.p(s);
    let RetractOutcome::Retract { tops } = interval_retract(&p).unwrap() else {
        panic!("P^s is a retract");
    };
    for (v, top) in tops {
        assert_eq!(g.perm(top), &g.perm(v).right_mul_simple(1));
        assert_eq!(p.fiber(v).count(), 2);
    }
    let g4 = bruhat_group(4).unwrap();
    let (i, j) = (GenSet::from_indices([1]), GenSet::from_indices([3]));
    let RetractOutcome::Retract { tops } = interval_retract(&g4.qp(i, j)).unwrap() else {
        panic!("double projection is a retract");
    };
    for (v, top) in tops {
        assert_eq!(g4.perm(top), &double_coset_top(g4.perm(v), i, j));
    }
}

#[test]
fn non_retract_idempotent() {
    // general idempotents of Or(K) need not be interval retracts
    let p = Arc::new(product(&[&chain(2).unwrap(), &chain(3).unwrap()]).unwrap());
    let found = regressive_endos(&p, 1 << 20)
        .unwrap()
        .into_iter()
        .filter(|e| e.is_idempotent())
        .any(|e| !interval_retract(&e).unwrap().is_retract());
    assert!(found);
}

#[test]
fn mobius_of_quotient() {
    let g = bruhat_group(3).unwrap();
    let pt = g.p(GenSet::from_indices([2]));
    let image = pt.image_set().to_vec();
    assert_eq!(image.len(), 3);
    let top = *image.last().unwrap();
    // W^{t} is the chain e < s < ts
    assert_eq!(mobius_image(&pt, 0, top).unwrap(), BigInt::from(0));
    assert_eq!(mobius_image(&pt, 0, image[1]).unwrap(), BigInt::from(-1));
    assert_eq!(mobius_image(&pt, top, top).unwrap(), BigInt::from(1));
    let not_in = (0..6).find(|x| !image.contains(x)).unwrap();
    assert!(matches!(
        mobius_image(&pt, 0, not_in),
        Err(Error::NotInImage { .. })
    ));
    assert!(ImageMobius::new(&pt).unwrap().rule_applies());
}

#[test]
fn double_quotient_mobius_on_s4() {
    let g = bruhat_group(4).unwrap();
    for ib in 0..8u32 {
        for jb in 0..8u32 {
            let e = g.qp(GenSet::from_bits(ib << 1), GenSet::from_bits(jb << 1));
            let im = ImageMobius::new(&e).unwrap();
            assert_eq!(im.rule_applies(), is_projection(&e).unwrap());
            im.check_all().unwrap();
        }
    }
}

#[test]
fn parabolic_projections_have_graded_images_and_complements() {
    let g = bruhat_group(4).unwrap();
    let m = special_monoid(g.poset()).unwrap();
    for jb in 0..8u32 {
        let j = GenSet::from_bits(jb << 1);
        for e in [g.p(j), g.q(j)] {
            let f = verify_structure_theorems(&e, &m).unwrap();
            assert_eq!(f.image_graded, Check::Pass, "J={j}");
            assert_eq!(f.complement_graded, Check::Pass, "J={j}");
            assert_eq!(f.atoms_ok, Check::Pass, "J={j}");
        }
    }
}

#[test]
fn twisted_projections_on_involutions() {
    let inv = involution_poset(4).unwrap();
    let m = special_monoid(inv.poset()).unwrap();
    for s in 1..4 {
        let e = inv.twisted_matching(s).unwrap().idempotent().unwrap();
        let f = verify_structure_theorems(&e, &m).unwrap();
        assert_eq!(f.image_graded, Check::Pass);
        assert_eq!(f.complement_graded, Check::Pass);
    }
}

#[test]
fn complement_lemma_for_every_idempotent_of_or() {
    for p in [
        boolean_lattice(2).unwrap(),
        boolean_lattice(3).unwrap(),
        product(&[&chain(2).unwrap(), &chain(3).unwrap()]).unwrap(),
    ] {
        let p = Arc::new(p);
        let gens = special_generators(&p).unwrap();
        let m = MonoidClosure::generate(p.clone(), &gens).unwrap();
        for e in regressive_endos(&p, 1 << 20).unwrap() {
            if e.is_idempotent() {
                let f = verify_structure_theorems(&e, &m).unwrap();
                assert!(!f.complement_lemma.is_fail(), "{:?}", e.table());
                assert!(!f.any_failure(), "{:?}: {f:?}", e.table());
            }
        }
    }
}

#[test]
fn not_idempotent_is_rejected() {
    let c3 = Arc::new(chain(3).unwrap());
    let f = Endo::new(c3, vec![0, 0, 1]).unwrap();
    assert!(matches!(analyze(&f, None), Err(Error::NotIdempotent)));
    assert!(matches!(is_projection(&f), Err(Error::NotIdempotent)));
}

fn b3_partial() -> MonoidClosure {
    special_partial_monoid(&Arc::new(boolean_lattice(3).unwrap())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn special_partial_idempotents_are_retracts(i in any::<usize>()) {
        let m = b3_partial();
        let idems = m.idempotent_indices();
        let e = m.endo(idems[i % idems.len()]);
        let RetractOutcome::Retract { tops } = interval_retract(&e).unwrap() else {
            return Err(TestCaseError::fail("special partial idempotent with a non-interval fiber"));
        };
        let total: usize = tops.iter().map(|&(v, t)| e.poset().interval(v, t).count()).sum();
        prop_assert_eq!(total, e.poset().len());
        let f = verify_structure_theorems(&e, &m).unwrap();
        prop_assert!(!f.any_failure());
    }
}
