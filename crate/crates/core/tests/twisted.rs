use partyhecke::combinatorics::{beta, join_defect};
use partyhecke::diagram::all_diagrams;
use partyhecke::party::coprime_pairs;
use partyhecke::twisted::{
    cocycle_check_exhaustive, party_f, party_s, tl_t, twisted_multiply, verify_presentation, TwistKind,
    TwistedElement, TwistedInstance, Twisting,
};
use partyhecke::{Diagram, PartyElement, Permutation, Scalar, SetPartition};
use proptest::prelude::*;

fn delta() -> Scalar {
    "q^2".parse().unwrap()
}

#[test]
fn squares_give_delta() {
    let beta_t = Twisting::new(TwistKind::Beta, delta()).unwrap();
    let f = party_f(3, 2).unwrap();
    assert_eq!(twisted_multiply(&f, &f, &beta_t).unwrap(), f.scale(&delta()));
    let alpha_t = Twisting::new(TwistKind::Alpha, delta()).unwrap();
    let t = tl_t(3, 1).unwrap();
    assert_eq!(twisted_multiply(&t, &t, &alpha_t).unwrap(), t.scale(&delta()));
    assert!(Twisting::new(TwistKind::Beta, Scalar::zero()).is_err());
}

#[test]
fn permutations_multiply_untwisted() {
    let t = Twisting::new(TwistKind::Beta, delta()).unwrap();
    for s in [Permutation::elementary(3, 1).unwrap(), "2 3 1".parse().unwrap()] {
        for u in [Permutation::elementary(3, 2).unwrap(), "3 2 1".parse().unwrap()] {
            let x = TwistedElement::basis(PartyElement::from_permutation(s.clone()));
            let y = TwistedElement::basis(PartyElement::from_permutation(u.clone()));
            let want = TwistedElement::basis(PartyElement::from_permutation(s.compose(&u).unwrap()));
            assert_eq!(twisted_multiply(&x, &y, &t).unwrap(), want);
        }
    }
}

#[test]
fn presentations() {
    for inst in [TwistedInstance::Party, TwistedInstance::SetPartitions, TwistedInstance::TemperleyLieb] {
        let r = verify_presentation(inst, 3, &delta()).unwrap();
        assert!(r.all_pass(), "{inst:?}: {:?}", r.failures());
    }
    let t = Twisting::new(TwistKind::Beta, delta()).unwrap();
    let s1 = party_s(3, 1).unwrap();
    let f1 = party_f(3, 1).unwrap();
    assert_eq!(twisted_multiply(&s1, &f1, &t).unwrap(), f1);
}

#[test]
fn cocycles_exhaustive() {
    let r = cocycle_check_exhaustive(&coprime_pairs(3).unwrap(), TwistKind::Beta).unwrap();
    assert_eq!((r.triples, r.failures), (4096, 0));
    let r = cocycle_check_exhaustive(&all_diagrams(2).unwrap(), TwistKind::Alpha).unwrap();
    assert_eq!((r.triples, r.failures), (3375, 0));
}

#[test]
fn shared_arc_count_is_not_a_cocycle() {
    // Counting shared standard arcs breaks the cocycle identity, which is
    // why the twisting uses the join defect instead.
    let f12 = SetPartition::pair(3, 1, 2).unwrap();
    let f23 = SetPartition::pair(3, 2, 3).unwrap();
    let f13 = SetPartition::pair(3, 1, 3).unwrap();
    let j = |x: &SetPartition, y: &SetPartition| x.join(y).unwrap();
    let lhs = beta(&f12, &f23).unwrap() + beta(&j(&f12, &f23), &f13).unwrap();
    let rhs = beta(&f12, &j(&f23, &f13)).unwrap() + beta(&f23, &f13).unwrap();
    assert_ne!(lhs, rhs);
    let lhs = join_defect(&f12, &f23).unwrap() + join_defect(&j(&f12, &f23), &f13).unwrap();
    let rhs = join_defect(&f12, &j(&f23, &f13)).unwrap() + join_defect(&f23, &f13).unwrap();
    assert_eq!(lhs, rhs);
    // Both agree on the generators' squares.
    assert_eq!(beta(&f12, &f12).unwrap(), 1);
    assert_eq!(join_defect(&f12, &f12).unwrap(), 1);
}

#[test]
fn identity_is_untwisted() {
    let one = PartyElement::identity(3);
    let dia = Diagram::identity(2);
    for g in coprime_pairs(3).unwrap() {
        use partyhecke::twisted::Carrier;
        assert_eq!(one.exponent(&g, TwistKind::Beta).unwrap(), 0);
        assert_eq!(g.exponent(&one, TwistKind::Beta).unwrap(), 0);
    }
    for d in all_diagrams(2).unwrap() {
        use partyhecke::twisted::Carrier;
        assert_eq!(dia.exponent(&d, TwistKind::Alpha).unwrap(), 0);
    }
}

proptest! {
    #[test]
    fn twisted_party_algebra_is_associative(i in 0usize..131, j in 0usize..131, k in 0usize..131, c in 1i64..4) {
        let all = coprime_pairs(4).unwrap();
        let t = Twisting::new(TwistKind::Beta, delta()).unwrap();
        let x = TwistedElement::basis(all[i].clone()).add(&TwistedElement::term(all[k].clone(), Scalar::from(c)));
        let y = TwistedElement::basis(all[j].clone());
        let z = TwistedElement::basis(all[k].clone()).add(&TwistedElement::basis(all[i].clone()));
        let l = twisted_multiply(&twisted_multiply(&x, &y, &t).unwrap(), &z, &t).unwrap();
        let r = twisted_multiply(&x, &twisted_multiply(&y, &z, &t).unwrap(), &t).unwrap();
        prop_assert_eq!(l, r);
    }
}
