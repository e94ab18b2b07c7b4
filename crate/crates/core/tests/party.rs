use partyhecke::diagram::{closure, party_generators};
use partyhecke::party::{
    coprime_pairs, green_classes, maximal_subgroup_party, maximal_subgroup_tied, party_normalize,
    party_subgroup_order_formula, tied_elements, tied_subgroup_order_formula, GreenRelation, MonoidKind,
};
use partyhecke::{Diagram, PartyElement, Permutation, SetPartition, TiedSymElement};
use proptest::prelude::*;

fn pe(text: &str) -> PartyElement {
    text.parse().unwrap()
}

fn sp(text: &str) -> SetPartition {
    text.parse().unwrap()
}

fn perm(text: &str) -> Permutation {
    text.parse().unwrap()
}

/// Product computed by stacking diagrams, independent of the normal form.
fn via_diagrams(x: &PartyElement, y: &PartyElement) -> PartyElement {
    let d = x.to_diagram().concat(&y.to_diagram()).unwrap();
    assert_eq!(d.alpha, 0, "uniform diagrams never close loops");
    PartyElement::from_diagram(&d.diagram).unwrap()
}

#[test]
fn normal_form_examples() {
    let f12 = SetPartition::pair(3, 1, 2).unwrap();
    let s1 = Permutation::elementary(3, 1).unwrap();
    let g = party_normalize(&f12, &s1).unwrap();
    assert_eq!((g.partition(), g.perm()), (&f12, &Permutation::identity(3)));

    let s = perm("2 3 1");
    let g = party_normalize(&SetPartition::singletons(3), &s).unwrap();
    assert_eq!(g.perm(), &s);

    // f_{1,3} s_2 s_1
    let f13 = SetPartition::pair(3, 1, 3).unwrap();
    let s2s1 = Permutation::from_word(3, &[2, 1]).unwrap();
    let g = party_normalize(&f13, &s2s1).unwrap();
    assert!(g.perm().length() < s2s1.length());
    let oracle = via_diagrams(&PartyElement::from_partition(f13), &PartyElement::from_permutation(s2s1));
    assert_eq!(g, oracle);
}

#[test]
fn products_match_diagram_stacking_exhaustively() {
    for n in 2..=3 {
        let all = coprime_pairs(n).unwrap();
        for x in &all {
            for y in &all {
                assert_eq!(x.multiply(y).unwrap(), via_diagrams(x, y), "{x} * {y}");
            }
        }
    }
}

#[test]
fn monoid_laws() {
    let f12 = PartyElement::from_partition(SetPartition::pair(3, 1, 2).unwrap());
    assert_eq!(f12.multiply(&f12).unwrap(), f12);
    let s = PartyElement::from_permutation(perm("2 3 1"));
    let t = PartyElement::from_permutation(perm("3 2 1"));
    assert_eq!(s.multiply(&t).unwrap(), PartyElement::from_permutation(perm("2 3 1").compose(&perm("3 2 1")).unwrap()));
    let one = PartyElement::identity(3);
    for g in coprime_pairs(3).unwrap() {
        assert_eq!(g.multiply(&one).unwrap(), g);
        assert_eq!(one.multiply(&g).unwrap(), g);
    }
}

#[test]
fn diagram_round_trip_matches_closure() {
    let mut from_pairs: Vec<Diagram> = coprime_pairs(3).unwrap().iter().map(|g| g.to_diagram()).collect();
    let mut from_closure = closure(&party_generators(3), 1000).unwrap();
    from_pairs.sort_by_key(|d| d.to_string());
    from_closure.sort_by_key(|d| d.to_string());
    assert_eq!(from_pairs, from_closure);
    for g in coprime_pairs(4).unwrap() {
        assert_eq!(PartyElement::from_diagram(&g.to_diagram()).unwrap(), g);
    }
    let f12 = PartyElement::from_partition(SetPartition::pair(3, 1, 2).unwrap());
    assert_eq!(f12.to_diagram().to_string(), "1 2 4 5|3 6");
    assert_eq!(PartyElement::identity(3).to_diagram(), Diagram::identity(3));
}

#[test]
fn inverses() {
    let e = pe("[1 2|3][1 2 3]");
    assert_eq!(e.inverse(), e);
    let s = PartyElement::from_permutation(perm("2 3 1"));
    assert_eq!(s.inverse(), PartyElement::from_permutation(perm("2 3 1").inverse()));
    // An element of P_5 with blocks of mixed sizes.
    let g = pe("[1 4|2 5|3][2 1 5 4 3]");
    let gi = g.inverse();
    assert_eq!(gi.to_diagram(), g.to_diagram().flip());
    assert_eq!(gi.inverse(), g);
    for g in coprime_pairs(4).unwrap() {
        let gi = g.inverse();
        assert_eq!(g.multiply(&gi).unwrap().multiply(&g).unwrap(), g);
        assert_eq!(gi.multiply(&g).unwrap().multiply(&gi).unwrap(), gi);
    }
}

#[test]
fn tied_monoid_basics() {
    let e1 = TiedSymElement::new(SetPartition::pair(3, 1, 2).unwrap(), Permutation::identity(3)).unwrap();
    assert_eq!(e1.multiply(&e1).unwrap(), e1);
    let s = TiedSymElement::new(SetPartition::singletons(3), perm("3 1 2")).unwrap();
    let es = e1.multiply(&s).unwrap();
    assert_eq!(es, TiedSymElement::new(SetPartition::pair(3, 1, 2).unwrap(), perm("3 1 2")).unwrap());
    assert_eq!(tied_elements(3).unwrap().len(), 30);
}

#[test]
fn tied_to_party_is_a_homomorphism() {
    let all = tied_elements(3).unwrap();
    for x in &all {
        for y in &all {
            let lhs = x.multiply(y).unwrap().to_party();
            let rhs = x.to_party().multiply(&y.to_party()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn shapes_of_party_elements() {
    assert_eq!(PartyElement::identity(3).shape().to_string(), "(1,1,1)");
    assert_eq!(pe("[1 2|3][1 2 3]").shape().to_string(), "(2,1)");
    assert_eq!(pe("[1 2 3][1 2 3]").shape().to_string(), "(3)");
}

#[test]
fn greens_relations() {
    assert_eq!(green_classes(MonoidKind::Party, 3, GreenRelation::J).unwrap().len(), 3);
    assert_eq!(green_classes(MonoidKind::Party, 3, GreenRelation::L).unwrap().len(), 5);
    assert_eq!(green_classes(MonoidKind::Tied, 3, GreenRelation::J).unwrap().len(), 3);
    assert!(green_classes(MonoidKind::Tied, 9, GreenRelation::J).is_err());
}

#[test]
fn maximal_subgroups() {
    let e = sp("1 2|3 4");
    assert_eq!(maximal_subgroup_tied(&e).unwrap().len(), 8);
    assert_eq!(tied_subgroup_order_formula(&e), 8);
    assert_eq!(maximal_subgroup_party(&e).unwrap().len(), 2);
    assert_eq!(party_subgroup_order_formula(&e), 2);
    // Three blocks of size 2 and two of size 3.
    let big = sp("1 2|3 4|5 6|7 8 9|10 11 12");
    assert_eq!(party_subgroup_order_formula(&big), 12);
    assert_eq!(tied_subgroup_order_formula(&big), 8 * 36 * 12);
}

#[test]
fn text_forms() {
    let g = pe("[1 3|2][3 2 1]");
    assert_eq!(g.to_string(), "[1 3|2][1 2 3]");
    assert!("[1 2][1 2 3]".parse::<PartyElement>().is_err());
    assert!(PartyElement::new(SetPartition::pair(2, 1, 2).unwrap(), perm("2 1")).is_err());
}

proptest! {
    #[test]
    fn associativity_at_n4(i in 0usize..131, j in 0usize..131, k in 0usize..131) {
        let all = coprime_pairs(4).unwrap();
        let (x, y, z) = (&all[i], &all[j], &all[k]);
        prop_assert_eq!(
            x.multiply(y).unwrap().multiply(z).unwrap(),
            x.multiply(&y.multiply(z).unwrap()).unwrap()
        );
    }

    #[test]
    fn stacking_oracle_at_n5(i in 0usize..1496, j in 0usize..1496) {
        let all = coprime_pairs(5).unwrap();
        prop_assert_eq!(all[i].multiply(&all[j]).unwrap(), via_diagrams(&all[i], &all[j]));
    }
}
