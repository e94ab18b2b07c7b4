use partyhecke::combinatorics::{beta, enumerate_partitions, enumerate_permutations, Arc};
use partyhecke::{IntegerPartition, Permutation, SetPartition};
use proptest::prelude::*;

fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
    let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
    SetPartition::from_blocks(n, &blocks).unwrap()
}

#[test]
fn joins() {
    let j = sp(3, &[&[1, 2], &[3]]).join(&sp(3, &[&[1], &[2, 3]])).unwrap();
    assert_eq!(j, SetPartition::full(3));
    let i = SetPartition::singletons(4);
    assert_eq!(i.join(&i).unwrap(), i);
    let j = sp(4, &[&[1, 3], &[2], &[4]]).join(&sp(4, &[&[1], &[2, 4], &[3]])).unwrap();
    assert_eq!(j, sp(4, &[&[1, 3], &[2, 4]]));
}

#[test]
fn standard_arcs() {
    let f = sp(5, &[&[1, 3, 5], &[2, 4]]);
    let mut arcs = f.standard_arcs();
    arcs.sort();
    assert_eq!(arcs, vec![Arc::new(1, 3), Arc::new(2, 4), Arc::new(3, 5)]);
    assert!(SetPartition::singletons(4).standard_arcs().is_empty());
    assert_eq!(SetPartition::full(6).standard_arcs().len(), 5);
    assert_eq!(SetPartition::pair(7, 2, 7).unwrap().normal_word(), vec![Arc::new(2, 7)]);
}

#[test]
fn shared_arcs() {
    let f12 = SetPartition::pair(3, 1, 2).unwrap();
    assert_eq!(beta(&f12, &f12).unwrap(), 1);
    assert_eq!(beta(&SetPartition::singletons(3), &f12).unwrap(), 0);
    assert_eq!(beta(&SetPartition::full(3), &f12).unwrap(), 1);
}

#[test]
fn permutation_action_on_partitions() {
    let s1 = Permutation::elementary(3, 1).unwrap();
    let f = sp(3, &[&[1, 2], &[3]]);
    assert_eq!(f.act(&s1).unwrap(), f);
    assert_eq!(sp(3, &[&[1, 3], &[2]]).act(&s1).unwrap(), sp(3, &[&[2, 3], &[1]]));
    assert_eq!(f.act(&Permutation::identity(3)).unwrap(), f);
}

#[test]
fn lengths_and_inversions() {
    assert_eq!(Permutation::identity(3).length_and_inversions(), (0, vec![]));
    assert_eq!(Permutation::elementary(2, 1).unwrap().length_and_inversions(), (1, vec![(1, 2)]));
    let (l, mut inv) = Permutation::longest(3).length_and_inversions();
    inv.sort();
    assert_eq!((l, inv), (3, vec![(1, 2), (1, 3), (2, 3)]));
}

#[test]
fn transpositions_and_block_swaps() {
    assert_eq!(Permutation::transposition(1, 3, 3).unwrap().images(), vec![3, 2, 1]);
    let s = Permutation::s_ab(&[1, 2], &[3, 4], 4).unwrap();
    assert_eq!(s.images(), vec![3, 4, 1, 2]);
    assert!(s.compose(&s).unwrap().is_identity());
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_partitions(3).unwrap().count(), 5);
    assert_eq!(enumerate_permutations(3).unwrap().count(), 6);
    assert_eq!(enumerate_partitions(5).unwrap().count(), 52);
    assert!(enumerate_partitions(40).is_err());
}

#[test]
fn shapes() {
    assert_eq!(SetPartition::singletons(3).shape().to_string(), "(1,1,1)");
    assert_eq!(SetPartition::pair(3, 1, 2).unwrap().shape().to_string(), "(2,1)");
    assert_eq!(SetPartition::full(4).shape().to_string(), "(4)");
    assert_eq!(IntegerPartition::all(5).len(), 7);
}

#[test]
fn text_round_trip() {
    let f: SetPartition = "1 3|2".parse().unwrap();
    assert_eq!(f, sp(3, &[&[1, 3], &[2]]));
    assert_eq!(f.to_string().parse::<SetPartition>().unwrap(), f);
    let s: Permutation = "3 1 2".parse().unwrap();
    assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
    assert!("1 1 2".parse::<Permutation>().is_err());
}

fn any_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn reduced_words_have_length_many_letters(s in any_perm(6)) {
        let w = s.reduced_word();
        prop_assert_eq!(w.len(), s.length());
        prop_assert_eq!(Permutation::from_word(6, &w).unwrap(), s);
    }

    #[test]
    fn action_is_a_left_action(s in any_perm(5), t in any_perm(5), seed in 0usize..52) {
        let f = enumerate_partitions(5).unwrap().nth(seed).unwrap();
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(f.act(&st).unwrap(), f.act(&t).unwrap().act(&s).unwrap());
    }

    #[test]
    fn join_is_a_lattice_operation(x in 0usize..52, y in 0usize..52) {
        let all: Vec<_> = enumerate_partitions(5).unwrap().collect();
        let (f, g) = (&all[x], &all[y]);
        let j = f.join(g).unwrap();
        prop_assert!(f.refines(&j) && g.refines(&j));
        prop_assert_eq!(j.clone(), g.join(f).unwrap());
        prop_assert_eq!(j.join(f).unwrap(), j);
    }
}
