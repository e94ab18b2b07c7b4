//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary so the summary is printed on every `cargo test`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use partyhecke::combinatorics::{enumerate_partitions, enumerate_permutations, IntegerPartition};
use partyhecke::diagram::{all_diagrams, brauer_generators, closure, party_generators, tonal2_generators};
use partyhecke::field::{PrimeField, Rationals, Specialization, DEFAULT_PRIMES};
use partyhecke::hecke::{verify_suite, Suite};
use partyhecke::hecke::{PartyHecke, SimpleGen};
use partyhecke::party::{
    coprime_pairs, maximal_subgroup_party, maximal_subgroup_tied, party_monoid, party_normalize,
    party_subgroup_order_formula, strip_with, tied_monoid, tied_subgroup_order_formula, GreenRelation,
};
use partyhecke::quotient::{
    quotient_dimension, random_rational_points, semisimplicity_certificate, verify_quotient_consequences, Ideal,
};
use partyhecke::tensor::{faithfulness_rank, verify_matrix_relations, Convention, TensorSpace};
use partyhecke::twisted::{cocycle_check_exhaustive, cocycle_check_random, TwistKind};
use partyhecke::Permutation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(bool, String), String>;

const CAP: usize = 1 << 20;

fn bell(n: usize) -> usize {
    // Bell triangle.
    let mut row = vec![1usize];
    for _ in 1..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    *row.last().unwrap()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn double_factorial_odd(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

fn prime_point(k: usize, rng: &mut ChaCha8Rng) -> Specialization<PrimeField> {
    Specialization::random_prime(PrimeField::new(DEFAULT_PRIMES[k]).unwrap(), rng)
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn criterion1() -> Outcome {
    let want = [3, 16, 131, 1496];
    let mut by_closure = Vec::new();
    let mut by_pairs = Vec::new();
    for n in 2..=5 {
        by_closure.push(closure(&party_generators(n), CAP).map_err(e)?.len());
        by_pairs.push(coprime_pairs(n).map_err(e)?.len());
    }
    let ok = by_closure == want && by_pairs == want;
    Ok((ok, format!("closure {by_closure:?}, coprime pairs {by_pairs:?}")))
}

fn criterion2() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let bells: Vec<usize> = (2..=5).map(|n| enumerate_partitions(n).unwrap().count()).collect();
    ok &= bells == (2..=5).map(bell).collect::<Vec<_>>() && bells == [2, 5, 15, 52];
    notes.push(format!("Bell {bells:?}"));
    let tied: Vec<usize> = (2..=4).map(|n| tied_monoid(n).unwrap().len()).collect();
    ok &= tied == (2..=4).map(|n| bell(n) * factorial(n)).collect::<Vec<_>>();
    notes.push(format!("tied {tied:?}"));
    let mut tonal = Vec::new();
    let mut brauer = Vec::new();
    for n in 2..=4 {
        tonal.push(closure(&tonal2_generators(n), CAP).map_err(e)?.len());
        brauer.push(closure(&brauer_generators(n), CAP).map_err(e)?.len());
    }
    ok &= tonal == [4, 31, 379];
    ok &= brauer == (2..=4).map(double_factorial_odd).collect::<Vec<_>>() && brauer == [3, 15, 105];
    notes.push(format!("2-tonal {tonal:?}, Brauer {brauer:?}"));
    Ok((ok, notes.join(", ")))
}

fn criterion3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 2..=5 {
        let pairs = coprime_pairs(n).map_err(e)?.len();
        let monoid = closure(&party_generators(n), CAP).map_err(e)?.len();
        ok &= pairs == monoid;
    }
    for (n, want) in [(3usize, 16usize), (4, 131)] {
        let mut ranks = Vec::new();
        for k in 0..2 {
            let space = TensorSpace::new(n, 2, prime_point(k, &mut rng), Convention::Consistent).map_err(e)?;
            ranks.push(faithfulness_rank(&space).map_err(e)?);
        }
        ok &= ranks.iter().all(|&r| r == want);
        notes.push(format!("rank n={n} m=2 {ranks:?}"));
    }
    Ok((ok, format!("basis sizes match monoid, {}", notes.join(", "))))
}

fn criterion4() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for suite in Suite::ALL {
        let r = verify_suite(suite, 3).map_err(e)?;
        let counted = r.checks.iter().filter(|c| !c.diagnostic).count();
        if !r.all_pass() {
            ok = false;
            notes.push(format!("{} fails {:?}", suite.name(), r.failures().iter().map(|c| &c.name).collect::<Vec<_>>()));
        } else {
            notes.push(format!("{} {counted}", suite.name()));
        }
    }
    let space = TensorSpace::symbolic(3, 2, Convention::Consistent).map_err(e)?;
    let r = verify_matrix_relations(&space).map_err(e)?;
    ok &= r.all_pass();
    notes.push(format!("tensor {}", r.checks.len()));
    Ok((ok, format!("checks passed per suite: {}", notes.join(", "))))
}

fn criterion5() -> Outcome {
    let ph = PartyHecke::new(3, Specialization::<Rationals>::integers(1, 1).map_err(e)?);
    let basis = ph.basis();
    let one = BigRational::from_integer(1.into());
    let mut products = 0;
    let mut mismatches = 0;
    for x in &basis {
        for y in &basis {
            let got = ph.basis_product(x, y);
            let xy = partyhecke::PartyElement::new(x.0.clone(), x.1.clone())
                .and_then(|a| a.multiply(&partyhecke::PartyElement::new(y.0.clone(), y.1.clone())?))
                .map_err(e)?;
            let want = vec![((xy.partition().clone(), xy.perm().clone()), one.clone())];
            let got: Vec<_> = got.into_iter().filter(|(_, c)| *c != BigRational::from_integer(0.into())).collect();
            products += 1;
            if got != want {
                mismatches += 1;
            }
        }
    }
    Ok((mismatches == 0 && products == 256, format!("{products} products, {mismatches} mismatches")))
}

/// A uniformly random reduced word of `u`, built from random right descents.
fn random_reduced_word(u: &Permutation, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut cur = u.clone();
    let mut word = Vec::new();
    loop {
        let desc: Vec<usize> = (1..cur.n()).filter(|&k| cur.has_right_descent(k)).collect();
        if desc.is_empty() {
            break;
        }
        let k = desc[rng.gen_range(0..desc.len())];
        word.push(k);
        cur = cur.mul_elementary_right(k);
    }
    word.reverse();
    word
}

fn criterion6() -> Outcome {
    let ph = PartyHecke::symbolic(3);
    let basis = ph.basis();
    let elems: Vec<_> = basis
        .iter()
        .map(|(m, u)| ph.pair(m, u, &partyhecke::Scalar::one()))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    let mut table = BTreeMap::new();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            table.insert((i, j), ph.multiply(x, y).map_err(e)?);
        }
    }
    let mut assoc_fail = 0;
    let mut triples = 0;
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            for k in 0..elems.len() {
                let left = ph.multiply(&table[&(i, j)], &elems[k]).map_err(e)?;
                let right = ph.multiply(&elems[i], &table[&(j, k)]).map_err(e)?;
                triples += 1;
                if left != right {
                    assoc_fail += 1;
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let trials = 10_000;
    let mut pair_fail = 0;
    let mut coeff_fail = 0;
    let mut count_varies = 0;
    for t in 0..trials {
        let n = 2 + t % 4;
        let parts: Vec<_> = enumerate_partitions(n).unwrap().collect();
        let perms: Vec<_> = enumerate_permutations(n).unwrap().collect();
        let f = &parts[rng.gen_range(0..parts.len())];
        let s = &perms[rng.gen_range(0..perms.len())];
        let normal = party_normalize(f, s).map_err(e)?;
        let (end, strips) = strip_with(f, s, |c| rng.gen_range(0..c.len()));
        let (_, least) = strip_with(f, s, |_| 0);
        if &end != normal.perm() {
            pair_fail += 1;
        }
        if strips != least {
            count_varies += 1;
        }
        // The full coefficient of F_f G_s, through a random reduced word of s,
        // against the engine's fixed normal form.
        if n <= 4 || t % 10 == 0 {
            let php = PartyHecke::new(n, prime_point(t % 2, &mut ChaCha8Rng::seed_from_u64(t as u64)));
            let mut x = php.pair(f, &Permutation::identity(n), &1).map_err(e)?;
            for k in random_reduced_word(s, &mut rng) {
                x = php.right_mul_gen(&x, SimpleGen::G(k));
            }
            let nf: Vec<_> = php.nf(f, s).iter().cloned().collect();
            let got: Vec<_> = x.terms().map(|(b, c)| (b.clone(), *c)).collect();
            let mut nf_sorted = nf.clone();
            nf_sorted.sort();
            nf_sorted.retain(|(_, c)| *c != 0);
            if got != nf_sorted {
                coeff_fail += 1;
            }
        }
    }
    let ok = assoc_fail == 0 && triples == 4096 && pair_fail == 0 && coeff_fail == 0;
    Ok((
        ok,
        format!(
            "{triples} triples with {assoc_fail} failures; {trials} strip-order trials with {pair_fail} pair and \
             {coeff_fail} coefficient failures (strip count varied in {count_varies} trials, not part of the check)"
        ),
    ))
}

fn criterion7() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (ideal, n) in [(Ideal::FF, 3), (Ideal::FF, 4), (Ideal::FF, 5), (Ideal::I, 3), (Ideal::J, 3)] {
        let r = quotient_dimension(ideal, n, 7, true).map_err(e)?;
        ok &= r.passes();
        notes.push(format!("{ideal} n={n}: {}", r.quotient_dimension));
    }
    for ideal in [Ideal::I, Ideal::J] {
        for c in verify_quotient_consequences(ideal, 3, 7).map_err(e)? {
            ok &= c.holds;
            if !c.holds {
                notes.push(format!("{ideal}: {} fails", c.name));
            }
        }
    }
    Ok((ok, notes.join(", ")))
}

fn criterion8() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let one = BigRational::from_integer(1.into());
    let r = semisimplicity_certificate(3, one.clone(), one).map_err(e)?;
    ok &= r.gram_rank == 16;
    notes.push(format!("n=3 at (1,1): {}", r.gram_rank));
    for (n, want) in [(3usize, 16usize), (4, 131)] {
        let mut ranks = Vec::new();
        for (a, q) in random_rational_points(8 + n as u64, 2) {
            let r = semisimplicity_certificate(n, a, q).map_err(e)?;
            ranks.push(r.gram_rank);
        }
        ok &= ranks.iter().all(|&r| r == want);
        notes.push(format!("n={n} random points: {ranks:?}"));
    }
    Ok((ok, notes.join(", ")))
}

fn criterion9() -> Outcome {
    let mut ok = true;
    let mut j_counts = Vec::new();
    let mut l_counts = Vec::new();
    let mut groups = 0;
    for n in 2..=5 {
        let m = party_monoid(n).map_err(e)?;
        let j = m.green_classes(GreenRelation::J).len();
        let l = m.green_classes(GreenRelation::L).len();
        ok &= j == IntegerPartition::all(n).len() && l == bell(n);
        j_counts.push(j);
        l_counts.push(l);
        let h = m.green_classes(GreenRelation::H);
        for x in m.elements.iter().filter(|x| x.is_idempotent()) {
            let i = m.index[x];
            let h_size = h.iter().find(|c| c.contains(&i)).unwrap().len();
            let sub = maximal_subgroup_party(x.partition()).map_err(e)?.len();
            ok &= h_size as u128 == party_subgroup_order_formula(x.partition()) && sub == h_size;
            groups += 1;
        }
    }
    let t3 = tied_monoid(3).map_err(e)?.green_classes(GreenRelation::J).len();
    ok &= t3 == 3;
    for n in 2..=4 {
        let m = tied_monoid(n).map_err(e)?;
        let h = m.green_classes(GreenRelation::H);
        for x in m.elements.iter().filter(|x| x.multiply(x).ok().as_ref() == Some(*x)) {
            let i = m.index[x];
            let h_size = h.iter().find(|c| c.contains(&i)).unwrap().len();
            let part = &x.to_party().partition().clone();
            let sub = maximal_subgroup_tied(part).map_err(e)?.len();
            ok &= h_size as u128 == tied_subgroup_order_formula(part) && sub == h_size;
            groups += 1;
        }
    }
    Ok((
        ok,
        format!("J-classes {j_counts:?}, L-classes {l_counts:?}, tied n=3 J-classes {t3}, {groups} maximal subgroups checked"),
    ))
}

fn criterion10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let reports = [
        cocycle_check_exhaustive(&coprime_pairs(3).map_err(e)?, TwistKind::Beta).map_err(e)?,
        cocycle_check_exhaustive(&all_diagrams(2).map_err(e)?, TwistKind::Alpha).map_err(e)?,
        cocycle_check_random(&coprime_pairs(4).map_err(e)?, TwistKind::Beta, 10_000, &mut rng).map_err(e)?,
        cocycle_check_random(&all_diagrams(4).map_err(e)?, TwistKind::Alpha, 10_000, &mut rng).map_err(e)?,
    ];
    let ok = reports.iter().all(|r| r.failures == 0);
    let notes: Vec<String> = reports
        .iter()
        .map(|r| format!("{:?} n={} {} triples {} failures", r.kind, r.n, r.triples, r.failures))
        .collect();
    Ok((ok, notes.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("party monoid enumeration", criterion1),
        ("auxiliary enumerations", criterion2),
        ("Party-Hecke basis and faithfulness", criterion3),
        ("relation suites", criterion4),
        ("degeneration at (1,1)", criterion5),
        ("associativity and confluence", criterion6),
        ("quotient dimensions", criterion7),
        ("semisimplicity", criterion8),
        ("structural combinatorics", criterion9),
        ("cocycle identities", criterion10),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match run() {
            Ok(r) => r,
            Err(err) => (false, format!("error: {err}")),
        };
        all &= pass;
        println!(
            "criterion {:>2} {} [{name}] ({:.1}s): {detail}",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
