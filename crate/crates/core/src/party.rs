//! The party monoid via coprime pairs, and the tied symmetric monoid.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    enumerate_partitions, enumerate_permutations, IntegerPartition, Permutation, SetPartition,
};
use crate::diagram::Diagram;
use crate::error::{AlgebraError, Result};

/// `g = f * s` with `(f, s)` coprime: no left inversion of `s` lies inside
/// a block of `f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartyElement {
    partition: SetPartition,
    perm: Permutation,
}

/// Whether `(f, s)` is coprime.
pub fn is_coprime(f: &SetPartition, s: &Permutation) -> bool {
    let n = f.n();
    for i in 1..=n {
        for j in i + 1..=n {
            if f.same_block(i, j) && s.is_left_inversion(i, j) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least left inversion `(i, j)` of `s` inside a block.
pub(crate) fn least_strippable(f: &SetPartition, s: &Permutation) -> Option<(usize, usize)> {
    let n = f.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| f.same_block(i, j) && s.is_left_inversion(i, j))
}

/// All left inversions of `s` inside blocks of `f`.
pub fn strippable_inversions(f: &SetPartition, s: &Permutation) -> Vec<(usize, usize)> {
    let n = f.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| f.same_block(i, j) && s.is_left_inversion(i, j))
        .collect()
}

/// Strip in-block inversions, choosing which one with `choose` among all
/// candidates. Returns the reduced permutation and the number of strips.
pub fn strip_with<C>(f: &SetPartition, s: &Permutation, mut choose: C) -> (Permutation, usize)
where
    C: FnMut(&[(usize, usize)]) -> usize,
{
    let mut cur = s.clone();
    let mut count = 0;
    loop {
        let cands = strippable_inversions(f, &cur);
        if cands.is_empty() {
            return (cur, count);
        }
        let (i, j) = cands[choose(&cands)];
        cur = cur.swap_values(i, j);
        count += 1;
    }
}

/// Coprime normal form of `f * s`.
pub fn party_normalize(f: &SetPartition, s: &Permutation) -> Result<PartyElement> {
    if f.n() != s.n() {
        return Err(AlgebraError::SizeMismatch(f.n(), s.n()));
    }
    let mut cur = s.clone();
    while let Some((i, j)) = least_strippable(f, &cur) {
        cur = cur.swap_values(i, j);
    }
    Ok(PartyElement {
        partition: f.clone(),
        perm: cur,
    })
}

impl PartyElement {
    pub fn identity(n: usize) -> Self {
        Self {
            partition: SetPartition::singletons(n),
            perm: Permutation::identity(n),
        }
    }

    /// Accepts only coprime pairs.
    pub fn new(partition: SetPartition, perm: Permutation) -> Result<Self> {
        if partition.n() != perm.n() {
            return Err(AlgebraError::SizeMismatch(partition.n(), perm.n()));
        }
        if !is_coprime(&partition, &perm) {
            return Err(AlgebraError::Invalid(format!("[{partition}][{perm}] is not coprime")));
        }
        Ok(Self { partition, perm })
    }

    pub fn from_partition(f: SetPartition) -> Self {
        let n = f.n();
        Self {
            partition: f,
            perm: Permutation::identity(n),
        }
    }

    pub fn from_permutation(s: Permutation) -> Self {
        Self {
            partition: SetPartition::singletons(s.n()),
            perm: s,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn into_parts(self) -> (SetPartition, Permutation) {
        (self.partition, self.perm)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(AlgebraError::SizeMismatch(self.n(), other.n()));
        }
        let moved = other.partition.act(&self.perm)?;
        party_normalize(
            &self.partition.join(&moved)?,
            &self.perm.compose_unchecked(&other.perm),
        )
    }

    /// Blocks `B` on top joined with `s^{-1}(B)` on the bottom.
    pub fn to_diagram(&self) -> Diagram {
        let n = self.n();
        let inv = self.perm.inverse();
        let labels = self.partition.labels();
        let mut raw = vec![0usize; 2 * n];
        for x in 0..n {
            raw[x] = labels[x] as usize;
            raw[n + inv.raw()[x] as usize] = labels[x] as usize;
        }
        let p = SetPartition::from_raw_labels(&raw);
        Diagram::from_partition(n, p).expect("sizes agree")
    }

    pub fn from_diagram(d: &Diagram) -> Result<Self> {
        if !d.is_uniform() {
            return Err(AlgebraError::Invalid(format!("{d} is not uniform")));
        }
        let n = d.n();
        let mut images = vec![0usize; n];
        for block in d.blocks() {
            let (top, bottom): (Vec<usize>, Vec<usize>) = block.iter().partition(|&&x| x <= n);
            for (t, b) in top.iter().zip(&bottom) {
                images[b - n - 1] = *t;
            }
        }
        let (top, _) = d.top_bottom_partitions();
        Ok(Self {
            partition: top,
            perm: Permutation::from_images(&images)?,
        })
    }

    /// The unique inverse `g*` with `g g* g = g` and `g* g g* = g*`.
    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let f = self.partition.act(&inv).expect("sizes agree");
        party_normalize(&f, &inv).expect("sizes agree")
    }

    /// Top partition of the diagram.
    pub fn top(&self) -> SetPartition {
        self.partition.clone()
    }

    /// Bottom partition of the diagram: `s^{-1}(f)`.
    pub fn bottom(&self) -> SetPartition {
        self.partition.act(&self.perm.inverse()).expect("sizes agree")
    }

    pub fn shape(&self) -> IntegerPartition {
        self.partition.shape()
    }

    pub fn is_idempotent(&self) -> bool {
        self.perm.is_identity()
    }
}

impl fmt::Display for PartyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}][{}]", self.partition, self.perm)
    }
}

impl fmt::Debug for PartyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse `[1 3|2][2 1 3]` into a raw pair (not necessarily coprime).
pub fn parse_pair(s: &str) -> Result<(SetPartition, Permutation)> {
    let s = s.trim();
    let err = || AlgebraError::Parse(format!("expected [partition][perm], got {s:?}"));
    let rest = s.strip_prefix('[').ok_or_else(err)?;
    let (part, rest) = rest.split_once(']').ok_or_else(err)?;
    let rest = rest.trim_start().strip_prefix('[').ok_or_else(err)?;
    let (perm, tail) = rest.split_once(']').ok_or_else(err)?;
    if !tail.trim().is_empty() {
        return Err(err());
    }
    let perm: Permutation = perm.parse()?;
    let part: SetPartition = if part.trim().is_empty() {
        SetPartition::singletons(perm.n())
    } else {
        part.parse()?
    };
    if part.n() != perm.n() {
        return Err(AlgebraError::SizeMismatch(part.n(), perm.n()));
    }
    Ok((part, perm))
}

/// Parses and normalizes.
impl FromStr for PartyElement {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        let (f, p) = parse_pair(s)?;
        party_normalize(&f, &p)
    }
}

impl Serialize for PartyElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PartyElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `g = e * s` in the semidirect product of set partitions by permutations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TiedSymElement {
    pub partition: SetPartition,
    pub perm: Permutation,
}

impl TiedSymElement {
    pub fn new(partition: SetPartition, perm: Permutation) -> Result<Self> {
        if partition.n() != perm.n() {
            return Err(AlgebraError::SizeMismatch(partition.n(), perm.n()));
        }
        Ok(Self { partition, perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            partition: SetPartition::singletons(n),
            perm: Permutation::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(AlgebraError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Self {
            partition: self.partition.join(&other.partition.act(&self.perm)?)?,
            perm: self.perm.compose_unchecked(&other.perm),
        })
    }

    /// Image in the party monoid.
    pub fn to_party(&self) -> PartyElement {
        party_normalize(&self.partition, &self.perm).expect("sizes agree")
    }

    pub fn shape(&self) -> IntegerPartition {
        self.partition.shape()
    }
}

impl fmt::Display for TiedSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}][{}]", self.partition, self.perm)
    }
}

impl fmt::Debug for TiedSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every coprime pair for `n`, ordered by partition then permutation.
pub fn coprime_pairs(n: usize) -> Result<Vec<PartyElement>> {
    let perms: Vec<Permutation> = enumerate_permutations(n)?.collect();
    let mut out = Vec::new();
    for f in enumerate_partitions(n)? {
        for s in &perms {
            if is_coprime(&f, s) {
                out.push(PartyElement {
                    partition: f.clone(),
                    perm: s.clone(),
                });
            }
        }
    }
    Ok(out)
}

pub fn tied_elements(n: usize) -> Result<Vec<TiedSymElement>> {
    let perms: Vec<Permutation> = enumerate_permutations(n)?.collect();
    let mut out = Vec::new();
    for f in enumerate_partitions(n)? {
        for s in &perms {
            out.push(TiedSymElement {
                partition: f.clone(),
                perm: s.clone(),
            });
        }
    }
    Ok(out)
}

/// A finite monoid materialised from generators, with Cayley tables for
/// left and right multiplication by each generator.
pub struct FiniteMonoid<T> {
    pub elements: Vec<T>,
    pub index: HashMap<T, usize>,
    pub identity: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl<T: Clone + Eq + Hash> FiniteMonoid<T> {
    pub fn generate<M>(identity: T, generators: &[T], mul: M, cap: usize) -> Result<Self>
    where
        M: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut right: Vec<Vec<usize>> = vec![Vec::new(); generators.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (g, gen) in generators.iter().enumerate() {
                let y = mul(&elements[i], gen);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= cap {
                            return Err(AlgebraError::BoundExceeded(format!("monoid exceeds {cap}")));
                        }
                        let j = elements.len();
                        index.insert(y.clone(), j);
                        elements.push(y);
                        queue.push_back(j);
                        j
                    }
                };
                let row = &mut right[g];
                if row.len() <= i {
                    row.resize(i + 1, usize::MAX);
                }
                row[i] = j;
            }
        }
        let left = generators
            .iter()
            .map(|gen| {
                elements
                    .iter()
                    .map(|x| {
                        let y = mul(gen, x);
                        *index.get(&y).expect("closed under generators")
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            elements,
            index,
            identity: 0,
            left,
            right,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn ideal(&self, start: usize, use_left: bool, use_right: bool) -> Vec<u64> {
        let n = self.len();
        let mut bits = vec![0u64; n.div_ceil(64)];
        let mut stack = vec![start];
        bits[start / 64] |= 1 << (start % 64);
        while let Some(x) = stack.pop() {
            let tables = self
                .left
                .iter()
                .filter(|_| use_left)
                .chain(self.right.iter().filter(|_| use_right));
            for t in tables {
                let y = t[x];
                if bits[y / 64] & (1 << (y % 64)) == 0 {
                    bits[y / 64] |= 1 << (y % 64);
                    stack.push(y);
                }
            }
        }
        bits
    }

    /// Classes of the relation as lists of element indices, in order of
    /// first appearance.
    pub fn green_classes(&self, relation: GreenRelation) -> Vec<Vec<usize>> {
        let key = |x: usize| -> Vec<Vec<u64>> {
            match relation {
                GreenRelation::L => vec![self.ideal(x, true, false)],
                GreenRelation::R => vec![self.ideal(x, false, true)],
                GreenRelation::J => vec![self.ideal(x, true, true)],
                GreenRelation::H => vec![self.ideal(x, true, false), self.ideal(x, false, true)],
            }
        };
        let mut groups: HashMap<Vec<Vec<u64>>, usize> = HashMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.len() {
            let k = key(x);
            match groups.get(&k) {
                Some(&g) => out[g].push(x),
                None => {
                    groups.insert(k, out.len());
                    out.push(vec![x]);
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GreenRelation {
    L,
    R,
    J,
    H,
}

impl FromStr for GreenRelation {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(Self::L),
            "R" | "r" => Ok(Self::R),
            "J" | "j" | "D" | "d" => Ok(Self::J),
            "H" | "h" => Ok(Self::H),
            _ => Err(AlgebraError::Parse(format!("unknown relation {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonoidKind {
    Party,
    Tied,
}

impl FromStr for MonoidKind {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "party" => Ok(Self::Party),
            "tied" => Ok(Self::Tied),
            _ => Err(AlgebraError::Parse(format!("unknown monoid {s:?}"))),
        }
    }
}

pub fn party_monoid(n: usize) -> Result<FiniteMonoid<PartyElement>> {
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(PartyElement::from_permutation(Permutation::elementary(n, i)?));
        gens.push(PartyElement::from_partition(SetPartition::pair(n, i, i + 1)?));
    }
    FiniteMonoid::generate(
        PartyElement::identity(n),
        &gens,
        |x, y| x.multiply(y).expect("same n"),
        usize::MAX,
    )
}

pub fn tied_monoid(n: usize) -> Result<FiniteMonoid<TiedSymElement>> {
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(TiedSymElement::new(SetPartition::singletons(n), Permutation::elementary(n, i)?)?);
        gens.push(TiedSymElement::new(SetPartition::pair(n, i, i + 1)?, Permutation::identity(n))?);
    }
    FiniteMonoid::generate(
        TiedSymElement::identity(n),
        &gens,
        |x, y| x.multiply(y).expect("same n"),
        usize::MAX,
    )
}

/// Upper bounds for brute-force Green's computations.
pub const GREEN_BOUND_PARTY: usize = 5;
pub const GREEN_BOUND_TIED: usize = 4;
pub const MAXSUB_BOUND: usize = 7;

/// Green's classes as sets of element strings.
pub fn green_classes(kind: MonoidKind, n: usize, relation: GreenRelation) -> Result<Vec<Vec<String>>> {
    let fmt_classes = |classes: Vec<Vec<usize>>, name: &dyn Fn(usize) -> String| {
        classes
            .into_iter()
            .map(|c| c.into_iter().map(name).collect())
            .collect()
    };
    match kind {
        MonoidKind::Party => {
            if n > GREEN_BOUND_PARTY {
                return Err(AlgebraError::BoundExceeded(format!("party Green's classes need n <= {GREEN_BOUND_PARTY}")));
            }
            let m = party_monoid(n)?;
            let cl = m.green_classes(relation);
            Ok(fmt_classes(cl, &|i| m.elements[i].to_string()))
        }
        MonoidKind::Tied => {
            if n > GREEN_BOUND_TIED {
                return Err(AlgebraError::BoundExceeded(format!("tied Green's classes need n <= {GREEN_BOUND_TIED}")));
            }
            let m = tied_monoid(n)?;
            let cl = m.green_classes(relation);
            Ok(fmt_classes(cl, &|i| m.elements[i].to_string()))
        }
    }
}

/// Permutations `s` with `s(e) = e`.
pub fn stabilizer(e: &SetPartition) -> Result<Vec<Permutation>> {
    if e.n() > MAXSUB_BOUND {
        return Err(AlgebraError::BoundExceeded(format!("stabilizer needs n <= {MAXSUB_BOUND}")));
    }
    Ok(enumerate_permutations(e.n())?
        .filter(|s| &e.act(s).expect("sizes agree") == e)
        .collect())
}

/// Maximal subgroup at the idempotent `e`, as party elements.
pub fn maximal_subgroup_party(e: &SetPartition) -> Result<Vec<PartyElement>> {
    let mut out: Vec<PartyElement> = stabilizer(e)?
        .iter()
        .map(|s| party_normalize(e, s).expect("sizes agree"))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Maximal subgroup at the idempotent `e` of the tied symmetric monoid.
pub fn maximal_subgroup_tied(e: &SetPartition) -> Result<Vec<TiedSymElement>> {
    Ok(stabilizer(e)?
        .into_iter()
        .map(|s| TiedSymElement {
            partition: e.clone(),
            perm: s,
        })
        .collect())
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Multiplicities `|e_[m]|`: how many blocks have each size.
fn size_multiplicities(e: &SetPartition) -> Vec<usize> {
    let mut counts = vec![0usize; e.n() + 1];
    for part in e.shape().parts {
        counts[part] += 1;
    }
    counts
}

/// `prod_m |e_[m]|!`.
pub fn party_subgroup_order_formula(e: &SetPartition) -> u128 {
    size_multiplicities(e).into_iter().map(factorial).product()
}

/// `(prod_B |B|!) * prod_m |e_[m]|!`.
pub fn tied_subgroup_order_formula(e: &SetPartition) -> u128 {
    let blocks: u128 = e.shape().parts.into_iter().map(factorial).product();
    blocks * party_subgroup_order_formula(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_strips_in_block_inversion() {
        let g: PartyElement = "[1 2|3][2 1 3]".parse().unwrap();
        assert_eq!(g.to_string(), "[1 2|3][1 2 3]");
    }

    #[test]
    fn diagram_round_trip() {
        for g in coprime_pairs(3).unwrap() {
            assert_eq!(PartyElement::from_diagram(&g.to_diagram()).unwrap(), g);
        }
    }

    #[test]
    fn party_counts() {
        assert_eq!(coprime_pairs(3).unwrap().len(), 16);
        assert_eq!(party_monoid(3).unwrap().len(), 16);
        assert_eq!(tied_monoid(3).unwrap().len(), 30);
    }
}
