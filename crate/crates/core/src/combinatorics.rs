//! Set partitions of `{1..n}` and permutations of `{1..n}`.
//!
//! Both types use 1-based points in their public API and text forms, and
//! store compact 0-based data internally.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Largest `n` accepted by the enumerators unless a caller overrides it.
pub const DEFAULT_ENUM_BOUND: usize = 7;

fn check_same(n: usize, m: usize) -> Result<()> {
    if n == m {
        Ok(())
    } else {
        Err(AlgebraError::SizeMismatch(n, m))
    }
}

/// A set partition in restricted-growth form: `labels[i]` is the block index
/// of point `i + 1`, and blocks are numbered in order of their minima.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u8>,
}

/// A pair `lo < hi` of points in the same block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub lo: usize,
    pub hi: usize,
}

impl Arc {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo < hi, "arc endpoints must satisfy lo < hi");
        Self { lo, hi }
    }
}

/// Relabel arbitrary block ids into restricted-growth form.
fn canonical_labels(raw: &[usize]) -> Vec<u8> {
    let mut map: Vec<Option<u8>> = vec![None; raw.iter().max().map_or(0, |m| m + 1)];
    let mut next = 0u8;
    raw.iter()
        .map(|&r| {
            *map[r].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

impl SetPartition {
    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (0..n as u8).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self { labels: vec![0; n] }
    }

    /// Build from 1-based blocks; every point of `1..=n` must appear once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(AlgebraError::Invalid("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(AlgebraError::IndexOutOfRange(format!("point {x} for n={n}")));
                }
                if raw[x - 1] != usize::MAX {
                    return Err(AlgebraError::Invalid(format!("point {x} repeated")));
                }
                raw[x - 1] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(AlgebraError::Invalid("blocks do not cover 1..n".into()));
        }
        Ok(Self::from_raw_labels(&raw))
    }

    pub(crate) fn from_raw_labels(raw: &[usize]) -> Self {
        Self {
            labels: canonical_labels(raw),
        }
    }

    /// The partition whose only nontrivial block is `{i, j}` (1-based).
    pub fn pair(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(AlgebraError::IndexOutOfRange(format!("pair ({i},{j}) for n={n}")));
        }
        let mut raw: Vec<usize> = (0..n).collect();
        raw[j - 1] = i - 1;
        Ok(Self::from_raw_labels(&raw))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// `n` minus the number of blocks; also the number of standard arcs.
    pub fn rank(&self) -> usize {
        self.n() - self.num_blocks()
    }

    pub fn is_singletons(&self) -> bool {
        self.num_blocks() == self.n()
    }

    /// Blocks as sorted 1-based lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(i + 1);
        }
        out
    }

    /// Whether 1-based points `i` and `j` share a block.
    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.labels[i - 1] == self.labels[j - 1]
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        check_same(self.n(), other.n())?;
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for labels in [&self.labels, &other.labels] {
            let mut first = vec![usize::MAX; n];
            for (i, &l) in labels.iter().enumerate() {
                let l = l as usize;
                if first[l] == usize::MAX {
                    first[l] = i;
                } else {
                    uf.union(first[l], i);
                }
            }
        }
        Ok(Self::from_raw_labels(&uf.roots()))
    }

    /// Join with the pair `{i, j}`.
    pub fn join_pair(&self, i: usize, j: usize) -> Self {
        let (li, lj) = (self.labels[i - 1], self.labels[j - 1]);
        if li == lj {
            return self.clone();
        }
        let raw: Vec<usize> = self
            .labels
            .iter()
            .map(|&l| if l == lj { li as usize } else { l as usize })
            .collect();
        Self::from_raw_labels(&raw)
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        self.n() == other.n()
            && self.join(other).map(|j| &j == other).unwrap_or(false)
    }

    pub fn standard_arcs(&self) -> Vec<Arc> {
        let mut out = Vec::with_capacity(self.rank());
        for block in self.blocks() {
            for w in block.windows(2) {
                out.push(Arc::new(w[0], w[1]));
            }
        }
        out.sort();
        out
    }

    /// Generators `f_{lo,hi}` whose product is this partition, block by block.
    pub fn normal_word(&self) -> Vec<Arc> {
        self.blocks()
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1])).collect::<Vec<_>>())
            .collect()
    }

    /// Image of the partition under a permutation: blocks map pointwise.
    pub fn act(&self, s: &Permutation) -> Result<Self> {
        check_same(self.n(), s.n())?;
        let mut raw = vec![0usize; self.n()];
        for (i, &l) in self.labels.iter().enumerate() {
            raw[s.images[i] as usize] = l as usize;
        }
        Ok(Self::from_raw_labels(&raw))
    }

    /// Block sizes in non-increasing order.
    pub fn shape(&self) -> IntegerPartition {
        let mut sizes = vec![0usize; self.num_blocks()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        IntegerPartition::from_parts(sizes)
    }
}

/// Number of shared standard arcs.
pub fn beta(f: &SetPartition, g: &SetPartition) -> Result<usize> {
    check_same(f.n(), g.n())?;
    let a = f.standard_arcs();
    let b = g.standard_arcs();
    Ok(a.iter().filter(|x| b.binary_search(x).is_ok()).count())
}

/// `rank(I) + rank(J) - rank(I v J)`: how many merges the two partitions
/// duplicate when joined. This is the exponent of `q^2` produced by
/// multiplying the idempotents `F_I` and `F_J`.
pub fn join_defect(f: &SetPartition, g: &SetPartition) -> Result<usize> {
    let j = f.join(g)?;
    Ok(f.rank() + g.rank() - j.rank())
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Parse blocks like `1 3 5|2 4`; `n` is inferred from the largest point.
impl FromStr for SetPartition {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let block: std::result::Result<Vec<usize>, _> =
                part.split_whitespace().map(str::parse::<usize>).collect();
            let block = block.map_err(|e| AlgebraError::Parse(format!("{part:?}: {e}")))?;
            blocks.push(block);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::from_blocks(n, &blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A permutation stored by its 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(AlgebraError::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The elementary transposition `s_k` swapping `k` and `k+1`.
    pub fn elementary(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(AlgebraError::IndexOutOfRange(format!("s_{k} for n={n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(k - 1, k);
        Ok(p)
    }

    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        if i >= j || i == 0 || j > n {
            return Err(AlgebraError::IndexOutOfRange(format!("s_({i},{j}) for n={n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Swap the sets `a` and `b` order-preservingly, fixing everything else.
    pub fn s_ab(a: &[usize], b: &[usize], n: usize) -> Result<Self> {
        if a.len() != b.len() {
            return Err(AlgebraError::Invalid("sets differ in size".into()));
        }
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.dedup();
        b.dedup();
        if a.len() != b.len() || a.iter().any(|x| b.contains(x)) {
            return Err(AlgebraError::Invalid("sets overlap or repeat".into()));
        }
        if a.iter().chain(&b).any(|&x| x == 0 || x > n) {
            return Err(AlgebraError::IndexOutOfRange("point outside 1..n".into()));
        }
        let mut p = Self::identity(n);
        for (&x, &y) in a.iter().zip(&b) {
            p.images[x - 1] = (y - 1) as u8;
            p.images[y - 1] = (x - 1) as u8;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same(self.n(), other.n())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self { images: inv }
    }

    /// Number of pairs of positions out of order.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_k`: swap the entries at positions `k, k+1`.
    pub fn mul_elementary_right(&self, k: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(k - 1, k);
        p
    }

    /// Left multiplication by `s_k`: swap the values `k, k+1`.
    pub fn mul_elementary_left(&self, k: usize) -> Self {
        self.swap_values(k, k + 1)
    }

    /// `s_{i,j} * self`, i.e. exchange the values `i` and `j`.
    pub fn swap_values(&self, i: usize, j: usize) -> Self {
        let (a, b) = ((i - 1) as u8, (j - 1) as u8);
        Self {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    fn position_of_value(&self, v: usize) -> usize {
        self.images
            .iter()
            .position(|&x| x as usize == v - 1)
            .expect("value present")
    }

    /// Fast test for `l(s_{i,j} * self) < l(self)` with `i < j`: the value
    /// `j` appears before the value `i` in one-line notation.
    pub fn is_left_inversion(&self, i: usize, j: usize) -> bool {
        self.position_of_value(j) < self.position_of_value(i)
    }

    /// All `(i, j)`, `i < j`, with `l(s_{i,j} * self) < l(self)`, decided
    /// by comparing lengths directly.
    pub fn left_inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let len = self.length();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.swap_values(i, j).length() < len {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn length_and_inversions(&self) -> (usize, Vec<(usize, usize)>) {
        (self.length(), self.left_inversions())
    }

    /// Whether `s_k` is a left descent: value `k+1` precedes value `k`.
    pub fn has_left_descent(&self, k: usize) -> bool {
        self.is_left_inversion(k, k + 1)
    }

    /// Whether `s_k` is a right descent: `self(k) > self(k+1)`.
    pub fn has_right_descent(&self, k: usize) -> bool {
        self.images[k - 1] > self.images[k]
    }

    /// Reduced word `[k_1, ..., k_l]` with `self = s_{k_1} ... s_{k_l}`,
    /// obtained by repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        'outer: loop {
            for k in 1..cur.n() {
                if cur.has_left_descent(k) {
                    word.push(k);
                    cur = cur.mul_elementary_left(k);
                    continue 'outer;
                }
            }
            return word;
        }
    }

    /// Product `s_{k_1} ... s_{k_l}` of elementary transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &k in word {
            if k == 0 || k >= n {
                return Err(AlgebraError::IndexOutOfRange(format!("s_{k} for n={n}")));
            }
            p = p.mul_elementary_right(k);
        }
        Ok(p)
    }

    pub fn longest(n: usize) -> Self {
        Self {
            images: (0..n as u8).rev().collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        let v: std::result::Result<Vec<usize>, _> = s.split_whitespace().map(str::parse).collect();
        Self::from_images(&v.map_err(|e| AlgebraError::Parse(format!("{s:?}: {e}")))?)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Non-increasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerPartition {
    pub parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if rest == 0 {
                out.push(IntegerPartition { parts: cur.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn roots(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|i| self.find(i)).collect()
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(AlgebraError::BoundExceeded(format!("n={n} exceeds {bound}")))
    } else {
        Ok(())
    }
}

/// Restricted-growth strings in lexicographic order.
pub struct PartitionIter {
    cur: Option<Vec<u8>>,
}

impl Iterator for PartitionIter {
    type Item = SetPartition;
    fn next(&mut self) -> Option<SetPartition> {
        let out = self.cur.clone()?;
        let mut v = out.clone();
        let n = v.len();
        // Increment the rightmost position that can grow.
        let mut advanced = false;
        for i in (1..n).rev() {
            let max_prefix = *v[..i].iter().max().expect("nonempty prefix");
            if v[i] <= max_prefix {
                v[i] += 1;
                for x in v.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                advanced = true;
                break;
            }
        }
        self.cur = advanced.then_some(v);
        Some(SetPartition { labels: out })
    }
}

pub fn enumerate_partitions(n: usize) -> Result<PartitionIter> {
    enumerate_partitions_bounded(n, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<PartitionIter> {
    check_bound(n, bound)?;
    Ok(PartitionIter {
        cur: Some(vec![0; n]),
    })
}

/// Permutations in lexicographic order of one-line notation.
pub struct PermutationIter {
    cur: Option<Vec<u8>>,
}

impl Iterator for PermutationIter {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        let out = self.cur.clone()?;
        let mut v = out.clone();
        let n = v.len();
        let advanced = (|| {
            if n < 2 {
                return false;
            }
            let mut i = n - 1;
            while i > 0 && v[i - 1] >= v[i] {
                i -= 1;
            }
            if i == 0 {
                return false;
            }
            let mut j = n - 1;
            while v[j] <= v[i - 1] {
                j -= 1;
            }
            v.swap(i - 1, j);
            v[i..].reverse();
            true
        })();
        self.cur = advanced.then_some(v);
        Some(Permutation { images: out })
    }
}

pub fn enumerate_permutations(n: usize) -> Result<PermutationIter> {
    enumerate_permutations_bounded(n, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_permutations_bounded(n: usize, bound: usize) -> Result<PermutationIter> {
    check_bound(n, bound)?;
    Ok(PermutationIter {
        cur: Some((0..n as u8).collect()),
    })
}
