//! Partition diagrams: set partitions of `{1..2n}` where `1..n` is the top
//! row and `n+1..2n` the bottom row.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Permutation, SetPartition, UnionFind};
use crate::error::{AlgebraError, Result};

/// Default cap on the number of elements produced by [`closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    blocks: SetPartition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatResult {
    pub diagram: Diagram,
    /// Number of components that live entirely in the middle row.
    pub alpha: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Transposition diagram of `s_i`.
    S,
    /// Party generator `f_{i,i+1}`.
    F,
    /// Tangle `t_i`: caps on top and bottom.
    T,
    /// `f_{i,j}`.
    Fij,
    /// `s_{i,j}`.
    Sij,
}

impl Diagram {
    pub fn identity(n: usize) -> Self {
        let raw: Vec<usize> = (0..2 * n).map(|x| x % n.max(1)).collect();
        Self::from_raw(n, &raw)
    }

    fn from_raw(n: usize, raw: &[usize]) -> Self {
        Self {
            n,
            blocks: SetPartition::from_raw_labels(raw),
        }
    }

    /// From 1-based blocks over `1..=2n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        Ok(Self {
            n,
            blocks: SetPartition::from_blocks(2 * n, blocks)?,
        })
    }

    pub fn from_partition(n: usize, blocks: SetPartition) -> Result<Self> {
        if blocks.n() != 2 * n {
            return Err(AlgebraError::SizeMismatch(blocks.n(), 2 * n));
        }
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partition(&self) -> &SetPartition {
        &self.blocks
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.blocks()
    }

    /// Diagram of a permutation: top `s(j)` is joined to bottom `j`.
    pub fn from_permutation(s: &Permutation) -> Self {
        let n = s.n();
        let mut raw = vec![0usize; 2 * n];
        for j in 0..n {
            raw[s.raw()[j] as usize] = j;
            raw[n + j] = j;
        }
        Self::from_raw(n, &raw)
    }

    /// Diagram of a set partition viewed as an idempotent: each block `B`
    /// becomes `B` on top together with `B` on the bottom.
    pub fn from_set_partition(f: &SetPartition) -> Self {
        let n = f.n();
        let raw: Vec<usize> = (0..2 * n).map(|x| f.labels()[x % n] as usize).collect();
        Self::from_raw(n, &raw)
    }

    pub fn generator(kind: GeneratorKind, indices: &[usize], n: usize) -> Result<Self> {
        let bad = || AlgebraError::IndexOutOfRange(format!("{kind:?}{indices:?} for n={n}"));
        match kind {
            GeneratorKind::S | GeneratorKind::F | GeneratorKind::T => {
                let &[i] = indices else { return Err(bad()) };
                if i == 0 || i >= n {
                    return Err(bad());
                }
                Ok(match kind {
                    GeneratorKind::S => Self::from_permutation(&Permutation::elementary(n, i)?),
                    GeneratorKind::F => Self::from_set_partition(&SetPartition::pair(n, i, i + 1)?),
                    _ => {
                        let mut raw: Vec<usize> = (0..n).chain(0..n).collect();
                        raw[i] = i - 1;
                        raw[n + i - 1] = n + i - 1;
                        raw[n + i] = n + i - 1;
                        Self::from_raw(n, &raw)
                    }
                })
            }
            GeneratorKind::Fij | GeneratorKind::Sij => {
                let &[i, j] = indices else { return Err(bad()) };
                if i == 0 || i >= j || j > n {
                    return Err(bad());
                }
                Ok(if kind == GeneratorKind::Fij {
                    Self::from_set_partition(&SetPartition::pair(n, i, j)?)
                } else {
                    Self::from_permutation(&Permutation::transposition(i, j, n)?)
                })
            }
        }
    }

    pub fn concat(&self, other: &Self) -> Result<ConcatResult> {
        if self.n != other.n {
            return Err(AlgebraError::SizeMismatch(self.n, other.n));
        }
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &Self) -> ConcatResult {
        let n = self.n;
        // Nodes: 0..n top of self, n..2n middle, 2n..3n bottom of other.
        // A point x of self is node x; a point y of other is node n + y.
        let mut uf = UnionFind::new(3 * n);
        link_blocks(&mut uf, self.blocks.labels(), 0);
        link_blocks(&mut uf, other.blocks.labels(), n);
        let roots = uf.roots();
        let mut outer = vec![false; 3 * n];
        for x in (0..n).chain(2 * n..3 * n) {
            outer[roots[x]] = true;
        }
        let mut middle_roots: Vec<usize> = (n..2 * n)
            .map(|x| roots[x])
            .filter(|&r| !outer[r])
            .collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        let raw: Vec<usize> = (0..n).chain(2 * n..3 * n).map(|x| roots[x]).collect();
        ConcatResult {
            diagram: Self::from_raw(n, &raw),
            alpha: middle_roots.len(),
        }
    }

    /// Restrictions to the top row and to the bottom row (relabelled).
    pub fn top_bottom_partitions(&self) -> (SetPartition, SetPartition) {
        let l = self.blocks.labels();
        let top: Vec<usize> = l[..self.n].iter().map(|&x| x as usize).collect();
        let bottom: Vec<usize> = l[self.n..].iter().map(|&x| x as usize).collect();
        (
            SetPartition::from_raw_labels(&top),
            SetPartition::from_raw_labels(&bottom),
        )
    }

    /// Every block has as many top points as bottom points.
    pub fn is_uniform(&self) -> bool {
        let mut balance = vec![0i64; 2 * self.n];
        for (x, &l) in self.blocks.labels().iter().enumerate() {
            balance[l as usize] += if x < self.n { 1 } else { -1 };
        }
        balance.iter().all(|&b| b == 0)
    }

    /// Reflection through the horizontal axis.
    pub fn flip(&self) -> Self {
        let n = self.n;
        let l = self.blocks.labels();
        let raw: Vec<usize> = (0..2 * n).map(|x| l[(x + n) % (2 * n)] as usize).collect();
        Self::from_raw(n, &raw)
    }

    /// Two-row ASCII picture. Strands that go straight down print as `|`,
    /// strands leaning right as `\`, leaning left as `/`; points of the same
    /// row in one block are joined by `~`.
    pub fn render(&self) -> String {
        let n = self.n;
        let l = self.blocks.labels();
        let mut top = String::new();
        let mut mid = String::new();
        let mut bot = String::new();
        for i in 0..n {
            let w = format!("{:>3}", i + 1);
            top.push_str(&w);
            bot.push_str(&format!("{:>3}", n + i + 1));
            let glyph = if l[i] == l[n + i] {
                '|'
            } else if (0..n).any(|j| j > i && l[n + j] == l[i]) {
                '\\'
            } else if (0..n).any(|j| j < i && l[n + j] == l[i]) {
                '/'
            } else {
                ' '
            };
            mid.push_str(&format!("{:>3}", glyph));
        }
        let tie = |row: &[u8]| -> String {
            (0..n)
                .map(|i| {
                    let joined = i + 1 < n && row[i] == row[i + 1];
                    format!("{:>3}", if joined { "~" } else { " " })
                })
                .collect::<String>()
        };
        let top_ties = tie(&l[..n]);
        let bot_ties = tie(&l[n..]);
        format!(
            "{}\n{}\n{}\n{}\n{}",
            top.trim_end(),
            top_ties.trim_end(),
            mid.trim_end(),
            bot_ties.trim_end(),
            bot.trim_end()
        )
    }
}

fn link_blocks(uf: &mut UnionFind, labels: &[u8], offset: usize) {
    let mut first = vec![usize::MAX; labels.len()];
    for (x, &l) in labels.iter().enumerate() {
        let l = l as usize;
        if first[l] == usize::MAX {
            first[l] = x + offset;
        } else {
            uf.union(first[l], x + offset);
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.blocks)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({})", self.blocks)
    }
}

/// Parse `1 2 4 5|3 6`; `n` is half the largest point.
impl FromStr for Diagram {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        let p: SetPartition = s.parse()?;
        if !p.n().is_multiple_of(2) {
            return Err(AlgebraError::Parse(format!("{s:?} has an odd number of points")));
        }
        Self::from_partition(p.n() / 2, p)
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// The submonoid generated by `generators`, in breadth-first order starting
/// from the identity.
pub fn closure(generators: &[Diagram], cap: usize) -> Result<Vec<Diagram>> {
    let Some(first) = generators.first() else {
        return Err(AlgebraError::Invalid("no generators".into()));
    };
    let n = first.n();
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(AlgebraError::SizeMismatch(n, g.n()));
    }
    let id = Diagram::identity(n);
    let mut seen: HashSet<Diagram> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.concat_unchecked(g).diagram;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(AlgebraError::BoundExceeded(format!("closure exceeds {cap}")));
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

pub fn party_generators(n: usize) -> Vec<Diagram> {
    let mut g = Vec::new();
    for i in 1..n {
        g.push(Diagram::generator(GeneratorKind::S, &[i], n).expect("in range"));
        g.push(Diagram::generator(GeneratorKind::F, &[i], n).expect("in range"));
    }
    g
}

pub fn brauer_generators(n: usize) -> Vec<Diagram> {
    let mut g = Vec::new();
    for i in 1..n {
        g.push(Diagram::generator(GeneratorKind::S, &[i], n).expect("in range"));
        g.push(Diagram::generator(GeneratorKind::T, &[i], n).expect("in range"));
    }
    g
}

/// Generators of the 2-tonal party monoid: transpositions, tangles and
/// party generators.
pub fn tonal2_generators(n: usize) -> Vec<Diagram> {
    let mut g = brauer_generators(n);
    for i in 1..n {
        g.push(Diagram::generator(GeneratorKind::F, &[i], n).expect("in range"));
    }
    g
}

pub fn temperley_lieb_generators(n: usize) -> Vec<Diagram> {
    (1..n)
        .map(|i| Diagram::generator(GeneratorKind::T, &[i], n).expect("in range"))
        .collect()
}

/// Every diagram of the partition monoid on `n` strands.
pub fn all_diagrams(n: usize) -> Result<Vec<Diagram>> {
    Ok(crate::combinatorics::enumerate_partitions_bounded(2 * n, 2 * crate::combinatorics::DEFAULT_ENUM_BOUND)?
        .map(|p| Diagram { n, blocks: p })
        .collect())
}

/// A pair of diagrams `(I, J)` with `I` refining `J`, as used for ramified
/// monoids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RamifiedPair {
    pub fine: Diagram,
    pub coarse: Diagram,
}

impl RamifiedPair {
    pub fn new(fine: Diagram, coarse: Diagram) -> Result<Self> {
        if !fine.partition().refines(coarse.partition()) {
            return Err(AlgebraError::Invalid("first diagram must refine the second".into()));
        }
        Ok(Self { fine, coarse })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            fine: self.fine.concat(&other.fine)?.diagram,
            coarse: self.coarse.concat(&other.coarse)?.diagram,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_blocks() {
        let f12 = Diagram::generator(GeneratorKind::F, &[1], 3).unwrap();
        assert_eq!(f12.to_string(), "1 2 4 5|3 6");
        let s1 = Diagram::generator(GeneratorKind::S, &[1], 3).unwrap();
        assert_eq!(s1.to_string(), "1 5|2 4|3 6");
        let t1 = Diagram::generator(GeneratorKind::T, &[1], 2).unwrap();
        assert_eq!(t1.to_string(), "1 2|3 4");
    }

    #[test]
    fn tangle_squares_to_a_loop() {
        let t1 = Diagram::generator(GeneratorKind::T, &[1], 2).unwrap();
        let r = t1.concat(&t1).unwrap();
        assert_eq!(r.diagram, t1);
        assert_eq!(r.alpha, 1);
    }

    #[test]
    fn render_identity() {
        let pic = Diagram::identity(2).render();
        assert!(pic.contains('|'));
        assert_eq!(pic.lines().count(), 5);
    }
}
