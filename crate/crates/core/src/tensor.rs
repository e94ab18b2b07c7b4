//! The tensor representation on `V^{⊗n}`, where `V` has basis `v_i^r` with
//! lower and upper indices in `1..=m`.
//!
//! `G̃` swaps two adjacent tensor factors up to a scalar and `F̃` is
//! diagonal, so every generator matrix has at most one nonzero entry per
//! column. The operator table as printed makes `F̃` depend on the upper
//! indices only; with that choice `G̃F̃ = pqF̃` fails, because `G̃` can move
//! `v_i^r ⊗ v_j^r` to a different vector that `F̃` still sees. Requiring the
//! two letters to be equal restores every defining relation, and
//! [`Convention::Consistent`] is the default for that reason.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Permutation, SetPartition};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, RationalFunctions, Specialization};
use crate::hecke::{Element, PartyHecke};
use crate::linalg::SparseEchelon;
use crate::report::{RelationCheck, RelationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `F̃` is `q^2` on two equal letters; `G̃` uses `pq` on equal letters.
    #[default]
    Consistent,
    /// The table exactly as printed: `F̃` is `q^2` whenever `r = s`.
    AsPrinted,
}

/// A basis vector `v_{i_1}^{r_1} ⊗ ... ⊗ v_{i_n}^{r_n}`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TensorIndex {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, r)) in self.lower.iter().zip(&self.upper).enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "v{i}^{r}")?;
        }
        Ok(())
    }
}

/// Column-sparse square matrix; column `j` lists its nonzero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<E> {
    dim: usize,
    cols: Vec<BTreeMap<usize, E>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, E> {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    /// Whether every column has at most one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        self.cols.iter().all(|c| c.len() <= 1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| c.keys().all(|&i| i == j))
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }
}

fn zero_matrix<E>(dim: usize) -> SparseMatrix<E> {
    SparseMatrix {
        dim,
        cols: (0..dim).map(|_| BTreeMap::new()).collect(),
    }
}

fn acc<F: Field>(fld: &F, col: &mut BTreeMap<usize, F::Elem>, i: usize, v: F::Elem) {
    if fld.is_zero(&v) {
        return;
    }
    match col.get_mut(&i) {
        Some(old) => {
            let s = fld.add(old, &v);
            if fld.is_zero(&s) {
                col.remove(&i);
            } else {
                *old = s;
            }
        }
        None => {
            col.insert(i, v);
        }
    }
}

/// Operators on `V^{⊗n}` at a point of a field.
pub struct TensorSpace<F: Field> {
    n: usize,
    m: usize,
    dim: usize,
    convention: Convention,
    point: Specialization<F>,
    pq: F::Elem,
    qa: F::Elem,
    q2: F::Elem,
    gens: HashMap<(char, usize), SparseMatrix<F::Elem>>,
}

/// Largest `m^{2n}` accepted without an explicit override.
pub const TENSOR_DIM_BOUND: usize = 1 << 16;

impl TensorSpace<RationalFunctions> {
    pub fn symbolic(n: usize, m: usize, convention: Convention) -> Result<Self> {
        Self::new(n, m, Specialization::generic(), convention)
    }
}

impl<F: Field> TensorSpace<F> {
    pub fn new(n: usize, m: usize, point: Specialization<F>, convention: Convention) -> Result<Self> {
        Self::with_bound(n, m, point, convention, TENSOR_DIM_BOUND)
    }

    pub fn with_bound(
        n: usize,
        m: usize,
        point: Specialization<F>,
        convention: Convention,
        bound: usize,
    ) -> Result<Self> {
        if n < 2 || m == 0 {
            return Err(AlgebraError::Invalid(format!("need n >= 2 and m >= 1, got n={n} m={m}")));
        }
        let dim = (m * m)
            .checked_pow(n as u32)
            .filter(|&d| d <= bound)
            .ok_or_else(|| AlgebraError::BoundExceeded(format!("(m^2)^n for n={n} m={m}")))?;
        let fld = point.field.clone();
        let p = fld.mul(&point.a, &point.a);
        let mut s = Self {
            n,
            m,
            dim,
            convention,
            pq: fld.mul(&p, &point.q),
            qa: fld.mul(&point.q, &point.a),
            q2: fld.mul(&point.q, &point.q),
            point,
            gens: HashMap::new(),
        };
        for k in 1..n {
            let g = s.build_g(k);
            let f = s.build_f(k);
            s.gens.insert(('G', k), g);
            s.gens.insert(('F', k), f);
        }
        for k in 1..n {
            let gi = s.build_g_inv(k)?;
            s.gens.insert(('I', k), gi);
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &F {
        &self.point.field
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    // ---- indexing ------------------------------------------------------

    /// Letter codes `(i - 1) * m + (r - 1)` per site, site 1 most significant.
    fn letters(&self, v: usize) -> Vec<usize> {
        let base = self.m * self.m;
        let mut out = vec![0; self.n];
        let mut x = v;
        for k in (0..self.n).rev() {
            out[k] = x % base;
            x /= base;
        }
        out
    }

    fn encode(&self, letters: &[usize]) -> usize {
        let base = self.m * self.m;
        letters.iter().fold(0, |acc, &l| acc * base + l)
    }

    pub fn index_of(&self, t: &TensorIndex) -> Result<usize> {
        if t.lower.len() != self.n || t.upper.len() != self.n {
            return Err(AlgebraError::SizeMismatch(t.lower.len(), self.n));
        }
        let mut letters = Vec::with_capacity(self.n);
        for (&i, &r) in t.lower.iter().zip(&t.upper) {
            if i == 0 || r == 0 || i > self.m || r > self.m {
                return Err(AlgebraError::IndexOutOfRange(format!("v{i}^{r} for m={}", self.m)));
            }
            letters.push((i - 1) * self.m + (r - 1));
        }
        Ok(self.encode(&letters))
    }

    pub fn tensor_index(&self, v: usize) -> TensorIndex {
        let ls = self.letters(v);
        TensorIndex {
            lower: ls.iter().map(|l| l / self.m + 1).collect(),
            upper: ls.iter().map(|l| l % self.m + 1).collect(),
        }
    }

    // ---- generators ----------------------------------------------------

    fn g_coeff(&self, x: usize, y: usize) -> F::Elem {
        let (i, r) = (x / self.m, x % self.m);
        let (j, s) = (y / self.m, y % self.m);
        let same = match self.convention {
            Convention::Consistent => x == y,
            Convention::AsPrinted => r == s,
        };
        if same || i > j {
            self.pq.clone()
        } else if i == j {
            self.qa.clone()
        } else {
            self.point.q.clone()
        }
    }

    fn f_coeff(&self, x: usize, y: usize) -> F::Elem {
        let hit = match self.convention {
            Convention::Consistent => x == y,
            Convention::AsPrinted => x % self.m == y % self.m,
        };
        if hit {
            self.q2.clone()
        } else {
            self.field().zero()
        }
    }

    fn build_g(&self, k: usize) -> SparseMatrix<F::Elem> {
        let mut out = zero_matrix(self.dim);
        for v in 0..self.dim {
            let mut ls = self.letters(v);
            let c = self.g_coeff(ls[k - 1], ls[k]);
            ls.swap(k - 1, k);
            out.cols[v].insert(self.encode(&ls), c);
        }
        out
    }

    fn build_f(&self, k: usize) -> SparseMatrix<F::Elem> {
        let mut out = zero_matrix(self.dim);
        for v in 0..self.dim {
            let ls = self.letters(v);
            let c = self.f_coeff(ls[k - 1], ls[k]);
            if !self.field().is_zero(&c) {
                out.cols[v].insert(v, c);
            }
        }
        out
    }

    /// `p^{-1} q^{-2} G̃ + q^{-3} (p^{-1} - 1) F̃`.
    fn build_g_inv(&self, k: usize) -> Result<SparseMatrix<F::Elem>> {
        let fld = self.field();
        let pt = &self.point;
        let p = fld.mul(&pt.a, &pt.a);
        let pinv = fld.inv(&p).ok_or(AlgebraError::DegenerateParameters)?;
        let q2inv = fld.pow(&pt.q, -2).ok_or(AlgebraError::DegenerateParameters)?;
        let q3inv = fld.pow(&pt.q, -3).ok_or(AlgebraError::DegenerateParameters)?;
        let c1 = fld.mul(&pinv, &q2inv);
        let c2 = fld.mul(&q3inv, &fld.sub(&pinv, &fld.one()));
        Ok(self.add(&self.scale(&self.gens[&('G', k)], &c1), &self.scale(&self.gens[&('F', k)], &c2)))
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k >= self.n {
            Err(AlgebraError::IndexOutOfRange(format!("generator {k} for n={}", self.n)))
        } else {
            Ok(())
        }
    }

    pub fn op_g(&self, k: usize) -> Result<&SparseMatrix<F::Elem>> {
        self.check_k(k)?;
        Ok(&self.gens[&('G', k)])
    }

    pub fn op_f(&self, k: usize) -> Result<&SparseMatrix<F::Elem>> {
        self.check_k(k)?;
        Ok(&self.gens[&('F', k)])
    }

    pub fn op_g_inv(&self, k: usize) -> Result<&SparseMatrix<F::Elem>> {
        self.check_k(k)?;
        Ok(&self.gens[&('I', k)])
    }

    /// Image of a single basis vector under `G̃_k` or `F̃_k`.
    pub fn apply_to_basis(&self, op: &SparseMatrix<F::Elem>, t: &TensorIndex) -> Result<Vec<(TensorIndex, F::Elem)>> {
        let v = self.index_of(t)?;
        Ok(op.cols[v]
            .iter()
            .map(|(i, c)| (self.tensor_index(*i), c.clone()))
            .collect())
    }

    // ---- matrix arithmetic ----------------------------------------------

    pub fn identity(&self) -> SparseMatrix<F::Elem> {
        let mut out = zero_matrix(self.dim);
        for (v, col) in out.cols.iter_mut().enumerate() {
            col.insert(v, self.field().one());
        }
        out
    }

    pub fn zero(&self) -> SparseMatrix<F::Elem> {
        zero_matrix(self.dim)
    }

    pub fn mul(&self, a: &SparseMatrix<F::Elem>, b: &SparseMatrix<F::Elem>) -> SparseMatrix<F::Elem> {
        let fld = self.field();
        let cols = b
            .cols
            .par_iter()
            .map(|bc| {
                let mut col = BTreeMap::new();
                for (k, bv) in bc {
                    for (i, av) in &a.cols[*k] {
                        acc(fld, &mut col, *i, fld.mul(av, bv));
                    }
                }
                col
            })
            .collect();
        SparseMatrix { dim: self.dim, cols }
    }

    pub fn product(&self, factors: &[&SparseMatrix<F::Elem>]) -> SparseMatrix<F::Elem> {
        match factors.split_first() {
            None => self.identity(),
            Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, f| self.mul(&acc, f)),
        }
    }

    pub fn add(&self, a: &SparseMatrix<F::Elem>, b: &SparseMatrix<F::Elem>) -> SparseMatrix<F::Elem> {
        let fld = self.field();
        let mut out = a.clone();
        for (j, bc) in b.cols.iter().enumerate() {
            for (i, v) in bc {
                acc(fld, &mut out.cols[j], *i, v.clone());
            }
        }
        out
    }

    pub fn scale(&self, a: &SparseMatrix<F::Elem>, c: &F::Elem) -> SparseMatrix<F::Elem> {
        let fld = self.field();
        if fld.is_zero(c) {
            return self.zero();
        }
        SparseMatrix {
            dim: a.dim,
            cols: a
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, fld.mul(v, c))).collect())
                .collect(),
        }
    }

    // ---- the representation -------------------------------------------

    /// `ψ(F_{i,j})` through the conjugation `G_i ... G_{j-2} F_{j-1} G_{j-2}^{-1} ... G_i^{-1}`.
    pub fn psi_f_pair(&self, i: usize, j: usize) -> Result<SparseMatrix<F::Elem>> {
        if i == 0 || i >= j || j > self.n {
            return Err(AlgebraError::IndexOutOfRange(format!("pair ({i},{j})")));
        }
        let mut cur = self.gens[&('F', j - 1)].clone();
        for k in (i..j - 1).rev() {
            cur = self.product(&[&self.gens[&('G', k)], &cur, &self.gens[&('I', k)]]);
        }
        Ok(cur)
    }

    /// `ψ(F_I)` as the product over the standard arcs of `I`.
    pub fn psi_partition(&self, part: &SetPartition) -> Result<SparseMatrix<F::Elem>> {
        let mut cur = self.identity();
        for arc in part.standard_arcs() {
            cur = self.mul(&cur, &self.psi_f_pair(arc.lo, arc.hi)?);
        }
        Ok(cur)
    }

    /// `ψ(G_s)` along the fixed reduced word of `s`.
    pub fn psi_perm(&self, s: &Permutation) -> SparseMatrix<F::Elem> {
        let word = s.reduced_word();
        let mats: Vec<&SparseMatrix<F::Elem>> = word.iter().map(|k| &self.gens[&('G', *k)]).collect();
        self.product(&mats)
    }

    pub fn psi_basis(&self, part: &SetPartition, s: &Permutation) -> Result<SparseMatrix<F::Elem>> {
        Ok(self.mul(&self.psi_partition(part)?, &self.psi_perm(s)))
    }

    /// `ψ(x)` for an element of the algebra over the same field and point.
    pub fn represent(&self, x: &Element<F::Elem>) -> Result<SparseMatrix<F::Elem>> {
        if x.n() != self.n {
            return Err(AlgebraError::SizeMismatch(x.n(), self.n));
        }
        let mut out = self.zero();
        for ((m, u), c) in x.terms() {
            out = self.add(&out, &self.scale(&self.psi_basis(m, u)?, c));
        }
        Ok(out)
    }

    /// Closed form of `ψ(F_I)` under the consistent convention: `q^{2 rank I}`
    /// on vectors whose letters are constant on the blocks of `I`, else 0.
    pub fn psi_partition_closed_form(&self, part: &SetPartition) -> SparseMatrix<F::Elem> {
        let fld = self.field();
        let c = fld.pow(&self.q2, part.rank() as i32).expect("nonnegative power");
        let blocks = part.blocks();
        let mut out = self.zero();
        for v in 0..self.dim {
            let ls = self.letters(v);
            if blocks.iter().all(|b| b.iter().all(|&x| ls[x - 1] == ls[b[0] - 1])) {
                out.cols[v].insert(v, c.clone());
            }
        }
        out
    }
}

/// Relations among the generator matrices, each an exact matrix equality.
pub fn verify_matrix_relations<F: Field>(space: &TensorSpace<F>) -> Result<RelationReport> {
    let mut report = RelationReport::new(format!("tensor ({:?})", space.convention()), space.n());
    let n = space.n();
    let one = space.identity();
    let fld = space.field().clone();
    let g = |k| space.op_g(k);
    let f = |k| space.op_f(k);
    let mut check = |name: String, holds: bool| report.push(RelationCheck::new(name, holds));
    for k in 1..n {
        let (gk, fk) = (g(k)?, f(k)?);
        check(format!("G~{k} is monomial"), gk.is_monomial());
        check(format!("F~{k} is diagonal"), fk.is_diagonal());
        let p = fld.mul(&space.point.a, &space.point.a);
        let pq2 = fld.mul(&space.pq, &space.point.q);
        let lhs = space.mul(gk, gk);
        let rhs = space.add(&space.scale(&one, &pq2), &space.scale(fk, &fld.mul(&p, &fld.sub(&p, &fld.one()))));
        check(format!("G~{k}^2 = pq^2 + p(p-1)F~{k}"), lhs == rhs);
        let pqf = space.scale(fk, &space.pq);
        check(format!("G~{k}F~{k} = pqF~{k}"), space.mul(gk, fk) == pqf);
        check(format!("F~{k}G~{k} = pqF~{k}"), space.mul(fk, gk) == pqf);
        check(format!("F~{k}^2 = q^2F~{k}"), space.mul(fk, fk) == space.scale(fk, &space.q2));
        check(format!("G~{k}G~{k}^-1 = 1"), space.mul(gk, space.op_g_inv(k)?) == one);
    }
    for i in 1..n {
        for j in 1..n {
            let (gi, gj, fi, fj) = (g(i)?, g(j)?, f(i)?, f(j)?);
            if i < j {
                check(format!("F~{i}F~{j} = F~{j}F~{i}"), space.mul(fi, fj) == space.mul(fj, fi));
            }
            if i.abs_diff(j) > 1 {
                if i < j {
                    check(format!("G~{i}G~{j} = G~{j}G~{i}"), space.mul(gi, gj) == space.mul(gj, gi));
                }
                check(format!("G~{i}F~{j} = F~{j}G~{i}"), space.mul(gi, fj) == space.mul(fj, gi));
            }
            if i.abs_diff(j) == 1 {
                check(
                    format!("G~{i}G~{j}G~{i} = G~{j}G~{i}G~{j}"),
                    space.product(&[gi, gj, gi]) == space.product(&[gj, gi, gj]),
                );
                check(
                    format!("G~{i}G~{j}F~{i} = F~{j}G~{i}G~{j}"),
                    space.product(&[gi, gj, fi]) == space.product(&[fj, gi, gj]),
                );
            }
        }
    }
    Ok(report)
}

/// Rank of the family `ψ(F_I G_s)` over all coprime pairs, each matrix
/// flattened to a vector of length `dim^2`.
pub fn faithfulness_rank<F: Field>(space: &TensorSpace<F>) -> Result<usize> {
    let ph = PartyHecke::new(space.n(), space.point.clone());
    let basis = ph.basis();
    let dim = space.dim();
    let rows: Vec<Vec<(usize, F::Elem)>> = basis
        .par_iter()
        .map(|(m, u)| {
            space
                .psi_basis(m, u)
                .map(|mat| mat.entries().map(|(i, j, v)| (i * dim + j, v.clone())).collect())
        })
        .collect::<Result<_>>()?;
    let mut ech = SparseEchelon::new(space.field().clone());
    for r in rows {
        ech.insert(r);
    }
    Ok(ech.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn idx(lower: &[usize], upper: &[usize]) -> TensorIndex {
        TensorIndex {
            lower: lower.to_vec(),
            upper: upper.to_vec(),
        }
    }

    #[test]
    fn generator_table() {
        let sp = TensorSpace::symbolic(2, 2, Convention::Consistent).unwrap();
        let g = sp.op_g(1).unwrap();
        let out = sp.apply_to_basis(g, &idx(&[1, 1], &[1, 2])).unwrap();
        assert_eq!(out, vec![(idx(&[1, 1], &[2, 1]), "a*q".parse::<Scalar>().unwrap())]);
        let f = sp.op_f(1).unwrap();
        assert!(sp.apply_to_basis(f, &idx(&[1, 2], &[1, 2])).unwrap().is_empty());
        let printed = TensorSpace::symbolic(2, 2, Convention::AsPrinted).unwrap();
        let out = printed.apply_to_basis(printed.op_f(1).unwrap(), &idx(&[1, 2], &[1, 1])).unwrap();
        assert_eq!(out, vec![(idx(&[1, 2], &[1, 1]), "q^2".parse::<Scalar>().unwrap())]);
    }

    #[test]
    fn index_round_trip() {
        let sp = TensorSpace::symbolic(3, 2, Convention::Consistent).unwrap();
        for v in 0..sp.dim() {
            assert_eq!(sp.index_of(&sp.tensor_index(v)).unwrap(), v);
        }
    }
}
