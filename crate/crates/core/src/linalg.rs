//! Exact linear algebra over a [`Field`]: incremental echelon forms for
//! sparse and dense rows, rank, and determinants.

use std::collections::BTreeMap;

use crate::field::Field;

/// Incremental row echelon form over sparse rows, keyed by leading column.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    field: F,
    rows: BTreeMap<usize, BTreeMap<usize, F::Elem>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F) -> Self {
        Self {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored pivots; the remainder is returned.
    pub fn reduce(&self, row: impl IntoIterator<Item = (usize, F::Elem)>) -> BTreeMap<usize, F::Elem> {
        let fld = &self.field;
        let mut work: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (c, v) in row {
            if fld.is_zero(&v) {
                continue;
            }
            let s = match work.remove(&c) {
                Some(old) => fld.add(&old, &v),
                None => v,
            };
            if !fld.is_zero(&s) {
                work.insert(c, s);
            }
        }
        let mut out = BTreeMap::new();
        while let Some((c, v)) = work.pop_first() {
            match self.rows.get(&c) {
                None => {
                    out.insert(c, v);
                }
                Some(pivot) => {
                    // Pivot rows are normalised to a leading 1.
                    for (pc, pv) in pivot.iter().skip(1) {
                        let s = fld.sub(work.get(pc).unwrap_or(&fld.zero()), &fld.mul(&v, pv));
                        if fld.is_zero(&s) {
                            work.remove(pc);
                        } else {
                            work.insert(*pc, s);
                        }
                    }
                }
            }
        }
        out
    }

    /// Add a row; returns whether it enlarged the span.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, F::Elem)>) -> bool {
        let rem = self.reduce(row);
        let Some((&lead, lv)) = rem.iter().next() else {
            return false;
        };
        let inv = self.field.inv(lv).expect("nonzero leading entry");
        let normalised = rem
            .iter()
            .map(|(c, v)| (*c, self.field.mul(v, &inv)))
            .collect();
        self.rows.insert(lead, normalised);
        true
    }
}

/// Incremental echelon form over dense rows of fixed width.
#[derive(Clone, Debug)]
pub struct DenseEchelon<F: Field> {
    field: F,
    width: usize,
    /// Pivot column and row, each row normalised to 1 at its pivot.
    rows: Vec<(usize, Vec<F::Elem>)>,
    pivot_of: Vec<Option<usize>>,
}

impl<F: Field> DenseEchelon<F> {
    pub fn new(field: F, width: usize) -> Self {
        Self {
            field,
            width,
            rows: Vec::new(),
            pivot_of: vec![None; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<F::Elem>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Remainder of `v` modulo the span, eliminated column by column.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.width, "row width");
        let fld = &self.field;
        for c in 0..self.width {
            if fld.is_zero(&v[c]) {
                continue;
            }
            if let Some(r) = self.pivot_of[c] {
                let factor = v[c].clone();
                let row = &self.rows[r].1;
                for k in c..self.width {
                    if !fld.is_zero(&row[k]) {
                        v[k] = fld.sub(&v[k], &fld.mul(&factor, &row[k]));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<F::Elem>) -> bool {
        let r = self.reduce(v);
        r.iter().all(|x| self.field.is_zero(x))
    }

    /// Add a row; returns the normalised new basis row if the span grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> Option<Vec<F::Elem>> {
        let fld = &self.field;
        let r = self.reduce(v);
        let lead = r.iter().position(|x| !fld.is_zero(x))?;
        let inv = fld.inv(&r[lead]).expect("nonzero");
        let r: Vec<F::Elem> = r.iter().map(|x| fld.mul(x, &inv)).collect();
        self.pivot_of[lead] = Some(self.rows.len());
        self.rows.push((lead, r.clone()));
        Some(r)
    }
}

/// Rank of a dense matrix by Gaussian elimination.
pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut ech = DenseEchelon::new(field.clone(), first.len());
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rank()
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !field.is_zero(&a[r][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]).expect("nonzero pivot");
        for r in c + 1..n {
            if field.is_zero(&a[r][c]) {
                continue;
            }
            let factor = field.mul(&a[r][c], &inv);
            for k in c..n {
                let t = field.mul(&factor, &a[c][k]);
                a[r][k] = field.sub(&a[r][k], &t);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, DEFAULT_PRIMES};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn dense_rank_and_membership() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rank(&Rationals, &rows), 2);
        let mut e = DenseEchelon::new(Rationals, 3);
        for r in &rows {
            e.insert(r.clone());
        }
        assert!(e.contains(vec![q(1), q(3), q(4)]));
        assert!(!e.contains(vec![q(0), q(0), q(1)]));
    }

    #[test]
    fn sparse_matches_dense() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let mut s = SparseEchelon::new(f);
        assert!(s.insert([(0, 1), (5, 3)]));
        assert!(s.insert([(5, 2), (7, 1)]));
        assert!(!s.insert([(0, 2), (5, 8), (7, 1)]));
        assert!(s.insert([(7, 1)]));
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn determinant_of_small_matrix() {
        let m = vec![vec![q(2), q(1)], vec![q(7), q(4)]];
        assert_eq!(determinant(&Rationals, &m), q(1));
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(determinant(&Rationals, &sing), q(0));
    }
}
