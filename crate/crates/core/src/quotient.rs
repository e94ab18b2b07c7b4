//! Two-sided ideals, quotient dimensions and the trace form of the regular
//! representation, all computed at specialised points.
//!
//! Dimensions are computed over prime fields at random points and accepted
//! when two independent points agree. Semisimplicity is certified at a
//! rational point by reducing its Gram matrix modulo a large prime: full rank
//! there forces the rational determinant to be nonzero.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, PrimeField, RationalFunctions, Rationals, Specialization, DEFAULT_PRIMES};
use crate::hecke::{Basis, Element, PartyHecke, SimpleGen};
use crate::linalg::{determinant, rank, DenseEchelon};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ideal {
    /// Generated by `F_1 F_2`.
    FF,
    /// Generated by `4T_iT_jF_i - 2T_jF_i - F_i` for `|i - j| = 1`.
    I,
    /// Generated by `4T_iT_jT_i - T_i` for `|i - j| = 1`.
    J,
}

impl FromStr for Ideal {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "FF" | "F" => Ok(Ideal::FF),
            "I" => Ok(Ideal::I),
            "J" => Ok(Ideal::J),
            _ => Err(AlgebraError::Parse(format!("unknown ideal {s:?}"))),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Largest `n` for each ideal without the long-running opt-in.
pub fn default_bound(ideal: Ideal) -> usize {
    match ideal {
        Ideal::FF => 4,
        Ideal::I | Ideal::J => 4,
    }
}

/// Hard limit regardless of opt-ins.
pub fn hard_bound(ideal: Ideal) -> usize {
    match ideal {
        Ideal::FF => 5,
        Ideal::I | Ideal::J => 4,
    }
}

/// Dense linear actions of the simple generators on the basis.
pub struct ActionTables<F: Field> {
    pub ph: PartyHecke<F>,
    pub basis: Vec<Basis>,
    pub index: HashMap<Basis, usize>,
    /// `(generator, on the left?, image of each basis element)`.
    actions: Vec<(SimpleGen, bool, Vec<Vec<(usize, F::Elem)>>)>,
}

impl<F: Field> ActionTables<F> {
    pub fn new(ph: PartyHecke<F>) -> Self {
        let basis = ph.basis();
        let index: HashMap<Basis, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let mut actions = Vec::new();
        for gen in ph.simple_generators() {
            for left in [true, false] {
                let images = basis
                    .par_iter()
                    .map(|(m, u)| {
                        let terms = match (gen, left) {
                            (SimpleGen::G(k), true) => ph.left_g_basis(k, m, u),
                            (SimpleGen::F(k), true) => ph.left_f_basis(k, m, u),
                            (SimpleGen::G(k), false) => ph.right_g_basis(m, u, k),
                            (SimpleGen::F(k), false) => ph.right_f_basis(m, u, k),
                        };
                        terms.into_iter().map(|(b, c)| (index[&b], c)).collect()
                    })
                    .collect();
                actions.push((gen, left, images));
            }
        }
        Self {
            ph,
            basis,
            index,
            actions,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn to_vector(&self, x: &Element<F::Elem>) -> Vec<F::Elem> {
        let mut v = vec![self.ph.field().zero(); self.basis.len()];
        for (b, c) in x.terms() {
            v[self.index[b]] = c.clone();
        }
        v
    }

    fn apply(&self, images: &[Vec<(usize, F::Elem)>], v: &[F::Elem]) -> Vec<F::Elem> {
        let fld = self.ph.field();
        let mut out = vec![fld.zero(); v.len()];
        for (b, c) in v.iter().enumerate() {
            if fld.is_zero(c) {
                continue;
            }
            for (t, w) in &images[b] {
                out[*t] = fld.add(&out[*t], &fld.mul(c, w));
            }
        }
        out
    }

    /// Smallest subspace containing the seeds and closed under left and
    /// right multiplication by every `G_k` and `F_k`.
    pub fn ideal_closure(&self, seeds: &[Vec<F::Elem>], cap: usize) -> Result<ClosureResult<F>> {
        let mut ech = DenseEchelon::new(self.ph.field().clone(), self.basis.len());
        let mut queue = Vec::new();
        let mut history = Vec::new();
        for s in seeds {
            if let Some(r) = ech.insert(s.clone()) {
                queue.push(r);
            }
        }
        history.push(ech.rank());
        let mut steps = 0;
        while let Some(v) = queue.pop() {
            steps += 1;
            if steps > cap {
                return Err(AlgebraError::BoundExceeded(format!("ideal closure exceeded {cap} steps")));
            }
            let images: Vec<Vec<F::Elem>> = self
                .actions
                .par_iter()
                .map(|(_, _, imgs)| self.apply(imgs, &v))
                .collect();
            for w in images {
                if let Some(r) = ech.insert(w) {
                    queue.push(r);
                    history.push(ech.rank());
                }
            }
        }
        Ok(ClosureResult { span: ech, history })
    }
}

pub struct ClosureResult<F: Field> {
    pub span: DenseEchelon<F>,
    /// Dimension after each enlargement; strictly increasing.
    pub history: Vec<usize>,
}

/// Seed elements of an ideal at a point.
pub fn ideal_seeds<F: Field>(ph: &PartyHecke<F>, ideal: Ideal) -> Result<Vec<Element<F::Elem>>> {
    let n = ph.n();
    if n < 3 {
        return Err(AlgebraError::Invalid("ideals need n >= 3".into()));
    }
    let fld = ph.field();
    let adjacent: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..n).map(move |j| (i, j)))
        .filter(|(i, j)| i.abs_diff(*j) == 1)
        .collect();
    let (four, m1, m2) = (fld.from_i64(4), fld.from_i64(-1), fld.from_i64(-2));
    match ideal {
        Ideal::FF => Ok(vec![ph.multiply(&ph.f(1)?, &ph.f(2)?)?]),
        Ideal::I => adjacent
            .iter()
            .map(|&(i, j)| {
                let ttf = ph.product(&[&ph.t(i)?, &ph.t(j)?, &ph.f(i)?])?;
                let tf = ph.multiply(&ph.t(j)?, &ph.f(i)?)?;
                Ok(ph.combine(&[(four.clone(), &ttf), (m2.clone(), &tf), (m1.clone(), &ph.f(i)?)]))
            })
            .collect(),
        Ideal::J => adjacent
            .iter()
            .map(|&(i, j)| {
                let ttt = ph.product(&[&ph.t(i)?, &ph.t(j)?, &ph.t(i)?])?;
                Ok(ph.combine(&[(four.clone(), &ttt), (m1.clone(), &ph.t(i)?)]))
            })
            .collect(),
    }
}

/// Expected quotient dimension where one is known independently.
pub fn expected_dimension(ideal: Ideal, n: usize) -> Option<usize> {
    match ideal {
        Ideal::FF => match n {
            3 => Some(15),
            4 => Some(114),
            5 => Some(1170),
            _ => None,
        },
        Ideal::I => Some((1..=n).product()),
        Ideal::J => Some(catalan(n)),
    }
}

fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointDimension {
    pub prime: u64,
    pub a: u64,
    pub q: u64,
    pub ideal_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub n: usize,
    pub ideal: Ideal,
    pub ambient_dimension: usize,
    pub points: Vec<PointDimension>,
    pub ideal_dimension: usize,
    pub quotient_dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    pub agree: bool,
    /// Number of extra point pairs drawn after a disagreement.
    pub resamples: usize,
}

impl QuotientReport {
    pub fn passes(&self) -> bool {
        self.agree && self.expected.is_none_or(|e| e == self.quotient_dimension)
    }
}

const CLOSURE_CAP: usize = 1_000_000;

/// Ideal dimension at one random point of `F_prime`.
pub fn ideal_dimension_at(n: usize, ideal: Ideal, point: Specialization<PrimeField>) -> Result<(usize, usize)> {
    let tables = ActionTables::new(PartyHecke::new(n, point));
    let seeds = ideal_seeds(&tables.ph, ideal)?;
    let vecs: Vec<_> = seeds.iter().map(|s| tables.to_vector(s)).collect();
    let closure = tables.ideal_closure(&vecs, CLOSURE_CAP)?;
    Ok((closure.span.rank(), tables.dimension()))
}

/// Quotient dimension by two-point agreement over two large primes.
pub fn quotient_dimension(ideal: Ideal, n: usize, seed: u64, allow_long: bool) -> Result<QuotientReport> {
    let bound = if allow_long { hard_bound(ideal) } else { default_bound(ideal) };
    if n < 3 || n > bound {
        return Err(AlgebraError::BoundExceeded(format!(
            "{ideal} quotient supports 3 <= n <= {bound}{}",
            if allow_long { "" } else { " without --allow-long" }
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut resamples = 0;
    loop {
        let pts: Vec<Specialization<PrimeField>> = DEFAULT_PRIMES
            .iter()
            .map(|&p| Specialization::random_prime(PrimeField::new(p).expect("prime"), &mut rng))
            .collect();
        let dims: Vec<(usize, usize)> = pts
            .par_iter()
            .map(|pt| ideal_dimension_at(n, ideal, pt.clone()))
            .collect::<Result<_>>()?;
        let agree = dims.windows(2).all(|w| w[0] == w[1]);
        if agree || resamples >= 3 {
            let ambient = dims[0].1;
            let ideal_dimension = dims[0].0;
            return Ok(QuotientReport {
                n,
                ideal,
                ambient_dimension: ambient,
                points: pts
                    .iter()
                    .zip(&dims)
                    .map(|(pt, d)| PointDimension {
                        prime: pt.field.modulus(),
                        a: pt.a,
                        q: pt.q,
                        ideal_dimension: d.0,
                    })
                    .collect(),
                ideal_dimension,
                quotient_dimension: ambient - ideal_dimension,
                expected: expected_dimension(ideal, n),
                agree,
                resamples,
            });
        }
        resamples += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceCheck {
    pub name: String,
    pub holds: bool,
}

/// Membership consequences of the quotients by `I` and `J` at `n = 3`,
/// plus the quadratic minimal polynomial of the image of `T_i` for `I`.
pub fn verify_quotient_consequences(ideal: Ideal, n: usize, seed: u64) -> Result<Vec<ConsequenceCheck>> {
    if ideal == Ideal::FF || !(3..=4).contains(&n) {
        return Err(AlgebraError::Invalid("consequences are checked for I and J with n = 3 or 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pt = Specialization::random_prime(PrimeField::new(DEFAULT_PRIMES[0])?, &mut rng);
    let tables = ActionTables::new(PartyHecke::new(n, pt));
    let ph = &tables.ph;
    let fld = *ph.field();
    let seeds = ideal_seeds(ph, ideal)?;
    let vecs: Vec<_> = seeds.iter().map(|s| tables.to_vector(s)).collect();
    let span = tables.ideal_closure(&vecs, CLOSURE_CAP)?.span;
    let member = |x: &Element<u64>| span.contains(tables.to_vector(x));
    let mut out = Vec::new();
    let mut push = |name: String, holds: bool| out.push(ConsequenceCheck { name, holds });
    for i in 1..n {
        push(format!("F{i} in ideal"), member(&ph.f(i)?));
    }
    for i in 1..n - 1 {
        let ff = ph.multiply(&ph.f(i)?, &ph.f(i + 1)?)?;
        push(format!("F{i}F{} in ideal", i + 1), member(&ff));
    }
    let four = fld.from_i64(4);
    let m1 = fld.from_i64(-1);
    for i in 1..n {
        for j in 1..n {
            if ideal == Ideal::J && i.abs_diff(j) == 1 {
                let ttt = ph.product(&[&ph.t(i)?, &ph.t(j)?, &ph.t(i)?])?;
                let x = ph.combine(&[(four, &ttt), (m1, &ph.t(i)?)]);
                push(format!("4T{i}T{j}T{i} - T{i} in ideal"), member(&x));
            }
        }
    }
    if ideal == Ideal::I {
        for i in 1..n {
            let t = ph.t(i)?;
            let t2 = ph.multiply(&t, &t)?;
            let one = ph.one();
            push(format!("T{i} not in ideal"), !member(&t));
            push(format!("T{i} - 1 not in ideal"), !member(&ph.sub(&t, &one)));
            push(format!("T{i}^2 - T{i} in ideal (degree 2 minimal polynomial)"), member(&ph.sub(&t2, &t)));
        }
    }
    Ok(out)
}

// ---- semisimplicity ----------------------------------------------------

/// All products of basis elements, indexed by basis position.
fn product_table<F: Field>(ph: &PartyHecke<F>, basis: &[Basis], index: &HashMap<Basis, usize>) -> Vec<Vec<Vec<(usize, F::Elem)>>> {
    basis
        .par_iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| {
                    ph.basis_product(x, y)
                        .into_iter()
                        .map(|(b, c)| (index[&b], c))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Gram matrix `B(x, y) = tr(L_{xy})` of the regular trace form.
pub fn gram_matrix<F: Field>(ph: &PartyHecke<F>) -> Vec<Vec<F::Elem>> {
    let fld = ph.field();
    let basis = ph.basis();
    let index: HashMap<Basis, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let table = product_table(ph, &basis, &index);
    let d = basis.len();
    // tr(L_w) = sum over z of the coefficient of z in w z.
    let traces: Vec<F::Elem> = (0..d)
        .map(|w| {
            (0..d).fold(fld.zero(), |acc, z| {
                let c = table[w][z]
                    .iter()
                    .find(|(t, _)| *t == z)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| fld.zero());
                fld.add(&acc, &c)
            })
        })
        .collect();
    (0..d)
        .map(|x| {
            (0..d)
                .map(|y| {
                    table[x][y]
                        .iter()
                        .fold(fld.zero(), |acc, (w, c)| fld.add(&acc, &fld.mul(c, &traces[*w])))
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    pub n: usize,
    pub a: String,
    pub q: String,
    pub dimension: usize,
    pub gram_rank: usize,
    /// Semisimple at this point, certified only when the rank is full.
    pub semisimple_at_point: bool,
    /// How the rank was obtained.
    pub method: String,
}

fn reduce_rational(x: &BigRational, p: u64) -> Option<u64> {
    let f = PrimeField::new(p).ok()?;
    let num = f.from_bigint(x.numer());
    let den = f.from_bigint(x.denom());
    f.inv(&den).map(|d| f.mul(&num, &d))
}

/// Gram rank at a rational point. A full rank modulo a prime certifies full
/// rank over Q; otherwise the second prime and then exact elimination decide.
pub fn semisimplicity_certificate(n: usize, a: BigRational, q: BigRational) -> Result<SemisimplicityReport> {
    if !(2..=4).contains(&n) {
        return Err(AlgebraError::BoundExceeded(format!("trace form supports 2 <= n <= 4, got {n}")));
    }
    let rational = Specialization::rational(a.clone(), q.clone())?;
    let mut report = SemisimplicityReport {
        n,
        a: a.to_string(),
        q: q.to_string(),
        dimension: 0,
        gram_rank: 0,
        semisimple_at_point: false,
        method: String::new(),
    };
    for &p in &DEFAULT_PRIMES {
        let (Some(ap), Some(qp)) = (reduce_rational(&a, p), reduce_rational(&q, p)) else {
            continue;
        };
        let Ok(pt) = Specialization::new(PrimeField::new(p)?, ap, qp) else {
            continue;
        };
        let ph = PartyHecke::new(n, pt);
        let d = ph.dimension();
        let g = gram_matrix(&ph);
        let r = rank(ph.field(), &g);
        report.dimension = d;
        if r == d {
            report.gram_rank = r;
            report.semisimple_at_point = true;
            report.method = format!("full rank modulo {p}");
            return Ok(report);
        }
    }
    let ph = PartyHecke::new(n, rational);
    let g = gram_matrix(&ph);
    let r = rank(&Rationals, &g);
    report.dimension = ph.dimension();
    report.gram_rank = r;
    report.semisimple_at_point = r == report.dimension;
    report.method = "exact elimination over Q".into();
    Ok(report)
}

/// Random rational points from the seed, skipping the degenerate values.
pub fn random_rational_points(seed: u64, count: usize) -> Vec<(BigRational, BigRational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let pt = Specialization::random_rational(&mut rng);
            (pt.a, pt.q)
        })
        .collect()
}

/// Gram determinant over Q(a, q), feasible for `n = 2`.
pub fn symbolic_gram_determinant(n: usize) -> Result<Scalar> {
    if n > 2 {
        return Err(AlgebraError::BoundExceeded("symbolic Gram determinant only for n <= 2".into()));
    }
    let ph = PartyHecke::symbolic(n);
    let g = gram_matrix(&ph);
    Ok(determinant(&RationalFunctions, &g))
}
