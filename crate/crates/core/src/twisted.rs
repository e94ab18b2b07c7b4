//! Twisted monoid algebras: the product of basis elements `x, y` is
//! `delta^e(x, y) * (xy)` for an integer-valued exponent `e` satisfying the
//! additive cocycle identity.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{join_defect, Permutation, SetPartition};
use crate::diagram::{Diagram, GeneratorKind};
use crate::error::{AlgebraError, Result};
use crate::party::PartyElement;
use crate::report::RelationReport;
use crate::field::{Field, RationalFunctions};
use crate::scalar::{write_sum, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistKind {
    /// Party elements: `q^2`-style exponent counting repeated merges where
    /// the left factor's bottom meets the right factor's top.
    Beta,
    /// Diagrams: number of closed middle components.
    Alpha,
}

impl std::str::FromStr for TwistKind {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "beta" => Ok(Self::Beta),
            "alpha" => Ok(Self::Alpha),
            _ => Err(AlgebraError::Parse(format!("unknown twist {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twisting {
    pub kind: TwistKind,
    pub delta: Scalar,
}

impl Twisting {
    pub fn new(kind: TwistKind, delta: Scalar) -> Result<Self> {
        if delta.is_zero() {
            return Err(AlgebraError::Invalid("delta must be nonzero".into()));
        }
        Ok(Self { kind, delta })
    }
}

/// A monoid whose elements can serve as a twisted algebra basis.
pub trait Carrier: Clone + Ord + Hash + fmt::Display {
    fn n(&self) -> usize;
    fn product(&self, other: &Self) -> Self;
    fn exponent(&self, other: &Self, kind: TwistKind) -> Result<usize>;
}

impl Carrier for PartyElement {
    fn n(&self) -> usize {
        PartyElement::n(self)
    }

    fn product(&self, other: &Self) -> Self {
        self.multiply(other).expect("same n")
    }

    fn exponent(&self, other: &Self, kind: TwistKind) -> Result<usize> {
        match kind {
            TwistKind::Beta => join_defect(&self.bottom(), &other.top()),
            // Uniform diagrams never strand a middle component.
            TwistKind::Alpha => Ok(self.to_diagram().concat(&other.to_diagram())?.alpha),
        }
    }
}

impl Carrier for Diagram {
    fn n(&self) -> usize {
        Diagram::n(self)
    }

    fn product(&self, other: &Self) -> Self {
        self.concat(other).expect("same n").diagram
    }

    fn exponent(&self, other: &Self, kind: TwistKind) -> Result<usize> {
        match kind {
            TwistKind::Alpha => Ok(self.concat(other)?.alpha),
            TwistKind::Beta => Err(AlgebraError::Invalid(
                "beta twisting is defined on party elements".into(),
            )),
        }
    }
}

/// Finitely supported map from carrier elements to scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedElement<C: Carrier> {
    terms: BTreeMap<C, Scalar>,
}

impl<C: Carrier> TwistedElement<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(x: C) -> Self {
        Self::term(x, Scalar::one())
    }

    pub fn term(x: C, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(x, c);
        e
    }

    pub fn add_term(&mut self, x: C, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&C, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (x, v) in &self.terms {
            out.add_term(x.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::int(-1)))
    }
}

impl<C: Carrier> fmt::Display for TwistedElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms
                .iter()
                .map(|(x, c)| {
                    let label = x.to_string();
                    // Party elements already print bracketed.
                    let label = if label.starts_with('[') { label } else { format!("[{label}]") };
                    (RationalFunctions.render_coefficient(c), label)
                }),
        )
    }
}

impl<C: Carrier> fmt::Debug for TwistedElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bilinear product with the given twisting.
pub fn twisted_multiply<C: Carrier>(
    x: &TwistedElement<C>,
    y: &TwistedElement<C>,
    t: &Twisting,
) -> Result<TwistedElement<C>> {
    let mut out = TwistedElement::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            if a.n() != b.n() {
                return Err(AlgebraError::SizeMismatch(a.n(), b.n()));
            }
            let e = a.exponent(b, t.kind)?;
            let coeff = &(ca * cb) * &t.delta.pow(e as i32)?;
            out.add_term(a.product(b), coeff);
        }
    }
    Ok(out)
}

/// Count failures of `e(x,y) + e(xy,z) = e(x,yz) + e(y,z)` over the given
/// triples; returns the number of failures and the first failing triple.
pub fn cocycle_failures<'a, C, I>(triples: I, kind: TwistKind) -> Result<(usize, Option<String>)>
where
    C: Carrier + 'a,
    I: IntoIterator<Item = (&'a C, &'a C, &'a C)>,
{
    let mut fails = 0;
    let mut first = None;
    for (x, y, z) in triples {
        let xy = x.product(y);
        let yz = y.product(z);
        let lhs = x.exponent(y, kind)? + xy.exponent(z, kind)?;
        let rhs = x.exponent(&yz, kind)? + y.exponent(z, kind)?;
        if lhs != rhs {
            fails += 1;
            if first.is_none() {
                first = Some(format!("({x}, {y}, {z}): {lhs} vs {rhs}"));
            }
        }
    }
    Ok((fails, first))
}

#[derive(Clone, Debug, Serialize)]
pub struct CocycleReport {
    pub kind: TwistKind,
    pub n: usize,
    pub triples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

/// Exhaustive check over all triples of `elements`.
pub fn cocycle_check_exhaustive<C: Carrier>(elements: &[C], kind: TwistKind) -> Result<CocycleReport> {
    let n = elements.first().map_or(0, |x| x.n());
    let triples = elements.iter().flat_map(|x| {
        elements
            .iter()
            .flat_map(move |y| elements.iter().map(move |z| (x, y, z)))
    });
    let (failures, first_failure) = cocycle_failures(triples, kind)?;
    Ok(CocycleReport {
        kind,
        n,
        triples: elements.len().pow(3),
        failures,
        first_failure,
    })
}

/// Random triples drawn uniformly from `elements`.
pub fn cocycle_check_random<C: Carrier, R: Rng>(
    elements: &[C],
    kind: TwistKind,
    trials: usize,
    rng: &mut R,
) -> Result<CocycleReport> {
    let n = elements.first().map_or(0, |x| x.n());
    let picks: Vec<(usize, usize, usize)> = (0..trials)
        .map(|_| {
            (
                rng.gen_range(0..elements.len()),
                rng.gen_range(0..elements.len()),
                rng.gen_range(0..elements.len()),
            )
        })
        .collect();
    let (failures, first_failure) = cocycle_failures(
        picks
            .iter()
            .map(|&(a, b, c)| (&elements[a], &elements[b], &elements[c])),
        kind,
    )?;
    Ok(CocycleReport {
        kind,
        n,
        triples: trials,
        failures,
        first_failure,
    })
}

/// Generators `S_i` and `F_i` of the party algebra.
pub fn party_s(n: usize, i: usize) -> Result<TwistedElement<PartyElement>> {
    Ok(TwistedElement::basis(PartyElement::from_permutation(
        Permutation::elementary(n, i)?,
    )))
}

pub fn party_f(n: usize, i: usize) -> Result<TwistedElement<PartyElement>> {
    if i == 0 || i >= n {
        return Err(AlgebraError::IndexOutOfRange(format!("F_{i} for n={n}")));
    }
    Ok(TwistedElement::basis(PartyElement::from_partition(
        SetPartition::pair(n, i, i + 1)?,
    )))
}

pub fn tl_t(n: usize, i: usize) -> Result<TwistedElement<Diagram>> {
    Ok(TwistedElement::basis(Diagram::generator(GeneratorKind::T, &[i], n)?))
}

fn product_of<C: Carrier>(
    factors: &[&TwistedElement<C>],
    t: &Twisting,
    one: TwistedElement<C>,
) -> Result<TwistedElement<C>> {
    factors
        .iter()
        .try_fold(one, |acc, f| twisted_multiply(&acc, f, t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistedInstance {
    /// Party algebra with generators `S_i`, `F_i` and beta twisting.
    Party,
    /// The subalgebra spanned by set partitions, generated by the `F_i`.
    SetPartitions,
    /// Temperley-Lieb algebra: tangles with alpha twisting.
    TemperleyLieb,
}

/// Check the standard presentation of an instance at parameter `delta`.
pub fn verify_presentation(instance: TwistedInstance, n: usize, delta: &Scalar) -> Result<RelationReport> {
    let mut report = RelationReport::new(format!("{instance:?}"), n);
    let idx: Vec<usize> = (1..n).collect();
    let near = |i: usize, j: usize| i.abs_diff(j) == 1;
    let far = |i: usize, j: usize| i.abs_diff(j) > 1;
    match instance {
        TwistedInstance::Party | TwistedInstance::SetPartitions => {
            let t = Twisting::new(TwistKind::Beta, delta.clone())?;
            let one = TwistedElement::basis(PartyElement::identity(n));
            let s: Vec<_> = idx.iter().map(|&i| party_s(n, i)).collect::<Result<_>>()?;
            let f: Vec<_> = idx.iter().map(|&i| party_f(n, i)).collect::<Result<_>>()?;
            let m = |xs: &[&TwistedElement<PartyElement>]| product_of(xs, &t, one.clone());
            for (a, &i) in idx.iter().enumerate() {
                report.check(format!("F{i}^2 = delta F{i}"), m(&[&f[a], &f[a]])? == f[a].scale(delta));
                for (b, &j) in idx.iter().enumerate() {
                    if i < j {
                        report.check(format!("F{i}F{j} = F{j}F{i}"), m(&[&f[a], &f[b]])? == m(&[&f[b], &f[a]])?);
                    }
                }
            }
            if instance == TwistedInstance::Party {
                for (a, &i) in idx.iter().enumerate() {
                    report.check(format!("S{i}^2 = 1"), m(&[&s[a], &s[a]])? == one);
                    let sf = m(&[&s[a], &f[a]])?;
                    let fs = m(&[&f[a], &s[a]])?;
                    report.check(format!("S{i}F{i} = F{i}S{i} = F{i}"), sf == f[a] && fs == f[a]);
                    for (b, &j) in idx.iter().enumerate() {
                        if near(i, j) {
                            report.check(
                                format!("S{i}S{j}S{i} = S{j}S{i}S{j}"),
                                m(&[&s[a], &s[b], &s[a]])? == m(&[&s[b], &s[a], &s[b]])?,
                            );
                            report.check(
                                format!("S{i}S{j}F{i} = F{j}S{i}S{j}"),
                                m(&[&s[a], &s[b], &f[a]])? == m(&[&f[b], &s[a], &s[b]])?,
                            );
                        }
                        if far(i, j) {
                            report.check(format!("S{i}S{j} = S{j}S{i}"), m(&[&s[a], &s[b]])? == m(&[&s[b], &s[a]])?);
                            report.check(format!("S{i}F{j} = F{j}S{i}"), m(&[&s[a], &f[b]])? == m(&[&f[b], &s[a]])?);
                        }
                    }
                }
            }
        }
        TwistedInstance::TemperleyLieb => {
            let t = Twisting::new(TwistKind::Alpha, delta.clone())?;
            let one = TwistedElement::basis(Diagram::identity(n));
            let g: Vec<_> = idx.iter().map(|&i| tl_t(n, i)).collect::<Result<_>>()?;
            let m = |xs: &[&TwistedElement<Diagram>]| product_of(xs, &t, one.clone());
            for (a, &i) in idx.iter().enumerate() {
                report.check(format!("t{i}^2 = delta t{i}"), m(&[&g[a], &g[a]])? == g[a].scale(delta));
                for (b, &j) in idx.iter().enumerate() {
                    if near(i, j) {
                        report.check(format!("t{i}t{j}t{i} = t{i}"), m(&[&g[a], &g[b], &g[a]])? == g[a]);
                    }
                    if far(i, j) {
                        report.check(format!("t{i}t{j} = t{j}t{i}"), m(&[&g[a], &g[b]])? == m(&[&g[b], &g[a]])?);
                    }
                }
            }
        }
    }
    Ok(report)
}
