//! Integer polynomials in the two variables `a` and `q`.
//!
//! Terms are stored sparsely, keyed by `(deg_a, deg_q)`. The gcd used to
//! reduce fractions works recursively: a bivariate polynomial is viewed as a
//! polynomial in `a` whose coefficients are univariate polynomials in `q`,
//! and both layers run a primitive pseudo-remainder sequence.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(deg_a, deg_q)`.
pub type Monomial = (u32, u32);

/// Degree-lexicographic comparison: total degree first, then the `a` degree.
pub fn deglex(x: &Monomial, y: &Monomial) -> Ordering {
    (x.0 + x.1, x.0).cmp(&(y.0 + y.1, y.0))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, deg_a: u32, deg_q: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_a, deg_q), c);
        }
        Self { terms }
    }

    pub fn var_a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn var_q() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending monomial key order `(deg_a, deg_q)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms sorted from the deglex-largest monomial down.
    pub fn terms_deglex_desc(&self) -> Vec<(Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        v.sort_by(|x, y| deglex(&y.0, &x.0));
        v
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms
            .iter()
            .max_by(|x, y| deglex(x.0, y.0))
            .map(|(m, c)| (*m, c))
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Integer gcd of all coefficients (non-negative).
    pub fn integer_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn min_degrees(&self) -> Monomial {
        self.terms.keys().fold((u32::MAX, u32::MAX), |acc, m| {
            (acc.0.min(m.0), acc.1.min(m.1))
        })
    }

    fn shift_down(&self, by: Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ((m.0 - by.0, m.1 - by.1), c.clone()))
                .collect(),
        }
    }

    fn div_integer(&self, c: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluate by Horner-free direct summation with caller-provided powers.
    pub fn evaluate<T, F>(&self, zero: T, mut eval_term: F) -> T
    where
        F: FnMut(T, &BigInt, Monomial) -> T,
    {
        self.terms
            .iter()
            .fold(zero, |acc, (m, c)| eval_term(acc, c, *m))
    }

    fn to_recursive(&self) -> BPoly {
        let deg_a = self.terms.keys().map(|m| m.0).max().unwrap_or(0) as usize;
        let mut out = vec![UPoly::zero(); deg_a + 1];
        for (m, c) in &self.terms {
            let u = &mut out[m.0 as usize];
            let j = m.1 as usize;
            if u.0.len() <= j {
                u.0.resize(j + 1, BigInt::zero());
            }
            u.0[j] += c;
        }
        let mut b = BPoly(out);
        b.trim();
        b
    }

    fn from_recursive(b: &BPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (i, u) in b.0.iter().enumerate() {
            for (j, c) in u.0.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        Self { terms }
    }

    /// Greatest common divisor, normalised so its deglex-leading coefficient
    /// is positive. `gcd(0, 0)` is `0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        if let Some(g) = self.monomial_gcd(other) {
            return g;
        }
        let g = BPoly::gcd(&self.to_recursive(), &other.to_recursive());
        Self::from_recursive(&g).normalize_sign()
    }

    // Fast path when either side is a single term.
    fn monomial_gcd(&self, other: &Self) -> Option<Self> {
        let (mono, poly) = match (self.as_monomial(), other.as_monomial()) {
            (Some(m), _) => (m, other),
            (None, Some(m)) => (m, self),
            _ => return None,
        };
        let ((ma, mq), c) = mono;
        let content = poly.integer_content().gcd(c);
        let (pa, pq) = poly.min_degrees();
        Some(Self::monomial(content, ma.min(pa), mq.min(pq)))
    }

    fn normalize_sign(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Exact division; returns `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.as_monomial() {
            let mut terms = BTreeMap::new();
            for (t, x) in &self.terms {
                if t.0 < m.0 || t.1 < m.1 {
                    return None;
                }
                let (quo, rem) = x.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                terms.insert((t.0 - m.0, t.1 - m.1), quo);
            }
            return Some(Self { terms });
        }
        BPoly::exact_div(&self.to_recursive(), &divisor.to_recursive())
            .map(|b| Self::from_recursive(&b))
    }

    /// Divide out the gcd and any common monomial/integer factor, returning
    /// `(self / g, other / g)`.
    pub fn cancel(&self, other: &Self) -> (Self, Self) {
        let g = self.gcd(other);
        if g.is_one() || g.is_zero() {
            return (self.clone(), other.clone());
        }
        if let Some((m, c)) = g.as_monomial() {
            return (
                self.shift_down(m).div_integer(c),
                other.shift_down(m).div_integer(c),
            );
        }
        (
            self.exact_div(&g).expect("gcd divides"),
            other.exact_div(&g).expect("gcd divides"),
        )
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_monomial(m: Monomial) -> String {
    let mut parts = Vec::new();
    match m.0 {
        0 => {}
        1 => parts.push("a".to_string()),
        d => parts.push(format!("a^{d}")),
    }
    match m.1 {
        0 => {}
        1 => parts.push("q".to_string()),
        d => parts.push(format!("q^{d}")),
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms_deglex_desc().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term((m1.0 + m2.0, m1.1 + m2.1), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (in q), and polynomials in a over Z[q].

#[derive(Clone, Debug, PartialEq)]
struct UPoly(Vec<BigInt>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn constant(c: BigInt) -> Self {
        let mut u = UPoly(vec![c]);
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("nonzero")
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar(&self, c: &BigInt) -> Self {
        UPoly(self.0.iter().map(|x| x / c).collect())
    }

    fn scale(&self, c: &BigInt) -> Self {
        let mut u = UPoly(self.0.iter().map(|x| x * c).collect());
        u.trim();
        u
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] += c;
        }
        let mut u = UPoly(v);
        u.trim();
        u
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-BigInt::one()))
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        let mut u = UPoly(v);
        u.trim();
        u
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let ld = d.lead().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let lr = r.lead().clone();
            r = r.scale(&ld).sub(&d.scale(&lr).shift(k));
        }
        r
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut r = self.clone();
        if r.is_zero() {
            return Some(Self::zero());
        }
        if r.degree() < d.degree() {
            return None;
        }
        let mut q = vec![BigInt::zero(); r.degree() - d.degree() + 1];
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let (c, rem) = r.lead().div_rem(d.lead());
            if !rem.is_zero() {
                return None;
            }
            q[k] = c.clone();
            r = r.sub(&d.scale(&c).shift(k));
        }
        if !r.is_zero() {
            return None;
        }
        let mut u = UPoly(q);
        u.trim();
        Some(u)
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive().scale(&b.content());
        }
        if b.is_zero() {
            return a.primitive().scale(&a.content());
        }
        let c = a.content().gcd(&b.content());
        let (mut x, mut y) = (a.primitive(), b.primitive());
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y);
            x = y;
            y = r.primitive();
        }
        x.primitive().scale(&c)
    }
}

#[derive(Clone, Debug)]
struct BPoly(Vec<UPoly>);

impl BPoly {
    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &UPoly {
        self.0.last().expect("nonzero")
    }

    fn content(&self) -> UPoly {
        self.0
            .iter()
            .fold(UPoly::zero(), |g, c| UPoly::gcd(&g, c))
    }

    fn div_coeff(&self, c: &UPoly) -> Self {
        BPoly(
            self.0
                .iter()
                .map(|x| x.exact_div(c).expect("content divides"))
                .collect(),
        )
    }

    fn mul_coeff(&self, c: &UPoly) -> Self {
        let mut b = BPoly(self.0.iter().map(|x| x.mul(c)).collect());
        b.trim();
        b
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let mut p = self.div_coeff(&c);
        if p.lead().lead().is_negative() {
            p = p.mul_coeff(&UPoly::constant(-BigInt::one()));
        }
        p
    }

    fn sub_shifted(&self, o: &Self, k: usize) -> Self {
        let n = self.0.len().max(o.0.len() + k);
        let mut v = vec![UPoly::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] = c.clone();
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i + k] = v[i + k].sub(c);
        }
        let mut b = BPoly(v);
        b.trim();
        b
    }

    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let ld = d.lead().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let lr = r.lead().clone();
            r = r.mul_coeff(&ld).sub_shifted(&d.mul_coeff(&lr), k);
        }
        r
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        let c = UPoly::gcd(&a.content(), &b.content());
        let (mut x, mut y) = (a.primitive(), b.primitive());
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y);
            x = y;
            y = r.primitive();
        }
        x.primitive().mul_coeff(&c)
    }

    fn exact_div(a: &Self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut r = a.clone();
        if r.is_zero() {
            return Some(r);
        }
        if r.degree() < d.degree() {
            return None;
        }
        let mut q = vec![UPoly::zero(); r.degree() - d.degree() + 1];
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let c = r.lead().exact_div(d.lead())?;
            r = r.sub_shifted(&d.mul_coeff(&c), k);
            q[k] = c;
        }
        if !r.is_zero() {
            return None;
        }
        let mut b = BPoly(q);
        b.trim();
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Polynomial {
        Polynomial::var_a()
    }
    fn q() -> Polynomial {
        Polynomial::var_q()
    }
    fn c(x: i64) -> Polynomial {
        Polynomial::constant(x)
    }

    #[test]
    fn gcd_of_factored_products() {
        let f1 = &(&a() + &q()) * &(&a() - &c(1));
        let f2 = &(&a() + &q()) * &(&(&q() * &q()) + &c(3));
        let g = f1.gcd(&f2);
        assert_eq!(g, &a() + &q());
    }

    #[test]
    fn gcd_with_integer_content() {
        let f1 = &c(6) * &(&a() - &c(1));
        let f2 = &c(4) * &(&(&a() * &a()) - &c(1));
        assert_eq!(f1.gcd(&f2), &c(2) * &(&a() - &c(1)));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let f = &(&a() * &a()) - &c(1);
        assert_eq!(f.exact_div(&(&a() - &c(1))), Some(&a() + &c(1)));
        assert_eq!(f.exact_div(&(&a() - &c(2))), None);
    }

    #[test]
    fn display_is_deglex_descending() {
        let p = &(&(&a().pow(4) - &a().pow(2)) + &(&a().pow(2) * &q().pow(2))) + &c(0);
        assert_eq!(p.to_string(), "a^4 + a^2*q^2 - a^2");
    }
}
