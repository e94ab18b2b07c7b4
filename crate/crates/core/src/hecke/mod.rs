//! The Party-Hecke algebra in the basis `F_I G_s` indexed by coprime pairs.
//!
//! Everything is driven by right multiplication of a basis element by a
//! single generator. Writing `F_M G_u` for the basis element of `(M, u)`:
//!
//! * `F_M G_u G_k` is `F_M G_{u s_k}` when `u(k) < u(k+1)`; if `u(k)` and
//!   `u(k+1)` share a block of `M` the new inversion is absorbed and the
//!   result is `pq F_M G_u`.
//! * otherwise, with `u = u' s_k`, the quadratic relation gives
//!   `pq^2 F_M G_{u'} + p(p-1) F_M F_{a,b} G_{u'}` where `{a, b}` are the
//!   values `u'(k), u'(k+1)`.
//! * `F_M F_J = q^{2 d} F_{M v J}` where `d` is the join defect, because
//!   `F_I` is normalised as the product over the standard arcs of `I`.
//!
//! A product `F_N G_w` with `(N, w)` not coprime is expanded by starting
//! from `F_N` and multiplying on the right by a reduced word for `w`; this
//! normal form can have several terms and is memoised.

mod suites;
mod words;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

pub use suites::{verify_suite, Suite, VirtualPoint};
pub use words::{GeneratorWord, Letter};

use crate::combinatorics::{join_defect, Permutation, SetPartition};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, RationalFunctions, Specialization};
use crate::party::{coprime_pairs, is_coprime, parse_pair, PartyElement};
use crate::scalar::{write_sum, Scalar};

/// A coprime pair `(partition, permutation)` naming the basis element `F_I G_s`.
pub type Basis = (SetPartition, Permutation);

type Terms<E> = Vec<(Basis, E)>;

/// Finitely supported linear combination of basis elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<E> {
    n: usize,
    terms: BTreeMap<Basis, E>,
}

/// Elements with exact coefficients in Q(a, q).
pub type AlgebraElement = Element<Scalar>;

impl<E: Clone> Element<E> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &E)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &Basis) -> Option<&E> {
        self.terms.get(b)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().map(|((m, u), c)| {
                (RationalFunctions.render_coefficient(c), format!("[{m}][{u}]"))
            }),
        )
    }
}

impl<E: fmt::Debug> fmt::Debug for Element<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|((m, u), c)| (format!("[{m}][{u}]"), c)))
            .finish()
    }
}

/// Cached structure constants in the target field.
#[derive(Clone, Debug)]
struct Constants<E> {
    pq: E,
    pq2: E,
    /// `p(p - 1)`.
    deform: E,
    q2: E,
}

/// The algebra `P_n(p, q)` over a field, at a point `(a, q)` of that field.
pub struct PartyHecke<F: Field> {
    n: usize,
    point: Specialization<F>,
    c: Constants<F::Elem>,
    nf_cache: RwLock<HashMap<Basis, Arc<Terms<F::Elem>>>>,
}

impl PartyHecke<RationalFunctions> {
    /// The generic algebra over Q(a, q).
    pub fn symbolic(n: usize) -> Self {
        Self::new(n, Specialization::generic())
    }
}

impl<F: Field> PartyHecke<F> {
    pub fn new(n: usize, point: Specialization<F>) -> Self {
        let fld = &point.field;
        let p = fld.mul(&point.a, &point.a);
        let pq = fld.mul(&p, &point.q);
        let q2 = fld.mul(&point.q, &point.q);
        let c = Constants {
            pq2: fld.mul(&pq, &point.q),
            deform: fld.mul(&p, &fld.sub(&p, &fld.one())),
            pq,
            q2,
        };
        Self {
            n,
            point,
            c,
            nf_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.point.field
    }

    pub fn point(&self) -> &Specialization<F> {
        &self.point
    }

    /// Coprime pairs in canonical order; their count is the dimension.
    pub fn basis(&self) -> Vec<Basis> {
        coprime_pairs(self.n)
            .expect("n within enumeration bound")
            .into_iter()
            .map(PartyElement::into_parts)
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.basis().len()
    }

    // ---- element arithmetic -------------------------------------------

    pub fn zero(&self) -> Element<F::Elem> {
        Element::zero(self.n)
    }

    pub fn one(&self) -> Element<F::Elem> {
        self.basis_element(SetPartition::singletons(self.n), Permutation::identity(self.n))
    }

    fn basis_element(&self, m: SetPartition, u: Permutation) -> Element<F::Elem> {
        let mut e = self.zero();
        e.terms.insert((m, u), self.field().one());
        e
    }

    /// `c * F_M G_u`, reduced to the coprime basis when needed.
    pub fn pair(&self, m: &SetPartition, u: &Permutation, c: &F::Elem) -> Result<Element<F::Elem>> {
        if m.n() != self.n || u.n() != self.n {
            return Err(AlgebraError::SizeMismatch(m.n(), self.n));
        }
        let mut out = self.zero();
        for (b, v) in self.nf(m, u).iter() {
            self.acc(&mut out.terms, b.clone(), self.field().mul(v, c));
        }
        Ok(out)
    }

    pub fn scalar(&self, c: &F::Elem) -> Element<F::Elem> {
        self.scale(&self.one(), c)
    }

    fn acc(&self, terms: &mut BTreeMap<Basis, F::Elem>, b: Basis, c: F::Elem) {
        let fld = self.field();
        if fld.is_zero(&c) {
            return;
        }
        match terms.get_mut(&b) {
            Some(v) => {
                let s = fld.add(v, &c);
                if fld.is_zero(&s) {
                    terms.remove(&b);
                } else {
                    *v = s;
                }
            }
            None => {
                terms.insert(b, c);
            }
        }
    }

    pub fn add(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        let mut out = x.clone();
        for (b, c) in &y.terms {
            self.acc(&mut out.terms, b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        let mut out = x.clone();
        for (b, c) in &y.terms {
            self.acc(&mut out.terms, b.clone(), self.field().neg(c));
        }
        out
    }

    pub fn scale(&self, x: &Element<F::Elem>, c: &F::Elem) -> Element<F::Elem> {
        let fld = self.field();
        let mut out = self.zero();
        if fld.is_zero(c) {
            return out;
        }
        for (b, v) in &x.terms {
            out.terms.insert(b.clone(), fld.mul(v, c));
        }
        out
    }

    /// Linear combination `sum c_i x_i`.
    pub fn combine(&self, parts: &[(F::Elem, &Element<F::Elem>)]) -> Element<F::Elem> {
        let mut out = self.zero();
        for (c, x) in parts {
            for (b, v) in &x.terms {
                self.acc(&mut out.terms, b.clone(), self.field().mul(c, v));
            }
        }
        out
    }

    // ---- generator actions on basis elements --------------------------

    /// `F_N G_w` expanded in the coprime basis.
    pub fn nf(&self, m: &SetPartition, w: &Permutation) -> Arc<Terms<F::Elem>> {
        if is_coprime(m, w) {
            return Arc::new(vec![((m.clone(), w.clone()), self.field().one())]);
        }
        let key = (m.clone(), w.clone());
        if let Some(hit) = self.nf_cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let mut cur: BTreeMap<Basis, F::Elem> = BTreeMap::new();
        cur.insert((m.clone(), Permutation::identity(self.n)), self.field().one());
        for k in w.reduced_word() {
            cur = self.right_g_terms(&cur, k);
        }
        let result = Arc::new(cur.into_iter().collect::<Vec<_>>());
        self.nf_cache
            .write()
            .expect("cache lock")
            .insert(key, result.clone());
        result
    }

    fn right_g_terms(&self, cur: &BTreeMap<Basis, F::Elem>, k: usize) -> BTreeMap<Basis, F::Elem> {
        let fld = self.field();
        let mut next = BTreeMap::new();
        for ((m, u), c) in cur {
            for (b, v) in self.right_g_basis(m, u, k) {
                self.acc(&mut next, b, fld.mul(c, &v));
            }
        }
        next
    }

    /// `F_M G_u * G_k` for a coprime pair `(M, u)`.
    pub fn right_g_basis(&self, m: &SetPartition, u: &Permutation, k: usize) -> Terms<F::Elem> {
        let fld = self.field();
        if !u.has_right_descent(k) {
            let (a, b) = (u.apply(k), u.apply(k + 1));
            if m.same_block(a, b) {
                return vec![((m.clone(), u.clone()), self.c.pq.clone())];
            }
            return vec![((m.clone(), u.mul_elementary_right(k)), fld.one())];
        }
        let short = u.mul_elementary_right(k);
        let (a, b) = (short.apply(k), short.apply(k + 1));
        let mut out: BTreeMap<Basis, F::Elem> = BTreeMap::new();
        out.insert((m.clone(), short.clone()), self.c.pq2.clone());
        let mut coeff = self.c.deform.clone();
        if m.same_block(a, b) {
            coeff = fld.mul(&coeff, &self.c.q2);
        }
        for (bb, v) in self.nf(&m.join_pair(a, b), &short).iter() {
            self.acc(&mut out, bb.clone(), fld.mul(&coeff, v));
        }
        out.into_iter().collect()
    }

    /// `F_M G_u * F_k`.
    pub fn right_f_basis(&self, m: &SetPartition, u: &Permutation, k: usize) -> Terms<F::Elem> {
        self.right_f_pair_basis(m, u, k, k + 1)
    }

    /// `F_M G_u * F_{i,j}`.
    pub fn right_f_pair_basis(&self, m: &SetPartition, u: &Permutation, i: usize, j: usize) -> Terms<F::Elem> {
        let fld = self.field();
        let (a, b) = (u.apply(i), u.apply(j));
        let coeff = if m.same_block(a, b) {
            self.c.q2.clone()
        } else {
            fld.one()
        };
        self.nf(&m.join_pair(a, b), u)
            .iter()
            .map(|(bb, v)| (bb.clone(), fld.mul(&coeff, v)))
            .collect()
    }

    /// `G_k * F_M G_u`.
    pub fn left_g_basis(&self, k: usize, m: &SetPartition, u: &Permutation) -> Terms<F::Elem> {
        let fld = self.field();
        let sk = Permutation::elementary(self.n, k).expect("index in range");
        let moved = m.act(&sk).expect("same n");
        if !u.has_left_descent(k) {
            return self.nf(&moved, &u.mul_elementary_left(k)).to_vec();
        }
        let short = u.mul_elementary_left(k);
        let mut out: BTreeMap<Basis, F::Elem> = BTreeMap::new();
        for (b, v) in self.nf(&moved, &short).iter() {
            self.acc(&mut out, b.clone(), fld.mul(&self.c.pq2, v));
        }
        let mut coeff = self.c.deform.clone();
        if moved.same_block(k, k + 1) {
            coeff = fld.mul(&coeff, &self.c.q2);
        }
        for (b, v) in self.nf(&moved.join_pair(k, k + 1), &short).iter() {
            self.acc(&mut out, b.clone(), fld.mul(&coeff, v));
        }
        out.into_iter().collect()
    }

    /// `F_k * F_M G_u`.
    pub fn left_f_basis(&self, k: usize, m: &SetPartition, u: &Permutation) -> Terms<F::Elem> {
        let fld = self.field();
        let coeff = if m.same_block(k, k + 1) {
            self.c.q2.clone()
        } else {
            fld.one()
        };
        self.nf(&m.join_pair(k, k + 1), u)
            .iter()
            .map(|(b, v)| (b.clone(), fld.mul(&coeff, v)))
            .collect()
    }

    /// Product of two basis elements:
    /// `F_I G_v F_J G_w = q^{2 d(I, v(J))} F_{I v v(J)} G_v G_w`.
    pub fn basis_product(&self, x: &Basis, y: &Basis) -> Terms<F::Elem> {
        let fld = self.field();
        let (i, v) = x;
        let (j, w) = y;
        let moved = j.act(v).expect("same n");
        let d = join_defect(i, &moved).expect("same n");
        let coeff = fld.pow(&self.c.q2, d as i32).expect("nonnegative power");
        let mut cur: BTreeMap<Basis, F::Elem> = BTreeMap::new();
        for (b, c) in self.nf(&i.join(&moved).expect("same n"), v).iter() {
            self.acc(&mut cur, b.clone(), fld.mul(&coeff, c));
        }
        for k in w.reduced_word() {
            cur = self.right_g_terms(&cur, k);
        }
        cur.into_iter().collect()
    }

    pub fn multiply(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Result<Element<F::Elem>> {
        if x.n != y.n || x.n != self.n {
            return Err(AlgebraError::SizeMismatch(x.n, y.n));
        }
        let fld = self.field();
        let mut out = self.zero();
        for (bx, cx) in &x.terms {
            for (by, cy) in &y.terms {
                let c = fld.mul(cx, cy);
                for (b, v) in self.basis_product(bx, by) {
                    self.acc(&mut out.terms, b, fld.mul(&c, &v));
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right product of several elements.
    pub fn product(&self, factors: &[&Element<F::Elem>]) -> Result<Element<F::Elem>> {
        factors
            .iter()
            .try_fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    /// `x * G_k` or `x * F_k` computed by the direct generator action.
    pub fn right_mul_gen(&self, x: &Element<F::Elem>, gen: SimpleGen) -> Element<F::Elem> {
        let fld = self.field();
        let mut out = self.zero();
        for ((m, u), c) in &x.terms {
            let terms = match gen {
                SimpleGen::G(k) => self.right_g_basis(m, u, k),
                SimpleGen::F(k) => self.right_f_basis(m, u, k),
            };
            for (b, v) in terms {
                self.acc(&mut out.terms, b, fld.mul(c, &v));
            }
        }
        out
    }

    /// `G_k * x` or `F_k * x` computed by the direct generator action.
    pub fn left_mul_gen(&self, gen: SimpleGen, x: &Element<F::Elem>) -> Element<F::Elem> {
        let fld = self.field();
        let mut out = self.zero();
        for ((m, u), c) in &x.terms {
            let terms = match gen {
                SimpleGen::G(k) => self.left_g_basis(k, m, u),
                SimpleGen::F(k) => self.left_f_basis(k, m, u),
            };
            for (b, v) in terms {
                self.acc(&mut out.terms, b, fld.mul(c, &v));
            }
        }
        out
    }

    /// Generators `G_1, F_1, ..., G_{n-1}, F_{n-1}`.
    pub fn simple_generators(&self) -> Vec<SimpleGen> {
        (1..self.n)
            .flat_map(|k| [SimpleGen::G(k), SimpleGen::F(k)])
            .collect()
    }

    // ---- named elements ------------------------------------------------

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            Err(AlgebraError::IndexOutOfRange(format!("generator {i} for n={}", self.n)))
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i >= j || j > self.n {
            Err(AlgebraError::IndexOutOfRange(format!("pair ({i},{j}) for n={}", self.n)))
        } else {
            Ok(())
        }
    }

    pub fn g(&self, i: usize) -> Result<Element<F::Elem>> {
        self.check_index(i)?;
        Ok(self.basis_element(SetPartition::singletons(self.n), Permutation::elementary(self.n, i)?))
    }

    pub fn f(&self, i: usize) -> Result<Element<F::Elem>> {
        self.check_index(i)?;
        Ok(self.basis_element(SetPartition::pair(self.n, i, i + 1)?, Permutation::identity(self.n)))
    }

    /// `p^{-1} q^{-2} G_i + q^{-3} (p^{-1} - 1) F_i`.
    pub fn g_inv(&self, i: usize) -> Result<Element<F::Elem>> {
        let fld = self.field();
        let pt = &self.point;
        let p = fld.mul(&pt.a, &pt.a);
        let pinv = fld.inv(&p).ok_or(AlgebraError::DegenerateParameters)?;
        let c1 = fld.mul(&pinv, &fld.pow(&pt.q, -2).ok_or(AlgebraError::DegenerateParameters)?);
        let c2 = fld.mul(
            &fld.pow(&pt.q, -3).ok_or(AlgebraError::DegenerateParameters)?,
            &fld.sub(&pinv, &fld.one()),
        );
        Ok(self.combine(&[(c1, &self.g(i)?), (c2, &self.f(i)?)]))
    }

    /// `H_i = (q a)^{-1} G_i`.
    pub fn h(&self, i: usize) -> Result<Element<F::Elem>> {
        let fld = self.field();
        let qa = fld.mul(&self.point.q, &self.point.a);
        let c = fld.inv(&qa).ok_or(AlgebraError::DegenerateParameters)?;
        Ok(self.scale(&self.g(i)?, &c))
    }

    /// `T_i = (H_i + q^{-2}(1 - a) F_i + 1) / 2`.
    pub fn t(&self, i: usize) -> Result<Element<F::Elem>> {
        let fld = self.field();
        let pt = &self.point;
        let half = fld.inv(&fld.from_i64(2)).ok_or(AlgebraError::DegenerateParameters)?;
        let cf = fld.mul(
            &fld.pow(&pt.q, -2).ok_or(AlgebraError::DegenerateParameters)?,
            &fld.sub(&fld.one(), &pt.a),
        );
        let inner = self.combine(&[
            (fld.one(), &self.h(i)?),
            (cf, &self.f(i)?),
            (fld.one(), &self.one()),
        ]);
        Ok(self.scale(&inner, &half))
    }

    /// Conjugate `G_i ... G_{j-2} X G_{j-2}^{-1} ... G_i^{-1}`.
    fn conjugate_down(&self, i: usize, j: usize, x: Element<F::Elem>) -> Result<Element<F::Elem>> {
        let mut cur = x;
        for k in (i..j - 1).rev() {
            let left = self.multiply(&self.g(k)?, &cur)?;
            cur = self.multiply(&left, &self.g_inv(k)?)?;
        }
        Ok(cur)
    }

    /// `F_{i,j} = G_i ... G_{j-2} F_{j-1} G_{j-2}^{-1} ... G_i^{-1}`.
    pub fn f_pair(&self, i: usize, j: usize) -> Result<Element<F::Elem>> {
        self.check_pair(i, j)?;
        self.conjugate_down(i, j, self.f(j - 1)?)
    }

    /// `G_{i,j} = G_i ... G_{j-2} G_{j-1} G_{j-2}^{-1} ... G_i^{-1}`.
    pub fn g_pair(&self, i: usize, j: usize) -> Result<Element<F::Elem>> {
        self.check_pair(i, j)?;
        self.conjugate_down(i, j, self.g(j - 1)?)
    }

    /// `G_s` through the fixed reduced word of `s`.
    pub fn g_perm(&self, s: &Permutation) -> Element<F::Elem> {
        self.basis_element(SetPartition::singletons(self.n), s.clone())
    }

    /// `G_s^{-1}` as the reversed product of inverse generators.
    pub fn g_perm_inv(&self, s: &Permutation) -> Result<Element<F::Elem>> {
        let mut cur = self.one();
        for k in s.reduced_word().into_iter().rev() {
            cur = self.multiply(&cur, &self.g_inv(k)?)?;
        }
        Ok(cur)
    }

    pub fn letter(&self, l: &Letter) -> Result<Element<F::Elem>> {
        match *l {
            Letter::G(i) => self.g(i),
            Letter::Ginv(i) => self.g_inv(i),
            Letter::F(i) => self.f(i),
            Letter::Fij(i, j) => self.f_pair(i, j),
            Letter::Gij(i, j) => self.g_pair(i, j),
            Letter::H(i) => self.h(i),
            Letter::T(i) => self.t(i),
        }
    }

    pub fn word_to_element(&self, w: &GeneratorWord) -> Result<Element<F::Elem>> {
        let mut cur = self.one();
        for l in &w.letters {
            cur = self.multiply(&cur, &self.letter(l)?)?;
        }
        Ok(cur)
    }

    /// Image of a symbolic element at this point.
    pub fn specialize(&self, x: &AlgebraElement) -> Result<Element<F::Elem>> {
        let mut out = self.zero();
        for (b, c) in &x.terms {
            let v = self.point.specialize(c)?;
            self.acc(&mut out.terms, b.clone(), v);
        }
        Ok(out)
    }

    /// Parse `c1 * [I][s] + c2 * [J][t] ...`; non-coprime pairs are
    /// rewritten into the basis.
    pub fn parse_element(&self, text: &str) -> Result<Element<F::Elem>> {
        let sym = parse_terms(text)?;
        let mut out = self.zero();
        for (c, m, u) in sym {
            let v = self.point.specialize(&c)?;
            let e = self.pair(&m, &u, &v)?;
            out = self.add(&out, &e);
        }
        Ok(out)
    }

    /// Render with the field's own notation.
    pub fn render(&self, x: &Element<F::Elem>) -> String {
        struct Show<'a, F: Field>(&'a PartyHecke<F>, &'a Element<F::Elem>);
        impl<F: Field> fmt::Display for Show<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_sum(
                    f,
                    self.1.terms.iter().map(|((m, u), c)| {
                        (self.0.field().render_coefficient(c), format!("[{m}][{u}]"))
                    }),
                )
            }
        }
        Show(self, x).to_string()
    }

    /// Drop the memoised normal forms.
    pub fn clear_cache(&self) {
        self.nf_cache.write().expect("cache lock").clear();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimpleGen {
    G(usize),
    F(usize),
}

/// Split `c * [I][s] + ...` into raw terms.
fn parse_terms(text: &str) -> Result<Vec<(Scalar, SetPartition, Permutation)>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    if rest == "0" {
        return Ok(out);
    }
    while !rest.is_empty() {
        let open = rest
            .find('[')
            .ok_or_else(|| AlgebraError::Parse(format!("expected a basis label in {rest:?}")))?;
        let first_close = rest[open..]
            .find(']')
            .ok_or_else(|| AlgebraError::Parse("unclosed '['".into()))?
            + open;
        let second_close = rest[first_close + 1..]
            .find(']')
            .ok_or_else(|| AlgebraError::Parse("expected [partition][perm]".into()))?
            + first_close
            + 1;
        let coeff_text = rest[..open].trim();
        let coeff_text = coeff_text.strip_suffix('*').unwrap_or(coeff_text).trim();
        let coeff_text = coeff_text.strip_prefix('+').unwrap_or(coeff_text).trim();
        let coeff = match coeff_text {
            "" => Scalar::one(),
            "-" => Scalar::int(-1),
            t => t
                .parse::<Scalar>()
                .map_err(|e| AlgebraError::Parse(format!("coefficient {t:?}: {e}")))?,
        };
        let (m, u) = parse_pair(&rest[open..=second_close])?;
        out.push((coeff, m, u));
        rest = rest[second_close + 1..].trim();
    }
    Ok(out)
}

impl std::str::FromStr for AlgebraElement {
    type Err = AlgebraError;
    /// Parses with `n` taken from the first basis label.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s)?;
        let Some((_, m, _)) = terms.first() else {
            return Err(AlgebraError::Parse("cannot infer n from the zero element".into()));
        };
        PartyHecke::symbolic(m.n()).parse_element(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let ph = PartyHecke::symbolic(2);
        let g = ph.g(1).unwrap();
        let lhs = ph.multiply(&g, &g).unwrap();
        let rhs = ph.combine(&[(s("p*q^2"), &ph.one()), (s("p*(p-1)"), &ph.f(1).unwrap())]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_generator() {
        let ph = PartyHecke::symbolic(3);
        for i in 1..3 {
            let x = ph.multiply(&ph.g_inv(i).unwrap(), &ph.g(i).unwrap()).unwrap();
            assert_eq!(x, ph.one());
        }
    }

    #[test]
    fn text_round_trip() {
        let ph = PartyHecke::symbolic(3);
        let x = ph.add(&ph.t(1).unwrap(), &ph.f_pair(1, 3).unwrap());
        let back: AlgebraElement = x.to_string().parse().unwrap();
        assert_eq!(back, x);
    }
}
