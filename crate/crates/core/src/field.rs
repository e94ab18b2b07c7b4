//! Coefficient fields and the specialization maps into them.
//!
//! A [`Field`] is a context object carrying whatever is needed to do
//! arithmetic on its elements (the modulus of a prime field, for example).
//! The algebra engines are generic over it, so the same rewriting code runs
//! symbolically over Q(a, q), over random rational points, and modulo large
//! primes.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::AlgebraError;
use crate::scalar::{eval_poly, Scalar};

pub trait Field: Clone + Send + Sync + Debug {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `x` is zero.
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn from_bigint(&self, c: &BigInt) -> Self::Elem;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn from_i64(&self, c: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(c))
    }

    fn pow(&self, x: &Self::Elem, e: i32) -> Option<Self::Elem> {
        let mut base = if e < 0 { self.inv(x)? } else { x.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        Some(acc)
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    /// Human-readable rendering of an element.
    fn render(&self, x: &Self::Elem) -> String;

    /// Rendering as a factor in front of a basis label.
    fn render_coefficient(&self, x: &Self::Elem) -> String {
        self.render(x)
    }
}

/// Q(a, q) itself, with elements in canonical form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalFunctions;

impl Field for RationalFunctions {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        x + y
    }
    fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        x - y
    }
    fn neg(&self, x: &Scalar) -> Scalar {
        -x
    }
    fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        x * y
    }
    fn inv(&self, x: &Scalar) -> Option<Scalar> {
        x.inv().ok()
    }
    fn is_zero(&self, x: &Scalar) -> bool {
        x.is_zero()
    }
    fn is_one(&self, x: &Scalar) -> bool {
        x.is_one()
    }
    fn from_bigint(&self, c: &BigInt) -> Scalar {
        Scalar::int(c.clone())
    }
    fn render(&self, x: &Scalar) -> String {
        x.to_string()
    }
    fn render_coefficient(&self, x: &Scalar) -> String {
        if x.numerator().num_terms() > 1 {
            format!("({x})")
        } else {
            x.to_string()
        }
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn inv(&self, x: &BigRational) -> Option<BigRational> {
        (!x.is_zero()).then(|| x.recip())
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn from_bigint(&self, c: &BigInt) -> BigRational {
        BigRational::from_integer(c.clone())
    }
    fn render(&self, x: &BigRational) -> String {
        x.to_string()
    }
}

/// Integers modulo a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Primes just above 2^30 and 2^31, used as defaults for two-point checks.
pub const DEFAULT_PRIMES: [u64; 2] = [1_073_741_827, 2_147_483_659];

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if !(3..1 << 63).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn random_nonzero<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, x: &u64) -> u64 {
        if *x == 0 {
            0
        } else {
            self.p - x
        }
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.p as u128) as u64
    }
    fn inv(&self, x: &u64) -> Option<u64> {
        if *x == 0 {
            return None;
        }
        // Fermat: x^(p-2).
        let mut base = *x;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Some(acc)
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn from_bigint(&self, c: &BigInt) -> u64 {
        let r = c % BigInt::from(self.p);
        let r = if r.is_negative() {
            r + BigInt::from(self.p)
        } else {
            r
        };
        r.to_u64().expect("reduced residue fits")
    }
    fn from_i64(&self, c: i64) -> u64 {
        c.rem_euclid(self.p as i64) as u64
    }
    fn render(&self, x: &u64) -> String {
        x.to_string()
    }
}

/// A point `(a, q)` of some field, with both coordinates invertible.
#[derive(Clone, Debug)]
pub struct Specialization<F: Field> {
    pub field: F,
    pub a: F::Elem,
    pub q: F::Elem,
}

impl<F: Field> Specialization<F> {
    pub fn new(field: F, a: F::Elem, q: F::Elem) -> Result<Self, AlgebraError> {
        if field.is_zero(&a) || field.is_zero(&q) {
            return Err(AlgebraError::DegenerateParameters);
        }
        Ok(Self { field, a, q })
    }

    /// Image of a scalar, or an error if its denominator vanishes here.
    pub fn specialize(&self, x: &Scalar) -> Result<F::Elem, AlgebraError> {
        let den = eval_poly(&self.field, x.denominator(), &self.a, &self.q);
        let inv = self
            .field
            .inv(&den)
            .ok_or(AlgebraError::VanishingDenominator)?;
        let num = eval_poly(&self.field, x.numerator(), &self.a, &self.q);
        Ok(self.field.mul(&num, &inv))
    }
}

impl Specialization<RationalFunctions> {
    /// The generic point: `a` and `q` stay indeterminates.
    pub fn generic() -> Self {
        Self {
            field: RationalFunctions,
            a: Scalar::a(),
            q: Scalar::q(),
        }
    }
}

impl Specialization<Rationals> {
    pub fn rational(a: BigRational, q: BigRational) -> Result<Self, AlgebraError> {
        Self::new(Rationals, a, q)
    }

    pub fn integers(a: i64, q: i64) -> Result<Self, AlgebraError> {
        Self::rational(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(q.into()),
        )
    }

    /// Random small rationals avoiding the degenerate values 0 and ±1.
    pub fn random_rational<R: Rng>(rng: &mut R) -> Self {
        let pick = |rng: &mut R| loop {
            let num: i64 = rng.gen_range(-40..=40);
            let den: i64 = rng.gen_range(1..=12);
            let v = BigRational::new(num.into(), den.into());
            let abs = v.abs();
            if !v.is_zero() && !abs.is_one() {
                return v;
            }
        };
        let a = pick(rng);
        let q = pick(rng);
        Self::rational(a, q).expect("nonzero by construction")
    }
}

impl Specialization<PrimeField> {
    /// Random point of the prime field avoiding 0 and ±1.
    pub fn random_prime<R: Rng>(field: PrimeField, rng: &mut R) -> Self {
        let p = field.modulus();
        let pick = |rng: &mut R| loop {
            let v = field.random_nonzero(rng);
            if v != 1 && v != p - 1 {
                return v;
            }
        };
        let a = pick(rng);
        let q = pick(rng);
        Self { field, a, q }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn evaluation_at_one_one() {
        let pt = Specialization::integers(1, 1).unwrap();
        assert_eq!(pt.specialize(&s("p*q")).unwrap(), BigRational::one());
        assert_eq!(pt.specialize(&s("p*(p - 1)")).unwrap(), BigRational::zero());
    }

    #[test]
    fn pole_is_reported() {
        let pt = Specialization::integers(1, 2).unwrap();
        assert_eq!(
            pt.specialize(&s("q^2/(a - 1)")),
            Err(AlgebraError::VanishingDenominator)
        );
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        for x in [2u64, 3, 12345, DEFAULT_PRIMES[0] - 1] {
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), 1);
        }
        assert!(PrimeField::new(DEFAULT_PRIMES[1]).is_ok());
        assert!(PrimeField::new(1 << 30).is_err());
    }

    #[test]
    fn random_points_avoid_degenerate_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let pt = Specialization::random_rational(&mut rng);
            for v in [&pt.a, &pt.q] {
                assert!(!v.is_zero() && !v.abs().is_one());
            }
        }
    }
}
