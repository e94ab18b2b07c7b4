//! Exact scalars: reduced fractions of integer polynomials in `a` and `q`,
//! where `a` plays the role of the square root of `p`.

mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

pub use parse::ParseScalarError;
pub use poly::{deglex, Monomial, Polynomial};

use crate::error::AlgebraError;

/// An element of Q(a, q) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn a() -> Self {
        Self::from_poly(Polynomial::var_a())
    }

    pub fn q() -> Self {
        Self::from_poly(Polynomial::var_q())
    }

    /// `p = a^2`.
    pub fn p() -> Self {
        Self::from_poly(Polynomial::monomial(1, 2, 0))
    }

    pub fn from_poly(num: Polynomial) -> Self {
        Self {
            num,
            den: Polynomial::one(),
        }
    }

    /// Build `num/den` and bring it to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            num.cancel(&den)
        };
        if den
            .leading_term()
            .is_some_and(|(_, c)| c.is_negative())
        {
            num = -&num;
            den = -&den;
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Self {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Number of terms when printed, used to decide on parentheses.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.num_terms() <= 1
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel first to keep intermediate sizes small.
        let (n1, d2) = self.num.cancel(&rhs.den);
        let (n2, d1) = rhs.num.cancel(&self.den);
        Scalar::canonical(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::int(c)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.as_constant().is_some() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_scalar(s)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Evaluate a polynomial given powers of `a` and `q` in some target ring.
pub(crate) fn eval_poly<F: crate::field::Field>(
    field: &F,
    p: &Polynomial,
    a: &F::Elem,
    q: &F::Elem,
) -> F::Elem {
    let mut a_pows = vec![field.one()];
    let mut q_pows = vec![field.one()];
    p.evaluate(field.zero(), |acc, c, (i, j)| {
        while a_pows.len() <= i as usize {
            let next = field.mul(a_pows.last().unwrap(), a);
            a_pows.push(next);
        }
        while q_pows.len() <= j as usize {
            let next = field.mul(q_pows.last().unwrap(), q);
            q_pows.push(next);
        }
        let term = field.mul(
            &field.from_bigint(c),
            &field.mul(&a_pows[i as usize], &q_pows[j as usize]),
        );
        field.add(&acc, &term)
    })
}

impl Scalar {
    /// True when this is an integer constant; used by the printer of sums.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }
}

/// Write `c1 * L1 + c2 * L2 - ...`; coefficients arrive pre-rendered.
pub(crate) fn write_sum(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (String, String)>,
) -> fmt::Result {
    let mut empty = true;
    for (coeff, label) in terms {
        if empty {
            write!(f, "{coeff} * {label}")?;
        } else if let Some(rest) = coeff.strip_prefix('-') {
            write!(f, " - {rest} * {label}")?;
        } else {
            write!(f, " + {coeff} * {label}")?;
        }
        empty = false;
    }
    if empty {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn monomial_product() {
        assert_eq!(s("a^2") * s("q^2"), s("a^2*q^2"));
        assert_eq!((s("a^2") * s("q^2")).to_string(), "a^2*q^2");
    }

    #[test]
    fn forced_factorisation() {
        let r = s("a^2 - 1").checked_div(&s("a - 1")).unwrap();
        assert_eq!(r.to_string(), "a + 1");
    }

    #[test]
    fn sum_of_structure_constants() {
        let r = s("p*q^2") + s("p*(p - 1)");
        assert_eq!(r.to_string(), "a^4 + a^2*q^2 - a^2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(s("q").checked_div(&s("a - a")).is_err());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn denominator_sign_is_positive() {
        let r = s("1/(1 - a)");
        assert_eq!(r.to_string(), "-1/(a - 1)");
        assert_eq!(s("q/(-2)").to_string(), "-q/2");
    }

    #[test]
    fn text_form_round_trips() {
        for t in ["0", "1", "-3", "q^2/(a - 1)", "(a*q + 1)/(2*q^3)", "-a^-1*q"] {
            let x = s(t);
            assert_eq!(s(&x.to_string()), x, "{t}");
        }
    }

    #[test]
    fn negative_powers() {
        assert_eq!(s("q^-2") * s("q^2"), Scalar::one());
        assert_eq!(s("(a*q)^-1").to_string(), "1/(a*q)");
    }
}
