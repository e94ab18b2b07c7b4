use num_bigint::BigInt;
use num_rational::BigRational;
use partyhecke::field::{Field, PrimeField, Rationals, Specialization, DEFAULT_PRIMES};
use partyhecke::scalar::Polynomial;
use partyhecke::{AlgebraError, Scalar};
use proptest::prelude::*;

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Polynomial::zero(), |acc, (c, i, j)| &acc + &Polynomial::monomial(c, i, j))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| Scalar::new(n, d).ok())
}

#[test]
fn monomial_product_and_exact_division() {
    assert_eq!(&s("a^2") * &s("q^2"), s("a^2*q^2"));
    assert_eq!(s("a^2-1").checked_div(&s("a-1")).unwrap(), s("a+1"));
    let p = Scalar::p();
    let lhs = &(&p * &s("q^2")) + &(&p * &(&p - &Scalar::one()));
    assert_eq!(lhs, s("a^2*q^2 + a^4 - a^2"));
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(AlgebraError::DivisionByZero));
}

#[test]
fn text_round_trip() {
    for text in ["0", "1", "-3", "a", "a^2*q - 2", "(a+1)/q^2", "q^2/(a-1)", "(1-a)/(2*q^3)"] {
        let x = s(text);
        assert_eq!(s(&x.to_string()), x, "{text} printed as {x}");
    }
    assert!("a^".parse::<Scalar>().is_err());
    assert!("x+1".parse::<Scalar>().is_err());
}

#[test]
fn specialization_at_one() {
    let at_one = Specialization::<Rationals>::integers(1, 1).unwrap();
    let one = BigRational::from_integer(BigInt::from(1));
    assert_eq!(at_one.specialize(&(&Scalar::p() * &Scalar::q())).unwrap(), one);
    let deform = &Scalar::p() * &(&Scalar::p() - &Scalar::one());
    assert_eq!(at_one.specialize(&deform).unwrap(), BigRational::from_integer(BigInt::from(0)));
}

#[test]
fn pole_at_the_point_is_reported() {
    let at = Specialization::<Rationals>::integers(1, 2).unwrap();
    assert_eq!(at.specialize(&s("q^2/(a-1)")), Err(AlgebraError::VanishingDenominator));
}

#[test]
fn degenerate_points_are_rejected() {
    assert!(Specialization::<Rationals>::integers(0, 1).is_err());
    assert!(Specialization::<Rationals>::integers(1, 0).is_err());
    assert!(PrimeField::new(15).is_err());
}

proptest! {
    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
    }

    #[test]
    fn canonical_form_prints_stably(x in scalar()) {
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn specialization_is_a_ring_map(x in scalar(), y in scalar(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let at = Specialization::random_prime(f, &mut rng);
        if let (Ok(sx), Ok(sy)) = (at.specialize(&x), at.specialize(&y)) {
            prop_assert_eq!(at.specialize(&(&x + &y)).unwrap(), f.add(&sx, &sy));
            prop_assert_eq!(at.specialize(&(&x * &y)).unwrap(), f.mul(&sx, &sy));
        }
    }
}
