//! Exact coefficient fields: the rationals and prime fields GF(p).
//!
//! Scalars are always kept in canonical form (reduced fractions with a
//! positive denominator, residues in `[0, p)`), so structural equality is
//! field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rationals,
    Prime(u64),
}

/// The coefficient field `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// GF(p). The modulus is checked for primality by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec(Kind::Prime(p)))
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.0 == Kind::Rationals
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(n.into()))),
            Kind::Prime(p) => Scalar(Repr::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            }),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar(Repr::Rational(BigRational::from_integer(n.clone()))),
            Kind::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar(Repr::Residue {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: p,
                })
            }
        }
    }

    /// The scalar `num / den`. Fails with `DivisionByZero` when `den` is zero
    /// in this field.
    pub fn ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Rationals => Ok(Scalar(Repr::Rational(BigRational::new(
                num.clone(),
                den.clone(),
            )))),
            Kind::Prime(_) => Ok(&self.from_bigint(num) * &d.inv()?),
        }
    }

    /// Parses `a` or `a/b` (optionally signed).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid scalar `{text}`"),
        };
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        self.ratio(&n, &d)
    }

    fn same_as(&self, s: &Scalar) -> bool {
        s.field() == *self
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An element of a [`FieldSpec`].
///
/// The operator impls (`+`, `-`, `*`) panic when the operands come from
/// different fields; the `try_*` methods report [`Error::FieldMismatch`]
/// instead. Polynomial code checks field agreement once at the boundary and
/// then uses the operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rational(_) => FieldSpec(Kind::Rationals),
            Repr::Residue { modulus, .. } => FieldSpec(Kind::Prime(modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// True for negative rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_negative(),
            Repr::Residue { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(*value),
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field().same_as(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    /// Re-establishes canonical form. Stored scalars are already canonical,
    /// so this is the identity on every value the public API can produce.
    pub fn normalized(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(BigRational::new(
                q.numer().clone(),
                q.denom().clone(),
            ))),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: value % modulus,
                modulus: *modulus,
            }),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % m as u128;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar(Repr::Residue {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => mismatch(self, rhs),
        }
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
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (
                Repr::Residue {
                    value: a,
                    modulus: p,
                },
                Repr::Residue {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar(Repr::Residue {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(-a)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            }),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::rationals().ratio(&n.into(), &d.into()).unwrap()
    }

    fn random(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
        let n: i64 = rng.gen_range(-20..=20);
        let d: i64 = rng.gen_range(1..=9);
        match field.modulus() {
            Some(_) => field.from_i64(n),
            None => field.ratio(&n.into(), &d.into()).unwrap(),
        }
    }

    #[test]
    fn rational_examples() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(2, 3) * &q(3, 4), q(1, 2));
        assert_eq!(q(3, 5).inv().unwrap(), q(5, 3));
        assert_eq!(q(0, 1).inv(), Err(Error::DivisionByZero));
        assert_eq!(q(4, -6).to_string(), "-2/3");
        assert_eq!(q(0, 5), FieldSpec::rationals().zero());
    }

    #[test]
    fn prime_field_examples() {
        let gf7 = FieldSpec::prime(7).unwrap();
        assert_eq!(&gf7.from_i64(5) + &gf7.from_i64(4), gf7.from_i64(2));
        assert_eq!(&gf7.from_i64(3) * &gf7.from_i64(5), gf7.one());
        assert_eq!(gf7.from_i64(3).inv().unwrap(), gf7.from_i64(5));
        assert_eq!(gf7.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(gf7.from_i64(-1).to_string(), "6");
        assert_eq!(gf7.parse_scalar("1/2").unwrap(), gf7.from_i64(4));
        assert_eq!(gf7.parse_scalar("1/7"), Err(Error::DivisionByZero));
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(FieldSpec::prime(6), Err(Error::NonPrimeModulus(6)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NonPrimeModulus(1)));
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(1_000_003).is_ok());
        assert_eq!(FieldSpec::prime(5).unwrap().characteristic(), 5);
        assert_eq!(FieldSpec::rationals().characteristic(), 0);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = FieldSpec::prime(5).unwrap().one();
        let b = FieldSpec::prime(7).unwrap().one();
        let c = FieldSpec::rationals().one();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.try_mul(&c), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn identities_on_random_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for field in [FieldSpec::rationals(), FieldSpec::prime(7).unwrap()] {
            for _ in 0..50 {
                let a = random(field, &mut rng);
                assert_eq!(&a + &field.zero(), a);
                assert_eq!(&a * &field.one(), a);
            }
        }
    }

    #[test]
    fn field_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for field in [FieldSpec::rationals(), FieldSpec::prime(5).unwrap()] {
            for _ in 0..500 {
                let (a, b, c) = (
                    random(field, &mut rng),
                    random(field, &mut rng),
                    random(field, &mut rng),
                );
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a + &(-&a), field.zero());
                if !a.is_zero() {
                    assert_eq!(&a * &a.inv().unwrap(), field.one());
                }
                assert_eq!(a.normalized(), a);
            }
        }
    }

    #[test]
    fn characteristic_times_one_is_zero() {
        let gf = FieldSpec::prime(13).unwrap();
        let mut acc = gf.zero();
        for _ in 0..gf.characteristic() {
            acc = &acc + &gf.one();
        }
        assert!(acc.is_zero());
    }
}
