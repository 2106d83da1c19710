//! Exact scalar arithmetic for the coefficient field: arbitrary precision
//! rationals and prime fields GF(p) with p < 2^31.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest supported prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field mismatch: {0} vs {1}")]
    Mismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^31")]
    PrimeTooLarge(u64),
    #[error("invalid scalar literal `{0}`")]
    Literal(String),
}

/// The coefficient field k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// GF(p); construct through [`FieldSpec::prime`] so that `p` is checked.
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.into())),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Embeds the rational `num/den` into the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::Prime(p) => {
                let reduce = |x: &BigInt| {
                    let m = BigInt::from(p);
                    (((x % &m) + &m) % &m).to_u64().expect("residue fits in u64")
                };
                let n = Scalar::Residue { value: reduce(num), modulus: p };
                let d = Scalar::Residue { value: reduce(den), modulus: p };
                Ok(n.try_mul(&d.inv()?)?)
            }
        }
    }

    /// Parses `a`, `-a` or `a/b`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::Literal(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

/// An element of a [`FieldSpec`]. Rationals are kept in lowest terms with a
/// positive denominator, residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(FieldError::Mismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: (a + b) % modulus, modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: a * b % modulus, modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.try_add(&-other)
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator forms panic on a field mismatch; polynomial code only combines
// scalars of one algebra, whose field was fixed at construction.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        FieldSpec::Rationals.parse_scalar(s).unwrap()
    }

    fn gf7(v: i64) -> Scalar {
        FieldSpec::prime(7).unwrap().from_i64(v)
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q("1/2").try_add(&q("1/3")).unwrap(), q("5/6"));
        assert_eq!(q("2/3").try_mul(&q("3/4")).unwrap(), q("1/2"));
        assert_eq!(q("2/3").inv().unwrap(), q("3/2"));
        assert_eq!(q("1").inv().unwrap(), q("1"));
        assert_eq!(q("7/5").try_add(&q("0")).unwrap(), q("7/5"));
        assert_eq!(q("7/5").try_mul(&q("1")).unwrap(), q("7/5"));
        assert_eq!(q("4/-6").to_string(), "-2/3");
    }

    #[test]
    fn prime_field_examples() {
        assert_eq!(gf7(5).try_add(&gf7(4)).unwrap(), gf7(2));
        assert_eq!(gf7(3).try_mul(&gf7(5)).unwrap(), gf7(1));
        // exhaustive search for the inverse of 3
        let inv3 = (1..7).find(|v| (3 * v) % 7 == 1).unwrap();
        assert_eq!(inv3, 5);
        assert_eq!(gf7(3).inv().unwrap(), gf7(inv3));
        assert_eq!(gf7(-1).to_string(), "6");
        assert_eq!(
            FieldSpec::prime(7).unwrap().parse_scalar("1/2").unwrap(),
            gf7(4)
        );
    }

    #[test]
    fn errors() {
        assert_eq!(q("0").inv(), Err(FieldError::DivisionByZero));
        assert_eq!(gf7(0).inv(), Err(FieldError::DivisionByZero));
        assert!(matches!(q("1").try_add(&gf7(1)), Err(FieldError::Mismatch(..))));
        assert_eq!(FieldSpec::prime(9), Err(FieldError::NotPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
        assert!(matches!(FieldSpec::prime(1 << 31), Err(FieldError::PrimeTooLarge(_))));
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(FieldSpec::Rationals.parse_scalar("1/0").is_err());
        assert!(FieldSpec::Rationals.parse_scalar("x").is_err());
    }

    #[test]
    fn no_overflow_on_large_rationals() {
        let mut acc = q("1");
        let big = q("123456789123456789/987654321");
        for _ in 0..20 {
            acc = &acc * &big;
        }
        let back = (0..20).fold(acc, |a, _| a.try_div(&big).unwrap());
        assert_eq!(back, q("1"));
    }

    fn field_strategy() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::Prime(7)),
            Just(FieldSpec::Prime(2_147_483_647)),
        ]
    }

    fn scalar_in(field: FieldSpec) -> impl Strategy<Value = Scalar> {
        (any::<i32>(), 1i32..1000).prop_map(move |(n, d)| {
            field.from_ratio(&n.into(), &d.into()).unwrap_or_else(|_| field.zero())
        })
    }

    proptest! {
        #[test]
        fn field_axioms(
            (a, b, c) in field_strategy().prop_flat_map(|f| (scalar_in(f), scalar_in(f), scalar_in(f)))
        ) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
