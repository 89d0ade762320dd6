//! Coefficient fields: prime fields `F_p` and the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Characteristic used for randomized work unless told otherwise.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldSpec {
    PrimeField { characteristic: u64 },
    Rationals,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, ArithError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(ArithError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField { characteristic: p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField { characteristic } => *characteristic,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::PrimeField { characteristic: p } => Scalar::Prime {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// Builds `num/den` in this field.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        match self {
            FieldSpec::PrimeField { characteristic: p } => {
                let pm = BigInt::from(*p);
                let n = num.mod_floor(&pm).to_u64().unwrap();
                let d = den.mod_floor(&pm).to_u64().unwrap();
                let n = Scalar::Prime { value: n, modulus: *p };
                let d = Scalar::Prime { value: d, modulus: *p };
                n.checked_div(&d)
            }
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
        }
    }

    /// Parses a decimal integer or a `num/den` fraction.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, ArithError> {
        let s = s.trim();
        let bad = || ArithError::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        self.fraction(&n, &d)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::PrimeField { characteristic } => write!(f, "p:{characteristic}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ArithError;

    /// Accepts `q`, `rationals`, `p:<prime>` or `prime(<p>)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "q" || s == "Q" || s == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("p:")
            .or_else(|| s.strip_prefix("prime(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| ArithError::Parse(s.to_string()))?;
        let p: u64 = digits.trim().parse().map_err(|_| ArithError::Parse(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form: residues in `[0, p)`, rationals reduced
/// with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime { value: u64, modulus: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Prime { modulus, .. } => FieldSpec::PrimeField { characteristic: *modulus },
            Scalar::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative_literal(&self) -> bool {
        match self {
            Scalar::Prime { .. } => false,
            Scalar::Rational(r) => r.is_negative(),
        }
    }

    /// Re-normalizes; the identity on canonical values.
    pub fn normalized(&self) -> Scalar {
        match self {
            Scalar::Prime { value, modulus } => Scalar::Prime { value: value % modulus, modulus: *modulus },
            Scalar::Rational(r) => Scalar::Rational(BigRational::new(r.numer().clone(), r.denom().clone())),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ArithError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: (a + b) % modulus, modulus: *modulus }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime { value: (a * b) % modulus, modulus: *modulus }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.same_field(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Scalar, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on mixed fields or division by zero; they are used
// internally where both operands are known to come from one ring.
macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect(concat!("scalar ", stringify!($method)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect(concat!("scalar ", stringify!($method)))
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);
scalar_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rational_addition() {
        let a = q().parse_scalar("1/2").unwrap();
        let b = q().parse_scalar("1/3").unwrap();
        assert_eq!((a + b).to_string(), "5/6");
    }

    #[test]
    fn prime_division() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert!((f5.from_i64(2) / f5.from_i64(2)).is_one());
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.from_i64(3) / f7.from_i64(5), f7.from_i64(2));
    }

    #[test]
    fn brute_force_inverse_mod_7() {
        // 5 * 3 = 15 = 1 (mod 7), so 3/5 = 3 * 3 = 2.
        let inv5 = (1..7).find(|c| (5 * c) % 7 == 1).unwrap();
        assert_eq!(inv5, 3);
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.from_i64(5).inverse().unwrap(), f7.from_i64(inv5));
    }

    #[test]
    fn errors() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.one().checked_div(&f7.zero()), Err(ArithError::DivisionByZero));
        assert!(matches!(f7.one().checked_add(&q().one()), Err(ArithError::FieldMismatch(..))));
        assert!(FieldSpec::prime(6).is_err());
        assert_eq!("p:32003".parse::<FieldSpec>().unwrap().characteristic(), 32003);
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn canonical_forms() {
        let f = q().parse_scalar("4/-6").unwrap();
        assert_eq!(f.to_string(), "-2/3");
        assert_eq!(f.normalized(), f);
        let p = FieldSpec::prime(7).unwrap().parse_scalar("-1/2").unwrap();
        assert_eq!(p.to_string(), "3");
    }

    fn arb_scalar(field: FieldSpec) -> impl Strategy<Value = Scalar> {
        // Denominators stay below every characteristic used here.
        (-1000i64..1000, 1i64..7).prop_map(move |(n, d)| {
            field.fraction(&BigInt::from(n), &BigInt::from(d)).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn inverse_law_fp(a in arb_scalar(FieldSpec::PrimeField { characteristic: DEFAULT_PRIME })) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }

        #[test]
        fn inverse_law_q(a in arb_scalar(FieldSpec::Rationals)) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
            prop_assert_eq!(a.normalized(), a);
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(FieldSpec::Rationals), b in arb_scalar(FieldSpec::Rationals), c in arb_scalar(FieldSpec::Rationals)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn field_axioms_fp(a in arb_scalar(FieldSpec::PrimeField { characteristic: 7 }), b in arb_scalar(FieldSpec::PrimeField { characteristic: 7 }), c in arb_scalar(FieldSpec::PrimeField { characteristic: 7 })) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
