//! Exact coefficient fields: the rationals and prime fields `GF(p)`.
//!
//! Polynomial code is generic over [`Field`]; the runtime choice of field
//! (`q` or `fp:P`) is carried by [`FieldConfig`] and dispatched once at the
//! top of each computation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    MixedFields(FieldConfig, FieldConfig),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("characteristic {p} divides the color count k = {k}; x^k - 1 would not be square-free")]
    CharacteristicDividesK { p: u64, k: usize },
    #[error("color count k must be positive")]
    ZeroColors,
    #[error("invalid field spec `{0}` (expected `q` or `fp:P`)")]
    BadSpec(String),
}

/// Which coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldConfig {
    Rationals,
    PrimeField(u64),
}

impl FieldConfig {
    /// Checks that the field is usable for `k`-coloring ideals: the modulus
    /// must be prime and must not divide `k`.
    pub fn validate(&self, k: usize) -> Result<(), FieldError> {
        if k == 0 {
            return Err(FieldError::ZeroColors);
        }
        match *self {
            FieldConfig::Rationals => Ok(()),
            FieldConfig::PrimeField(p) => {
                PrimeField::new(p)?;
                if (k as u64).is_multiple_of(p) {
                    Err(FieldError::CharacteristicDividesK { p, k })
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldConfig::Rationals => 0,
            FieldConfig::PrimeField(p) => p,
        }
    }
}

/// Free-function form of [`FieldConfig::validate`].
pub fn validate_field(cfg: FieldConfig, k: usize) -> Result<(), FieldError> {
    cfg.validate(k)
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::Rationals => write!(f, "q"),
            FieldConfig::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldConfig {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldConfig::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| FieldError::BadSpec(s.to_string()))?;
        PrimeField::new(p)?;
        Ok(FieldConfig::PrimeField(p))
    }
}

impl Serialize for FieldConfig {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldConfig {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A field whose elements are plain values; the field object carries any
/// parameters (the modulus) and performs all arithmetic.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + std::hash::Hash + Send + Sync;

    fn config(&self) -> FieldConfig;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a - b * c`, the inner step of every reduction.
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(b, c))
    }

    /// Splits an element into a sign and a magnitude for display. Prime
    /// field elements use the symmetric representative.
    fn sign_magnitude(&self, a: &Self::Elem) -> (bool, String);

    /// Parses an integer or `a/b` literal.
    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;
}

/// The field of rational numbers with arbitrary-precision numerator and
/// denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn config(&self) -> FieldConfig {
        FieldConfig::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn sign_magnitude(&self, a: &BigRational) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }
    fn parse_elem(&self, s: &str) -> Option<BigRational> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
            None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
        };
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }
}

/// `GF(p)` for a prime `p < 2^32`, elements stored reduced in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 32 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
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

impl Field for PrimeField {
    type Elem = u64;

    fn config(&self) -> FieldConfig {
        FieldConfig::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn sub_mul(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        let bc = b * c % self.p;
        self.sub(a, &bc)
    }
    fn sign_magnitude(&self, a: &u64) -> (bool, String) {
        if *a > self.p / 2 {
            (true, (self.p - a).to_string())
        } else {
            (false, a.to_string())
        }
    }
    fn parse_elem(&self, s: &str) -> Option<u64> {
        let big = Rationals.parse_elem(s)?;
        let p = BigInt::from(self.p);
        let num = big.numer().mod_floor(&p).to_u64()?;
        let den = big.denom().mod_floor(&p).to_u64()?;
        self.div(&num, &den)
    }
}

/// A standalone field element that remembers which field it belongs to.
///
/// Polynomial code works with bare [`Field::Elem`] values; `Scalar` is the
/// checked, self-describing form used at API boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn modular(value: i64, modulus: u64) -> Result<Scalar, FieldError> {
        let f = PrimeField::new(modulus)?;
        Ok(Scalar::Modular { value: f.reduce_i64(value), modulus })
    }

    pub fn config(&self) -> FieldConfig {
        match self {
            Scalar::Rational(_) => FieldConfig::Rationals,
            Scalar::Modular { modulus, .. } => FieldConfig::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    /// Exact `a op b`; both operands must live in the same field.
    pub fn arith(&self, other: &Scalar, op: ScalarOp) -> Result<Scalar, FieldError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => apply(&Rationals, a, b, op).map(Scalar::Rational),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                let f = PrimeField { p: *p };
                apply(&f, a, b, op).map(|value| Scalar::Modular { value, modulus: *p })
            }
            _ => Err(FieldError::MixedFields(self.config(), other.config())),
        }
    }
}

fn apply<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, op: ScalarOp) -> Result<F::Elem, FieldError> {
    Ok(match op {
        ScalarOp::Add => f.add(a, b),
        ScalarOp::Sub => f.sub(a, b),
        ScalarOp::Mul => f.mul(a, b),
        ScalarOp::Div => f.div(a, b).ok_or(FieldError::DivisionByZero)?,
    })
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_sum() {
        let s = Scalar::rational(1, 2).arith(&Scalar::rational(1, 3), ScalarOp::Add).unwrap();
        assert_eq!(s, Scalar::rational(5, 6));
    }

    #[test]
    fn modular_product() {
        let a = Scalar::modular(3, 5).unwrap();
        let b = Scalar::modular(4, 5).unwrap();
        assert_eq!(a.arith(&b, ScalarOp::Mul).unwrap(), Scalar::modular(2, 5).unwrap());
    }

    #[test]
    fn errors() {
        let z = Scalar::rational(0, 1);
        assert_eq!(Scalar::rational(1, 1).arith(&z, ScalarOp::Div), Err(FieldError::DivisionByZero));
        let m = Scalar::modular(1, 7).unwrap();
        assert!(matches!(m.arith(&Scalar::rational(1, 1), ScalarOp::Add), Err(FieldError::MixedFields(..))));
        assert!(matches!(m.arith(&Scalar::modular(1, 5).unwrap(), ScalarOp::Add), Err(FieldError::MixedFields(..))));
        assert_eq!(Scalar::modular(1, 6), Err(FieldError::NotPrime(6)));
    }

    #[test]
    fn canonical_rationals() {
        assert_eq!(Scalar::rational(2, -4), Scalar::rational(-1, 2));
        assert_eq!(Rationals.parse_elem("6/4"), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(Rationals.parse_elem("1/0"), None);
    }

    #[test]
    fn validate() {
        assert!(validate_field(FieldConfig::PrimeField(2), 3).is_ok());
        assert_eq!(
            validate_field(FieldConfig::PrimeField(3), 3),
            Err(FieldError::CharacteristicDividesK { p: 3, k: 3 })
        );
        assert!(validate_field(FieldConfig::Rationals, 7).is_ok());
        assert_eq!(validate_field(FieldConfig::PrimeField(9), 2), Err(FieldError::NotPrime(9)));
        assert!(validate_field(FieldConfig::PrimeField(2), 4).is_err());
    }

    #[test]
    fn config_text() {
        assert_eq!("q".parse::<FieldConfig>().unwrap(), FieldConfig::Rationals);
        assert_eq!("fp:7".parse::<FieldConfig>().unwrap(), FieldConfig::PrimeField(7));
        assert!("fp:8".parse::<FieldConfig>().is_err());
        assert!("gf7".parse::<FieldConfig>().is_err());
        assert_eq!(FieldConfig::PrimeField(11).to_string(), "fp:11");
    }

    #[test]
    fn prime_parse_and_sign() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse_elem("-1"), Some(6));
        assert_eq!(f.parse_elem("1/2"), Some(4));
        assert_eq!(f.sign_magnitude(&6), (true, "1".to_string()));
        assert_eq!(f.sign_magnitude(&3), (false, "3".to_string()));
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Scalar::rational(n, d))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            use ScalarOp::*;
            let ab_c = a.arith(&b, Add).unwrap().arith(&c, Add).unwrap();
            let a_bc = a.arith(&b.arith(&c, Add).unwrap(), Add).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let lhs = a.arith(&b.arith(&c, Add).unwrap(), Mul).unwrap();
            let rhs = a.arith(&b, Mul).unwrap().arith(&a.arith(&c, Mul).unwrap(), Add).unwrap();
            prop_assert_eq!(lhs, rhs);
            if !a.is_zero() {
                prop_assert_eq!(a.arith(&a, Div).unwrap(), Scalar::rational(1, 1));
            }
        }

        #[test]
        fn modular_field_axioms(a in 0i64..101, b in 0i64..101, c in 0i64..101) {
            use ScalarOp::*;
            let (a, b, c) = (
                Scalar::modular(a, 101).unwrap(),
                Scalar::modular(b, 101).unwrap(),
                Scalar::modular(c, 101).unwrap(),
            );
            let lhs = a.arith(&b, Mul).unwrap().arith(&c, Mul).unwrap();
            let rhs = a.arith(&b.arith(&c, Mul).unwrap(), Mul).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = a.arith(&b.arith(&c, Add).unwrap(), Mul).unwrap();
            let rhs = a.arith(&b, Mul).unwrap().arith(&a.arith(&c, Mul).unwrap(), Add).unwrap();
            prop_assert_eq!(lhs, rhs);
            if !a.is_zero() {
                prop_assert_eq!(a.arith(&a, Div).unwrap(), Scalar::modular(1, 101).unwrap());
            }
            prop_assert_eq!(a.arith(&b, Sub).unwrap().arith(&b, Add).unwrap(), a);
        }
    }
}
