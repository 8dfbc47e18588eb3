//! Exact scalar arithmetic over GF(2), GF(p) and the rationals.
//!
//! A [`Field`] is a small copyable descriptor. Matrices store bare
//! [`Scalar`]s and route every operation through their descriptor; the public
//! [`FieldValue`] pairs a scalar with its field so that values can be combined
//! safely on their own.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which family a [`Field`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Gf2,
    Gfp,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Repr {
    Gf2,
    /// Odd prime modulus.
    Prime(u32),
    Rational,
}

/// Descriptor of one of the supported fields.
///
/// `Field::prime(2)` and `Field::gf2()` are the same descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field(Repr);

/// Canonical representative of a field element, without its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Scalar {
    /// Residue in `[0, p)`.
    Residue(u32),
    /// Reduced fraction with positive denominator.
    Ratio(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` modulo the prime `p` by the extended Euclidean algorithm.
fn mod_inverse(a: u32, p: u32) -> Option<u32> {
    let (mut r0, mut r1) = (i64::from(p), i64::from(a));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(i64::from(p)) as u32)
}

impl Field {
    pub fn gf2() -> Self {
        Field(Repr::Gf2)
    }

    /// GF(p). Rejects moduli that are not prime.
    pub fn prime(p: u32) -> Result<Self> {
        match p {
            2 => Ok(Field(Repr::Gf2)),
            p if is_prime(u64::from(p)) => Ok(Field(Repr::Prime(p))),
            p => Err(Error::NotPrime(u64::from(p))),
        }
    }

    pub fn rationals() -> Self {
        Field(Repr::Rational)
    }

    pub fn kind(self) -> FieldKind {
        match self.0 {
            Repr::Gf2 => FieldKind::Gf2,
            Repr::Prime(_) => FieldKind::Gfp,
            Repr::Rational => FieldKind::Rational,
        }
    }

    /// The characteristic for finite fields; `None` for the rationals.
    pub fn modulus(self) -> Option<u32> {
        match self.0 {
            Repr::Gf2 => Some(2),
            Repr::Prime(p) => Some(p),
            Repr::Rational => None,
        }
    }

    pub fn is_gf2(self) -> bool {
        self.0 == Repr::Gf2
    }

    pub fn zero(self) -> FieldValue {
        self.wrap(self.zero_scalar())
    }

    pub fn one(self) -> FieldValue {
        self.wrap(self.one_scalar())
    }

    /// The image of an integer (reduced mod p in finite fields).
    pub fn int(self, n: i64) -> FieldValue {
        self.wrap(self.scalar_from_i64(n))
    }

    /// The element `num / den`.
    pub fn ratio(self, num: i64, den: i64) -> Result<FieldValue> {
        let den = self.inv(&self.scalar_from_i64(den))?;
        Ok(self.wrap(self.mul(&self.scalar_from_i64(num), &den)))
    }

    /// Parses an integer `a` or a fraction `a/b`.
    pub fn parse_value(self, text: &str) -> Result<FieldValue> {
        self.parse_scalar(text).map(|s| self.wrap(s))
    }

    pub(crate) fn wrap(self, scalar: Scalar) -> FieldValue {
        FieldValue {
            field: self,
            scalar,
        }
    }

    pub(crate) fn zero_scalar(self) -> Scalar {
        match self.0 {
            Repr::Rational => Scalar::Ratio(BigRational::zero()),
            _ => Scalar::Residue(0),
        }
    }

    pub(crate) fn one_scalar(self) -> Scalar {
        match self.0 {
            Repr::Rational => Scalar::Ratio(BigRational::one()),
            _ => Scalar::Residue(1),
        }
    }

    pub(crate) fn scalar_from_i64(self, n: i64) -> Scalar {
        match self.0 {
            Repr::Gf2 => Scalar::Residue((n & 1) as u32),
            Repr::Prime(p) => Scalar::Residue(n.rem_euclid(i64::from(p)) as u32),
            Repr::Rational => Scalar::Ratio(BigRational::from_integer(n.into())),
        }
    }

    pub(crate) fn scalar_from_bigint(self, n: &BigInt) -> Scalar {
        match self.0 {
            Repr::Rational => Scalar::Ratio(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.modulus().unwrap_or(2));
                let r = ((n % &p) + &p) % &p;
                Scalar::Residue(u32::try_from(&r).unwrap_or(0))
            }
        }
    }

    pub(crate) fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = || Error::parse(0, format!("invalid {} literal {:?}", self, text));
        let parse_int = |s: &str| -> Result<BigInt> {
            if s.is_empty() || s.starts_with('+') && s.len() == 1 {
                return Err(bad());
            }
            s.parse::<BigInt>().map_err(|_| bad())
        };
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(text)?, BigInt::one()),
        };
        let den = self.scalar_from_bigint(&den);
        let den = self.inv(&den)?;
        Ok(self.mul(&self.scalar_from_bigint(&num), &den))
    }

    pub(crate) fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Residue(r) => *r == 0,
            Scalar::Ratio(q) => q.is_zero(),
        }
    }

    pub(crate) fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.0, a, b) {
            (Repr::Gf2, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(x ^ y),
            (Repr::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((u64::from(*x) + u64::from(*y)) % u64::from(p)) as u32)
            }
            (Repr::Rational, Scalar::Ratio(x), Scalar::Ratio(y)) => Scalar::Ratio(x + y),
            _ => unreachable!("scalar does not belong to {self}"),
        }
    }

    pub(crate) fn neg(self, a: &Scalar) -> Scalar {
        match (self.0, a) {
            (Repr::Gf2, Scalar::Residue(x)) => Scalar::Residue(*x),
            (Repr::Prime(p), Scalar::Residue(x)) => {
                Scalar::Residue(if *x == 0 { 0 } else { p - x })
            }
            (Repr::Rational, Scalar::Ratio(x)) => Scalar::Ratio(-x),
            _ => unreachable!("scalar does not belong to {self}"),
        }
    }

    pub(crate) fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.0, a, b) {
            (Repr::Rational, Scalar::Ratio(x), Scalar::Ratio(y)) => Scalar::Ratio(x - y),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub(crate) fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.0, a, b) {
            (Repr::Gf2, Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(x & y),
            (Repr::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((u64::from(*x) * u64::from(*y)) % u64::from(p)) as u32)
            }
            (Repr::Rational, Scalar::Ratio(x), Scalar::Ratio(y)) => Scalar::Ratio(x * y),
            _ => unreachable!("scalar does not belong to {self}"),
        }
    }

    pub(crate) fn inv(self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self.0, a) {
            (Repr::Gf2, Scalar::Residue(x)) => Scalar::Residue(*x),
            (Repr::Prime(p), Scalar::Residue(x)) => {
                Scalar::Residue(mod_inverse(*x, p).ok_or(Error::DivisionByZero)?)
            }
            (Repr::Rational, Scalar::Ratio(x)) => Scalar::Ratio(x.recip()),
            _ => unreachable!("scalar does not belong to {self}"),
        })
    }

    /// `a - b * c`, the elimination update.
    pub(crate) fn sub_mul(self, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
        self.sub(a, &self.mul(b, c))
    }

    pub(crate) fn format_scalar(self, a: &Scalar) -> String {
        match a {
            Scalar::Residue(r) => r.to_string(),
            Scalar::Ratio(q) if q.is_integer() => q.numer().to_string(),
            Scalar::Ratio(q) => format!("{}/{}", q.numer(), q.denom()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Gf2 => f.write_str("GF(2)"),
            Repr::Prime(p) => write!(f, "GF({p})"),
            Repr::Rational => f.write_str("Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `GF(2)`, `GF(p)` for a prime `p`, or `Q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::rationals());
        }
        let p = s
            .strip_prefix("GF(")
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|p| p.trim().parse::<u32>().ok())
            .ok_or_else(|| Error::parse(0, format!("unknown field {s:?}")))?;
        Field::prime(p)
    }
}

/// An exact element of some [`Field`], in canonical form.
///
/// Two values are equal exactly when they are the same element of the same
/// field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldValue {
    field: Field,
    scalar: Scalar,
}

impl FieldValue {
    pub fn field(&self) -> Field {
        self.field
    }

    pub(crate) fn scalar(&self) -> &Scalar {
        &self.scalar
    }

    pub(crate) fn into_scalar(self) -> Scalar {
        self.scalar
    }

    fn same_field(&self, other: &FieldValue) -> Result<Field> {
        if self.field != other.field {
            return Err(Error::DescriptorMismatch(self.field, other.field));
        }
        Ok(self.field)
    }

    pub fn add(&self, other: &FieldValue) -> Result<FieldValue> {
        let f = self.same_field(other)?;
        Ok(f.wrap(f.add(&self.scalar, &other.scalar)))
    }

    pub fn sub(&self, other: &FieldValue) -> Result<FieldValue> {
        let f = self.same_field(other)?;
        Ok(f.wrap(f.sub(&self.scalar, &other.scalar)))
    }

    pub fn mul(&self, other: &FieldValue) -> Result<FieldValue> {
        let f = self.same_field(other)?;
        Ok(f.wrap(f.mul(&self.scalar, &other.scalar)))
    }

    pub fn div(&self, other: &FieldValue) -> Result<FieldValue> {
        self.mul(&other.inv()?)
    }

    pub fn neg(&self) -> FieldValue {
        self.field.wrap(self.field.neg(&self.scalar))
    }

    /// Multiplicative inverse; `DivisionByZero` for zero.
    pub fn inv(&self) -> Result<FieldValue> {
        Ok(self.field.wrap(self.field.inv(&self.scalar)?))
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.scalar)
    }

    pub fn is_one(&self) -> bool {
        self.scalar == self.field.one_scalar()
    }

    /// The residue in `[0, p)` for finite fields.
    pub fn residue(&self) -> Option<u32> {
        match self.scalar {
            Scalar::Residue(r) => Some(r),
            Scalar::Ratio(_) => None,
        }
    }

    /// The reduced fraction for rational values.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.scalar {
            Scalar::Ratio(q) => Some(q),
            Scalar::Residue(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_negative())
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_scalar(&self.scalar))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn q(n: i64, d: i64) -> FieldValue {
        Field::rationals().ratio(n, d).unwrap()
    }

    #[test]
    fn descriptors() {
        assert_eq!(gf(2), Field::gf2());
        assert_eq!(gf(5).modulus(), Some(5));
        assert_eq!(gf(5).kind(), FieldKind::Gfp);
        assert!(matches!(Field::prime(1), Err(Error::NotPrime(1))));
        assert!(matches!(Field::prime(0), Err(Error::NotPrime(0))));
        assert!(matches!(Field::prime(9), Err(Error::NotPrime(9))));
        assert!(Field::prime(65521).is_ok());
        for f in [Field::gf2(), gf(7), Field::rationals()] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!("GF(4)".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn add_examples() {
        let f2 = Field::gf2();
        assert_eq!(f2.one().add(&f2.one()).unwrap(), f2.zero());
        assert_eq!(q(1, 2).add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(gf(5).int(3).add(&gf(5).int(4)).unwrap(), gf(5).int(2));
    }

    #[test]
    fn mul_examples() {
        let f2 = Field::gf2();
        assert_eq!(f2.one().mul(&f2.one()).unwrap(), f2.one());
        assert_eq!(q(2, 3).mul(&q(3, 4)).unwrap(), q(1, 2));
        assert_eq!(gf(5).int(2).mul(&gf(5).int(3)).unwrap(), gf(5).one());
    }

    #[test]
    fn neg_inv_examples() {
        assert_eq!(Field::gf2().one().neg(), Field::gf2().one());
        assert_eq!(gf(5).int(2).inv().unwrap(), gf(5).int(3));
        assert_eq!(q(2, 3).inv().unwrap(), q(3, 2));
        assert_eq!(gf(5).zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(q(0, 1).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields() {
        let err = gf(3).one().add(&gf(5).one()).unwrap_err();
        assert!(matches!(err, Error::DescriptorMismatch(_, _)));
        assert!(Field::gf2().one().mul(&q(1, 1)).is_err());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(q(2, 4), q(-1, -2));
        assert_eq!(q(2, -4).to_string(), "-1/2");
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(gf(5).int(-1), gf(5).int(4));
        assert_eq!(gf(7).ratio(1, 2).unwrap(), gf(7).int(4));
        assert!(Field::rationals().ratio(1, 0).is_err());
    }

    #[test]
    fn parsing() {
        let rq = Field::rationals();
        assert_eq!(rq.parse_value("-3/6").unwrap(), q(-1, 2));
        assert_eq!(
            rq.parse_value("12345678901234567890").unwrap().to_string(),
            "12345678901234567890"
        );
        assert!(rq.parse_value("1/0").is_err());
        assert!(rq.parse_value("x").is_err());
        assert!(rq.parse_value("1/").is_err());
        assert_eq!(gf(3).parse_value("-1").unwrap(), gf(3).int(2));
        assert_eq!(Field::gf2().parse_value("3").unwrap(), Field::gf2().one());
    }
}
