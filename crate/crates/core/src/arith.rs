//! Exact field arithmetic: arbitrary-precision rationals and prime fields GF(p).
//!
//! A [`Scalar`] carries its field with it. Operators (`+`, `-`, `*`, unary `-`)
//! panic when the two operands live in different fields; the `checked_*`
//! methods return [`Error::FieldMismatch`] instead. Every compound type built
//! from scalars (matrices, parameters, algorithms) checks field consistency
//! when it is constructed, so the panicking operators are only reached on
//! values that already agree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Moduli below this bound are checked for primality; larger ones are trusted.
const PRIMALITY_CHECK_BOUND: u64 = 1 << 16;

/// Field descriptor shared by every scalar in one computation.
///
/// Serializes as `"rational"` or `{"prime": p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p). Rejects p < 2, and composite p below 2^16.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 {
            return Err(Error::InvalidField(format!("modulus {p} is not prime")));
        }
        if p < PRIMALITY_CHECK_BOUND && !is_prime(p) {
            return Err(Error::InvalidField(format!("modulus {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    /// Image of an integer in this field.
    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime(PrimeElem::new(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// Image of a rational in this field. Fails if the denominator vanishes mod p.
    pub fn from_rational(self, q: &Rational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                let den_inv = PrimeElem::new(den, p).inv()?;
                Ok(Scalar::Prime(PrimeElem::new(num, p) * den_inv))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `rational`, `q`, `prime:p`, `gf(p)` or a bare prime `p`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim().to_ascii_lowercase();
        if t == "rational" || t == "q" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("prime:")
            .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(&t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("unrecognized field `{s}`")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

/// Element of GF(p), `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeElem {
    value: u64,
    modulus: u64,
}

impl PrimeElem {
    /// Reduces `value` mod `modulus`. The modulus is not checked here; use [`Field::prime`].
    pub fn new(value: u64, modulus: u64) -> Self {
        PrimeElem {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = PrimeElem::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.modulus - 2))
    }
}

impl Add for PrimeElem {
    type Output = PrimeElem;
    fn add(self, rhs: Self) -> Self {
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        PrimeElem::new(s as u64, self.modulus)
    }
}

impl Sub for PrimeElem {
    type Output = PrimeElem;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for PrimeElem {
    type Output = PrimeElem;
    fn mul(self, rhs: Self) -> Self {
        let s = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        PrimeElem::new(s as u64, self.modulus)
    }
}

impl Neg for PrimeElem {
    type Output = PrimeElem;
    fn neg(self) -> Self {
        PrimeElem::new((self.modulus - self.value) % self.modulus, self.modulus)
    }
}

/// An exact field element: a rational or an element of GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Prime(PrimeElem),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime(e) => Field::Prime(e.modulus),
        }
    }

    /// Rational `num/den`, reduced. Fails on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(Rational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(e) => e.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime(e) => e.value == 1 % e.modulus,
        }
    }

    /// True for `-1` (which coincides with `1` in characteristic 2).
    pub fn is_minus_one(&self) -> bool {
        (-self).is_one()
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.same_field(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Prime(e) => e.inv().map(Scalar::Prime),
        }
    }

    /// Nearest `f64`, with a flag telling whether the conversion was exact.
    /// Only meaningful for rationals; prime-field elements have no real value.
    pub fn to_f64(&self) -> Option<(f64, bool)> {
        match self {
            Scalar::Rational(q) => {
                let x = q.to_f64()?;
                let exact = Rational::from_float(x).is_some_and(|back| &back == q);
                Some((x, exact))
            }
            Scalar::Prime(_) => None,
        }
    }
}

/// Parses the scalar text format `-?digits(/digits)?` into `field`.
///
/// The sign may only appear on the numerator.
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar> {
    let bad = || Error::Parse(format!("malformed scalar `{text}`"));
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num_txt, den_txt) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(num_txt) || !den_txt.is_none_or(all_digits) {
        return Err(bad());
    }
    let mut num: BigInt = num_txt.parse().map_err(|_| bad())?;
    if negative {
        num = -num;
    }
    let den: BigInt = match den_txt {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    field.from_rational(&Rational::new(num, den))
}

/// Formats a scalar in the text format accepted by [`parse_scalar`].
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime(e) => write!(f, "{}", e.value),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic: {} vs {}", a.field(), b.field())
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.$method(b)),
                    (Scalar::Prime(a), Scalar::Prime(b)) if a.modulus == b.modulus => {
                        Scalar::Prime(a.$method(*b))
                    }
                    _ => mismatch(self, rhs),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }

        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime(e) => Scalar::Prime(-*e),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Sign of a rational, `None` in a prime field.
    pub fn signum(&self) -> Option<i32> {
        match self {
            Scalar::Rational(q) if q.is_positive() => Some(1),
            Scalar::Rational(q) if q.is_negative() => Some(-1),
            Scalar::Rational(_) => Some(0),
            Scalar::Prime(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn inverse_in_gf7() {
        let three = Field::Prime(7).from_int(3);
        assert_eq!(three.inv().unwrap(), Field::Prime(7).from_int(5));
    }

    #[test]
    fn stored_reduced() {
        match q(2, 4) {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(q(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn parse_grammar() {
        assert!(matches!(parse_scalar("1/-2", Field::Rational), Err(Error::Parse(_))));
        assert_eq!(parse_scalar("-3/6", Field::Rational).unwrap(), q(-1, 2));
        assert_eq!(parse_scalar("5", Field::Prime(3)).unwrap(), Field::Prime(3).from_int(2));
        assert_eq!(parse_scalar("1/0", Field::Rational), Err(Error::DivisionByZero));
        assert_eq!(parse_scalar("1/3", Field::Prime(3)), Err(Error::DivisionByZero));
        for bad in ["", "-", "+1", "1/", "/2", "1.5", " 1", "1/2/3", "--1"] {
            assert!(parse_scalar(bad, Field::Rational).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn prime_field_fractions() {
        // 1/2 in GF(7) is 4
        assert_eq!(parse_scalar("1/2", Field::Prime(7)).unwrap(), Field::Prime(7).from_int(4));
        assert_eq!(parse_scalar("-1", Field::Prime(2)).unwrap(), Field::Prime(2).one());
    }

    #[test]
    fn division_errors() {
        let z = Field::Rational.zero();
        assert_eq!(q(1, 2).checked_div(&z), Err(Error::DivisionByZero));
        assert_eq!(Field::Prime(5).zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(q(1, 2).checked_div(&q(1, 4)).unwrap(), q(2, 1));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = q(1, 2);
        let b = Field::Prime(5).one();
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch(Field::Rational, Field::Prime(5))));
        assert!(Field::Prime(5).one().checked_mul(&Field::Prime(7).one()).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_operator_panics() {
        let _ = q(1, 2) + Field::Prime(5).one();
    }

    #[test]
    fn field_descriptor() {
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(9).is_err());
        assert_eq!(Field::prime(2).unwrap(), Field::Prime(2));
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("prime:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("prime:6".parse::<Field>().is_err());
        assert_eq!(serde_json::to_string(&Field::Prime(5)).unwrap(), r#"{"prime":5}"#);
        assert_eq!(serde_json::to_string(&Field::Rational).unwrap(), r#""rational""#);
    }

    #[test]
    fn char_two_sign_collapse() {
        let one = Field::Prime(2).one();
        assert!(one.is_minus_one());
        assert_eq!(-one.clone(), one);
    }

    #[test]
    fn float_conversion_flags_rounding() {
        assert_eq!(q(-3, 4).to_f64(), Some((-0.75, true)));
        let (x, exact) = q(1, 3).to_f64().unwrap();
        assert!(!exact);
        assert!((x - 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(Field::Prime(3).one().to_f64(), None);
    }
}
